"""One-loop (second-derivative) mapping around the homogeneous point y = 0.

``[f] = f(0) + (g^2/2) sum_i (d_i - d_{i+1})^2 f(0) + O(g^4)`` with cyclic
index ``N + 1 = 1``.  The direct route reads every second derivative from a
single :class:`~pdwpf.exactnum.Jet2` evaluation; the closed form is the
N x N coefficient determinant with its last two rows shifted by ``g^2 N``
times the next coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .errors import DegenerateRapidities
from .exactnum import Jet2, det, vandermonde
from .symfun import TauSpec, coeff_c, complete_h_table

__all__ = [
    "derivative_identity_check",
    "gv_map_direct",
    "gv_pdwpf_det",
    "h2_g2_action",
    "m2_cyclic",
    "zeta1_jet",
]


def m2_cyclic(ys):
    """``y_1 y_2 + y_2 y_3 + ... + y_N y_1``."""
    ys = list(ys)
    N = len(ys)
    return sum((ys[i] * ys[(i + 1) % N] for i in range(N)), Fraction(0))


def derivative_identity_check(ys):
    """Residual of ``sum (y_i - y_{i+1})^2 = 4 h_2 - 2 h_1^2 - 2 m_2``."""
    ys = [Fraction(v) for v in ys]
    N = len(ys)
    lhs = sum(((ys[i] - ys[(i + 1) % N]) ** 2 for i in range(N)), Fraction(0))
    h = complete_h_table(2, ys)
    return lhs - (4 * h[2] - 2 * h[1] ** 2 - 2 * m2_cyclic(ys))


def gv_map_direct(f, N, g2):
    """Apply the mapping to ``f``, a callable taking N ring values.

    Returns ``(value, (d0, d1))`` with ``value = d0 + g2 * d1``.
    """
    jet = f([Jet2.variable(i, N) for i in range(N)])
    if not isinstance(jet, Jet2):
        jet = Jet2(N, jet)
    d0 = jet.value()
    second = Fraction(0)
    for i in range(N):
        k = (i + 1) % N
        second += jet.hess(i, i) - 2 * jet.hess(i, k) + jet.hess(k, k)
    d1 = second / 2
    g2 = Fraction(g2)
    return d0 + g2 * d1, (d0, d1)


def zeta1_jet(xs, N):
    """zeta1 as a function of N (ring-valued) column rapidities, through its
    Casoratian form, which stays finite when the y coincide."""
    xs = [Fraction(v) for v in xs]
    spec = TauSpec.ik(xs, [0] * N)
    coeffs = spec.coefficients()
    vx = vandermonde(xs, 1)
    if vx == 0:
        raise DegenerateRapidities("row rapidities must be pairwise distinct")
    # the Casoratian determinant is (-1)^{C(N,2)} Delta{x} zeta1
    norm = (-1) ** comb(N, 2) / vx

    def f(ys):
        h = complete_h_table(spec.width, ys)
        rows = [[sum((coeffs[i][k] * h[k - j] for k in range(j, spec.width)), Fraction(0))
                 for j in range(N)] for i in range(N)]
        return det(rows) * norm

    return f


def h2_g2_action(exponents, N):
    """``(H_2, G_2)`` applied to ``h_1^{m_1} h_2^{m_2} ... h_L^{m_L}`` at y = 0.

    Only the two degree-2 monomials survive.  For N = 1 the cyclic
    ``m_2 = y_1^2`` doubles the diagonal term, so ``G_2 h_2 = 4`` there.
    """
    exps = list(exponents) + [0] * max(0, 2 - len(exponents))
    if any(m < 0 for m in exps):
        raise ValueError("exponents must be nonnegative")
    degree = sum((k + 1) * m for k, m in enumerate(exps))
    rest = any(exps[2:])
    if degree != 2 or rest:
        return Fraction(0), Fraction(0)
    if exps[0] == 2:
        return Fraction(N * (N + 1)), Fraction(2 * N * (N + 1))
    g2 = 4 if N == 1 else N * (N + 2)
    return Fraction(N * (N + 3), 2), Fraction(g2)


def gv_pdwpf_det(xs, N, g2):
    """Closed-form image of zeta1 under the mapping, modulo g^4.

    Returns ``(value, (d0, d1))``.  The g^4 part of the shifted determinant
    is dropped by reading the g^2 coefficient off the values at
    ``g^2 = 1`` and ``g^2 = -1``.  For N = 1 the cyclic operator vanishes
    identically and the value is the g^2 = 0 determinant.
    """
    xs = [Fraction(v) for v in xs]
    n = len(xs)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    vx = vandermonde(xs, 1)
    if vx == 0:
        raise DegenerateRapidities("row rapidities must be pairwise distinct")
    c = [[coeff_c(j, k, xs, N) for k in range(1, N + 3)] for j in range(1, N + 1)]
    norm = (-1) ** comb(N, 2) / vx

    def shifted(t):
        rows = []
        for k in range(N):
            row = [c[j][k] for j in range(N)]
            if N >= 2 and k == N - 2:
                row = [v + t * N * c[j][N] for j, v in enumerate(row)]
            if N >= 2 and k == N - 1:
                row = [v + t * N * c[j][N + 1] for j, v in enumerate(row)]
            rows.append(row)
        return det(rows) * norm

    d0 = shifted(0)
    d1 = (shifted(1) - shifted(-1)) / 2 if N >= 2 else Fraction(0)
    g2 = Fraction(g2)
    return d0 + g2 * d1, (d0, d1)
