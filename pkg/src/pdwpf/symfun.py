"""Symmetric functions, Casoratian determinants and discrete KP checks.

Both polynomial pDWPFs are Casoratian determinants
``det( sum_k A_ik h_{k-j}{multiset} )``: the N x N form in the column
rapidities with ``A = c`` and the n x n form in the row rapidities with
``A_ik = d_ki``.  Changing the multiplicity of a variable in the multiset is
a discrete KP time step, and the bilinear equations are tested exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DegenerateMiwaVariables, DivisionByZeroVariable
from .exactnum import det

__all__ = [
    "MAX_EXTRA_MULTIPLICITY",
    "TauSource",
    "TauSpec",
    "casorati_check",
    "coeff_c",
    "coeff_d",
    "complete_h",
    "complete_h_table",
    "discrete_derivative",
    "elementary_e",
    "hirota_miwa_check",
    "kp_bilinear_check",
    "miwa_triples",
    "tau_value",
]

# a bilinear check needs the base copies plus one more of every variable;
# anything beyond that is limited to this many extra copies
MAX_EXTRA_MULTIPLICITY = 6


def complete_h_table(top, variables):
    """``[h_0, ..., h_top]`` of the multiset ``variables``.

    Built one variable at a time from ``h_i <- h_i + x h_{i-1}``, the
    coefficient recursion of ``prod 1/(1 - x k)``.
    """
    if top < 0:
        return []
    h = [Fraction(1)] + [Fraction(0)] * top
    for x in variables:
        for i in range(1, top + 1):
            h[i] = h[i] + x * h[i - 1]
    return h


def complete_h(i, variables):
    if i < 0:
        return Fraction(0)
    return complete_h_table(i, [Fraction(v) for v in variables])[i]


def elementary_e(k, variables):
    variables = [Fraction(v) for v in variables]
    if k < 0 or k > len(variables):
        return Fraction(0)
    e = [Fraction(1)] + [Fraction(0)] * k
    for x in variables:
        for i in range(k, 0, -1):
            e[i] += x * e[i - 1]
    return e[k]


def discrete_derivative(i, variables, m, f=complete_h):
    """``(f_i{x} - f_i{x without x_m}) / x_m``; for ``f = h`` this is ``h_{i-1}``."""
    variables = [Fraction(v) for v in variables]
    xm = variables[m]
    if xm == 0:
        raise DivisionByZeroVariable("discrete derivative with respect to a zero variable")
    rest = variables[:m] + variables[m + 1:]
    return (f(i, variables) - f(i, rest)) / xm


def _binom(a, b):
    """Binomial coefficient, zero outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    out = 1
    for t in range(b):
        out = out * (a - t) // (t + 1)
    return out


def coeff_c(i, k, xs, N):
    """Row coefficients of the N x N form (indices start at 1)."""
    xs = [Fraction(v) for v in xs]
    n = len(xs)
    if i <= n:
        pool = [-x for t, x in enumerate(xs) if t != i - 1] + \
               [-(x + 1) for t, x in enumerate(xs) if t != i - 1]
        return elementary_e(2 * n - k - 1, pool)
    pool = [-x for x in xs] + [-(x + 1) for x in xs]
    return elementary_e(2 * n - k + N - i + 1, pool)


def coeff_d(k, j, ys):
    """Column coefficients of the n x n form (indices start at 1)."""
    ys = [Fraction(v) for v in ys]
    N = len(ys)
    neg = [-y for y in ys]
    total = Fraction(0)
    for l in range(0, N + j - k + 1):
        weight = _binom(N - l, k - j) - _binom(j - 1, k - N + l - 1)
        if weight:
            total += weight * elementary_e(l, neg)
    return total


class TauSource(enum.Enum):
    TAU_IK = "tau-ik"
    TAU_S = "tau-s"


@dataclass(frozen=True)
class TauSpec:
    """A Casoratian tau-function.

    ``miwa`` are the Miwa variables whose multiplicities are evolved,
    ``params`` the other rapidity set and ``order`` the matrix size.
    """

    source: TauSource
    params: tuple
    miwa: tuple
    order: int

    @classmethod
    def ik(cls, xs, ys, extra=()):
        """N x N form: Miwa variables are the column rapidities."""
        return cls(TauSource.TAU_IK, tuple(Fraction(v) for v in xs),
                   tuple(Fraction(v) for v in list(ys) + list(extra)), len(ys))

    @classmethod
    def s(cls, xs, ys, extra=()):
        """n x n form: Miwa variables are the row rapidities.  ``extra``
        appends further Miwa variables (normally at multiplicity 0)."""
        return cls(TauSource.TAU_S, tuple(Fraction(v) for v in ys),
                   tuple(Fraction(v) for v in list(xs) + list(extra)), len(xs))

    @property
    def width(self):
        """Number of h-coefficients per row, ``N + n``."""
        return len(self.params) + self.order

    def coefficients(self):
        """``A[i][k]`` with ``omega_ij = sum_k A[i][k] h_{k-j}``, 0-based."""
        size, width = self.order, self.width
        if self.source is TauSource.TAU_IK:
            return [[coeff_c(i, k, self.params, size) for k in range(1, width + 1)]
                    for i in range(1, size + 1)]
        return [[coeff_d(k, i, self.params) for k in range(1, width + 1)]
                for i in range(1, size + 1)]

    def default_multiplicities(self):
        """One copy of each original variable, none of the appended ones."""
        return tuple(1 if t < self.order else 0 for t in range(len(self.miwa)))


def _multiset(spec, mult):
    if len(mult) != len(spec.miwa):
        raise ValueError("one multiplicity per Miwa variable")
    if any(m < 0 for m in mult):
        raise ValueError("multiplicities must be nonnegative")
    if sum(mult) > 2 * len(spec.miwa) + MAX_EXTRA_MULTIPLICITY:
        raise ValueError("total multiplicity exceeds the evaluation cap")
    out = []
    for x, m in zip(spec.miwa, mult):
        out.extend([x] * m)
    return out


def _omega(spec, mult, coeffs=None):
    coeffs = coeffs if coeffs is not None else spec.coefficients()
    h = complete_h_table(spec.width, _multiset(spec, mult))

    def hk(i):
        return h[i] if i >= 0 else 0

    size = spec.order
    return [[sum((coeffs[i][k] * hk(k - j) for k in range(spec.width)), Fraction(0))
             for j in range(size)] for i in range(size)]


def tau_value(spec, mult=None, coeffs=None):
    """Casoratian determinant at the given multiplicities (default: one
    copy of each original variable)."""
    mult = tuple(mult) if mult is not None else spec.default_multiplicities()
    return det(_omega(spec, mult, coeffs))


def casorati_check(spec, mult, m, pair=None):
    """``omega_{i,j+1} = Delta_m omega_ij`` for every entry, plus the
    two-variable identity obtained by doubling ``x_r`` and ``x_s``."""
    mult = list(mult)
    if spec.miwa[m] == 0:
        raise DivisionByZeroVariable("discrete derivative with respect to a zero variable")
    if mult[m] < 1:
        raise ValueError("the variable must be present to be removed")
    coeffs = spec.coefficients()
    full = _omega(spec, mult, coeffs)
    removed = list(mult)
    removed[m] -= 1
    less = _omega(spec, removed, coeffs)
    xm = spec.miwa[m]
    ok = True
    size = spec.order
    for i in range(size):
        for j in range(size - 1):
            ok = ok and full[i][j + 1] == (full[i][j] - less[i][j]) / xm
    if pair is not None:
        r, s = pair
        xr, xs_ = spec.miwa[r], spec.miwa[s]
        both = list(mult)
        both[r] += 1
        both[s] += 1
        only_r = list(mult)
        only_r[r] += 1
        only_s = list(mult)
        only_s[s] += 1
        wb = _omega(spec, both, coeffs)
        wr = _omega(spec, only_r, coeffs)
        ws = _omega(spec, only_s, coeffs)
        for i in range(size):
            for j in range(size):
                ok = ok and (xr - xs_) * wb[i][j] == xr * wr[i][j] - xs_ * ws[i][j]
    return ok


def _shift(mult, *indices):
    out = list(mult)
    for t in indices:
        out[t] += 1
    return tuple(out)


def hirota_miwa_check(spec, mult, i, j, k, tau=None):
    """Residual of the three-term Hirota-Miwa equation; exactly zero for a
    discrete KP tau-function.  ``tau`` overrides the tau-function (used for
    negative controls)."""
    x = spec.miwa
    trio = (x[i], x[j], x[k])
    if len({i, j, k}) != 3 or len(set(trio)) != 3 or 0 in trio:
        raise DegenerateMiwaVariables("need three distinct nonzero Miwa variables")
    coeffs = spec.coefficients()
    tau = tau or (lambda ms: tau_value(spec, ms, coeffs))
    xi, xj, xk = trio
    return (xi * (xj - xk) * tau(_shift(mult, i)) * tau(_shift(mult, j, k))
            + xj * (xk - xi) * tau(_shift(mult, j)) * tau(_shift(mult, i, k))
            + xk * (xi - xj) * tau(_shift(mult, k)) * tau(_shift(mult, i, j)))


def kp_bilinear_check(spec, mult, subset, tau=None, scramble=False):
    """Determinant with rows ``1, x, .., x^{s-2}, x^{s-2} tau_{+i} tau_{-i}``
    over the chosen Miwa variables; exactly zero for a tau-function.

    ``tau_{-i}`` adds one copy of every variable of the subset except ``x_i``;
    with three variables this is the Hirota-Miwa equation.
    ``scramble=True`` pairs each ``tau_{+i}`` with the ``tau_{-}`` of the next
    row instead (negative control).
    """
    subset = list(subset)
    s = len(subset)
    if s < 3:
        raise ValueError("the bilinear determinant needs at least three variables")
    values = [spec.miwa[t] for t in subset]
    if len(set(values)) != s or 0 in values:
        raise DegenerateMiwaVariables("need distinct nonzero Miwa variables")
    coeffs = spec.coefficients()
    tau = tau or (lambda ms: tau_value(spec, ms, coeffs))
    minus = [tau(_shift(mult, *[t for t in subset if t != i])) for i in subset]
    if scramble:
        minus = minus[1:] + minus[:1]
    rows = []
    for row, i in enumerate(subset):
        xi = spec.miwa[i]
        plus = tau(_shift(mult, i))
        rows.append([xi ** p for p in range(s - 1)] + [xi ** (s - 2) * plus * minus[row]])
    return det(rows)


def miwa_triples(spec):
    """All index triples of distinct nonzero Miwa variables."""
    good = [t for t, v in enumerate(spec.miwa) if v != 0]
    return [c for c in combinations(good, 3) if len({spec.miwa[t] for t in c}) == 3]
