"""Closed-form determinant and sum formulas for the (partial) DWPF.

Rational formulas take plain rapidities.  Trigonometric ones take the
multiplicative coordinates ``X = e^x``, ``Y = e^y`` and ``eg = e^gamma`` and
write ``[u - v]`` as ``sh(U/V)``.

Every formula is written against the ring interface only (``+ - * /``), so
the same code evaluates over Fractions, LaurentJets (limit checks), Jet2 and
mpmath complex numbers (numeric Bethe roots).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, factorial

from .errors import DegenerateRapidities, NotBetheRoots, PoleAtCandidate, SingularWeight
from .exactnum import det, harmonize, is_exact, vandermonde
from .sixvertex import WeightKind, sh

__all__ = [
    "bethe_check",
    "bethe_solve_numeric",
    "izergin_dwpf",
    "pdwpf_hybrid",
    "pdwpf_kostov",
    "pdwpf_partition_sum",
    "pdwpf_trig_hybrid",
    "pdwpf_trig_kostov",
    "slavnov_scalar_product",
    "trig_vandermonde",
]

BETHE_TOL = 1e-10


def _lift(v):
    return Fraction(v) if is_exact(v) else v


def _prod(values):
    out = None
    for v in values:
        out = v if out is None else out * v
    return Fraction(1) if out is None else out


def _is_zero(v):
    if is_exact(v):
        return v == 0
    is_zero = getattr(v, "is_zero", None)
    if callable(is_zero):
        # an inexact series with no known coefficient is unknown, not zero
        return is_zero() and getattr(v, "exact", True)
    return False


def _distinct(values, what):
    exact = [v for v in values if is_exact(v)]
    if len(set(exact)) != len(exact):
        raise DegenerateRapidities(f"{what} must be pairwise distinct")


def _nonzero(value, what):
    if _is_zero(value):
        raise SingularWeight(f"{what} vanishes")
    return value


def trig_vandermonde(zs, sign=1):
    """``prod_{i<j} [z_j - z_i]`` (sign +1) or ``prod_{i<j} [z_i - z_j]`` (sign -1)."""
    out = 1
    for i, j in combinations(range(len(zs)), 2):
        out = out * (sh(zs[j] / zs[i]) if sign > 0 else sh(zs[i] / zs[j]))
    return out


def _check_vandermonde(value, what):
    if _is_zero(value):
        raise DegenerateRapidities(f"{what} Vandermonde vanishes")
    return value


# ---------------------------------------------------------------------------
# Izergin and the hybrid N x N forms


def _rational_izergin_rows(xs, ys):
    rows = []
    for x in xs:
        row = []
        for y in ys:
            d0 = _nonzero(x - y, "x - y")
            d1 = _nonzero(x - y + 1, "x - y + 1")
            row.append(1 / (d0 * d1))
        rows.append(row)
    return rows


def _trig_izergin_rows(exs, eys, eg):
    rows = []
    for X in exs:
        row = []
        for Y in eys:
            d0 = _nonzero(sh(X / Y), "[x - y]")
            d1 = _nonzero(sh(X * eg / Y), "[x - y + gamma]")
            row.append(1 / (d0 * d1))
        rows.append(row)
    return rows


def izergin_dwpf(xs, ys, scheme=None):
    """Domain wall partition function on an N x N lattice.

    With a trigonometric scheme ``xs`` and ``ys`` are the multiplicative
    coordinates and ``scheme.eg`` is ``e^gamma``.
    """
    xs = [_lift(v) for v in xs]
    ys = [_lift(v) for v in ys]
    if len(xs) != len(ys):
        raise ValueError("DWPF needs as many row as column rapidities")
    if scheme is not None and scheme.kind is WeightKind.TRIGONOMETRIC:
        return pdwpf_trig_hybrid(xs, ys, scheme.eg)
    if scheme is not None and scheme.kind is WeightKind.POLYNOMIAL:
        raise ValueError("use the korepin module for polynomial weights")
    return pdwpf_hybrid(xs, ys)


def pdwpf_hybrid(xs, ys, h_rows=False):
    """pDWPF as an N x N determinant: n Izergin rows over N - n monomial rows.

    ``h_rows=True`` uses rows ``h_k(y_j, y_j - 1)`` instead of ``y_j^k`` and
    divides by ``(N - n)!``; both give the same number.
    """
    xs = [_lift(v) for v in xs]
    ys = [_lift(v) for v in ys]
    n, N = len(xs), len(ys)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    _distinct(xs, "row rapidities")
    _distinct(ys, "column rapidities")
    rows = _rational_izergin_rows(xs, ys)
    for k in range(N - n - 1, -1, -1):
        if h_rows:
            rows.append([_h_two(k, y, y - 1) for y in ys])
        else:
            rows.append([y ** k if k else _lift(1) for y in ys])
    pref = _prod(x - y for x in xs for y in ys)
    den = _check_vandermonde(vandermonde(xs, 1), "x") * _check_vandermonde(vandermonde(ys, -1), "y")
    value = pref * det(rows) / den
    if h_rows:
        value = value / factorial(N - n)
    return value


def _h_two(k, a, b):
    """Complete symmetric function of two variables."""
    return sum((a ** i * b ** (k - i) for i in range(k + 1)), 0 * a)


def pdwpf_trig_hybrid(exs, eys, eg):
    """Trigonometric pDWPF with the top boundary summed, as an N x N determinant."""
    exs = [_lift(v) for v in exs]
    eys = [_lift(v) for v in eys]
    g = _lift(eg)
    n, N = len(exs), len(eys)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    _distinct([v * v for v in exs if is_exact(v)], "e^{2x}")
    _distinct([v * v for v in eys if is_exact(v)], "e^{2y}")
    rows = _trig_izergin_rows(exs, eys, g)
    for k in range(N - n, 0, -1):
        rows.append([Y ** (2 * k) for Y in eys])
    ratio = _prod(exs) / _prod(eys)
    pref = sh(g) ** n * ratio ** (N - n + 1)
    pref = pref * _prod(sh(X / Y) for X in exs for Y in eys)
    den = (_check_vandermonde(trig_vandermonde(exs, 1), "x")
           * _check_vandermonde(trig_vandermonde(eys, -1), "y"))
    # the exponential rows carry a Vandermonde in e^{2y}, which is 2^{C(N-n,2)}
    # times the sinh-Vandermonde normalisation; remove that constant
    return pref * det(rows) / den * Fraction(1, 2 ** comb(N - n, 2))


# ---------------------------------------------------------------------------
# n x n forms


def pdwpf_kostov(xs, ys):
    """pDWPF as the n x n determinant with entries
    ``x^{j-1} - (x+1)^{j-1} prod_k (x - y_k)/(x - y_k + 1)``."""
    xs = [_lift(v) for v in xs]
    ys = [_lift(v) for v in ys]
    n, N = len(xs), len(ys)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    _distinct(xs, "row rapidities")
    rows = []
    for x in xs:
        ratio = _prod((x - y) / _nonzero(x - y + 1, "x - y + 1") for y in ys)
        rows.append([x ** j - (x + 1) ** j * ratio for j in range(n)])
    return det(rows) / _check_vandermonde(vandermonde(xs, 1), "x")


def pdwpf_partition_sum(xs, ys):
    """The same quantity as :func:`pdwpf_kostov`, expanded over splittings of
    the rows into two subsets."""
    xs = [_lift(v) for v in xs]
    ys = [_lift(v) for v in ys]
    n, N = len(xs), len(ys)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    _distinct(xs, "row rapidities")
    ratios = [_prod((x - y) / _nonzero(x + 1 - y, "x - y + 1") for y in ys) for x in xs]
    total = Fraction(0)
    for size in range(n + 1):
        for beta in combinations(range(n), size):
            alpha = [a for a in range(n) if a not in beta]
            term = _prod(ratios[b] for b in beta)
            for a in alpha:
                for b in beta:
                    term = term * (xs[a] - xs[b] - 1) / (xs[a] - xs[b])
            total = total - term if size % 2 else total + term
    return total


def pdwpf_trig_kostov(exs, eys, eg):
    """Trigonometric pDWPF with reversed horizontal boundary, as an n x n determinant."""
    exs = [_lift(v) for v in exs]
    eys = [_lift(v) for v in eys]
    g = _lift(eg)
    n, N = len(exs), len(eys)
    if not 1 <= n <= N:
        raise ValueError("need 1 <= n <= N")
    _distinct([v * v for v in exs if is_exact(v)], "e^{2x}")
    rows = []
    for X in exs:
        ratio = _prod(sh(X / Y) / _nonzero(sh(X * g / Y), "[x - y + gamma]") for Y in eys)
        rows.append([X ** (2 * j) * (1 - g ** N * ratio * g ** (-2 * (n - 1 - j)))
                     for j in range(n)])
    pref = _prod(exs) ** (-(n - 1)) if n > 1 else 1
    # same e^{2x} versus sinh Vandermonde constant as in the hybrid form
    pref = pref * Fraction(1, 2 ** comb(n, 2))
    return pref * det(rows) / _check_vandermonde(trig_vandermonde(exs, 1), "x")


# ---------------------------------------------------------------------------
# Bethe equations and the Slavnov determinant


def _bethe_sides(b, i, bs, ys, scheme):
    kind = scheme.kind
    if kind is WeightKind.TRIGONOMETRIC:
        g = scheme.eg
        lhs_num = _prod(sh(b * g / y) for y in ys)
        lhs_den = _prod(sh(b / y) for y in ys)
        rhs_num = g ** len(ys) * _prod(sh(b * g / c) for k, c in enumerate(bs) if k != i)
        rhs_den = _prod(sh(b / (c * g)) for k, c in enumerate(bs) if k != i)
    else:
        lhs_num = _prod(b - y + 1 for y in ys)
        lhs_den = _prod(b - y for y in ys)
        rhs_num = _prod(b - c + 1 for k, c in enumerate(bs) if k != i)
        rhs_den = _prod(b - c - 1 for k, c in enumerate(bs) if k != i)
    return lhs_num, lhs_den, rhs_num, rhs_den


def bethe_check(bs, ys, scheme, tol=None):
    """Residuals LHS - RHS of the Bethe equations at the candidates ``bs``.

    With ``tol`` given, raises :class:`NotBetheRoots` when a residual exceeds
    it; ``tol=0`` demands exact equality.
    """
    bs = [_lift(v) for v in bs]
    ys = [_lift(v) for v in ys]
    residuals = []
    for i, b in enumerate(bs):
        ln, ld, rn, rd = _bethe_sides(b, i, bs, ys, scheme)
        if _is_zero(ld) or _is_zero(rd) or (not is_exact(ld) and abs(ld) == 0) or (
                not is_exact(rd) and abs(rd) == 0):
            raise PoleAtCandidate(f"Bethe equation {i + 1} has a pole at the candidate")
        residuals.append(ln / ld - rn / rd)
    if tol is not None:
        for r in residuals:
            bad = (r != 0) if (tol == 0 and is_exact(r)) else abs(r) > tol
            if bad:
                raise NotBetheRoots(f"Bethe residual {r} exceeds tolerance")
    return residuals


def slavnov_scalar_product(xs, bs, ys, scheme=None, check=True, tol=BETHE_TOL):
    """Scalar product from the determinant formula that holds on Bethe roots.

    ``check=False`` skips the Bethe test (used by limit checks, where the
    ``b`` are formal).
    """
    trig = scheme is not None and scheme.kind is WeightKind.TRIGONOMETRIC
    n, N = len(xs), len(ys)
    g = scheme.eg if trig else 1
    *values, g = harmonize([_lift(v) for v in list(xs) + list(bs) + list(ys)] + [g])
    xs, bs, ys = values[:n], values[n:n + len(bs)], values[n + len(bs):]
    if len(bs) != n or not 1 <= n <= N:
        raise ValueError("need n row rapidities, n Bethe roots and n <= N")
    if check:
        from .sixvertex import RATIONAL
        exact = all(is_exact(v) for v in bs + ys)
        bethe_check(bs, ys, scheme or RATIONAL, tol=0 if exact else tol)
    _distinct(xs, "row rapidities")
    _distinct(bs, "Bethe rapidities")
    rows = []
    if trig:
        for X in xs:
            ratio = _prod(sh(X / Y) / _nonzero(sh(X * g / Y), "[x - y + gamma]") for Y in ys)
            row = []
            for j, B in enumerate(bs):
                others = [c for k, c in enumerate(bs) if k != j]
                top = (g ** (N - n) * _prod(sh(c / (X * g)) for c in others) * ratio
                       - g ** (-n) * _prod(sh(c * g / X) for c in others))
                row.append(top / _nonzero(sh(X / B), "[x - b]"))
            rows.append(row)
        pref = sh(g) ** n * _prod(bs) / _prod(xs)
        den = trig_vandermonde(xs, 1) * trig_vandermonde(bs, -1)
    else:
        for x in xs:
            ratio = _prod((x - y) / _nonzero(x - y + 1, "x - y + 1") for y in ys)
            row = []
            for j, b in enumerate(bs):
                others = [c for k, c in enumerate(bs) if k != j]
                top = (_prod(c - x - 1 for c in others) * ratio
                       - _prod(c - x + 1 for c in others))
                row.append(top / _nonzero(x - b, "x - b"))
            rows.append(row)
        pref = 1
        den = vandermonde(xs, 1) * vandermonde(bs, -1)
    _check_vandermonde(den, "x or b")
    return pref * det(rows) / den


# ---------------------------------------------------------------------------
# Numeric Bethe roots

BETHE_PREC = 256
SOLVE_TOL = 1e-12


def _bethe_system(bs, ys, scheme):
    """Cleared form ``LHS_num * RHS_den - RHS_num * LHS_den``; unlike the ratio
    form it has no spurious zero at infinity."""
    out = []
    for i, b in enumerate(bs):
        ln, ld, rn, rd = _bethe_sides(b, i, bs, ys, scheme)
        out.append(ln * rd - rn * ld)
    return out


def _newton(bs, ys, scheme, mp, max_iter=200):
    n = len(bs)
    step = mp.mpf(2) ** (-BETHE_PREC // 2)
    for _ in range(max_iter):
        try:
            f = _bethe_system(bs, ys, scheme)
        except ZeroDivisionError:
            return None
        norm = max(abs(v) for v in f)
        if norm < mp.mpf(10) ** -60:
            return bs
        jac = mp.matrix(n, n)
        for k in range(n):
            shifted = list(bs)
            shifted[k] = bs[k] + step
            try:
                fk = _bethe_system(shifted, ys, scheme)
            except ZeroDivisionError:
                return None
            for i in range(n):
                jac[i, k] = (fk[i] - f[i]) / step
        try:
            delta = mp.lu_solve(jac, mp.matrix(f))
        except ZeroDivisionError:
            return None
        damping = mp.mpf(1)
        while damping > mp.mpf(2) ** -20:
            trial = [bs[k] - damping * delta[k] for k in range(n)]
            try:
                tf = _bethe_system(trial, ys, scheme)
            except ZeroDivisionError:
                tf = None
            if tf is not None and max(abs(v) for v in tf) < norm:
                bs = trial
                break
            damping /= 2
        else:
            return None
    return None


def _acceptable(bs, ys, scheme):
    n = len(bs)
    # in multiplicative coordinates B and -B are the same additive rapidity
    keys = [b * b for b in bs] if scheme.kind is WeightKind.TRIGONOMETRIC else bs
    for i in range(n):
        for k in range(i + 1, n):
            if abs(keys[i] - keys[k]) < 1e-8:
                return False
    try:
        residuals = bethe_check(bs, ys, scheme)
    except PoleAtCandidate:
        return False
    if max(abs(r) for r in residuals) >= SOLVE_TOL:
        return False
    if scheme.kind is WeightKind.TRIGONOMETRIC:
        near = [abs(sh(b / y)) for b in bs for y in ys] + [abs(sh(b * scheme.eg / y)) for b in bs for y in ys]
    else:
        near = [abs(b - y) for b in bs for y in ys] + [abs(b - y + 1) for b in bs for y in ys]
    return min(near) > 1e-8


def bethe_solve_numeric(n, ys, scheme=None, seed=0, restarts=200):
    """Distinct numeric Bethe roots (mpmath complex numbers) with residual
    below ``1e-12``, found by damped Newton from seeded random starts."""
    import random

    import mpmath

    from .errors import NoConvergence
    from .sixvertex import RATIONAL

    scheme = scheme or RATIONAL
    if not 1 <= n <= len(ys):
        raise ValueError("need 1 <= n <= N")
    rng = random.Random(seed)
    with mpmath.workprec(BETHE_PREC):
        ys_mp = [mpmath.mpf(Fraction(y).numerator) / Fraction(y).denominator for y in ys]
        if scheme.kind is WeightKind.TRIGONOMETRIC:
            g = Fraction(scheme.eg)
            from .sixvertex import WeightScheme
            scheme_mp = WeightScheme(WeightKind.TRIGONOMETRIC, mpmath.mpf(g.numerator) / g.denominator)
        else:
            scheme_mp = scheme
        spread = 1 + max((abs(float(y)) for y in ys), default=0)
        for _ in range(restarts):
            if scheme.kind is WeightKind.TRIGONOMETRIC:
                start = [mpmath.exp(mpmath.mpc(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)))
                         for _ in range(n)]
            else:
                start = [mpmath.mpc(rng.uniform(-spread, spread), rng.uniform(-spread, spread))
                         for _ in range(n)]
            sol = _newton(start, ys_mp, scheme_mp, mpmath)
            if sol is not None and _acceptable(sol, ys_mp, scheme_mp):
                return sol
    raise NoConvergence(f"no Bethe solution for n={n} after {restarts} starts")
