"""Exact scalars, truncated jet rings and determinant kernels.

Scalars are :class:`fractions.Fraction`.  Two small commutative rings sit on
top of them:

* :class:`Jet2` -- multivariate Taylor polynomials truncated above total
  degree two, used to read off exact first and second derivatives at a point.
* :class:`LaurentJet` -- truncated Laurent series in one small parameter with
  explicit precision tracking, used for infinite-rapidity limits.

Matrices are plain lists of rows.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from .errors import DuplicateAbscissa, NoUnitPivot, WindowTooSmall

__all__ = [
    "Jet2",
    "LaurentJet",
    "as_scalar",
    "det",
    "det_cofactor",
    "det_exact",
    "det_ring",
    "format_scalar",
    "interpolate_degree",
    "is_exact",
    "parse_scalar",
    "vandermonde",
]

DEFAULT_WINDOW = 8
MAX_JET_VARS = 16
COFACTOR_MAX_ORDER = 8

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_scalar(text):
    """Parse ``"p/q"`` or ``"p"`` (base 10, optional minus on ``p`` only)."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"malformed rational literal {text!r}")
    num, den = match.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), den)


def format_scalar(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_scalar(value):
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, Rational):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def is_exact(value):
    return isinstance(value, Rational)


def _is_mp(value):
    return type(value).__module__.startswith("mpmath")


def harmonize(values):
    """Convert exact entries to mpmath numbers when any entry is an mpmath
    number; mixed Fraction/mpf division is not supported by either type."""
    values = list(values)
    if not any(_is_mp(v) for v in values):
        return values
    import mpmath

    return [mpmath.mpf(v.numerator) / v.denominator if is_exact(v) else v for v in values]


# ---------------------------------------------------------------------------
# Jet2


class Jet2:
    """Polynomial in ``nvars`` variables truncated above total degree 2.

    ``quad`` maps index pairs ``(i, j)`` with ``i <= j`` to the coefficient of
    the monomial ``y_i * y_j``.
    """

    __slots__ = ("nvars", "c0", "lin", "quad")

    def __init__(self, nvars, c0=0, lin=None, quad=None):
        if not 0 <= nvars <= MAX_JET_VARS:
            raise ValueError(f"Jet2 supports at most {MAX_JET_VARS} variables")
        self.nvars = nvars
        self.c0 = Fraction(c0)
        self.lin = tuple(Fraction(v) for v in lin) if lin is not None else (Fraction(0),) * nvars
        if len(self.lin) != nvars:
            raise ValueError("linear part has wrong length")
        self.quad = {k: Fraction(v) for k, v in (quad or {}).items() if v != 0}

    @classmethod
    def variable(cls, index, nvars, at=0):
        lin = [0] * nvars
        lin[index] = 1
        return cls(nvars, at, lin)

    @classmethod
    def constant(cls, value, nvars):
        return cls(nvars, value)

    def _coerce(self, other):
        if isinstance(other, Jet2):
            if other.nvars != self.nvars:
                raise ValueError("Jet2 operands have different variable counts")
            return other
        if isinstance(other, Rational):
            return Jet2(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        quad = dict(self.quad)
        for k, v in other.quad.items():
            quad[k] = quad.get(k, 0) + v
        return Jet2(self.nvars, self.c0 + other.c0,
                    [a + b for a, b in zip(self.lin, other.lin)], quad)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(self.nvars, -self.c0, [-a for a in self.lin],
                    {k: -v for k, v in self.quad.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a0, b0 = self.c0, other.c0
        lin = [a0 * b + b0 * a for a, b in zip(self.lin, other.lin)]
        quad = {}
        if a0:
            for k, v in other.quad.items():
                quad[k] = a0 * v
        if b0:
            for k, v in self.quad.items():
                quad[k] = quad.get(k, 0) + b0 * v
        alin = [(i, a) for i, a in enumerate(self.lin) if a]
        blin = [(j, b) for j, b in enumerate(other.lin) if b]
        for i, a in alin:
            for j, b in blin:
                key = (i, j) if i <= j else (j, i)
                quad[key] = quad.get(key, 0) + a * b
        return Jet2(self.nvars, a0 * b0, lin, quad)

    __rmul__ = __mul__

    def is_unit(self):
        return self.c0 != 0

    def inverse(self):
        if self.c0 == 0:
            raise ZeroDivisionError("Jet2 with zero constant term is not invertible")
        inv0 = 1 / self.c0
        # 1/(c + u) = (1/c) * (1 - u/c + (u/c)^2), u of order >= 1
        u = Jet2(self.nvars, 0, [a * inv0 for a in self.lin],
                 {k: v * inv0 for k, v in self.quad.items()})
        return (1 - u + u * u) * inv0

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Jet2(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c0 == other.c0 and self.lin == other.lin and self.quad == other.quad

    def __hash__(self):
        return hash((self.nvars, self.c0, self.lin, tuple(sorted(self.quad.items()))))

    def value(self):
        return self.c0

    def grad(self, i):
        return self.lin[i]

    def hess(self, i, j):
        """Second partial derivative at the expansion point."""
        if i == j:
            return 2 * self.quad.get((i, i), Fraction(0))
        key = (i, j) if i < j else (j, i)
        return self.quad.get(key, Fraction(0))

    def __repr__(self):
        return f"Jet2(nvars={self.nvars}, c0={self.c0}, lin={self.lin}, quad={self.quad})"


# ---------------------------------------------------------------------------
# LaurentJet


class LaurentJet:
    """Truncated Laurent series ``sum_k c_k eps^(lead + k) + O(eps^prec)``.

    ``prec is None`` marks an exact Laurent polynomial.  Coefficients between
    the stored ones and ``prec`` are zero.  At most ``window`` significant
    coefficients are retained; anything asked for beyond the known precision
    raises :class:`WindowTooSmall`.
    """

    __slots__ = ("lead", "coeffs", "prec", "window")

    def __init__(self, lead, coeffs, prec=None, window=DEFAULT_WINDOW):
        coeffs = [Fraction(c) for c in coeffs]
        if prec is not None:
            coeffs = coeffs[:max(0, prec - lead)]
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        lead += k
        coeffs = coeffs[k:]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            lead = prec if prec is not None else 0
        elif prec is None:
            if len(coeffs) > window:
                coeffs = coeffs[:window]
                prec = lead + window
        else:
            prec = min(prec, lead + window)
            coeffs = coeffs[:prec - lead]
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.prec = prec
        self.window = window

    @classmethod
    def constant(cls, value, window=DEFAULT_WINDOW):
        return cls(0, [value], None, window)

    @classmethod
    def monomial(cls, value, power, window=DEFAULT_WINDOW):
        return cls(power, [value], None, window)

    @classmethod
    def epsilon(cls, window=DEFAULT_WINDOW):
        return cls(1, [1], None, window)

    def _coerce(self, other):
        if isinstance(other, LaurentJet):
            return other
        if isinstance(other, Rational):
            return LaurentJet(0, [other], None, self.window)
        return NotImplemented

    @property
    def exact(self):
        return self.prec is None

    def is_zero(self):
        """True when no significant coefficient is known."""
        return not self.coeffs

    def is_unit(self):
        return bool(self.coeffs)

    def _top(self):
        return self.lead + len(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.exact and self.is_zero():
            return other
        if other.exact and other.is_zero():
            return self
        precs = [p for p in (self.prec, other.prec) if p is not None]
        prec = min(precs) if precs else None
        lo = min(self.lead, other.lead)
        hi = max(self._top(), other._top())
        if prec is not None:
            hi = min(hi, prec)
        out = [Fraction(0)] * max(0, hi - lo)
        for src in (self, other):
            for k, c in enumerate(src.coeffs):
                idx = src.lead + k - lo
                if 0 <= idx < len(out):
                    out[idx] += c
        return LaurentJet(lo, out, prec, max(self.window, other.window))

    __radd__ = __add__

    def __neg__(self):
        return LaurentJet(self.lead, [-c for c in self.coeffs], self.prec, self.window)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        window = max(self.window, other.window)
        if (self.exact and self.is_zero()) or (other.exact and other.is_zero()):
            return LaurentJet(0, [], None, window)
        bounds = []
        if other.prec is not None:
            bounds.append(self.lead + other.prec)
        if self.prec is not None:
            bounds.append(other.lead + self.prec)
        prec = min(bounds) if bounds else None
        lead = self.lead + other.lead
        length = len(self.coeffs) + len(other.coeffs) - 1
        if prec is not None:
            length = min(length, prec - lead)
        length = min(length, window)
        if length <= 0:
            return LaurentJet(lead, [], prec, window)
        out = [Fraction(0)] * length
        for i, a in enumerate(self.coeffs[:length]):
            for j, b in enumerate(other.coeffs[:length - i]):
                out[i + j] += a * b
        if prec is None and len(self.coeffs) + len(other.coeffs) - 1 > length:
            prec = lead + length
        return LaurentJet(lead, out, prec, window)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            if not self.exact:
                raise WindowTooSmall("divisor has no known nonzero coefficient; widen the window")
            raise ZeroDivisionError("division by an exactly zero LaurentJet")
        window = self.window
        if self.exact and len(self.coeffs) == 1:
            return LaurentJet(-self.lead, [1 / self.coeffs[0]], None, window)
        rel = window if self.prec is None else min(window, self.prec - self.lead)
        b = list(self.coeffs) + [Fraction(0)] * max(0, rel - len(self.coeffs))
        inv0 = 1 / b[0]
        u = [inv0]
        for k in range(1, rel):
            acc = sum((b[i] * u[k - i] for i in range(1, k + 1)), Fraction(0))
            u.append(-acc * inv0)
        return LaurentJet(-self.lead, u, -self.lead + rel, window)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentJet(0, [1], None, self.window)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def coefficient(self, power):
        if self.prec is not None and power >= self.prec:
            raise WindowTooSmall(
                f"coefficient of eps^{power} requested but series known only below eps^{self.prec}")
        idx = power - self.lead
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return Fraction(0)

    def valuation(self):
        if self.is_zero():
            return math.inf if self.exact else self.prec
        return self.lead

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.lead, self.coeffs, self.prec) == (other.lead, other.coeffs, other.prec)

    def __hash__(self):
        return hash((self.lead, self.coeffs, self.prec))

    def __repr__(self):
        tail = "" if self.prec is None else f" + O(eps^{self.prec})"
        terms = " + ".join(f"({c})eps^{self.lead + k}" for k, c in enumerate(self.coeffs))
        return f"LaurentJet[{terms or '0'}{tail}]"


# ---------------------------------------------------------------------------
# Determinants


def _square(m):
    rows = [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


def det_exact(m):
    """Exact determinant of a rational matrix by fraction-free elimination.

    Rows are scaled to integers first, so every intermediate of the Bareiss
    recurrence is an integer minor.
    """
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in rows:
        row = [Fraction(v) for v in row]
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        scale *= lcm
        a.append([int(v * lcm) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1]) / scale


def det_cofactor(m):
    """Laplace expansion along rows, memoised on the set of used columns."""
    rows = _square(m)
    n = len(rows)
    memo = {}

    def minor(r, mask):
        # determinant of rows r.. using the columns whose bits are clear in mask
        if r == n:
            return 1
        key = mask
        if key in memo:
            return memo[key]
        total = 0
        sign = 1
        for c in range(n):
            if mask >> c & 1:
                continue
            entry = rows[r][c]
            if not (is_exact(entry) and entry == 0):
                term = entry * minor(r + 1, mask | (1 << c))
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


def _pivot_score(v):
    """Larger is better; None means not usable as a pivot."""
    if isinstance(v, Jet2):
        return (0,) if v.is_unit() else None
    if isinstance(v, LaurentJet):
        return (-v.lead, len(v.coeffs)) if v.is_unit() else None
    if is_exact(v):
        return (0,) if v != 0 else None
    mag = abs(v)
    return (mag,) if mag != 0 else None


def det_ring(m):
    """Determinant over a commutative ring with unit-pivot elimination.

    Falls back to cofactor expansion when no unit pivot is available and the
    order is at most 8.
    """
    rows = _square(m)
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    result = 1
    sign = 1
    for k in range(n):
        best, best_row = None, None
        for r in range(k, n):
            score = _pivot_score(a[r][k])
            if score is not None and (best is None or score > best):
                best, best_row = score, r
        if best_row is None:
            if n <= COFACTOR_MAX_ORDER:
                return det_cofactor(rows)
            raise NoUnitPivot(f"no unit pivot in column {k} of an order-{n} matrix")
        if best_row != k:
            a[k], a[best_row] = a[best_row], a[k]
            sign = -sign
        pivot = a[k][k]
        inv = 1 / pivot
        result = result * pivot
        for i in range(k + 1, n):
            factor = a[i][k] * inv
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = row_i[j] - factor * row_k[j]
    return result if sign > 0 else -result


def det(m):
    """Exact determinant for rational matrices, ring determinant otherwise."""
    rows = _square(m)
    if all(is_exact(v) for row in rows for v in row):
        return det_exact(rows)
    return det_ring(rows)


def vandermonde(xs, sign=1):
    """``prod_{i<j} (x_j - x_i)`` for ``sign=+1``, ``prod_{i<j} (x_i - x_j)`` for ``-1``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    result = 1
    for i, j in combinations(range(len(xs)), 2):
        result = result * ((xs[j] - xs[i]) if sign > 0 else (xs[i] - xs[j]))
    if isinstance(result, int):
        return Fraction(result)
    return result


def interpolate_degree(points):
    """Degree of the polynomial interpolating ``points``; -1 for the zero polynomial."""
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < 2:
        raise ValueError("need at least two points")
    xs = [p[0] for p in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be pairwise distinct")
    table = [p[1] for p in pts]
    leading = [table[0]]
    for level in range(1, len(pts)):
        table = [(table[i + 1] - table[i]) / (xs[i + level] - xs[i])
                 for i in range(len(table) - 1)]
        leading.append(table[0])
    degree = -1
    for k, c in enumerate(leading):
        if c != 0:
            degree = k
    return degree
