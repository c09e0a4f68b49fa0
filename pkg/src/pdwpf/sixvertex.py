"""Six-vertex weights, boundary families and the brute-force lattice sum.

Edge encoding used by the transfer sweep: a vertical edge carries 1 when its
arrow points down, a horizontal edge carries 1 when its arrow points left.
With (bottom, left, top, right) read around a vertex the six admissible
vertices are::

    a+ (0,0,0,0)   a- (1,1,1,1)
    b+ (0,1,0,1)   b- (1,0,1,0)
    c+ (1,0,0,1)   c- (0,1,1,0)

and every one of them satisfies ``bottom + left == top + right``.  Rows are
numbered from the bottom, columns from the left.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional, Sequence

from .errors import SingularWeight
from .exactnum import harmonize, is_exact

__all__ = [
    "BoundaryFamily",
    "BoundarySpec",
    "LatticeSpec",
    "RapidityConfig",
    "VERTEX_TYPES",
    "WeightKind",
    "WeightScheme",
    "binomial_split_factor",
    "count_configurations",
    "oracle_partition_function",
    "partition_function",
    "sh",
    "vertex_weight",
]

VERTEX_TYPES = ("a+", "a-", "b+", "b-", "c+", "c-")

_VERTEX_OF = {
    (0, 0, 0, 0): "a+",
    (1, 1, 1, 1): "a-",
    (0, 1, 0, 1): "b+",
    (1, 0, 1, 0): "b-",
    (1, 0, 0, 1): "c+",
    (0, 1, 1, 0): "c-",
}


class WeightKind(enum.Enum):
    RATIONAL = "rational"
    POLYNOMIAL = "polynomial"
    TRIGONOMETRIC = "trigonometric"


@dataclass(frozen=True)
class WeightScheme:
    """Weight family.  Trigonometric weights take multiplicative inputs
    ``X = e^x``, ``Y = e^y`` and ``eg = e^gamma``."""

    kind: WeightKind
    eg: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind is WeightKind.TRIGONOMETRIC:
            if self.eg is None or self.eg == 0:
                raise ValueError("trigonometric scheme needs a nonzero e^gamma")
            if is_exact(self.eg) and self.eg * self.eg == 1:
                raise ValueError("e^gamma = +-1 makes [gamma] vanish")

    @classmethod
    def rational(cls):
        return cls(WeightKind.RATIONAL)

    @classmethod
    def polynomial(cls):
        return cls(WeightKind.POLYNOMIAL)

    @classmethod
    def trigonometric(cls, eg):
        return cls(WeightKind.TRIGONOMETRIC, Fraction(eg) if is_exact(eg) else eg)


RATIONAL = WeightScheme.rational()
POLYNOMIAL = WeightScheme.polynomial()


def sh(z):
    """``sinh(u)`` written in the multiplicative coordinate ``z = e^u``."""
    return (z - 1 / z) / 2


def _check_nonzero(value, what):
    if is_exact(value) and value == 0:
        raise SingularWeight(f"{what} vanishes")
    return value


def _row_weights(x, y, scheme):
    """All six weights at one vertex, as a dict keyed by vertex type."""
    kind = scheme.kind
    if kind is WeightKind.RATIONAL:
        den = _check_nonzero(x - y + 1, "x - y + 1")
        b = (x - y) / den
        c = 1 / den
        return {"a+": 1, "a-": 1, "b+": b, "b-": b, "c+": c, "c-": c}
    if kind is WeightKind.POLYNOMIAL:
        a = x - y + 1
        b = x - y
        return {"a+": a, "a-": a, "b+": b, "b-": b, "c+": 1, "c-": 1}
    g = scheme.eg
    z = x / y
    den = _check_nonzero(sh(z * g), "[x - y + gamma]")
    ratio = sh(z) / den
    cg = sh(g) / den
    return {"a+": 1, "a-": 1, "b+": g * ratio, "b-": ratio / g,
            "c+": z * cg, "c-": cg / z}


def vertex_weight(vtype, x, y, scheme):
    if vtype not in VERTEX_TYPES:
        raise ValueError(f"unknown vertex type {vtype!r}")
    return _row_weights(_lift(x), _lift(y), scheme)[vtype]


class BoundaryFamily(enum.Enum):
    DWBC = "dwbc"
    PDW_TOPSUM = "pdw-topsum"
    PDW_SPLIT = "pdw-split"
    PDW_Z2 = "pdw-z2"
    SCALAR_PRODUCT = "scalar-product"


@dataclass(frozen=True)
class BoundarySpec:
    family: BoundaryFamily
    n: int
    N: int
    m: Optional[int] = None

    def __post_init__(self):
        fam, n, N = self.family, self.n, self.N
        if N < 1:
            raise ValueError("need at least one column")
        if fam is BoundaryFamily.DWBC and n != N:
            raise ValueError("DWBC requires n == N")
        if not 1 <= n <= N:
            raise ValueError("need 1 <= n <= N")
        if fam is BoundaryFamily.PDW_SPLIT:
            if self.m is None or not n <= self.m <= N:
                raise ValueError("PDW_SPLIT requires n <= m <= N")

    @property
    def rows(self):
        return 2 * self.n if self.family is BoundaryFamily.SCALAR_PRODUCT else self.n


@dataclass(frozen=True)
class RapidityConfig:
    xs: tuple
    ys: tuple
    bs: tuple = ()

    def __init__(self, xs, ys, bs=()):
        object.__setattr__(self, "xs", tuple(xs))
        object.__setattr__(self, "ys", tuple(ys))
        object.__setattr__(self, "bs", tuple(bs))

    @property
    def generic(self):
        return len(set(self.xs)) == len(self.xs) and len(set(self.ys)) == len(self.ys)


@dataclass(frozen=True)
class LatticeSpec:
    boundary: BoundarySpec
    weights: WeightScheme
    rapidities: RapidityConfig = field(default_factory=lambda: RapidityConfig((), ()))

    def __post_init__(self):
        b, r = self.boundary, self.rapidities
        if len(r.ys) != b.N:
            raise ValueError(f"expected {b.N} column rapidities, got {len(r.ys)}")
        if len(r.xs) != b.n:
            raise ValueError(f"expected {b.n} row rapidities, got {len(r.xs)}")
        if b.family is BoundaryFamily.SCALAR_PRODUCT and len(r.bs) != b.n:
            raise ValueError(f"expected {b.n} Bethe rapidities, got {len(r.bs)}")
        if self.weights.kind is WeightKind.TRIGONOMETRIC:
            for v in r.xs + r.ys + r.bs:
                if is_exact(v) and v == 0:
                    raise ValueError("multiplicative rapidities must be nonzero")


def _lift(v):
    return Fraction(v) if is_exact(v) else v


def _popcount(v):
    return bin(v).count("1")


def _row_transfer(dist, weights, N, h_left, h_right):
    """Propagate a distribution over vertical-edge masks through one row."""
    out = {}
    for mask, w_in in dist.items():
        partial = {(0, h_left): w_in}
        for j in range(N):
            v_in = mask >> j & 1
            wj = weights[j]
            nxt = {}
            for (top, h), w in partial.items():
                for v_out in (0, 1):
                    h_out = v_in + h - v_out
                    if h_out not in (0, 1):
                        continue
                    vt = _VERTEX_OF[(v_in, h, v_out, h_out)]
                    key = (top | (v_out << j), h_out)
                    term = w * wj[vt]
                    nxt[key] = nxt[key] + term if key in nxt else term
            partial = nxt
        for (top, h), w in partial.items():
            if h == h_right:
                out[top] = out[top] + w if top in out else w
    return out


def _sweep(spec, weight_rows):
    b = spec.boundary
    N, n, fam = b.N, b.n, b.family
    full = (1 << N) - 1
    F = BoundaryFamily
    if fam in (F.DWBC, F.PDW_TOPSUM):
        dist = {full: 1}
    elif fam in (F.PDW_Z2, F.SCALAR_PRODUCT):
        dist = {0: 1}
    else:
        dist = {mask: 1 for mask in range(1 << N) if _popcount(mask) == b.m}
    for r in range(b.rows):
        if fam is F.PDW_Z2 or (fam is F.SCALAR_PRODUCT and r < n):
            h_left, h_right = 1, 0
        else:
            h_left, h_right = 0, 1
        dist = _row_transfer(dist, weight_rows[r], N, h_left, h_right)
    if fam in (F.DWBC, F.SCALAR_PRODUCT):
        total = dist.get(0, 0)
    elif fam is F.PDW_SPLIT:
        total = sum((w for mask, w in dist.items() if _popcount(mask) == b.m - n), 0)
    else:
        total = sum(dist.values(), 0)
    if isinstance(total, int):
        total = Fraction(total)
    return total


def oracle_partition_function(spec):
    """Sum over all arrow configurations of the product of vertex weights."""
    r = spec.rapidities
    row_rapidities = list(r.xs)
    if spec.boundary.family is BoundaryFamily.SCALAR_PRODUCT:
        row_rapidities += list(r.bs)
    scheme = spec.weights
    eg = scheme.eg if scheme.kind is WeightKind.TRIGONOMETRIC else 1
    values = harmonize([_lift(v) for v in row_rapidities + list(r.ys)] + [eg])
    xs, ys, eg = values[:len(row_rapidities)], values[len(row_rapidities):-1], values[-1]
    if scheme.kind is WeightKind.TRIGONOMETRIC:
        scheme = WeightScheme(WeightKind.TRIGONOMETRIC, eg)
    weight_rows = [[_row_weights(x, y, scheme) for y in ys] for x in xs]
    return _sweep(spec, weight_rows)


def count_configurations(boundary):
    """Number of admissible configurations (all weights set to one)."""
    unit = dict.fromkeys(VERTEX_TYPES, 1)
    weight_rows = [[unit] * boundary.N for _ in range(boundary.rows)]
    spec = LatticeSpec(boundary, POLYNOMIAL,
                       RapidityConfig([0] * boundary.n, [0] * boundary.N, [0] * boundary.n
                                      if boundary.family is BoundaryFamily.SCALAR_PRODUCT else ()))
    return int(_sweep(spec, weight_rows))


def partition_function(family, xs, ys, scheme=RATIONAL, bs=(), m=None):
    """Convenience wrapper building the :class:`LatticeSpec` on the fly."""
    if isinstance(family, str):
        family = BoundaryFamily(family)
    boundary = BoundarySpec(family, len(xs), len(ys), m)
    return oracle_partition_function(LatticeSpec(boundary, scheme, RapidityConfig(xs, ys, bs)))


def binomial_split_factor(n, m, N):
    return comb(N - n, N - m)
