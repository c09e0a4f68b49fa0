"""Polynomial partial DWPFs and the four properties that pin them down.

``zeta1`` is the N x N hybrid determinant and ``zeta2`` the n x n one, both
multiplied by the clearing factor ``prod_{i,j} (x_i - y_j + 1)`` so that
they become polynomials (the partition function with weights
``a = x - y + 1``, ``b = x - y``, ``c = 1``).  Properties A-D below determine
such a polynomial uniquely; checking them for both forms proves the forms
agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegenerateRapidities
from .exactnum import det, interpolate_degree, vandermonde

__all__ = [
    "PropertyReport",
    "Variant",
    "check_property_A",
    "check_property_B",
    "check_property_C",
    "check_property_D",
    "sample_abscissae",
    "zeta",
]


class Variant(enum.Enum):
    ZETA1 = "zeta1"
    ZETA2 = "zeta2"


@dataclass(frozen=True)
class PropertyReport:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def _distinct(values, what):
    if len(set(values)) != len(values):
        raise DegenerateRapidities(f"{what} must be pairwise distinct")


def _zeta1(xs, ys):
    n, N = len(xs), len(ys)
    _distinct(xs, "row rapidities")
    _distinct(ys, "column rapidities")
    # column j of the hybrid matrix scaled by prod_k (x_k - y_j)(x_k - y_j + 1):
    # every entry becomes a polynomial and the scaling cancels the prefactor
    full = [_prod((x - y) * (x - y + 1) for x in xs) for y in ys]
    rows = []
    for i in range(n):
        rows.append([_prod((xs[k] - y) * (xs[k] - y + 1) for k in range(n) if k != i)
                     for y in ys])
    for k in range(N - n - 1, -1, -1):
        rows.append([y ** k * p for y, p in zip(ys, full)])
    return det(rows) / (vandermonde(xs, 1) * vandermonde(ys, -1))


def _zeta2(xs, ys):
    n = len(xs)
    _distinct(xs, "row rapidities")
    rows = []
    for x in xs:
        up = _prod(x - y + 1 for y in ys)
        down = _prod(x - y for y in ys)
        rows.append([x ** j * up - (x + 1) ** j * down for j in range(n)])
    return det(rows) / vandermonde(xs, 1)


def zeta(variant, xs, ys):
    """Polynomial pDWPF from the N x N (``ZETA1``) or n x n (``ZETA2``) form."""
    variant = Variant(variant)
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    if not 1 <= len(xs) <= len(ys):
        raise ValueError("need 1 <= n <= N")
    return _zeta1(xs, ys) if variant is Variant.ZETA1 else _zeta2(xs, ys)


def sample_abscissae(count, avoid=()):
    """``0, 1, -1, 2, -2, ...`` skipping anything in ``avoid``."""
    avoid = {Fraction(v) for v in avoid}
    out = []
    k = 0
    while len(out) < count:
        for v in ((k,) if k == 0 else (k, -k)):
            if Fraction(v) not in avoid and len(out) < count:
                out.append(Fraction(v))
        k += 1
    return out


def check_property_A(variant, xs_fixed, ys):
    """Degree in the last row rapidity is at most ``2N - 1``.

    ``xs_fixed`` holds ``x_1 .. x_{n-1}``.  The report also records the
    observed degree against the sharper bounds ``2N - n - 1`` (zeta1) and
    ``N`` (zeta2).
    """
    variant = Variant(variant)
    xs_fixed = [Fraction(v) for v in xs_fixed]
    N = len(ys)
    n = len(xs_fixed) + 1
    points = [(t, zeta(variant, xs_fixed + [t], ys))
              for t in sample_abscissae(2 * N + 2, avoid=xs_fixed)]
    degree = interpolate_degree(points)
    sharp = 2 * N - n - 1 if variant is Variant.ZETA1 else N
    return PropertyReport(
        f"A/{variant.value}/n={n},N={N}",
        degree <= 2 * N - 1,
        {"degree": degree, "bound": 2 * N - 1, "sharp_bound": sharp,
         "within_sharp_bound": degree <= sharp},
    )


def check_property_B(variant, xs, ys, permutation):
    variant = Variant(variant)
    permuted = [ys[p] for p in permutation]
    if sorted(permutation) != list(range(len(ys))):
        raise ValueError("not a permutation of the column indices")
    a, b = zeta(variant, xs, ys), zeta(variant, xs, permuted)
    return PropertyReport(f"B/{Variant(variant).value}/n={len(xs)},N={len(ys)}", a == b,
                          {"permutation": list(permutation)})


def check_property_C(variant, xs, ys):
    """Both recursions at ``x_n = y_N`` and ``x_n = y_N - 1``."""
    variant = Variant(variant)
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    n, N = len(xs), len(ys)
    if n < 2:
        raise ValueError("recursion needs n >= 2")
    head, yN = xs[:n - 1], ys[-1]
    lower = zeta(variant, head, ys[:N - 1])
    at_y = zeta(variant, head + [yN], ys)
    want_y = _prod(yN - y + 1 for y in ys[:N - 1]) * _prod(x - yN + 1 for x in head) * lower
    at_ybar = zeta(variant, head + [yN - 1], ys)
    want_ybar = _prod(yN - y - 1 for y in ys[:N - 1]) * _prod(x - yN for x in head) * lower
    return PropertyReport(
        f"C/{variant.value}/n={n},N={N}",
        at_y == want_y and at_ybar == want_ybar,
        {"rec1": at_y == want_y, "rec2": at_ybar == want_ybar},
    )


def check_property_D(ys, variant=Variant.ZETA2):
    """The n = 1 function equals both the sum over the position of the
    single c+ vertex and the telescoped product difference."""
    variant = Variant(variant)
    ys = [Fraction(v) for v in ys]
    N = len(ys)
    ok = True
    for x in sample_abscissae(2 * N + 1):
        if variant is Variant.ZETA1 and len(set(ys)) != N:
            raise DegenerateRapidities("zeta1 needs distinct column rapidities")
        value = zeta(variant, [x], ys)
        l_sum = sum((_prod(x - y for y in ys[:l]) * _prod(x - y + 1 for y in ys[l + 1:])
                     for l in range(N)), Fraction(0))
        diff = _prod(x - y + 1 for y in ys) - _prod(x - y for y in ys)
        ok = ok and value == l_sum == diff
    return PropertyReport(f"D/{variant.value}/N={N}", ok)
