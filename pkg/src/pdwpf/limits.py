"""Infinite-rapidity limits checked as exact Laurent-coefficient equalities.

A rapidity sent to infinity is written ``t / eps`` and the formula is
evaluated over :class:`~pdwpf.exactnum.LaurentJet`; the limit is then a
single coefficient of the resulting series.  Each check returns a
:class:`LimitReport`.  When the series window is too short to certify a
coefficient the evaluation is repeated with a wider window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .determinants import (
    pdwpf_hybrid,
    pdwpf_kostov,
    pdwpf_trig_hybrid,
    pdwpf_trig_kostov,
    slavnov_scalar_product,
)
from .errors import WindowTooSmall
from .exactnum import LaurentJet
from .sixvertex import WeightKind, WeightScheme, sh

__all__ = [
    "LimitReport",
    "limit_check_many",
    "limit_check_one",
    "limit_check_sequential",
    "limit_check_slavnov",
    "limit_check_trig",
    "limit_check_trig_slavnov",
    "q_factorial",
]

MAX_WINDOW = 64


@dataclass(frozen=True)
class LimitReport:
    name: str
    expected: Fraction
    actual: Fraction

    @property
    def passed(self):
        return self.expected == self.actual


def _with_window(evaluate, window=8):
    while True:
        try:
            return evaluate(window)
        except WindowTooSmall:
            if window >= MAX_WINDOW:
                raise
            window *= 2


def _large(t, window):
    return LaurentJet.monomial(Fraction(t), -1, window)


def q_factorial(k, q):
    """``[k]_q! = prod_{j<=k} (1 - q^j)/(1 - q)``."""
    out = Fraction(1)
    for j in range(1, k + 1):
        out *= (1 - q ** j) / (1 - q)
    return out


def limit_check_one(xs, ys, t=1):
    """``x_N -> infinity`` in the DWPF: the eps^1 coefficient of ``Z_N`` with
    ``x_N = t/eps``, times ``t``, against the rank ``N - 1`` partial DWPF."""
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    if len(xs) != len(ys) - 1:
        raise ValueError("give N - 1 finite row rapidities")

    def evaluate(window):
        z = pdwpf_hybrid(xs + [_large(t, window)], ys)
        return z.coefficient(1) * t

    actual = _with_window(evaluate)
    return LimitReport(f"one-limit/N={len(ys)}", pdwpf_hybrid(xs, ys), actual)


def limit_check_many(xs, ys, ts):
    """Joint version of the iterated limit: ``x_k = t_k/eps`` for the top
    ``N - n`` rows.  ``prod x_k Z_N`` at eps^0 divided by ``(N - n)!``."""
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    ts = [Fraction(v) for v in ts]
    n, N = len(xs), len(ys)
    if n + len(ts) != N:
        raise ValueError("need N - n scale factors")

    def evaluate(window):
        z = pdwpf_hybrid(xs + [_large(t, window) for t in ts], ys)
        scale = Fraction(1)
        for t in ts:
            scale *= t
        return z.coefficient(N - n) * scale / factorial(N - n)

    actual = _with_window(evaluate)
    return LimitReport(f"many-limits/n={n},N={N}", pdwpf_hybrid(xs, ys), actual)


def limit_check_sequential(xs, ys, t=1):
    """Each single step of the iterated limit: sending the top rapidity of the
    rank-i function to infinity gives ``(N - i + 1)`` times the rank i-1
    function, for i = N .. n+1."""
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    N = len(ys)
    reports = []
    for i in range(len(xs), 1, -1):
        head = xs[:i - 1]

        def evaluate(window, head=head):
            z = pdwpf_hybrid(head + [_large(t, window)], ys)
            return z.coefficient(1) * t

        actual = _with_window(evaluate)
        expected = (N - i + 1) * pdwpf_hybrid(head, ys)
        reports.append(LimitReport(f"sequential/i={i},N={N}", expected, actual))
    return reports


def limit_check_trig(exs, eys, eg, ts):
    """Trigonometric iterated limit: ``X_k = t_k/eps`` for the top ``N - n``
    rows, eps^0 coefficient times ``e^{(N-n)gamma} / ((2[gamma])^{N-n} [N-n]_q!)``
    with ``q = e^{-2 gamma}``.  Each step contributes the large-x limit of
    c+, which is ``1 - q^k = (1 - q)[k]_q`` and ``1 - q = 2 e^{-gamma}[gamma]``."""
    exs = [Fraction(v) for v in exs]
    eys = [Fraction(v) for v in eys]
    g = Fraction(eg)
    ts = [Fraction(v) for v in ts]
    n, N = len(exs), len(eys)
    k = N - n

    def evaluate(window):
        z = pdwpf_trig_hybrid(exs + [_large(t, window) for t in ts], eys, g)
        return z.coefficient(0)

    lim = _with_window(evaluate)
    actual = lim * g ** k / ((2 * sh(g)) ** k * q_factorial(k, g ** -2))
    return LimitReport(f"trig-many-limits/n={n},N={N}", pdwpf_trig_hybrid(exs, eys, g), actual)


def limit_check_slavnov(xs, ys, ts):
    """``b_k = t_k/eps`` in the Slavnov determinant: ``prod b_k S`` at eps^0
    divided by ``n!`` against the n x n determinant."""
    xs = [Fraction(v) for v in xs]
    ys = [Fraction(v) for v in ys]
    ts = [Fraction(v) for v in ts]
    n = len(xs)
    if len(ts) != n:
        raise ValueError("need one scale factor per Bethe rapidity")

    def evaluate(window):
        bs = [_large(t, window) for t in ts]
        s = slavnov_scalar_product(xs, bs, ys, check=False)
        scale = Fraction(1)
        for t in ts:
            scale *= t
        return s.coefficient(n) * scale / factorial(n)

    actual = _with_window(evaluate)
    return LimitReport(f"s-many-limits/n={n},N={len(ys)}", pdwpf_kostov(xs, ys), actual)


def limit_check_trig_slavnov(exs, eys, eg, ts):
    """Trigonometric counterpart: ``e^{n gamma} / ((2[gamma])^n [n]_q!)`` times
    the eps^0 coefficient of S with ``B_k = t_k/eps``."""
    exs = [Fraction(v) for v in exs]
    eys = [Fraction(v) for v in eys]
    g = Fraction(eg)
    n = len(exs)
    scheme = WeightScheme(WeightKind.TRIGONOMETRIC, g)

    def evaluate(window):
        bs = [_large(t, window) for t in ts]
        return slavnov_scalar_product(exs, bs, eys, scheme, check=False).coefficient(0)

    lim = _with_window(evaluate)
    actual = lim * g ** n / ((2 * sh(g)) ** n * q_factorial(n, g ** -2))
    return LimitReport(f"trig-s-many-limits/n={n},N={len(eys)}",
                       pdwpf_trig_kostov(exs, eys, g), actual)
