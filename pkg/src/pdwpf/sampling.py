"""Seeded random rapidities that stay clear of every pole of the formulas."""

from __future__ import annotations

import random
from fractions import Fraction

__all__ = ["Sampler"]


class Sampler:
    """Deterministic source of generic rational inputs."""

    def __init__(self, seed):
        self.rng = random.Random(seed)

    def rational(self, span=60, max_den=7):
        return Fraction(self.rng.randint(-span, span), self.rng.randint(1, max_den))

    def positive(self, top=9):
        return Fraction(self.rng.randint(1, top), self.rng.randint(1, top))

    def distinct(self, count, draw, key=lambda v: v, forbidden=()):
        out = []
        seen = {key(v) for v in forbidden}
        while len(out) < count:
            v = draw()
            if key(v) in seen:
                continue
            seen.add(key(v))
            out.append(v)
        return out

    def rational_rapidities(self, n, N, bs=0):
        """Distinct ``xs``, ``ys`` (and ``bs``) with ``x - y`` and
        ``x - b`` never in {0, -1, 1}."""
        while True:
            xs = self.distinct(n, self.rational)
            ys = self.distinct(N, self.rational)
            extra = self.distinct(bs, self.rational) if bs else []
            diffs = {x - y for x in xs + extra for y in ys} | {x - b for x in xs for b in extra}
            if not diffs & {0, 1, -1}:
                return (xs, ys, extra) if bs else (xs, ys)

    def trig_rapidities(self, n, N):
        """Positive multiplicative ``X``, ``Y`` and ``e^gamma`` with all sinh
        denominators nonzero and distinct squares."""
        while True:
            g = self.positive(5)
            if g == 1:
                continue
            xs = self.distinct(n, self.positive)
            ys = self.distinct(N, self.positive)
            bad = any(X == Y or X * g == Y for X in xs for Y in ys)
            if not bad:
                return xs, ys, g

    def multiplicities(self, base, spread=1):
        return tuple(m + self.rng.randint(0, spread) for m in base)
