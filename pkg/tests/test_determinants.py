from fractions import Fraction

import mpmath
import pytest

from pdwpf.determinants import (
    bethe_check,
    bethe_solve_numeric,
    izergin_dwpf,
    pdwpf_hybrid,
    pdwpf_kostov,
    pdwpf_partition_sum,
    pdwpf_trig_hybrid,
    pdwpf_trig_kostov,
    slavnov_scalar_product,
)
from pdwpf.errors import DegenerateRapidities, NoConvergence, NotBetheRoots, PoleAtCandidate
from pdwpf.sixvertex import RATIONAL, WeightScheme, partition_function


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def test_izergin_single_vertex():
    assert izergin_dwpf([2], [0]) == Fraction(1, 3)


def test_izergin_against_lattice():
    assert izergin_dwpf([0, 2], [5, 7]) == partition_function("dwbc", [0, 2], [5, 7])
    scheme = WeightScheme.trigonometric(2)
    assert izergin_dwpf([2, 3], [5, 7], scheme) == partition_function("dwbc", [2, 3], [5, 7], scheme)


def test_izergin_degenerate():
    with pytest.raises(DegenerateRapidities):
        izergin_dwpf([1, 1], [0, 3])


def test_n1_initial_condition():
    x, ys = Fraction(3), [Fraction(0), Fraction(1, 2)]
    clearing = _prod(x - y + 1 for y in ys)
    closed = (clearing - _prod(x - y for y in ys)) / clearing
    assert pdwpf_hybrid([x], ys) == closed
    assert pdwpf_kostov([x], ys) == closed
    assert pdwpf_kostov([2], [0]) == Fraction(1, 3)


@pytest.mark.parametrize("n,N", [(1, 1), (1, 3), (2, 3), (2, 4), (3, 3), (3, 5)])
def test_rational_forms_agree_with_lattice(sampler, n, N):
    xs, ys = sampler.rational_rapidities(n, N)
    oracle = partition_function("pdw-topsum", xs, ys)
    assert pdwpf_hybrid(xs, ys) == oracle
    assert pdwpf_hybrid(xs, ys, h_rows=True) == oracle
    assert pdwpf_kostov(xs, ys) == oracle
    assert pdwpf_partition_sum(xs, ys) == oracle


def test_full_rank_hybrid_is_izergin(sampler):
    xs, ys = sampler.rational_rapidities(3, 3)
    assert pdwpf_hybrid(xs, ys) == izergin_dwpf(xs, ys)


@pytest.mark.parametrize("n,N", [(1, 1), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
def test_trig_forms_against_lattice(sampler, n, N):
    xs, ys, g = sampler.trig_rapidities(n, N)
    scheme = WeightScheme.trigonometric(g)
    assert pdwpf_trig_hybrid(xs, ys, g) == partition_function("pdw-topsum", xs, ys, scheme)
    assert pdwpf_trig_kostov(xs, ys, g) == partition_function("pdw-z2", xs, ys, scheme)


def test_trig_hybrid_examples():
    scheme = WeightScheme.trigonometric(2)
    assert pdwpf_trig_hybrid([3], [2, 5], 2) == partition_function("pdw-topsum", [3], [2, 5], scheme)
    assert pdwpf_trig_hybrid([3, 2], [5, 7], 2) == izergin_dwpf([3, 2], [5, 7], scheme)


def test_bethe_check_exact():
    assert bethe_check([Fraction(-1, 2)], [0, 0], RATIONAL) == [0]
    b = Fraction(7, 3)
    assert bethe_check([b], [0], RATIONAL) == [1 / b]
    with pytest.raises(PoleAtCandidate):
        bethe_check([0], [0, 1], RATIONAL)


def test_slavnov_exact_roots():
    xs, bs, ys = [Fraction(3)], [Fraction(-1, 2)], [0, 0]
    want = partition_function("scalar-product", xs, ys, bs=bs)
    assert slavnov_scalar_product(xs, bs, ys, RATIONAL, tol=0) == want
    scheme = WeightScheme.trigonometric(7)
    xs, bs, ys = [Fraction(3)], [Fraction(5, 7)], [1, 1]
    want = partition_function("scalar-product", xs, ys, scheme, bs=bs)
    assert slavnov_scalar_product(xs, bs, ys, scheme, tol=0) == want


def test_slavnov_rejects_non_roots():
    with pytest.raises(NotBetheRoots):
        slavnov_scalar_product([3], [1], [0, 0], RATIONAL, tol=0)


def test_numeric_roots_simple():
    (b,) = bethe_solve_numeric(1, [0, 0])
    assert abs(b + mpmath.mpf(1) / 2) < 1e-12
    (b,) = bethe_solve_numeric(1, [0, 2])
    assert abs(b - mpmath.mpf(1) / 2) < 1e-12


def test_numeric_roots_symmetry():
    bs = bethe_solve_numeric(2, [0, 0, 0, 0], seed=3)
    assert max(abs(r) for r in bethe_check(bs, [0] * 4, RATIONAL)) < 1e-12
    reflected = sorted((-1 - b for b in bs), key=lambda z: (float(z.real), float(z.imag)))
    original = sorted(bs, key=lambda z: (float(z.real), float(z.imag)))
    assert all(abs(p - q) < 1e-12 for p, q in zip(reflected, original))


def test_no_finite_roots_beyond_equator():
    with pytest.raises(NoConvergence):
        bethe_solve_numeric(1, [0], restarts=20)


@pytest.mark.parametrize("n,N", [(1, 2), (1, 3), (2, 4)])
def test_numeric_slavnov_matches_lattice(sampler, n, N):
    with mpmath.workprec(256):
        xs, ys = sampler.rational_rapidities(n, N)
        bs = bethe_solve_numeric(n, ys, seed=n * 10 + N)
        value = slavnov_scalar_product(xs, bs, ys)
        oracle = partition_function("scalar-product", xs, ys, bs=bs)
        assert abs(value - oracle) <= 1e-9 * abs(oracle)
        assert abs(pdwpf_kostov(bs, ys)) < 1e-9
