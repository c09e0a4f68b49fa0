from fractions import Fraction

import pytest

from pdwpf.errors import DegenerateRapidities
from pdwpf.korepin import (
    Variant,
    check_property_A,
    check_property_B,
    check_property_C,
    check_property_D,
    sample_abscissae,
    zeta,
)
from pdwpf.sixvertex import POLYNOMIAL, partition_function


def test_initial_condition_values():
    assert zeta(Variant.ZETA2, [5], [0]) == 1
    assert zeta(Variant.ZETA2, [1], [0, 0]) == 3


@pytest.mark.parametrize("n,N", [(1, 1), (1, 3), (2, 2), (2, 4), (3, 5), (4, 4)])
def test_both_forms_equal_lattice(sampler, n, N):
    xs, ys = sampler.rational_rapidities(n, N)
    oracle = partition_function("pdw-topsum", xs, ys, POLYNOMIAL)
    assert zeta(Variant.ZETA1, xs, ys) == oracle
    assert zeta(Variant.ZETA2, xs, ys) == oracle


def test_zeta1_needs_distinct_columns():
    with pytest.raises(DegenerateRapidities):
        zeta(Variant.ZETA1, [1], [0, 0])


def test_abscissae():
    assert sample_abscissae(5) == [0, 1, -1, 2, -2]
    assert sample_abscissae(3, avoid=[1]) == [0, -1, 2]


@pytest.mark.parametrize("variant", list(Variant))
def test_degree_bound(sampler, variant):
    for n, N in [(1, 2), (2, 2), (2, 4), (3, 4)]:
        xs, ys = sampler.rational_rapidities(n, N)
        report = check_property_A(variant, xs[:-1], ys)
        assert report.passed and report.detail["within_sharp_bound"]


@pytest.mark.parametrize("variant", list(Variant))
def test_symmetry(sampler, variant):
    xs, ys = sampler.rational_rapidities(2, 4)
    for perm in ([0, 1, 2, 3], [1, 0, 2, 3], [3, 2, 1, 0]):
        assert check_property_B(variant, xs, ys, perm).passed
    with pytest.raises(ValueError):
        check_property_B(variant, xs, ys, [0, 0, 1, 2])


@pytest.mark.parametrize("variant", list(Variant))
def test_recursions(sampler, variant):
    for n, N in [(2, 2), (2, 3), (3, 3), (3, 5)]:
        xs, ys = sampler.rational_rapidities(n, N)
        report = check_property_C(variant, xs, ys)
        assert report.passed, report.detail


@pytest.mark.parametrize("variant", list(Variant))
def test_initial_condition(sampler, variant):
    assert check_property_D([Fraction(4)], variant).passed
    assert check_property_D(sampler.rational_rapidities(1, 3)[1], variant).passed
    assert check_property_D([Fraction(0), Fraction(0)], Variant.ZETA2).passed
