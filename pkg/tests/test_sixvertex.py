from fractions import Fraction

import pytest

from pdwpf.determinants import izergin_dwpf
from pdwpf.errors import SingularWeight
from pdwpf.sixvertex import (
    POLYNOMIAL,
    RATIONAL,
    BoundaryFamily,
    BoundarySpec,
    WeightScheme,
    binomial_split_factor,
    count_configurations,
    partition_function,
    vertex_weight,
)


def test_vertex_weights():
    assert vertex_weight("b+", 2, 0, RATIONAL) == Fraction(2, 3)
    assert vertex_weight("c+", 2, 0, POLYNOMIAL) == 1
    assert vertex_weight("a+", 2, 0, RATIONAL) == 1
    assert vertex_weight("a-", 2, 0, POLYNOMIAL) == 3


def test_rational_weight_pole():
    with pytest.raises(SingularWeight):
        vertex_weight("b+", -1, 0, RATIONAL)


@pytest.mark.parametrize("N,count", [(1, 1), (2, 2), (3, 7), (4, 42), (5, 429)])
def test_alternating_sign_matrix_counts(N, count):
    assert count_configurations(BoundarySpec(BoundaryFamily.DWBC, N, N)) == count


def test_single_vertex():
    assert partition_function("dwbc", [2], [0]) == Fraction(1, 3)
    assert partition_function("pdw-topsum", [2], [0]) == Fraction(1, 3)


def test_boundary_validation():
    with pytest.raises(ValueError):
        BoundarySpec(BoundaryFamily.DWBC, 2, 3)
    with pytest.raises(ValueError):
        BoundarySpec(BoundaryFamily.PDW_SPLIT, 2, 4)
    with pytest.raises(ValueError):
        BoundarySpec(BoundaryFamily.PDW_TOPSUM, 3, 2)
    with pytest.raises(ValueError):
        WeightScheme.trigonometric(1)


def test_polynomial_dwbc_is_cleared_izergin(sampler):
    xs, ys = sampler.rational_rapidities(3, 3)
    clearing = Fraction(1)
    for x in xs:
        for y in ys:
            clearing *= x - y + 1
    assert partition_function("dwbc", xs, ys, POLYNOMIAL) == clearing * izergin_dwpf(xs, ys)


def test_topsum_equals_z2_rational(sampler):
    for n, N in [(1, 2), (2, 3), (2, 4)]:
        xs, ys = sampler.rational_rapidities(n, N)
        assert partition_function("pdw-topsum", xs, ys) == partition_function("pdw-z2", xs, ys)


def test_split_is_binomial_multiple(sampler):
    xs, ys = sampler.rational_rapidities(2, 4)
    top = partition_function("pdw-topsum", xs, ys)
    for m in range(2, 5):
        split = partition_function("pdw-split", xs, ys, m=m)
        assert split == binomial_split_factor(2, m, 4) * top
