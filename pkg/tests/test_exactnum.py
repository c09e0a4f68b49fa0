from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdwpf.errors import DuplicateAbscissa, WindowTooSmall
from pdwpf.exactnum import (
    Jet2,
    LaurentJet,
    det,
    det_cofactor,
    det_exact,
    format_scalar,
    interpolate_degree,
    parse_scalar,
    vandermonde,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@pytest.mark.parametrize("text,value", [("3/4", Fraction(3, 4)), ("-7", Fraction(-7)),
                                        ("12/8", Fraction(3, 2)), ("0", Fraction(0))])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["1/0", "x", "1.5", "--2", "3/-4", ""])
def test_parse_scalar_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


@given(fractions)
def test_format_round_trip(v):
    assert parse_scalar(format_scalar(v)) == v


def test_small_determinants():
    assert det([[1, 2], [3, 4]]) == -2
    eye = [[Fraction(int(i == j)) for j in range(5)] for i in range(5)]
    assert det(eye) == 1


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_bareiss_matches_cofactor(m):
    assert det_exact(m) == det_cofactor(m)


def test_jet_diagonal_determinant():
    e1, e2 = Jet2.variable(0, 2), Jet2.variable(1, 2)
    d = det([[1 + e1, Jet2.constant(0, 2)], [Jet2.constant(0, 2), 1 + e2]])
    assert d == 1 + e1 + e2 + e1 * e2
    assert d.hess(0, 1) == 1 and d.hess(0, 0) == 0


def test_jet_ring_determinant_matches_cofactor(sampler):
    ys = [Jet2.variable(i, 3) for i in range(3)]
    m = [[sampler.rational() + sampler.rational() * ys[(i + j) % 3] for j in range(3)] for i in range(3)]
    assert det(m) == det_cofactor(m)


def test_jet_second_derivatives():
    x, y = Jet2.variable(0, 2, at=2), Jet2.variable(1, 2, at=3)
    f = x * x * y
    assert f.value() == 12
    assert f.grad(0) == 12 and f.grad(1) == 4
    assert f.hess(0, 0) == 6 and f.hess(0, 1) == 4 and f.hess(1, 1) == 0


def test_laurent_basics():
    eps = LaurentJet.epsilon()
    inv = 1 / eps
    assert inv.coefficient(-1) == 1
    s = (1 + eps) * (1 - eps)
    assert s.coefficient(0) == 1 and s.coefficient(1) == 0 and s.coefficient(2) == -1
    q = (1 + eps) / (1 - eps)
    assert [q.coefficient(k) for k in range(4)] == [1, 2, 2, 2]


def test_laurent_cancellation_needs_window():
    eps = LaurentJet.epsilon(window=2)
    tiny = (1 + eps) * (1 - eps) - 1 + eps * eps  # zero to the available precision
    with pytest.raises(WindowTooSmall):
        1 / tiny


def test_vandermonde():
    assert vandermonde([1, 2, 3]) == 2
    assert vandermonde([5]) == 1
    assert vandermonde([0, 1, 2, 3], -1) == 12


def test_interpolate_degree():
    assert interpolate_degree([(0, 1), (1, 1), (2, 1)]) == 0
    assert interpolate_degree([(0, 0), (1, 1), (2, 4), (3, 9)]) == 2
    with pytest.raises(DuplicateAbscissa):
        interpolate_degree([(1, 1), (1, 2)])
