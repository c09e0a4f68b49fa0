from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pdwpf.errors import DegenerateMiwaVariables, DivisionByZeroVariable
from pdwpf.exactnum import det, vandermonde
from pdwpf.korepin import Variant, zeta
from pdwpf.symfun import (
    TauSpec,
    casorati_check,
    coeff_c,
    coeff_d,
    complete_h,
    discrete_derivative,
    elementary_e,
    hirota_miwa_check,
    kp_bilinear_check,
    miwa_triples,
    tau_value,
)

variables = st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=5), min_size=2, max_size=8)


def test_small_values():
    assert complete_h(1, [1, 2]) == 3
    assert complete_h(2, [1, 1, 1]) == 6
    assert complete_h(-3, [5]) == 0
    assert complete_h(0, []) == 1
    assert elementary_e(1, [1, 2, 3]) == 6
    assert elementary_e(3, [1, 2, 3]) == 6
    assert elementary_e(4, [1, 2, 3]) == 0


def test_discrete_derivative():
    assert discrete_derivative(2, [1, 3], 1) == complete_h(1, [1, 3]) == 4
    assert discrete_derivative(0, [1, 3], 0) == 0
    with pytest.raises(DivisionByZeroVariable):
        discrete_derivative(2, [1, 0], 1)


@settings(max_examples=40, deadline=None)
@given(variables, st.integers(0, 6), st.data())
def test_generating_identities(xs, i, data):
    m = data.draw(st.integers(0, len(xs) - 1))
    k = data.draw(st.integers(0, len(xs) - 1).filter(lambda t: t != m))
    drop_m = xs[:m] + xs[m + 1:]
    drop_k = xs[:k] + xs[k + 1:]
    assert complete_h(i, xs) == complete_h(i, drop_m) + xs[m] * complete_h(i - 1, xs)
    assert (xs[m] - xs[k]) * complete_h(i - 1, xs) == complete_h(i, drop_k) - complete_h(i, drop_m)
    duality = sum((-1) ** j * elementary_e(j, xs) * complete_h(i - j, xs) for j in range(i + 1))
    assert duality == (1 if i == 0 else 0)


def test_coefficient_edge_cases():
    assert coeff_c(1, 1, [Fraction(5)], 1) == 1
    assert coeff_c(1, 5, [Fraction(5)], 1) == 0
    assert coeff_d(1, 1, [0, 0, 0]) == 1


@pytest.mark.parametrize("n,N", [(1, 1), (2, 3), (2, 4), (3, 5)])
def test_tau_reproduces_polynomial_forms(sampler, n, N):
    xs, ys = sampler.rational_rapidities(n, N)
    sign = (-1) ** (N * (N - 1) // 2)
    assert tau_value(TauSpec.ik(xs, ys)) == sign * zeta(Variant.ZETA1, xs, ys) * vandermonde(xs)
    assert tau_value(TauSpec.s(xs, ys)) == zeta(Variant.ZETA2, xs, ys)


def test_tau_at_zero_miwa_variables(sampler):
    xs, _ = sampler.rational_rapidities(2, 3)
    spec = TauSpec.ik(xs, [0, 0, 0])
    assert tau_value(spec) == det([row[:3] for row in spec.coefficients()])


def test_casoratian_condition(sampler):
    xs, ys = sampler.rational_rapidities(2, 3)
    spec = TauSpec.ik(xs, [y or 1 for y in ys])
    assert casorati_check(spec, (1, 1, 1), 0, pair=(1, 2))
    assert casorati_check(spec, (2, 1, 1), 2, pair=(0, 1))


def _nonzero(sampler, n, N):
    while True:
        xs, ys = sampler.rational_rapidities(n, N)
        if 0 not in xs and 0 not in ys:
            return xs, ys


@pytest.mark.parametrize("source,n,N", [("ik", 2, 3), ("s", 3, 3), ("ik", 3, 4), ("s", 3, 4)])
def test_hirota_miwa(sampler, source, n, N):
    xs, ys = _nonzero(sampler, n, N)
    spec = TauSpec.ik(xs, ys) if source == "ik" else TauSpec.s(xs, ys)
    base = spec.default_multiplicities()
    for shift in [base, sampler.multiplicities(base), sampler.multiplicities(base)]:
        for trio in miwa_triples(spec):
            assert hirota_miwa_check(spec, shift, *trio) == 0


def test_hirota_miwa_negative_control(sampler):
    xs, ys = _nonzero(sampler, 2, 3)
    spec = TauSpec.ik(xs, ys)
    perturbed = hirota_miwa_check(spec, (1, 1, 1), 0, 1, 2,
                                  tau=lambda ms: tau_value(spec, ms) + ms[0] ** 2 + 1)
    assert perturbed != 0


def test_hirota_miwa_degenerate():
    spec = TauSpec.ik([Fraction(1), Fraction(2)], [Fraction(3), Fraction(3), Fraction(5)])
    with pytest.raises(DegenerateMiwaVariables):
        hirota_miwa_check(spec, (1, 1, 1), 0, 1, 2)


def test_bilinear_determinant(sampler):
    xs, ys = _nonzero(sampler, 2, 3)
    ik = TauSpec.ik(xs, ys)
    assert kp_bilinear_check(ik, (1, 1, 1), [0, 1, 2]) == 0
    assert kp_bilinear_check(ik, (1, 1, 1), [0, 1, 2], scramble=True) != 0
    xs, ys = _nonzero(sampler, 4, 5)
    s = TauSpec.s(xs, ys)
    assert kp_bilinear_check(s, (1, 1, 1, 1), [0, 1, 2, 3]) == 0
    assert kp_bilinear_check(s, (1, 1, 1, 1), [0, 1, 2, 3], scramble=True) != 0


def test_multiplicity_cap():
    spec = TauSpec.ik([Fraction(1)], [Fraction(2), Fraction(3)])
    with pytest.raises(ValueError):
        tau_value(spec, (20, 1))
    with pytest.raises(ValueError):
        tau_value(spec, (-1, 1))
