from fractions import Fraction as F

import pytest

from pdwpf.limits import (
    limit_check_many,
    limit_check_one,
    limit_check_sequential,
    limit_check_slavnov,
    limit_check_trig,
    limit_check_trig_slavnov,
    q_factorial,
)


def test_q_factorial():
    assert q_factorial(0, F(1, 4)) == 1
    assert q_factorial(2, F(1, 4)) == 1 + F(1, 4)
    assert q_factorial(3, 2) == 1 * 3 * 7


@pytest.mark.parametrize("N", [2, 3])
def test_one_limit(sampler, N):
    xs, ys = sampler.rational_rapidities(N, N)
    assert limit_check_one(xs[:-1], ys, t=F(3)).passed


def test_many_limits_with_factorial():
    report = limit_check_many([F(1, 3)], [F(0), F(5, 2), F(7, 5)], [F(2), F(3)])
    assert report.passed
    assert report.expected != 0


def test_sequential_steps():
    reports = limit_check_sequential([F(1, 3), F(-2), F(4)], [F(0), F(5, 2), F(7, 5)])
    assert len(reports) == 2 and all(r.passed for r in reports)


@pytest.mark.parametrize("exs,eys,g,ts", [
    ([F(3)], [F(2), F(5)], F(2), [F(1)]),
    ([F(3)], [F(2), F(5), F(7, 3)], F(2), [F(1), F(4)]),
])
def test_trig_limits(exs, eys, g, ts):
    assert limit_check_trig(exs, eys, g, ts).passed


@pytest.mark.parametrize("xs,ys,ts", [
    ([F(3)], [F(0), F(1, 2)], [F(1)]),
    ([F(3), F(-1, 3)], [F(0), F(1, 2), F(9, 2)], [F(1), F(2)]),
])
def test_slavnov_limits(xs, ys, ts):
    assert limit_check_slavnov(xs, ys, ts).passed


def test_trig_slavnov_limits():
    assert limit_check_trig_slavnov([F(3)], [F(2), F(5)], F(2), [F(1)]).passed
    assert limit_check_trig_slavnov([F(3), F(2, 7)], [F(2), F(5), F(1, 3)], F(2), [F(1), F(3)]).passed


def test_limit_argument_validation():
    with pytest.raises(ValueError):
        limit_check_one([F(1)], [F(0), F(2), F(3)])
