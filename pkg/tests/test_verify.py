import pytest

from pdwpf.verify import SUITES, job_seed, run_suite, thread_count


def test_job_seed_is_stable():
    assert job_seed(1, "a", 2) == job_seed(1, "a", 2)
    assert job_seed(1, "a", 2) != job_seed(2, "a", 2)


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all"])
def test_suites_pass_at_small_caps(suite):
    report = run_suite(suite, seed=5, max_N=3, threads=1)
    assert report["passed"], [c for c in report["cases"] if not c["pass"]][:3]
    assert report["summary"]["total"] > 0


def test_case_layout():
    report = run_suite("binomial", seed=2, max_N=2, threads=1)
    for case in report["cases"]:
        assert set(case) == {"id", "expected", "actual", "pass"}


def test_parallel_matches_serial():
    a = run_suite("pdwpf-equivalence", seed=9, max_N=4, threads=1)
    b = run_suite("pdwpf-equivalence", seed=9, max_N=4, threads=3)
    assert a == b


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope")


def test_thread_env(monkeypatch):
    monkeypatch.setenv("PDWPF_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("PDWPF_THREADS", "many")
    with pytest.raises(ValueError):
        thread_count()
