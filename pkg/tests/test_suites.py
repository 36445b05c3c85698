from so8min.suites import SUITES, Report, aggregate, run_suite, sample_negative, sample_orbit
from so8min.orthogonal import in_min_closure


def test_report_bookkeeping():
    r = Report("x")
    r.record(True)
    r.record(False, {"input": 1})
    assert (r.cases, r.passed, r.failed) == (2, 1, 1)
    assert r.counterexamples == [{"input": 1}] and not r.ok
    agg = aggregate([r, Report("y")])
    assert agg["cases"] == 2 and agg["counterexamples"] == [{"suite": "x", "input": {"input": 1}}]


def test_samplers(rng):
    for _ in range(10):
        assert in_min_closure(sample_orbit(rng))
        assert not in_min_closure(sample_negative(rng))


def test_every_suite_passes_with_few_trials():
    for name in SUITES:
        rep = run_suite(name, seed=1, trials=3)
        assert rep.ok, (name, rep.counterexamples)
        assert rep.passed == rep.cases > 0


def test_suites_are_deterministic():
    for name in ("membership", "bridge", "affinize"):
        assert run_suite(name, 9, 3).to_json() == run_suite(name, 9, 3).to_json()
