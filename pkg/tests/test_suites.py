import json

import pytest

from glhom.exact import InputError
from glhom.suites import SUITE_NAMES, run_suite, suite_cases

FAST = ("pn-roots", "qn", "harmonic", "binomial2", "lambda", "table1", "bounds", "case1", "case2", "cased", "pinfty")


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    rep = run_suite(name)
    assert rep.cases
    assert rep.passed, [c.to_json() for c in rep.failures()][:3]


@pytest.mark.parametrize("name", ["moebius", "exp-pdiv", "special2", "dwork"])
def test_randomized_suite_passes_small(name):
    rep = run_suite(name, {"cases": 20}, seed=3)
    assert rep.passed, [c.to_json() for c in rep.failures()][:3]


def test_seed_determinism():
    a = suite_cases("exp-pdiv", {"cases": 15}, seed=11)
    b = suite_cases("exp-pdiv", {"cases": 15}, seed=11)
    c = suite_cases("exp-pdiv", {"cases": 15}, seed=12)
    assert a == b
    assert a != c


def test_parallel_report_matches_serial():
    serial = run_suite("moebius", {"cases": 12}, seed=5, jobs=1).to_json()
    parallel = run_suite("moebius", {"cases": 12}, seed=5, jobs=3).to_json()
    assert serial == parallel


def test_report_json_shape():
    rep = run_suite("qn", {"n_max": 4}).to_json()
    text = json.dumps(rep)
    back = json.loads(text)
    assert back["suite"] == "qn"
    assert back["status"] == "pass"
    assert back["num_cases"] == 4 and back["num_failed"] == 0
    assert {"index", "inputs", "expected", "observed", "passed"} <= set(back["cases"][0])


def test_errata_are_reported():
    assert run_suite("dwork", {"grid": [[2, 3]]}).errata
    assert run_suite("modular", {"class_n_max": 2, "equal_n_max": 2, "bound_n_max": 2}).errata


def test_unknown_suite():
    with pytest.raises(InputError):
        run_suite("nope")
    assert "cross-check" in SUITE_NAMES
