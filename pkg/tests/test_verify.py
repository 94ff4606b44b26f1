# -*- coding: utf-8 -*-
# *************************************
# kfpoly: Kostka-Foulkes polynomials and q-multiplicities
#
# Copyright (c) 2026 kfpoly Developers
#
# *************************************

import pytest

from kfpoly.qpoly import LaurentPoly
from kfpoly.verify import (
    SUITE_ALIASES,
    SUITES,
    Failure,
    VerifySuiteReport,
    list_suites,
    run_suite,
    run_suites,
)

SUITE_NAMES = [
    "partition-fn-oracle",
    "lemma-util",
    "lemma-ktilde",
    "dualities-hat",
    "decompositions",
    "conj-duality",
    "x-equals-u",
    "x-equals-U",
    "x-equals-hat",
    "x-conjugation",
    "charge-oracle",
    "branching",
    "lr-symmetry",
    "crystal-structure",
    "paper-example",
]


def test_registered_suites():
    assert list_suites() == SUITE_NAMES
    for name in SUITE_NAMES:
        statement, generator, n, max_size = SUITES[name]
        assert statement
        assert n >= 1 and max_size >= 0


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_small_suites_pass(name):
    report = run_suite(name, n=2, max_size=2, quiet=True)
    assert report.instances > 0
    assert report.failures == []
    assert report.exit_status == 0
    assert not report.interrupted


def test_default_sweep():
    report = run_suite("x-equals-u", quiet=True)
    assert report.parameters == {"n": 6, "max_size": 4}
    assert report.exit_status == 0
    assert "n=6 lambda=1,1,1,1,1,1" in report.checked


DEFAULT_BOUNDS = {
    "lemma-ktilde": {"n": 3, "max_size": 6},
    "dualities-hat": {"n": 3, "max_size": 9},
    "decompositions": {"n": 3, "max_size": 6},
    "x-equals-u": {"n": 6, "max_size": 4},
    "x-equals-U": {"n": 6, "max_size": 4},
    "charge-oracle": {"n": 3, "max_size": 6},
    "crystal-structure": {"n": 6, "max_size": 4},
}


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_default_suites_pass(name):
    report = run_suite(name, quiet=True)
    if name in DEFAULT_BOUNDS:
        assert report.parameters == DEFAULT_BOUNDS[name]
    assert report.instances > 0
    assert report.failures == []
    assert report.exit_status == 0


def test_dualities_hat_reaches_size_nine():
    report = run_suite("dualities-hat", quiet=True)
    assert "lambda=3,3,3 mu=3,3,3" in report.checked


def test_example_suite():
    report = run_suite("paper-example", quiet=True)
    assert report.suite == "paper-example"
    assert report.checked == ["lambda=1,0,0 mu=1,1,1"]
    assert report.exit_status == 0


def test_suite_alias():
    assert SUITE_ALIASES == {"worked-example": "paper-example"}
    report = run_suite("worked-example", quiet=True)
    assert report.suite == "paper-example"
    assert report.checked == ["lambda=1,0,0 mu=1,1,1"]


def test_threads():
    single = run_suite("conj-duality", n=3, threads=1, quiet=True)
    multi = run_suite("conj-duality", n=3, threads=3, quiet=True)
    assert single.checked == multi.checked
    assert multi.failures == []


def test_run_suites_all():
    reports = run_suites(["all"], n=1, max_size=1, quiet=True)
    assert [report.suite for report in reports] == SUITE_NAMES
    assert all(report.exit_status == 0 for report in reports)


def test_run_suite_rejects():
    with pytest.raises(ValueError):
        run_suite("no-such-suite", quiet=True)
    with pytest.raises(ValueError):
        run_suite("lemma-util", n=0, quiet=True)
    with pytest.raises(ValueError):
        run_suite("lemma-util", n=99, quiet=True)


def test_report():
    report = VerifySuiteReport("demo", "a = b", {"n": 1, "max_size": 0})
    report.checked = ["n=1", "n=2"]
    assert report.exit_status == 0
    report.failures.append(
        Failure("a = b", "n=2", LaurentPoly({1: 1}), LaurentPoly.zero())
    )
    assert report.exit_status == 1
    data = report.to_json()
    assert data["instances"] == 2
    assert data["status"] == 1
    assert data["failures"] == [
        {"identity": "a = b", "inputs": "n=2", "lhs": {"1": 1}, "rhs": {}}
    ]
    assert "time" not in data
    text = str(report)
    assert "    checked n=1" in text
    assert "    FAILED a = b at n=2: lhs = q, rhs = 0" in text
    assert text.splitlines()[-1].startswith("2 instances, 1 failures in ")
