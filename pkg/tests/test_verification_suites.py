# pylint: disable=unused-argument, unused-import, redefined-outer-name, protected-access, missing-module-docstring, missing-class-docstring
# pyright: reportGeneralTypeIssues=false

import pytest

from pystirling.exceptions import UnknownSuite
from pystirling.polyring import X
from pystirling.verification import CheckFailure, VerifyReport
from pystirling.verification.suites import SUITES, SuiteName, SuiteOptions, run_suite, suite_names


@pytest.fixture
def small_options():
    return SuiteOptions(max_n=3, radius=2, workers=2)


def test_suite_names():
    names = suite_names()

    assert "all" in names
    assert len(names) == len(SUITES) + 1
    assert all(SuiteName(name) is not None for name in names)


@pytest.mark.parametrize("name", [name.value for name in SUITES])
def test_suite_passes(name, small_options):
    report = run_suite(name, small_options)

    assert report.suite == name
    assert report.checks > 0
    assert report.passed, report.failures[:3]


def test_all_suites_merge(small_options):
    report = run_suite("all", small_options)
    separate = [run_suite(name.value, small_options) for name in SUITES]

    assert report.passed
    assert report.checks == sum(single.checks for single in separate)


def test_single_melzak_instance():
    report = run_suite("melzak", SuiteOptions(degree=3, m=4, k=2, seed=11))

    assert report.checks == 1
    assert report.passed


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("does-not-exist")


def test_report_records_failures():
    report = VerifyReport(suite="manual")

    assert report.compare("equal", "n=1", X(1), X(1))
    assert not report.compare("different", "n=2", X(1), X(2))
    assert report.expect("holds", "n=3", True)
    assert not report.expect("fails", "n=4", False)

    assert report.checks == 4
    assert not report.passed
    assert [failure.check for failure in report.failures] == ["different", "fails"]
    assert report.failures[0] == CheckFailure(check="different", witness="n=2", lhs="X1", rhs="X2")


def test_report_merge_prefixes_checks():
    outer = VerifyReport(suite="outer")
    inner = VerifyReport(suite="inner")
    inner.expect("fails", "n=1", False)
    outer.expect("holds", "n=0", True)

    merged = outer.merge(inner)

    assert merged is outer
    assert merged.checks == 2
    assert merged.failures[0].check == "inner.fails"
