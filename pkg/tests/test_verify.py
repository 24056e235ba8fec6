import pytest

from quasicount.actions import qc_sum
from quasicount.verify import (
    Check,
    verify_corollary,
    verify_lloyd,
    verify_oracle,
    verify_recursions,
)


def test_doubling_example():
    assert qc_sum(24) == 2 * qc_sum(12) + 1 == 11


def test_tripling_example():
    # r = 1 for n = 7
    assert qc_sum(21) == 4 * qc_sum(7) + 3 - 4 == 7


def test_six_is_below_the_recursion_domain():
    # lifting from n = 6 only works if the Euclidean (2, 3, 6) action is counted
    assert qc_sum(30) == 13
    assert qc_sum(6) * 6 + 1 == 7
    assert (qc_sum(6) + 1) * 6 + 1 == 13


@pytest.fixture(scope="module")
def recursions():
    return verify_recursions(500)


def test_recursions_hold(recursions):
    assert recursions.passed, recursions.failures[:5]


def test_every_recursion_is_exercised(recursions):
    counts = recursions.counts()
    assert set(counts) == {"5.1", "5.2", "5.6", "6.2", "6.5", "6.8", "6.12"}
    assert all(total > 0 for _, total in counts.values())


def test_recursions_reject_tiny_range():
    with pytest.raises(ValueError):
        verify_recursions(5)


def test_oracle_suite():
    report = verify_oracle(60)
    assert report.passed
    assert report.counts()["qc_oracle"] == [60, 60]


def test_corollary_suite():
    report = verify_corollary(2000)
    assert report.passed
    assert sum(t for _, t in report.counts().values()) > 1900


def test_lloyd_suite():
    report = verify_lloyd(61)
    assert report.passed and len(report.checks) == 16


def test_failed_check_is_reported():
    c = Check("x", "y", "n=1", 2, 3)
    assert not c.passed
