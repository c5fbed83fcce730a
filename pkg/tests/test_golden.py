import pytest

from tvskein.golden import SUITES, golden_suite

FAST_SUITES = ["prop510", "p2p6", "tensor512", "appendixA", "covers-81",
               "colored75"]
SLOW_SUITES = [n for n in SUITES if n not in FAST_SUITES and n != "example45"]


@pytest.mark.parametrize("name", FAST_SUITES)
def test_fast_suites(name):
    ok, checks = golden_suite(name)
    bad = [(label, detail) for label, good, detail in checks if not good]
    assert ok, bad


@pytest.mark.parametrize("name", SLOW_SUITES)
def test_slow_suites(name):
    ok, checks = golden_suite(name)
    bad = [(label, detail) for label, good, detail in checks if not good]
    assert ok, bad


def test_example45_suite():
    ok, checks = golden_suite("example45")
    bad = [(label, detail) for label, good, detail in checks if not good]
    assert ok, bad
