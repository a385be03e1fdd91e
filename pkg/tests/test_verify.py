import pytest

from gsp4adj import verify


def test_all_suites_pass(monkeypatch):
    monkeypatch.setenv("TOOLKIT_THREADS", "4")
    results = verify.run_suites("all")
    assert set(results) == set(verify.SUITES)
    failed = [c.line() for checks in results.values() for c in checks if not c.passed]
    assert failed == []


@pytest.mark.parametrize("raw,expected", [("", 1), ("3", 3), ("0", 1), ("many", 1)])
def test_thread_cap(monkeypatch, raw, expected):
    monkeypatch.setenv("TOOLKIT_THREADS", raw)
    assert verify.thread_cap() == expected


def test_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        verify.run_suites("nope")
