import pytest

from partition_support import transfer
from partition_support.verify import PER_N_CHECKS, verify_theorems


def test_all_pass_to_12():
    report = verify_theorems(12)
    assert report.passed
    names = [c.name for c in report.checks]
    assert len(names) == len(PER_N_CHECKS) + 1
    for c in report.checks:
        assert c.counterexample is None
        if c.name != "jump-values":
            assert c.per_n == {n: True for n in range(1, 13)}


def test_n_max_2():
    report = verify_theorems(2)
    assert report.passed
    by_name = {c.name: c for c in report.checks}
    assert by_name["support-one-edges"].per_n == {1: True, 2: True}
    assert by_name["jump-values"].skipped


def test_fault_injection_degree(monkeypatch):
    original = transfer.degree_formula
    monkeypatch.setattr(transfer, "degree_formula", lambda lam: original(lam) + 1)
    report = verify_theorems(4)
    assert not report.passed
    failed = {c.name: c for c in report.checks if not c.passed}
    assert list(failed) == ["degree-formula"]
    assert failed["degree-formula"].counterexample.startswith("n=1: (1)")
    assert failed["degree-formula"].per_n == {1: False, 2: False, 3: False, 4: False}


def test_fault_injection_jump(monkeypatch):
    original = transfer.support_jump_formula
    monkeypatch.setattr(transfer, "support_jump_formula",
                        lambda lam, m: original(lam, m) - (m.y == 0))
    report = verify_theorems(3)
    failed = [c.name for c in report.checks if not c.passed]
    assert failed == ["jump-formula"]


def test_invalid():
    with pytest.raises(ValueError):
        verify_theorems(0)
