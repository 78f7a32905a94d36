import pytest

from narayana_cf import checker
from narayana_cf.checker import CHECKS, FAIL, FLAGGED, PASS, run_all, run_check
from narayana_cf.errors import UnknownId

REQUIRED = {
    "eq5", "eq6", "eq11", "eq12", "eq18", "eq19", "eq21", "eq24", "eq25", "eq28",
    "eq35", "eq36", "eq37", "eq38", "eq40", "eq42", "eq43", "eq45", "eq46", "eq47",
    "eq51", "eq52", "eq53", "eq55", "eq56", "eq57", "eq58", "eq59",
    "ex1", "ex2", "ex3", "ex4", "ex5", "ex6", "thm1", "thm2", "thm3", "thm4",
    "hankel-catalan", "oracle-triangle", "c-odd-formula",
}


def test_registry_covers_required_ids():
    assert REQUIRED <= set(CHECKS)
    assert checker.check_ids() == sorted(CHECKS)


@pytest.mark.parametrize("check_id", sorted(set(CHECKS) - {"eq52", "eq54", "c-odd-formula"}))
def test_small_order_passes(check_id):
    assert run_check(check_id, 6).status == PASS


def test_order_zero_never_fails():
    assert all(r.status != FAIL for r in run_all(0))


def test_flagged_report_names_reading():
    r = run_check("eq52", 12)
    assert r.status == FLAGGED
    assert "C(t^2, z^2) holds" in r.note and "C(t^2, z^1) fails" in r.note
    r = run_check("c-odd-formula", 2)
    assert r.status == FLAGGED
    assert "binom(n,k)^2 t^k holds" in r.note and "(1+t)^n fails at z^2" in r.note


def test_deterministic():
    a = run_all(8, ["eq5", "thm2", "eq52"])
    b = run_all(8, ["eq5", "thm2", "eq52"])
    assert a == b


def test_max_n_clamps():
    assert run_check("oracle-triangle", 50).n_max == 12


def test_errors():
    with pytest.raises(UnknownId):
        run_check("eq999")
    with pytest.raises(ValueError):
        run_check("eq5", -1)
    assert [r.id for r in run_all(4, ["eq5", "bogus"])] == ["eq5"]


def test_witness_on_failure():
    from narayana_cf.algebra import Series

    lhs = Series([1, 2, 3], 2)
    rhs = Series([1, 2, 4], 2)
    w = checker._series_witness("demo", lhs, rhs)
    assert w == "demo: z^2 coefficient 3 != 4"
    assert checker.verdict(None, w).status == FAIL


def test_arithmetic_error_becomes_fail(monkeypatch):
    def boom(n):
        raise ZeroDivisionError("x")

    monkeypatch.setitem(CHECKS, "boom", checker.Check("boom", "test", 1, boom))
    r = run_check("boom")
    assert r.status == FAIL and "ZeroDivisionError" in r.witness
