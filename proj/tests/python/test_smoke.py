"""Smoke tests for the python bindings."""

import json

import pytest

import fibpoly


def test_builtin_catalog():
    families = fibpoly.builtin_families()
    assert len(families) == 15
    names = {f.name for f in families}
    assert "fibonacci" in names
    assert "jacobsthal-lucas" in names
    assert sum(f.kind == fibpoly.FamilyKind.lucas for f in families) == 8


def test_terms_and_printing():
    fib = fibpoly.find_builtin("fibonacci")
    assert fib is not None
    assert str(fibpoly.term_iter(fib, 5)) == "x^4 + 3*x^2 + 1"
    assert str(fibpoly.term_iter(fib, 0)) == "0"
    assert fibpoly.fib_via_qpow(fib, 9) == fibpoly.term_iter(fib, 9)


def test_parse_round_trip():
    f = fibpoly.parse_poly("-2*x + 1/2")
    assert str(f) == "-2*x + 1/2"
    assert fibpoly.parse_poly(str(f)) == f
    assert f.eval("1/2") == fibpoly.Rational("-1/2")
    with pytest.raises(ValueError):
        fibpoly.parse_poly("x +")


def test_rational_arithmetic():
    half = fibpoly.Rational("1/2")
    third = fibpoly.Rational("1/3")
    assert str(half + third) == "5/6"
    assert str(half * third) == "1/6"


def test_q_matrix_relations():
    pell = fibpoly.find_builtin("pell")
    q = fibpoly.q_matrix(pell)
    assert str(q) == "[[2*x, 1], [1, 0]]"
    q2 = fibpoly.mat_pow(q, 2)
    assert str(fibpoly.mat_det(q2)) == "1"
    # Q^3 times the scaled inverse power collapses to (-d)^3 I = -I
    prod = fibpoly.mat_pow(q, 3) * fibpoly.q_inverse_power_scaled(pell, 3)
    assert str(prod) == "[[-1, 0], [0, -1]]"


def test_eval_fast():
    fib = fibpoly.find_builtin("fibonacci")
    assert str(fibpoly.eval_term_fast(fib, 5, 1)) == "5"
    assert str(fibpoly.eval_term_fast(fib, 100, "1/2")) != ""


def test_check_identity_and_suite():
    jac = fibpoly.find_builtin("jacobsthal")
    report = fibpoly.check_identity(
        fibpoly.IdentityId.fib_cassini, jac, fibpoly.SweepBounds(n_max=10)
    )
    assert report.status == fibpoly.CheckStatus.PASS
    assert report.range == "1 <= n <= 10"

    reports = fibpoly.run_suite(
        fibpoly.builtin_families(), fibpoly.SweepBounds(n_max=5, m_max=5, p_max=2)
    )
    assert len(reports) == 15 * 16
    assert all(r.status != fibpoly.CheckStatus.FAIL for r in reports)

    doc = json.loads(fibpoly.reports_to_json_text(reports))
    assert doc[0]["status"] in {"PASS", "SKIPPED"}


def test_custom_family_and_validation():
    custom = fibpoly.FamilySpec(
        name="half-pell", kind=fibpoly.FamilyKind.fibonacci, a="1/2", c="2x", d="1"
    )
    w = fibpoly.window(custom, 0, 6)
    assert w.at(1) == fibpoly.Poly("1/2")
    report = fibpoly.check_identity(
        fibpoly.IdentityId.fib_cassini, custom, fibpoly.SweepBounds(n_max=8)
    )
    assert report.status == fibpoly.CheckStatus.PASS

    with pytest.raises(ValueError):
        fibpoly.FamilySpec(
            name="broken", kind=fibpoly.FamilyKind.fibonacci, a="0", c="x", d="1"
        )
