"""Case enumeration, derived invariants and registry cross-checks."""

from fractions import Fraction

import pytest

from fanoforge import registry
from fanoforge.enumeration import (
    LinkNotConstructed,
    degree_of_X,
    derive_invariants,
    enumerate_cases,
    flagged_extras,
    format_wps,
    link_result,
    moduli_dimension,
    moduli_monomial_total,
    registry_check,
)
from fanoforge.singular import CyclicQuotient, equivalent


def test_table_reproduction():
    cases = enumerate_cases(4, 3)
    assert len(cases) == 10
    recorded = registry.CASE_TABLE
    for case, row in zip(cases, recorded):
        assert case.x_form == row.x_form
        assert (case.r, case.a, case.e) == (row.r, row.a, row.e)
        assert (case.q, case.qprime, case.l, case.d) == (row.q, row.qprime, row.l, row.d)
        assert case.divisible == row.divisible


def test_registry_diff_is_empty():
    assert registry_check() == []


def test_registry_diff_detects_tampering(monkeypatch):
    bad = list(registry.CASE_TABLE)
    bad[0] = registry.CaseRow("P^3", 2, 1, 2, 4, 2, 3, 8, True)  # d: 7 -> 8
    monkeypatch.setattr(registry, "CASE_TABLE", tuple(bad))
    diff = registry_check()
    assert diff and any(entry["field"] == "d" for entry in diff)


def test_invariant_formulas():
    case = derive_invariants(3, 1, 3)
    assert (case.q, case.qprime, case.l, case.d) == (5, 2, 5, 14)
    assert case.d == case.q * case.r - 1
    assert case.x_form == "P(1^3,2)"
    assert derive_invariants(2, 2, 1).x_form == "X4 in P(1^3,2,3)"
    with pytest.raises(ValueError):
        derive_invariants(1, 1, 1)
    with pytest.raises(ValueError):
        derive_invariants(2, 1, 5)  # e > ra


def test_degrees():
    assert degree_of_X((1, 1, 1, 1)) == 1
    assert degree_of_X((1, 1, 1, 1, 1), (2,)) == 2
    assert degree_of_X((1, 1, 1, 2), ()) == Fraction(1, 2)
    assert degree_of_X((1, 1, 2, 2, 3), (4,)) == Fraction(1, 3)


def test_link_results_match_tables():
    expected = {
        "A.1": (Fraction(1), Fraction(7, 3), 2, "1/3(1,2,2)"),
        "A.2": (Fraction(2), Fraction(10, 3), 2, "1/3(1,2,2)"),
        "A.3": (Fraction(1, 2), Fraction(7, 5), 2, "1/5(1,2,4)"),
        "A.4": (Fraction(1, 3), Fraction(3, 5), 3, "1/5(1,3,4)"),
        "B.1": (Fraction(3, 2), Fraction(12, 5), 2, "1/5(1,2,4)"),
        "B.2": (Fraction(2, 3), Fraction(10, 7), 2, "1/7(1,2,6)"),
    }
    seen = {}
    for case in enumerate_cases(4, 3):
        if not case.divisible:
            with pytest.raises(LinkNotConstructed):
                link_result(case)
            continue
        link = link_result(case)
        seen[link.label] = link
        a3, b3, qy, point = expected[link.label]
        assert link.a_cubed == a3
        assert link.b_cubed == b3
        assert link.q_y == qy
        assert equivalent(link.index_l_point, CyclicQuotient.parse(point))
        assert link.discrepancy == Fraction(1, link.index_l_point.r)
    assert set(seen) == set(expected)


def test_no_flagged_extras_at_larger_bounds():
    assert flagged_extras(6, 5) == []


def test_moduli_counts():
    assert [moduli_monomial_total(f) for f in ("T", "J", "TJ")] == [37, 35, 32]
    assert [moduli_dimension(f) for f in ("T", "J", "TJ")] == [36, 34, 31]


def test_format_wps():
    assert format_wps((1, 1, 1, 1)) == "P^3"
    assert format_wps((2, 1, 1, 3, 2)) == "P(1^2,2^2,3)"
