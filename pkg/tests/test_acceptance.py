"""Acceptance gate: the ten headline checks, one test per criterion.

Each test is a direct, independently readable statement of the criterion it
implements; shared fixtures only cache expensive computations.
"""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from fanoforge import curves, pfaffian, registry
from fanoforge.curves import SingularityType, a3_obstruction, classify, multiplicity
from fanoforge.enumeration import (
    degree_of_case,
    enumerate_cases,
    link_result,
    moduli_dimension,
    moduli_monomial_total,
)
from fanoforge.hilbert import (
    A3_FAMILY_DENOMINATOR,
    hs_equal,
    hs_expand,
    hs_icecream_a3,
    hs_lemma1,
    hs_numerator_wrt,
    hs_of_hypersurface,
)
from fanoforge.poly import Poly, UniPoly
from fanoforge.singular import CyclicQuotient, equivalent, is_isolated, reid_tai_terminal
from fanoforge.verify import _family_curve


@pytest.fixture(scope="module")
def cases():
    return enumerate_cases(4, 3)


def test_criterion_1_table_reproduction(cases):
    """enumerate_cases(4,3) emits exactly the 10 recorded rows, all columns."""
    assert len(cases) == 10
    for case, row in zip(cases, registry.CASE_TABLE):
        assert case.x_form == row.x_form
        assert (case.r, case.a) == (row.r, row.a)
        assert (case.q, case.e, case.qprime) == (row.q, row.e, row.qprime)
        assert (case.l, case.d, case.divisible) == (row.l, row.d, row.divisible)


def test_criterion_2_link_invariants(cases):
    """A^3, B^3, q_Y and the index-l point match the recorded tables."""
    a_cubeds, b_cubeds, q_ys = [], [], []
    for case in cases:
        if not case.divisible:
            continue
        link = link_result(case)
        a_cubeds.append(link.a_cubed)
        b_cubeds.append(link.b_cubed)
        q_ys.append(link.q_y)
        assert link.a_cubed == degree_of_case(case)
        recorded = CyclicQuotient.parse(registry.y_row(link.label).high_index_point)
        assert equivalent(link.index_l_point, recorded)
    assert sorted(a_cubeds) == sorted(
        [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(1, 3),
         Fraction(3, 2), Fraction(2, 3)]
    )
    assert sorted(b_cubeds) == sorted(
        [Fraction(7, 3), Fraction(10, 3), Fraction(7, 5), Fraction(3, 5),
         Fraction(12, 5), Fraction(10, 7)]
    )
    assert sorted(q_ys) == [2, 2, 2, 2, 2, 3]


def test_criterion_3_hilbert_numerator():
    """The two-term sum, rewritten over the codimension-4 denominator, has the
    printed degree-17 numerator with 12 nonzero coefficients.

    The displayed sum carries a typo (first numerator must be 1 - t + t^2,
    not 1 + t^2, for the printed N(t) to come out); with the corrected sum the
    degree-1 coefficient is 3, matching the three weight-1 ambient
    coordinates, not 4.  See the decisions ledger.
    """
    series = hs_icecream_a3()
    numerator = hs_numerator_wrt(series, A3_FAMILY_DENOMINATOR)
    printed = {0: 1, 4: -2, 5: -2, 6: -2, 7: 2, 8: 3, 9: 3, 10: 2,
               11: -2, 12: -2, 13: -2, 17: 1}
    assert numerator == UniPoly([printed.get(k, 0) for k in range(18)])
    assert sum(1 for c in numerator.coeffs if c) == 12
    assert hs_expand(series, 1)[1] == 3


def test_criterion_4_lemma1_series_identity(cases):
    """hs_lemma1 = hypersurface series for all 10 rows, both ways."""
    for case in cases:
        lhs = hs_lemma1(case.r, case.a, case.e)
        rhs = hs_of_hypersurface(
            [1, 1, case.a, case.r * case.a - 1, case.e], case.r * case.a
        )
        assert hs_equal(lhs, rhs)
        assert hs_expand(lhs, 20) == hs_expand(rhs, 20)


def test_criterion_5_terminality_suite(cases):
    for r in range(2, 51):
        for a in range(1, r):
            if gcd(a, r) == 1:
                assert reid_tai_terminal(CyclicQuotient(r, (1, a, r - a)))
    hits = set()
    for r in range(2, 11):
        for a in range(1, 11):
            m = r * a - 1
            if m == 1:
                hits.add((r, a))
                continue
            s = CyclicQuotient(m, (1, 1, a))
            if is_isolated(s) and reid_tai_terminal(s):
                hits.add((r, a))
    assert hits == {(2, 1), (3, 1), (2, 2)}
    for case in cases:
        point = CyclicQuotient(case.l, (1, case.r, case.r * case.a - 1))
        assert reid_tai_terminal(point)


def test_criterion_6_curve_classification():
    supports = {
        (2, (3,), 3): [(3, 0), (2, 1), (1, 2), (0, 3)],
        (3, (1, 3), 4): [(5, 0), (3, 1), (2, 3), (1, 5), (0, 7)],
        (3, (4, 0), 4): [(8, 0), (6, 1), (4, 2), (2, 3), (0, 4)],
        (4, (5, 0, 0), 5): [(15, 0), (12, 1), (9, 2), (6, 3), (3, 4), (0, 5)],
        (3, (3, 2), 5): [(8, 0), (6, 1), (4, 2), (2, 3), (1, 5), (0, 7)],
    }
    rng = random.Random(0)
    for (r, branches, mult), support in supports.items():
        terms = {
            mn: Fraction(rng.choice([k for k in range(-9, 10) if k]))
            for mn in support
        }
        result = classify(curves.OrbifoldEquation(r, Poly(curves.ORBINATES, terms)))
        assert isinstance(result, SingularityType)
        assert result.branches == branches
        assert multiplicity(result, r) == mult


def test_criterion_7_moduli_dimensions():
    assert [moduli_monomial_total(f) for f in ("T", "J", "TJ")] == [37, 35, 32]
    assert [moduli_dimension(f) for f in ("T", "J", "TJ")] == [36, 34, 31]


def test_criterion_8_pfaffian_unprojection_budget():
    """Both families, 20 seeded instantiations each, under 60 seconds."""
    start = time.monotonic()
    rng = random.Random(0)
    jobs = [
        (pfaffian.build_tom_family, pfaffian.random_tom_coefficients,
         lambda m: pfaffian.tom_check(m, pfaffian.PLANE_IDEAL_VARS, 2)),
        (pfaffian.build_jerry_family, pfaffian.random_jerry_coefficients,
         lambda m: pfaffian.jerry_check(m, pfaffian.PLANE_IDEAL_VARS, 3, 4)),
    ]
    for build, draw, format_check in jobs:
        for _ in range(20):
            matrix, unprojection = build(*draw(rng))
            system = pfaffian.max_pfaffians(matrix)
            degrees = sorted(
                p.weighted_degree().degree
                for p in system.pfaffians + unprojection.equations()
            )
            assert degrees == [4, 4, 5, 5, 6, 6, 6, 7, 8]
            for pf in system.pfaffians:
                assert pfaffian.monomial_ideal_contains(pf, pfaffian.PLANE_IDEAL_VARS)
            assert format_check(matrix)
            checks = pfaffian.unprojection_consistency(system, unprojection)
            assert len(checks) == 6 and all(c.ok for c in checks)
    assert time.monotonic() - start < 60


def test_criterion_9_a3_obstruction():
    report = a3_obstruction()
    assert report.discriminant_zero_when_abf_zero
    assert set(report.abf_elimination_order) == {"a", "b", "f"}
    assert report.residue_min_order >= 4
    assert report.quartic_zero_when_cdeg_zero
    assert set(report.cdeg_elimination_order) == {"c", "d", "e", "g"}


def test_criterion_10_minor_pullback():
    from fanoforge.curves import minor_presentation
    from fanoforge.poly import WeightSystem

    scalars = tuple(f"s{i}" for i in range(8))
    ring = WeightSystem(("x", "y", "z") + scalars, (1,) * 11)
    target = WeightSystem(("alpha", "beta") + scalars, (1,) * 10)
    alpha, beta = Poly.var(target, "alpha"), Poly.var(target, "beta")
    for r in (2, 3, 4):
        phi = Poly.var(ring, "s0") + sum(
            Poly.var(ring, s) * Poly.var(ring, v)
            for s, v in zip(scalars[1:4], ("x", "y", "z"))
        )
        psi = Poly.var(ring, "s4") + sum(
            Poly.var(ring, s) * Poly.var(ring, v)
            for s, v in zip(scalars[5:8], ("x", "y", "z"))
        )
        bind = {s: Poly.var(target, s) for s in scalars}
        bind.update({"x": alpha**r, "y": alpha * beta, "z": beta**r})
        _, minors = minor_presentation(r, phi, psi)
        pulled = [m.substitute(bind) for m in minors]
        gamma = alpha ** (r - 1) * phi.substitute(bind) + beta * psi.substitute(bind)
        assert pulled[0].is_zero()
        assert pulled[1] == alpha * gamma
        assert pulled[2] == beta ** (r - 1) * gamma


def test_intersection_family_degenerates_both_formats():
    """The common degeneration sits in both formats and its curve data is
    of type Gamma(3,2)."""
    rng = random.Random(0)
    sample = pfaffian.random_intersection_coefficients(rng)
    matrix, _ = pfaffian.build_tom_family(*sample)
    assert pfaffian.tom_check(matrix, pfaffian.PLANE_IDEAL_VARS, 2)
    assert pfaffian.jerry_check(matrix, pfaffian.PLANE_IDEAL_VARS, 3, 4)
    result = classify(_family_curve("intersection", sample))
    assert isinstance(result, SingularityType) and result.branches == (3, 2)
