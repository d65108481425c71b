"""Pfaffian systems, Tom/Jerry formats, ideal membership and unprojection
consistency, including injected-fault detection."""

import random
from fractions import Fraction

import pytest

from fanoforge import pfaffian
from fanoforge.pfaffian import (
    AMBIENT,
    PLANE_IDEAL_VARS,
    CoefficientError,
    DegreePatternError,
    SkewMatrix5,
    UnprojectionData,
    build_jerry_family,
    build_tom_family,
    ideal_membership_bounded,
    jerry_check,
    max_pfaffians,
    monomial_ideal_contains,
    pf4,
    random_jerry_coefficients,
    random_tom_coefficients,
    tom_check,
    unprojection_consistency,
)
from fanoforge.poly import Poly


def det4(m):
    """Determinant by Laplace expansion, for the Pf^2 = det oracle."""
    if len(m) == 1:
        return m[0][0]
    total = Fraction(0)
    for j in range(len(m)):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det4(minor)
    return total


def test_pfaffian_squared_is_determinant():
    rng = random.Random(42)
    for _ in range(25):
        upper = [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(6)]
        a12, a13, a14, a23, a24, a34 = upper
        matrix = [
            [0, a12, a13, a14],
            [-a12, 0, a23, a24],
            [-a13, -a23, 0, a34],
            [-a14, -a24, -a34, 0],
        ]
        const = lambda v: Poly.const(AMBIENT, v)
        pf = pf4(*(const(v) for v in upper)).coefficient((0,) * 7)
        assert pf * pf == det4(matrix)


def tom_instance(seed=0):
    return build_tom_family(*random_tom_coefficients(random.Random(seed)))


def jerry_instance(seed=0):
    return build_jerry_family(*random_jerry_coefficients(random.Random(seed)))


def test_equation_degrees():
    for matrix, unprojection in (tom_instance(), jerry_instance()):
        system = max_pfaffians(matrix)
        degrees = sorted(
            p.weighted_degree().degree
            for p in system.pfaffians + unprojection.equations()
        )
        assert degrees == [4, 4, 5, 5, 6, 6, 6, 7, 8]


def test_pfaffians_in_plane_ideal():
    for matrix, _ in (tom_instance(3), jerry_instance(3)):
        for pf in max_pfaffians(matrix).pfaffians:
            assert monomial_ideal_contains(pf, PLANE_IDEAL_VARS)
    xi2 = Poly.var(AMBIENT, "xi") ** 2
    assert not monomial_ideal_contains(xi2, PLANE_IDEAL_VARS)


def test_format_checks():
    tom_matrix, _ = tom_instance(1)
    jerry_matrix, _ = jerry_instance(1)
    assert tom_check(tom_matrix, PLANE_IDEAL_VARS, 2)
    assert jerry_check(jerry_matrix, PLANE_IDEAL_VARS, 3, 4)
    # a generic Tom matrix is not in Jerry format and vice versa
    assert not jerry_check(tom_matrix, PLANE_IDEAL_VARS, 3, 4)
    assert not tom_check(jerry_matrix, PLANE_IDEAL_VARS, 2)


def test_tampered_entry_breaks_tom_format():
    matrix, _ = tom_instance(2)
    entries = dict(matrix.entries)
    entries[(1, 5)] = Poly.var(AMBIENT, "xi")  # degree 2 but off the plane ideal
    tampered = SkewMatrix5(entries)
    assert not tom_check(tampered, PLANE_IDEAL_VARS, 2)


def test_degree_pattern_enforced():
    matrix, _ = tom_instance(2)
    entries = dict(matrix.entries)
    entries[(1, 2)] = Poly.var(AMBIENT, "x")  # degree 1, needs 4
    with pytest.raises(DegreePatternError):
        SkewMatrix5(entries)
    entries.pop((1, 2))
    with pytest.raises(DegreePatternError):
        SkewMatrix5(entries)


def test_coefficient_validation():
    good = random_tom_coefficients(random.Random(5))
    bad = (Poly.var(AMBIENT, "z"),) + good[1:]  # wrong degree/variables for a'
    with pytest.raises(CoefficientError):
        build_tom_family(*bad)


def test_membership_certificates_are_self_verifying():
    matrix, unprojection = tom_instance(7)
    system = max_pfaffians(matrix)
    generators = list(system.pfaffians)
    x = Poly.var(AMBIENT, "x")
    target = x * generators[0]
    certificate = ideal_membership_bounded(target, generators)
    assert certificate is not None
    assert certificate.verify(target, generators)
    # and a homogeneous non-member is rejected
    xi2 = Poly.var(AMBIENT, "xi") ** 2
    assert ideal_membership_bounded(xi2, generators) is None


def test_unprojection_consistency_both_families():
    for matrix, unprojection in (tom_instance(11), jerry_instance(11)):
        checks = unprojection_consistency(max_pfaffians(matrix), unprojection)
        assert len(checks) == 6
        assert all(c.ok for c in checks)


def test_tampered_unprojection_fails_a_pair():
    matrix, unprojection = tom_instance(13)
    xi = Poly.var(AMBIENT, "xi")
    tampered = UnprojectionData(
        g_x=unprojection.g_x + xi**3,
        g_y=unprojection.g_y,
        g_z=unprojection.g_z,
        g_nu=unprojection.g_nu,
    )
    checks = unprojection_consistency(max_pfaffians(matrix), tampered)
    assert any(not c.ok for c in checks)


def test_matrix_json_round_trips_entry_text():
    matrix, _ = tom_instance(17)
    payload = matrix.to_json()
    from fanoforge.parsing import parse_poly

    for key, text in payload["entries"].items():
        i, j = int(key[0]), int(key[1])
        assert parse_poly(text, AMBIENT) == matrix.entries[(i, j)]
