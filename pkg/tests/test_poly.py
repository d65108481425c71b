"""Polynomial arithmetic: ring axioms, substitution, monomial counting."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fanoforge.poly import (
    IncompatibleRings,
    Poly,
    UniPoly,
    WeightSystem,
    count_monomials,
    monomials_of_degree,
)

RING = WeightSystem(("x", "y", "z"), (1, 2, 3))


def rand_polys():
    exponents = st.tuples(*(st.integers(0, 3) for _ in range(3)))
    coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=7)
    return st.dictionaries(exponents, coeffs, max_size=5).map(
        lambda terms: Poly(RING, terms)
    )


@settings(max_examples=60, deadline=None)
@given(rand_polys(), rand_polys(), rand_polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + Poly.zero(RING) == p
    assert p * Poly.const(RING, 1) == p
    assert p - p == Poly.zero(RING)


@settings(max_examples=40, deadline=None)
@given(rand_polys(), rand_polys())
def test_substitute_is_homomorphism(p, q):
    target = WeightSystem(("alpha", "beta"), (1, 1))
    alpha = Poly.var(target, "alpha")
    beta = Poly.var(target, "beta")
    bindings = {"x": alpha + beta, "y": alpha * beta, "z": beta**3 - alpha}
    sub = lambda f: f.substitute(bindings)
    assert sub(p * q) == sub(p) * sub(q)
    assert sub(p + q) == sub(p) + sub(q)


def test_substitute_identity_and_power():
    assert Poly.var(RING, "x").substitute({"x": Poly.var(RING, "x")}) == Poly.var(RING, "x")
    target = WeightSystem(("alpha", "beta"), (1, 1))
    y4 = Poly.var(RING, "y") ** 4
    image = y4.substitute({"y": Poly.var(target, "alpha") * Poly.var(target, "beta")})
    assert image == (Poly.var(target, "alpha") * Poly.var(target, "beta")) ** 4


def test_homogeneous_degree_is_additive():
    p = Poly.var(RING, "x") * Poly.var(RING, "y")  # degree 3
    q = Poly.var(RING, "z") ** 2  # degree 6
    assert p.weighted_degree().homogeneous
    assert (p * q).weighted_degree() == (9, True)


def test_mixed_rings_rejected():
    other = WeightSystem(("u",), (1,))
    with pytest.raises(IncompatibleRings):
        Poly.var(RING, "x") + Poly.var(other, "u")


def test_count_monomials_oracles():
    assert count_monomials((1, 1, 1, 2), 3) == 13
    assert count_monomials((1, 1, 1, 2), 2) == 7
    assert count_monomials((1, 1, 1, 2), 0) == 1
    for d in range(8):
        assert count_monomials((1, 1, 1, 2), d) == len(
            monomials_of_degree(WeightSystem(("u", "x", "y", "z"), (1, 1, 1, 2)), d)
        )


def test_count_monomials_matches_series_expansion():
    # coefficient of t^d in prod 1/(1 - t^w)
    from fanoforge.hilbert import hs_expand, hs_of_wps

    weights = (1, 3, 2)
    coeffs = hs_expand(hs_of_wps(list(weights)), 15)
    for d in range(16):
        assert coeffs[d] == count_monomials(weights, d)
    assert coeffs[14] == 24


def test_canonical_printing_is_graded():
    p = Poly(RING, {(0, 0, 1): 1, (3, 0, 0): Fraction(2, 3), (1, 1, 0): -1})
    assert str(p) == "2/3*x^3 - x*y + z"


def test_unipoly_divmod_and_gcd():
    a = UniPoly([-1, 0, 0, 1])  # t^3 - 1
    b = UniPoly([-1, 1])  # t - 1
    q, r = a.divmod(b)
    assert r.is_zero() and q == UniPoly([1, 1, 1])
    assert a.gcd(UniPoly([1, 1])) == UniPoly([1])  # gcd with t + 1
    assert a.gcd(b) == UniPoly([-1, 1])


def test_unipoly_reciprocal():
    p = UniPoly([1, 2, 3])
    assert p.reciprocal() == UniPoly([3, 2, 1])
