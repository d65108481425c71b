"""Cyclic quotient singularities: isolation, terminality, canonical forms."""

from math import gcd

import pytest

from fanoforge.singular import (
    CyclicQuotient,
    NotIsolated,
    canonical_form,
    equivalent,
    is_isolated,
    reid_tai_terminal,
)


def test_parse_and_print():
    s = CyclicQuotient.parse("1/5(1,2,4)")
    assert (s.r, s.weights) == (5, (1, 2, 4))
    assert str(s) == "1/5(1,2,4)"
    with pytest.raises(ValueError):
        CyclicQuotient.parse("5(1,2,4)")


def test_isolation():
    assert is_isolated(CyclicQuotient(5, (1, 2, 4)))
    assert not is_isolated(CyclicQuotient(4, (1, 2, 3)))  # gcd(2,4) = 2


def test_classified_terminal_family():
    for r in range(2, 51):
        for a in range(1, r):
            if gcd(a, r) != 1:
                continue
            assert reid_tai_terminal(CyclicQuotient(r, (1, a, r - a)))


def test_non_terminal_example():
    # 1/3(1,1,1) has Reid-Tai sum 1 for k=1, not > 1
    assert not reid_tai_terminal(CyclicQuotient(3, (1, 1, 1)))


def test_lemma1_toric_scan():
    hits = set()
    for r in range(2, 11):
        for a in range(1, 11):
            m = r * a - 1
            if m == 1:
                hits.add((r, a))  # smooth point, vacuously fine
                continue
            s = CyclicQuotient(m, (1, 1, a % m))
            if is_isolated(s) and reid_tai_terminal(s):
                hits.add((r, a))
    assert hits == {(2, 1), (3, 1), (2, 2)}


def test_canonical_form_identifications():
    assert equivalent(CyclicQuotient(5, (1, 3, 2)), CyclicQuotient(5, (1, 2, 4)))
    assert equivalent(CyclicQuotient(7, (1, 4, 3)), CyclicQuotient(7, (1, 2, 6)))
    s = CyclicQuotient(2, (1, 1, 1))
    assert canonical_form(s) == s
    assert not equivalent(CyclicQuotient(5, (1, 2, 4)), CyclicQuotient(5, (1, 1, 4)))


def test_terminality_is_equivalence_invariant():
    for r in range(2, 12):
        for b in range(1, r):
            for c in range(1, r):
                s = CyclicQuotient(r, (1, b, c))
                if not is_isolated(s):
                    continue
                assert reid_tai_terminal(canonical_form(s)) == reid_tai_terminal(s)


def test_canonical_form_requires_isolated():
    with pytest.raises(NotIsolated):
        canonical_form(CyclicQuotient(4, (1, 2, 3)))
