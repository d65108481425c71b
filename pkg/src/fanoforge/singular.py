"""Cyclic quotient singularities 1/r(a,b,c): isolation, terminality, canonical forms.

A smooth point is modelled as r = 1 so that degenerate rows of the case
enumeration flow through the same code paths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class NotIsolated(ValueError):
    """Raised for operations that require an isolated cyclic quotient."""


@dataclass(frozen=True)
class CyclicQuotient:
    """The quotient singularity 1/r(w1,w2,w3), weights reduced mod r."""

    r: int
    weights: tuple[int, int, int]

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("order r must be >= 1")
        if len(self.weights) != 3:
            raise ValueError("exactly three weights expected")
        object.__setattr__(self, "weights", tuple(w % self.r for w in self.weights))

    @classmethod
    def parse(cls, text: str) -> "CyclicQuotient":
        """Parse the text form "1/r(a,b,c)"."""
        m = re.fullmatch(r"\s*1/(\d+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"cannot parse cyclic quotient {text!r}")
        r, a, b, c = map(int, m.groups())
        return cls(r, (a, b, c))

    def __str__(self) -> str:
        return f"1/{self.r}({self.weights[0]},{self.weights[1]},{self.weights[2]})"


def is_isolated(s: CyclicQuotient) -> bool:
    """True iff every weight is coprime to r (always true for a smooth point)."""
    if s.r == 1:
        return True
    return all(gcd(w, s.r) == 1 for w in s.weights)


def reid_tai_terminal(s: CyclicQuotient) -> bool:
    """Reid-Tai criterion for an isolated cyclic quotient 3-fold singularity.

    Terminal iff for every k = 1..r-1 the age sum(frac(k*w_i/r)) exceeds 1.
    """
    if not is_isolated(s):
        raise NotIsolated(f"{s} is not isolated")
    r = s.r
    if r == 1:
        return True
    for k in range(1, r):
        age = sum(Fraction(k * w % r, r) for w in s.weights)
        if age <= 1:
            return False
    return True


def canonical_form(s: CyclicQuotient) -> CyclicQuotient:
    """Lexicographically minimal representative under units mod r and permutations.

    Two singularities are equivalent iff their canonical forms are equal.
    """
    if not is_isolated(s):
        raise NotIsolated(f"{s} is not isolated")
    r = s.r
    if r == 1:
        return CyclicQuotient(1, (0, 0, 0))
    best = None
    for k in range(1, r):
        if gcd(k, r) != 1:
            continue
        scaled = tuple(sorted(k * w % r for w in s.weights))
        if best is None or scaled < best:
            best = scaled
    return CyclicQuotient(r, best)


def equivalent(a: CyclicQuotient, b: CyclicQuotient) -> bool:
    return canonical_form(a) == canonical_form(b)
