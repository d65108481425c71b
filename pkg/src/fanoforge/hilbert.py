"""Hilbert series as exact rational functions num(t) / prod(1 - t^k).

Series are kept in factored-denominator form and never put into a closed
normal form; equality is decided by cross-multiplication of numerators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import UniPoly


class NonExactRewrite(ValueError):
    """Raised when rewriting a series over a denominator leaves a remainder."""


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / prod over k in denominator of (1 - t^k)."""

    numerator: UniPoly
    denominator: tuple[int, ...]

    def __post_init__(self):
        if any(k < 1 for k in self.denominator):
            raise ValueError("denominator exponents must be >= 1")
        object.__setattr__(self, "denominator", tuple(sorted(self.denominator)))

    def denominator_poly(self) -> UniPoly:
        p = UniPoly.one()
        for k in self.denominator:
            p = p * UniPoly.one_minus_t_power(k)
        return p

    def to_json(self) -> dict:
        assert all(c.denominator == 1 for c in self.numerator.coeffs)
        return {
            "numerator": [int(c) for c in self.numerator.coeffs],
            "denominator": list(self.denominator),
        }

    def __str__(self) -> str:
        den = " * ".join(
            f"(1-t^{k})" if k > 1 else "(1-t)" for k in self.denominator
        )
        return f"({self.numerator}) / {den}" if den else f"({self.numerator})"


def hs_of_wps(weights: list[int]) -> HilbertSeries:
    """Series of a weighted projective space: 1 / prod(1 - t^w)."""
    if not weights:
        raise ValueError("weight list must be nonempty")
    if any(w < 1 for w in weights):
        raise ValueError("weights must be >= 1")
    return HilbertSeries(UniPoly.one(), tuple(weights))


def hs_of_hypersurface(weights: list[int], d: int) -> HilbertSeries:
    """Series of a degree-d hypersurface: (1 - t^d) / prod(1 - t^w).

    d = 0 gives the zero series (degenerate, but representable).
    """
    if not weights:
        raise ValueError("weight list must be nonempty")
    if d < 0:
        raise ValueError("degree must be >= 0")
    numerator = UniPoly.zero() if d == 0 else UniPoly.one_minus_t_power(d)
    return HilbertSeries(numerator, tuple(weights))


def hs_lemma1(r: int, a: int, e: int) -> HilbertSeries:
    """(1 - t^{ra}) / ((1-t)^2 (1-t^a) (1-t^{ra-1}) (1-t^e))."""
    if r < 2 or a < 1 or e < 1:
        raise ValueError("need r >= 2, a >= 1, e >= 1")
    return HilbertSeries(
        UniPoly.one_minus_t_power(r * a), (1, 1, a, r * a - 1, e)
    )


def hs_add(a: HilbertSeries, b: HilbertSeries) -> HilbertSeries:
    """Exact sum over the concatenated denominator."""
    num = a.numerator * b.denominator_poly() + b.numerator * a.denominator_poly()
    return HilbertSeries(num, a.denominator + b.denominator)


def hs_equal(a: HilbertSeries, b: HilbertSeries) -> bool:
    """Equality by cross-multiplication of numerators."""
    return a.numerator * b.denominator_poly() == b.numerator * a.denominator_poly()


def hs_expand(a: HilbertSeries, n: int) -> list[Fraction]:
    """Series coefficients of t^0 .. t^n."""
    if n < 0:
        raise ValueError("expansion order must be >= 0")
    coeffs = [a.numerator[k] for k in range(n + 1)]
    for k in a.denominator:
        # multiply by 1/(1 - t^k), i.e. prefix sums with stride k
        for i in range(k, n + 1):
            coeffs[i] += coeffs[i - k]
    return coeffs


def hs_numerator_wrt(a: HilbertSeries, target_denominator: tuple[int, ...]) -> UniPoly:
    """Unique numerator of the series written over prod(1 - t^k) for k in target.

    Raises NonExactRewrite when the rewrite is not exact.
    """
    target = UniPoly.one()
    for k in sorted(target_denominator):
        target = target * UniPoly.one_minus_t_power(k)
    product = a.numerator * target
    quotient, remainder = product.divmod(a.denominator_poly())
    if remainder:
        raise NonExactRewrite(
            f"rewrite leaves a remainder of degree {remainder.degree}"
        )
    return quotient


def hs_icecream_a3() -> HilbertSeries:
    """The two-term sum (1-t+t^2)/(1-t)^4 + (t^2+t^4)/((1-t)^3 (1-t^5)).

    Rewritten over prod (1-t^k) for k in (1,1,1,2,2,3,4,5) the numerator is
    the degree-17 integer polynomial with leading block 1 - 2t^4 - 2t^5 - 2t^6.
    """
    first = HilbertSeries(UniPoly([1, -1, 1]), (1, 1, 1, 1))
    second = HilbertSeries(UniPoly([0, 0, 1, 0, 1]), (1, 1, 1, 5))
    return hs_add(first, second)


# Denominator over which the index-2 degree-7/5 family's numerator is displayed.
A3_FAMILY_DENOMINATOR: tuple[int, ...] = (1, 1, 1, 2, 2, 3, 4, 5)
