"""Exact sparse multivariate polynomials over the rationals, with weighted variables.

A polynomial is a map from exponent tuples to Fraction coefficients; zero
coefficients are never stored, so two polynomials over the same weight system
are equal iff their term maps are equal.  All arithmetic is exact: there is no
floating point anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple

Exponent = tuple[int, ...]

Rational = Fraction


class IncompatibleRings(ValueError):
    """Raised when combining polynomials over different weight systems."""


class UndefinedDegree(ValueError):
    """Raised when asking for the degree of the zero polynomial."""


@dataclass(frozen=True)
class WeightSystem:
    """An ordered list of named variables with positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.names) != len(self.weights):
            raise ValueError("names and weights must have equal length")
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be unique")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    @classmethod
    def make(cls, pairs: Iterable[tuple[str, int]]) -> "WeightSystem":
        names, weights = zip(*pairs)
        return cls(tuple(names), tuple(weights))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def weighted_degree_of(self, exponent: Exponent) -> int:
        return sum(e * w for e, w in zip(exponent, self.weights))


class WeightedDegree(NamedTuple):
    degree: int
    homogeneous: bool


def _term_sort_key(exponent: Exponent):
    # graded lexicographic: total exponent first, then the vector itself
    return (sum(exponent), exponent)


class Poly:
    """Sparse polynomial over a :class:`WeightSystem` with Fraction coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: WeightSystem, terms: Mapping[Exponent, Fraction | int]):
        clean: dict[Exponent, Fraction] = {}
        n = len(ring)
        for exponent, coeff in terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if len(exponent) != n or any(e < 0 for e in exponent):
                raise ValueError(f"bad exponent vector {exponent!r}")
            clean[tuple(exponent)] = coeff
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ring: WeightSystem) -> "Poly":
        return cls(ring, {})

    @classmethod
    def const(cls, ring: WeightSystem, value) -> "Poly":
        return cls(ring, {(0,) * len(ring): Fraction(value)})

    @classmethod
    def var(cls, ring: WeightSystem, name: str) -> "Poly":
        exponent = [0] * len(ring)
        exponent[ring.index(name)] = 1
        return cls(ring, {tuple(exponent): Fraction(1)})

    @classmethod
    def monomial(cls, ring: WeightSystem, exponent: Exponent, coeff=1) -> "Poly":
        return cls(ring, {tuple(exponent): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def variables_used(self) -> set[str]:
        used = set()
        for exponent in self.terms:
            for name, e in zip(self.ring.names, exponent):
                if e:
                    used.add(name)
        return used

    # -- arithmetic --------------------------------------------------------

    def _check_ring(self, other: "Poly"):
        if self.ring != other.ring:
            raise IncompatibleRings(
                f"operands live over different weight systems: "
                f"{self.ring.names} vs {other.ring.names}"
            )

    def __add__(self, other: "Poly") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        self._check_ring(other)
        out = dict(self.terms)
        for exponent, coeff in other.terms.items():
            out[exponent] = out.get(exponent, Fraction(0)) + coeff
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.ring, other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(self.ring, {e: c * other for e, c in self.terms.items()})
        self._check_ring(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("exponent must be >= 0")
        result = Poly.const(self.ring, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- degrees -----------------------------------------------------------

    def weighted_degree(self) -> WeightedDegree:
        """Maximum weighted degree over all terms, and whether all terms share it."""
        if not self.terms:
            raise UndefinedDegree("the zero polynomial has no degree")
        degrees = {self.ring.weighted_degree_of(e) for e in self.terms}
        return WeightedDegree(max(degrees), len(degrees) == 1)

    def is_homogeneous_of(self, degree: int) -> bool:
        if not self.terms:
            return True
        wd = self.weighted_degree()
        return wd.homogeneous and wd.degree == degree

    def degree_in(self, names: Iterable[str]) -> int:
        """Max over terms of the exponent sum restricted to the given variables."""
        idx = [self.ring.index(n) for n in names]
        if not self.terms:
            raise UndefinedDegree("the zero polynomial has no degree")
        return max(sum(e[i] for i in idx) for e in self.terms)

    def min_degree_in(self, names: Iterable[str]) -> int:
        """Min over terms of the exponent sum restricted to the given variables."""
        idx = [self.ring.index(n) for n in names]
        if not self.terms:
            raise UndefinedDegree("the zero polynomial has no degree")
        return min(sum(e[i] for i in idx) for e in self.terms)

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly"]) -> "Poly":
        """Compose with the given variable bindings, all over one target ring.

        Every variable actually appearing in the polynomial must be bound.
        """
        if not bindings:
            raise ValueError("no bindings given")
        target = next(iter(bindings.values())).ring
        for name, value in bindings.items():
            if value.ring != target:
                raise IncompatibleRings("bindings must share a target weight system")
        for name in sorted(self.variables_used()):
            if name not in bindings:
                raise KeyError(f"unbound variable {name!r}")
        powers: dict[tuple[str, int], Poly] = {}

        def power(name: str, n: int) -> Poly:
            key = (name, n)
            if key not in powers:
                powers[key] = bindings[name] ** n
            return powers[key]

        result = Poly.zero(target)
        for exponent, coeff in self.terms.items():
            term = Poly.const(target, coeff)
            for name, e in zip(self.ring.names, exponent):
                if e:
                    term = term * power(name, e)
            result = result + term
        return result

    # -- printing ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _term_sort_key(t[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for k, (exponent, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(self.ring.names, exponent):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            text = "*".join(factors)
            if k == 0:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f" + {text}" if coeff > 0 else f" - {text}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Poly({self})"


def count_monomials(ring: WeightSystem | tuple[int, ...], degree: int) -> int:
    """Number of monomials of exact weighted degree ``degree``.

    Counts exponent vectors with sum(e_i * w_i) == degree by exhaustive
    recursion over the variables.
    """
    weights = ring.weights if isinstance(ring, WeightSystem) else tuple(ring)
    if degree < 0:
        return 0
    return _count(weights, degree)


@lru_cache(maxsize=None)
def _count(weights: tuple[int, ...], degree: int) -> int:
    if not weights:
        return 1 if degree == 0 else 0
    w = weights[0]
    return sum(_count(weights[1:], degree - w * k) for k in range(degree // w + 1))


def monomials_of_degree(ring: WeightSystem, degree: int) -> list[Exponent]:
    """All exponent vectors of exact weighted degree ``degree``, in a fixed order."""
    out: list[Exponent] = []

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == len(ring):
            if remaining == 0:
                out.append(prefix)
            return
        w = ring.weights[i]
        for k in range(remaining // w + 1):
            rec(i + 1, remaining - w * k, prefix + (k,))

    rec(0, degree, ())
    return out


# ---------------------------------------------------------------------------
# Dense univariate polynomials (used for Hilbert series numerators)
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial in t with Fraction coefficients.

    Trailing zeros are trimmed; the zero polynomial has degree None.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def one(cls) -> "UniPoly":
        return cls([1])

    @classmethod
    def one_minus_t_power(cls, k: int) -> "UniPoly":
        """The factor 1 - t^k."""
        if k < 1:
            raise ValueError("power must be >= 1")
        return cls([1] + [0] * (k - 1) + [-1])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        remainder = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quotient = [Fraction(0)] * max(len(remainder) - dd, 0)
        for k in range(len(remainder) - 1, dd - 1, -1):
            c = remainder[k]
            if c == 0:
                continue
            q = c / lead
            quotient[k - dd] = q
            for j, b in enumerate(divisor.coeffs):
                remainder[k - dd + j] -= q * b
        return UniPoly(quotient), UniPoly(remainder)

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self, other
        while b:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def reciprocal(self) -> "UniPoly":
        """Coefficient-reversed polynomial t^deg * p(1/t)."""
        return UniPoly(list(reversed(self.coeffs)))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}t" if k == 1 else f"{mag}t^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"
