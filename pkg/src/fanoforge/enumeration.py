"""Case enumeration for the Sarkisov-link construction and its cross-checks.

Enumerates the admissible (r, a, e) embedding cases with their derived
invariants, computes the numerical data of the constructed Fano 3-folds for
the divisible cases, and diffs everything against the embedded registry.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from . import registry
from .poly import WeightSystem, count_monomials
from .singular import CyclicQuotient, is_isolated, reid_tai_terminal


class LinkNotConstructed(ValueError):
    """Raised when asking for link invariants of a non-divisible case."""


@dataclass(frozen=True)
class EmbeddingCase:
    """One admissible (r, a, e) with the invariants derived from it."""

    r: int
    a: int
    e: int
    ambient: tuple[int, ...]
    hypersurface_degree: int | None
    q: int
    qprime: int
    l: int
    d: int
    divisible: bool

    @property
    def x_form(self) -> str:
        body = format_wps(self.ambient)
        if self.hypersurface_degree is None:
            return body
        return f"X{self.hypersurface_degree} in {body}"

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "a": self.a,
            "e": self.e,
            "q": self.q,
            "qprime": self.qprime,
            "l": self.l,
            "d": self.d,
            "divisible": self.divisible,
        }


@dataclass(frozen=True)
class LinkResult:
    """Numerical invariants of the Fano 3-fold produced by a divisible case."""

    label: str
    a_cubed: Fraction
    b_cubed: Fraction
    q_y: int
    index_l_point: CyclicQuotient
    discrepancy: Fraction
    singularity_types: tuple[tuple[int, ...], ...]
    rho_y: int

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "A3": str(self.a_cubed),
            "B3": str(self.b_cubed),
            "qY": self.q_y,
            "point": str(self.index_l_point),
            "discrepancy": str(self.discrepancy),
            "types": [list(t) for t in self.singularity_types],
            "rhoY": self.rho_y,
            "grdb": registry.y_row(self.label).grdb,
        }


def format_wps(weights: tuple[int, ...]) -> str:
    """Compact text form of a weighted projective space, e.g. P(1^3,2)."""
    ws = sorted(weights)
    if all(w == 1 for w in ws):
        return f"P^{len(ws) - 1}"
    parts = []
    for w in sorted(set(ws)):
        n = ws.count(w)
        parts.append(f"{w}^{n}" if n > 1 else f"{w}")
    return "P(" + ",".join(parts) + ")"


def derive_invariants(r: int, a: int, e: int) -> EmbeddingCase:
    """Derived invariants for the exceptional surface P(1, r, ra-1) inside X."""
    if r < 2 or a < 1 or not 1 <= e <= r * a:
        raise ValueError(f"out of range: (r, a, e) = ({r}, {a}, {e})")
    q = a + e + 1
    l = r * a + r - 1
    d = l + r * e
    assert d == q * r - 1
    if e == r * a:
        ambient = (1, 1, a, r * a - 1)
        hypersurface_degree = None
    else:
        ambient = (1, 1, a, r * a - 1, e)
        hypersurface_degree = r * a
    divisible = (r * a - 1) == 1 or d % (r * a - 1) == 0
    return EmbeddingCase(
        r=r, a=a, e=e, ambient=ambient, hypersurface_degree=hypersurface_degree,
        q=q, qprime=a + 1, l=l, d=d, divisible=divisible,
    )


def _index_point_terminal(r: int, a: int, e: int) -> bool:
    """Terminality of the 1/(ra-1)(1, a, e) point, for ra - 1 > 1."""
    m = r * a - 1
    s = CyclicQuotient(m, (1, a % m, e % m))
    if not is_isolated(s):
        return False
    return reid_tai_terminal(s)


def _passes_exclusion_rules(r: int, a: int, e: int) -> bool:
    ra = r * a
    if (a + 1) % (ra - 1) == 0:
        return True
    if e == ra - 2 and 2 * e <= ra:
        return True
    if e == ra - a - 1 and 2 * e <= ra and (r != 2 or a <= 3):
        return True
    return False


def enumerate_cases(r_max: int, a_max: int) -> list[EmbeddingCase]:
    """All admissible cases with r <= r_max, a <= a_max, in table order.

    The surface is a toric divisor (e = ra) when a(r-1) <= 2; otherwise a
    hypersurface case with e < ra subject to terminality of the index point
    plus the transcribed exclusion rules.
    """
    if r_max < 2 or a_max < 1:
        raise ValueError("bounds must satisfy r_max >= 2, a_max >= 1")
    toric: list[EmbeddingCase] = []
    hyper: list[EmbeddingCase] = []
    for r in range(2, r_max + 1):
        for a in range(1, a_max + 1):
            if a * (r - 1) <= 2:
                toric.append(derive_invariants(r, a, r * a))
            for e in range(1, r * a):
                if r * a - 1 > 1 and not _index_point_terminal(r, a, e):
                    continue
                if not _passes_exclusion_rules(r, a, e):
                    continue
                hyper.append(derive_invariants(r, a, e))
    toric.sort(key=lambda c: (c.r * c.a, c.e))
    hyper.sort(key=lambda c: (c.r * c.a, c.e, -c.r))
    return toric + hyper


def flagged_extras(r_max: int, a_max: int) -> list[EmbeddingCase]:
    """Divisible cases beyond the six labelled ones, at larger bounds.

    The bounding argument is not fully algorithmic; anything the encoded
    rules let through is reported here rather than silently asserted away.
    """
    extras = []
    for case in enumerate_cases(r_max, a_max):
        if case.divisible and registry.label_for(case.r, case.a, case.e) is None:
            extras.append(case)
    return extras


def degree_of_X(weights: tuple[int, ...], hypersurface_degrees: tuple[int, ...] = ()) -> Fraction:
    """Anticanonical-cycle degree prod(d_i) / prod(w_j) of a complete intersection."""
    if any(w < 1 for w in weights):
        raise ValueError("weights must be positive")
    return Fraction(prod(hypersurface_degrees, start=1), prod(weights))


def degree_of_case(case: EmbeddingCase) -> Fraction:
    degrees = () if case.hypersurface_degree is None else (case.hypersurface_degree,)
    return degree_of_X(case.ambient, degrees)


def link_result(case: EmbeddingCase, a_cubed: Fraction | None = None) -> LinkResult:
    """Invariants of the blown-down Fano for a divisible case."""
    if not case.divisible:
        raise LinkNotConstructed(
            f"(r,a,e)=({case.r},{case.a},{case.e}): degree {case.d} is not "
            f"divisible by {case.r * case.a - 1}, no link is constructed"
        )
    if a_cubed is None:
        a_cubed = degree_of_case(case)
    label = registry.label_for(case.r, case.a, case.e)
    if label is None:
        raise LinkNotConstructed(f"no labelled case for (r,a,e)=({case.r},{case.a},{case.e})")
    xrow = registry.x_row(label)
    yrow = registry.y_row(label)
    return LinkResult(
        label=label,
        a_cubed=a_cubed,
        b_cubed=Fraction(case.d, case.l) * a_cubed,
        q_y=case.a + 1,
        index_l_point=CyclicQuotient(case.l, (1, case.r, case.r * case.a - 1)),
        discrepancy=Fraction(1, case.l),
        singularity_types=xrow.singularity_types,
        rho_y=yrow.rho_y,
    )


# Coefficient degree lists for the three deformation families of the two
# index-2, degree-7/5 constructions; coefficients live in C[u,x,y,z] with
# weights (1,1,1,2).
MODULI_RING = WeightSystem(("u", "x", "y", "z"), (1, 1, 1, 2))

FAMILY_COEFFICIENT_DEGREES: dict[str, tuple[int, ...]] = {
    "T": (3, 3, 2, 1, 0),
    "J": (2, 2, 2, 2, 2),
    "TJ": (2, 2, 2, 2, 1, 0),
}


def moduli_monomial_total(family: str) -> int:
    degrees = FAMILY_COEFFICIENT_DEGREES[family]
    return sum(count_monomials(MODULI_RING, d) for d in degrees)


def moduli_dimension(family: str) -> int:
    """Dimension of the family: total monomial count minus one overall scale."""
    return moduli_monomial_total(family) - 1


def registry_check() -> list[dict]:
    """Diff every computed quantity against the registry; empty diff = pass."""
    diff: list[dict] = []

    def expect(row: str, field: str, computed, recorded):
        if computed != recorded:
            diff.append(
                {"row": row, "field": field,
                 "computed": str(computed), "expected": str(recorded)}
            )

    cases = enumerate_cases(4, 3)
    expect("table2", "row count", len(cases), len(registry.CASE_TABLE))
    for case, row in zip(cases, registry.CASE_TABLE):
        name = f"table2 ({row.r},{row.a},e={row.e})"
        expect(name, "x_form", case.x_form, row.x_form)
        for field in ("r", "a", "e", "q", "qprime", "l", "d", "divisible"):
            expect(name, field, getattr(case, field), getattr(row, field))

    by_key = {(c.r, c.a, c.e): c for c in cases}
    for xrow in registry.X_TABLE:
        case = by_key.get((xrow.r, xrow.a, xrow.e))
        if case is None:
            diff.append({"row": xrow.label, "field": "case",
                         "computed": "missing", "expected": f"({xrow.r},{xrow.a},{xrow.e})"})
            continue
        expect(xrow.label, "x_form", case.x_form, xrow.x_form)
        expect(xrow.label, "d", case.d, xrow.d)
        expect(xrow.label, "q_X", case.q, xrow.q_x)
        a_cubed = degree_of_case(case)
        expect(xrow.label, "A3", a_cubed, xrow.a_cubed)
        link = link_result(case, a_cubed)
        yrow = registry.y_row(xrow.label)
        expect(xrow.label, "B3", link.b_cubed, yrow.b_cubed)
        expect(xrow.label, "q_Y", link.q_y, yrow.q_y)
        from .singular import equivalent
        recorded_point = CyclicQuotient.parse(yrow.high_index_point)
        if not equivalent(link.index_l_point, recorded_point):
            diff.append({"row": xrow.label, "field": "index-l point",
                         "computed": str(link.index_l_point),
                         "expected": str(recorded_point)})
        expect(xrow.label, "discrepancy", link.discrepancy, Fraction(1, case.l))
    return diff
