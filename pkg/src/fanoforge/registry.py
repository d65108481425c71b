"""Embedded reference tables for the six constructed Fano families.

These records are ground truth for the cross-checks in the enumeration
module.  Fields marked recorded-only (codimension, full baskets, GRDB ids,
Picard ranks, component counts) are echoed, never derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CaseRow:
    """One row of the (r, a, e) case table."""

    x_form: str
    r: int
    a: int
    e: int
    q: int
    qprime: int
    l: int
    d: int
    divisible: bool


@dataclass(frozen=True)
class XRow:
    """Input Fano 3-fold data for one of the six divisible cases."""

    label: str
    x_form: str
    codim: int
    q_x: int
    a_cubed: Fraction
    basket: tuple[str, ...]
    r: int
    a: int
    e: int
    d: int
    singularity_types: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class YRow:
    """Output Fano 3-fold data for one of the six divisible cases."""

    label: str
    ambient_weights: tuple[int, ...]
    rho_y: int
    codim: int
    q_y: int
    b_cubed: Fraction
    basket: tuple[str, ...]
    high_index_point: str
    grdb: int
    components: int = 1


CASE_TABLE: tuple[CaseRow, ...] = (
    CaseRow("P^3", 2, 1, 2, 4, 2, 3, 7, True),
    CaseRow("P(1^3,2)", 3, 1, 3, 5, 2, 5, 14, True),
    CaseRow("P(1^2,2,3)", 2, 2, 4, 7, 3, 5, 13, False),
    CaseRow("X2 in P^4", 2, 1, 1, 3, 2, 3, 5, True),
    CaseRow("X3 in P(1^4,2)", 3, 1, 1, 3, 2, 5, 8, True),
    CaseRow("X4 in P(1^3,2,3)", 2, 2, 1, 4, 3, 5, 7, False),
    CaseRow("X4 in P(1^3,2,3)", 4, 1, 2, 4, 2, 7, 15, True),
    CaseRow("X4 in P(1^2,2^2,3)", 2, 2, 2, 5, 3, 5, 9, True),
    CaseRow("X6 in P(1^2,2,3,5)", 2, 3, 2, 6, 4, 7, 11, False),
    CaseRow("X6 in P(1^2,2,3,5)", 3, 2, 3, 6, 3, 8, 17, False),
)


X_TABLE: tuple[XRow, ...] = (
    XRow("A.1", "P^3", 0, 4, Fraction(1), (), 2, 1, 2, 7, ((3,),)),
    XRow("A.2", "X2 in P^4", 1, 3, Fraction(2), (), 2, 1, 1, 5, ((3,),)),
    XRow(
        "A.3", "P(1^3,2)", 0, 5, Fraction(1, 2), ("1/2(1,1,1)",),
        3, 1, 3, 14, ((1, 3), (4, 0)),
    ),
    XRow(
        "A.4", "X4 in P(1^2,2^2,3)", 1, 5, Fraction(1, 3),
        ("1/2(1,1,1)", "1/2(1,1,1)", "1/3(1,2,2)"), 2, 2, 2, 9, ((3,),),
    ),
    XRow(
        "B.1", "X3 in P(1^4,2)", 1, 3, Fraction(3, 2), ("1/2(1,1,1)",),
        3, 1, 1, 8, ((4, 0),),
    ),
    XRow(
        "B.2", "X4 in P(1^3,2,3)", 1, 4, Fraction(2, 3), ("1/3(1,1,2)",),
        4, 1, 2, 15, ((5, 0, 0),),
    ),
)


Y_TABLE: tuple[YRow, ...] = (
    YRow(
        "A.1", (1, 1, 1, 1, 2, 2, 3), 1, 3, 2, Fraction(7, 3),
        ("1/3(1,2,2)",), "1/3(1,2,2)", 40836,
    ),
    YRow(
        "A.2", (1, 1, 1, 1, 1, 2, 2, 3), 1, 4, 2, Fraction(10, 3),
        ("1/3(1,2,2)",), "1/3(1,2,2)", 40933,
    ),
    YRow(
        "A.3", (1, 1, 1, 2, 2, 3, 4, 5), 1, 4, 2, Fraction(7, 5),
        ("1/5(1,2,4)",), "1/5(1,2,4)", 40663,
    ),
    YRow(
        "A.4", (1, 1, 2, 2, 3, 3, 4, 5), 1, 4, 3, Fraction(3, 5),
        ("1/2(1,1,1)", "1/2(1,1,1)", "1/5(1,3,4)"), "1/5(1,3,4)", 41200,
    ),
    YRow(
        "B.1", (1, 1, 1, 1, 2, 2, 3, 4, 5), 4, 5, 2, Fraction(12, 5),
        ("1/5(1,2,4)",), "1/5(1,2,4)", 40837, components=4,
    ),
    YRow(
        "B.2", (1, 1, 1, 2, 2, 3, 4, 5, 6, 7), 5, 6, 2, Fraction(10, 7),
        ("1/7(1,2,6)",), "1/7(1,2,6)", 40664, components=5,
    ),
)


def x_row(label: str) -> XRow:
    for row in X_TABLE:
        if row.label == label:
            return row
    raise KeyError(f"unknown case label {label!r}")


def y_row(label: str) -> YRow:
    for row in Y_TABLE:
        if row.label == label:
            return row
    raise KeyError(f"unknown case label {label!r}")


def label_for(r: int, a: int, e: int) -> str | None:
    for row in X_TABLE:
        if (row.r, row.a, row.e) == (r, a, e):
            return row.label
    return None


# Explicit exclusion rules transcribed from the case-bounding argument; these
# encode hyperquotient conditions the artifact does not derive.
@dataclass(frozen=True)
class ExclusionRule:
    name: str
    statement: str


EXCLUSION_RULES: tuple[ExclusionRule, ...] = (
    ExclusionRule(
        "index-point-smoothable",
        "a+1 = 0 mod ra-1 (the 1/(ra-1)(1,1,a) point is smoothable in the family)",
    ),
    ExclusionRule(
        "tangent-degree",
        "e = ra-2 requires e <= ra/2: otherwise the degree-e point is a "
        "hyperquotient 1/e(1,1,a,1;2), never terminal for e > 2",
    ),
    ExclusionRule(
        "residual-degree",
        "e = ra-a-1 requires e <= ra/2; for r = 2 additionally a <= 3 "
        "(the 1/(a-1)(1,1,a,a;2) hyperquotient is terminal only for a <= 3)",
    ),
)
