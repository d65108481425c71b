"""Aggregated verification runs: everything the package can check, with
seeded randomness, collected into structured reports for the CLI and the
service."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import curves, enumeration, hilbert, pfaffian
from .poly import Poly, UniPoly
from .singular import CyclicQuotient, reid_tai_terminal

# the 11 nonzero coefficients of the degree-17 numerator of the A.3 series
A3_NUMERATOR = UniPoly(
    [1, 0, 0, 0, -2, -2, -2, 2, 3, 3, 2, -2, -2, -2, 0, 0, 0, 1]
)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


@dataclass
class Report:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = ""):
        self.checks.append(CheckResult(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": [c.to_json() for c in self.checks]}


def verify_tables() -> Report:
    report = Report()
    diff = enumeration.registry_check()
    report.add("registry diff empty", not diff, "; ".join(map(str, diff)))
    cases = enumeration.enumerate_cases(4, 3)
    report.add("ten cases at bounds (4,3)", len(cases) == 10)
    divisible = [c for c in cases if c.divisible]
    report.add("six divisible cases", len(divisible) == 6)
    extras = enumeration.flagged_extras(6, 5)
    report.add("no extra divisible cases at bounds (6,5)", not extras,
               "; ".join(c.x_form for c in extras))
    return report


def verify_hilbert() -> Report:
    report = Report()
    for case in enumeration.enumerate_cases(4, 3):
        lhs = hilbert.hs_lemma1(case.r, case.a, case.e)
        rhs = hilbert.hs_of_hypersurface(
            [1, 1, case.a, case.r * case.a - 1, case.e], case.r * case.a
        )
        ok = hilbert.hs_equal(lhs, rhs)
        expansion_ok = hilbert.hs_expand(lhs, 20) == hilbert.hs_expand(rhs, 20)
        report.add(f"series identity ({case.r},{case.a},e={case.e})", ok and expansion_ok)
    series = hilbert.hs_icecream_a3()
    numerator = hilbert.hs_numerator_wrt(series, hilbert.A3_FAMILY_DENOMINATOR)
    report.add("codimension-4 family numerator", numerator == A3_NUMERATOR,
               str(numerator))
    report.add("three degree-1 generators", hilbert.hs_expand(series, 1)[1] == 3)
    report.add(
        "numerator palindromic",
        numerator.reciprocal() == numerator,
    )
    return report


def verify_terminality() -> Report:
    report = Report()
    family_ok = all(
        reid_tai_terminal(CyclicQuotient(r, (1, a, r - a)))
        for r in range(2, 51)
        for a in range(1, r)
        if Fraction(a, r).denominator == r  # gcd(a, r) == 1
    )
    report.add("1/r(1,a,r-a) terminal for r <= 50", family_ok)
    hits = []
    for r in range(2, 11):
        for a in range(1, 11):
            m = r * a - 1
            if m == 1:
                hits.append((r, a))
                continue
            s = CyclicQuotient(m, (1, 1, a))
            from .singular import is_isolated
            if is_isolated(s) and reid_tai_terminal(s):
                hits.append((r, a))
    report.add("toric scan hits", sorted(hits) == [(2, 1), (2, 2), (3, 1)], str(sorted(hits)))
    blowdown_ok = all(
        reid_tai_terminal(CyclicQuotient(c.l, (1, c.r, c.r * c.a - 1)))
        for c in enumeration.enumerate_cases(4, 3)
    )
    report.add("blowdown target terminal for all rows", blowdown_ok)
    return report


def verify_curves() -> Report:
    report = Report()
    rng = random.Random(0)

    def generic(r: int, support: list[tuple[int, int]]) -> curves.OrbifoldEquation:
        terms = {
            (m, n): Fraction(rng.choice([k for k in range(-9, 10) if k]))
            for (m, n) in support
        }
        return curves.OrbifoldEquation(r, Poly(curves.ORBINATES, terms))

    formats = [
        ("Gamma(3)", 2, [(3, 0), (2, 1), (1, 2), (0, 3)], (3,), 3),
        ("Gamma(1,3)", 3, [(5, 0), (3, 1), (2, 3), (1, 5), (0, 7)], (1, 3), 4),
        ("Gamma(4,0)", 3, [(8, 0), (6, 1), (4, 2), (2, 3), (0, 4)], (4, 0), 4),
        ("Gamma(5,0,0)", 4,
         [(15, 0), (12, 1), (9, 2), (6, 3), (3, 4), (0, 5)], (5, 0, 0), 5),
        ("Gamma(3,2)", 3,
         [(8, 0), (6, 1), (4, 2), (2, 3), (1, 5), (0, 7)], (3, 2), 5),
    ]
    for name, r, support, branches, mult in formats:
        g = generic(r, support)
        result = curves.classify(g)
        ok = (
            isinstance(result, curves.SingularityType)
            and result.branches == branches
            and curves.multiplicity(result, r) == mult
        )
        report.add(f"classify {name}", ok, str(result))
    totals = {
        family: enumeration.moduli_monomial_total(family)
        for family in ("T", "J", "TJ")
    }
    report.add("monomial totals 37/35/32",
               (totals["T"], totals["J"], totals["TJ"]) == (37, 35, 32), str(totals))
    dims = tuple(enumeration.moduli_dimension(f) for f in ("T", "J", "TJ"))
    report.add("moduli dimensions 36/34/31", dims == (36, 34, 31), str(dims))
    return report


def verify_a3() -> Report:
    report = Report()
    a3 = curves.a3_obstruction()
    report.add("discriminant vanishes iff a=b=f=0",
               a3.discriminant_zero_when_abf_zero and bool(a3.abf_elimination_order),
               f"forced order {a3.abf_elimination_order}")
    report.add("discriminant matches display up to scalar",
               a3.discriminant_matches_display,
               f"scalar {a3.discriminant_display_scalar}")
    report.add("factorization residue has order >= 4", a3.residue_min_order >= 4,
               f"order {a3.residue_min_order}")
    report.add("quartic obstruction vanishes iff c=d=e=g=0",
               a3.quartic_zero_when_cdeg_zero and bool(a3.cdeg_elimination_order))
    return report


def verify_minors() -> Report:
    from .poly import WeightSystem
    report = Report()
    scalars = ("p0", "p1", "p2", "p3", "q0", "q1", "q2", "q3")
    ring = WeightSystem(("x", "y", "z") + scalars, (1,) * 11)
    target = WeightSystem(("alpha", "beta") + scalars, (1,) * 10)
    alpha = Poly.var(target, "alpha")
    beta = Poly.var(target, "beta")
    identity = {n: Poly.var(target, n) for n in scalars}
    for r in (2, 3, 4):
        phi = sum(
            (Poly.var(ring, s) * Poly.var(ring, v) for s, v in
             zip(("p1", "p2", "p3"), ("x", "y", "z"))),
            Poly.var(ring, "p0"),
        )
        psi = sum(
            (Poly.var(ring, s) * Poly.var(ring, v) for s, v in
             zip(("q1", "q2", "q3"), ("x", "y", "z"))),
            Poly.var(ring, "q0"),
        )
        _, minors = curves.minor_presentation(r, phi, psi)
        bind = dict(identity)
        bind.update({"x": alpha**r, "y": alpha * beta, "z": beta**r})
        pulled = [m.substitute(bind) for m in minors]
        gamma = (
            alpha ** (r - 1) * phi.substitute(bind) + beta * psi.substitute(bind)
        )
        ok = (
            pulled[0].is_zero()
            and pulled[1] == alpha * gamma
            and pulled[2] == beta ** (r - 1) * gamma
        )
        report.add(f"minor pullback r={r}", ok)
    return report


def _ambient_coefficient(p: Poly, **powers: int) -> Fraction:
    exponent = [0] * len(pfaffian.AMBIENT.names)
    for name, k in powers.items():
        exponent[pfaffian.AMBIENT.index(name)] = k
    return p.coefficient(tuple(exponent))


def _family_curve(kind: str, coefficients: tuple[Poly, ...]) -> curves.OrbifoldEquation:
    """Leading-scalar orbifold equation of the curve contracted by a family.

    Tom: gamma = a'_3 a^5 + c'_3 a^3 b + d_2 a^2 b^3 + e_1 a b^5 + f_0 b^7.
    Jerry: gamma = a_2 a^8 + b_2 a^6 b + c_2 a^4 b^2 + d_2 a^2 b^3 + e'_2 b^4.
    Intersection (Tom coefficients with a' = a_2 x + b_2 y, c' = c_2 y):
    gamma = a_2 a^8 + b_2 a^6 b + c_2 a^4 b^2 + d_2 a^2 b^3 + e_1 a b^5 + f_0 b^7.
    """
    if kind == "tom":
        a_p, c_p, d, e, f = coefficients
        terms = {
            (5, 0): _ambient_coefficient(a_p, u=3),
            (3, 1): _ambient_coefficient(c_p, u=3),
            (2, 3): _ambient_coefficient(d, u=2),
            (1, 5): _ambient_coefficient(e, u=1),
            (0, 7): _ambient_coefficient(f),
        }
    elif kind == "jerry":
        a, b, c, d, e_p = coefficients
        terms = {
            (8, 0): _ambient_coefficient(a, u=2),
            (6, 1): _ambient_coefficient(b, u=2),
            (4, 2): _ambient_coefficient(c, u=2),
            (2, 3): _ambient_coefficient(d, u=2),
            (0, 4): _ambient_coefficient(e_p, u=2),
        }
    else:
        a_p, c_p, d, e, f = coefficients
        terms = {
            (8, 0): _ambient_coefficient(a_p, u=2, x=1),
            (6, 1): _ambient_coefficient(a_p, u=2, y=1),
            (4, 2): _ambient_coefficient(c_p, u=2, y=1),
            (2, 3): _ambient_coefficient(d, u=2),
            (1, 5): _ambient_coefficient(e, u=1),
            (0, 7): _ambient_coefficient(f),
        }
    return curves.OrbifoldEquation(3, Poly(curves.ORBINATES, terms))


FAMILY_CURVE_TYPE = {"tom": (1, 3), "jerry": (4, 0), "intersection": (3, 2)}


def _verify_family(kind: str, seed: int, trials: int) -> Report:
    report = Report()
    rng = random.Random(seed)
    builders = {
        "tom": (pfaffian.build_tom_family, pfaffian.random_tom_coefficients),
        "jerry": (pfaffian.build_jerry_family, pfaffian.random_jerry_coefficients),
    }
    build, coefficients = builders[kind]
    degrees_ok = ideal_ok = format_ok = pairs_ok = curve_ok = True
    for _ in range(trials):
        sample = coefficients(rng)
        matrix, unprojection = build(*sample)
        classified = curves.classify(_family_curve(kind, sample))
        curve_ok &= (
            isinstance(classified, curves.SingularityType)
            and classified.branches == FAMILY_CURVE_TYPE[kind]
        )
        system = pfaffian.max_pfaffians(matrix)
        equation_degrees = sorted(
            p.weighted_degree().degree for p in system.pfaffians
        ) + sorted(g.weighted_degree().degree for g in unprojection.equations())
        degrees_ok &= sorted(equation_degrees) == [4, 4, 5, 5, 6, 6, 6, 7, 8]
        ideal_ok &= all(
            pfaffian.monomial_ideal_contains(p, pfaffian.PLANE_IDEAL_VARS)
            for p in system.pfaffians
        )
        if kind == "tom":
            format_ok &= pfaffian.tom_check(matrix, pfaffian.PLANE_IDEAL_VARS, 2)
        else:
            format_ok &= pfaffian.jerry_check(matrix, pfaffian.PLANE_IDEAL_VARS, 3, 4)
        checks = pfaffian.unprojection_consistency(system, unprojection)
        pairs_ok &= all(c.ok for c in checks)
    label = "Tom2" if kind == "tom" else "Jer34"
    report.add(f"{label}: degree multiset 4,4,5,5,6,6,6,7,8 x{trials}", degrees_ok)
    report.add(f"{label}: Pfaffians in (x,y,z,nu) x{trials}", ideal_ok)
    report.add(f"{label}: format check x{trials}", format_ok)
    report.add(f"{label}: 6 consistency certificates x{trials}", pairs_ok)
    expected_type = "Gamma(" + ",".join(map(str, FAMILY_CURVE_TYPE[kind])) + ")"
    report.add(f"{label}: curve data classifies as {expected_type} x{trials}", curve_ok)
    return report


def verify_tom(seed: int = 0, trials: int = 20) -> Report:
    return _verify_family("tom", seed, trials)


def verify_jerry(seed: int = 0, trials: int = 20) -> Report:
    return _verify_family("jerry", seed, trials)


def verify_intersection(seed: int = 0, trials: int = 5) -> Report:
    """The common degeneration: simultaneously Tom2 and Jer34."""
    report = Report()
    rng = random.Random(seed)
    both_ok = curve_ok = True
    for _ in range(trials):
        sample = pfaffian.random_intersection_coefficients(rng)
        matrix, _ = pfaffian.build_tom_family(*sample)
        both_ok &= pfaffian.tom_check(matrix, pfaffian.PLANE_IDEAL_VARS, 2)
        both_ok &= pfaffian.jerry_check(matrix, pfaffian.PLANE_IDEAL_VARS, 3, 4)
        classified = curves.classify(_family_curve("intersection", sample))
        curve_ok &= (
            isinstance(classified, curves.SingularityType)
            and classified.branches == (3, 2)
        )
    report.add(f"intersection family in both formats x{trials}", both_ok)
    report.add(f"intersection curve data classifies as Gamma(3,2) x{trials}", curve_ok)
    return report


def verify_all(seed: int = 0, trials: int = 20) -> Report:
    report = Report()
    for part in (
        verify_tables(),
        verify_hilbert(),
        verify_terminality(),
        verify_curves(),
        verify_a3(),
        verify_minors(),
        verify_tom(seed, trials),
        verify_jerry(seed, trials),
        verify_intersection(seed),
    ):
        report.checks.extend(part.checks)
    return report
