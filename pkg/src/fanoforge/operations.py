"""Shared operations layer: every query the CLI and the HTTP service expose,
as plain functions from simple arguments to JSON-ready dictionaries."""

from __future__ import annotations

from fractions import Fraction

from . import curves, enumeration, hilbert, registry, verify
from .parsing import parse_poly
from .poly import WeightSystem
from .singular import CyclicQuotient, canonical_form, is_isolated, reid_tai_terminal


def _fr(x: Fraction | int) -> str:
    return str(Fraction(x))


def _format_types(types: tuple[tuple[int, ...], ...]) -> str:
    return " or ".join(
        "Gamma(" + ",".join(map(str, t)) + ")" for t in types
    )


def table(which: int) -> dict:
    """Rows of one of the three embedded reference tables."""
    if which == 1:
        columns = ["case", "Y", "rho_Y", "codim", "q_Y", "B3", "basket", "GRDB"]
        rows = [
            {
                "case": row.label,
                "Y": f"Y in {enumeration.format_wps(row.ambient_weights)}",
                "rho_Y": row.rho_y,
                "codim": row.codim,
                "q_Y": row.q_y,
                "B3": _fr(row.b_cubed),
                "basket": ", ".join(row.basket),
                "GRDB": row.grdb,
            }
            for row in registry.Y_TABLE
        ]
    elif which == 2:
        columns = ["X", "(r,a)", "q", "e", "q'", "l", "d", "divisible"]
        rows = [
            {
                "X": case.x_form,
                "(r,a)": f"({case.r},{case.a})",
                "q": case.q,
                "e": case.e,
                "q'": case.qprime,
                "l": case.l,
                "d": case.d,
                "divisible": case.divisible,
            }
            for case in enumeration.enumerate_cases(4, 3)
        ]
    elif which == 3:
        columns = ["case", "X", "codim", "q_X", "A3", "basket", "(r,a)", "d",
                   "singularity type"]
        rows = [
            {
                "case": row.label,
                "X": row.x_form,
                "codim": row.codim,
                "q_X": row.q_x,
                "A3": _fr(row.a_cubed),
                "basket": ", ".join(row.basket) or "empty",
                "(r,a)": f"({row.r},{row.a})",
                "d": row.d,
                "singularity type": _format_types(row.singularity_types),
            }
            for row in registry.X_TABLE
        ]
    else:
        raise ValueError(f"no table {which}; choose 1, 2 or 3")
    return {"table": which, "columns": columns, "rows": rows}


def invariants(r: int, a: int, e: int) -> dict:
    """Derived invariants of one (r, a, e) case, with link data if divisible."""
    case = enumeration.derive_invariants(r, a, e)
    result = {"x_form": case.x_form, **case.to_json(),
              "A3": _fr(enumeration.degree_of_case(case))}
    if case.divisible and registry.label_for(r, a, e) is not None:
        result["link"] = enumeration.link_result(case).to_json()
    return result


def terminal(text: str) -> dict:
    """Isolation/terminality report for a cyclic quotient written 1/r(a,b,c)."""
    s = CyclicQuotient.parse(text)
    isolated = is_isolated(s)
    result = {"singularity": str(s), "isolated": isolated}
    if isolated:
        result["terminal"] = reid_tai_terminal(s)
        result["canonical"] = str(canonical_form(s))
    return result


def _series_payload(series: hilbert.HilbertSeries, order: int | None) -> dict:
    result = {
        "numerator": str(series.numerator),
        "denominator": list(series.denominator),
    }
    if order is not None:
        result["expansion"] = [_fr(c) for c in hilbert.hs_expand(series, order)]
    return result


def hilbert_series(kind: str, r: int | None = None, a: int | None = None,
                   e: int | None = None, weights: list[int] | None = None,
                   degree: int | None = None, order: int | None = None) -> dict:
    """One of the supported Hilbert series, optionally expanded.

    kind 'lemma1' needs (r, a, e) and reports the hypersurface identity;
    'wps' needs weights; 'hypersurface' needs weights and degree; 'icecream'
    is the fixed codimension-4 family series with its degree-17 numerator.
    """
    if kind == "lemma1":
        if None in (r, a, e):
            raise ValueError("lemma1 needs r, a and e")
        series = hilbert.hs_lemma1(r, a, e)
        rhs = hilbert.hs_of_hypersurface([1, 1, a, r * a - 1, e], r * a)
        result = _series_payload(series, order)
        result["identity_ok"] = hilbert.hs_equal(series, rhs)
        return result
    if kind == "wps":
        if not weights:
            raise ValueError("wps needs weights")
        return _series_payload(hilbert.hs_of_wps(weights), order)
    if kind == "hypersurface":
        if not weights or degree is None:
            raise ValueError("hypersurface needs weights and a degree")
        return _series_payload(hilbert.hs_of_hypersurface(weights, degree), order)
    if kind == "icecream":
        series = hilbert.hs_icecream_a3()
        result = _series_payload(series, order)
        result["numerator_over_family_denominator"] = str(
            hilbert.hs_numerator_wrt(series, hilbert.A3_FAMILY_DENOMINATOR)
        )
        result["family_denominator"] = list(hilbert.A3_FAMILY_DENOMINATOR)
        return result
    raise ValueError(f"unknown series kind {kind!r}")


def classify(r: int, expression: str) -> dict:
    """Classify a curve germ equation in orbinates alpha, beta on A_{r-1}."""
    poly = parse_poly(expression, curves.ORBINATES)
    g = curves.OrbifoldEquation(r, poly)
    result = curves.classify(g)
    polygon = curves.newton_polygon(g)
    payload = {
        "r": r,
        "equation": str(poly),
        "vertices": [list(v) for v in polygon.vertices],
    }
    if isinstance(result, curves.SingularityType):
        payload["type"] = str(result)
        payload["branches"] = list(result.branches)
        payload["multiplicity"] = curves.multiplicity(result, r)
    else:
        payload["degenerate"] = result.reasons
    return payload


def moduli() -> dict:
    """Monomial totals and dimensions of the three deformation families."""
    rows = [
        {
            "family": family,
            "coefficient_degrees": list(
                enumeration.FAMILY_COEFFICIENT_DEGREES[family]
            ),
            "monomials": enumeration.moduli_monomial_total(family),
            "dimension": enumeration.moduli_dimension(family),
        }
        for family in ("T", "J", "TJ")
    ]
    return {"columns": ["family", "coefficient_degrees", "monomials", "dimension"],
            "rows": rows}


VERIFY_TARGETS = {
    "tables": verify.verify_tables,
    "hilbert": verify.verify_hilbert,
    "terminal": verify.verify_terminality,
    "curves": verify.verify_curves,
    "a3": verify.verify_a3,
    "minors": verify.verify_minors,
}
SEEDED_TARGETS = {
    "tom": verify.verify_tom,
    "jerry": verify.verify_jerry,
    "intersection": verify.verify_intersection,
}


def run_verify(target: str, seed: int = 0, trials: int = 20) -> dict:
    """One verification batch; target 'all' runs every registered check."""
    if target == "all":
        report = verify.verify_all(seed, trials)
    elif target in VERIFY_TARGETS:
        report = VERIFY_TARGETS[target]()
    elif target in SEEDED_TARGETS:
        report = SEEDED_TARGETS[target](seed, trials)
    else:
        known = sorted(["all", *VERIFY_TARGETS, *SEEDED_TARGETS])
        raise ValueError(f"unknown verify target {target!r}; choose from {known}")
    result = report.to_json()
    result["target"] = target
    result["seed"] = seed
    result["trials"] = trials
    return result


def parse(expression: str, variables: list[str],
          weights: list[int] | None = None) -> dict:
    """Parse an expression over the given variables; echo the canonical form."""
    if weights is None:
        weights = [1] * len(variables)
    ring = WeightSystem(tuple(variables), tuple(weights))
    poly = parse_poly(expression, ring)
    info = poly.weighted_degree()
    return {
        "canonical": str(poly),
        "terms": len(poly.terms),
        "degree": info.degree,
        "homogeneous": info.homogeneous,
    }
