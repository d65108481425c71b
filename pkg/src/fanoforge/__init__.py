"""fanoforge: exact-arithmetic toolkit for a family of Q-Fano 3-fold
constructions.

Sparse polynomials over the rationals, Hilbert series of weighted projective
hypersurfaces, terminality of cyclic quotient singularities, case
enumeration with derived link invariants, orbifold curve-germ
classification, and Pfaffian Tom/Jerry unprojection verification.
"""

from .curves import (
    OrbifoldEquation,
    SingularityType,
    a3_obstruction,
    classify,
    degree_bound_spec,
    minor_presentation,
    multiplicity,
    newton_polygon,
    orbifold_normal_form,
)
from .enumeration import (
    EmbeddingCase,
    LinkResult,
    derive_invariants,
    enumerate_cases,
    link_result,
    moduli_dimension,
    registry_check,
)
from .hilbert import (
    HilbertSeries,
    hs_equal,
    hs_expand,
    hs_lemma1,
    hs_numerator_wrt,
    hs_of_hypersurface,
    hs_of_wps,
)
from .parsing import PolySyntaxError, parse_poly
from .pfaffian import PfaffianSystem, SkewMatrix5, jerry_check, tom_check
from .poly import Poly, UniPoly, WeightSystem, count_monomials
from .singular import CyclicQuotient, canonical_form, reid_tai_terminal
from .verify import Report, verify_all

__version__ = "1.0.0"

__all__ = [
    "CyclicQuotient",
    "EmbeddingCase",
    "HilbertSeries",
    "LinkResult",
    "OrbifoldEquation",
    "PfaffianSystem",
    "Poly",
    "PolySyntaxError",
    "Report",
    "SingularityType",
    "SkewMatrix5",
    "UniPoly",
    "WeightSystem",
    "a3_obstruction",
    "canonical_form",
    "classify",
    "count_monomials",
    "degree_bound_spec",
    "derive_invariants",
    "enumerate_cases",
    "hs_equal",
    "hs_expand",
    "hs_lemma1",
    "hs_numerator_wrt",
    "hs_of_hypersurface",
    "hs_of_wps",
    "jerry_check",
    "link_result",
    "minor_presentation",
    "moduli_dimension",
    "multiplicity",
    "newton_polygon",
    "orbifold_normal_form",
    "parse_poly",
    "registry_check",
    "reid_tai_terminal",
    "tom_check",
    "verify_all",
]
