"""5x5 skew Pfaffian formats, the two codimension-4 families, and
certificate-based verification of their unprojection equations.

The ambient ring has coordinates (u, x, y, z, xi, nu, zeta) of weights
(1, 1, 1, 2, 2, 3, 4); the unprojection variable theta (weight 5) never
appears in any stored polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .linalg import solve_sparse
from .poly import Poly, WeightSystem, monomials_of_degree

AMBIENT = WeightSystem(("u", "x", "y", "z", "xi", "nu", "zeta"), (1, 1, 1, 2, 2, 3, 4))

PLANE_IDEAL_VARS = ("x", "y", "z", "nu")

# prescribed entry degrees, upper triangle by rows
DEGREE_PATTERN: dict[tuple[int, int], int] = {
    (1, 2): 4, (1, 3): 3, (1, 4): 3, (1, 5): 2,
    (2, 3): 3, (2, 4): 3, (2, 5): 2,
    (3, 4): 2, (3, 5): 1,
    (4, 5): 1,
}

PFAFFIAN_DEGREES = (4, 4, 5, 5, 6)
UNPROJECTION_DEGREES = (6, 6, 7, 8)


class DegreePatternError(ValueError):
    pass


@dataclass(frozen=True)
class SkewMatrix5:
    """Upper triangle of a 5x5 skew matrix over the ambient ring."""

    entries: dict[tuple[int, int], Poly]

    def __post_init__(self):
        for (i, j), degree in DEGREE_PATTERN.items():
            entry = self.entries.get((i, j))
            if entry is None:
                raise DegreePatternError(f"missing entry ({i},{j})")
            if not entry.is_homogeneous_of(degree):
                raise DegreePatternError(
                    f"entry ({i},{j}) is not homogeneous of degree {degree}"
                )

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        if i == j:
            return Poly.zero(AMBIENT)
        if i < j:
            return self.entries[(i, j)]
        return -self.entries[(j, i)]

    def to_json(self) -> dict:
        return {"entries": {f"{i}{j}": str(p) for (i, j), p in sorted(self.entries.items())}}


@dataclass(frozen=True)
class PfaffianSystem:
    """The five signed maximal Pfaffians, of degrees (4, 4, 5, 5, 6)."""

    pfaffians: tuple[Poly, Poly, Poly, Poly, Poly]


@dataclass(frozen=True)
class UnprojectionData:
    """Right-hand sides of x*theta, y*theta, z*theta, nu*theta."""

    g_x: Poly
    g_y: Poly
    g_z: Poly
    g_nu: Poly

    def equations(self) -> tuple[Poly, ...]:
        return (self.g_x, self.g_y, self.g_z, self.g_nu)


@dataclass(frozen=True)
class MembershipCertificate:
    """target = sum of cofactor_i * generator_i, verified on construction."""

    cofactors: tuple[Poly, ...]

    def verify(self, target: Poly, generators: list[Poly]) -> bool:
        total = Poly.zero(target.ring)
        for c, g in zip(self.cofactors, generators):
            total = total + c * g
        return total == target


def pf4(m12: Poly, m13: Poly, m14: Poly, m23: Poly, m24: Poly, m34: Poly) -> Poly:
    """Pfaffian of a 4x4 skew matrix given its upper triangle."""
    return m12 * m34 - m13 * m24 + m14 * m23


def max_pfaffians(matrix: SkewMatrix5) -> PfaffianSystem:
    """Signed maximal Pfaffians: Pf_k = (-1)^(k+1) Pf(delete row/col k)."""
    out = []
    for k in range(1, 6):
        rows = [i for i in range(1, 6) if i != k]
        i1, i2, i3, i4 = rows
        value = pf4(
            matrix[i1, i2], matrix[i1, i3], matrix[i1, i4],
            matrix[i2, i3], matrix[i2, i4], matrix[i3, i4],
        )
        if k % 2 == 0:
            value = -value
        out.append(value)
    system = PfaffianSystem(tuple(out))
    for pf, degree in zip(system.pfaffians, PFAFFIAN_DEGREES):
        assert pf.is_zero() or pf.is_homogeneous_of(degree)
    return system


def monomial_ideal_contains(p: Poly, variables: tuple[str, ...]) -> bool:
    """True iff every term of p is divisible by one of the variables."""
    idx = [p.ring.index(v) for v in variables]
    return all(any(e[i] for i in idx) for e in p.terms)


def tom_check(matrix: SkewMatrix5, variables: tuple[str, ...], k: int) -> bool:
    """Tom_k: every entry outside row/column k is in the monomial ideal."""
    if not 1 <= k <= 5:
        raise ValueError("column index out of range")
    return all(
        monomial_ideal_contains(entry, variables)
        for (i, j), entry in matrix.entries.items()
        if i != k and j != k
    )


def jerry_check(matrix: SkewMatrix5, variables: tuple[str, ...], k: int, l: int) -> bool:
    """Jer_kl: every entry meeting row or column k or l is in the ideal."""
    if not (1 <= k <= 5 and 1 <= l <= 5 and k != l):
        raise ValueError("indices out of range")
    return all(
        monomial_ideal_contains(entry, variables)
        for (i, j), entry in matrix.entries.items()
        if i in (k, l) or j in (k, l)
    )


# ---------------------------------------------------------------------------
# The two families
# ---------------------------------------------------------------------------


class CoefficientError(ValueError):
    pass


def _check_coeff(name: str, p: Poly, degree: int, variables: tuple[str, ...]):
    if not p.is_zero():
        if not p.is_homogeneous_of(degree):
            raise CoefficientError(f"coefficient {name} must be homogeneous of degree {degree}")
        if not p.variables_used() <= set(variables):
            raise CoefficientError(f"coefficient {name} may only use {variables}")


def _vars() -> dict[str, Poly]:
    return {n: Poly.var(AMBIENT, n) for n in AMBIENT.names}


def build_tom_family(a_p: Poly, c_p: Poly, d: Poly, e: Poly, f: Poly):
    """The Tom_2 matrix and unprojection equations.

    Coefficients: a' (degree 3 in u, x, y), c' (degree 3 in u, y),
    d (degree 2 in u, y), e (degree 1 in u, y), f (a constant).
    """
    _check_coeff("a'", a_p, 3, ("u", "x", "y"))
    _check_coeff("c'", c_p, 3, ("u", "y"))
    _check_coeff("d", d, 2, ("u", "y"))
    _check_coeff("e", e, 1, ("u", "y"))
    _check_coeff("f", f, 0, ())
    v = _vars()
    x, y, z, xi, nu, zeta = v["x"], v["y"], v["z"], v["xi"], v["nu"], v["zeta"]
    matrix = SkewMatrix5({
        (1, 2): zeta, (1, 3): nu, (1, 4): y * (xi + d), (1, 5): -(e * y + f * z),
        (2, 3): -a_p, (2, 4): nu + c_p, (2, 5): xi,
        (3, 4): z, (3, 5): y,
        (4, 5): x,
    })
    unprojection = UnprojectionData(
        g_x=xi**2 * (xi + d) + e * xi * (nu + c_p) + f * (nu + c_p) ** 2,
        g_y=xi * zeta - a_p * f * (nu + c_p),
        g_z=(nu + c_p) * (zeta + a_p * e) + a_p * xi * (xi + d),
        g_nu=zeta * (zeta + a_p * e) + a_p**2 * f * (xi + d),
    )
    return matrix, unprojection


def build_jerry_family(a: Poly, b: Poly, c: Poly, d: Poly, e_p: Poly):
    """The Jer_34 matrix and unprojection equations.

    Coefficients: a, b, c, d (degree 2 in u, y), e' (degree 2 in u, y, z).
    """
    _check_coeff("a", a, 2, ("u", "y"))
    _check_coeff("b", b, 2, ("u", "y"))
    _check_coeff("c", c, 2, ("u", "y"))
    _check_coeff("d", d, 2, ("u", "y"))
    _check_coeff("e'", e_p, 2, ("u", "y", "z"))
    v = _vars()
    x, y, z, xi, nu, zeta = v["x"], v["y"], v["z"], v["xi"], v["nu"], v["zeta"]
    matrix = SkewMatrix5({
        (1, 2): zeta, (1, 3): nu, (1, 4): y * (xi + d), (1, 5): -e_p,
        (2, 3): -(a * x + b * y), (2, 4): nu + c * y, (2, 5): xi,
        (3, 4): z, (3, 5): y,
        (4, 5): x,
    })
    unprojection = UnprojectionData(
        g_x=xi**3 + d * xi**2 + c * e_p * xi + e_p * (zeta + b * e_p),
        g_y=xi * zeta - a * e_p**2,
        g_z=(
            nu * (zeta + b * e_p)
            + (a * x + b * y) * xi * (xi + d)
            + c * xi * nu
            + a * e_p * y * (xi + d)
        ),
        g_nu=zeta * (zeta + b * e_p) + a * e_p * (xi**2 + d * xi + c * e_p),
    )
    return matrix, unprojection


def _random_poly(rng: random.Random, degree: int, variables: tuple[str, ...]) -> Poly:
    """Homogeneous polynomial with nonzero random rational coefficients."""
    allowed = set(variables)
    terms = {}
    for exponent in monomials_of_degree(AMBIENT, degree):
        used = {n for n, e in zip(AMBIENT.names, exponent) if e}
        if used <= allowed:
            num = rng.choice([n for n in range(-9, 10) if n])
            den = rng.choice([1, 1, 2, 3])
            terms[exponent] = Fraction(num, den)
    return Poly(AMBIENT, terms)


def random_tom_coefficients(rng: random.Random) -> tuple[Poly, Poly, Poly, Poly, Poly]:
    return (
        _random_poly(rng, 3, ("u", "x", "y")),
        _random_poly(rng, 3, ("u", "y")),
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 1, ("u", "y")),
        _random_poly(rng, 0, ()),
    )


def random_jerry_coefficients(rng: random.Random) -> tuple[Poly, Poly, Poly, Poly, Poly]:
    return (
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 2, ("u", "y", "z")),
    )


def random_intersection_coefficients(rng: random.Random) -> tuple[Poly, Poly, Poly, Poly, Poly]:
    """Tom coefficients that put the matrix simultaneously in Jer_34 format:
    a' = a2*x + b2*y and c' = c2*y with a2, b2, c2 of degree 2 in u, y."""
    x = Poly.var(AMBIENT, "x")
    y = Poly.var(AMBIENT, "y")
    a2 = _random_poly(rng, 2, ("u", "y"))
    b2 = _random_poly(rng, 2, ("u", "y"))
    c2 = _random_poly(rng, 2, ("u", "y"))
    return (
        a2 * x + b2 * y,
        c2 * y,
        _random_poly(rng, 2, ("u", "y")),
        _random_poly(rng, 1, ("u", "y")),
        _random_poly(rng, 0, ()),
    )


# ---------------------------------------------------------------------------
# Ideal membership by bounded-degree linear algebra
# ---------------------------------------------------------------------------


def ideal_membership_bounded(target: Poly, generators: list[Poly]) -> MembershipCertificate | None:
    """Homogeneous cofactors with target = sum c_i * gen_i, or None.

    The cofactor degrees are forced: deg c_i = deg target - deg gen_i.
    The solution is re-expanded exactly before being returned, so the
    linear solver is never trusted.
    """
    ring = target.ring
    if target.is_zero():
        return MembershipCertificate(tuple(Poly.zero(ring) for _ in generators))
    target_degree, homogeneous = target.weighted_degree()
    if not homogeneous:
        raise ValueError("target must be homogeneous")
    columns: list[tuple[int, Poly]] = []  # (generator index, basis monomial poly)
    for gi, gen in enumerate(generators):
        if gen.is_zero():
            continue
        gen_degree, gen_homogeneous = gen.weighted_degree()
        if not gen_homogeneous:
            raise ValueError("generators must be homogeneous")
        cof_degree = target_degree - gen_degree
        if cof_degree < 0:
            continue
        for exponent in monomials_of_degree(ring, cof_degree):
            columns.append((gi, Poly.monomial(ring, exponent)))
    if not columns:
        return None
    row_index: dict[tuple[int, ...], int] = {}
    rows: list[dict[int, Fraction]] = []
    rhs: list[Fraction] = []

    def row_of(exponent) -> int:
        k = row_index.get(exponent)
        if k is None:
            k = len(rows)
            row_index[exponent] = k
            rows.append({})
            rhs.append(Fraction(0))
        return k

    for ci, (gi, monomial) in enumerate(columns):
        product = monomial * generators[gi]
        for exponent, coeff in product.terms.items():
            rows[row_of(exponent)][ci] = coeff
    for exponent, coeff in target.terms.items():
        rhs[row_of(exponent)] = coeff
    solution = solve_sparse(rows, rhs, len(columns))
    if solution is None:
        return None
    cofactors = [Poly.zero(ring) for _ in generators]
    for (gi, monomial), value in zip(columns, solution):
        if value:
            cofactors[gi] = cofactors[gi] + monomial * value
    certificate = MembershipCertificate(tuple(cofactors))
    if not certificate.verify(target, generators):
        return None
    return certificate


@dataclass
class PairCheck:
    pair: tuple[str, str]
    certificate: MembershipCertificate | None

    @property
    def ok(self) -> bool:
        return self.certificate is not None


def unprojection_consistency(system: PfaffianSystem, unprojection: UnprojectionData) -> list[PairCheck]:
    """Well-definedness of theta away from the plane: for every pair of
    plane-ideal variables, v2*g_{v1} - v1*g_{v2} must lie in the Pfaffian
    ideal, witnessed by a verified certificate."""
    equations = dict(zip(PLANE_IDEAL_VARS, unprojection.equations()))
    generators = list(system.pfaffians)
    checks = []
    for v1, v2 in combinations(PLANE_IDEAL_VARS, 2):
        target = Poly.var(AMBIENT, v2) * equations[v1] - Poly.var(AMBIENT, v1) * equations[v2]
        checks.append(PairCheck((v1, v2), ideal_membership_bounded(target, generators)))
    return checks
