"""Curve germs in type A Du Val singularities, via their orbifold equations.

A germ in the quotient surface A_{r-1} = C^2_{alpha,beta} / (1/r)(1,-1) is
given by a polynomial gamma(alpha, beta).  Its Newton polygon decomposes
into faces; the face whose slope is -i/(r-i) carries the branches meeting
the i-th exceptional curve of the minimal resolution.  Here the alpha
exponent is plotted horizontally, so a transverse branch
lambda*alpha^(r-i) - mu*beta^i spans the lattice step (r-i, -i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .poly import Poly, UniPoly, WeightSystem

ORBINATES = WeightSystem(("alpha", "beta"), (1, 1))


def orbinate_ring(r: int, a: int) -> WeightSystem:
    """Orbinates weighted so that invariants x, y, z get weights 1, a, ra-1.

    alpha, beta carry weights 1/r and (ra-1)/r; we scale by r to stay
    integral, so weighted degrees here are r times the geometric ones.
    """
    return WeightSystem(("alpha", "beta"), (1, r * a - 1))


@dataclass(frozen=True)
class OrbifoldEquation:
    """A polynomial in alpha, beta together with its Du Val type A_{r-1}."""

    r: int
    poly: Poly

    def __post_init__(self):
        if self.r < 2:
            raise ValueError("need r >= 2")
        if self.poly.is_zero():
            raise ValueError("orbifold equation must be nonzero")


@dataclass(frozen=True)
class Face:
    slope: Fraction
    start: tuple[int, int]
    end: tuple[int, int]
    points: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]


@dataclass(frozen=True)
class SingularityType:
    """Branch counts (a_1, ..., a_{r-1}) against the exceptional chain."""

    branches: tuple[int, ...]

    def __str__(self) -> str:
        return "Gamma(" + ",".join(str(a) for a in self.branches) + ")"


@dataclass
class DegenerateReport:
    """Why a germ fails to be of honest transverse type."""

    reasons: list[str] = field(default_factory=list)

    def add(self, reason: str):
        self.reasons.append(reason)

    def __bool__(self) -> bool:
        return bool(self.reasons)


def _support(g: OrbifoldEquation) -> list[tuple[int, int]]:
    return [(e[0], e[1]) for e in g.poly.terms]


def newton_polygon(g: OrbifoldEquation) -> NewtonPolygon:
    """Lower-left convex hull of the support, alpha exponent horizontal.

    Faces are listed left to right, steepest (most negative slope) first.
    """
    points = _support(g)
    # Pareto-minimal support points: nothing weakly below-left of them
    minimal = [
        p for p in points
        if not any(q != p and q[0] <= p[0] and q[1] <= p[1] for q in points)
    ]
    minimal.sort(key=lambda p: (p[0], p[1]))
    # lower convex chain over the minimal points (n decreases as m grows)
    chain: list[tuple[int, int]] = []
    for p in minimal:
        while len(chain) >= 2:
            (m1, n1), (m2, n2) = chain[-2], chain[-1]
            # drop the middle point when it lies on or above the new edge
            if (n2 - n1) * (p[0] - m1) >= (p[1] - n1) * (m2 - m1):
                chain.pop()
            else:
                break
        chain.append(p)
    faces = []
    for (m1, n1), (m2, n2) in zip(chain, chain[1:]):
        slope = Fraction(n2 - n1, m2 - m1)
        on_face = tuple(
            sorted(
                p for p in points
                if (p[1] - n1) * (m2 - m1) == (n2 - n1) * (p[0] - m1)
                and m1 <= p[0] <= m2
            )
        )
        faces.append(Face(slope=slope, start=(m1, n1), end=(m2, n2), points=on_face))
    return NewtonPolygon(vertices=tuple(chain), faces=tuple(faces))


def _face_index(slope: Fraction, r: int) -> int | None:
    """The i in 1..r-1 with slope == -i/(r-i), if any."""
    # slope = -p/q reduced; i/(r-i) = p/q means i = r*p/(p+q)
    p, q = -slope.numerator, slope.denominator
    if p <= 0:
        return None
    if (r * p) % (p + q) != 0:
        return None
    i = (r * p) // (p + q)
    return i if 1 <= i <= r - 1 else None


def _face_form_square_free(g: OrbifoldEquation, face: Face, i: int) -> bool:
    """Dehomogenize the face polynomial in u = alpha^(r-i), v = beta^i and
    test square-freeness by a univariate GCD with the derivative."""
    r = g.r
    m0 = face.start[0]
    coeffs: dict[int, Fraction] = {}
    for (m, n) in face.points:
        p, rem = divmod(m - m0, r - i)
        if rem:
            return False
        coeffs[p] = g.poly.coefficient((m, n))
    top = max(coeffs)
    f = UniPoly([coeffs.get(k, 0) for k in range(top + 1)])
    return f.gcd(f.derivative()).degree == 0


def classify(g: OrbifoldEquation) -> SingularityType | DegenerateReport:
    """Branch counts of the germ, or a report saying why it is degenerate."""
    report = DegenerateReport()
    hull = newton_polygon(g)
    first, last = hull.vertices[0], hull.vertices[-1]
    if first[0] != 0:
        report.add("every term is divisible by alpha")
    if last[1] != 0:
        report.add("every term is divisible by beta")
    branches = [0] * (g.r - 1)
    for face in hull.faces:
        i = _face_index(face.slope, g.r)
        if i is None:
            report.add(f"face of slope {face.slope} matches no exceptional curve")
            continue
        dm = face.end[0] - face.start[0]
        count, rem = divmod(dm, g.r - i)
        if rem:
            report.add(f"face for curve {i} has non-integral branch count")
            continue
        if not _face_form_square_free(g, face, i):
            report.add(f"face polynomial for curve {i} is not square-free")
            continue
        branches[i - 1] += count
    if report:
        return report
    if sum(branches) < 1:
        report.add("no face: the germ is smooth or a single monomial")
        return report
    return SingularityType(tuple(branches))


def multiplicity(t: SingularityType, r: int) -> int:
    """Multiplicity of the germ: sum of min(i, r-i) * a_i."""
    if len(t.branches) != r - 1:
        raise ValueError("branch count list must have length r-1")
    return sum(min(i, r - i) * a for i, a in enumerate(t.branches, start=1))


# ---------------------------------------------------------------------------
# Degree bounds for equations of curves of degree d on the exceptional surface
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeBoundSpec:
    r: int
    a: int
    d: int
    monomials: tuple[tuple[int, int, int], ...]  # (m, n, max coefficient degree)

    def max_degree(self, m: int, n: int) -> int | None:
        for mm, nn, deg in self.monomials:
            if (mm, nn) == (m, n):
                return deg
        return None


def degree_bound_spec(r: int, a: int, d: int) -> DegreeBoundSpec:
    """Admissible monomials alpha^m beta^n for a degree-d curve equation.

    Requires d = r-1 mod r.  A monomial is admissible when its weighted
    degree m + n(ra-1) is at most d and its eigenvalue m - n is -1 mod r;
    the slack (d - m - n(ra-1)) / r is the degree left for an invariant
    coefficient function.
    """
    if d % r != r - 1:
        raise ValueError(f"degree {d} is not -1 mod {r}")
    wz = r * a - 1
    monomials = []
    for n in range(d // wz + 1):
        for m in range(d - n * wz + 1):
            if (m - n) % r != r - 1:
                continue
            slack, rem = divmod(d - m - n * wz, r)
            if rem == 0:
                monomials.append((m, n, slack))
    # list steepest-face-first along the hull direction: by n ascending
    monomials.sort(key=lambda t: (t[1], -t[0]))
    return DegreeBoundSpec(r=r, a=a, d=d, monomials=tuple(monomials))


# ---------------------------------------------------------------------------
# Normal form gamma = alpha^(r-1) * phi + beta * psi in invariants x, y, z
# ---------------------------------------------------------------------------

INVARIANTS = WeightSystem(("x", "y", "z"), (1, 1, 1))


def invariant_ring(r: int, a: int = 1) -> WeightSystem:
    return WeightSystem(("x", "y", "z"), (1, a, r * a - 1))


class EigenvalueError(ValueError):
    """A monomial violates the m - n = -1 mod r condition."""


def orbifold_normal_form(g: OrbifoldEquation, ring: WeightSystem | None = None) -> tuple[Poly, Poly]:
    """Split gamma = alpha^(r-1) phi(x,y) + beta psi(y,z), phi and psi in the
    invariants x = alpha^r, y = alpha beta, z = beta^r.

    The split is unique once phi is restricted to x, y and psi to y, z.
    Substituting the invariants back reproduces gamma exactly.
    """
    r = g.r
    if ring is None:
        ring = invariant_ring(r)
    phi = Poly.zero(ring)
    psi = Poly.zero(ring)
    for (m, n), coeff in g.poly.terms.items():
        if (m - n) % r != r - 1:
            raise EigenvalueError(
                f"monomial alpha^{m}*beta^{n}: {m} - {n} is not -1 mod {r}"
            )
        if m > n:
            # y^n x^s with alpha^(r-1) split off
            s = (m - n - (r - 1)) // r
            phi = phi + Poly(ring, {(s, n, 0): coeff})
        else:
            # y^m z^k with beta split off
            k = (n - m - 1) // r
            psi = psi + Poly(ring, {(0, m, k): coeff})
    return phi, psi


def instantiate_normal_form(r: int, phi: Poly, psi: Poly, orbinates: WeightSystem = ORBINATES) -> Poly:
    """Substitute x, y, z = alpha^r, alpha beta, beta^r back into the split."""
    alpha = Poly.var(orbinates, "alpha")
    beta = Poly.var(orbinates, "beta")
    bindings = {"x": alpha**r, "y": alpha * beta, "z": beta**r}
    return alpha ** (r - 1) * phi.substitute(bindings) + beta * psi.substitute(bindings)


# ---------------------------------------------------------------------------
# The 2x3 minor presentation of the curve inside the ambient 3-fold
# ---------------------------------------------------------------------------


def minor_presentation(r: int, phi: Poly, psi: Poly):
    """Matrix ((x, y^(r-1), -psi), (y, z, phi)) and its three 2x2 minors.

    Pulling the minors back along (x, y, z) = (alpha^r, alpha beta, beta^r)
    gives (0, alpha*gamma, beta^(r-1)*gamma).
    """
    if r not in (2, 3, 4):
        raise ValueError(f"unsupported Du Val type: r = {r}")
    if phi.ring != psi.ring:
        raise ValueError("phi and psi must share a ring")
    ring = phi.ring
    x = Poly.var(ring, "x")
    y = Poly.var(ring, "y")
    z = Poly.var(ring, "z")
    matrix = ((x, y ** (r - 1), -psi), (y, z, phi))
    minors = (
        x * z - y**r,
        x * phi + y * psi,
        y ** (r - 1) * phi + z * psi,
    )
    return matrix, minors


# ---------------------------------------------------------------------------
# The A_3 obstruction calculation: which coefficients a general hyperplane
# section forces to vanish
# ---------------------------------------------------------------------------

A3_VARS = WeightSystem(
    ("x", "y", "z", "lam", "mu", "a", "b", "c", "d", "e", "f", "g", "h"),
    (1,) * 13,
)
_GERM = ("x", "y", "z")


def _v(name: str) -> Poly:
    return Poly.var(A3_VARS, name)


def _coefficients_in(p: Poly, names: tuple[str, ...]) -> dict[tuple[int, ...], Poly]:
    """Group the terms of p by their exponents in the given variables."""
    idx = [A3_VARS.index(n) for n in names]
    out: dict[tuple[int, ...], Poly] = {}
    for exponent, coeff in p.terms.items():
        key = tuple(exponent[i] for i in idx)
        stripped = list(exponent)
        for i in idx:
            stripped[i] = 0
        part = out.get(key, Poly.zero(A3_VARS))
        out[key] = part + Poly(A3_VARS, {tuple(stripped): coeff})
    return out


def _is_unit_multiple_of(p: Poly, target: str) -> bool:
    """True when p = (nonzero rational) * h^k * target for some k >= 0."""
    if len(p.terms) != 1:
        return False
    (exponent,) = p.terms
    want = {target: None, "h": None}
    for name, e in zip(A3_VARS.names, exponent):
        if e == 0:
            continue
        if name == target and e == 1:
            continue
        if name == "h":
            continue
        return False
    i_target = A3_VARS.index(target)
    return exponent[i_target] == 1


def _forced_vanishing(coefficients: list[Poly], targets: tuple[str, ...]) -> list[str]:
    """Stepwise elimination: repeatedly find a coefficient of the shape
    unit * h^k * v for a remaining target v, and set v = 0 everywhere.

    Returns the elimination order; raises if it gets stuck before all
    targets are forced.
    """
    remaining = set(targets)
    order: list[str] = []
    current = [p for p in coefficients if not p.is_zero()]
    zero_bind = {n: Poly.var(A3_VARS, n) for n in A3_VARS.names}
    while remaining:
        found = None
        for p in current:
            for v in sorted(remaining):
                if _is_unit_multiple_of(p, v):
                    found = v
                    break
            if found:
                break
        if not found:
            raise AssertionError(
                f"elimination stuck; remaining targets {sorted(remaining)}"
            )
        remaining.discard(found)
        order.append(found)
        bind = dict(zero_bind)
        bind[found] = Poly.zero(A3_VARS)
        current = [q for q in (p.substitute(bind) for p in current) if not q.is_zero()]
    return order


def _phi(include_linear: bool) -> Poly:
    x, y = _v("x"), _v("y")
    p = _v("c") * x**2 + _v("d") * x * y + _v("e") * y**2
    if include_linear:
        p = p + _v("a") * x + _v("b") * y
    return p


def _psi(include_f: bool) -> Poly:
    y, z = _v("y"), _v("z")
    p = _v("g") * y**2 + _v("h") * z
    if include_f:
        p = p + _v("f") * y
    return p


def _h_lam_mu(phi: Poly, psi: Poly) -> Poly:
    x, y, z = _v("x"), _v("y"), _v("z")
    lam, mu = _v("lam"), _v("mu")
    return x * z - y**4 + lam * (x * phi + y * psi) + mu * (y**3 * phi + z * psi)


def _subs(p: Poly, zeros: tuple[str, ...]) -> Poly:
    bind = {n: Poly.var(A3_VARS, n) for n in A3_VARS.names}
    for n in zeros:
        bind[n] = Poly.zero(A3_VARS)
    return p.substitute(bind)


@dataclass
class A3Report:
    h_lam_mu: Poly
    discriminant: Poly
    discriminant_matches_display: bool
    discriminant_display_scalar: Fraction | None
    discriminant_zero_when_abf_zero: bool
    abf_elimination_order: list[str]
    residue_min_order: int
    quartic_zero_when_cdeg_zero: bool
    cdeg_elimination_order: list[str]

    def passed(self) -> bool:
        return (
            self.discriminant_zero_when_abf_zero
            and self.abf_elimination_order
            and self.residue_min_order >= 4
            and self.quartic_zero_when_cdeg_zero
            and bool(self.cdeg_elimination_order)
        )

    def to_json(self) -> dict:
        return {
            "discriminant_matches_display": self.discriminant_matches_display,
            "discriminant_display_scalar": (
                str(self.discriminant_display_scalar)
                if self.discriminant_display_scalar is not None else None
            ),
            "discriminant_zero_when_abf_zero": self.discriminant_zero_when_abf_zero,
            "abf_elimination_order": self.abf_elimination_order,
            "residue_min_order": self.residue_min_order,
            "quartic_zero_when_cdeg_zero": self.quartic_zero_when_cdeg_zero,
            "cdeg_elimination_order": self.cdeg_elimination_order,
            "passed": self.passed(),
        }


def a3_obstruction() -> A3Report:
    """The symbolic content of the A_3 case: a general hyperplane section
    through the curve is a type A_3 singularity or worse exactly when the
    low-order coefficients a, b, f and then c, d, e, g all vanish."""
    x, y, z = _v("x"), _v("y"), _v("z")
    lam, mu = _v("lam"), _v("mu")
    a, b, c, d, e = _v("a"), _v("b"), _v("c"), _v("d"), _v("e")
    f, g, h = _v("f"), _v("g"), _v("h")

    phi_full = _phi(include_linear=True)
    psi_full = _psi(include_f=True)
    h_full = _h_lam_mu(phi_full, psi_full)

    # quadratic part in the germ coordinates, as a symmetric matrix
    quadratic = Poly.zero(A3_VARS)
    for exponent, coeff in h_full.terms.items():
        if sum(exponent[A3_VARS.index(n)] for n in _GERM) == 2:
            quadratic = quadratic + Poly(A3_VARS, {exponent: coeff})
    basis = _GERM
    half = Fraction(1, 2)

    def entry(i: int, j: int) -> Poly:
        xi = Poly.var(A3_VARS, basis[i])
        xj = Poly.var(A3_VARS, basis[j])
        total = Poly.zero(A3_VARS)
        for exponent, coeff in quadratic.terms.items():
            ei = exponent[A3_VARS.index(basis[i])]
            ej = exponent[A3_VARS.index(basis[j])]
            if i == j:
                if ei == 2:
                    total = total + Poly(A3_VARS, {_strip(exponent, (basis[i],)): coeff})
            else:
                if ei == 1 and ej == 1:
                    total = total + Poly(
                        A3_VARS, {_strip(exponent, (basis[i], basis[j])): coeff * half}
                    )
        return total

    m = [[entry(i, j) for j in range(3)] for i in range(3)]
    disc = (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )

    # compare against the displayed discriminant, up to one rational scalar
    display = lam * (
        a * (h * lam - f * mu) ** 2
        + b**2 * h * lam * mu
        - b * (h * lam + f * mu)
        + f
    )
    scalar = _proportionality(disc, display)

    disc_coeffs = list(_coefficients_in(disc, ("lam", "mu")).values())
    zero_abf = _subs(disc, ("a", "b", "f")).is_zero()
    abf_order = _forced_vanishing(disc_coeffs, ("a", "b", "f"))

    # with a = b = f = 0, the section factors modulo order-4 terms
    phi0 = _phi(include_linear=False)
    psi0 = _psi(include_f=False)
    h0 = _h_lam_mu(phi0, psi0)
    cxdxey = c * x**2 + d * x * y + e * y**2
    big_x = (
        x + h * (lam * y + mu * z) + g * mu * y**2
        - h * lam * mu * cxdxey
        + h**2 * lam**2 * mu * y * (c * x + d * y)
        - c * h**3 * lam**3 * mu * y**2
    )
    big_z = (
        z + lam * cxdxey
        - h * lam**2 * y * (c * x + d * y)
        + c * h**2 * lam**3 * y**2
    )
    quartic = c * h**3 * lam**3 - d * h**2 * lam**2 + e * h * lam - g
    residue = big_x * big_z - lam * quartic * y**3 - h0
    residue_order = residue.min_degree_in(_GERM) if residue else 10**9

    quartic_coeffs = list(_coefficients_in(quartic, ("lam",)).values())
    zero_cdeg = _subs(quartic, ("c", "d", "e", "g")).is_zero()
    cdeg_order = _forced_vanishing(quartic_coeffs, ("c", "d", "e", "g"))

    return A3Report(
        h_lam_mu=h_full,
        discriminant=disc,
        discriminant_matches_display=scalar is not None,
        discriminant_display_scalar=scalar,
        discriminant_zero_when_abf_zero=zero_abf,
        abf_elimination_order=abf_order,
        residue_min_order=residue_order,
        quartic_zero_when_cdeg_zero=zero_cdeg,
        cdeg_elimination_order=cdeg_order,
    )


def _strip(exponent: tuple[int, ...], names: tuple[str, ...]) -> tuple[int, ...]:
    out = list(exponent)
    for n in names:
        out[A3_VARS.index(n)] = 0
    return tuple(out)


def _proportionality(p: Poly, q: Poly) -> Fraction | None:
    """The scalar s with p = s*q, if one exists (p, q nonzero)."""
    if p.is_zero() or q.is_zero():
        return None
    if set(p.terms) != set(q.terms):
        return None
    items = iter(q.terms.items())
    exponent, coeff = next(items)
    s = p.terms[exponent] / coeff
    for exponent, coeff in items:
        if p.terms[exponent] != s * coeff:
            return None
    return s
