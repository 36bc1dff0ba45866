"""Torsion criteria and division polynomials for n = 2, 3, 4.

The criteria come from comparing k-fold and (k+1)-fold multiples: for odd
n = 2k+1 the a-coordinates of (k+1)D and kD agree; for even n = 2k the
k-fold multiple is 2-torsion (b-coordinates vanish, or the single support
point has y = 0).  Substituting the duplication coefficients turns these
into polynomial conditions on (a2, a4, b3, b5) - the Mumford division
polynomials - or, after elimination, on the x-coordinates of the support.

Denominator clearing multiplies by powers of E = 2N*(2*b5' - a2*b3'), the
numerator of the duplication denominator over N = y1*y2 expressed in
Mumford coordinates; the cleared system is only quoted on the locus E != 0
(the degenerate locus belongs to the double-to-special branch).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .curves import CanonicalCurve
from .divisors import MumfordDivisor, mumford_from_points
from .errors import (
    BranchPointInSupport,
    CharacteristicTooSmall,
    GammaUndefined,
    SerializationError,
    UnsupportedField,
)
from .fields import Field, FieldEmbedding, GF, QQ
from .grouplaw import double_traced, gamma_double, scalar_mul, tangent_data
from .polyring import PolyRing, WeightedPoly

MUMFORD_VARS = ("a2", "a4", "b3", "b5", "l2", "l4", "l6", "l8", "l10")
MUMFORD_WEIGHTS = (2, 4, 3, 5, 2, 4, 6, 8, 10)
XY_VARS = ("x1", "y1", "x2", "y2", "l2", "l4", "l6", "l8", "l10")
XY_WEIGHTS = (2, 5, 2, 5, 2, 4, 6, 8, 10)
X_VARS = ("x1", "x2", "l2", "l4", "l6", "l8", "l10")
X_WEIGHTS = (2, 2, 2, 4, 6, 8, 10)


@dataclass(frozen=True)
class DivisionPolySet:
    n: int
    coords: str  # "mumford" | "xy"
    names: tuple
    polys: tuple  # WeightedPoly, aligned with names


# ---------------------------------------------------------------------------
# order tests

def is_torsion(D: MumfordDivisor, n: int, curve: CanonicalCurve,
               exact: bool = True) -> bool:
    """Exact order n (or order dividing n when exact=False)."""
    if n < 1:
        raise SerializationError("torsion order must be positive")
    if scalar_mul(n, D, curve).variant != "neutral":
        return False
    if not exact:
        return True
    for m in range(1, n):
        if n % m == 0 and scalar_mul(m, D, curve).variant == "neutral":
            return False
    return True


def two_torsion_divisors(curve: CanonicalCurve) -> list:
    """All 2-torsion classes rational over the base field.

    Single branch points give degree-1 classes; unordered pairs of distinct
    branch points give degree-2 classes with vanishing b-coordinates.  Over
    a splitting field the count is C(5,2) + 5 = 15."""
    F = curve.field
    bps = curve.branch_points()
    out = [MumfordDivisor.special(F, b, 0) for b in bps]
    for b1, b2 in combinations(bps, 2):
        out.append(MumfordDivisor.nonspecial(F, -(b1 + b2), b1 * b2, 0, 0))
    return sorted(out, key=lambda d: d.sort_key())


# ---------------------------------------------------------------------------
# numeric residual systems

def three_torsion_mumford_residuals(D: MumfordDivisor, curve: CanonicalCurve):
    """Residuals of 3*a2 = 2*g2 - g1^2 and the companion a4 relation.

    Both vanish exactly on 3-torsion divisors (2D ~ -D); the duplication
    coefficients must be defined (2D non-special).  Repeated-support
    divisors (possible over small finite fields) fall outside the printed
    coefficient solve and are compared through the confluent doubling."""
    F = curve.field
    if not D.is_nonspecial():
        raise GammaUndefined("3-torsion residuals need a degree-2 divisor")
    a2, a4 = D.coords[0], D.coords[1]
    if F.is_zero(a2 * a2 - 4 * a4):
        doubled, _ = double_traced(D, curve)
        if not doubled.is_nonspecial():
            raise GammaUndefined("doubling left the degree-2 locus")
        return doubled.coords[0] - a2, doubled.coords[1] - a4
    try:
        tang = tangent_data(curve, D)
    except BranchPointInSupport as exc:
        raise GammaUndefined(f"duplication degenerate: {exc}") from exc
    gam = gamma_double(D, tang)
    l2 = curve.lam[0]
    s = gam.g2 + gam.g2 - gam.g1 * gam.g1
    r1 = 3 * a2 - s
    r2 = 3 * a4 - (3 * a2 * a2 - 2 * a2 * s + gam.g4 + gam.g4
                   + gam.g2 * gam.g2 - l2 * gam.g1 * gam.g1)
    return r1, r2


def four_torsion_residuals(D: MumfordDivisor, curve: CanonicalCurve):
    """(branch, residuals): branch "nonspecial" checks the two vanishing
    b-coordinate conditions of 2D; branch "special" checks y_{2D} = 0.

    Distinct-support divisors go through the printed coefficient formulas;
    repeated-support divisors (degenerate for those formulas) read the same
    criteria off the confluent doubling."""
    if not D.is_nonspecial():
        raise GammaUndefined("4-torsion residuals need a degree-2 divisor")
    F = curve.field
    a2, a4, b3, b5 = D.coords
    l2 = curve.lam[0]
    if F.is_zero(a2 * a2 - 4 * a4):
        doubled, _ = double_traced(D, curve)
        if doubled.is_special():
            return "special", (doubled.coords[1],)
        if doubled.is_neutral():
            raise GammaUndefined("2D is neutral: D is 2-torsion, not order 4")
        return "nonspecial", (doubled.coords[2], doubled.coords[3])
    try:
        tang = tangent_data(curve, D)
    except BranchPointInSupport as exc:
        raise GammaUndefined(f"duplication degenerate: {exc}") from exc
    den = tang.b5p + tang.b5p - a2 * tang.b3p
    if F.is_zero(den):
        # special branch: gamma from the tangency system
        g1 = tang.b3p / 2
        g3 = (2 * b3 + a2 * tang.b3p) / 2
        g5 = (2 * b5 + a4 * tang.b3p) / 2
        xs = a2 + a2 + g1 * g1 - l2
        return "special", ((g1 * xs + g3) * xs + g5,)
    gam = gamma_double(D, tang)
    g1, g2, g4, g6 = gam.g1, gam.g2, gam.g4, gam.g6
    d1 = (-2 * a4 - a2 * a2
          + (2 * a2 - g2 + g1 * g1) * (g2 - g1 * g1)
          + g1 * g1 * (g2 - l2) + g4)
    d2 = ((-2 * a4 + (3 * a2 - g2) * (a2 - g2) + g1 * g1 * (2 * a2 - l2) + 2 * g4)
          * (2 * a2 - g2 + g1 * g1) - g6)
    return "nonspecial", (d1, d2)


# ---------------------------------------------------------------------------
# symbolic division polynomials

def mumford_ring(field: Field = None) -> PolyRing:
    return PolyRing(field or QQ(), MUMFORD_VARS, MUMFORD_WEIGHTS)


def xy_ring(field: Field = None) -> PolyRing:
    return PolyRing(field or QQ(), XY_VARS, XY_WEIGHTS)


def x_pair_ring(field: Field = None) -> PolyRing:
    return PolyRing(field or QQ(), X_VARS, X_WEIGHTS)


def _duplication_data(ring: PolyRing):
    """Numerators over the common denominator E of the duplication gammas.

    Returns dict with N (= y1 y2), E, and g1..g6 numerators; gamma_k =
    g<k>_num / E, with E = 2N*(2 b5' - a2 b3')."""
    g = ring.gens()
    a2, a4, b3, b5 = g["a2"], g["a4"], g["b3"], g["b5"]
    l2, l4, l6, l8 = g["l2"], g["l4"], g["l6"], g["l8"]
    N = b3 * b3 * a4 - a2 * b3 * b5 + b5 * b5
    A = a4 * (5 * (a2 * a2 - a4) - 4 * l2 * a2 + 3 * l4) - l8
    B = 5 * (2 * a2 * a4 - a2 ** 3) + 4 * l2 * (a2 * a2 - a4) - 3 * l4 * a2 + 2 * l6
    C = a4 * a4 * (4 * l2 - 5 * a2) - 2 * l6 * a4 + l8 * a2
    b3p_num = b3 * A + b5 * B                      # beta3' * 2N
    b5p_num = -(b3 * C + b5 * A) - 2 * N * b3      # beta5' * 2N
    E = 2 * b5p_num - a2 * b3p_num
    g1_num = (a2 * a2 - 4 * a4) * (2 * N)
    g2_num = 3 * a2 * b5p_num - (a2 * a2 + 2 * a4) * b3p_num
    g4_num = a2 * g2_num + b3 * g1_num - (a2 * a2 - a4) * E
    g6_num = a4 * g2_num + b5 * g1_num - a2 * a4 * E
    return {"N": N, "E": E, "b3p": b3p_num, "b5p": b5p_num,
            "g1": g1_num, "g2": g2_num, "g4": g4_num, "g6": g6_num}


def _three_torsion_mumford_polys(ring: PolyRing):
    g = ring.gens()
    a2, a4, l2 = g["a2"], g["a4"], g["l2"]
    d = _duplication_data(ring)
    E, g1n, g2n, g4n = d["E"], d["g1"], d["g2"], d["g4"]
    E2 = E * E
    r1 = 3 * a2 * E2 - 2 * g2n * E + g1n * g1n
    r2 = (3 * a4 * E2 - 3 * a2 * a2 * E2 + 2 * a2 * (2 * g2n * E - g1n * g1n)
          - 2 * g4n * E - g2n * g2n + l2 * g1n * g1n)
    return r1, r2


def _four_torsion_mumford_polys(ring: PolyRing):
    g = ring.gens()
    a2, a4, b3, b5, l2 = g["a2"], g["a4"], g["b3"], g["b5"], g["l2"]
    d = _duplication_data(ring)
    N, E = d["N"], d["E"]
    g1n, g2n, g4n, g6n = d["g1"], d["g2"], d["g4"], d["g6"]
    E2 = E * E
    E3 = E2 * E
    E4 = E2 * E2
    # non-special branch: the two vanishing-b conditions on 2D, cleared by E^4
    u = 2 * a2 * E2 - g2n * E + g1n * g1n          # E^2 * (2 a2 - g2 + g1^2)
    v = g2n * E - g1n * g1n                        # E^2 * (g2 - g1^2)
    d1 = ((-2 * a4 - a2 * a2) * E4 + u * v
          + g1n * g1n * (g2n - l2 * E) * E + g4n * E3)
    inner = (-2 * a4 * E2 + (3 * a2 * E - g2n) * (a2 * E - g2n)
             + g1n * g1n * (2 * a2 - l2) + 2 * g4n * E)
    d2 = inner * u - g6n * E3
    # special branch: y_{2D} = 0 with the tangency gammas, cleared by (4N)^... powers
    b3p = d["b3p"]                                  # beta3' * 2N
    N2_16 = 16 * N * N
    x_num = (2 * a2 - l2) * N2_16 + b3p * b3p       # X * 16 N^2
    g3_num = 4 * N * b3 + a2 * b3p                  # gamma3 * 4N
    g5_num = 4 * N * b5 + a4 * b3p                  # gamma5 * 4N
    dspec = (b3p * x_num + g3_num * N2_16) * x_num + g5_num * (N2_16 * N2_16)
    return d1, d2, dspec


def _p_of(ring: PolyRing, xname: str) -> WeightedPoly:
    g = ring.gens()
    x = g[xname]
    return (x ** 5 + g["l2"] * x ** 4 + g["l4"] * x ** 3
            + g["l6"] * x ** 2 + g["l8"] * x + g["l10"])


def _dp_of(ring: PolyRing, xname: str) -> WeightedPoly:
    g = ring.gens()
    x = g[xname]
    return 5 * x ** 4 + 4 * g["l2"] * x ** 3 + 3 * g["l4"] * x ** 2 + 2 * g["l6"] * x + g["l8"]


def t_quotient(ring: PolyRing, which: str) -> WeightedPoly:
    """T(x_i) = (P(x1) - P(x2) - P'(x_i)(x1-x2)) / (x1-x2)^2, a weight-6
    polynomial by the order-2 vanishing at x1 = x2."""
    g = ring.gens()
    x1, x2 = g["x1"], g["x2"]
    num = _p_of(ring, "x1") - _p_of(ring, "x2") - _dp_of(ring, which) * (x1 - x2)
    return num.exact_div((x1 - x2) * (x1 - x2))


def three_torsion_y_poly(ring: PolyRing) -> WeightedPoly:
    """The y1*y2-bearing 3-torsion equation (weight 28, uniform)."""
    g = ring.gens()
    x1, y1, x2, y2 = g["x1"], g["y1"], g["x2"], g["y2"]
    p1, p2 = _p_of(ring, "x1"), _p_of(ring, "x2")
    dp1, dp2 = _dp_of(ring, "x1"), _dp_of(ring, "x2")
    quarter = _int_fraction(ring, 1, 4)
    return (y1 * y2 * (dp1 * p2 + dp2 * p1)
            + (x1 - x2) * (dp1 * dp1 * p2 - dp2 * dp2 * p1) * quarter
            - p1 * p2 * (dp1 + dp2 + (x1 - x2) ** 4))


def _int_fraction(ring: PolyRing, num: int, den: int):
    F = ring.field
    d = F.element(den)
    if F.is_zero(d):
        raise CharacteristicTooSmall(f"division by {den} in characteristic {F.characteristic}")
    return F.element(num) / d


def three_torsion_x_poly(ring: PolyRing) -> WeightedPoly:
    """The weight-40 symmetric polynomial in (x1, x2) cutting out 3-torsion
    supports, assembled with exact divisions by (x1 - x2)."""
    g = ring.gens()
    x1, x2, l2 = g["x1"], g["x2"], g["l2"]
    dx = x1 - x2
    p1, p2 = _p_of(ring, "x1"), _p_of(ring, "x2")
    dp1, dp2 = _dp_of(ring, "x1"), _dp_of(ring, "x2")
    t1p, t2p = t_quotient(ring, "x1"), t_quotient(ring, "x2")
    quarter = _int_fraction(ring, 1, 4)
    half = _int_fraction(ring, 1, 2)
    threq = _int_fraction(ring, 3, 4)
    q8 = (p1 - p2).exact_div(dx)
    term1 = -(p2 * p2 * dp1 * t1p * t1p + p1 * p1 * dp2 * t2p * t2p) * quarter
    term2 = ((p2 ** 3) * t1p * t1p - (p1 ** 3) * t2p * t2p).exact_div(dx) * half
    term3 = -(q8 ** 5) * quarter
    term4 = (p2 * p2 * t1p + p1 * p1 * t2p).exact_div(dx) * (q8 * q8) * threq
    term5 = -(p1 * p2) * ((p2 * dp1 - p1 * dp2).exact_div(dx)) * ((t1p + t2p).exact_div(dx))
    term6 = p1 * p2 * (-6 * p1 * p2 + x1 * p2 * dp1 + x2 * p1 * dp2
                       + (p2 * dp1 + p1 * dp2) * (2 * x1 + 2 * x2 + l2))
    return term1 + term2 + term3 + term4 + term5 + term6


_FORMAL_CACHE: dict = {}


def emit_division_polynomials(n: int, coords: str, curve: CanonicalCurve = None) -> DivisionPolySet:
    """Division polynomials with formal (curve=None) or concrete coefficients."""
    if n not in (3, 4):
        raise SerializationError("division polynomials are emitted for n in {3, 4}")
    if coords not in ("mumford", "xy"):
        raise SerializationError("coords must be 'mumford' or 'xy'")
    if n == 4 and coords == "xy":
        raise SerializationError("the n = 4 system is emitted in Mumford coordinates only")
    key = (n, coords)
    if key not in _FORMAL_CACHE:
        if coords == "mumford":
            ring = mumford_ring()
            if n == 3:
                polys = _three_torsion_mumford_polys(ring)
                names = ("a2_relation", "a4_relation")
            else:
                polys = _four_torsion_mumford_polys(ring)
                names = ("b3_vanishing", "b5_vanishing", "y2d_vanishing")
        else:
            xr = x_pair_ring()
            yr = xy_ring()
            polys = (three_torsion_x_poly(xr), three_torsion_y_poly(yr))
            names = ("x_support", "y_support")
        for poly in polys:
            if not poly.is_homogeneous():
                raise SerializationError("internal: emitted polynomial is not weight-homogeneous")
        _FORMAL_CACHE[key] = DivisionPolySet(n, coords, names, tuple(polys))
    result = _FORMAL_CACHE[key]
    if curve is None:
        return result
    # specialize the curve coefficients
    F = curve.field
    if 0 < F.characteristic <= 5:
        raise CharacteristicTooSmall("division polynomials need characteristic 0 or > 5")
    lam_names = ("l2", "l4", "l6", "l8", "l10")
    values = dict(zip(lam_names, curve.lam))
    out = []
    for poly in result.polys:
        keep = [v for v in poly.ring.variables if v not in lam_names]
        keep_w = [poly.ring.weights[poly.ring.index[v]] for v in keep]
        target = PolyRing(F, tuple(keep), tuple(keep_w))
        images = {v: target.var(v) for v in keep}
        images.update({v: target.const(values[v]) for v in lam_names})
        out.append(poly.transport(target, images, lambda c: F.element(c.value)))
    return DivisionPolySet(n, coords, result.names, tuple(out))


# ---------------------------------------------------------------------------
# torsion search over finite fields

def _sqrt_table(field: Field, curve_px):
    table = {}
    for x in field.elements():
        table[x] = field.sqrt(curve_px.evaluate(x))
    return table


def _embedded_curve(curve: CanonicalCurve, big: Field, emb: FieldEmbedding) -> CanonicalCurve:
    return CanonicalCurve(big, tuple(emb.embed(c) for c in curve.lam))


def _quadratic_extension(field: Field):
    p = field.characteristic
    k = getattr(field, "k", 1)
    if 2 * k > 4:
        raise UnsupportedField("torsion scan supports base degree <= 2")
    big = GF(p, 2 * k)
    return big, FieldEmbedding(field, big)


def _candidate_divisors(curve: CanonicalCurve, keep_pair) -> list:
    """Divisors with base-field Mumford coordinates built from support scans.

    keep_pair(x1, y1, x2, y2, working_field) decides whether a sign choice
    survives; rational pairs and Frobenius-conjugate pairs are both scanned.
    Repeated-point divisors 2*(x, y) are always kept (the pair systems do
    not see the diagonal) and left to the caller's final order check.
    """
    F = curve.field
    q = F.order()
    if q is None:
        raise UnsupportedField("torsion search needs a finite field")
    out = []
    table = _sqrt_table(F, curve.px())
    elems = sorted(F.elements(), key=F.sort_key)
    for x0 in elems:
        for y0 in table[x0]:
            if not F.is_zero(y0):
                out.append(mumford_from_points(curve, (x0, y0), (x0, y0)))
    for i, x1 in enumerate(elems):
        y1s = table[x1]
        if not y1s:
            continue
        for x2 in elems[i + 1:]:
            y2s = table[x2]
            if not y2s:
                continue
            for y1 in y1s:
                for y2 in y2s:
                    if keep_pair(x1, y1, x2, y2, F):
                        out.append(mumford_from_points(curve, (x1, y1), (x2, y2)))
    # conjugate supports over the quadratic extension
    big, emb = _quadratic_extension(F)
    bcurve = _embedded_curve(curve, big, emb)
    qf = q
    seen = set()
    for x1 in big.elements():
        x2 = big.pow(x1, qf)
        if x1 == x2:
            continue  # base-field element, already scanned
        orbit = tuple(sorted((big.sort_key(x1), big.sort_key(x2))))
        if orbit in seen:
            continue
        seen.add(orbit)
        y1s = big.sqrt(bcurve.p_at(x1))
        if not y1s:
            continue
        for y1 in y1s:
            y2 = big.pow(y1, qf)
            if not keep_pair(x1, y1, x2, y2, big):
                continue
            D = mumford_from_points(bcurve, (x1, y1), (x2, y2))
            coords = tuple(emb.pullback(c) for c in D.coords)
            out.append(MumfordDivisor.nonspecial(F, *coords))
    uniq = {}
    for d in out:
        uniq[d.sort_key()] = d
    return [uniq[k] for k in sorted(uniq)]


def find_three_torsion(curve: CanonicalCurve) -> list:
    """All 3-torsion divisor classes with base-field Mumford coordinates.

    Solves the x-support polynomial, filters with the y-equation and the
    curve, and certifies every hit by exact order check."""
    F = curve.field
    sets = emit_division_polynomials(3, "xy", curve)
    xpoly, ypoly = sets.polys
    big, emb = _quadratic_extension(F)
    bx = xpoly.transport(PolyRing(big, xpoly.ring.variables, xpoly.ring.weights),
                         {}, lambda c: emb.embed(c))
    by = ypoly.transport(PolyRing(big, ypoly.ring.variables, ypoly.ring.weights),
                         {}, lambda c: emb.embed(c))

    def keep(x1, y1, x2, y2, wf):
        if wf.is_zero(y1) or wf.is_zero(y2):
            return False
        if wf is F:
            if not F.is_zero(xpoly.evaluate({"x1": x1, "x2": x2})):
                return False
            return F.is_zero(ypoly.evaluate({"x1": x1, "y1": y1, "x2": x2, "y2": y2}))
        if not wf.is_zero(bx.evaluate({"x1": x1, "x2": x2})):
            return False
        return wf.is_zero(by.evaluate({"x1": x1, "y1": y1, "x2": x2, "y2": y2}))

    cands = _candidate_divisors(curve, keep)
    return [d for d in cands if is_torsion(d, 3, curve)]


def find_four_torsion(curve: CanonicalCurve) -> list:
    """All exact-order-4 classes with base-field Mumford coordinates, found
    by the residual systems on scanned supports and certified by order."""
    F = curve.field

    def keep(x1, y1, x2, y2, wf):
        return not (wf.is_zero(y1) or wf.is_zero(y2))

    out = []
    for d in _candidate_divisors(curve, keep):
        try:
            _, residuals = four_torsion_residuals(d, curve)
        except GammaUndefined:
            continue
        if all(F.is_zero(r) for r in residuals) and is_torsion(d, 4, curve):
            out.append(d)
    return out


def torsion_branch_classification(D: MumfordDivisor, curve: CanonicalCurve) -> str:
    """Which 4-torsion residual branch applies, from the doubled divisor."""
    doubled, _ = double_traced(D, curve)
    return "special" if doubled.is_special() else "nonspecial"


def find_n_torsion(curve: CanonicalCurve, n: int) -> list:
    if n == 2:
        return two_torsion_divisors(curve)
    if n == 3:
        return find_three_torsion(curve)
    if n == 4:
        return find_four_torsion(curve)
    raise SerializationError("torsion search covers n in {2, 3, 4}")
