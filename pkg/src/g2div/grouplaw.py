"""Explicit addition and duplication in Mumford coordinates.

The engine is the weight-6 interpolating function x^3 + g1*y + g2*x^2 +
g4*x + g6 through the two support pairs (weight-5 y + g1*x^2 + g3*x + g5
when the sum degenerates to a single point).  Every branch below carries a
tag so oracle tests can prove each one is exercised:

  neutral, inverse, add_points, add_special, generic, double,
  double_to_special, add_to_special, support_overlap (peel/interpolation).

The dispatch order guarantees each later branch's preconditions: neutral
operands, then inverse pairs, then equal operands, then shared support,
then the singular interpolation matrix, then the generic solve.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curves import CanonicalCurve, GeneralCurve
from .divisors import (
    MumfordDivisor,
    build_polyfunction,
    mumford_from_points,
    negate,
    points_from_mumford,
)
from .errors import (
    BranchPointInSupport,
    ConditionViolated,
    GammaUndefined,
    InvolutionPair,
    MixedFields,
    OffCurve,
    QInSupport,
    SameDivisor,
    SingularInterpolation,
    SupportOverlap,
)
from .series import taylor_on_curve


@dataclass(frozen=True)
class GammaR6:
    """Coefficients of the weight-6 interpolating function."""
    g1: object
    g2: object
    g4: object
    g6: object


@dataclass(frozen=True)
class GammaR5:
    """Coefficients of the weight-5 function used for special sums."""
    g1: object
    g3: object
    g5: object


@dataclass(frozen=True)
class TangentData:
    """Directional derivatives of the Mumford coordinates under x1+x2 flow."""
    a2p: object  # always -2
    a4p: object  # = -a2
    b3p: object
    b5p: object


def addition_system(P: MumfordDivisor, Q: MumfordDivisor):
    """The 4x4 linear system for (g6, g4, g2, g1): rows*(gammas) + consts = 0."""
    F = P.field
    rows = []
    consts = []
    for D in (P, Q):
        a2, a4, b3, b5 = D.coords
        rows.append((F.one, F.zero, -a4, -b5))
        rows.append((F.zero, F.one, -a2, -b3))
        consts.append(a2 * a4)
        consts.append(a2 * a2 - a4)
    return rows, consts


def gamma_add(P: MumfordDivisor, Q: MumfordDivisor) -> GammaR6:
    """Interpolation coefficients for two divisors with disjoint support.

    Explicit 2x2 elimination of the 4x4 system; raises when the matrix is
    singular (the sum is special, or supports overlap)."""
    F = P.field
    a2p, a4p, b3p, b5p = P.coords
    a2q, a4q, b3q, b5q = Q.coords
    dA2, dA4 = a2p - a2q, a4p - a4q
    dB3, dB5 = b3p - b3q, b5p - b5q
    det = dA4 * dB3 - dB5 * dA2
    if F.is_zero(det):
        raise SingularInterpolation("gamma matrix singular")
    v1 = a2p * a4p - a2q * a4q
    v2 = a2p * a2p - a2q * a2q - a4p + a4q
    g2 = (dB3 * v1 - dB5 * v2) / det
    g1 = (dA4 * v2 - dA2 * v1) / det
    g6 = a4p * g2 + b5p * g1 - a2p * a4p
    g4 = a2p * g2 + b3p * g1 - (a2p * a2p - a4p)
    return GammaR6(g1, g2, g4, g6)


def tangent_data(curve: CanonicalCurve, D: MumfordDivisor) -> TangentData:
    """Derivative coordinates in closed Mumford form.

    Uses y1*y2 = b3^2*a4 - a2*b3*b5 + b5^2 and the symmetric difference
    quotients of P'; equals the pointwise slope formulas wherever the
    support has distinct x and no branch point."""
    F = curve.field
    a2, a4, b3, b5 = D.coords
    l2, l4, l6, l8 = curve.lam[:4]
    n = b3 * b3 * a4 - a2 * b3 * b5 + b5 * b5  # = y1*y2
    if F.is_zero(n):
        raise BranchPointInSupport("branch point in support: slopes undefined")
    A = a4 * (5 * (a2 * a2 - a4) - 4 * l2 * a2 + 3 * l4) - l8
    B = 5 * (2 * a2 * a4 - a2 ** 3) + 4 * l2 * (a2 * a2 - a4) - 3 * l4 * a2 + 2 * l6
    C = a4 * a4 * (4 * l2 - 5 * a2) - 2 * l6 * a4 + l8 * a2
    inv2n = F.inv(n + n)
    b3p = (b3 * A + b5 * B) * inv2n
    b5p = -(b3 * C + b5 * A) * inv2n - b3
    return TangentData(F.element(-2), -a2, b3p, b5p)


def tangent_data_from_points(curve: CanonicalCurve, p1, p2) -> TangentData:
    """Slope-based variant (used for cross-checks and the extended laws)."""
    F = curve.field
    (x1, y1), (x2, y2) = p1, p2
    if F.is_zero(y1) or F.is_zero(y2):
        raise BranchPointInSupport("slope undefined at a branch point")
    if x1 == x2:
        raise SameDivisor("pointwise tangent data needs x1 != x2")
    s1 = curve.dp_at(x1) / (y1 + y1)
    s2 = curve.dp_at(x2) / (y2 + y2)
    dx = x1 - x2
    b3p = -(s1 - s2) / dx
    b5p = (s1 * x2 - s2 * x1) / dx + (y1 - y2) / dx
    return TangentData(F.element(-2), x1 + x2, b3p, b5p)


def gamma_double(Q: MumfordDivisor, tang: TangentData) -> GammaR6:
    """Duplication coefficients from the derivative data."""
    F = Q.field
    a2, a4, b3, b5 = Q.coords
    den = tang.b5p + tang.b5p - a2 * tang.b3p
    if F.is_zero(den):
        raise GammaUndefined("duplication denominator vanishes: 2Q is special")
    inv = F.inv(den)
    g2 = (3 * a2 * tang.b5p - (a2 * a2 + 2 * a4) * tang.b3p) * inv
    g1 = (a2 * a2 - 4 * a4) * inv
    g6 = a4 * g2 + b5 * g1 - a2 * a4
    g4 = a2 * g2 + b3 * g1 - (a2 * a2 - a4)
    return GammaR6(g1, g2, g4, g6)


def _sum_alpha(F, a2p, a2q, a4p, a4q, g: GammaR6, l2):
    s = g.g2 + g.g2 - g.g1 * g.g1
    a2s = -a2p - a2q + s
    a4s = (-a4p - a4q + a2p * a2p + a2p * a2q + a2q * a2q
           - (a2p + a2q) * s + g.g4 + g.g4 + g.g2 * g.g2 - l2 * g.g1 * g.g1)
    return a2s, a4s

def _sum_beta(F, a2s, a4s, g: GammaR6):
    inv = F.inv(g.g1)
    b3s = -(a2s * a2s - a4s - g.g2 * a2s + g.g4) * inv
    b5s = -(a2s * a4s - g.g2 * a4s + g.g6) * inv
    return b3s, b5s


# ---------------------------------------------------------------------------
# kernels

def add_points(curve: CanonicalCurve, p1, p2) -> MumfordDivisor:
    """Sum of two degree-1 classes; the coordinates coincide with the
    two-point Mumford construction."""
    F = curve.field
    if p1[0] == p2[0] and p1[1] == -p2[1]:
        raise InvolutionPair("points in involution: the sum is Neutral")
    return mumford_from_points(curve, p1, p2)


def add_special(P: MumfordDivisor, q_point, curve: CanonicalCurve) -> MumfordDivisor:
    """Degree-2 plus degree-1 via the weight-5 interpolation limit."""
    F = curve.field
    if not P.is_nonspecial():
        raise MixedFields("first operand must be a degree-2 divisor")
    xq, yq = (F.coerce(v) for v in q_point)
    if not curve.on_curve((xq, yq)):
        raise OffCurve("point not on the curve")
    a2, a4, b3, b5 = P.coords
    den = xq * xq + xq * a2 + a4
    if F.is_zero(den):
        raise QInSupport("point lies in the support of P or -P")
    inv = F.inv(den)
    g1 = -(yq + xq * b3 + b5) * inv
    g3 = (-yq * a2 + xq * xq * b3 + a4 * b3 - a2 * b5) * inv
    g5 = (-yq * a4 + xq * xq * b5 - xq * (a4 * b3 - a2 * b5)) * inv
    l2, l4 = curve.lam[0], curve.lam[1]
    a2s = -a2 + xq + l2 - g1 * g1
    a4s = -a4 + a2 * a2 + (xq - a2) * (xq + l2 - g1 * g1) + l4 - 2 * g1 * g3
    b3s = g1 * a2s - g3
    b5s = g1 * a4s - g5
    return MumfordDivisor.nonspecial(F, a2s, a4s, b3s, b5s)


def add_to_special(P: MumfordDivisor, Q: MumfordDivisor, curve: CanonicalCurve) -> MumfordDivisor:
    """The branch where the sum of two degree-2 classes is a single point.

    Requires the weight-5 consistency condition (equivalently, the singular
    gamma matrix of the generic solve)."""
    F = curve.field
    a2p, a4p, b3p, b5p = P.coords
    a2q, a4q, b3q, b5q = Q.coords
    dA2, dA4 = a2p - a2q, a4p - a4q
    dB3, dB5 = b3p - b3q, b5p - b5q
    det = dA4 * dB3 - dB5 * dA2
    if not F.is_zero(det):
        raise ConditionViolated("sum is not special: use the generic addition")
    if not F.is_zero(dA2):
        g1 = -dB3 / dA2
    elif not F.is_zero(dA4):
        g1 = -dB5 / dA4
    else:
        raise SupportOverlap("identical x-support: not an add_to_special instance")
    g3 = a2p * g1 + b3p
    g5 = a4p * g1 + b5p
    l2 = curve.lam[0]
    xs = a2p + a2q + g1 * g1 - l2
    ys = g1 * xs * xs + g3 * xs + g5
    return MumfordDivisor.special(F, xs, ys)


def double_to_special(Q: MumfordDivisor, curve: CanonicalCurve,
                      tang: TangentData = None) -> MumfordDivisor:
    """Duplication landing on a single point: 2Q ~ (x, y) - inf."""
    F = curve.field
    if tang is None:
        tang = tangent_data(curve, Q)
    a2, a4, b3, b5 = Q.coords
    if not F.is_zero(tang.b5p + tang.b5p - a2 * tang.b3p):
        raise ConditionViolated("2Q is not special: use the generic doubling")
    g1 = tang.b3p / 2
    g3 = (2 * b3 + a2 * tang.b3p) / 2
    g5 = (2 * b5 + a4 * tang.b3p) / 2
    l2 = curve.lam[0]
    xs = a2 + a2 + g1 * g1 - l2
    ys = g1 * xs * xs + g3 * xs + g5
    return MumfordDivisor.special(F, xs, ys)


# ---------------------------------------------------------------------------
# interpolation fallback for overlapping supports

def _cancel_involutions(points):
    pts = list(points)
    changed = True
    while changed:
        changed = False
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                xi, yi = pts[i]
                xj, yj = pts[j]
                if xi == xj and yi == -yj:
                    del pts[j]
                    del pts[i]
                    changed = True
                    break
            if changed:
                break
    return pts


def _extract_complement(curve: CanonicalCurve, gam, points, weight: int) -> MumfordDivisor:
    """Divide the norm polynomial of the interpolating function by the known
    support roots; what is left is the complement divisor, and the reduced
    sum is its negative."""
    F = curve.field
    p_coeffs = list(curve.px().coeffs)
    if weight == 6:
        # sextic (x^3+g2 x^2+g4 x+g6)^2 - g1^2 P(x) = prod (x - x_i) * (x^2 + a2* x + a4*)
        cubic = [gam.g6, gam.g4, gam.g2, F.one]
        sq = _poly_mul(F, cubic, cubic)  # length 7
        g1sq = gam.g1 * gam.g1
        rem = [a - g1sq * b for a, b in zip(sq, p_coeffs + [F.zero])]
    else:
        # quintic P(x) - (g1 x^2 + g3 x + g5)^2
        quad = [gam.g5, gam.g3, gam.g1]
        sq = _poly_mul(F, quad, quad)  # length 5
        rem = [a - b for a, b in zip(p_coeffs, sq + [F.zero])]
    for (x0, _) in points:
        rem = _synth_div(F, rem, x0)
    if len(rem) == 3:
        a2s, a4s = rem[1], rem[0]
        if weight == 6:
            b3s, b5s = _sum_beta(F, a2s, a4s, gam)
        else:
            b3s = gam.g1 * a2s - gam.g3
            b5s = gam.g1 * a4s - gam.g5
        return MumfordDivisor.nonspecial(F, a2s, a4s, b3s, b5s)
    xs = -rem[0]
    ys = gam.g1 * xs * xs + gam.g3 * xs + gam.g5
    return MumfordDivisor.special(F, xs, ys)


def _poly_mul(F, a, b):
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def _synth_div(F, coeffs, root):
    """Exact quotient of an ascending-coefficient list by (x - root)."""
    n = len(coeffs) - 1
    q = [F.zero] * n
    q[n - 1] = coeffs[n]
    for i in range(n - 1, 0, -1):
        q[i - 1] = coeffs[i] + root * q[i]
    return q


def _reduce_point_multiset(curve: CanonicalCurve, points) -> MumfordDivisor:
    """Total reduction of a degree <= 4 positive divisor given by points."""
    F = curve.field
    pts = _cancel_involutions(points)
    m = len(pts)
    if m == 0:
        return MumfordDivisor.neutral(F)
    if m == 1:
        return MumfordDivisor.special(F, *pts[0])
    if m == 2:
        return mumford_from_points(curve, pts[0], pts[1])
    if m == 3:
        # prefer the explicit degree-2 + point formulas when supports split
        counts = {}
        for pt in pts:
            counts[pt] = counts.get(pt, 0) + 1
        if len(counts) >= 2:
            rep = max(counts, key=lambda pt: counts[pt])
            if counts[rep] == 2:
                others = [pt for pt in pts if pt != rep]
                base = mumford_from_points(curve, rep, rep)
                return add_special(base, others[0], curve)
            ordered = sorted(counts, key=lambda pt: (F.sort_key(pt[0]), F.sort_key(pt[1])))
            base = mumford_from_points(curve, ordered[0], ordered[1])
            try:
                return add_special(base, ordered[2], curve)
            except QInSupport:
                pass  # x-collision: fall through to interpolation
        try:
            fn = build_polyfunction(curve, pts, 5)
            gam = GammaR5(fn.coeffs[2], fn.coeffs[1], fn.coeffs[0])
            return _extract_complement(curve, gam, pts, 5)
        except SingularInterpolation as exc:
            raise SupportOverlap(f"degree-3 reduction failed: {exc}") from exc
    # m == 4
    try:
        fn = build_polyfunction(curve, pts, 6)
    except SingularInterpolation:
        # the sum is a single point: weight-5 function through any 3 of the
        # points determines it; the 4th must lie on it
        sub = pts[:3]
        fn5 = build_polyfunction(curve, sub, 5)
        x4, y4 = pts[3]
        if not F.is_zero(fn5.evaluate(x4, y4)):
            raise SupportOverlap("singular weight-6 interpolation without a weight-5 witness")
        gam = GammaR5(fn5.coeffs[2], fn5.coeffs[1], fn5.coeffs[0])
        return _extract_complement(curve, gam, pts, 5)
    gam = GammaR6(fn.coeffs[3], fn.coeffs[2], fn.coeffs[1], fn.coeffs[0])
    return _extract_complement(curve, gam, pts, 6)


# ---------------------------------------------------------------------------
# dispatchers

def add_traced(P: MumfordDivisor, Q: MumfordDivisor, curve: CanonicalCurve):
    """Total addition; returns (reduced divisor, branch tag)."""
    F = curve.field
    if P.field != F or Q.field != F:
        raise MixedFields("divisor/curve field mismatch")
    if P.is_neutral():
        return Q, "neutral"
    if Q.is_neutral():
        return P, "neutral"
    if P.is_special() and Q.is_special():
        (xp, yp), (xq, yq) = P.coords, Q.coords
        if xp == xq and yp == -yq:
            return MumfordDivisor.neutral(F), "inverse"
        return add_points(curve, P.coords, Q.coords), "add_points"
    if P.is_special() or Q.is_special():
        if P.is_special():
            P, Q = Q, P
        try:
            return add_special(P, Q.coords, curve), "add_special"
        except QInSupport:
            pts = _support_points(P, curve) + [Q.coords]
            return _reduce_point_multiset(curve, pts), "support_overlap"
    # both degree 2
    if P == Q:
        return double_traced(P, curve)
    if P.coords[0] == Q.coords[0] and P.coords[1] == Q.coords[1]:
        # same u-polynomial
        if P.coords[2] == -Q.coords[2] and P.coords[3] == -Q.coords[3]:
            return MumfordDivisor.neutral(F), "inverse"
        pts = _support_points(P, curve) + _support_points(Q, curve)
        return _reduce_point_multiset(curve, pts), "support_overlap"
    if _shared_x(P, Q, curve):
        pts = _support_points(P, curve) + _support_points(Q, curve)
        return _reduce_point_multiset(curve, pts), "support_overlap"
    try:
        gam = gamma_add(P, Q)
    except SingularInterpolation:
        return add_to_special(P, Q, curve), "add_to_special"
    a2s, a4s = _sum_alpha(F, P.coords[0], Q.coords[0], P.coords[1], Q.coords[1],
                          gam, curve.lam[0])
    b3s, b5s = _sum_beta(F, a2s, a4s, gam)
    return MumfordDivisor.nonspecial(F, a2s, a4s, b3s, b5s), "generic"


def _shared_x(P, Q, curve) -> bool:
    F = curve.field
    a2p, a4p = P.coords[0], P.coords[1]
    a2q, a4q = Q.coords[0], Q.coords[1]
    if a2p == a2q:
        return False  # distinct u with equal x-sum never share a root unless equal
    x0 = -(a4p - a4q) / (a2p - a2q)
    return F.is_zero(x0 * x0 + a2p * x0 + a4p)


def _support_points(D: MumfordDivisor, curve: CanonicalCurve):
    (p1, p2, big, emb) = points_from_mumford(D, curve)
    if emb is not None:
        raise SupportOverlap("overlap resolution expected rational support")
    return [p1, p2]


def double_traced(Q: MumfordDivisor, curve: CanonicalCurve):
    """Total duplication; returns (reduced divisor, branch tag)."""
    F = curve.field
    if Q.field != F:
        raise MixedFields("divisor/curve field mismatch")
    if Q.is_neutral():
        return Q, "neutral"
    if Q.is_special():
        x, y = Q.coords
        if F.is_zero(y):
            return MumfordDivisor.neutral(F), "double"
        return mumford_from_points(curve, Q.coords, Q.coords), "double"
    a2, a4, b3, b5 = Q.coords
    if F.is_zero(b3) and F.is_zero(b5):
        return MumfordDivisor.neutral(F), "double"  # two branch points
    n = b3 * b3 * a4 - a2 * b3 * b5 + b5 * b5  # y1*y2
    if F.is_zero(n):
        # exactly one branch point: 2Q ~ 2*(other point)
        other = _non_branch_point(Q, curve)
        return mumford_from_points(curve, other, other), "double"
    disc = a2 * a2 - 4 * a4
    if F.is_zero(disc):
        return _double_repeated(Q, curve)
    tang = tangent_data(curve, Q)
    den = tang.b5p + tang.b5p - a2 * tang.b3p
    if F.is_zero(den):
        return double_to_special(Q, curve, tang), "double_to_special"
    gam = gamma_double(Q, tang)
    a2s, a4s = _sum_alpha(F, a2, a2, a4, a4, gam, curve.lam[0])
    b3s, b5s = _sum_beta(F, a2s, a4s, gam)
    return MumfordDivisor.nonspecial(F, a2s, a4s, b3s, b5s), "double"


def _non_branch_point(Q, curve):
    F = curve.field
    a2, a4 = Q.coords[0], Q.coords[1]
    r = F.sqrt(a2 * a2 - 4 * a4)
    if not r:
        raise BranchPointInSupport("irreducible support cannot hold a single branch point")
    x1 = (-a2 + r[-1]) / 2
    x2 = (-a2 - r[-1]) / 2
    xo = x2 if F.is_zero(curve.p_at(x1)) else x1
    yo = -(Q.coords[2] * xo + Q.coords[3])
    return (xo, yo)


def _double_repeated(Q: MumfordDivisor, curve: CanonicalCurve):
    """Confluent duplication of 2S: fourth-order tangency conditions.

    With e = x - x_S the weight-6 function needs g1*r2 + (x_S - a2 + g2) = 0
    and g1*r3 + 1 = 0 against the Taylor coefficients r_k of y(x) at S; when
    r3 = 0 the result is a single point via the weight-5 function."""
    F = curve.field
    a2, a4, b3, b5 = Q.coords
    xs = -a2 / 2
    ys = -(b3 * xs + b5)
    r = taylor_on_curve(F, curve.px().coeffs, xs, ys, 4)
    r2, r3 = r[2], r[3]
    if F.is_zero(r3):
        g1 = -r2
        g3 = b3 + g1 * a2
        g5 = b5 + g1 * a4
        l2 = curve.lam[0]
        xr = a2 + a2 + g1 * g1 - l2
        yr = g1 * xr * xr + g3 * xr + g5
        return MumfordDivisor.special(F, xr, yr), "double_to_special"
    g1 = -F.inv(r3)
    g2 = a2 - xs - g1 * r2
    g4 = a2 * g2 + b3 * g1 - (a2 * a2 - a4)
    g6 = a4 * g2 + b5 * g1 - a2 * a4
    gam = GammaR6(g1, g2, g4, g6)
    a2s, a4s = _sum_alpha(F, a2, a2, a4, a4, gam, curve.lam[0])
    b3s, b5s = _sum_beta(F, a2s, a4s, gam)
    return MumfordDivisor.nonspecial(F, a2s, a4s, b3s, b5s), "double"


def add(P: MumfordDivisor, Q: MumfordDivisor, curve: CanonicalCurve) -> MumfordDivisor:
    return add_traced(P, Q, curve)[0]

def double(Q: MumfordDivisor, curve: CanonicalCurve) -> MumfordDivisor:
    return double_traced(Q, curve)[0]


def scalar_mul(n: int, D: MumfordDivisor, curve: CanonicalCurve) -> MumfordDivisor:
    """n-fold sum by double-and-add with full degenerate dispatch."""
    if n < 0:
        return scalar_mul(-n, negate(D), curve)
    acc = MumfordDivisor.neutral(curve.field)
    base = D
    while n:
        if n & 1:
            acc = add(acc, base, curve)
        n >>= 1
        if n:
            base = double(base, curve)
    return acc


# ---------------------------------------------------------------------------
# extended-curve alpha laws (model with a y*Q(x) cross term, Q != 0)

def _extended_slope(g: GeneralCurve, x, y):
    F = g.field
    q = g.q_poly()
    num = y * q.derivative().evaluate(x) + g.p_poly().derivative().evaluate(x)
    den = y + y - q.evaluate(x)
    if F.is_zero(den):
        raise BranchPointInSupport("vertical tangent on the extended curve")
    return num / den


def _pair_coords(F, pp):
    (x1, y1), (x2, y2) = pp
    if x1 == x2:
        raise SameDivisor("extended law needs distinct x in each pair")
    a2 = -(x1 + x2)
    a4 = x1 * x2
    dx = x1 - x2
    b3 = -(y1 - y2) / dx
    b5 = (x2 * y1 - x1 * y2) / dx
    return a2, a4, b3, b5


def add_extended_alpha(g: GeneralCurve, pp, qq=None):
    """Alpha coordinates of a sum (or double, qq=None) on a form-I curve.

    Only the alpha law is exposed; the nu-corrections enter through
    2*g2 - g1^2 + nu1*g1 and (nu1*g2 - nu2*g1 + nu3)*g1."""
    if g.form != "I":
        raise MixedFields("extended alpha law applies to form I models")
    F = g.field
    n1, n2, n3 = g.nu[0], g.nu[1], g.nu[2]
    for (x, y) in (list(pp) + (list(qq) if qq else [])):
        if not g.on_curve((x, y)):
            raise OffCurve("point not on the extended curve")
    a2p, a4p, b3p, b5p = _pair_coords(F, pp)
    if qq is None:
        (x1, y1), (x2, y2) = pp
        s1 = _extended_slope(g, x1, y1)
        s2 = _extended_slope(g, x2, y2)
        dx = x1 - x2
        b3d = -(s1 - s2) / dx
        b5d = (s1 * x2 - s2 * x1) / dx + (y1 - y2) / dx
        den = b5d + b5d - a2p * b3d
        if F.is_zero(den):
            raise GammaUndefined("extended duplication lands on a single point")
        inv = F.inv(den)
        g2 = (3 * a2p * b5d - (a2p * a2p + 2 * a4p) * b3d) * inv
        g1 = (a2p * a2p - 4 * a4p) * inv
        g4 = a2p * g2 + b3p * g1 - (a2p * a2p - a4p)
        s = g2 + g2 - g1 * g1 + n1 * g1
        a2s = -2 * a2p + s
        a4s = (-2 * a4p + 3 * a2p * a2p - 2 * a2p * s
               + g4 + g4 + g2 * g2 + (n1 * g2 - n2 * g1 + n3) * g1)
        return a2s, a4s
    a2q, a4q, b3q, b5q = _pair_coords(F, qq)
    P = MumfordDivisor.nonspecial(F, a2p, a4p, b3p, b5p)
    Q = MumfordDivisor.nonspecial(F, a2q, a4q, b3q, b5q)
    gam = gamma_add(P, Q)
    s = gam.g2 + gam.g2 - gam.g1 * gam.g1 + n1 * gam.g1
    a2s = -a2p - a2q + s
    a4s = (-a4p - a4q + a2p * a2p + a2p * a2q + a2q * a2q
           - (a2p + a2q) * s + gam.g4 + gam.g4 + gam.g2 * gam.g2
           + (n1 * gam.g2 - n2 * gam.g1 + n3) * gam.g1)
    return a2s, a4s
