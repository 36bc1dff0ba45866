"""Reduced divisors in Mumford coordinates.

A degree-2 class is stored as (a2, a4, b3, b5): the common zeros of
u(x) = x^2 + a2*x + a4 and y + b3*x + b5 are the divisor's support.  Degree
1 classes keep the supporting point, and the neutral class is a tag.  The
two model equations J8, J10 vanish exactly on valid degree-2 coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curves import CanonicalCurve
from .errors import (
    BranchPointInSupport,
    InvolutionPair,
    MixedFields,
    OffCurve,
    RepeatedX,
    SerializationError,
    SingularInterpolation,
)
from .fields import Field, FieldElement, FieldEmbedding, GF
from .series import taylor_on_curve

NONSPECIAL = "nonspecial"
SPECIAL = "special"
NEUTRAL = "neutral"


@dataclass(frozen=True)
class MumfordDivisor:
    field: Field
    variant: str
    coords: tuple  # (a2, a4, b3, b5) | (x, y) | ()

    def __post_init__(self):
        if self.variant not in (NONSPECIAL, SPECIAL, NEUTRAL):
            raise SerializationError(f"unknown divisor variant {self.variant}")
        expected = {NONSPECIAL: 4, SPECIAL: 2, NEUTRAL: 0}[self.variant]
        if len(self.coords) != expected:
            raise SerializationError("wrong coordinate count")
        object.__setattr__(self, "coords", tuple(self.field.coerce(c) for c in self.coords))

    # -- constructors ---------------------------------------------------------
    @staticmethod
    def neutral(field: Field) -> "MumfordDivisor":
        return MumfordDivisor(field, NEUTRAL, ())

    @staticmethod
    def special(field: Field, x, y) -> "MumfordDivisor":
        return MumfordDivisor(field, SPECIAL, (x, y))

    @staticmethod
    def nonspecial(field: Field, a2, a4, b3, b5) -> "MumfordDivisor":
        return MumfordDivisor(field, NONSPECIAL, (a2, a4, b3, b5))

    # -- predicates -------------------------------------------------------------
    def is_neutral(self) -> bool:
        return self.variant == NEUTRAL

    def is_special(self) -> bool:
        return self.variant == SPECIAL

    def is_nonspecial(self) -> bool:
        return self.variant == NONSPECIAL

    @property
    def a2(self):
        return self.coords[0]

    @property
    def a4(self):
        return self.coords[1]

    @property
    def b3(self):
        return self.coords[2]

    @property
    def b5(self):
        return self.coords[3]

    @property
    def point(self):
        return (self.coords[0], self.coords[1])

    def sort_key(self):
        order = {NEUTRAL: 0, SPECIAL: 1, NONSPECIAL: 2}[self.variant]
        return (order,) + tuple(self.field.sort_key(c) for c in self.coords)

    def __repr__(self):
        F = self.field
        if self.is_neutral():
            return "Divisor(O)"
        if self.is_special():
            return f"Divisor(({F.to_str(self.coords[0])}, {F.to_str(self.coords[1])}) - inf)"
        return "Divisor(a=({}, {}), b=({}, {}))".format(*(F.to_str(c) for c in self.coords))


def negate(d: MumfordDivisor) -> MumfordDivisor:
    if d.is_neutral():
        return d
    if d.is_special():
        x, y = d.coords
        return MumfordDivisor.special(d.field, x, -y)
    a2, a4, b3, b5 = d.coords
    return MumfordDivisor.nonspecial(d.field, a2, a4, -b3, -b5)


def mumford_from_points(curve: CanonicalCurve, p1, p2) -> MumfordDivisor:
    """Degree-2 divisor through two on-curve points.

    A repeated point (y != 0) takes the tangent limit b3 = -y', b5 = -y + x*y'.
    Same x with opposite y is an involution pair and must be built as
    Neutral/Special by the caller instead.
    """
    F = curve.field
    x1, y1 = (F.coerce(v) for v in p1)
    x2, y2 = (F.coerce(v) for v in p2)
    if not curve.on_curve((x1, y1)) or not curve.on_curve((x2, y2)):
        raise OffCurve("input point not on the curve")
    if x1 == x2:
        if y1 == y2 and not F.is_zero(y1):
            dy = curve.dp_at(x1) / (y1 + y1)  # tangent slope
            a2, a4 = -(x1 + x1), x1 * x1
            b3 = -dy
            b5 = -y1 + dy * x1
            return MumfordDivisor.nonspecial(F, a2, a4, b3, b5)
        raise InvolutionPair("points share x with opposite y; class is Neutral or Special")
    a2 = -(x1 + x2)
    a4 = x1 * x2
    dx = x1 - x2
    b3 = -(y1 - y2) / dx
    b5 = (x2 * y1 - x1 * y2) / dx
    return MumfordDivisor.nonspecial(F, a2, a4, b3, b5)


def points_from_mumford(d: MumfordDivisor, curve: CanonicalCurve):
    """Support of a degree-2 divisor: ((x1,y1), (x2,y2), field, embedding).

    The points live in the base field when x^2 + a2 x + a4 splits, otherwise
    in its quadratic extension; the embedding (or None) maps base field
    values into the returned field.
    """
    if not d.is_nonspecial():
        raise SerializationError("points_from_mumford needs a degree-2 divisor")
    F = d.field
    a2, a4, b3, b5 = d.coords
    disc = a2 * a2 - 4 * a4
    roots = F.sqrt(disc)
    if roots:
        big, emb = F, None
        r = roots[-1]
        x1 = (-a2 + r) / 2
        x2 = (-a2 - r) / 2
        y1 = -(b3 * x1 + b5)
        y2 = -(b3 * x2 + b5)
        return (x1, y1), (x2, y2), big, emb
    if F.order() is None:
        raise MixedFields("irreducible over Q: no canonical quadratic extension")
    p = F.characteristic
    k = getattr(F, "k", 1)
    big = GF(p, 2 * k)
    emb = FieldEmbedding(F, big)
    A2, A4 = emb.embed(a2), emb.embed(a4)
    B3, B5 = emb.embed(b3), emb.embed(b5)
    r = big.sqrt_exact(A2 * A2 - 4 * A4)
    x1 = (-A2 + r) / 2
    x2 = (-A2 - r) / 2
    y1 = -(B3 * x1 + B5)
    y2 = -(B3 * x2 + B5)
    return (x1, y1), (x2, y2), big, emb


def jacobian_residuals(d: MumfordDivisor, curve: CanonicalCurve):
    """Exact values of the two model equations (J8, J10) at the divisor."""
    if not d.is_nonspecial():
        raise SerializationError("model residuals are defined for degree-2 divisors")
    F = curve.field
    a2, a4, b3, b5 = (F.coerce(c) for c in d.coords)
    l2, l4, l6, l8, l10 = curve.lam
    bracket = b3 * b3 + a2 ** 3 - 4 * a2 * a4 + l2 * (2 * a4 - a2 * a2) + l4 * a2 - l6
    j8 = 2 * b3 * b5 - a2 * a2 * a4 - a4 * a4 + l4 * a4 - l8 - a2 * bracket
    j10 = b5 * b5 - 2 * a2 * a4 * a4 + l2 * a4 * a4 - l10 - a4 * bracket
    return j8, j10


def is_on_jacobian(d: MumfordDivisor, curve: CanonicalCurve) -> bool:
    if d.is_neutral():
        return True
    if d.is_special():
        return curve.on_curve(d.coords)
    j8, j10 = jacobian_residuals(d, curve)
    F = curve.field
    return F.is_zero(j8) and F.is_zero(j10)


def du_derivative(d: MumfordDivisor, direction: str, curve: CanonicalCurve):
    """(d a2/du, d a4/du) along the first-kind flow u1 or u3.

    Chain rule through dx_i/du entries; needs distinct x-support away from
    branch points.
    """
    if direction not in ("u1", "u3"):
        raise SerializationError("direction must be 'u1' or 'u3'")
    (x1, y1), (x2, y2), big, emb = points_from_mumford(d, curve)
    if x1 == x2:
        raise RepeatedX("flow derivative needs x1 != x2")
    if big.is_zero(y1) or big.is_zero(y2):
        raise BranchPointInSupport("flow derivative undefined at a branch point")
    dx = x1 - x2
    if direction == "u1":
        dx1 = (-2 * y1) / dx
        dx2 = (2 * y2) / dx
    else:
        dx1 = (2 * x2 * y1) / dx
        dx2 = (-2 * x1 * y2) / dx
    da2 = -(dx1 + dx2)
    da4 = x2 * dx1 + x1 * dx2
    if emb is not None:
        da2 = emb.pullback(da2)
        da4 = emb.pullback(da4)
    return da2, da4


# ---------------------------------------------------------------------------
# polynomial functions: the monomial ladder and the determinant construction

def monomial_ladder(max_weight: int):
    """Monomials of the function ring as (weight, x-exp, y-exp), ascending.

    Even weights carry x^(w/2); odd weights >= 5 carry y*x^((w-5)/2); the
    gaps 1 and 3 carry nothing.
    """
    out = []
    for w in range(max_weight + 1):
        if w % 2 == 0:
            out.append((w, w // 2, 0))
        elif w >= 5:
            out.append((w, (w - 5) // 2, 1))
    return out


@dataclass(frozen=True)
class PolyFunction:
    """Monic weight-w element of the function ring, coefficients over the ladder."""

    field: Field
    weight: int
    coeffs: tuple  # aligned with monomial_ladder(weight)

    def monomials(self):
        return monomial_ladder(self.weight)

    def evaluate(self, x, y) -> FieldElement:
        F = self.field
        x, y = F.coerce(x), F.coerce(y)
        acc = F.zero
        for (w, xe, ye), c in zip(self.monomials(), self.coeffs):
            t = c
            if xe:
                t = t * F.pow(x, xe)
            if ye:
                t = t * y
            acc = acc + t
        return acc

    def coefficient_of_weight(self, w: int) -> FieldElement:
        for (wt, _, _), c in zip(self.monomials(), self.coeffs):
            if wt == w:
                return c
        return self.field.zero


def _det(field: Field, rows) -> FieldElement:
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one
    for col in range(n):
        piv = next((i for i in range(col, n) if not field.is_zero(m[i][col])), None)
        if piv is None:
            return field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = field.inv(m[col][col])
        for i in range(col + 1, n):
            f = m[i][col] * inv
            if field.is_zero(f):
                continue
            for j in range(col, n):
                m[i][j] = m[i][j] - f * m[col][j]
    return det


def _point_rows(curve: CanonicalCurve, points, ladder):
    """One evaluation row per point; repeated points get Taylor rows.

    Row i of a multiplicity-m group holds the t^i Taylor coefficients of the
    ladder monomials along the curve at that point (rescaling a row leaves
    the determinant ratio unchanged, so Taylor coefficients replace plain
    derivatives).
    """
    F = curve.field
    groups: list = []
    for pt in points:
        for g in groups:
            if g[0] == pt:
                g[1] += 1
                break
        else:
            groups.append([pt, 1])
    rows = []
    px_coeffs = curve.px().coeffs
    for (x0, y0), mult in groups:
        if mult == 1:
            rows.append([F.pow(x0, xe) * (y0 if ye else F.one) if (xe or ye)
                         else F.one for (_, xe, ye) in ladder])
            continue
        if F.is_zero(y0):
            raise BranchPointInSupport("no Taylor rows at a branch point")
        yser = taylor_on_curve(F, px_coeffs, x0, y0, mult)
        # x(t) = x0 + t: binomial powers
        for order in range(mult):
            row = []
            for (_, xe, ye) in ladder:
                # t^order coefficient of (x0+t)^xe * y(t)^ye
                acc = F.zero
                for i in range(order + 1):
                    xc = _binom_coeff(F, xe, i, x0)
                    if ye:
                        yc = yser[order - i] if order - i < len(yser) else F.zero
                    else:
                        yc = F.one if order - i == 0 else F.zero
                    acc = acc + xc * yc
                row.append(acc)
            rows.append(row)
    return rows


def _binom_coeff(F: Field, e: int, i: int, x0) -> FieldElement:
    # t^i coefficient of (x0 + t)^e
    if i > e:
        return F.zero
    from math import comb
    return F.element(comb(e, i)) * F.pow(x0, e - i)


def build_polyfunction(curve: CanonicalCurve, points, weight: int) -> PolyFunction:
    """Monic weight-w function through a positive divisor of degree w-2.

    Determinant-ratio interpolation over the first w-g+1 ladder monomials;
    repeated points contribute Taylor rows.  A vanishing denominator means
    the divisor hides an involution pair (the function acquires an x-factor
    and the interpolation is singular).
    """
    g = 2
    if weight < 2 * g:
        raise SingularInterpolation(f"weight {weight} below 2g = {2*g}")
    ladder = monomial_ladder(weight)
    if len(points) != weight - g:
        raise SingularInterpolation(f"need {weight - g} points for weight {weight}")
    F = curve.field
    for pt in points:
        if not curve.on_curve(pt):
            raise OffCurve(f"{pt} not on the curve")
    rows = _point_rows(curve, points, ladder)
    n = len(ladder)  # = weight - g + 1
    # minor j deletes ladder column j from the point rows
    minors = []
    for j in range(n):
        sub = [[row[i] for i in range(n) if i != j] for row in rows]
        minors.append(_det(F, sub))
    top = minors[-1]  # coefficient of the weight-w monomial before normalizing
    if F.is_zero(top):
        raise SingularInterpolation("denominator minor vanishes (involution pair in the divisor)")
    inv = F.inv(top)
    coeffs = []
    for j in range(n):
        sign = F.one if (n - 1 - j) % 2 == 0 else -F.one
        coeffs.append(sign * minors[j] * inv)
    return PolyFunction(F, weight, tuple(coeffs))


# ---------------------------------------------------------------------------
# serialization

def divisor_to_json(d: MumfordDivisor) -> dict:
    F = d.field
    if d.is_neutral():
        return {"type": "neutral"}
    if d.is_special():
        return {"type": "special", "point": [F.to_str(c) for c in d.coords]}
    return {"type": "nonspecial",
            "alpha": [F.to_str(d.a2), F.to_str(d.a4)],
            "beta": [F.to_str(d.b3), F.to_str(d.b5)]}


def divisor_from_json(field: Field, obj: dict) -> MumfordDivisor:
    try:
        t = obj["type"]
        if t == "neutral":
            return MumfordDivisor.neutral(field)
        if t == "special":
            x, y = (field.from_str(s) for s in obj["point"])
            return MumfordDivisor.special(field, x, y)
        if t == "nonspecial":
            a2, a4 = (field.from_str(s) for s in obj["alpha"])
            b3, b5 = (field.from_str(s) for s in obj["beta"])
            return MumfordDivisor.nonspecial(field, a2, a4, b3, b5)
    except KeyError as exc:
        raise SerializationError(f"missing divisor key: {exc}") from exc
    raise SerializationError(f"unknown divisor type {t!r}")
