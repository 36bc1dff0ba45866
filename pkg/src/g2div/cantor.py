"""Independent ground truth: textbook Cantor arithmetic on genus-2 Jacobians.

Deliberately shares nothing with the coordinate-law module: divisors are
(u, v) polynomial pairs, addition is classical composition + reduction, and
enumeration is a scan over candidate pairs.  Agreement with the coordinate
laws is evidence, not tautology.

Sign bridge to Mumford coordinates: the line y + b3*x + b5 vanishing on the
support means v(x) = -b3*x - b5.
"""
from __future__ import annotations

from dataclasses import dataclass

from .curves import CanonicalCurve
from .divisors import NEUTRAL, SPECIAL, MumfordDivisor
from .errors import MixedFields, SerializationError, UnsupportedField
from .fields import Field
from .unipoly import UniPoly, xgcd


@dataclass(frozen=True)
class CantorDivisor:
    u: UniPoly  # monic, deg <= 2
    v: UniPoly  # deg v < deg u

    def __post_init__(self):
        if not self.u.is_zero() and self.u.lead() != self.u.field.one:
            raise SerializationError("u must be monic")

    def degree(self) -> int:
        return self.u.degree()

    def field(self) -> Field:
        return self.u.field

    def key(self):
        F = self.u.field
        return (tuple(F.sort_key(c) for c in self.u.coeffs),
                tuple(F.sort_key(c) for c in self.v.coeffs))

    def __repr__(self):
        return f"Cantor(u={self.u!r}, v={self.v!r})"


def neutral_divisor(field: Field) -> CantorDivisor:
    return CantorDivisor(UniPoly.one(field), UniPoly.zero(field))


def is_valid(d: CantorDivisor, curve: CanonicalCurve) -> bool:
    """Mumford compatibility: u | v^2 - P and deg v < deg u (or v = 0)."""
    if d.u.degree() > 2:
        return False
    if d.v.degree() >= max(d.u.degree(), 1) and not d.v.is_zero():
        return False
    rem = (d.v * d.v - curve.px()) % d.u
    return rem.is_zero()


def cantor_add(a: CantorDivisor, b: CantorDivisor, curve: CanonicalCurve) -> CantorDivisor:
    """Composition then reduction; total on all class representatives."""
    F = curve.field
    if a.u.field != F or b.u.field != F:
        raise MixedFields("divisor/curve field mismatch")
    f = curve.px()
    u1, v1 = a.u, a.v
    u2, v2 = b.u, b.v
    d1, e1, e2 = xgcd(u1, u2)
    d, c1, c2 = xgcd(d1, v1 + v2)
    s1 = c1 * e1
    s2 = c1 * e2
    s3 = c2
    u = (u1 * u2).exact_div(d * d)
    mixed = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = mixed.exact_div(d) % u
    # reduction
    while u.degree() > 2:
        u = (f - v * v).exact_div(u)
        u = u.monic()
        v = (-v) % u
    return CantorDivisor(u.monic(), v)


def cantor_neg(a: CantorDivisor) -> CantorDivisor:
    return CantorDivisor(a.u, (-a.v) % a.u if a.u.degree() > 0 else -a.v)


def cantor_scalar_mul(n: int, a: CantorDivisor, curve: CanonicalCurve) -> CantorDivisor:
    if n < 0:
        return cantor_scalar_mul(-n, cantor_neg(a), curve)
    acc = neutral_divisor(curve.field)
    base = a
    while n:
        if n & 1:
            acc = cantor_add(acc, base, curve)
        base = cantor_add(base, base, curve)
        n >>= 1
    return acc


def cantor_order(a: CantorDivisor, curve: CanonicalCurve, bound: int = 400) -> int:
    acc = a
    for n in range(1, bound + 1):
        if acc.degree() == 0:
            return n
        acc = cantor_add(acc, a, curve)
    raise UnsupportedField(f"order exceeds bound {bound}")


# ---------------------------------------------------------------------------
# Mumford bridge

def to_mumford(d: CantorDivisor) -> MumfordDivisor:
    F = d.u.field
    if d.degree() == 0:
        return MumfordDivisor.neutral(F)
    if d.degree() == 1:
        x0 = -d.u[0]
        return MumfordDivisor.special(F, x0, d.v[0])
    return MumfordDivisor.nonspecial(F, d.u[1], d.u[0], -d.v[1], -d.v[0])


def from_mumford(m: MumfordDivisor) -> CantorDivisor:
    F = m.field
    if m.variant == NEUTRAL:
        return neutral_divisor(F)
    if m.variant == SPECIAL:
        x0, y0 = m.coords
        return CantorDivisor(UniPoly(F, [-x0, 1]), UniPoly(F, [y0]))
    a2, a4, b3, b5 = m.coords
    return CantorDivisor(UniPoly(F, [a4, a2, 1]), UniPoly(F, [-b5, -b3]))


# ---------------------------------------------------------------------------
# exhaustive enumeration over small prime fields

def count_points_on_curve(curve: CanonicalCurve, field: Field = None) -> int:
    """#C(F) including the single point at infinity."""
    F = field or curve.field
    if F.order() is None:
        raise UnsupportedField("point counts need a finite field")
    if F is not curve.field:
        px = curve.px().map_coeffs(F, lambda c: F.element(c.value))
    else:
        px = curve.px()
    total = 1  # infinity
    for x in F.elements():
        val = px.evaluate(x)
        if F.is_zero(val):
            total += 1
        elif F.is_square(val):
            total += 2
    return total


def jacobian_order_from_zeta(curve: CanonicalCurve) -> int:
    """|Jac| = (N1^2 + N2)/2 - q from point counts over F_q and F_{q^2}."""
    from .fields import GF
    F = curve.field
    q = F.order()
    if q is None:
        raise UnsupportedField("zeta count needs a finite field")
    p = F.characteristic
    if q != p:
        raise UnsupportedField("zeta count implemented for prime fields")
    n1 = count_points_on_curve(curve)
    f2 = GF(p, 2)
    n2 = count_points_on_curve(curve, f2)
    assert (n1 * n1 + n2) % 2 == 0
    return (n1 * n1 + n2) // 2 - q


def enumerate_jacobian(curve: CanonicalCurve, limit: int = 31):
    """Every reduced divisor over F_p (p <= limit) plus the group order.

    Scans monic u of degree <= 2 with all compatible v; the count is checked
    against the Hasse-Weil window by the caller/tests.
    """
    F = curve.field
    p = F.order()
    if p is None or p != F.characteristic:
        raise UnsupportedField("enumeration is prime-field only")
    if p > limit:
        raise UnsupportedField(f"p={p} above the desk-scale cap {limit}")
    f = curve.px()
    out = [neutral_divisor(F)]
    # degree 1: u = x - a, v = c with c^2 = P(a)
    for a in F.elements():
        val = f.evaluate(a)
        for c in F.sqrt(val):
            out.append(CantorDivisor(UniPoly(F, [-a, 1]), UniPoly(F, [c])))
    # degree 2: u = x^2 + u1 x + u0, v = v1 x + v0 with u | v^2 - P
    for u1 in F.elements():
        for u0 in F.elements():
            u = UniPoly(F, [u0, u1, 1])
            fr = f % u
            # (v1 x + v0)^2 mod u must equal fr
            for v1 in F.elements():
                for v0 in F.elements():
                    v = UniPoly(F, [v0, v1])
                    if ((v * v - fr) % u).is_zero():
                        out.append(CantorDivisor(u, v))
    return out


def brute_force_n_torsion(curve: CanonicalCurve, n: int, elements=None):
    """Members of exact order n, from the full enumeration."""
    if elements is None:
        elements = enumerate_jacobian(curve)
    found = []
    for d in elements:
        if d.degree() == 0:
            if n == 1:
                found.append(d)
            continue
        k = 1
        acc = d
        while acc.degree() != 0 and k <= n:
            acc = cantor_add(acc, d, curve)
            k += 1
        if acc.degree() == 0 and k == n:
            found.append(d)
    return found
