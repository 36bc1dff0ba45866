"""Truncated power series in one local parameter.

Coefficients are either FieldElements or WeightedPolys; the series is a
plain coefficient list modulo O(t^order).  Used for the expansion of the
curve at infinity and for Taylor rows in confluent interpolation.
"""
from __future__ import annotations

from .errors import CharacteristicTooSmall, DivisionByZero


class SeriesDomain:
    """Adapter giving series code a uniform view on its coefficient domain."""

    def __init__(self, zero, one, int_div):
        self.zero = zero
        self.one = one
        self.int_div = int_div  # divide a coefficient by a small positive int

    @staticmethod
    def for_field(field):
        def int_div(c, n):
            d = field.element(n)
            if field.is_zero(d):
                raise CharacteristicTooSmall(f"division by {n} in characteristic {field.characteristic}")
            return c / d
        return SeriesDomain(field.zero, field.one, int_div)

    @staticmethod
    def for_ring(ring):
        def int_div(c, n):
            d = ring.field.element(n)
            if ring.field.is_zero(d):
                raise CharacteristicTooSmall(f"division by {n} in characteristic {ring.field.characteristic}")
            return c.scale(ring.field.inv(d))
        return SeriesDomain(ring.zero(), ring.one(), int_div)


class TruncatedSeries:
    __slots__ = ("domain", "order", "coeffs")

    def __init__(self, domain: SeriesDomain, coeffs, order: int):
        cs = list(coeffs)[:order]
        cs += [domain.zero] * (order - len(cs))
        self.domain = domain
        self.order = order
        self.coeffs = cs

    @staticmethod
    def constant(domain, c, order):
        return TruncatedSeries(domain, [c], order)

    def __add__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(self.domain,
                               [a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __sub__(self, other):
        n = min(self.order, other.order)
        return TruncatedSeries(self.domain,
                               [a - b for a, b in zip(self.coeffs[:n], other.coeffs[:n])], n)

    def __neg__(self):
        return TruncatedSeries(self.domain, [-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        n = min(self.order, other.order)
        out = [self.domain.zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            for j, b in enumerate(other.coeffs[: n - i]):
                out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.domain, out, n)

    def scale(self, c):
        return TruncatedSeries(self.domain, [a * c for a in self.coeffs], self.order)

    def sqrt_one_plus(self) -> "TruncatedSeries":
        """Square root of a series with constant term 1, normalized to lead 1."""
        t = self.coeffs
        s = [self.domain.one] + [self.domain.zero] * (self.order - 1)
        for k in range(1, self.order):
            acc = t[k]
            for j in range(1, k):
                acc = acc - s[j] * s[k - j]
            s[k] = self.domain.int_div(acc, 2)
        return TruncatedSeries(self.domain, s, self.order)

    def __eq__(self, other):
        n = min(self.order, other.order)
        return all(_eq(a, b) for a, b in zip(self.coeffs[:n], other.coeffs[:n]))

    __hash__ = None

    def __repr__(self):
        return f"Series({self.coeffs}, O(t^{self.order}))"


def _eq(a, b):
    r = a == b
    return bool(r)


def taylor_on_curve(field, px_coeffs, x0, y0, order: int):
    """Taylor coefficients of (x(t), y(t)) = (x0 + t, sqrt(P(x0+t))) at a
    non-branch point (x0, y0), chosen so y(0) = y0.

    px_coeffs: ascending coefficients of P.  Returns the y-series
    coefficient list of length `order`.
    """
    if field.is_zero(y0):
        raise DivisionByZero("Taylor expansion at a branch point")
    dom = SeriesDomain.for_field(field)
    # P(x0 + t) as a truncated series
    xt = TruncatedSeries(dom, [x0, field.one], order)
    acc = TruncatedSeries.constant(dom, field.zero, order)
    for c in reversed(px_coeffs):
        acc = acc * xt + TruncatedSeries.constant(dom, c, order)
    # y = y0 * sqrt(P(x0+t)/y0^2)
    y0sq_inv = field.inv(y0 * y0)
    normalized = acc.scale(y0sq_inv)
    root = normalized.sqrt_one_plus()
    return [c * y0 for c in root.coeffs]
