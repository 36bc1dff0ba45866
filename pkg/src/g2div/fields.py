"""Exact field arithmetic over Q, F_p, and extension fields F_{p^k}, k <= 4.

Every other module is generic over the (Field, FieldElement) pair defined
here.  Characteristics 2 and 5 are rejected: the hyperelliptic involution
y -> -y degenerates in characteristic 2, and the quintic leading term plus
the 1/10 denominators of the birational transformations misbehave in
characteristic 5.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    DivisionByZero,
    MixedFields,
    NoSquareRoot,
    SerializationError,
    UnsupportedField,
)

EXCLUDED_CHARACTERISTICS = (2, 5)
MAX_EXTENSION_DEGREE = 4


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# integer-coefficient polynomial helpers mod p (internal; also used by
# find_irreducible, which must not depend on the Field classes below)

def _pmod_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmod_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pmod_trim(out)


def _pmod_rem(a, m, p):
    # remainder of a modulo monic m
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1] % p
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _pmod_trim(a)


def _pmod_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        monic = [(c * inv) % p for c in b]
        a, b = b, _pmod_rem(a, monic, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _pmod_powx(e: int, m, p):
    # x^e modulo monic m
    result = [1]
    base = _pmod_rem([0, 1], m, p)
    while e:
        if e & 1:
            result = _pmod_rem(_pmod_mul(result, base, p), m, p)
        base = _pmod_rem(_pmod_mul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible_mod_p(coeffs, p: int) -> bool:
    """Rabin test for a monic polynomial (ascending coefficients) over F_p."""
    k = len(coeffs) - 1
    if k < 1 or coeffs[-1] % p != 1:
        return False
    if k == 1:
        return True
    m = [c % p for c in coeffs]
    # x^(p^k) == x mod m
    xq = _pmod_powx(p ** k, m, p)
    if _pmod_trim([(a - b) % p for a, b in _zip_pad(xq, [0, 1])]):
        return False
    for ell in {f for f in (2, 3) if k % f == 0}:
        xr = _pmod_powx(p ** (k // ell), m, p)
        diff = _pmod_trim([(a - b) % p for a, b in _zip_pad(xr, [0, 1])])
        if len(_pmod_gcd(diff, m, p)) != 1:
            return False
    return True


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def find_irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible of degree k over F_p in lexicographic scan.

    Coefficients returned ascending, length k+1.  Deterministic, so the
    extension field built from (p, k) is reproducible across runs.
    """
    if not is_prime(p) or p in EXCLUDED_CHARACTERISTICS:
        raise UnsupportedField(f"p={p} is not an admissible odd prime")
    if not 1 <= k <= MAX_EXTENSION_DEGREE:
        raise UnsupportedField(f"extension degree {k} outside 1..{MAX_EXTENSION_DEGREE}")
    if k == 1:
        return [0, 1]
    for counter in range(p ** k):
        # digits give (c_{k-1}, ..., c_1, c_0), most significant varying slowest
        digits = []
        n = counter
        for _ in range(k):
            digits.append(n % p)
            n //= p
        coeffs = digits + [1]  # ascending with leading 1
        if is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise UnsupportedField("no irreducible found (unreachable)")


# ---------------------------------------------------------------------------
# field specification

@dataclass(frozen=True)
class FieldSpec:
    """Serializable description of a coefficient field."""

    kind: str  # "rational" | "prime" | "extension"
    p: int | None = None
    k: int | None = None
    modulus: tuple[int, ...] | None = None  # ascending, monic, length k+1

    def __post_init__(self):
        if self.kind == "rational":
            return
        if self.kind not in ("prime", "extension"):
            raise UnsupportedField(f"unknown field kind {self.kind!r}")
        if self.p is None or not is_prime(self.p):
            raise UnsupportedField(f"p={self.p} is not prime")
        if self.p in EXCLUDED_CHARACTERISTICS:
            raise UnsupportedField(f"characteristic {self.p} is excluded")
        if self.kind == "extension":
            if self.k is None or not 2 <= self.k <= MAX_EXTENSION_DEGREE:
                raise UnsupportedField(f"extension degree {self.k} outside 2..{MAX_EXTENSION_DEGREE}")
            if self.modulus is None or len(self.modulus) != self.k + 1:
                raise UnsupportedField("modulus length must be k+1")
            if self.modulus[-1] % self.p != 1:
                raise UnsupportedField("modulus must be monic")
            if not is_irreducible_mod_p(list(self.modulus), self.p):
                raise UnsupportedField("modulus is reducible")

    def to_json(self) -> dict:
        if self.kind == "rational":
            return {"kind": "rational"}
        if self.kind == "prime":
            return {"kind": "prime", "p": self.p}
        return {"kind": "extension", "p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @staticmethod
    def from_json(obj: dict) -> "FieldSpec":
        try:
            kind = obj["kind"]
            if kind == "rational":
                return FieldSpec("rational")
            if kind == "prime":
                return FieldSpec("prime", p=int(obj["p"]))
            if kind == "extension":
                return FieldSpec("extension", p=int(obj["p"]), k=int(obj["k"]),
                                 modulus=tuple(int(c) for c in obj["modulus"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise SerializationError(f"bad field spec: {exc}") from exc
        raise SerializationError(f"unknown field kind {kind!r}")

    def build(self) -> "Field":
        return make_field(self)


# ---------------------------------------------------------------------------
# elements

class FieldElement:
    """Immutable element of a Field; arithmetic delegates to the field."""

    __slots__ = ("field", "value")

    def __init__(self, field: "Field", value):
        self.field = field
        self.value = value

    def __add__(self, other):
        return self.field.add(self, self.field.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.field.sub(self, self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.sub(self.field.coerce(other), self)

    def __mul__(self, other):
        return self.field.mul(self, self.field.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self.field.div(self, self.field.coerce(other))

    def __rtruediv__(self, other):
        return self.field.div(self.field.coerce(other), self)

    def __neg__(self):
        return self.field.neg(self)

    def __pow__(self, e: int):
        return self.field.pow(self, e)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field} vs {other.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.coerce(other).value
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key(), self.value))

    def __bool__(self):
        return not self.field.is_zero(self)

    def __repr__(self):
        return f"{self.field.short_name()}({self.field.to_str(self)})"


class Field:
    """Common interface; subclasses implement raw arithmetic on .value."""

    spec: FieldSpec

    # -- identification -----------------------------------------------------
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def short_name(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.short_name()

    # -- characteristic / size ----------------------------------------------
    characteristic: int = 0

    def order(self) -> int | None:
        """Number of elements, or None for Q."""
        return None

    # -- construction ---------------------------------------------------------
    def element(self, raw) -> FieldElement:
        raise NotImplementedError

    def coerce(self, v) -> FieldElement:
        if isinstance(v, FieldElement):
            if v.field != self:
                raise MixedFields(f"{self} vs {v.field}")
            return v
        if isinstance(v, (int, Fraction)):
            return self.element(v)
        raise MixedFields(f"cannot coerce {v!r} into {self}")

    @property
    def zero(self) -> FieldElement:
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        return self.element(1)

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero(f"division by zero in {self}")
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    # -- square roots ---------------------------------------------------------
    def sqrt(self, a) -> tuple:
        """All square roots of a, deterministically sorted; () is the no-root marker."""
        raise NotImplementedError

    def sqrt_exact(self, a) -> FieldElement:
        roots = self.sqrt(a)
        if not roots:
            raise NoSquareRoot(f"{self.to_str(a)} is not a square in {self}")
        return roots[0]

    def is_square(self, a) -> bool:
        return bool(self.sqrt(a))

    # -- order / serialization -------------------------------------------------
    def sort_key(self, a):
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def from_str(self, s: str) -> FieldElement:
        raise NotImplementedError

    def elements(self):
        """Iterate all elements (finite fields only), deterministic order."""
        raise UnsupportedField(f"{self} is not finite")


class RationalField(Field):
    characteristic = 0

    def __init__(self):
        self.spec = FieldSpec("rational")

    def key(self):
        return ("rational",)

    def short_name(self):
        return "Q"

    def element(self, raw):
        return FieldElement(self, Fraction(raw))

    def add(self, a, b):
        return FieldElement(self, a.value + b.value)

    def sub(self, a, b):
        return FieldElement(self, a.value - b.value)

    def mul(self, a, b):
        return FieldElement(self, a.value * b.value)

    def neg(self, a):
        return FieldElement(self, -a.value)

    def inv(self, a):
        if not a.value:
            raise DivisionByZero("1/0 in Q")
        return FieldElement(self, 1 / a.value)

    def is_zero(self, a):
        return not a.value

    def sqrt(self, a):
        v = a.value
        if v < 0:
            return ()
        if v == 0:
            return (self.zero,)
        rn, rd = isqrt(v.numerator), isqrt(v.denominator)
        if rn * rn != v.numerator or rd * rd != v.denominator:
            return ()
        r = Fraction(rn, rd)
        return (FieldElement(self, -r), FieldElement(self, r))

    def sort_key(self, a):
        return (a.value.numerator, a.value.denominator)

    def to_str(self, a):
        v = a.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"

    def from_str(self, s):
        try:
            return self.element(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise SerializationError(f"bad rational {s!r}") from exc


class PrimeField(Field):
    def __init__(self, p: int):
        self.spec = FieldSpec("prime", p=p)
        self.p = p
        self.characteristic = p

    def key(self):
        return ("prime", self.p)

    def short_name(self):
        return f"F{self.p}"

    def order(self):
        return self.p

    def element(self, raw):
        if isinstance(raw, Fraction):
            if raw.denominator % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            v = raw.numerator * pow(raw.denominator, self.p - 2, self.p) % self.p
        else:
            v = raw % self.p
        return FieldElement(self, v)

    def add(self, a, b):
        return FieldElement(self, (a.value + b.value) % self.p)

    def sub(self, a, b):
        return FieldElement(self, (a.value - b.value) % self.p)

    def mul(self, a, b):
        return FieldElement(self, (a.value * b.value) % self.p)

    def neg(self, a):
        return FieldElement(self, -a.value % self.p)

    def inv(self, a):
        if a.value == 0:
            raise DivisionByZero(f"1/0 in {self}")
        return FieldElement(self, pow(a.value, self.p - 2, self.p))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return FieldElement(self, pow(a.value, e, self.p))

    def is_zero(self, a):
        return a.value == 0

    def sqrt(self, a):
        v = a.value
        if v == 0:
            return (self.zero,)
        if pow(v, (self.p - 1) // 2, self.p) != 1:
            return ()
        r = tonelli_shanks(v, self.p)
        pair = sorted((r, self.p - r))
        return tuple(FieldElement(self, x) for x in pair)

    def sort_key(self, a):
        return a.value

    def to_str(self, a):
        return str(a.value)

    def from_str(self, s):
        try:
            return self.element(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise SerializationError(f"bad element {s!r} for {self}") from exc

    def elements(self):
        for v in range(self.p):
            yield FieldElement(self, v)


def tonelli_shanks(n: int, p: int) -> int:
    """A square root of n mod p for an odd prime p; n must be a QR."""
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    s, q = 0, p - 1
    while q % 2 == 0:
        s += 1
        q //= 2
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class ExtensionField(Field):
    """F_{p^k} as F_p[t]/(m(t)); values are reduced coefficient tuples."""

    def __init__(self, p: int, k: int, modulus=None):
        if modulus is None:
            modulus = tuple(find_irreducible(p, k))
        self.spec = FieldSpec("extension", p=p, k=k, modulus=tuple(m % p for m in modulus))
        self.p = p
        self.k = k
        self.characteristic = p
        self.modulus = self.spec.modulus
        # reduction table: _red[i] represents t^(k+i) as a degree < k vector
        self._red = [tuple((-m) % p for m in self.modulus[:-1])]
        for _ in range(k - 2):
            rep = [0] + list(self._red[-1])
            lead = rep.pop()
            if lead:
                rep = [(a + lead * b) % p for a, b in zip(rep, self._red[0])]
            self._red.append(tuple(rep))

    def key(self):
        return ("extension", self.p, self.k, self.modulus)

    def short_name(self):
        return f"F{self.p}^{self.k}"

    def order(self):
        return self.p ** self.k

    def element(self, raw):
        if isinstance(raw, Fraction):
            if raw.denominator % self.p == 0:
                raise DivisionByZero(f"denominator divisible by {self.p}")
            v = raw.numerator * pow(raw.denominator, self.p - 2, self.p) % self.p
            return FieldElement(self, (v,) + (0,) * (self.k - 1))
        if isinstance(raw, int):
            return FieldElement(self, (raw % self.p,) + (0,) * (self.k - 1))
        raise MixedFields(f"cannot build {self} element from {raw!r}")

    def from_coeffs(self, coeffs) -> FieldElement:
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.k:
            raise SerializationError("too many coefficients")
        c += [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def gen(self) -> FieldElement:
        """The residue class of t."""
        return self.from_coeffs([0, 1])

    def add(self, a, b):
        p = self.p
        return FieldElement(self, tuple((x + y) % p for x, y in zip(a.value, b.value)))

    def sub(self, a, b):
        p = self.p
        return FieldElement(self, tuple((x - y) % p for x, y in zip(a.value, b.value)))

    def neg(self, a):
        p = self.p
        return FieldElement(self, tuple(-x % p for x in a.value))

    def mul(self, a, b):
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        av, bv = a.value, b.value
        for i, x in enumerate(av):
            if x:
                for j, y in enumerate(bv):
                    prod[i + j] += x * y
        out = [c % p for c in prod[:k]]
        for i in range(k, 2 * k - 1):
            c = prod[i] % p
            if c:
                red = self._red[i - k]
                for j in range(k):
                    out[j] = (out[j] + c * red[j]) % p
        return FieldElement(self, tuple(out))

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZero(f"1/0 in {self}")
        # extended Euclid; invariant r_i = s_i * a (mod modulus)
        p = self.p
        r0, r1 = list(self.modulus), _pmod_trim([c % p for c in a.value])
        s0, s1 = [], [1]
        while r1:
            q, r = _pmod_divmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _pmod_trim([(x - y) % p for x, y in _zip_pad(s0, _pmod_mul(q, s1, p))])
        # r0 = gcd is a nonzero constant since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        return self.from_coeffs(_pmod_mul(s0, [c_inv], p))

    def is_zero(self, a):
        return not any(a.value)

    def frobenius(self, a: FieldElement) -> FieldElement:
        return self.pow(a, self.p)

    def sqrt(self, a):
        if self.is_zero(a):
            return (self.zero,)
        q = self.order()
        if self.pow(a, (q - 1) // 2) != self.one:
            return ()
        if q % 4 == 3:
            r = self.pow(a, (q + 1) // 4)
        else:
            r = self._tonelli(a)
        pair = sorted((r, self.neg(r)), key=self.sort_key)
        return tuple(pair)

    def _tonelli(self, a):
        q = self.order()
        s, t = 0, q - 1
        while t % 2 == 0:
            s += 1
            t //= 2
        z = None
        for cand in self.elements():
            if not self.is_zero(cand) and self.pow(cand, (q - 1) // 2) != self.one:
                z = cand
                break
        m, c = s, self.pow(z, t)
        tt, r = self.pow(a, t), self.pow(a, (t + 1) // 2)
        while tt != self.one:
            i, t2 = 0, tt
            while t2 != self.one:
                t2 = self.mul(t2, t2)
                i += 1
            b = self.pow(c, 1 << (m - i - 1))
            m, c = i, self.mul(b, b)
            tt, r = self.mul(tt, c), self.mul(r, b)
        return r

    def sort_key(self, a):
        return tuple(reversed(a.value))

    def to_str(self, a):
        return ",".join(str(c) for c in a.value)

    def from_str(self, s):
        try:
            return self.from_coeffs([int(c) for c in s.split(",")])
        except ValueError as exc:
            raise SerializationError(f"bad element {s!r} for {self}") from exc

    def elements(self):
        p, k = self.p, self.k
        for n in range(p ** k):
            coeffs = []
            v = n
            for _ in range(k):
                coeffs.append(v % p)
                v //= p
            yield FieldElement(self, tuple(coeffs))


def _pmod_divmod(a, b, p):
    """Quotient and remainder of a by nonzero b over F_p (ascending lists)."""
    a = [c % p for c in a]
    b = _pmod_trim([c % p for c in b])
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - db
        q[shift] = c
        if c:
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - c * bi) % p
        a.pop()
        while a and a[-1] % p == 0:
            a.pop()
    return _pmod_trim(q), _pmod_trim(a)


_FIELD_CACHE: dict = {}


def make_field(spec: FieldSpec) -> Field:
    keyed = (spec.kind, spec.p, spec.k, spec.modulus)
    if keyed not in _FIELD_CACHE:
        if spec.kind == "rational":
            _FIELD_CACHE[keyed] = RationalField()
        elif spec.kind == "prime":
            _FIELD_CACHE[keyed] = PrimeField(spec.p)
        else:
            _FIELD_CACHE[keyed] = ExtensionField(spec.p, spec.k, spec.modulus)
    return _FIELD_CACHE[keyed]


def QQ() -> RationalField:
    return make_field(FieldSpec("rational"))


def GF(p: int, k: int = 1, modulus=None) -> Field:
    if k == 1:
        return make_field(FieldSpec("prime", p=p))
    if modulus is None:
        modulus = tuple(find_irreducible(p, k))
    return make_field(FieldSpec("extension", p=p, k=k, modulus=tuple(modulus)))


class FieldEmbedding:
    """Embedding of a prime or extension field into a larger extension field.

    The image of the small field's generator is a root of its modulus in the
    big field, found by deterministic scan; pullback solves the resulting
    linear system over F_p.
    """

    def __init__(self, small: Field, big: ExtensionField):
        if small.characteristic != big.characteristic:
            raise MixedFields("characteristic mismatch")
        self.small = small
        self.big = big
        p = big.p
        if isinstance(small, PrimeField):
            self._basis = [big.one]
        elif isinstance(small, ExtensionField):
            if big.k % small.k != 0:
                raise UnsupportedField(f"degree {small.k} does not divide {big.k}")
            root = None
            for cand in big.elements():
                acc = big.zero
                for c in reversed(small.modulus):
                    acc = big.add(big.mul(acc, cand), big.element(c))
                if big.is_zero(acc):
                    root = cand
                    break
            if root is None:
                raise UnsupportedField("modulus has no root in target field")
            self._basis = [big.one]
            for _ in range(small.k - 1):
                self._basis.append(big.mul(self._basis[-1], root))
        else:
            raise UnsupportedField("can only embed finite fields")
        # pullback matrix: columns are basis vectors over F_p
        self._cols = [b.value for b in self._basis]
        self.p = p

    def embed(self, a: FieldElement) -> FieldElement:
        if isinstance(self.small, PrimeField):
            return self.big.element(a.value)
        acc = self.big.zero
        for c, b in zip(a.value, self._basis):
            if c:
                acc = self.big.add(acc, self.big.mul(self.big.element(c), b))
        return acc

    def pullback(self, a: FieldElement) -> FieldElement:
        """Inverse image in the small field; raises if a is not in the image."""
        p, n = self.p, self.big.k
        m = len(self._cols)
        # solve sum c_j * col_j = a.value over F_p by Gaussian elimination
        rows = [[self._cols[j][i] for j in range(m)] + [a.value[i]] for i in range(n)]
        piv = []
        r = 0
        for col in range(m):
            sel = next((i for i in range(r, n) if rows[i][col] % p), None)
            if sel is None:
                continue
            rows[r], rows[sel] = rows[sel], rows[r]
            inv = pow(rows[r][col], p - 2, p)
            rows[r] = [(x * inv) % p for x in rows[r]]
            for i in range(n):
                if i != r and rows[i][col] % p:
                    f = rows[i][col]
                    rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
            piv.append(col)
            r += 1
        sol = [0] * m
        for i, col in enumerate(piv):
            sol[col] = rows[i][-1] % p
        for i in range(r, n):
            if rows[i][-1] % p:
                raise MixedFields("element is not in the embedded subfield")
        # verify (guards non-pivot columns)
        cand = (self.small.element(sol[0]) if isinstance(self.small, PrimeField)
                else self.small.from_coeffs(sol))
        if self.embed(cand) != a:
            raise MixedFields("element is not in the embedded subfield")
        return cand
