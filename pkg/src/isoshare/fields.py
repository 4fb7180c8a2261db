"""Exact arithmetic over GF(p), GF(p^2) = GF(p)(i), and GF(2^r).

GF(p^2) is always realized as GF(p) adjoined i with i^2 = -1, which forces
p = 3 (mod 4).  GF(2^r) uses a fixed primitive polynomial per degree so the
designated generator tau is reproducible across runs.
"""

from .errors import LengthMismatch

# Primitive polynomials over GF(2), bit i = coefficient of x^i.
# One fixed choice per degree; tests verify tau has full multiplicative order.
PRIMITIVE_POLY = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


def is_prime(n: int) -> bool:
    """Trial-division primality test; fine for desk-scale moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def check_field_prime(p: int) -> None:
    """Reject moduli where GF(p)(i) with i^2 = -1 is not a field."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p % 4 != 3:
        raise ValueError(f"p = {p} must be 3 (mod 4)")


class Fp:
    """An element of GF(p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def __add__(self, other):
        return Fp(self.v + other.v, self.p)

    def __sub__(self, other):
        return Fp(self.v - other.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * other.v, self.p)

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __pow__(self, e: int):
        return Fp(pow(self.v, e, self.p), self.p)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return Fp(pow(self.v, self.p - 2, self.p), self.p)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        return isinstance(other, Fp) and self.v == other.v and self.p == other.p

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v} mod {self.p})"


def sqrt_mod_p(u: int, p: int):
    """Square root in GF(p) for p = 3 (mod 4), or None if u is a non-square."""
    u %= p
    if u == 0:
        return 0
    r = pow(u, (p + 1) // 4, p)
    return r if r * r % p == u else None


class Fp2:
    """An element c0 + c1*i of GF(p^2) with i^2 = -1."""

    __slots__ = ("c0", "c1", "p")

    def __init__(self, c0: int, c1: int, p: int):
        self.p = p
        self.c0 = c0 % p
        self.c1 = c1 % p

    def __add__(self, other):
        return Fp2(self.c0 + other.c0, self.c1 + other.c1, self.p)

    def __sub__(self, other):
        return Fp2(self.c0 - other.c0, self.c1 - other.c1, self.p)

    def __mul__(self, other):
        a, b, c, d, p = self.c0, self.c1, other.c0, other.c1, self.p
        return Fp2(a * c - b * d, a * d + b * c, p)

    def __neg__(self):
        return Fp2(-self.c0, -self.c1, self.p)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Fp2(1, 0, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        p = self.p
        n = (self.c0 * self.c0 + self.c1 * self.c1) % p
        if n == 0:
            raise ZeroDivisionError("inverse of zero in GF(p^2)")
        ninv = pow(n, p - 2, p)
        return Fp2(self.c0 * ninv, -self.c1 * ninv, p)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, Fp2)
            and self.c0 == other.c0
            and self.c1 == other.c1
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.c0, self.c1, self.p))

    def __bool__(self):
        return self.c0 != 0 or self.c1 != 0

    def key(self):
        """Integer pair for deterministic orderings."""
        return (self.c0, self.c1)

    def __repr__(self):
        return f"Fp2({self.c0} + {self.c1}*i mod {self.p})"


def fp2_from_int(c0: int, p: int) -> Fp2:
    return Fp2(c0, 0, p)


def fp2_sqrt(a: Fp2):
    """Canonical square root in GF(p^2), or None if a is a non-square.

    The canonical root is the one whose (c1, c0) integer pair is
    lexicographically smaller, so callers get a deterministic sign.
    """
    p = a.p
    if not a:
        return Fp2(0, 0, p)
    if a.c1 == 0:
        s = sqrt_mod_p(a.c0, p)
        if s is not None:
            root = Fp2(s, 0, p)
        else:
            # c0 is a non-residue, so -c0 is a residue and (t*i)^2 = -t^2.
            t = sqrt_mod_p(-a.c0 % p, p)
            root = Fp2(0, t, p)
    else:
        # Norm must be a residue for a to be a square.
        n = (a.c0 * a.c0 + a.c1 * a.c1) % p
        s = sqrt_mod_p(n, p)
        if s is None:
            return None
        inv2 = pow(2, p - 2, p)
        x = sqrt_mod_p((a.c0 + s) * inv2 % p, p)
        if x is None:
            x = sqrt_mod_p((a.c0 - s) * inv2 % p, p)
        if x is None or x == 0:
            return None
        y = a.c1 * inv2 % p * pow(x, p - 2, p) % p
        root = Fp2(x, y, p)
    if root * root != a:
        return None
    other = -root
    if (other.c1, other.c0) < (root.c1, root.c0):
        root = other
    return root


def _carryless_mul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


class BinaryField:
    """GF(2^r) in polynomial basis with a fixed primitive polynomial."""

    def __init__(self, r: int, poly: int | None = None):
        if poly is None:
            if r not in PRIMITIVE_POLY:
                raise ValueError(f"no primitive polynomial on file for r = {r}")
            poly = PRIMITIVE_POLY[r]
        if poly.bit_length() != r + 1:
            raise ValueError("polynomial degree does not match r")
        self.r = r
        self.poly = poly
        self.size = 1 << r
        self.zero = BinaryFieldElement(0, self)
        self.one = BinaryFieldElement(1, self)
        # tau = x for r >= 2; GF(2) has only the trivial generator 1.
        self.tau = BinaryFieldElement(2 if r >= 2 else 1, self)

    def __call__(self, val: int) -> "BinaryFieldElement":
        if not 0 <= val < self.size:
            raise ValueError(f"value {val} outside GF(2^{self.r})")
        return BinaryFieldElement(val, self)

    def reduce(self, val: int) -> int:
        r, poly = self.r, self.poly
        while val.bit_length() > r:
            val ^= poly << (val.bit_length() - r - 1)
        return val

    def elements(self):
        return (BinaryFieldElement(v, self) for v in range(self.size))

    def __eq__(self, other):
        return (
            isinstance(other, BinaryField)
            and self.r == other.r
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.r, self.poly))

    def __repr__(self):
        return f"BinaryField(r={self.r}, poly={bin(self.poly)})"


class BinaryFieldElement:
    """An element of GF(2^r), coefficients packed as bits of an int."""

    __slots__ = ("val", "field")

    def __init__(self, val: int, field: BinaryField):
        self.val = val
        self.field = field

    def __add__(self, other):
        return BinaryFieldElement(self.val ^ other.val, self.field)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        return BinaryFieldElement(
            self.field.reduce(_carryless_mul(self.val, other.val)), self.field
        )

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.val == 0:
            raise ZeroDivisionError("inverse of zero in GF(2^r)")
        return self ** (self.field.size - 2)

    def __truediv__(self, other):
        return self * other.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, BinaryFieldElement)
            and self.val == other.val
            and self.field == other.field
        )

    def __hash__(self):
        return hash((self.val, self.field.r))

    def __bool__(self):
        return self.val != 0

    def __int__(self):
        return self.val

    def __repr__(self):
        return f"GF(2^{self.field.r}):{self.val:#x}"


GF2 = BinaryField(1)


def element_to_bits(c: BinaryFieldElement) -> tuple[int, ...]:
    """Coefficient vector of c in the polynomial basis, x^0 first."""
    return tuple((c.val >> i) & 1 for i in range(c.field.r))


def element_from_bits(bits, field: BinaryField) -> BinaryFieldElement:
    """Inverse of element_to_bits; rejects vectors of the wrong length."""
    bits = tuple(bits)
    if len(bits) != field.r:
        raise LengthMismatch(f"expected {field.r} bits, got {len(bits)}")
    val = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("bits must be 0 or 1")
        val |= b << i
    return BinaryFieldElement(val, field)
