"""Exact polynomial arithmetic over GF(2) and field construction for GF(2^m).

A binary polynomial is stored as a nonnegative Python integer: bit i of the
integer is the coefficient of x^i.  The encoding is little endian, so hex
literals read with the constant term in the least significant bit, e.g.
x^18 + x^7 + 1 <-> 0x40081.  Python integers are unbounded, so arithmetic is
exact at any degree; addition is XOR and multiplication is a carry-less
convolution.

The degree of the zero polynomial is the sentinel ``NEG_INFINITY`` (not -1),
so deg(f*g) == deg(f) + deg(g) holds for every pair of polynomials.

Module functions accept either :class:`BinaryPolynomial` instances or plain
integers in the bit encoding, and return :class:`BinaryPolynomial` for
polynomial-valued results.
"""

from __future__ import annotations

NEG_INFINITY = float("-inf")

# Default modulus per extension degree: the primitive polynomial of lowest
# weight, lowest integer value breaking ties, found by exhaustive search.
# These coincide with the classic LFSR tables. Every entry is revalidated
# with is_primitive() in the test suite.
DEFAULT_PRIMITIVE = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
    17: 0x20009,
    18: 0x40081,
    19: 0x80027,
    20: 0x100009,
    21: 0x200005,
    22: 0x400003,
    23: 0x800021,
    24: 0x100001B,
    25: 0x2000009,
    26: 0x4000047,
    27: 0x8000027,
    28: 0x10000009,
    29: 0x20000005,
    30: 0x40000053,
    31: 0x80000009,
    32: 0x1000000C5,
}


def _val(f) -> int:
    v = f.value if isinstance(f, BinaryPolynomial) else int(f)
    if v < 0:
        raise ValueError("binary polynomials are encoded as nonnegative integers")
    return v


def _deg(a: int):
    return a.bit_length() - 1 if a else NEG_INFINITY


def _mul(a: int, b: int) -> int:
    # carry-less product; iterate over the set bits of the sparser operand
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    while a:
        low = a & -a
        out ^= b << (low.bit_length() - 1)
        a ^= low
    return out


def _sqr(a: int) -> int:
    # squaring is linear over GF(2): spread the bits out with zero gaps
    return int("0".join(bin(a)[2:]), 2) if a else 0


def _divrem(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db:
        s = a.bit_length() - 1 - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divrem(a, b)[1]
    return a


def _powmod(a: int, e: int, mod: int) -> int:
    a = _divrem(a, mod)[1]
    r = 1
    while e:
        if e & 1:
            r = _divrem(_mul(r, a), mod)[1]
        a = _divrem(_sqr(a), mod)[1]
        e >>= 1
    return r


def _reciprocal(f: int) -> int:
    # bit reversal across the degree span; trailing zeros of f drop the degree
    return int(bin(f)[2:][::-1], 2) if f else 0


def _series_inverse(f: int, nterms: int) -> int:
    # Newton iteration for g with f*g == 1 mod x^nterms; doubles precision
    # per step: given the error e = f*g + 1 == 0 mod x^k, the update
    # g + g*e is correct mod x^2k.
    if not f & 1:
        raise ValueError("series inverse requires constant term 1")
    if nterms < 1:
        raise ValueError("nterms must be positive")
    g = 1
    prec = 1
    while prec < nterms:
        prec = min(2 * prec, nterms)
        mask = (1 << prec) - 1
        e = (_mul(f & mask, g) & mask) ^ 1
        g ^= _mul(g, e) & mask
    return g


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class BinaryPolynomial:
    """Immutable polynomial over GF(2), wrapping its integer bit encoding.

    Supports +, *, divmod, //, % with other polynomials or raw integers.
    Comparison with plain integers compares the encodings, so e.g.
    ``poly_from_hex("0x13") == 0x13`` holds.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        object.__setattr__(self, "value", _val(value))

    def __setattr__(self, name, v):
        raise AttributeError("BinaryPolynomial is immutable")

    @property
    def degree(self):
        """Degree as an int, or NEG_INFINITY for the zero polynomial."""
        return _deg(self.value)

    def is_zero(self) -> bool:
        return self.value == 0

    def reciprocal(self) -> "BinaryPolynomial":
        return poly_reciprocal(self)

    def to_hex(self) -> str:
        return hex(self.value)

    @classmethod
    def from_hex(cls, text: str) -> "BinaryPolynomial":
        return poly_from_hex(text)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, BinaryPolynomial):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __add__(self, other):
        return BinaryPolynomial(self.value ^ _val(other))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        return BinaryPolynomial(_mul(self.value, _val(other)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        q, r = _divrem(self.value, _val(other))
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __lshift__(self, k: int):
        return BinaryPolynomial(self.value << k)

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        terms = []
        for i in range(self.value.bit_length() - 1, -1, -1):
            if self.value >> i & 1:
                terms.append("1" if i == 0 else ("x" if i == 1 else f"x^{i}"))
        return " + ".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({self.to_hex()})"


def poly_from_hex(text: str) -> BinaryPolynomial:
    """Parse a hex bit-encoding like '0x40081' (prefix optional)."""
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    if not s:
        raise ValueError(f"empty polynomial literal: {text!r}")
    try:
        v = int(s, 16)
    except ValueError:
        raise ValueError(f"not a hex polynomial literal: {text!r}") from None
    return BinaryPolynomial(v)


def poly_to_hex(f) -> str:
    """Serialize to the lowercase hex bit-encoding, '0x' prefixed."""
    return hex(_val(f))


def poly_add(f, g) -> BinaryPolynomial:
    """Sum over GF(2) (XOR of encodings)."""
    return BinaryPolynomial(_val(f) ^ _val(g))


def poly_mul(f, g) -> BinaryPolynomial:
    """Carry-less product."""
    return BinaryPolynomial(_mul(_val(f), _val(g)))


def poly_divrem(f, g) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    """Quotient and remainder of f by g; raises ZeroDivisionError for g = 0."""
    q, r = _divrem(_val(f), _val(g))
    return BinaryPolynomial(q), BinaryPolynomial(r)


def poly_gcd(f, g) -> BinaryPolynomial:
    """Greatest common divisor (monic by construction over GF(2))."""
    return BinaryPolynomial(_gcd(_val(f), _val(g)))


def poly_reciprocal(f) -> BinaryPolynomial:
    """Reciprocal polynomial x^deg(f) * f(1/x).

    Requires a nonzero constant term; otherwise the reversal would drop the
    degree and the map would not be an involution.
    """
    v = _val(f)
    if not v & 1:
        raise ValueError("reciprocal requires a nonzero constant term")
    return BinaryPolynomial(_reciprocal(v))


def poly_series_inverse(f, nterms: int) -> BinaryPolynomial:
    """Inverse of f as a power series, truncated to nterms coefficients.

    Requires f(0) = 1. The result g satisfies f*g == 1 mod x^nterms.
    """
    return BinaryPolynomial(_series_inverse(_val(f), nterms))


def is_irreducible(f) -> bool:
    """Whether f is irreducible over GF(2).

    Any factorization of f (degree m) contains an irreducible factor of
    degree i <= m/2, and every irreducible of degree i divides x^(2^i) - x,
    so f is irreducible iff gcd(f, x^(2^i) - x) = 1 for all i <= m/2 and
    x^(2^m) == x mod f.  Repeated squaring mod f walks the Frobenius orbit.
    """
    v = _val(f)
    m = _deg(v)
    if isinstance(m, float) or m < 1:
        return False
    xq = 2  # the polynomial x
    for _ in range(m // 2):
        xq = _divrem(_sqr(xq), v)[1]
        if _gcd(xq ^ 2, v) != 1:
            return False
    for _ in range(m - m // 2):
        xq = _divrem(_sqr(xq), v)[1]
    return xq == _divrem(2, v)[1]


def is_primitive(f) -> bool:
    """Whether f is primitive: irreducible with x of full multiplicative
    order 2^m - 1 modulo f.  Defined here for deg f >= 2.

    The order check divides out each prime factor of 2^m - 1 (factored by
    trial division, fine for m <= 64) and verifies x^((2^m-1)/p) != 1.
    """
    v = _val(f)
    m = _deg(v)
    if isinstance(m, float) or m < 2:
        raise ValueError("primitivity check requires degree >= 2")
    if not is_irreducible(v):
        return False
    order = (1 << m) - 1
    return all(_powmod(2, order // p, v) != 1 for p in _prime_factors(order))


class FieldElement:
    """Element of a :class:`FieldGF2m`, wrapping its bit representation."""

    __slots__ = ("field", "bits")

    def __init__(self, field: "FieldGF2m", bits: int):
        if not 0 <= bits < (1 << field.degree):
            raise ValueError(f"element bits out of range for GF(2^{field.degree})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, v):
        raise AttributeError("FieldElement is immutable")

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check(self, other) -> int:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise ValueError("mixed-field arithmetic")
        return other.bits

    def __add__(self, other):
        return FieldElement(self.field, self.bits ^ self._check(other))

    __sub__ = __add__

    def __mul__(self, other):
        return FieldElement(self.field, self.field._mulbits(self.bits, self._check(other)))

    def __pow__(self, e: int):
        if self.bits == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero field element")
            return self.field.one if e == 0 else self.field.zero
        e %= self.field.order
        return FieldElement(self.field, _powmod(self.bits, e, self.field.modulus.value))

    def inverse(self):
        return self ** -1

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.bits == other.bits
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.modulus.value, self.bits))

    def __repr__(self) -> str:
        return f"FieldElement({hex(self.bits)} in GF(2^{self.field.degree}))"


class FieldGF2m:
    """GF(2^m) as residues modulo a primitive polynomial.

    alpha (the residue of x) generates the multiplicative group of order
    2^m - 1, so powers alpha, alpha^2, ... run through every nonzero element.
    """

    def __init__(self, modulus):
        modulus = BinaryPolynomial(_val(modulus))
        if not is_primitive(modulus):
            raise ValueError(f"{modulus!r} is not primitive over GF(2)")
        self.modulus = modulus
        self.degree = int(modulus.degree)
        self.order = (1 << self.degree) - 1

    def _mulbits(self, a: int, b: int) -> int:
        return _divrem(_mul(a, b), self.modulus.value)[1]

    def element(self, bits: int) -> FieldElement:
        return FieldElement(self, bits)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def alpha(self) -> FieldElement:
        return FieldElement(self, 2)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldGF2m):
            return self.modulus.value == other.modulus.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("FieldGF2m", self.modulus.value))

    def __repr__(self) -> str:
        return f"FieldGF2m(degree={self.degree}, modulus={self.modulus.to_hex()})"


def field_new(m: int, modulus=None) -> FieldGF2m:
    """Construct GF(2^m).

    With no modulus, uses the DEFAULT_PRIMITIVE table (m in [2, 32]).
    An explicit modulus must have degree m and be primitive.
    """
    if modulus is None:
        if m not in DEFAULT_PRIMITIVE:
            raise ValueError(f"no default primitive polynomial for m={m}")
        return FieldGF2m(DEFAULT_PRIMITIVE[m])
    field = FieldGF2m(modulus)
    if field.degree != m:
        raise ValueError(f"modulus degree {field.degree} does not match m={m}")
    return field


def minimal_polynomial(field: FieldGF2m, element) -> BinaryPolynomial:
    """Minimal polynomial over GF(2) of a field element.

    Built as the product of (x + c) over the conjugacy class
    {e, e^2, e^4, ...}; the coefficients land in {0, 1} by Galois invariance,
    which is asserted.
    """
    e = element if isinstance(element, FieldElement) else field.element(element)
    if e.field != field:
        raise ValueError("element does not belong to the given field")
    if e.is_zero():
        raise ValueError("minimal polynomial is defined here for nonzero elements")
    conjugates = [e.bits]
    c = field._mulbits(e.bits, e.bits)
    while c != e.bits:
        conjugates.append(c)
        c = field._mulbits(c, c)
    coeffs = [1]
    for c in conjugates:
        nxt = [0] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            nxt[i] ^= field._mulbits(c, a)
            nxt[i + 1] ^= a
        coeffs = nxt
    assert all(a <= 1 for a in coeffs), "conjugate product left GF(2)"
    return BinaryPolynomial(sum(bit << i for i, bit in enumerate(coeffs)))
