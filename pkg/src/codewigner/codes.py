"""Primitive narrow-sense binary BCH codes and their duals.

A cyclic code of length n = 2^m - 1 is identified with polynomial multiples
of its generator g(x) taken modulo x^n + 1; message and codeword bit vectors
use the same little-endian integer encoding as :mod:`codewigner.gf2` (bit i
is the coefficient of x^i).

The BCH generator for designed distance delta is the least common multiple
of the minimal polynomials of alpha, alpha^2, ..., alpha^(delta-2); even
powers contribute nothing new because squaring is a field automorphism.  In
the regime 1 <= 2t - 1 < 2^floor(m/2) + 1 (with delta = 2t + 1) the minimal
polynomials involved are distinct of degree m, so deg g = m*t exactly and
the dual code has dimension m*t.

Dual codewords are produced directly from the check polynomial
h(x) = (x^n + 1) / g~(x), where g~ is the reciprocal of g: the words
v(x) * h(x) for deg v < m*t enumerate the dual code.  Each such word obeys
the linear recurrence whose taps are the coefficients of the modulus, which
is also how :func:`lfsr_msequence` generates it; the two routes cross-check
each other in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import gf2
from .gf2 import BinaryPolynomial, FieldGF2m

ENUMERATION_LIMIT = 24  # 2^k words; above this, enumeration is refused
BRUTEFORCE_LIMIT = 20  # message bits for exhaustive distance search


class CodeParams(NamedTuple):
    n: int
    k: int
    k_dual: int
    t: int


def code_params(m: int, delta: int) -> CodeParams:
    """Dimensions of the narrow-sense BCH code for (m, delta).

    Requires delta odd, delta >= 3, and 2t - 1 < 2^floor(m/2) + 1 with
    t = (delta - 1) / 2; in that regime k = n - m*t and the dual dimension
    is m*t.
    """
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if delta < 3 or delta % 2 == 0:
        raise ValueError(f"designed distance must be odd and >= 3, got {delta}")
    t = (delta - 1) // 2
    if not 2 * t - 1 < 2 ** (m // 2) + 1:
        raise ValueError(
            f"(m={m}, delta={delta}) outside the regime 2t-1 < 2^(m//2)+1; "
            "the generator degree would no longer be m*t"
        )
    n = (1 << m) - 1
    return CodeParams(n=n, k=n - m * t, k_dual=m * t, t=t)


def bch_generator(field: FieldGF2m, delta: int) -> BinaryPolynomial:
    """Generator polynomial: lcm of minimal polynomials of alpha^j.

    Starts from the minimal polynomial of alpha (the field modulus) and
    multiplies in the minimal polynomial of alpha^j for j = 2..delta-1
    whenever it is not already a factor.
    """
    code_params(field.degree, delta)
    g = field.modulus
    alpha = field.alpha
    for j in range(2, delta):
        fj = gf2.minimal_polynomial(field, alpha ** j)
        if g % fj != 0:
            g = g * fj
    return g


def dual_check_poly(g, n: int) -> BinaryPolynomial:
    """Check polynomial h = (x^n + 1) / g~ with g~ the reciprocal of g.

    Computed by power-series inversion of g~ (exact since g~(0) = 1) and
    verified by multiplying back; raises ValueError when g does not divide
    x^n + 1, i.e. when g does not generate a cyclic code of length n.
    """
    gv = gf2._val(g)
    d = gv.bit_length() - 1
    if gv == 0 or not gv & 1 or d >= n:
        raise ValueError("generator must be nonzero with g(0) = 1 and deg g < n")
    grec = gf2._reciprocal(gv)
    h = gf2._series_inverse(grec, n - d + 1)
    if gf2._mul(grec, h) != (1 << n) | 1:
        raise ValueError(f"generator does not divide x^{n} + 1")
    return BinaryPolynomial(h)


@dataclass(frozen=True)
class BchCode:
    """A primitive narrow-sense BCH code together with its dual's data."""

    m: int
    n: int
    delta: int
    t: int
    k: int
    k_dual: int
    modulus: BinaryPolynomial
    generator: BinaryPolynomial
    check: BinaryPolynomial


def bch_code(m: int, delta: int, modulus=None) -> BchCode:
    """Assemble the BCH code for (m, delta) over GF(2^m).

    The modulus defaults to the DEFAULT_PRIMITIVE table entry.  The
    generator degree is checked against the regime prediction m*t.
    """
    params = code_params(m, delta)
    field = gf2.field_new(m, modulus)
    g = bch_generator(field, delta)
    if g.degree != m * params.t:
        raise AssertionError(
            f"generator degree {g.degree} != m*t = {m * params.t}"
        )
    h = dual_check_poly(g, params.n)
    return BchCode(
        m=m,
        n=params.n,
        delta=delta,
        t=params.t,
        k=params.k,
        k_dual=params.k_dual,
        modulus=field.modulus,
        generator=g,
        check=h,
    )


@dataclass(frozen=True, eq=False)
class DualCodeword:
    """One dual codeword: its bits, the message encoding it, and the length."""

    bits: np.ndarray
    message: int
    n: int

    def weight(self) -> int:
        return int(self.bits.sum())


def _bits_from_int(value: int, n: int) -> np.ndarray:
    raw = value.to_bytes((n + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:n]


def dual_codeword(code: BchCode, message: int) -> DualCodeword:
    """Dual codeword v(x) * h(x) for the message polynomial v.

    message is the little-endian bit encoding of v, 0 <= message < 2^k_dual.
    deg(v*h) <= n - 1, so no reduction mod x^n + 1 is ever needed.
    """
    if not 0 <= message < (1 << code.k_dual):
        raise ValueError(f"message out of range [0, 2^{code.k_dual})")
    word = gf2._mul(message, code.check.value)
    return DualCodeword(bits=_bits_from_int(word, code.n), message=message, n=code.n)


def enumerate_dual_codewords(code: BchCode) -> Iterator[DualCodeword]:
    """All 2^k_dual dual codewords in message order, zero word included."""
    if code.k_dual > ENUMERATION_LIMIT:
        raise ValueError(
            f"dual dimension {code.k_dual} exceeds enumeration limit "
            f"{ENUMERATION_LIMIT}"
        )
    for message in range(1 << code.k_dual):
        yield dual_codeword(code, message)


def lfsr_msequence(prim, init: int = 1) -> np.ndarray:
    """One period of the m-sequence from a Fibonacci LFSR with taps prim.

    State (s_k, ..., s_(k+m-1)) sits in an m-bit register, bit i holding
    s_(k+i); each step outputs s_k and feeds back
    s_(k+m) = sum_i prim_i * s_(k+i) mod 2.  For a primitive tap polynomial
    every nonzero state recurs first after 2^m - 1 steps, so the output is
    one full period.
    """
    p = gf2._val(prim)
    m = p.bit_length() - 1
    if m < 2 or not gf2.is_primitive(p):
        raise ValueError("tap polynomial must be primitive of degree >= 2")
    if not 0 < init < (1 << m):
        raise ValueError(f"initial state must be a nonzero {m}-bit value")
    taps = p & ((1 << m) - 1)
    length = (1 << m) - 1
    out = np.empty(length, dtype=np.uint8)
    state = init
    for i in range(length):
        out[i] = state & 1
        feedback = (state & taps).bit_count() & 1
        state = (state >> 1) | (feedback << (m - 1))
    return out


def min_distance_bruteforce(generator, n: int) -> int:
    """Exact minimum distance by enumerating all nonzero codewords.

    Walks messages in Gray-code order so each step updates the running
    codeword with a single shifted XOR of the generator.  Refuses message
    spaces larger than 2^BRUTEFORCE_LIMIT.
    """
    g = gf2._val(generator)
    d = g.bit_length() - 1
    if g == 0 or d >= n:
        raise ValueError("generator must be nonzero with deg g < n")
    k = n - d
    if k > BRUTEFORCE_LIMIT:
        raise ValueError(f"message space 2^{k} exceeds brute-force limit 2^{BRUTEFORCE_LIMIT}")
    best = n + 1
    word = 0
    for i in range(1, 1 << k):
        word ^= g << ((i & -i).bit_length() - 1)
        w = word.bit_count()
        if w < best:
            best = w
    return best
