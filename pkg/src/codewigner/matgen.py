"""Symmetric +-1/(2 sqrt(N)) matrices from dual BCH codewords.

The first N(N+1)/2 bits of a dual codeword are mapped through
zeta(u) = (-1)^u to signs and written into the upper triangle of an N x N
matrix in row-major order, then mirrored.  The extension degree is the
unique m with 2^(m-1) - 1 < N(N+1)/2 <= 2^m - 1, so one codeword of length
2^m - 1 covers the triangle and the code length never exceeds twice the
number of slots.

Matrices carry their integer sign pattern; the 1/(2 sqrt(N)) scale is
applied on demand so the stored data stays exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import codes
from .codes import BchCode


class ScaledSignMatrix:
    """A symmetric matrix of +-1 signs with implicit scale 1/(2 sqrt(N)).

    signs is an int8 array holding the exact entries of B_N^bar; scaled()
    returns the float matrix B_N = B_N^bar / (2 sqrt(N)).
    """

    __slots__ = ("signs", "order")

    def __init__(self, signs: np.ndarray):
        signs = np.asarray(signs, dtype=np.int8)
        if signs.ndim != 2 or signs.shape[0] != signs.shape[1]:
            raise ValueError("sign matrix must be square")
        if not np.all(np.abs(signs) == 1):
            raise ValueError("sign matrix entries must be +-1")
        if not np.array_equal(signs, signs.T):
            raise ValueError("sign matrix must be symmetric")
        self.signs = signs
        self.order = signs.shape[0]

    @property
    def scale(self) -> float:
        return 0.5 / math.sqrt(self.order)

    def scaled(self) -> np.ndarray:
        return self.signs.astype(np.float64) * self.scale

    def __repr__(self) -> str:
        return f"ScaledSignMatrix(order={self.order})"


def m_for_order(order: int) -> int:
    """The unique m with 2^(m-1) - 1 < N(N+1)/2 <= 2^m - 1."""
    if order < 2:
        raise ValueError(f"need order >= 2, got {order}")
    return (order * (order + 1) // 2).bit_length()


def zeta(bits) -> np.ndarray:
    """Map bits to signs: 0 -> +1, 1 -> -1."""
    bits = np.asarray(bits)
    if not np.all((bits == 0) | (bits == 1)):
        raise ValueError("input must be a 0/1 array")
    return (1 - 2 * bits.astype(np.int8)).astype(np.int8)


def build_matrix(signs, order: int) -> ScaledSignMatrix:
    """Fill the upper triangle row by row with the first N(N+1)/2 signs.

    Extra trailing signs (e.g. the tail of a codeword longer than the
    triangle) are ignored.
    """
    signs = np.asarray(signs)
    slots = order * (order + 1) // 2
    if signs.ndim != 1 or signs.size < slots:
        raise ValueError(f"need at least {slots} signs for order {order}")
    upper = signs[:slots].astype(np.int8)
    rows, cols = np.triu_indices(order)
    out = np.empty((order, order), dtype=np.int8)
    out[rows, cols] = upper
    out[cols, rows] = upper
    return ScaledSignMatrix(out)


@dataclass(frozen=True)
class EnsembleParams:
    """The deterministic ensemble for a given matrix order.

    independence_order is delta - 1: the dual code of a distance-delta code
    has all r-bit patterns exactly balanced for r < delta.
    """

    order: int
    delta: int
    code: BchCode

    @property
    def m(self) -> int:
        return self.code.m

    @property
    def k_dual(self) -> int:
        return self.code.k_dual

    @property
    def independence_order(self) -> int:
        return self.delta - 1


def ensemble_params(order: int, delta: int = 3, modulus=None) -> EnsembleParams:
    """Resolve order -> (m, code) and bundle the ensemble parameters."""
    m = m_for_order(order)
    code = codes.bch_code(m, delta, modulus)
    return EnsembleParams(order=order, delta=delta, code=code)


def sample_pseudo_wigner(params: EnsembleParams, message: int) -> ScaledSignMatrix:
    """The matrix for one message of the dual code.

    message 0 encodes the zero codeword and yields the all-(+1) matrix; it
    is a legitimate ensemble member and must stay in exhaustive averages,
    which rely on exact balance across the whole code.
    """
    word = codes.dual_codeword(params.code, message)
    return build_matrix(zeta(word.bits), params.order)


def random_messages(params: EnsembleParams, count: int, seed: int) -> list[int]:
    """count messages drawn uniformly from [0, 2^k_dual), Philox-seeded."""
    if count < 1:
        raise ValueError("count must be positive")
    rng = np.random.Generator(np.random.Philox(seed))
    nbytes = (params.k_dual + 7) // 8
    mask = (1 << params.k_dual) - 1
    return [int.from_bytes(rng.bytes(nbytes), "little") & mask for _ in range(count)]


def sample_random_wigner(order: int, seed: int) -> ScaledSignMatrix:
    """A truly random sign matrix: i.i.d. fair signs on the upper triangle.

    Philox counter-based generator, so a given (order, seed) pair is
    reproducible across platforms.
    """
    if order < 1:
        raise ValueError(f"need order >= 1, got {order}")
    rng = np.random.Generator(np.random.Philox(seed))
    slots = order * (order + 1) // 2
    bits = rng.integers(0, 2, size=slots, dtype=np.uint8)
    return build_matrix(zeta(bits), order)
