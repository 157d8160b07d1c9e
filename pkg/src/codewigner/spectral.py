"""Spectra, exact trace moments, and the semicircle reference law.

With the 1/(2 sqrt(N)) scaling the limiting spectral density is supported
on [-1, 1]:

    pdf(x) = (2/pi) sqrt(1 - x^2)
    cdf(x) = 1/2 + (x/pi) sqrt(1 - x^2) + arcsin(x)/pi

and the even moments are beta_l = binom(l, l/2) / ((l/2 + 1) 2^l), i.e.
1/4, 1/8, 5/64 for l = 2, 4, 6; odd moments vanish.

Trace moments of a sign matrix are computed in exact integer arithmetic:
tr(B^l) for the +-1 matrix is an integer, obtained from powers of the int64
(or, when entries could overflow, object-dtype) matrix, and only divided by
N (2 sqrt(N))^l at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matgen import ScaledSignMatrix

MAX_MOMENT = 20


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues of one matrix (or a pooled family), sorted ascending."""

    eigenvalues: np.ndarray

    def __post_init__(self):
        eigs = np.sort(np.asarray(self.eigenvalues, dtype=np.float64))
        object.__setattr__(self, "eigenvalues", eigs)

    @property
    def size(self) -> int:
        return self.eigenvalues.size

    @classmethod
    def pooled(cls, spectra) -> "Spectrum":
        """Concatenate spectra; the empirical CDF of the pool is the mean of
        the individual empirical CDFs, which is what histogram averaging
        converges to."""
        return cls(np.concatenate([s.eigenvalues for s in spectra]))


def eigenvalues_sym(matrix) -> Spectrum:
    """Spectrum of a ScaledSignMatrix (scaled entries) or symmetric array."""
    if isinstance(matrix, ScaledSignMatrix):
        a = matrix.scaled()
    else:
        a = np.asarray(matrix, dtype=np.float64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("matrix must be square")
        if not np.allclose(a, a.T, rtol=0.0, atol=0.0):
            raise ValueError("matrix must be exactly symmetric")
    return Spectrum(np.linalg.eigvalsh(a))


def empirical_cdf(spectrum: Spectrum, x):
    """F_N(x) = #{eigenvalues <= x} / N, vectorized over x."""
    eigs = spectrum.eigenvalues
    counts = np.searchsorted(eigs, np.asarray(x, dtype=np.float64), side="right")
    out = counts / eigs.size
    return float(out) if np.isscalar(x) or np.asarray(x).ndim == 0 else out


def _int_power(signs: np.ndarray, k: int, order: int) -> np.ndarray:
    """Exact B^k for a +-1 matrix; int64 while entries provably fit."""
    if k == 0:
        return np.eye(order, dtype=np.int64)
    acc = signs.astype(np.int64)
    base = acc
    bound = 1  # max |entry| of acc is bounded by order^(j-1) after j factors
    for _ in range(k - 1):
        bound *= order
        if bound >= 2**62 // order and acc.dtype != object:
            acc = acc.astype(object)
            base = base.astype(object)
        acc = acc @ base
    return acc


def moment_trace(matrix: ScaledSignMatrix, l: int) -> float:
    """beta_l = tr(B_N^l) / N via exact integer traces.

    Splits l = a + b with a = l // 2 and uses
    tr(B^l) = sum_ij (B^a)_ij (B^b)_ij, valid since powers of a symmetric
    matrix are symmetric.  Even moments come out as exact rationals before
    the final float conversion.
    """
    if not 1 <= l <= MAX_MOMENT:
        raise ValueError(f"moment order must be in [1, {MAX_MOMENT}]")
    n = matrix.order
    a, b = l // 2, l - l // 2
    pa = _int_power(matrix.signs, a, n)
    pb = pa if b == a else _int_power(matrix.signs, b, n)
    trace = int((pa.astype(object) * pb.astype(object)).sum())
    if l % 2 == 0:
        return float(Fraction(trace, n * (1 << l) * n ** (l // 2)))
    return trace / (n * (2.0 * math.sqrt(n)) ** l)


def semicircle_pdf(x):
    """Density (2/pi) sqrt(1 - x^2) on [-1, 1]."""
    arr = np.asarray(x, dtype=np.float64)
    inside = np.clip(arr, -1.0, 1.0)
    out = np.where(np.abs(arr) <= 1.0, (2.0 / math.pi) * np.sqrt(1.0 - inside**2), 0.0)
    return float(out) if arr.ndim == 0 else out


def semicircle_cdf(x):
    """Distribution function of the semicircle law on [-1, 1]."""
    arr = np.asarray(x, dtype=np.float64)
    inside = np.clip(arr, -1.0, 1.0)
    core = 0.5 + (inside / math.pi) * np.sqrt(1.0 - inside**2) + np.arcsin(inside) / math.pi
    out = np.where(arr <= -1.0, 0.0, np.where(arr >= 1.0, 1.0, core))
    return float(out) if arr.ndim == 0 else out


def semicircle_moment(l: int) -> Fraction:
    """Exact moment of the semicircle law: 0 for odd l, else
    binom(l, l/2) / ((l/2 + 1) 2^l)."""
    if l < 0:
        raise ValueError("moment order must be nonnegative")
    if l % 2 == 1:
        return Fraction(0)
    half = l // 2
    return Fraction(math.comb(l, half), (half + 1) * (1 << l))


class SemicircleLaw:
    """The reference law as an object, for callers that want one handle."""

    support = (-1.0, 1.0)
    pdf = staticmethod(semicircle_pdf)
    cdf = staticmethod(semicircle_cdf)
    moment = staticmethod(semicircle_moment)


@dataclass(frozen=True)
class KsReport:
    """Kolmogorov-Smirnov distance of a spectrum to the semicircle law."""

    distance: float
    location: float
    size: int
    threshold: float | None = None

    @property
    def passed(self) -> bool | None:
        return None if self.threshold is None else bool(self.distance <= self.threshold)


def kolmogorov_distance(spectrum: Spectrum, threshold: float | None = None) -> KsReport:
    """Exact sup-distance between the empirical CDF and the semicircle CDF.

    The empirical CDF is a step function and the reference CDF is monotone,
    so the supremum is attained at an eigenvalue, approaching from the left
    or the right: D = max_i max(i/n - F(x_i), F(x_i) - (i-1)/n).
    """
    eigs = spectrum.eigenvalues
    n = eigs.size
    if n == 0:
        raise ValueError("empty spectrum")
    ref = semicircle_cdf(eigs)
    upper = np.arange(1, n + 1) / n - ref
    lower = ref - np.arange(0, n) / n
    iu = int(np.argmax(upper))
    il = int(np.argmax(lower))
    if upper[iu] >= lower[il]:
        dist, loc = float(upper[iu]), float(eigs[iu])
    else:
        dist, loc = float(lower[il]), float(eigs[il])
    return KsReport(distance=dist, location=loc, size=n, threshold=threshold)
