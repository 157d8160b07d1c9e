"""Deterministic pseudo-random sign matrices from dual BCH codewords.

The pipeline: pick the extension degree m that fits N(N+1)/2 sign slots
into one codeword of length 2^m - 1, build the narrow-sense binary BCH code
and its dual, map codeword bits to +-1 signs, and fill a symmetric N x N
matrix scaled by 1/(2 sqrt(N)).  Verification tools measure closeness of the
spectrum to the semicircle law and the combinatorial pseudo-randomness of
the sign patterns.
"""

from . import codes, fileio, gf2, matgen, spectral, stats

__version__ = "0.1.0"

__all__ = ["gf2", "codes", "matgen", "spectral", "stats", "fileio", "__version__"]
