"""Deterministic on-disk formats: matrices, spectra, codewords, reports.

Every writer emits exactly the same bytes for the same inputs (no
timestamps, no environment-dependent fields), so identical runs produce
identical files.

Formats:

* Matrix Market, ``coordinate integer symmetric``: the exact sign entries
  of the lower triangle, with a structured comment header of
  ``% key = value`` lines carrying order, m, delta, the primitive
  polynomial and message in hex, and the scale, so a consumer can rebuild
  the scaled matrix bit for bit.
* dense CSV: the scaled float matrix, 17 significant digits.
* spectrum files: one eigenvalue per line, 17 significant digits, ``#``
  header.
* reports: flat ``key = value`` text, ``#`` header, stable key order.
* codewords: packed little-endian bit files plus a JSON sidecar with the
  generating parameters.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import numpy as np

from .codes import DualCodeword
from .matgen import ScaledSignMatrix
from .spectral import Spectrum

MM_BANNER = "%%MatrixMarket matrix coordinate integer symmetric"


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    if value is None:
        return "none"
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def meta_lines(meta: dict, prefix: str) -> list[str]:
    """Header comment lines, one per key, in insertion order."""
    return [f"{prefix} {key} = {_fmt(val)}" for key, val in meta.items()]


def _parse_meta(line: str) -> tuple[str, str] | None:
    body = line.lstrip("%# ").rstrip()
    if "=" not in body:
        return None
    key, _, val = body.partition("=")
    return key.strip(), val.strip()


def provenance_meta(command: str, config: dict) -> dict:
    """Stable header fields: tool version, command, then the config echo."""
    from . import __version__

    meta = {"tool": f"codewigner {__version__}", "command": command}
    meta.update(config)
    return meta


def write_matrix_mm(path, matrix: ScaledSignMatrix, meta: dict) -> None:
    """Exact sign matrix in Matrix Market symmetric coordinate form."""
    n = matrix.order
    lines = [MM_BANNER]
    lines += meta_lines(meta, "%")
    nnz = n * (n + 1) // 2
    lines.append(f"{n} {n} {nnz}")
    signs = matrix.signs
    for i in range(n):
        row = signs[i]
        for j in range(i + 1):
            lines.append(f"{i + 1} {j + 1} {row[j]}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_matrix_mm(path) -> tuple[ScaledSignMatrix, dict]:
    """Rebuild a sign matrix and its header metadata; validates coverage."""
    text = Path(path).read_text().splitlines()
    if not text or text[0].strip() != MM_BANNER:
        raise ValueError(f"{path}: not a symmetric integer Matrix Market file")
    meta: dict[str, str] = {}
    idx = 1
    while idx < len(text) and text[idx].startswith("%"):
        kv = _parse_meta(text[idx])
        if kv:
            meta[kv[0]] = kv[1]
        idx += 1
    if idx >= len(text):
        raise ValueError(f"{path}: missing size line")
    rows, cols, nnz = (int(tok) for tok in text[idx].split())
    if rows != cols:
        raise ValueError(f"{path}: matrix must be square")
    out = np.zeros((rows, rows), dtype=np.int8)
    count = 0
    for line in text[idx + 1 :]:
        if not line.strip():
            continue
        i_s, j_s, v_s = line.split()
        i, j, v = int(i_s) - 1, int(j_s) - 1, int(v_s)
        if v not in (-1, 1):
            raise ValueError(f"{path}: entry {v} is not a sign")
        out[i, j] = v
        out[j, i] = v
        count += 1
    if count != nnz or np.any(np.abs(out) != 1):
        raise ValueError(f"{path}: triangle not fully specified")
    matrix = ScaledSignMatrix(out)
    if "scale" in meta and meta["scale"] != _fmt(matrix.scale):
        raise ValueError(f"{path}: header scale does not match the order")
    return matrix, meta


def write_matrix_csv(path, matrix: ScaledSignMatrix, meta: dict) -> None:
    """Dense scaled matrix, one row per line, 17 significant digits."""
    lines = meta_lines(meta, "#")
    scaled = matrix.scaled()
    for row in scaled:
        lines.append(",".join(f"{v:.17g}" for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def write_spectrum(path, spectrum: Spectrum, meta: dict) -> None:
    """Eigenvalues ascending, one per line, 17 significant digits."""
    lines = meta_lines(meta, "#")
    lines += [f"{v:.17g}" for v in spectrum.eigenvalues]
    Path(path).write_text("\n".join(lines) + "\n")


def read_spectrum(path) -> tuple[Spectrum, dict]:
    meta: dict[str, str] = {}
    values = []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            kv = _parse_meta(line)
            if kv:
                meta[kv[0]] = kv[1]
        elif line.strip():
            values.append(float(line))
    if not values:
        raise ValueError(f"{path}: no eigenvalues found")
    return Spectrum(np.array(values)), meta


def format_report(fields: dict, header: dict | None = None) -> str:
    """Flat key = value text; header fields become # comment lines."""
    lines = meta_lines(header, "#") if header else []
    lines += [f"{key} = {_fmt(val)}" for key, val in fields.items()]
    return "\n".join(lines) + "\n"


def write_report(path, fields: dict, header: dict | None = None) -> None:
    Path(path).write_text(format_report(fields, header))


def read_report(path) -> dict[str, str]:
    """Report fields as raw strings (header lines are skipped)."""
    out: dict[str, str] = {}
    for line in Path(path).read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        kv = _parse_meta(line)
        if kv:
            out[kv[0]] = kv[1]
    return out


def write_codeword(path, word: DualCodeword, meta: dict) -> None:
    """Packed little-endian bits plus a JSON sidecar at path + '.json'."""
    packed = np.packbits(word.bits, bitorder="little")
    Path(path).write_bytes(packed.tobytes())
    sidecar = dict(meta)
    sidecar.update(
        {"n": word.n, "message": hex(word.message), "weight": int(word.bits.sum())}
    )
    Path(str(path) + ".json").write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")


def read_codeword(path) -> tuple[DualCodeword, dict]:
    sidecar = json.loads(Path(str(path) + ".json").read_text())
    n = int(sidecar["n"])
    raw = np.frombuffer(Path(path).read_bytes(), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:n]
    word = DualCodeword(bits=bits, message=int(sidecar["message"], 16), n=n)
    if int(bits.sum()) != int(sidecar["weight"]):
        raise ValueError(f"{path}: bit weight does not match sidecar")
    return word, sidecar
