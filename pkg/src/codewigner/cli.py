"""Command-line interface.

Subcommands:

* gen        build one matrix from a message (or a seeded random message)
* spectrum   eigenvalues of a stored matrix
* ks         Kolmogorov-Smirnov distance of a spectrum to the semicircle law
* verify     run one of the statistical check batteries
* fig1       histogram ensemble study: per-matrix and averaged spectral
             histograms with the semicircle overlay and a KS summary

Exit codes: 0 success / checks passed, 1 a verification check failed,
2 usage or parameter error, 3 internal or I/O error.  Diagnostics go to
stderr; machine-readable report lines go to stdout.  Output files embed a
provenance header (tool version and the full parameter echo) and contain
nothing run-dependent, so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__, fileio, matgen, spectral, stats

HIST_BINS = 50
HIST_RANGE = (-1.1, 1.1)
OVERLAY_POINTS = 441


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_hex(text: str, what: str) -> int:
    s = text.strip().lower()
    if s.startswith("0x"):
        s = s[2:]
    try:
        return int(s, 16)
    except ValueError:
        raise ValueError(f"{what} must be a hex value, got {text!r}") from None


def _resolve_params(order: int, delta: int, prim: str | None) -> matgen.EnsembleParams:
    modulus = _parse_hex(prim, "--prim") if prim is not None else None
    return matgen.ensemble_params(order, delta, modulus)


def _gen_meta(command: str, params: matgen.EnsembleParams, message: int, extra: dict) -> dict:
    config = {
        "order": params.order,
        "m": params.m,
        "delta": params.delta,
        "prim": params.code.modulus.to_hex(),
        "message": hex(message),
        "scale": 0.5 / params.order**0.5,
    }
    config.update(extra)
    return fileio.provenance_meta(command, config)


def cmd_gen(args) -> int:
    params = _resolve_params(args.order, args.delta, args.prim)
    if args.message is not None:
        message = _parse_hex(args.message, "--message")
        if not 0 <= message < (1 << params.k_dual):
            raise ValueError(
                f"--message must be in [0, 2^{params.k_dual}) for order {args.order}"
            )
    else:
        message = matgen.random_messages(params, 1, args.seed)[0]
    matrix = matgen.sample_pseudo_wigner(params, message)
    meta = _gen_meta("gen", params, message, {"format": args.format})
    if args.format == "mm":
        fileio.write_matrix_mm(args.output, matrix, meta)
    else:
        fileio.write_matrix_csv(args.output, matrix, meta)
    _log(f"wrote {args.output}: order {params.order}, message {hex(message)}")
    return 0


def cmd_spectrum(args) -> int:
    matrix, meta = fileio.read_matrix_mm(args.matrix)
    spec = spectral.eigenvalues_sym(matrix)
    out_meta = fileio.provenance_meta("spectrum", {"source": Path(args.matrix).name})
    for key in ("order", "m", "delta", "prim", "message"):
        if key in meta:
            out_meta[key] = meta[key]
    fileio.write_spectrum(args.output, spec, out_meta)
    _log(f"wrote {args.output}: {spec.size} eigenvalues")
    return 0


def cmd_ks(args) -> int:
    if (args.spectrum is None) == (args.matrix is None):
        raise ValueError("pass exactly one of --spectrum or --matrix")
    if args.spectrum is not None:
        spec, _ = fileio.read_spectrum(args.spectrum)
        source = Path(args.spectrum).name
    else:
        matrix, _ = fileio.read_matrix_mm(args.matrix)
        spec = spectral.eigenvalues_sym(matrix)
        source = Path(args.matrix).name
    threshold = 1.0 / args.r if args.r is not None else None
    report = spectral.kolmogorov_distance(spec, threshold)
    fields = {
        "source": source,
        "size": report.size,
        "distance": report.distance,
        "location": report.location,
        "threshold": report.threshold,
        "passed": report.passed,
    }
    text = fileio.format_report(fields, fileio.provenance_meta("ks", {}))
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(text)
    if report.passed is False:
        return 1
    return 0


def _verify_independence(args) -> tuple[dict, bool]:
    from . import codes

    code = codes.bch_code(args.m, args.delta)
    words = list(codes.enumerate_dual_codewords(code))
    fields: dict = {
        "m": args.m,
        "delta": args.delta,
        "n": code.n,
        "words": len(words),
    }
    if args.r is not None:
        # single-order mode: pass iff the requested r is exactly balanced
        rep = stats.test_r_independence(words, code.n, args.r)
        ok = rep.passed
        fields["r"] = args.r
        fields["worst_deviation"] = rep.worst_deviation
        fields["worst_positions"] = ",".join(str(p) for p in rep.worst_positions)
    else:
        # default: balance must hold at delta - 1 and break at delta
        r_pass = args.delta - 1
        rep_pass = stats.test_r_independence(words, code.n, r_pass)
        rep_fail = stats.test_r_independence(words, code.n, args.delta)
        ok = rep_pass.passed and not rep_fail.passed
        fields[f"worst_deviation_r{r_pass}"] = rep_pass.worst_deviation
        fields[f"balanced_r{r_pass}"] = rep_pass.passed
        fields[f"worst_deviation_r{args.delta}"] = rep_fail.worst_deviation
        fields[f"breaks_at_r{args.delta}"] = not rep_fail.passed
    fields["passed"] = ok
    return fields, ok


def _ensemble_matrices(args) -> tuple[matgen.EnsembleParams, list]:
    params = _resolve_params(args.order, args.delta, args.prim)
    messages = matgen.random_messages(params, args.count, args.seed)
    return params, [matgen.sample_pseudo_wigner(params, v) for v in messages]


def _verify_moments(args) -> tuple[dict, bool]:
    params, matrices = _ensemble_matrices(args)
    compare = [
        matgen.sample_random_wigner(args.order, args.seed + 1 + i)
        for i in range(args.count)
    ]
    report = stats.test_moment_match(matrices, args.l_max, compare)
    fields: dict = {"order": args.order, "count": args.count, "m": params.m}
    for row in report.rows:
        fields[f"beta{row.l}_mean"] = row.mean
        fields[f"beta{row.l}_reference"] = row.reference
        fields[f"beta{row.l}_wigner"] = row.compare_mean
        fields[f"beta{row.l}_ok"] = row.passed
    fields["passed"] = report.passed
    return fields, report.passed


def _verify_quasirandom(args) -> tuple[dict, bool]:
    params, matrices = _ensemble_matrices(args)
    reports = [stats.quasirandom_check(m) for m in matrices]
    ok = all(r.passed for r in reports)
    worst_l1 = max(abs(r.lambda1 - args.order / 2.0) for r in reports)
    fields = {
        "order": args.order,
        "count": args.count,
        "m": params.m,
        "max_lambda1_offset": worst_l1,
        "max_lambda2": max(r.lambda2 for r in reports),
        "max_abs_sign_sum": max(abs(r.sign_sum) for r in reports),
        "max_spectral_norm": max(r.spectral_norm for r in reports),
        "sqrt_order": args.order**0.5,
        "passed": ok,
    }
    return fields, ok


def _verify_variance(args) -> tuple[dict, bool]:
    if args.exhaustive:
        # every sign matrix of this order, uniform unit vector, exact rationals
        report = stats.quadratic_form_variance_exact([1] * args.order)
        ok = report.variance == report.reference
        fields = {
            "order": args.order,
            "mode": "exhaustive",
            "variance": report.variance,
            "exact_reference": report.reference,
            "passed": ok,
        }
        return fields, ok
    family = args.family or "uniform"
    if family == "uniform":
        # the finite-N reference assumes fully independent entries, so the
        # Monte Carlo leg draws truly random sign matrices; the code family
        # is pairwise independent only, which the exact enumeration covers
        matrices = [
            matgen.sample_random_wigner(args.order, args.seed + i)
            for i in range(args.count)
        ]
    else:
        _, matrices = _ensemble_matrices(args)
    x = np.full(args.order, 1.0 / args.order**0.5)
    report = stats.quadratic_form_variance(matrices, x)
    fields = {
        "order": args.order,
        "count": args.count,
        "family": family,
        "estimate": report.estimate,
        "std_err": report.std_err,
        "exact_reference": report.exact_reference,
        "pairwise_limit": report.pairwise_limit,
        "fourth_moment_term": report.fourth_moment_term,
        "passed": report.passed,
    }
    return fields, report.passed


def _verify_theorem1(args) -> tuple[dict, bool]:
    params = _resolve_params(args.order, args.delta, args.prim)
    family = args.family or "code"
    report = stats.theorem1_validation(params, args.count, args.r, args.seed, family)
    fields = {
        "order": args.order,
        "family": family,
        "count": args.count,
        "r": report.r,
        "threshold": report.threshold,
        "fraction_within": report.fraction_within,
        "min_distance": report.min_distance,
        "mean_distance": report.mean_distance,
        "max_distance": report.max_distance,
        "passed": report.passed,
    }
    return fields, report.passed


_VERIFY_RUNNERS = {
    "independence": _verify_independence,
    "moments": _verify_moments,
    "quasirandom": _verify_quasirandom,
    "variance": _verify_variance,
    "theorem1": _verify_theorem1,
}


def cmd_verify(args) -> int:
    if args.delta is None:
        args.delta = 5 if args.test == "independence" else 3
    fields, ok = _VERIFY_RUNNERS[args.test](args)
    config = {"test": args.test}
    text = fileio.format_report(fields, fileio.provenance_meta("verify", config))
    sys.stdout.write(text)
    if args.output:
        Path(args.output).write_text(text)
    return 0 if ok else 1


def cmd_fig1(args) -> int:
    params = _resolve_params(args.order, args.delta, args.prim)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    messages = matgen.random_messages(params, args.count, args.seed)
    edges = np.linspace(HIST_RANGE[0], HIST_RANGE[1], HIST_BINS + 1)

    def hist_lines(density: np.ndarray, meta: dict) -> str:
        lines = fileio.meta_lines(meta, "#")
        lines.append("bin_left,bin_right,density")
        for b in range(HIST_BINS):
            lines.append(f"{edges[b]:.17g},{edges[b + 1]:.17g},{density[b]:.17g}")
        return "\n".join(lines) + "\n"

    densities = []
    spectra = []
    ks_rows = []
    for idx, message in enumerate(messages):
        matrix = matgen.sample_pseudo_wigner(params, message)
        spec = spectral.eigenvalues_sym(matrix)
        spectra.append(spec)
        dens, _ = np.histogram(spec.eigenvalues, bins=edges, density=True)
        densities.append(dens)
        meta = _gen_meta("fig1", params, message, {"index": idx})
        (outdir / f"hist_{idx:03d}.csv").write_text(hist_lines(dens, meta))
        ks = spectral.kolmogorov_distance(spec)
        ks_rows.append((f"matrix_{idx:03d}", hex(message), ks.distance, ks.location))

    pooled = spectral.Spectrum.pooled(spectra)
    ks_pool = spectral.kolmogorov_distance(pooled)
    ks_rows.append(("pooled", "all", ks_pool.distance, ks_pool.location))

    base_cfg = {
        "order": params.order,
        "m": params.m,
        "delta": params.delta,
        "prim": params.code.modulus.to_hex(),
        "count": args.count,
        "seed": args.seed,
    }
    avg_meta = fileio.provenance_meta("fig1", base_cfg)
    avg = np.mean(np.vstack(densities), axis=0)
    (outdir / "average_hist.csv").write_text(hist_lines(avg, avg_meta))

    grid = np.linspace(HIST_RANGE[0], HIST_RANGE[1], OVERLAY_POINTS)
    pdf = spectral.semicircle_pdf(grid)
    lines = fileio.meta_lines(fileio.provenance_meta("fig1", base_cfg), "#")
    lines.append("x,density")
    lines += [f"{x:.17g},{y:.17g}" for x, y in zip(grid, pdf)]
    (outdir / "semicircle.csv").write_text("\n".join(lines) + "\n")

    lines = fileio.meta_lines(avg_meta, "#")
    lines.append("label,message,ks_distance,ks_location")
    lines += [f"{lab},{msg},{d:.17g},{loc:.17g}" for lab, msg, d, loc in ks_rows]
    (outdir / "ks_summary.csv").write_text("\n".join(lines) + "\n")

    _log(
        f"wrote {args.count} histograms to {outdir}: "
        f"max per-matrix KS {max(r[2] for r in ks_rows[:-1]):.4f}, "
        f"pooled KS {ks_pool.distance:.4f}"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="codewigner",
        description="deterministic pseudo-random sign matrices and their spectral checks",
    )
    parser.add_argument("--version", action="version", version=f"codewigner {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate one matrix")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--prim", help="primitive polynomial, hex (defaults to the table)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--message", help="message polynomial, hex")
    group.add_argument("--seed", type=int, help="draw the message from this seed")
    p.add_argument("--format", choices=("mm", "csv"), default="mm")
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("spectrum", help="eigenvalues of a stored matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("ks", help="KS distance to the semicircle law")
    p.add_argument("--spectrum")
    p.add_argument("--matrix")
    p.add_argument("--r", type=int, help="pass/fail threshold 1/r")
    p.add_argument("--output")
    p.set_defaults(func=cmd_ks)

    p = sub.add_parser("verify", help="run a statistical check battery")
    p.add_argument("--test", choices=sorted(_VERIFY_RUNNERS), required=True)
    p.add_argument("--m", type=int, default=4, help="field degree (independence)")
    p.add_argument(
        "--delta",
        type=int,
        help="designed distance; defaults to 5 for independence, 3 otherwise",
    )
    p.add_argument("--order", type=int, default=100)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--l-max", type=int, default=6, dest="l_max")
    p.add_argument("--r", type=int, help="independence order to test or KS threshold 1/r")
    p.add_argument(
        "--exhaustive",
        action="store_true",
        help="variance: enumerate every sign matrix exactly (small orders)",
    )
    p.add_argument(
        "--family",
        choices=("code", "uniform"),
        help="matrix source for theorem1 (default code) and sampled "
        "variance (default uniform): code messages or truly random signs",
    )
    p.add_argument("--prim")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fig1", help="ensemble histogram study")
    p.add_argument("--order", type=int, default=700)
    p.add_argument("--count", type=int, default=25)
    p.add_argument("--delta", type=int, default=3)
    p.add_argument("--prim")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--outdir", default="fig1-out")
    p.set_defaults(func=cmd_fig1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        _log(f"error: {exc}")
        return 2
    except OSError as exc:
        _log(f"error: {exc}")
        return 3
    except Exception as exc:  # pragma: no cover - defensive
        _log(f"internal error: {exc!r}")
        return 3


if __name__ == "__main__":
    sys.exit(main())
