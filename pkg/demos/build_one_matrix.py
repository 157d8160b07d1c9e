"""Walk one matrix through the whole pipeline, printing every stage.

order -> field degree m -> code [n, k] -> dual codeword -> sign matrix.
"""

import argparse

import numpy as np

from codewigner import codes, matgen, spectral


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=24, help="matrix order N")
    ap.add_argument("--message", default=None, help="message polynomial, hex")
    ap.add_argument("--seed", type=int, default=7, help="used when no message is given")
    args = ap.parse_args()

    params = matgen.ensemble_params(args.order)
    code = params.code
    print(f"order N = {args.order}, triangle slots = {args.order * (args.order + 1) // 2}")
    print(f"field degree m = {params.m}  (smallest m with 2^m - 1 >= slots)")
    print(f"modulus   f = {hex(code.modulus)}")
    print(f"code [n, k] = [{code.n}, {code.k}], designed distance {code.delta}")
    print(f"generator g = {hex(code.generator)}")
    print(f"check     h = {hex(code.check)}  (g * h = x^n + 1)")
    print(f"dual dimension k_dual = {code.k_dual}, messages in [0, 2^{code.k_dual})")

    if args.message is not None:
        message = int(args.message, 16)
    else:
        message = matgen.random_messages(params, 1, seed=args.seed)[0]
    print(f"\nmessage v = {hex(message)}")

    word = codes.dual_codeword(code, message)
    mat = matgen.sample_pseudo_wigner(params, message)
    head = "".join("+" if b == 0 else "-" for b in word.bits[:40])
    print(f"codeword bits 0..39 as signs: {head}")
    print(f"codeword weight {int(word.bits.sum())} of n = {code.n}")

    print(f"\nupper-left 8x8 corner of the sign matrix (scale {mat.scale:.5f}):")
    corner = mat.signs[:8, :8]
    for row in corner:
        print("  " + " ".join(f"{v:+d}" for v in row))

    spectrum = spectral.eigenvalues_sym(mat)
    eigs = spectrum.eigenvalues
    report = spectral.kolmogorov_distance(spectrum)
    print(f"\neigenvalues: min {eigs[0]:+.4f}, max {eigs[-1]:+.4f} (semicircle support is [-1, 1])")
    print(f"sum {eigs.sum():+.6f} (= trace), sum of squares {np.sum(eigs**2):.3f} (= N/4 = {args.order / 4})")
    print(f"KS distance to the semicircle law: {report.distance:.4f} at x = {report.location:+.4f}")


if __name__ == "__main__":
    main()
