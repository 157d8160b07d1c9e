"""Pool the spectra of a deterministic ensemble and compare to the semicircle.

Prints a text histogram with the semicircle density alongside; --plot writes
a PNG instead when matplotlib is available.
"""

import argparse

import numpy as np

from codewigner import matgen, spectral


def text_histogram(eigs, bins=41, width=50):
    edges = np.linspace(-1.05, 1.05, bins + 1)
    counts, _ = np.histogram(eigs, bins=edges)
    density = counts / (counts.sum() * (edges[1] - edges[0]))
    centers = 0.5 * (edges[:-1] + edges[1:])
    reference = spectral.semicircle_pdf(centers)
    top = max(density.max(), reference.max())
    for c, d, r in zip(centers, density, reference):
        bar = "#" * int(round(width * d / top))
        print(f"{c:+.3f} {d:6.4f} |{bar:<{width}}| sc {r:6.4f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--order", type=int, default=700)
    ap.add_argument("--count", type=int, default=25)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--plot", metavar="PNG", help="write a plot instead of text")
    args = ap.parse_args()

    params = matgen.ensemble_params(args.order)
    messages = matgen.random_messages(params, args.count, seed=args.seed)
    spectra = [
        spectral.eigenvalues_sym(matgen.sample_pseudo_wigner(params, v))
        for v in messages
    ]
    distances = np.array([spectral.kolmogorov_distance(s).distance for s in spectra])
    pooled = spectral.Spectrum.pooled(spectra)
    pooled_ks = spectral.kolmogorov_distance(pooled).distance

    print(f"{args.count} matrices at order {args.order} (m = {params.m})")
    print(f"per-matrix KS: min {distances.min():.4f}, median {np.median(distances):.4f}, "
          f"max {distances.max():.4f}")
    print(f"pooled KS over {pooled.size} eigenvalues: {pooled_ks:.4f}\n")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        xs = np.linspace(-1.1, 1.1, 400)
        plt.figure(figsize=(7, 4))
        plt.hist(pooled.eigenvalues, bins=60, density=True, alpha=0.6,
                 label=f"{args.count} pooled spectra")
        plt.plot(xs, spectral.semicircle_pdf(xs), "k-", label="semicircle")
        plt.xlabel("eigenvalue")
        plt.ylabel("density")
        plt.legend()
        plt.tight_layout()
        plt.savefig(args.plot, dpi=120)
        print(f"wrote {args.plot}")
    else:
        text_histogram(pooled.eigenvalues)


if __name__ == "__main__":
    main()
