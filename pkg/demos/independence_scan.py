"""Show the balance cliff of a dual code: exact below delta, broken at delta.

For every r-tuple of positions, each of the 2^r sign patterns should appear
with frequency exactly 2^-r.  Dual codes of designed distance delta achieve
this for all r < delta and break precisely at r = delta, where the worst
deviation equals 2^-r on the support of a weight-delta codeword.
"""

import argparse

from codewigner import codes, stats


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, default=4, help="field degree")
    ap.add_argument("--delta", type=int, default=5, help="designed distance")
    args = ap.parse_args()

    code = codes.bch_code(args.m, args.delta)
    words = list(codes.enumerate_dual_codewords(code))
    print(f"code [n, k] = [{code.n}, {code.k}], delta = {code.delta}, "
          f"dual has 2^{code.k_dual} = {len(words)} words\n")
    print(f"{'r':>2} {'tuples':>8} {'worst deviation':>16} {'2^-r':>10}  verdict")

    for r in range(1, args.delta + 1):
        report = stats.test_r_independence(words, code.n, r)
        verdict = "balanced" if report.passed else "broken"
        note = ""
        if not report.passed:
            note = f"  at positions {report.worst_positions}"
        print(f"{r:>2} {report.tuples_checked:>8} {report.worst_deviation:>16.6f} "
              f"{2.0**-r:>10.6f}  {verdict}{note}")

    print("\nthe deviation at r = delta equals 2^-r exactly: a weight-delta")
    print("codeword of the primal code pins one parity on its support")


if __name__ == "__main__":
    main()
