"""Check the cover-level deletion-contraction inequality on every cover of
every small connected multigraph and report the strict cases."""

import argparse
import sys
import time

from dpcolor.relations import run_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4, help="max vertices")
    ap.add_argument("--max-edges", type=int, default=6)
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--tsv", help="write one line per case to this file")
    args = ap.parse_args()

    start = time.perf_counter()
    if args.tsv:
        with open(args.tsv, "w") as fh:
            summary = run_sweep(args.n, args.max_edges, args.m, sink=lambda line: fh.write(line + "\n"))
    else:
        summary = run_sweep(args.n, args.max_edges, args.m)
    print(summary)
    if summary.first_strict is not None:
        print("first strict case:", summary.first_strict.tsv())
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    sys.exit(0 if summary.ok else 1)


if __name__ == "__main__":
    main()
