"""Exhaustive color-function tables for cycles next to their closed forms."""

import argparse

from dpcolor.counting import color_function_table
from dpcolor.formulas import cycle_dp, cycle_dual
from dpcolor.graphs import cycle


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--max-m", type=int, default=4)
    args = ap.parse_args()

    print("n\tm\tp_dp\tformula_dp\tp\tp_dual\tformula_dual")
    for n in range(2, args.max_n + 1):
        table = color_function_table(cycle(n), range(2, args.max_m + 1))
        for r in table.rows:
            print(f"{n}\t{r.m}\t{r.p_dp}\t{cycle_dp(n)(r.m)}\t{r.chromatic}\t{r.p_dp_dual}\t{cycle_dual(n)(r.m)}")


if __name__ == "__main__":
    main()
