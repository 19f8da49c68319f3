"""Gap tables P - P_DP and P*_DP - P, plus exact gap degrees where a closed
form exists, for a handful of families."""

import argparse

from dpcolor.graphs import cycle, cycles_sharing_edge, diamond, fat_even_cycle, glued_cycles, path, with_pendant
from dpcolor.relations import degree_gap_check, gap_table, girth_degree_targets

FAMILIES = {
    "C5": cycle(5),
    "C6": cycle(6),
    "C7": cycle(7),
    "P5": path(5),
    "triangle+pendant": with_pendant(cycle(3), 1),
    "fat C4 (l=2)": fat_even_cycle(1, 2),
    "C4 glued C4": glued_cycles(4, 4),
    "diamond": diamond(),
    "C3 + C5 on an edge": cycles_sharing_edge(3, 5),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m", type=int, nargs="+", default=[2, 3, 4, 5, 6])
    args = ap.parse_args()

    for name, g in FAMILIES.items():
        print(f"== {name}  {girth_degree_targets(g)}")
        print("m\tgap_dp\tgap_dual")
        for r in gap_table(g, args.m):
            print(f"{r.m}\t{r.gap_dp}\t{r.gap_dual}")
        for which in ("dp", "dual"):
            d = degree_gap_check(g, which)
            if d is not None:
                print(f"deg {which} gap: {d.degree_text()}  ({d.source})")
        print()


if __name__ == "__main__":
    main()
