"""Count combinatorial types for the line and the Delta_2 degree over a few
budgets, with the stats that explain where candidates were discarded.

    python3 scripts/enumerate_types.py [--max-r 6] [--jobs 2]
"""
import argparse

from tropzar.enumeration import EnumerationBudget, enumerate_types
from tropzar.lattice_toric import LatticePolygon, standard_surfaces
from tropzar.tropical_curve import DegreeSpec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    degrees = {
        "line": DegreeSpec.from_polygon(LatticePolygon([(0, 0), (1, 0), (0, 1)])),
        "delta2": DegreeSpec.from_polygon(standard_surfaces(2, "triangle").polygon),
    }
    print(f"{'degree':8} {'g':>2} {'r':>2} {'edges<':>6} {'types':>6} {'candidates':>10} {'unrealizable':>12}")
    for name, d in degrees.items():
        for g in (0, 1):
            for r in range(4, args.max_r + 1):
                res = enumerate_types(d, g, r, jobs=args.jobs)
                s = res.stats
                print(f"{name:8} {g:>2} {r:>2} {EnumerationBudget(g, r).edge_bound:>6} {res.count:>6} "
                      f"{s['candidate_graphs']:>10} {s['discarded_unrealizable']:>12}")


if __name__ == "__main__":
    main()
