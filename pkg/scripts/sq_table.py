"""Singular points of rational curves on S_q and S'_q for small q.

    python3 scripts/sq_table.py
"""
from tropzar import charp_curves as cp

print("S_q (p > 2): one cusp at t = 1/2")
print(f"{'q':>3} {'field':>6} {'orders':>8} {'delta':>5} {'conductor':>9} {'pairs ok':>8}")
for p, r in ((3, 1), (5, 1), (7, 1), (3, 2), (5, 2)):
    rep = cp.sq_suite(p, r, pairs=10)
    q = rep["q"]
    print(f"{q:>3} {'F_' + str(p ** rep['field']['n']):>6} {str(tuple(rep['local_orders'])):>8} "
          f"{rep['delta']:>5} {rep['semigroup'].conductor:>9} {str(rep['checks']['intersections_match_oracle']):>8}")

print()
print("S'_q: singular points over all admissible xi")
print(f"{'q':>3} {'#xi':>4} {'count':>5} {'deltas':>10} {'interior':>8}")
for p, r in ((2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)):
    rep = cp.sqprime_suite(p, r)
    rows = rep["per_xi"]
    counts = sorted({row["singular_count"] for row in rows})
    deltas = sorted({tuple(row["deltas"]) for row in rows})
    print(f"{rep['q']:>3} {len(rows):>4} {str(counts):>5} {str(deltas):>10} {rep['interior_points']:>8}")
