"""Genus ranges and expected dimensions of the reducible Severi varieties.

    python3 scripts/severi_grid.py [--dmax 6]
"""
import argparse

from tropzar import charp_curves as cp


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--dmax", type=int, default=6)
    args = ap.parse_args()
    print(f"{'surface':7} {'q':>2} {'d':>2} {'genus range':>12} {'dims':>10}")
    for variant in ("s", "sprime"):
        for q in (2, 3, 4, 5):
            if variant == "s" and q % 2 == 0:
                continue
            for d in range(2, args.dmax + 1):
                rep = cp.severi_numerology(d, q, 1, variant)
                lo = max(1, rep["genus_range"]["lower"])
                hi = rep["genus_range"]["upper"]
                if lo > hi:
                    print(f"{rep['variant']:7} {q:>2} {d:>2} {'empty':>12}")
                    continue
                dims = [cp.severi_numerology(d, q, g, variant)["expected_dim"] for g in range(int(lo), int(hi) + 1)]
                print(f"{rep['variant']:7} {q:>2} {d:>2} {f'[{lo}, {hi}]':>12} {f'{dims[0]}..{dims[-1]}':>10}")


if __name__ == "__main__":
    main()
