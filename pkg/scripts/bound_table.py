"""Print h_f for every supported root system over a (q, n) grid."""

import argparse

from chevheis.bounds import BoundQueryError, bound_row, render_table

SYSTEMS = ["A1", "A2", "A3", "B3", "B4", "C2", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[3, 5, 7, 9])
    ap.add_argument("--n", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = []
    for phi in SYSTEMS:
        for q in args.q:
            for n in args.n:
                try:
                    rows.append(bound_row(phi, q, n))
                except BoundQueryError:
                    pass
    print(render_table(rows, as_json=args.json))


if __name__ == "__main__":
    main()
