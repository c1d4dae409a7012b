"""Compare the brute-force m_f of G_ad(R, A1) with h_f for small R."""

import argparse

from chevheis import mforacle
from chevheis.adgroup import adjoint_group
from chevheis.bounds import h_f
from chevheis.chevalley import structure_constants
from chevheis.localring import make_ring, ring_spec_for


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", nargs="+", default=["3:1", "5:1", "7:1", "9:1", "3:2", "11:1"],
                    help="q:n pairs")
    args = ap.parse_args()
    table = structure_constants("A1")
    print(f"{'q':>3} {'n':>2} {'|G|':>6} {'classes':>7} {'m_f':>4} {'h_f':>4}  degrees")
    for case in args.cases:
        q, n = map(int, case.split(":"))
        G = mforacle.FiniteGroup.from_matrices(adjoint_group(table, make_ring(ring_spec_for(q, n))))
        ct = mforacle.character_table(G)
        mf = mforacle.minimal_faithful_dimension(ct)
        print(f"{q:>3} {n:>2} {G.order:>6} {len(ct.degrees):>7} {mf:>4} {h_f('A1', q, n):>4}  {ct.degrees}")


if __name__ == "__main__":
    main()
