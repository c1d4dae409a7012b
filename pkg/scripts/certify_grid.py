"""Build U, induce from a generic character and certify the bound on small cases.

Each line reports |U|, the irreducible dimension q^(nd), the character norm
(1 for an irreducible), the orbit count and the resulting bound.
"""

import argparse
import time

from chevheis import svnrep
from chevheis.bounds import h_f
from chevheis.heisenberg import build_heis
from chevheis.localring import make_ring, ring_spec_for

CASES = [("A1", 3, 2), ("A2", 3, 1), ("A2", 5, 1), ("A2", 3, 2), ("C2", 3, 1), ("C2", 3, 2), ("C2", 9, 1),
         ("C3", 3, 1), ("B3", 3, 1), ("G2", 5, 1)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cap", type=int, default=20_000, help="largest |U| to enumerate")
    args = ap.parse_args()
    print(f"{'phi':<4} {'q':>2} {'n':>2} {'|U|':>7} {'dim':>5} {'norm':>10} {'orbits':>6} {'bound':>7}  sec")
    for phi, q, n in CASES:
        t0 = time.perf_counter()
        R = make_ring(ring_spec_for(q, n))
        H = build_heis(phi, R)
        rep = svnrep.induce(svnrep.extend_to_A(svnrep.CentralCharacter(H, R.one)))
        norm = svnrep.character_norm(rep, cap=args.cap) if H.order <= args.cap else float("nan")
        cert = svnrep.lower_bound_certificate(phi, R)
        assert cert.bound == h_f(phi, q, n)
        print(f"{phi:<4} {q:>2} {n:>2} {H.order:>7} {rep.dimension:>5} {norm:>10.6f} "
              f"{cert.orbit_count:>6} {cert.bound:>7}  {time.perf_counter() - t0:.1f}")


if __name__ == "__main__":
    main()
