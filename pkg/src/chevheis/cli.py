"""Command-line entry point: bound, certify, heis-verify, svn, oracle, selftest."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import bounds, mforacle, svnrep
from .adgroup import GroupOverflow, adjoint_group
from .chevalley import jacobi_violations, structure_constants
from .heisenberg import DEFAULT_CAP, EnumerationCap, HypothesisError, build_heis
from .localring import RingSpecError, make_ring, ring_spec_for
from .rootsys import RootSystemError, RootSystemId

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    pass


def _check(cond: bool, what: str) -> None:
    if not cond:
        raise CheckFailed(what)


def _query(args) -> RootSystemId:
    try:
        return bounds.validate_query(args.phi, args.q, args.n)
    except bounds.BoundQueryError as exc:
        raise UsageError(str(exc)) from exc


def _ring(args):
    try:
        return make_ring(ring_spec_for(args.q, args.n, args.kind))
    except RingSpecError as exc:
        raise UsageError(str(exc)) from exc


def run_bound(args) -> dict:
    _query(args)
    return bounds.bound_row(args.phi, args.q, args.n)


def run_certify(args) -> dict:
    ident = _query(args)
    R = _ring(args)
    H = build_heis(ident, R)
    report = {"phi": str(ident), "ring": str(R)}
    # genericity: a unit b is non-degenerate; a non-unit (if any) is not
    noncentral = R.size ** (2 * H.d)
    if noncentral <= args.cap:
        gen = H.genericity_pairing(R.one, cap=args.cap)
        _check(gen.is_generic, "b = 1 should give a non-degenerate pairing")
        report["generic_b1"] = True
        if R.n > 1 and H.d > 0:
            deg = H.genericity_pairing(R.uniformizer, cap=args.cap)
            _check(not deg.is_generic, "a non-unit b should give a degenerate pairing")
            report["degenerate_nonunit"] = True
    A = H.polarizing()
    _check(A.index == R.q ** (R.n * H.d), "[U:A] should be q^(nd)")
    chi = svnrep.CentralCharacter(H, R.one)
    rep = svnrep.induce(svnrep.extend_to_A(chi), cap=args.dim_cap)
    report["irrep_dim"] = rep.dimension
    if H.order <= args.cap:
        norm = svnrep.character_norm(rep, cap=args.cap)
        _check(abs(norm - 1) < svnrep.TOL, f"<chi, chi> = {norm}, not 1")
        report["character_norm"] = norm
    cert = svnrep.lower_bound_certificate(ident, R)
    _check(cert.orbit_count * cert.irrep_dim == bounds.h_f(ident, args.q, args.n), "bound mismatch")
    report.update(cert.to_dict())
    return report


def run_heis_verify(args) -> dict:
    ident = _query(args)
    R = _ring(args)
    H = build_heis(ident, R)
    rng = random.Random(args.seed)
    vals = list(R.elements())

    def rand():
        return H.element([rng.choice(vals) for _ in H.roots], rng.choice(vals))

    bad = 0
    for _ in range(args.samples):
        u, v = rand(), rand()
        if H.evaluate(H.multiply(u, v)) != H.evaluate(u) @ H.evaluate(v):
            bad += 1
    _check(bad == 0, f"{bad} products disagree with the matrix group")
    report = {"phi": str(ident), "ring": str(R), "order": H.order, "d": H.d, "samples": args.samples,
              "commutator_constants": H.comm_consts}
    if H.order <= args.cap:
        center, derived = H.center_and_derived(args.cap)
        _check(len(center) == R.size, "|Z(U)| != |R|")
        # for d = 0, U = X_top is abelian and [U, U] is trivial
        _check(len(derived) == (R.size if H.d else 1), "[U, U] has the wrong order")
        _check(H.d == 0 or center == derived, "Z(U) != [U, U]")
        report["center_order"] = len(center)
    A = H.polarizing()
    _check(A.is_abelian(), "A is not abelian")
    report["polarizing_index"] = A.index
    return report


def run_svn(args) -> dict:
    ident = _query(args)
    R = _ring(args)
    H = build_heis(ident, R)
    norms = {}
    central_traces = {}
    for b in R.units():
        rep = svnrep.induce(svnrep.extend_to_A(svnrep.CentralCharacter(H, b)), cap=args.dim_cap)
        norms[str(b)] = svnrep.character_norm(rep, cap=args.cap)
        traces = [rep.character(H.central(s)) for s in R.elements()]
        central_traces[b] = tuple(complex(round(t.real, 6), round(t.imag, 6)) for t in traces)
    _check(all(abs(v - 1) < svnrep.TOL for v in norms.values()), "an induced representation is reducible")
    _check(len(set(central_traces.values())) == R.num_units, "distinct b give equal central characters")
    unique = svnrep.svn_uniqueness_check(H, R.one, max_extensions=args.max_extensions, cap=args.cap)
    _check(unique, "extensions of one central character induce different characters")
    return {"phi": str(ident), "ring": str(R), "irrep_dim": R.size**H.d, "norms": norms,
            "uniqueness": unique, "orbit_count": svnrep.orbit_count(ident, R)}


def run_oracle(args) -> dict:
    ident = _query(args)
    R = _ring(args)
    t0 = time.perf_counter()
    mats = adjoint_group(structure_constants(ident), R, cap=args.cap)
    G = mforacle.FiniteGroup.from_matrices(mats, name=f"G_ad({R}, {ident})")
    table = mforacle.character_table(G)
    mf = mforacle.minimal_faithful_dimension(table)
    hf = bounds.h_f(ident, args.q, args.n)
    _check(mf >= hf, f"m_f = {mf} is below h_f = {hf}")
    return {"phi": str(ident), "ring": str(R), "group_order": G.order, "classes": len(table.degrees),
            "degrees": table.degrees, "m_f": mf, "h_f": hf, "margin": mf - hf,
            "seconds": round(time.perf_counter() - t0, 3)}


def run_selftest(args) -> dict:
    results = {}
    results["bound A1 7 1"] = bounds.h_f("A1", 7, 1) == 3
    results["bound E8 3 1"] = bounds.h_f("E8", 3, 1) == 2 * 3**28
    results["d table"] = all(
        bounds.d_of(s) == svnrep.build(s).d for s in ("A3", "B3", "C3", "D4", "G2", "F4", "E6")
    )
    results["jacobi A2 C2 G2"] = all(jacobi_violations(structure_constants(s)) == 0 for s in ("A2", "C2", "G2"))
    R = make_ring(ring_spec_for(3, 1))
    results["certify C2 3 1"] = svnrep.lower_bound_certificate("C2", R).bound == 3
    H = build_heis("C2", R)
    rep = svnrep.induce(svnrep.extend_to_A(svnrep.CentralCharacter(H, R.one)))
    results["svn C2 3 1"] = svnrep.is_irreducible(rep)
    G = mforacle.FiniteGroup.from_matrices(adjoint_group(structure_constants("A1"), make_ring(ring_spec_for(5, 1))))
    results["oracle A1 5 1"] = mforacle.minimal_faithful_dimension(mforacle.character_table(G)) == 3
    _check(all(results.values()), "selftest: " + ", ".join(k for k, v in results.items() if not v))
    return results


COMMANDS = {
    "bound": run_bound,
    "certify": run_certify,
    "heis-verify": run_heis_verify,
    "svn": run_svn,
    "oracle": run_oracle,
    "selftest": run_selftest,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chevheis", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        needs_query = name != "selftest"
        p.add_argument("--phi", required=needs_query, help="root system, e.g. A1, C2, G2, E8")
        p.add_argument("--q", type=int, required=needs_query, help="residue field size")
        p.add_argument("--n", type=int, default=1, help="level: R = O / p^n")
        p.add_argument("--kind", choices=("zpn", "galois", "series"), default=None,
                       help="ring model (default: Z/p^n or a Galois ring)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap on group elements")
        p.add_argument("--dim-cap", type=int, default=svnrep.DIM_CAP, help="cap on induced dimension")
        p.add_argument("--samples", type=int, default=200, help="random products for heis-verify")
        p.add_argument("--max-extensions", type=int, default=None)
        p.add_argument("--json", action="store_true", help="emit JSON")
    return parser


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, default=str))
    else:
        for k, v in report.items():
            print(f"{k}: {v}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = COMMANDS[args.command](args)
    except (UsageError, RootSystemError, RingSpecError, HypothesisError, EnumerationCap, GroupOverflow) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CheckFailed, AssertionError, mforacle.OracleError) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit(report, args.json)
    if not args.json:
        print("PASS" if args.command != "bound" else f"h_f = {report['bound']}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
