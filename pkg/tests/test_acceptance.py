"""Acceptance gate: nine end-to-end checks, each with a time budget.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per check is
printed in the terminal summary (and inline with ``-s``).
"""

import json
import random
import sys
import time
from contextlib import contextmanager

import numpy as np
import pytest

from chevheis import chevalley, mforacle, rootsys, svnrep
from chevheis.adgroup import adjoint_group, chevalley_constants, commutator, commutator_product, generator, torus
from chevheis.bounds import h_f
from chevheis.cli import main
from chevheis.heisenberg import build_heis
from chevheis.localring import RingSpec, is_unit, make_ring

from conftest import GATE_LINES

TABLE_D = {"A1": 0, "A2": 1, "A3": 2, "A4": 3, "B3": 3, "B4": 5, "C2": 1, "C3": 2, "C4": 3,
           "D4": 4, "D5": 6, "G2": 2, "F4": 7, "E6": 10, "E7": 16, "E8": 28}
Z3 = make_ring(RingSpec("zpn", 3, 1, 1))
Z9 = make_ring(RingSpec("zpn", 3, 1, 2))
Z25 = make_ring(RingSpec("zpn", 5, 1, 2))
F3T2 = make_ring(RingSpec("series", 3, 1, 2))


@contextmanager
def gate(k, label, budget):
    t0 = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget, f"{label} took {elapsed:.1f}s, budget {budget}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        line = f"{'PASS' if ok else 'FAIL'} [{k}/9] {label} ({elapsed:.2f}s of {budget}s)"
        GATE_LINES.append(line)
        print(line)


def cli_json(capsys, *argv):
    code = main([*map(str, argv), "--json"])
    out, err = capsys.readouterr()
    assert code == 0, err
    return json.loads(out)


def printed_bound(name, q, n):
    fam, m = name[0], int(name[1:])
    u = q**n - q ** (n - 1)
    if fam == "A" and m == 1:
        return u // 2
    exponent = {"A": m - 1, "B": 2 * m - 3, "C": m - 1, "D": 2 * m - 4, "G": 2, "F": 7,
                "E": {6: 10, 7: 16, 8: 28}.get(m)}[fam]
    return (u // 2 if fam == "C" else u) * q ** (exponent * n)


def test_d_table():
    with gate(1, "d from Sigma+ equals the table for all listed ranks", 60):
        rootsys._build.cache_clear()
        for name, d in TABLE_D.items():
            rs = rootsys.build(name)
            assert rs.d == d, name
            assert len(rs.sigma_plus()) == 2 * d
        assert len(rootsys.build("E8").roots) == 240


def test_bound_grid(capsys):
    rows = ["A1", "A2", "A4", "B3", "B4", "C2", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
    with gate(2, "bound output equals the closed-form table on q in {3,5,7,9}, n in {1,2,3}", 1):
        count = 0
        for name in rows:
            for q in (3, 5, 7, 9):
                if name == "G2" and q % 3 == 0:
                    continue
                for n in (1, 2, 3):
                    row = cli_json(capsys, "bound", "--phi", name, "--q", q, "--n", n)
                    assert row["bound"] == printed_bound(name, q, n), (name, q, n)
                    count += 1
        assert count == len(rows) * 12 - 6


def test_certify(capsys):
    cases = [("A2", 3, 1, 4096), ("C2", 3, 1, 4096), ("C2", 3, 2, 4096), ("B3", 3, 1, 27), ("G2", 5, 1, 25)]
    with gate(3, "certify passes end to end with irreducibility within 1e-6", 300):
        for phi, q, n, dim_cap in cases:
            rep = cli_json(capsys, "certify", "--phi", phi, "--q", q, "--n", n, "--dim-cap", dim_cap)
            assert rep["orbit_count"] * rep["irrep_dim"] == rep["bound"] == h_f(phi, q, n)
            assert rep["irrep_dim"] == q ** (n * rep["d"])
            assert abs(rep["character_norm"] - 1) < 1e-6
        assert rep["irrep_dim"] == 25


def test_commutator_formula():
    with gate(4, "commutator formula with |C| <= 3 on every root pair, 100 random (t1, t2) each", 120):
        rng = random.Random(0)
        for name, R in (("A2", Z9), ("C2", Z9), ("G2", Z25)):
            table = chevalley.structure_constants(name)
            rs = table.rs
            for a in rs.roots:
                for b in rs.roots:
                    if a == b or a == rs.neg(b):
                        continue
                    consts = chevalley_constants(table, a, b)
                    assert all(abs(c) <= 3 for _, _, c in consts)
                    for _ in range(100):
                        t1, t2 = R(rng.randrange(R.char)), R(rng.randrange(R.char))
                        lhs = commutator(generator(table, a, t2), generator(table, b, t1))
                        assert lhs == commutator_product(table, a, b, t1, t2, consts), (name, a, b, t1, t2)


def test_torus_action():
    with gate(5, "h_a(lam) x_b(t) h_a(lam)^-1 = x_b(lam^<b,a> t), exhaustive", 120):
        for name, R, nunits in (("C2", Z9, 6), ("G2", Z25, 20)):
            table = chevalley.structure_constants(name)
            rs = table.rs
            units = R.units()
            assert len(units) == nunits
            for a in rs.roots:
                for lam in units:
                    h = torus(table, a, lam).matrix
                    hinv = h.inverse()
                    for b in rs.roots:
                        want = generator(table, b, lam ** rs.pairing(b, a))
                        assert h @ generator(table, b, R.one) @ hinv == want, (name, a, lam, b)


def test_genericity():
    with gate(6, "pairing non-degenerate iff b is a unit, C2 over Z/3, Z/9, F3[t]/(t^2)", 180):
        for R in (Z3, Z9, F3T2):
            H = build_heis("C2", R)
            for b in R.elements():
                assert H.genericity_pairing(b).is_generic == is_unit(b), (R, b)


def test_stone_von_neumann():
    with gate(7, "C2/F3: generic characters induce 3-dim irreducibles matching the oracle", 60):
        H = build_heis("C2", Z3)
        assert H.order == 27
        generic = [b for b in Z3.elements() if H.genericity_pairing(b).is_generic]
        assert len(generic) == 2
        for b in generic:
            chi = svnrep.CentralCharacter(H, b)
            reps = [svnrep.induce(e) for e in svnrep.all_extensions(chi)]
            assert all(r.dimension == 3 for r in reps)
            assert all(abs(svnrep.character_norm(r) - 1) < 1e-6 for r in reps)
            chars = [svnrep.character_vector(r) for r in reps]
            assert all(np.max(np.abs(c - chars[0])) < 1e-6 for c in chars[1:])
        G = mforacle.FiniteGroup.from_elements(list(H.elements()), H.multiply)
        assert mforacle.character_table(G).degrees == [1] * 9 + [3] * 2


def test_oracle_margin():
    with gate(8, "m_f by Burnside-Dixon: F7 -> 3 = h_f, F5 -> 3 >= 2, Z/9 -> >= 3", 600):
        A1 = chevalley.structure_constants("A1")
        results = {}
        for p, n in ((7, 1), (5, 1), (3, 2)):
            G = mforacle.FiniteGroup.from_matrices(adjoint_group(A1, make_ring(RingSpec("zpn", p, 1, n))))
            results[p, n] = (G.order, mforacle.minimal_faithful_dimension(mforacle.character_table(G)))
        assert results[7, 1] == (168, 3) and h_f("A1", 7, 1) == 3
        assert results[5, 1] == (60, 3) and h_f("A1", 5, 1) == 2
        assert results[3, 2][0] == 324 and results[3, 2][1] >= h_f("A1", 3, 2) == 3


def test_structure_integrity(monkeypatch):
    systems = ["A1", "A2", "A3", "B3", "B4", "C2", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
    with gate(9, "Jacobi on all basis triples incl. E8, exp_ad integral for every root", 600):
        monkeypatch.delenv(chevalley.CACHE_ENV, raising=False)
        chevalley._structure_constants.cache_clear()
        chevalley._EXP_CACHE.clear()
        for name in systems:
            table = chevalley.structure_constants(name)
            assert chevalley.jacobi_violations(table) == 0, name
            assert chevalley.antisymmetry_violations(table) == 0, name
            for a in table.rs.roots:
                chevalley.exp_ad(table, a)  # raises on a non-integral coefficient
        assert chevalley.structure_constants("E8").dim == 248


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-s"]))
