import random

import numpy as np
import pytest

from chevheis import svnrep as S
from chevheis.heisenberg import HypothesisError, build_heis
from chevheis.localring import RingSpec, make_ring
from chevheis.rootsys import build

Z3 = make_ring(RingSpec("zpn", 3, 1, 1))
Z9 = make_ring(RingSpec("zpn", 3, 1, 2))
Z5 = make_ring(RingSpec("zpn", 5, 1, 1))
Z7 = make_ring(RingSpec("zpn", 7, 1, 1))
F3T2 = make_ring(RingSpec("series", 3, 1, 2))


def rep_for(name, R, b=None, ext=None):
    H = build_heis(name, R)
    chi = S.CentralCharacter(H, R.one if b is None else R(b))
    return S.induce(S.extend_to_A(chi, ext))


def test_extension_values():
    H = build_heis("C2", Z3)
    chi = S.CentralCharacter(H, Z3(1))
    ct = S.extend_to_A(chi)
    for s in Z3.elements():
        assert ct(H.central(s)) == chi(s)
    a1 = H.sigma.pairs[0][0]
    assert ct(H.x(a1, 1)) == 0
    assert len(S.all_extensions(chi)) == 3
    with pytest.raises(S.NotGeneric):
        S.extend_to_A(S.CentralCharacter(H, Z3(0)))


@pytest.mark.parametrize("name,R,dim", [("C2", Z3, 3), ("A1", Z9, 1), ("C2", Z9, 9), ("A2", Z3, 3)])
def test_dimensions(name, R, dim):
    assert rep_for(name, R).dimension == dim


def test_a1_rep_is_the_character():
    rep = rep_for("A1", Z9, 2)
    H = rep.group
    for s in Z9.elements():
        assert rep.image(H.central(s)).exps[0] == (2 * int(s)) % 9


@pytest.mark.parametrize("name,R", [("C2", Z9), ("A2", Z3), ("C2", F3T2)])
def test_homomorphism(name, R):
    rep = rep_for(name, R, ext=None)
    H = rep.group
    rng = random.Random(0)
    elems = list(H.elements())
    for _ in range(1000):
        u, v = rng.choice(elems), rng.choice(elems)
        assert rep.image(H.multiply(u, v)) == rep.image(u) @ rep.image(v)


def test_images_are_monomial_and_unitary():
    rep = rep_for("C2", Z9, 2, ext=(5,))
    for g, m in rep.images.items():
        D = m.to_dense()
        assert np.allclose(D @ D.conj().T, np.eye(rep.dimension))
        assert sorted(m.cols) == list(range(rep.dimension))


@pytest.mark.parametrize("name,R", [("C2", Z3), ("C2", Z9), ("A2", Z3)])
def test_center_acts_by_scalars(name, R):
    for b in R.units():
        rep = rep_for(name, R, b)
        chi = rep.chi_tilde.chi
        for s in R.elements():
            m = rep.image(rep.group.central(s))
            assert m.is_scalar() and m.exps[0] == chi(s)


@pytest.mark.parametrize("name,R", [("C2", Z3), ("C2", Z9), ("A2", Z3), ("C2", F3T2), ("A2", Z5)])
def test_irreducible_for_every_generic_b(name, R):
    for b in R.units():
        assert S.is_irreducible(rep_for(name, R, b))


def test_direct_sum_is_reducible():
    rep = rep_for("C2", Z3)
    total = S.DirectSum(rep, rep)
    assert total.dimension == 6
    assert not S.is_irreducible(total)
    assert abs(S.character_norm(total) - 4) < 1e-9


def test_forced_nongeneric_is_reducible():
    H = build_heis("C2", Z9)
    rep = S.induce(S.extend_to_A(S.CentralCharacter(H, Z9(3)), force=True))
    assert not S.is_irreducible(rep)


def test_dimension_cap():
    H = build_heis("B3", Z9)
    with pytest.raises(ValueError):
        S.induce(S.extend_to_A(S.CentralCharacter(H, Z9(1))), cap=700)
    assert S.induce(S.extend_to_A(S.CentralCharacter(H, Z9(1))), cap=729).dimension == 729


def test_uniqueness():
    H = build_heis("C2", Z3)
    assert S.svn_uniqueness_check(H, Z3(1))
    assert S.svn_uniqueness_check(build_heis("A1", Z3), Z3(1))


def test_distinct_central_characters_give_distinct_reps():
    H = build_heis("C2", Z9)
    zaxis = [H.central(s) for s in Z9.elements()]
    seen = set()
    for b in Z9.units():
        rep = rep_for("C2", Z9, b)
        seen.add(tuple(np.round([rep.character(z) for z in zaxis], 6)))
    assert len(seen) == Z9.num_units


def test_conjugate_character():
    rs = build("A1")
    (a,) = rs.positive
    assert S.conjugate_character(Z5(1), Z5(2), a, "A1") == Z5(4)
    assert S.conjugate_character(Z5(3), Z5(1), a, "A1") == Z5(3)
    e6 = build("E6")
    F, w = e6.f_phi()
    assert F == 1
    R = Z7
    for lam in R.units():
        assert S.conjugate_character(R(3), lam, w, "E6") == R(3) * lam


@pytest.mark.parametrize("name,R,count", [("A2", Z3, 2), ("A1", Z5, 2), ("C2", Z9, 3)])
def test_orbit_count_examples(name, R, count):
    assert S.orbit_count(name, R) == count


@pytest.mark.parametrize("name", ["A1", "A2", "C3", "G2", "E6"])
@pytest.mark.parametrize(
    "spec",
    [RingSpec("zpn", 5, 1, 1), RingSpec("zpn", 7, 1, 2), RingSpec("series", 3, 1, 3),
     RingSpec("galois", 3, 2, 2, (1, 0, 1)), RingSpec("zpn", 3, 1, 6)],
)
def test_orbit_count_closed_form(name, spec):
    R = make_ring(spec)
    F, _ = build(name).f_phi()
    units = R.q**R.n - R.q ** (R.n - 1)
    assert S.orbit_count(name, R) == (units if F == 1 else units // 2)


@pytest.mark.parametrize("name,R,bound", [("A1", Z7, 3), ("G2", Z5, 100), ("C2", Z9, 27)])
def test_certificate(name, R, bound):
    cert = S.lower_bound_certificate(name, R)
    assert cert.bound == bound
    assert set(cert.to_dict()) == {"phi", "q", "n", "d", "irrep_dim", "orbit_count", "bound"}


def test_certificate_hypotheses():
    with pytest.raises(HypothesisError):
        S.lower_bound_certificate("G2", Z3)
