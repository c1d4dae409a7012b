import random

import pytest

from chevheis.adgroup import (
    adjoint_group,
    chevalley_constants,
    commutator,
    commutator_product,
    enumerate_group,
    generator,
    torus,
    GroupOverflow,
)
from chevheis.chevalley import structure_constants
from chevheis.localring import RingSpec, make_ring
from chevheis.modmat import GroupMatrix

from oracles import sl2_adjoint_order

Z3 = make_ring(RingSpec("zpn", 3, 1, 1))
Z9 = make_ring(RingSpec("zpn", 3, 1, 2))
Z5 = make_ring(RingSpec("zpn", 5, 1, 1))
Z25 = make_ring(RingSpec("zpn", 5, 1, 2))
F9 = make_ring(RingSpec("galois", 3, 2, 1, (1, 0, 1)))


def test_generator_basics():
    table = structure_constants("C2")
    ident = GroupMatrix.identity(Z9, table.dim)
    for a in table.rs.roots:
        assert generator(table, a, Z9(0)) == ident
        assert generator(table, a, Z9(1)) @ generator(table, a, Z9(-1)) == ident
        for t in range(1, 9):
            assert generator(table, a, Z9(t)) != ident


def test_generator_over_galois_ring():
    table = structure_constants("A2")
    a = table.rs.positive[0]
    x, y = F9.element((1, 2)), F9.element((2, 2))
    assert generator(table, a, x) @ generator(table, a, y) == generator(table, a, x + y)


def test_commutator_examples():
    table = structure_constants("A2")
    a1, a2 = table.rs.simple
    g = generator(table, a1, Z3(1))
    assert commutator(g, g).is_identity()
    c = commutator(generator(table, a1, Z3(1)), generator(table, a2, Z3(1)))
    top = table.rs.add(a1, a2)
    assert c in (generator(table, top, Z3(1)), generator(table, top, Z3(-1)))
    # a1 and -a2 do not add to a root
    assert commutator(generator(table, a1, Z3(1)), generator(table, table.rs.neg(a2), Z3(2))).is_identity()


def test_constants_examples():
    table = structure_constants("A2")
    a1, a2 = table.rs.simple
    assert chevalley_constants(table, a1, table.rs.neg(a2)) == []
    with pytest.raises(ValueError):
        chevalley_constants(table, a1, table.rs.neg(a1))
    c2 = structure_constants("C2")
    a = c2.rs.sigma.pairs[0][0]
    ((_, _, C),) = chevalley_constants(c2, a, c2.rs.sub(c2.rs.highest_root, a))
    assert C in (1, -1, 2, -2)
    g2 = structure_constants("G2")
    consts = {abs(c) for a in g2.rs.roots for b in g2.rs.roots if a != b and a != g2.rs.neg(b)
              for _, _, c in chevalley_constants(g2, a, b)}
    assert consts == {1, 2, 3}


@pytest.mark.parametrize("name,R", [("A2", Z9), ("C2", Z9), ("G2", Z25)])
def test_commutator_formula_random(name, R):
    table = structure_constants(name)
    rs = table.rs
    rng = random.Random(1)
    pairs = [(a, b) for a in rs.roots for b in rs.roots if a != b and a != rs.neg(b)]
    for _ in range(60):
        a, b = rng.choice(pairs)
        t1, t2 = R(rng.randrange(R.char)), R(rng.randrange(R.char))
        lhs = commutator(generator(table, a, t2), generator(table, b, t1))
        assert lhs == commutator_product(table, a, b, t1, t2, chevalley_constants(table, a, b))


def test_torus_examples():
    table = structure_constants("A1")
    (a,) = table.rs.positive
    h = torus(table, a, Z5(2)).matrix
    assert h @ generator(table, a, Z5(1)) @ h.inverse() == generator(table, a, Z5(4))
    assert torus(table, a, Z5(1)).matrix.is_identity()
    with pytest.raises(ValueError):
        torus(table, a, Z9(3))


def test_torus_is_multiplicative():
    table = structure_constants("A1")
    (a,) = table.rs.positive
    for lam in Z9.units():
        for mu in Z9.units():
            assert torus(table, a, lam).matrix @ torus(table, a, mu).matrix == torus(table, a, lam * mu).matrix


def test_torus_action_c2_z9():
    table = structure_constants("C2")
    rs = table.rs
    for a in rs.roots:
        for lam in Z9.units():
            h = torus(table, a, lam).matrix
            hinv = h.inverse()
            for b in rs.roots:
                k = rs.pairing(b, a)
                assert h @ generator(table, b, Z9(1)) @ hinv == generator(table, b, lam**k)


@pytest.mark.parametrize("q,n,order", [(3, 1, 12), (5, 1, 60), (3, 2, 324), (7, 1, 168)])
def test_group_orders(q, n, order):
    R = make_ring(RingSpec("zpn", q, 1, n))
    G = adjoint_group(structure_constants("A1"), R)
    assert len(G) == order == sl2_adjoint_order(q**n)


def test_f3_group_is_nonabelian():
    G = adjoint_group(structure_constants("A1"), Z3)
    assert any(g @ h != h @ g for g in G for h in G)


def test_enumeration_cap():
    with pytest.raises(GroupOverflow):
        adjoint_group(structure_constants("A1"), Z5, cap=30)
    gens = [generator(structure_constants("A1"), structure_constants("A1").rs.positive[0], Z3(1))]
    assert len(enumerate_group(gens)) == 3
