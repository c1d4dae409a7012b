"""Elementary adjoint Chevalley groups G_ad(R) as explicit matrices over R."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .chevalley import StructureTable, exp_ad, specialize
from .localring import Ring, RingElement, RingSpec, make_ring
from .modmat import GroupMatrix
from .rootsys import Root

CONSTANT_CANDIDATES = (1, -1, 2, -2, 3, -3)

# Constants are integers, so one fitting ring serves every R: 25 > 2*3 keeps
# the six candidates distinct and p = 5 keeps t -> x_a(t) injective.
FIT_RING = RingSpec("zpn", 5, 1, 2)
FIT_PROBES = ((1, 1), (2, 3), (7, 4))


class GroupOverflow(RuntimeError):
    pass


class FitError(RuntimeError):
    pass


def generator(table: StructureTable, alpha: Root, t: RingElement) -> GroupMatrix:
    return specialize(exp_ad(table, alpha), t)


def commutator(g: GroupMatrix, h: GroupMatrix) -> GroupMatrix:
    """[g, h] = g^-1 h^-1 g h."""
    return g.inverse() @ h.inverse() @ g @ h


def commutator_terms(table: StructureTable, alpha: Root, beta: Root) -> list[tuple[int, int, Root]]:
    """(i, j, i*beta + j*alpha) for i, j > 0 with i*beta + j*alpha a root, by i + j."""
    rs = table.rs
    out = []
    for s in range(2, 6):
        for i in range(1, s):
            g = rs.combo(i, beta, s - i, alpha)
            if g is not None:
                out.append((i, s - i, g))
    return out


def commutator_product(
    table: StructureTable,
    alpha: Root,
    beta: Root,
    t1: RingElement,
    t2: RingElement,
    constants: Iterable[tuple[int, int, int]],
) -> GroupMatrix:
    """prod x_{i beta + j alpha}(C_{i,j} (-t1)^i t2^j) in increasing i + j."""
    R = t1.owner
    rs = table.rs
    out = GroupMatrix.identity(R, table.dim)
    for i, j, c in constants:
        g = rs.combo(i, beta, j, alpha)
        out = out @ generator(table, g, (-t1) ** i * t2**j * c)
    return out


_FIT_CACHE: dict[tuple[int, Root, Root], list[tuple[int, int, int]]] = {}


def chevalley_constants(table: StructureTable, alpha: Root, beta: Root) -> list[tuple[int, int, int]]:
    """Integers C_{i,j,beta,alpha} reproducing [x_alpha(t2), x_beta(t1)] as a product."""
    if alpha == beta or alpha == table.rs.neg(beta):
        raise ValueError("constants are defined only for alpha != +-beta")
    key = (id(table), alpha, beta)
    if key in _FIT_CACHE:
        return _FIT_CACHE[key]
    terms = commutator_terms(table, alpha, beta)
    if not terms:
        _FIT_CACHE[key] = []
        return []
    R = make_ring(FIT_RING)
    probes = []
    for a, b in FIT_PROBES:
        t1, t2 = R(a), R(b)
        target = commutator(generator(table, alpha, t2), generator(table, beta, t1))
        # factor k of the product for each candidate constant
        factors = [
            {c: generator(table, g, (-t1) ** i * t2**j * c) for c in CONSTANT_CANDIDATES}
            for i, j, g in terms
        ]
        probes.append((target, factors))
    hits = []
    for combo in itertools.product(CONSTANT_CANDIDATES, repeat=len(terms)):
        for target, factors in probes:
            prod = factors[0][combo[0]]
            for k in range(1, len(terms)):
                prod = prod @ factors[k][combo[k]]
            if prod != target:
                break
        else:
            hits.append([(i, j, c) for (i, j, _), c in zip(terms, combo)])
    if len(hits) != 1:
        raise FitError(f"{len(hits)} consistent constant sets for ({alpha}, {beta})")
    _FIT_CACHE[key] = hits[0]
    return hits[0]


@dataclass(frozen=True)
class TorusElement:
    alpha: Root
    lam: RingElement
    matrix: GroupMatrix = field(repr=False)


def weyl_element(table: StructureTable, alpha: Root, lam: RingElement) -> GroupMatrix:
    """w_alpha(lam) = x_alpha(lam) x_{-alpha}(-lam^-1) x_alpha(lam)."""
    neg = table.rs.neg(alpha)
    xa = generator(table, alpha, lam)
    return xa @ generator(table, neg, -(lam ** -1)) @ xa


def torus(table: StructureTable, alpha: Root, lam: RingElement) -> TorusElement:
    """h_alpha(lam) = w_alpha(lam) w_alpha(-1)."""
    R = lam.owner
    if not R.is_unit(lam):
        raise ValueError(f"{lam} is not a unit")
    M = weyl_element(table, alpha, lam) @ weyl_element(table, alpha, -R.one)
    return TorusElement(alpha, lam, M)


def elementary_generators(table: StructureTable, ring: Ring) -> list[GroupMatrix]:
    return [generator(table, a, e) for a in table.rs.roots for e in ring.additive_basis()]


def enumerate_group(generators: list[GroupMatrix], cap: int = 10_000) -> list[GroupMatrix]:
    """All elements of <generators>, in breadth-first order from the identity."""
    first = generators[0]
    ident = GroupMatrix.identity(first.ring, first.side)
    seen = {ident.key()}
    out = [ident]
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = g @ s
            k = h.key()
            if k not in seen:
                seen.add(k)
                out.append(h)
                if len(out) > cap:
                    raise GroupOverflow(f"group has more than {cap} elements")
                queue.append(h)
    return out


def adjoint_group(table: StructureTable, ring: Ring, cap: int = 10_000) -> list[GroupMatrix]:
    return enumerate_group(elementary_generators(table, ring), cap)
