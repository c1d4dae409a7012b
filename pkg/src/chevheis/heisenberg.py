"""The Heisenberg subgroup U of G_ad(R) in normal-form coordinates.

An element is prod_{alpha in Sigma+} x_alpha(t_alpha) * x_top(z), the product
taken in increasing root order. U is two-step nilpotent with center X_top, so
multiplication is coordinatewise addition plus a bilinear central cocycle

    mu(u, v) = sum_i c_i * u[top - alpha_i] * v[alpha_i],

where [x_{top - alpha_i}(t), x_{alpha_i}(s)] = x_top(c_i t s).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .adgroup import chevalley_constants, generator
from .chevalley import StructureTable, structure_constants
from .localring import AdditiveCharacter, Ring, RingElement, character_value
from .modmat import GroupMatrix
from .rootsys import Root, RootSystemId

DEFAULT_CAP = 10_000


class HypothesisError(ValueError):
    pass


class EnumerationCap(RuntimeError):
    pass


@dataclass(frozen=True)
class HeisCoords:
    t: tuple[RingElement, ...]
    z: RingElement

    def to_json(self) -> str:
        return json.dumps([list(x.coords) for x in self.t] + [list(self.z.coords)])

    def is_central(self) -> bool:
        return not any(self.t)


class HeisGroup:
    def __init__(self, table: StructureTable, ring: Ring):
        self.table = table
        self.rs = table.rs
        self.system = table.system
        self.ring = ring
        self.sigma = self.rs.sigma
        self.top = self.sigma.highest
        self.d = self.sigma.d
        self.roots: list[Root] = sorted(self.rs.sigma_plus(), key=lambda r: r.order_index)
        self.pos = {r: k for k, r in enumerate(self.roots)}
        pairs = []
        for a, b in self.sigma.pairs:  # b = top - a
            ((i, j, C),) = chevalley_constants(table, b, a)
            pairs.append((self.pos[a], self.pos[b], -C))
        self.pairs: list[tuple[int, int, int]] = pairs
        self.comm_consts = [c for _, _, c in pairs]

    def __repr__(self) -> str:
        return f"HeisGroup({self.system}, {self.ring}, d={self.d})"

    @property
    def order(self) -> int:
        return self.ring.size ** (2 * self.d + 1)

    # -- elements ------------------------------------------------------------

    def identity(self) -> HeisCoords:
        R = self.ring
        return HeisCoords((R.zero,) * len(self.roots), R.zero)

    def element(self, t, z=0) -> HeisCoords:
        R = self.ring
        t = tuple(x if isinstance(x, RingElement) else R(x) for x in t)
        if len(t) != len(self.roots):
            raise ValueError(f"expected {len(self.roots)} root coordinates")
        return HeisCoords(t, z if isinstance(z, RingElement) else R(z))

    def x(self, root: Root, s) -> HeisCoords:
        """The one-parameter element x_root(s)."""
        R = self.ring
        s = s if isinstance(s, RingElement) else R(s)
        if root == self.top:
            return HeisCoords((R.zero,) * len(self.roots), s)
        t = [R.zero] * len(self.roots)
        t[self.pos[root]] = s
        return HeisCoords(tuple(t), R.zero)

    def central(self, s) -> HeisCoords:
        return self.x(self.top, s)

    def elements(self, cap: int | None = DEFAULT_CAP) -> Iterator[HeisCoords]:
        if cap is not None and self.order > cap:
            raise EnumerationCap(f"|U| = {self.order} exceeds cap {cap}")
        vals = list(self.ring.elements())
        for z in vals:
            for t in itertools.product(vals, repeat=len(self.roots)):
                yield HeisCoords(t, z)

    def noncentral_reps(self, cap: int | None = DEFAULT_CAP) -> list[HeisCoords]:
        """Representatives (z = 0) of U/Z(U)."""
        n = self.ring.size ** (2 * self.d)
        if cap is not None and n > cap:
            raise EnumerationCap(f"|U/Z| = {n} exceeds cap {cap}")
        vals = list(self.ring.elements())
        zero = self.ring.zero
        return [HeisCoords(t, zero) for t in itertools.product(vals, repeat=len(self.roots))]

    def generators(self) -> list[HeisCoords]:
        basis = self.ring.additive_basis()
        return [self.x(r, e) for r in self.roots + [self.top] for e in basis]

    # -- arithmetic ------------------------------------------------------------

    def cocycle(self, u: HeisCoords, v: HeisCoords) -> RingElement:
        out = self.ring.zero
        for ia, ib, c in self.pairs:
            ub, va = u.t[ib], v.t[ia]
            if ub and va:
                out = out + ub * va * c
        return out

    def multiply(self, u: HeisCoords, v: HeisCoords) -> HeisCoords:
        t = tuple(a + b for a, b in zip(u.t, v.t))
        return HeisCoords(t, u.z + v.z + self.cocycle(u, v))

    def inverse(self, u: HeisCoords) -> HeisCoords:
        return HeisCoords(tuple(-a for a in u.t), -u.z + self.cocycle(u, u))

    def commutator(self, u: HeisCoords, v: HeisCoords) -> HeisCoords:
        """u^-1 v^-1 u v, by collection."""
        m = self.multiply
        return m(m(self.inverse(u), self.inverse(v)), m(u, v))

    def commutator_z(self, u: HeisCoords, v: HeisCoords) -> RingElement:
        """Central coordinate of [u, v] = mu(u, v) - mu(v, u)."""
        return self.cocycle(u, v) - self.cocycle(v, u)

    def word(self, letters) -> HeisCoords:
        out = self.identity()
        for root, s in letters:
            out = self.multiply(out, self.x(root, s))
        return out

    def evaluate(self, u: HeisCoords) -> GroupMatrix:
        """The matrix in G_ad(R) with these normal-form coordinates."""
        M = GroupMatrix.identity(self.ring, self.table.dim)
        for r, s in zip(self.roots, u.t):
            if s:
                M = M @ generator(self.table, r, s)
        if u.z:
            M = M @ generator(self.table, self.top, u.z)
        return M

    # -- subgroups -------------------------------------------------------------

    def center_and_derived(self, cap: int = DEFAULT_CAP) -> tuple[frozenset, frozenset]:
        gens = self.generators()
        elems = list(self.elements(cap))
        center = frozenset(
            u for u in elems if all(self.multiply(u, g) == self.multiply(g, u) for g in gens)
        )
        comms = {self.commutator(g, h) for g in gens for h in gens}
        derived = closure(comms | {self.identity()}, self.multiply)
        return center, derived

    def central_character(self, b: RingElement) -> AdditiveCharacter:
        return AdditiveCharacter(self.ring, b)

    def genericity_pairing(self, b: RingElement, cap: int = DEFAULT_CAP) -> "PairingResult":
        chi = self.central_character(b)
        reps = self.noncentral_reps(cap)
        mat = np.array(
            [[character_value(chi, self.commutator_z(x, y)) for y in reps] for x in reps],
            dtype=np.int64,
        )
        radical = int(np.sum(~mat.any(axis=1)))
        return PairingResult(b, mat, radical == 1, radical)

    def polarizing(self) -> "PolarizingSubgroup":
        span = tuple(self.pos[a] for a, _ in self.sigma.pairs)
        return PolarizingSubgroup(self, span)


@dataclass
class PairingResult:
    b: RingElement
    table: np.ndarray = field(repr=False)
    is_generic: bool
    radical_size: int


@dataclass(frozen=True)
class PolarizingSubgroup:
    """A = <X_top, X_{alpha_i}>: the coordinates in ``span`` together with z."""

    parent: HeisGroup = field(repr=False)
    span: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.parent.ring.size ** (self.parent.d + 1)

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def contains(self, u: HeisCoords) -> bool:
        inside = set(self.span)
        return all(not s for k, s in enumerate(u.t) if k not in inside)

    def is_abelian(self) -> bool:
        inside = set(self.span)
        return not any(ia in inside and ib in inside for ia, ib, _ in self.parent.pairs)

    def bar_elements(self) -> list[HeisCoords]:
        """A/Z(U), as z = 0 representatives."""
        return [u for u in self.parent.noncentral_reps() if self.contains(u)]

    def perp(self, b: RingElement) -> list[HeisCoords]:
        """Brute-force A-bar-perp for the central character psi_b."""
        H = self.parent
        chi = H.central_character(b)
        abar = self.bar_elements()
        return [
            x
            for x in H.noncentral_reps()
            if all(character_value(chi, H.commutator_z(x, a)) == 0 for a in abar)
        ]


def closure(seed, mul) -> frozenset:
    """Subgroup generated by a finite set of elements of a finite group."""
    elems = set(seed)
    frontier = list(elems)
    gens = list(seed)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = mul(a, g)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(elems)


def build_heis(system: RootSystemId | str, ring: Ring) -> HeisGroup:
    ident = RootSystemId.parse(system)
    if ring.p < 3:
        raise HypothesisError("p must be >= 3")
    if ident.family == "G" and ring.p < 5:
        raise HypothesisError("G2 requires p ≥ 5")
    return HeisGroup(structure_constants(ident), ring)
