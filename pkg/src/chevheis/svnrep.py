"""Stone-von Neumann representations of U and the orbit count behind h_f."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .heisenberg import DEFAULT_CAP, HeisCoords, HeisGroup, HypothesisError, build_heis
from .localring import AdditiveCharacter, Ring, RingElement, character_value
from .rootsys import Root, RootSystemId, build

DIM_CAP = 4096
TOL = 1e-6


class NotGeneric(ValueError):
    pass


@dataclass(frozen=True)
class CentralCharacter:
    parent: HeisGroup = field(repr=False)
    b: RingElement

    def __call__(self, s: RingElement) -> int:
        return character_value(AdditiveCharacter(self.parent.ring, self.b), s)

    @property
    def order(self) -> int:
        return self.parent.ring.char

    def is_generic(self) -> bool:
        return self.parent.ring.is_unit(self.b)


@dataclass(frozen=True)
class ExtendedCharacter:
    """A character of A: psi(b*z + sum_i e_i * t_{alpha_i})."""

    chi: CentralCharacter
    ext: tuple[RingElement, ...]

    def __call__(self, a: HeisCoords) -> int:
        H = self.chi.parent
        R = H.ring
        k = self.chi(a.z)
        for (ia, _, _), e in zip(H.pairs, self.ext):
            if e:
                k += character_value(AdditiveCharacter(R, e), a.t[ia])
        return k % R.char


def extend_to_A(chi: CentralCharacter, ext=None, force: bool = False) -> ExtendedCharacter:
    H = chi.parent
    if not force and not chi.is_generic():
        raise NotGeneric(f"b={chi.b} does not give a generic central character")
    if ext is None:
        ext = (H.ring.zero,) * H.d
    ext = tuple(e if isinstance(e, RingElement) else H.ring(e) for e in ext)
    if len(ext) != H.d:
        raise ValueError(f"need {H.d} extension parameters")
    return ExtendedCharacter(chi, ext)


def all_extensions(chi: CentralCharacter) -> list[ExtendedCharacter]:
    H = chi.parent
    vals = list(H.ring.elements())
    return [ExtendedCharacter(chi, e) for e in itertools.product(vals, repeat=H.d)]


@dataclass(frozen=True)
class MonomialMatrix:
    """Row r has the single entry e(exps[r]/order) in column cols[r]."""

    cols: np.ndarray
    exps: np.ndarray
    order: int

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        return MonomialMatrix(
            other.cols[self.cols], (self.exps + other.exps[self.cols]) % self.order, self.order
        )

    def trace(self) -> complex:
        fixed = self.cols == np.arange(len(self.cols))
        return complex(np.exp(2j * np.pi * self.exps[fixed] / self.order).sum())

    def to_dense(self) -> np.ndarray:
        n = len(self.cols)
        M = np.zeros((n, n), dtype=complex)
        M[np.arange(n), self.cols] = np.exp(2j * np.pi * self.exps / self.order)
        return M

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialMatrix)
            and np.array_equal(self.cols, other.cols)
            and np.array_equal(self.exps % self.order, other.exps % other.order)
        )

    def is_scalar(self) -> bool:
        return bool(np.array_equal(self.cols, np.arange(len(self.cols))) and np.all(self.exps == self.exps[0]))


class MonomialRep:
    """Ind_A^U of an extended character, on functions f(a r) = chi~(a) f(r)."""

    def __init__(self, chi_tilde: ExtendedCharacter):
        self.chi_tilde = chi_tilde
        H = chi_tilde.chi.parent
        self.group = H
        R = H.ring
        self._vals = list(R.elements())
        self._val_index = {v: k for k, v in enumerate(self._vals)}
        self._rep_pos = [ib for _, ib, _ in H.pairs]
        self.dimension = R.size**H.d
        self.order = R.char
        self.reps = [self._rep(k) for k in range(self.dimension)]
        self.images = {g: self.image(g) for g in H.generators()}

    def _rep(self, k: int) -> HeisCoords:
        H = self.group
        t = [H.ring.zero] * len(H.roots)
        for pos in self._rep_pos:
            k, digit = divmod(k, len(self._vals))
            t[pos] = self._vals[digit]
        return HeisCoords(tuple(t), H.ring.zero)

    def coset_index(self, u: HeisCoords) -> int:
        k = 0
        for pos in reversed(self._rep_pos):
            k = k * len(self._vals) + self._val_index[u.t[pos]]
        return k

    def decompose(self, u: HeisCoords) -> tuple[HeisCoords, int]:
        """u = a * r with a in A and r the coset representative of index k."""
        H = self.group
        k = self.coset_index(u)
        a = H.multiply(u, H.inverse(self.reps[k]))
        return a, k

    def image(self, g: HeisCoords) -> MonomialMatrix:
        H = self.group
        cols = np.empty(self.dimension, dtype=np.int64)
        exps = np.empty(self.dimension, dtype=np.int64)
        for row, r in enumerate(self.reps):
            a, k = self.decompose(H.multiply(r, g))
            cols[row] = k
            exps[row] = self.chi_tilde(a)
        return MonomialMatrix(cols, exps, self.order)

    def character(self, g: HeisCoords) -> complex:
        return self.image(g).trace()


class DirectSum:
    def __init__(self, *parts: MonomialRep):
        self.parts = parts
        self.group = parts[0].group
        self.dimension = sum(p.dimension for p in parts)

    def image(self, g: HeisCoords) -> MonomialMatrix:
        cols, exps, off = [], [], 0
        order = int(np.lcm.reduce([p.order for p in self.parts]))
        for p in self.parts:
            m = p.image(g)
            cols.append(m.cols + off)
            exps.append(m.exps * (order // p.order))
            off += p.dimension
        return MonomialMatrix(np.concatenate(cols), np.concatenate(exps), order)

    def character(self, g: HeisCoords) -> complex:
        return sum(p.character(g) for p in self.parts)


def induce(chi_tilde: ExtendedCharacter, cap: int = DIM_CAP) -> MonomialRep:
    H = chi_tilde.chi.parent
    dim = H.ring.size**H.d
    if dim > cap:
        raise ValueError(f"induced dimension {dim} exceeds cap {cap}")
    return MonomialRep(chi_tilde)


def character_norm(rep, cap: int = DEFAULT_CAP) -> float:
    """<chi, chi> = |U|^-1 sum_u |tr rep(u)|^2."""
    H = rep.group
    total = 0.0
    count = 0
    for u in H.elements(cap):
        total += abs(rep.character(u)) ** 2
        count += 1
    return total / count


def is_irreducible(rep, cap: int = DEFAULT_CAP, tol: float = TOL) -> bool:
    return abs(character_norm(rep, cap) - 1.0) < tol


def character_vector(rep, cap: int = DEFAULT_CAP) -> np.ndarray:
    return np.array([rep.character(u) for u in rep.group.elements(cap)])


def svn_uniqueness_check(H: HeisGroup, b: RingElement, max_extensions: int | None = None,
                         cap: int = DEFAULT_CAP, tol: float = TOL) -> bool:
    chi = CentralCharacter(H, b)
    if not chi.is_generic():
        raise NotGeneric(f"b={b} is not generic")
    exts = all_extensions(chi)
    if max_extensions is not None:
        exts = exts[:max_extensions]
    if len(exts) < 2:
        return True
    ref = character_vector(induce(exts[0]), cap)
    return all(np.max(np.abs(character_vector(induce(e), cap) - ref)) < tol for e in exts[1:])


def conjugate_character(b: RingElement, lam: RingElement, alpha: Root, system) -> RingElement:
    """Parameter of the central character after conjugating by h_alpha(lam)."""
    rs = build(system)
    return b * lam ** rs.pairing(rs.highest_root, alpha)


def orbit_count(system, ring: Ring) -> int:
    rs = build(system)
    F, witness = rs.f_phi()
    b1 = ring.one
    return len({conjugate_character(b1, lam, witness, rs.id) for lam in ring.units()})


@dataclass(frozen=True)
class BoundCertificate:
    phi: str
    q: int
    n: int
    d: int
    irrep_dim: int
    orbit_count: int
    num_units: int
    bound: int

    @property
    def factor(self) -> str:
        return "1" if self.orbit_count == self.num_units else "1/2"

    def to_dict(self) -> dict:
        return {
            "phi": self.phi,
            "q": self.q,
            "n": self.n,
            "d": self.d,
            "irrep_dim": self.irrep_dim,
            "orbit_count": self.orbit_count,
            "bound": self.bound,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def lower_bound_certificate(system, ring: Ring) -> BoundCertificate:
    ident = RootSystemId.parse(system)
    if ring.p < 3 or (ident.family == "G" and ring.p < 5):
        raise HypothesisError(f"{ident} over {ring} violates the p hypothesis")
    rs = build(ident)
    d = rs.d
    orbits = orbit_count(ident, ring)
    irrep_dim = ring.q ** (d * ring.n)
    cert = BoundCertificate(str(ident), ring.q, ring.n, d, irrep_dim, orbits, ring.num_units, orbits * irrep_dim)
    expected = bounds.h_f(ident, ring.q, ring.n)
    if cert.bound != expected:
        raise AssertionError(f"certificate bound {cert.bound} != table value {expected}")
    return cert
