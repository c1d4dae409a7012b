"""Chevalley basis of g_Z and the integral matrices of exp(xi ad e_alpha)."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .localring import RingElement
from .modmat import GroupMatrix
from .rootsys import Root, RootSystem, RootSystemId, build

CACHE_ENV = "CHEVHEIS_CACHE"


class StructureError(RuntimeError):
    pass


class StructureTable:
    """Brackets of the Chevalley basis.

    Basis order: e_alpha for negative roots (ascending), H_1..H_rank for the
    simple roots, then e_alpha for positive roots (ascending).
    """

    def __init__(self, rs: RootSystem, N: dict[tuple[Root, Root], int]):
        self.rs = rs
        self.system = rs.id
        self.N = N
        self.rank = rs.rank
        self.labels: list[Root | int] = list(rs.negative) + list(range(rs.rank)) + list(rs.positive)
        self.dim = len(self.labels)
        self.index = {lab: k for k, lab in enumerate(self.labels) if isinstance(lab, Root)}
        self._h_index = len(rs.negative)
        self._brackets = self._build_brackets()
        self._ad_cache: dict[Root, np.ndarray] = {}

    def __repr__(self) -> str:
        return f"StructureTable({self.system}, dim={self.dim})"

    def h(self, i: int) -> int:
        return self._h_index + i

    def coroot(self, a: Root) -> list[int]:
        """H_a in the basis H_1..H_rank."""
        rs = self.rs
        na = rs._inner2(a, a)
        out = []
        for i, s in enumerate(rs.simple):
            c, rem = divmod(a.simple[i] * rs._inner2(s, s), na)
            assert rem == 0
            out.append(c)
        return out

    def _build_brackets(self) -> dict[tuple[int, int], dict[int, int]]:
        rs = self.rs
        br: dict[tuple[int, int], dict[int, int]] = {}
        roots = rs.roots
        for a in roots:
            ia = self.index[a]
            for b in roots:
                ib = self.index[b]
                s = rs.add(a, b)
                if s is not None:
                    br[ia, ib] = {self.index[s]: self.N[a, b]}
                elif a.simple == tuple(-x for x in b.simple):
                    br[ia, ib] = {self.h(i): c for i, c in enumerate(self.coroot(a)) if c}
            for i, s in enumerate(rs.simple):
                c = rs.pairing(a, s)
                if c:
                    br[self.h(i), ia] = {ia: c}
                    br[ia, self.h(i)] = {ia: -c}
        return br

    def bracket_basis(self, i: int, j: int) -> dict[int, int]:
        return self._brackets.get((i, j), {})

    def bracket(self, u, v):
        """Bracket of coefficient vectors (ints or ring elements)."""
        out = [0] * self.dim
        for (i, j), res in self._brackets.items():
            ui, vj = u[i], v[j]
            if ui and vj:
                c = ui * vj
                for k, s in res.items():
                    out[k] = out[k] + s * c
        if u and isinstance(u[0], RingElement):
            R = u[0].owner
            out = [x if isinstance(x, RingElement) else R.from_int(x) for x in out]
        return out

    def ad(self, a: Root | int) -> np.ndarray:
        """Matrix of ad(b) where b is a root vector e_a or a basis index."""
        k = self.index[a] if isinstance(a, Root) else a
        cached = self._ad_cache.get(k)
        if cached is not None:
            return cached
        M = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j in range(self.dim):
            for t, s in self.bracket_basis(k, j).items():
                M[t, j] = s
        self._ad_cache[k] = M
        return M

    def sparse_tensor(self) -> sp.csr_matrix:
        """c[i, j, k] as a (dim*dim, dim) sparse matrix, row i*dim + j."""
        rows, cols, vals = [], [], []
        d = self.dim
        for (i, j), res in self._brackets.items():
            for k, s in res.items():
                rows.append(i * d + j)
                cols.append(k)
                vals.append(s)
        return sp.csr_matrix((vals, (rows, cols)), shape=(d * d, d), dtype=np.int64)

    def to_json(self) -> str:
        idx = {r: r.order_index for r in self.rs.roots}
        triples = sorted([idx[a], idx[b], v] for (a, b), v in self.N.items())
        return json.dumps({"system": str(self.system), "N": triples})


def _fill_triple(rs: RootSystem, N: dict, x: Root, y: Root, z: Root, val: Fraction) -> None:
    """Record N_{x,y} = val for x + y + z = 0, with every value it forces."""
    nx, ny, nz = rs._inner2(x, x), rs._inner2(y, y), rs._inner2(z, z)
    vyz = val * nx / nz
    vzx = val * ny / nz
    for a, b, v in ((x, y, val), (y, z, vyz), (z, x, vzx)):
        if Fraction(v).denominator != 1:
            raise StructureError(f"non-integral constant N_{a},{b} = {v}")
        v = int(v)
        for key, w in (((a, b), v), ((b, a), -v), ((rs.neg(a), rs.neg(b)), -v), ((rs.neg(b), rs.neg(a)), v)):
            old = N.get(key)
            if old is not None and old != w:
                raise StructureError(f"inconsistent N{key}: {old} vs {w}")
            N[key] = w


def _string_down(rs: RootSystem, b: Root, a: Root) -> int:
    r = 0
    while rs.combo(1, b, -(r + 1), a) is not None:
        r += 1
    return r


def compute_constants(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    """N_{a,b} from the extraspecial-pair signs (all +), by induction on height."""
    N: dict[tuple[Root, Root], int] = {}

    def n_or_zero(a: Root, b: Root) -> int:
        if rs.add(a, b) is None:
            return 0
        return N[a, b]

    for g in rs.positive:
        if g.height == 1:
            continue
        decomps = [(x, rs.sub(g, x)) for x in rs.positive if rs.sub(g, x) is not None and rs.sub(g, x).height > 0]
        a, b = decomps[0]  # extraspecial pair: a is minimal in the order
        nab = _string_down(rs, b, a) + 1
        _fill_triple(rs, N, a, b, rs.neg(g), Fraction(nab))
        ng = Fraction(rs._inner2(g, g))
        ma, mb = rs.neg(a), rs.neg(b)
        for x, z in decomps:
            if x.order_index >= z.order_index or x in (a, b):
                continue
            total = Fraction(0)
            za = rs.sub(z, a)
            if za is not None:
                total += Fraction(n_or_zero(z, ma) * n_or_zero(x, mb), rs._inner2(za, za))
            xa = rs.sub(x, a)
            if xa is not None:
                total += Fraction(n_or_zero(ma, x) * n_or_zero(z, mb), rs._inner2(xa, xa))
            _fill_triple(rs, N, x, z, rs.neg(g), ng * total / nab)
    return N


def jacobi_violations(table: StructureTable) -> int:
    """Number of (i, j, l, k) with nonzero Jacobiator coefficient."""
    d = table.dim
    C = table.sparse_tensor()
    Cm = C.reshape((d, d * d)).tocsr()
    bad = 0
    for l in range(d):
        A = C[np.arange(d) * d + l].tocsr()  # A[j, m] = c[j, l, m]
        t1 = (C @ A).tocoo()  # [[b_i, b_j], b_l]
        P = (A @ Cm).tocoo()  # P[j, i*d + k] = [[b_j, b_l], b_i]_k
        i2, k2 = np.divmod(P.col, d)
        rows = np.concatenate([t1.row, i2 * d + P.row, P.row * d + i2])
        cols = np.concatenate([t1.col, k2, k2])
        vals = np.concatenate([t1.data, P.data, -P.data])
        J = sp.coo_matrix((vals, (rows, cols)), shape=(d * d, d)).tocsr()
        J.eliminate_zeros()
        bad += J.nnz
    return bad


def antisymmetry_violations(table: StructureTable) -> int:
    bad = 0
    for i in range(table.dim):
        for j in range(table.dim):
            a = table.bracket_basis(i, j)
            b = table.bracket_basis(j, i)
            if set(a) != set(b) or any(a[k] != -b[k] for k in a):
                bad += 1
    return bad


def _cache_path(ident: RootSystemId) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    return Path(root) / f"structure_{ident}.json" if root else None


def load_constants(rs: RootSystem, text: str) -> dict[tuple[Root, Root], int]:
    data = json.loads(text)
    if data["system"] != str(rs.id):
        raise StructureError(f"cache is for {data['system']}, not {rs.id}")
    return {(rs.roots[i], rs.roots[j]): v for i, j, v in data["N"]}


def structure_constants(ident: RootSystemId | str, verify: bool = False) -> StructureTable:
    table = _structure_constants(RootSystemId.parse(ident))
    if verify and jacobi_violations(table):
        raise StructureError(f"Jacobi identity fails for {table.system}")
    return table


@lru_cache(maxsize=None)
def _structure_constants(ident: RootSystemId) -> StructureTable:
    rs = build(ident)
    path = _cache_path(ident)
    if path is not None and path.exists():
        return StructureTable(rs, load_constants(rs, path.read_text()))
    table = StructureTable(rs, compute_constants(rs))
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(table.to_json())
    return table


@dataclass(frozen=True, eq=False)
class ExpPolyMatrix:
    """exp(xi ad e_alpha) = sum_i coeffs[i] * xi^i with integer matrices."""

    alpha: Root
    coeffs: tuple[np.ndarray, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def at_integer(self, xi: int) -> np.ndarray:
        return sum(c * xi**i for i, c in enumerate(self.coeffs))


def exp_ad(table: StructureTable, alpha: Root) -> ExpPolyMatrix:
    return _exp_ad(table, alpha)


_EXP_CACHE: dict[tuple[int, Root], ExpPolyMatrix] = {}


def _exp_ad(table: StructureTable, alpha: Root) -> ExpPolyMatrix:
    key = (id(table), alpha)
    hit = _EXP_CACHE.get(key)
    if hit is not None:
        return hit
    ad = table.ad(alpha)
    coeffs = [np.eye(table.dim, dtype=np.int64)]
    power = coeffs[0]
    i = 0
    while True:
        i += 1
        power = power @ ad
        if not power.any():
            break
        q, r = np.divmod(power, math.factorial(i))
        if r.any():
            raise StructureError(f"(ad e_{alpha})^{i}/{i}! is not integral")
        coeffs.append(q)
        if i > 4:
            raise StructureError(f"ad e_{alpha} is not nilpotent of degree <= 5")
    out = ExpPolyMatrix(alpha, tuple(coeffs))
    _EXP_CACHE[key] = out
    return out


def specialize(m: ExpPolyMatrix, t: RingElement) -> GroupMatrix:
    """Replace a*xi^i by a*t^i over R."""
    R = t.owner
    if R.dim == 1:
        tv = t.coords[0]
        data = np.zeros_like(m.coeffs[0])
        for i, c in enumerate(m.coeffs):
            data = (data + c * pow(tv, i, R.char)) % R.char
        return GroupMatrix(R, data, m.coeffs[0].shape[0])
    data = None
    power = R.one
    for c in m.coeffs:
        block = np.kron(c % R.char, R.regular_matrix(power))
        data = block if data is None else data + block
        power = power * t
    return GroupMatrix(R, data % R.char, m.coeffs[0].shape[0])
