"""Brute-force character tables and minimal faithful dimension of small groups.

Character tables come from Dixon's modular version of Burnside's algorithm:
the class-sum structure constants are diagonalized over F_l with l = 1 mod
exp(G), and the resulting modular characters are lifted to C through the
eigenvalue multiplicities of each element.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np
import sympy

from .modmat import GroupMatrix

SIZE_CAP = 10_000
TOL = 1e-6


class OracleError(RuntimeError):
    pass


class FiniteGroup:
    """A finite group given by its full multiplication table."""

    def __init__(self, table: np.ndarray, name: str = "G"):
        self.table = table
        self.order = table.shape[0]
        self.name = name
        eye = np.nonzero((table == np.arange(self.order)).all(axis=1))[0]
        if eye.size != 1:
            raise OracleError("multiplication table has no unique identity")
        self.identity = int(eye[0])
        self.inv = np.argmax(table == self.identity, axis=1)

    @classmethod
    def from_elements(cls, elements: Sequence[Hashable], mul: Callable, name: str = "G") -> "FiniteGroup":
        n = len(elements)
        if n > SIZE_CAP:
            raise OracleError(f"|G| = {n} exceeds {SIZE_CAP}")
        index = {g: k for k, g in enumerate(elements)}
        table = np.empty((n, n), dtype=np.int32)
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                table[i, j] = index[mul(a, b)]
        return cls(table, name)

    @classmethod
    def from_matrices(cls, mats: Sequence[GroupMatrix], name: str = "G") -> "FiniteGroup":
        n = len(mats)
        if n > SIZE_CAP:
            raise OracleError(f"|G| = {n} exceeds {SIZE_CAP}")
        m = mats[0].ring.char
        D = np.stack([g.data for g in mats]).astype(np.int64)
        index = {g.key(): k for k, g in enumerate(mats)}
        table = np.empty((n, n), dtype=np.int32)
        for j in range(n):
            P = np.ascontiguousarray(np.matmul(D, D[j]) % m)
            table[:, j] = [index[row.tobytes()] for row in P]
        return cls(table, name)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        a = np.arange(n)
        return cls(((a[:, None] + a[None, :]) % n).astype(np.int32), f"Z/{n}")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, g: int, k: int) -> int:
        out = self.identity
        for _ in range(k % self.element_order(g)):
            out = self.mul(out, g)
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(g) for g in range(self.order)))


@dataclass
class ClassPartition:
    reps: list[int]
    members: list[np.ndarray]
    class_of: np.ndarray

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.members]

    def __len__(self) -> int:
        return len(self.reps)


def conjugacy_classes(G: FiniteGroup) -> ClassPartition:
    n = G.order
    class_of = np.full(n, -1, dtype=np.int64)
    reps, members = [], []
    every = np.arange(n)
    # identity first so class 0 is {1}
    for x in [G.identity] + [g for g in range(n) if g != G.identity]:
        if class_of[x] >= 0:
            continue
        orbit = np.unique(G.table[G.table[G.inv, x], every])
        class_of[orbit] = len(reps)
        reps.append(x)
        members.append(orbit)
    return ClassPartition(reps, members, class_of)


def _nullspace_mod(A: np.ndarray, l: int) -> np.ndarray:
    """Basis of {v : A v = 0} over F_l, as columns."""
    A = A.copy() % l
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, l) % l
        f = A[:, c].copy()
        f[r] = 0
        A = (A - np.outer(f, A[r])) % l
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for i, pc in enumerate(pivots):
            basis[pc, k] = -A[i, fc] % l
    return basis


def _echelon_columns(B: np.ndarray, l: int) -> tuple[np.ndarray, list[int]]:
    """Column-reduce B so that B[pivots] is the identity."""
    T = B.T.copy() % l
    pivots = []
    r = 0
    for c in range(T.shape[1]):
        nz = np.nonzero(T[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        T[[r, k]] = T[[k, r]]
        T[r] = T[r] * pow(int(T[r, c]), -1, l) % l
        f = T[:, c].copy()
        f[r] = 0
        T = (T - np.outer(f, T[r])) % l
        pivots.append(c)
        r += 1
        if r == T.shape[0]:
            break
    return T.T, pivots


def _roots_mod(X: np.ndarray, l: int) -> list[int]:
    coeffs = [int(c) % l for c in sympy.Matrix(X.tolist()).charpoly().all_coeffs()]
    lam = np.arange(l, dtype=np.int64)
    acc = np.zeros(l, dtype=np.int64)
    for c in coeffs:
        acc = (acc * lam + c) % l
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def _split(M: np.ndarray, B: np.ndarray, l: int) -> list[np.ndarray]:
    """Split span(B) into the eigenspaces of M restricted to it."""
    B, piv = _echelon_columns(B, l)
    X = ((M @ B) % l)[piv]
    k = B.shape[1]
    parts, total = [], 0
    for lam in _roots_mod(X, l):
        W = _nullspace_mod((X - lam * np.eye(k, dtype=np.int64)) % l, l)
        parts.append((B @ W) % l)
        total += W.shape[1]
    if total != k:
        raise OracleError("class algebra did not split over F_l")
    return parts


def dixon_prime(order: int, exponent: int) -> int:
    l = exponent + 1
    while not (sympy.isprime(l) and l > 2 * math.isqrt(order) + 2):
        l += exponent
    return l


@dataclass
class CharacterTable:
    group_order: int
    classes: ClassPartition = field(repr=False)
    values: np.ndarray = field(repr=False)  # rows are irreducible characters
    degrees: list[int]

    def kernel_mask(self, i: int) -> int:
        chi = self.values[i]
        mask = 0
        for c, v in enumerate(chi):
            if abs(v - chi[0]) < TOL:
                mask |= 1 << c
        return mask

    def check_orthogonality(self) -> float:
        """Largest deviation from the row and column orthogonality relations."""
        h = np.array(self.classes.sizes, dtype=float)
        X = self.values
        rows = (X * h) @ X.conj().T / self.group_order
        cols = X.conj().T @ X
        cent = np.diag(self.group_order / h)
        return float(max(np.abs(rows - np.eye(len(X))).max(), np.abs(cols - cent).max()))

    def to_json(self) -> str:
        return json.dumps(
            {
                "classes": [int(r) for r in self.classes.reps],
                "sizes": self.classes.sizes,
                "degrees": self.degrees,
                "values": [[[round(v.real, 9), round(v.imag, 9)] for v in row] for row in self.values],
            }
        )


def character_table(G: FiniteGroup, cls: ClassPartition | None = None) -> CharacterTable:
    if G.order > SIZE_CAP:
        raise OracleError(f"|G| = {G.order} exceeds {SIZE_CAP}")
    cls = cls or conjugacy_classes(G)
    r = len(cls)
    h = cls.sizes
    e = G.exponent()
    l = dixon_prime(G.order, e)
    inv_class = [int(cls.class_of[G.inv[x]]) for x in cls.reps]

    # M_j[i, k] = #{x in C_j : x^-1 g_k in C_i}
    mats = []
    for j in range(r):
        Mj = np.zeros((r, r), dtype=np.int64)
        xs_inv = G.inv[cls.members[j]]
        for k, gk in enumerate(cls.reps):
            np.add.at(Mj[:, k], cls.class_of[G.table[xs_inv, gk]], 1)
        mats.append(Mj % l)

    spaces = [np.eye(r, dtype=np.int64)]
    for Mj in mats:
        if all(S.shape[1] == 1 for S in spaces):
            break
        nxt = []
        for S in spaces:
            nxt.extend([S] if S.shape[1] == 1 else _split(Mj, S, l))
        spaces = nxt
    if len(spaces) != r or any(S.shape[1] != 1 for S in spaces):
        raise OracleError("class algebra eigenvectors not separated")

    # power maps on class representatives
    powers = np.empty((r, e), dtype=np.int64)
    for c, g in enumerate(cls.reps):
        x = G.identity
        for t in range(e):
            powers[c, t] = cls.class_of[x]
            x = G.mul(x, g)
    z = _primitive_root_of_unity(e, l)
    zeta = np.exp(2j * np.pi / e)

    values, degrees = [], []
    for S in spaces:
        w = S[:, 0] % l
        w = w * pow(int(w[0]), -1, l) % l
        s = sum(int(w[j]) * int(w[inv_class[j]]) * pow(h[j], -1, l) for j in range(r)) % l
        dsq = G.order * pow(s, -1, l) % l
        deg = next((f for f in range(1, math.isqrt(G.order) + 1) if f * f % l == dsq), None)
        if deg is None:
            raise OracleError("degree lift failed")
        theta = [deg * int(w[j]) * pow(h[j], -1, l) % l for j in range(r)]
        row = []
        for c in range(r):
            tc = [theta[powers[c, t]] for t in range(e)]
            val = 0j
            for k in range(e):
                mk = sum(tc[t] * pow(z, (-k * t) % e, l) for t in range(e)) * pow(e, -1, l) % l
                if mk > deg:
                    raise OracleError("eigenvalue multiplicity lift failed")
                val += mk * zeta**k
            row.append(val)
        values.append(row)
        degrees.append(deg)

    order = sorted(range(r), key=lambda i: (degrees[i], [round(-v.real, 6) for v in values[i]]))
    table = CharacterTable(G.order, cls, np.array([values[i] for i in order]), [degrees[i] for i in order])
    if sum(d * d for d in table.degrees) != G.order:
        raise OracleError("sum of squared degrees differs from |G|")
    if table.check_orthogonality() > TOL:
        raise OracleError("orthogonality relations fail")
    return table


def _primitive_root_of_unity(e: int, l: int) -> int:
    g = sympy.primitive_root(l)
    return pow(g, (l - 1) // e, l)


def minimal_faithful_dimension(table: CharacterTable) -> int:
    """Smallest total degree of irreducibles whose kernels meet trivially."""
    r = len(table.degrees)
    trivial = 1  # class 0 is the identity class
    full = (1 << r) - 1
    chars = sorted(
        ((table.degrees[i], table.kernel_mask(i)) for i in range(r) if table.kernel_mask(i) != full),
        key=lambda t: t[0],
    )
    if table.group_order == 1:
        return 0
    best = [math.inf]

    def search(start: int, mask: int, total: int) -> None:
        if total >= best[0]:
            return
        if mask == trivial:
            best[0] = total
            return
        for k in range(start, len(chars)):
            deg, ker = chars[k]
            if total + deg >= best[0]:
                break
            new = mask & ker
            if new != mask:
                search(k + 1, new, total + deg)

    search(0, full, 0)
    if best[0] is math.inf:
        raise OracleError("no faithful representation found")
    return int(best[0])
