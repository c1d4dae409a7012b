"""Matrices over the finite local rings, via the regular representation.

A k x k matrix over R is stored as a (k*L) x (k*L) integer matrix over Z/m,
where L = R.dim and each L x L block is the multiplication-by-entry matrix.
Block matrices of this shape multiply exactly like the matrices over R they
encode, so all group arithmetic reduces to integer matmul mod m.
"""

from __future__ import annotations

import numpy as np

from .localring import Ring, RingElement


def inv_mod(M: np.ndarray, p: int, m: int) -> np.ndarray:
    """Inverse of M over Z/m, m a power of p, by elimination on unit pivots."""
    n = M.shape[0]
    A = np.concatenate([M % m, np.eye(n, dtype=np.int64)], axis=1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if A[r, col] % p:
                piv = r
                break
        if piv is None:
            raise ZeroDivisionError("matrix is not invertible over the ring")
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
        A[col] = (A[col] * pow(int(A[col, col]), -1, m)) % m
        f = A[:, col].copy()
        f[col] = 0
        nz = np.nonzero(f)[0]
        if nz.size:
            A[nz] = (A[nz] - np.outer(f[nz], A[col])) % m
    return A[:, n:]


class GroupMatrix:
    """An invertible matrix over R (side ``side``) acting on the Lie algebra g_R."""

    __slots__ = ("ring", "side", "data", "_key")

    def __init__(self, ring: Ring, data: np.ndarray, side: int | None = None):
        self.ring = ring
        self.data = data
        self.side = side if side is not None else data.shape[0] // ring.dim
        self._key = None

    @classmethod
    def identity(cls, ring: Ring, side: int) -> "GroupMatrix":
        return cls(ring, np.eye(side * ring.dim, dtype=np.int64), side)

    @classmethod
    def from_integer_matrix(cls, ring: Ring, M: np.ndarray) -> "GroupMatrix":
        L = ring.dim
        data = np.kron(np.asarray(M, dtype=np.int64) % ring.char, np.eye(L, dtype=np.int64))
        return cls(ring, data % ring.char, M.shape[0])

    @classmethod
    def from_entries(cls, ring: Ring, entries) -> "GroupMatrix":
        k = len(entries)
        L = ring.dim
        data = np.zeros((k * L, k * L), dtype=np.int64)
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                data[i * L : (i + 1) * L, j * L : (j + 1) * L] = ring.regular_matrix(ring(x) if not isinstance(x, RingElement) else x)
        return cls(ring, data, k)

    def __matmul__(self, other: "GroupMatrix") -> "GroupMatrix":
        if other.ring != self.ring:
            raise ValueError("matrices over different rings")
        return GroupMatrix(self.ring, (self.data @ other.data) % self.ring.char, self.side)

    __mul__ = __matmul__

    def inverse(self) -> "GroupMatrix":
        return GroupMatrix(self.ring, inv_mod(self.data, self.ring.p, self.ring.char), self.side)

    def entry(self, i: int, j: int) -> RingElement:
        L = self.ring.dim
        return self.ring.element(self.data[i * L : (i + 1) * L, j * L])

    def entries(self) -> list[list[RingElement]]:
        return [[self.entry(i, j) for j in range(self.side)] for i in range(self.side)]

    def apply(self, vec: list[RingElement]) -> list[RingElement]:
        L = self.ring.dim
        flat = np.array([c for x in vec for c in x.coords], dtype=np.int64)
        out = (self.data @ flat) % self.ring.char
        return [self.ring.element(out[i * L : (i + 1) * L]) for i in range(self.side)]

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.data, np.eye(self.data.shape[0], dtype=np.int64)))

    def key(self) -> bytes:
        if self._key is None:
            self._key = np.ascontiguousarray(self.data, dtype=np.int64).tobytes()
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupMatrix) and self.ring == other.ring and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"GroupMatrix({self.ring}, side={self.side})"
