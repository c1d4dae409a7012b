"""Finite local rings O/p^n and their additive characters.

Three concrete families are supported:

* ``zpn``    -- Z/p^n (unramified, residue field F_p)
* ``galois`` -- the Galois ring GR(p^n, l) = Z[x]/(p^n, f), f a monic lift of
                an irreducible polynomial of degree l over F_p
* ``series`` -- F_q[t]/(t^n) with F_q = F_p[y]/(g)

Every element is a coordinate vector over Z/m, where m = p^n for the
characteristic-zero families and m = p for the truncated power series.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np
from sympy import Poly, factorint, isprime
from sympy.abc import y as _y

KINDS = ("zpn", "series", "galois")


class RingSpecError(ValueError):
    pass


@dataclass(frozen=True)
class RingSpec:
    """Parameters of R = O/p^n.

    ``modulus`` lists the coefficients of a monic degree-``l`` polynomial over
    F_p, lowest degree first (so ``(1, 0, 1)`` is y^2 + 1).
    """

    kind: str
    p: int
    l: int = 1
    n: int = 1
    modulus: tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.p**self.l

    def to_json(self) -> str:
        return json.dumps(
            {"kind": self.kind, "p": self.p, "l": self.l, "n": self.n, "modulus": list(self.modulus)}
        )

    @classmethod
    def from_json(cls, text: str | dict) -> "RingSpec":
        data = json.loads(text) if isinstance(text, str) else text
        return cls(
            kind=data["kind"],
            p=int(data["p"]),
            l=int(data.get("l", 1)),
            n=int(data.get("n", 1)),
            modulus=tuple(int(c) for c in data.get("modulus", ())),
        )


def is_irreducible_mod_p(coeffs: Sequence[int], p: int) -> bool:
    poly = Poly(list(reversed(coeffs)), _y, modulus=p)
    return poly.degree() >= 1 and poly.is_irreducible


@lru_cache(maxsize=None)
def default_modulus(p: int, l: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible of degree l over F_p."""
    if l == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=l):
        coeffs = tail + (1,)
        if coeffs[0] != 0 and is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise RingSpecError(f"no irreducible polynomial of degree {l} mod {p}")  # pragma: no cover


def validate(spec: RingSpec) -> None:
    if spec.kind not in KINDS:
        raise RingSpecError(f"unknown ring kind {spec.kind!r}")
    if not isprime(spec.p):
        raise RingSpecError(f"p={spec.p} is not prime")
    if spec.p == 2:
        raise RingSpecError("residue characteristic 2 is not supported (p must be >= 3)")
    if spec.l < 1 or spec.n < 1:
        raise RingSpecError("l and n must be >= 1")
    if spec.kind == "zpn" and spec.l != 1:
        raise RingSpecError("Z/p^n has residue degree l = 1")
    if spec.modulus:
        if len(spec.modulus) != spec.l + 1 or spec.modulus[-1] % spec.p != 1:
            raise RingSpecError("modulus must be monic of degree l")
        if spec.l > 1 and not is_irreducible_mod_p(spec.modulus, spec.p):
            raise RingSpecError(f"modulus {spec.modulus} is reducible mod {spec.p}")
    elif spec.l > 1:
        raise RingSpecError("modulus polynomial required when l > 1")


def ring_spec_for(q: int, n: int, kind: str | None = None) -> RingSpec:
    """Unramified ring with residue field F_q at level n (Z/p^n or GR(p^n, l) by default)."""
    fac = factorint(q)
    if len(fac) != 1:
        raise RingSpecError(f"q={q} is not a prime power")
    ((p, l),) = fac.items()
    if kind is None:
        kind = "zpn" if l == 1 else "galois"
    modulus = default_modulus(p, l) if l > 1 else ()
    return RingSpec(kind, p, l, n, modulus)


def _polymulmod(a: Sequence[int], b: Sequence[int], f: Sequence[int], m: int) -> list[int]:
    """a*b mod (f, m); f monic of degree len(a)."""
    l = len(f) - 1
    prod = [0] * (2 * l - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    for k in range(len(prod) - 1, l - 1, -1):
        c = prod[k] % m
        if c:
            for i in range(l):
                prod[k - l + i] -= c * f[i]
        prod[k] = 0
    return [c % m for c in prod[:l]]


class Ring:
    """A finite local ring with exact arithmetic on coordinate tuples."""

    def __init__(self, spec: RingSpec):
        validate(spec)
        self.spec = spec
        self.kind = spec.kind
        self.p, self.l, self.n = spec.p, spec.l, spec.n
        self.q = spec.q
        self.modulus = spec.modulus if spec.modulus else (0, 1)
        # additive exponent and coordinate length
        self.char = self.p if self.kind == "series" else self.p**self.n
        self.dim = 1 if self.kind == "zpn" else (self.l if self.kind == "galois" else self.l * self.n)
        self.size = self.q**self.n
        self.num_units = self.q**self.n - self.q ** (self.n - 1)
        self._struct = self._structure_tensor()
        self.zero = self.element((0,) * self.dim)
        self.one = self.element((1,) + (0,) * (self.dim - 1))

    def __repr__(self) -> str:
        if self.kind == "zpn":
            return f"Z/{self.p}^{self.n}"
        if self.kind == "galois":
            return f"GR({self.p}^{self.n},{self.l})"
        return f"F_{self.q}[t]/(t^{self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    # -- construction -------------------------------------------------------

    def _structure_tensor(self) -> list[list[list[int]]]:
        L, m = self.dim, self.char
        if self.kind == "zpn":
            return [[[1]]]
        if self.kind == "galois":
            table = []
            for i in range(L):
                row = []
                for j in range(L):
                    a = [0] * L
                    b = [0] * L
                    a[i] = b[j] = 1
                    row.append(_polymulmod(a, b, self.modulus, m))
                table.append(row)
            return table
        # series: index j*l + i <-> y^i t^j
        l, n = self.l, self.n
        table = []
        for k1 in range(L):
            j1, i1 = divmod(k1, l)
            row = []
            for k2 in range(L):
                j2, i2 = divmod(k2, l)
                out = [0] * L
                if j1 + j2 < n:
                    a = [0] * l
                    b = [0] * l
                    a[i1] = b[i2] = 1
                    c = _polymulmod(a, b, self.modulus, self.p)
                    out[(j1 + j2) * l : (j1 + j2 + 1) * l] = c
                row.append(out)
            table.append(row)
        return table

    def element(self, coords) -> "RingElement":
        if isinstance(coords, RingElement) and coords.owner.spec == self.spec:
            return coords
        if isinstance(coords, (int, np.integer)):
            return self.from_int(int(coords))
        coords = tuple(int(c) % self.char for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return RingElement(self, coords)

    def from_int(self, k: int) -> "RingElement":
        return RingElement(self, (k % self.char,) + (0,) * (self.dim - 1))

    def __call__(self, value) -> "RingElement":
        return self.element(value)

    def elements(self) -> Iterator["RingElement"]:
        for coords in itertools.product(range(self.char), repeat=self.dim):
            yield RingElement(self, coords)

    def units(self) -> list["RingElement"]:
        return [x for x in self.elements() if self.is_unit(x)]

    def additive_basis(self) -> list["RingElement"]:
        """Elements generating (R, +) as a group."""
        out = []
        for k in range(self.dim):
            c = [0] * self.dim
            c[k] = 1
            out.append(self.element(c))
        return out

    @property
    def uniformizer(self) -> "RingElement":
        if self.kind == "series":
            if self.n == 1:
                return self.zero
            c = [0] * self.dim
            c[self.l] = 1
            return self.element(c)
        return self.from_int(self.p)

    # -- arithmetic on raw coordinates ---------------------------------------

    def _add(self, a, b):
        m = self.char
        return tuple((x + y) % m for x, y in zip(a, b))

    def _sub(self, a, b):
        m = self.char
        return tuple((x - y) % m for x, y in zip(a, b))

    def _neg(self, a):
        m = self.char
        return tuple(-x % m for x in a)

    def _mul(self, a, b):
        m = self.char
        if self.dim == 1:
            return ((a[0] * b[0]) % m,)
        out = [0] * self.dim
        S = self._struct
        for i, ai in enumerate(a):
            if ai:
                Si = S[i]
                for j, bj in enumerate(b):
                    if bj:
                        c = ai * bj
                        for k, s in enumerate(Si[j]):
                            if s:
                                out[k] += c * s
        return tuple(x % m for x in out)

    # -- ring-theoretic queries ---------------------------------------------

    def is_unit(self, x: "RingElement") -> bool:
        c = x.coords
        if self.kind == "series":
            return any(v % self.p for v in c[: self.l])
        return any(v % self.p for v in c)

    def valuation(self, x: "RingElement") -> int:
        """Largest j <= n with x in p^j."""
        c = x.coords
        if self.kind == "series":
            for j in range(self.n):
                if any(c[j * self.l : (j + 1) * self.l]):
                    return j
            return self.n
        v = self.n
        for val in c:
            if val:
                k = 0
                while val % self.p == 0:
                    val //= self.p
                    k += 1
                v = min(v, k)
        return v

    def inverse(self, x: "RingElement") -> "RingElement":
        if not self.is_unit(x):
            raise ZeroDivisionError(f"{x} is not a unit in {self}")
        return x ** (self.num_units - 1)

    @property
    def base(self) -> "Ring":
        """Z/p^n for the char-0 kinds, F_p[t]/(t^n) for series."""
        if self.kind == "zpn":
            return self
        if self.kind == "galois":
            return make_ring(RingSpec("zpn", self.p, 1, self.n))
        if self.l == 1:
            return self
        return make_ring(RingSpec("series", self.p, 1, self.n))

    def regular_matrix(self, x: "RingElement") -> np.ndarray:
        """Matrix of multiplication by x on the coordinate basis, entries mod char."""
        L = self.dim
        M = np.zeros((L, L), dtype=np.int64)
        for k in range(L):
            e = [0] * L
            e[k] = 1
            M[:, k] = self._mul(x.coords, tuple(e))
        return M

    def _field_trace(self, c: Sequence[int]) -> int:
        """Tr_{F_q/F_p} of a y-polynomial with coefficients c."""
        l, p = self.l, self.p
        tr = 0
        for i in range(l):
            e = [0] * l
            e[i] = 1
            tr += _polymulmod(list(c), e, self.modulus, p)[i]
        return tr % p

    def trace(self, x: "RingElement") -> "RingElement":
        if self.kind == "zpn" or self.l == 1:
            return x
        if self.kind == "galois":
            return self.base.from_int(int(np.trace(self.regular_matrix(x))))
        l = self.l
        return self.base.element(
            [self._field_trace(x.coords[j * l : (j + 1) * l]) for j in range(self.n)]
        )


@dataclass(frozen=True, slots=True)
class RingElement:
    owner: Ring = field(repr=False, compare=False)
    coords: tuple[int, ...]

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.owner.from_int(other)
        return (
            isinstance(other, RingElement)
            and self.coords == other.coords
            and self.owner.spec == other.owner.spec
        )

    def __hash__(self) -> int:
        return hash(self.coords)

    def _lift(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.owner.spec != self.owner.spec:
                raise ValueError("elements belong to different rings")
            return other
        return self.owner.from_int(int(other))

    def __add__(self, other):
        return RingElement(self.owner, self.owner._add(self.coords, self._lift(other).coords))

    __radd__ = __add__

    def __sub__(self, other):
        return RingElement(self.owner, self.owner._sub(self.coords, self._lift(other).coords))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return RingElement(self.owner, self.owner._neg(self.coords))

    def __mul__(self, other):
        return RingElement(self.owner, self.owner._mul(self.coords, self._lift(other).coords))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.owner.inverse(self) ** (-k)
        result, base = self.owner.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coords)

    def __int__(self) -> int:
        if self.owner.dim != 1:
            raise TypeError("only Z/p^n elements convert to int")
        return self.coords[0]

    def __repr__(self) -> str:
        if self.owner.dim == 1:
            return str(self.coords[0])
        return "(" + ",".join(map(str, self.coords)) + ")"


@lru_cache(maxsize=None)
def make_ring(spec: RingSpec) -> Ring:
    return Ring(spec)


def is_unit(x: RingElement) -> bool:
    return x.owner.is_unit(x)


def trace(x: RingElement) -> RingElement:
    return x.owner.trace(x)


@dataclass(frozen=True)
class AdditiveCharacter:
    """psi_b(x) = e(k/order), with k = character_value(self, x)."""

    owner: Ring = field(repr=False)
    b: RingElement

    @property
    def order(self) -> int:
        return self.owner.char

    def __call__(self, x: RingElement) -> int:
        return character_value(self, x)

    def value(self, x: RingElement) -> complex:
        return np.exp(2j * np.pi * character_value(self, x) / self.order)


def character_value(chi: AdditiveCharacter, x: RingElement) -> int:
    """Exponent k mod chi.order of chi(x)."""
    R = chi.owner
    if x.owner.spec != R.spec:
        raise ValueError("character and element live in different rings")
    bx = chi.b * x
    if R.kind == "zpn":
        return bx.coords[0]
    if R.kind == "galois":
        return R.trace(bx).coords[0]
    # series: top t-coefficient, then Tr down to F_p
    top = bx.coords[(R.n - 1) * R.l :]
    return R._field_trace(top)


def enumerate_characters(ring: Ring) -> list[AdditiveCharacter]:
    return [AdditiveCharacter(ring, b) for b in ring.elements()]
