"""Irreducible root systems in their standard Euclidean realizations."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

FAMILIES = "ABCDEFG"


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemId:
    family: str
    rank: int

    def __post_init__(self):
        f, m = self.family, self.rank
        ok = {
            "A": m >= 1,
            "B": m >= 3,
            "C": m >= 2,
            "D": m >= 4,
            "E": m in (6, 7, 8),
            "F": m == 4,
            "G": m == 2,
        }.get(f)
        if not ok:
            raise RootSystemError(f"unsupported root system {f}{m}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str | "RootSystemId") -> "RootSystemId":
        if isinstance(text, RootSystemId):
            return text
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise RootSystemError(f"cannot parse root system {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


def _e(dim: int, *pairs) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def simple_roots_euclidean(family: str, m: int) -> list[tuple[Fraction, ...]]:
    """Bourbaki's simple roots; coordinates index e_1 as position 0."""
    if family == "A":
        return [_e(m + 1, (i, 1), (i + 1, -1)) for i in range(m)]
    if family == "B":
        return [_e(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [_e(m, (m - 1, 1))]
    if family == "C":
        return [_e(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [_e(m, (m - 1, 2))]
    if family == "D":
        return [_e(m, (i, 1), (i + 1, -1)) for i in range(m - 1)] + [_e(m, (m - 2, 1), (m - 1, 1))]
    if family == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if family == "F":
        h = Fraction(1, 2)
        return [
            _e(4, (1, 1), (2, -1)),
            _e(4, (2, 1), (3, -1)),
            _e(4, (3, 1)),
            _e(4, (0, h), (1, -h), (2, -h), (3, -h)),
        ]
    if family == "E":
        h = Fraction(1, 2)
        e8 = [
            _e(8, (0, h), (7, h), *[(i, -h) for i in range(1, 7)]),
            _e(8, (0, 1), (1, 1)),
        ] + [_e(8, (i, -1), (i + 1, 1)) for i in range(6)]
        return e8[:m]
    raise RootSystemError(family)  # pragma: no cover


def order_key(v: tuple[int, ...]) -> tuple:
    """Height first, then simple coordinates with a_1 most significant (a_1 < a_2 < ...)."""
    return (sum(v), tuple(-c for c in v))


def _dot(u, v) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True, eq=False)
class Root:
    """A root; ``simple`` holds its coordinates on the base, ``coords`` the Euclidean ones."""

    simple: tuple[int, ...]
    coords: tuple[Fraction, ...] = field(repr=False)
    height: int = field(repr=False)
    order_index: int = field(repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, Root) and self.simple == other.simple

    def __hash__(self) -> int:
        return hash(self.simple)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.simple):
            if c:
                coef = "" if abs(c) == 1 else str(abs(c))
                terms.append(("-" if c < 0 else "+") + f"{coef}a{i + 1}")
        s = "".join(terms)
        return "Root(" + (s[1:] if s.startswith("+") else s) + ")"


@dataclass(frozen=True)
class SigmaData:
    highest: Root
    pairs: tuple[tuple[Root, Root], ...]

    @property
    def d(self) -> int:
        return len(self.pairs)


class RootSystem:
    def __init__(self, ident: RootSystemId):
        self.id = ident
        self.rank = ident.rank
        base = simple_roots_euclidean(ident.family, ident.rank)
        self._base_euclid = base
        m = self.rank
        self.cartan = [
            [int(2 * _dot(base[i], base[j]) / _dot(base[j], base[j])) for j in range(m)]
            for i in range(m)
        ]
        pos = _positive_roots(self.cartan)
        allvecs = pos + [tuple(-c for c in v) for v in pos]
        allvecs.sort(key=order_key)
        dim = len(base[0])
        roots = []
        for k, v in enumerate(allvecs):
            eu = tuple(
                sum((c * base[i][a] for i, c in enumerate(v)), Fraction(0)) for a in range(dim)
            )
            roots.append(Root(v, eu, sum(v), k))
        self.roots: list[Root] = roots
        self._by_simple = {r.simple: r for r in roots}
        self.positive = [r for r in roots if r.height > 0]
        self.negative = [r for r in roots if r.height < 0]
        self.simple = [self._by_simple[tuple(int(j == i) for j in range(m))] for i in range(m)]
        # twice the Gram matrix is integral for every supported realization
        self._gram2 = [[int(2 * _dot(a, b)) for b in base] for a in base]

    def __repr__(self) -> str:
        return f"RootSystem({self.id})"

    def __len__(self) -> int:
        return len(self.roots)

    def root(self, simple) -> Root | None:
        return self._by_simple.get(tuple(simple))

    def add(self, a: Root, b: Root) -> Root | None:
        return self._by_simple.get(tuple(x + y for x, y in zip(a.simple, b.simple)))

    def combo(self, i: int, a: Root, j: int, b: Root) -> Root | None:
        """The root i*a + j*b, or None."""
        return self._by_simple.get(tuple(i * x + j * y for x, y in zip(a.simple, b.simple)))

    def neg(self, a: Root) -> Root:
        return self._by_simple[tuple(-x for x in a.simple)]

    def sub(self, a: Root, b: Root) -> Root | None:
        return self._by_simple.get(tuple(x - y for x, y in zip(a.simple, b.simple)))

    def _inner2(self, a: Root, b: Root) -> int:
        g = self._gram2
        return sum(
            x * y * g[i][j]
            for i, x in enumerate(a.simple)
            if x
            for j, y in enumerate(b.simple)
            if y
        )

    def inner(self, a: Root, b: Root) -> Fraction:
        return Fraction(self._inner2(a, b), 2)

    def norm2(self, a: Root) -> Fraction:
        return self.inner(a, a)

    def pairing(self, a: Root, b: Root) -> int:
        """<a, b> = 2(a, b)/(b, b)."""
        val, rem = divmod(2 * self._inner2(a, b), self._inner2(b, b))
        assert rem == 0
        return val

    @cached_property
    def highest_root(self) -> Root:
        top = max(r.height for r in self.positive)
        (hr,) = [r for r in self.positive if r.height == top]
        return hr

    @cached_property
    def sigma(self) -> SigmaData:
        hr = self.highest_root
        sig = [a for a in self.positive if a != hr and self.pairing(a, hr) == 1]
        seen, pairs = set(), []
        for a in sig:  # already in increasing order
            if a in seen:
                continue
            partner = self.sub(hr, a)
            seen.update((a, partner))
            pairs.append((a, partner))
        return SigmaData(hr, tuple(pairs))

    @property
    def d(self) -> int:
        return self.sigma.d

    def sigma_plus(self) -> list[Root]:
        return [r for pair in self.sigma.pairs for r in pair]

    def f_phi(self) -> tuple[int, Root]:
        hr = self.highest_root
        vals = [(self.pairing(hr, a), a) for a in self.roots]
        best = min(v for v, _ in vals if v > 0)
        cands = [a for v, a in vals if v == best]
        longest = max(self.norm2(a) for a in cands)
        witness = next(a for a in cands if a.height > 0 and self.norm2(a) == longest)
        return best, witness

    def to_json(self) -> str:
        return json.dumps(
            {
                "system": str(self.id),
                "roots": [list(r.simple) for r in self.roots],
                "heights": [r.height for r in self.roots],
                "pairing": [[self.pairing(a, b) for b in self.roots] for a in self.roots],
            }
        )


def _positive_roots(cartan: list[list[int]]) -> list[tuple[int, ...]]:
    """Positive roots in simple coordinates via root strings."""
    m = len(cartan)
    simples = [tuple(1 if j == i else 0 for j in range(m)) for i in range(m)]
    found = set(simples)
    layer = list(simples)
    out = list(simples)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(m):
                down = 0
                while True:
                    cand = tuple(c - (down + 1) * (k == i) for k, c in enumerate(beta))
                    if cand in found:
                        down += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[j][i] for j in range(m))
                if down - pair > 0:
                    up = tuple(c + (k == i) for k, c in enumerate(beta))
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        out.extend(nxt)
        layer = nxt
    return out


def build(ident: RootSystemId | str) -> RootSystem:
    return _build(RootSystemId.parse(ident))


@lru_cache(maxsize=None)
def _build(ident: RootSystemId) -> RootSystem:
    return RootSystem(ident)


def pairing(rs: RootSystem, a: Root, b: Root) -> int:
    return rs.pairing(a, b)


def highest_root(rs: RootSystem) -> Root:
    return rs.highest_root


def sigma_plus(rs: RootSystem) -> SigmaData:
    return rs.sigma


def f_phi(rs: RootSystem) -> tuple[int, Root]:
    return rs.f_phi()
