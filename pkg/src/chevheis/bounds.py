"""Closed-form lower bounds h_f(Phi, q, n) and the table of d."""

from __future__ import annotations

import json

from sympy import factorint

from .rootsys import RootSystemError, RootSystemId

HALF_FACTOR_FAMILIES = ("C",)


class BoundQueryError(ValueError):
    pass


def d_of(system: RootSystemId | str) -> int:
    s = RootSystemId.parse(system)
    m = s.rank
    return {
        "A": m - 1,
        "B": 2 * m - 3,
        "C": m - 1,
        "D": 2 * m - 4,
        "G": 2,
        "F": 7,
        "E": {6: 10, 7: 16, 8: 28}.get(m),
    }[s.family]


def residue_prime(q: int) -> int:
    fac = factorint(q)
    if q < 2 or len(fac) != 1:
        raise BoundQueryError(f"q={q} is not a prime power")
    return next(iter(fac))


def validate_query(system: RootSystemId | str, q: int, n: int) -> RootSystemId:
    try:
        s = RootSystemId.parse(system)
    except RootSystemError as exc:
        raise BoundQueryError(str(exc)) from exc
    p = residue_prime(q)
    if n < 1:
        raise BoundQueryError("n must be >= 1")
    if p < 3:
        raise BoundQueryError(f"{s} requires p ≥ 3")
    if s.family == "G" and p < 5:
        raise BoundQueryError("G2 requires p ≥ 5")
    return s


def half_factor(system: RootSystemId | str) -> bool:
    s = RootSystemId.parse(system)
    return s.family in HALF_FACTOR_FAMILIES or (s.family == "A" and s.rank == 1)


def h_f(system: RootSystemId | str, q: int, n: int) -> int:
    s = validate_query(system, q, n)
    units = q**n - q ** (n - 1)
    if half_factor(s):
        units //= 2
    return units * q ** (d_of(s) * n)


def bound_row(system: RootSystemId | str, q: int, n: int) -> dict:
    s = validate_query(system, q, n)
    units = q**n - q ** (n - 1)
    return {
        "phi": str(s),
        "q": q,
        "n": n,
        "d": d_of(s),
        "irrep_dim": q ** (d_of(s) * n),
        "orbit_count": units // 2 if half_factor(s) else units,
        "factor": "1/2" if half_factor(s) else "1",
        "bound": h_f(s, q, n),
    }


def render_table(rows: list[dict], as_json: bool = False) -> str:
    if as_json:
        return json.dumps(rows, indent=2)
    lines = [f"{'phi':<4} {'q':>3} {'n':>2} {'d':>3} {'orbits':>8} {'irrep_dim':>16}  bound"]
    for r in rows:
        lines.append(
            f"{r['phi']:<4} {r['q']:>3} {r['n']:>2} {r['d']:>3} {r['orbit_count']:>8} "
            f"{r['irrep_dim']:>16}  {r['bound']}"
        )
    return "\n".join(lines)
