from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chevheis import bounds
from chevheis.localring import make_ring, ring_spec_for
from chevheis.rootsys import build
from chevheis.svnrep import lower_bound_certificate

ROWS = ["A1", "A2", "A3", "B3", "B4", "C2", "C3", "D4", "D5", "G2", "F4", "E6", "E7", "E8"]
GRID = [(q, n) for q in (3, 5, 7, 9) for n in (1, 2, 3)]


def printed_formula(name, q, n):
    """Each row of the bound table written out literally."""
    fam, m = name[0], int(name[1:])
    u = q**n - q ** (n - 1)
    if fam == "A":
        return Fraction(u, 2) if m == 1 else u * q ** ((m - 1) * n)
    if fam == "B":
        return u * q ** ((2 * m - 3) * n)
    if fam == "C":
        return Fraction(u, 2) * q ** ((m - 1) * n)
    if fam == "D":
        return u * q ** ((2 * m - 4) * n)
    if fam == "G":
        return u * q ** (2 * n)
    if fam == "F":
        return u * q ** (7 * n)
    return u * q ** ({6: 10, 7: 16, 8: 28}[m] * n)


def allowed(name, q):
    return not (name == "G2" and q in (3, 9))


@pytest.mark.parametrize("name", ROWS)
def test_grid_matches_printed_formula(name):
    for q, n in GRID:
        if allowed(name, q):
            assert bounds.h_f(name, q, n) == printed_formula(name, q, n)


@pytest.mark.parametrize("name", ROWS)
def test_grid_matches_certificate(name):
    for q, n in GRID:
        if allowed(name, q) and q**n <= 729:
            cert = lower_bound_certificate(name, make_ring(ring_spec_for(q, n)))
            assert cert.bound == bounds.h_f(name, q, n)


def test_examples():
    assert bounds.h_f("A1", 7, 1) == 3
    assert bounds.h_f("E8", 3, 1) == 2 * 3**28
    assert bounds.h_f("D4", 3, 2) == 6 * 3**8
    assert bounds.d_of("F4") == 7
    assert bounds.d_of("B3") == 3
    assert bounds.d_of("E7") == 16


@pytest.mark.parametrize("name", ROWS)
def test_d_table_matches_sigma(name):
    assert bounds.d_of(name) == build(name).d


@pytest.mark.parametrize("args", [("B2", 3, 1), ("A2", 2, 1), ("A2", 4, 1), ("G2", 3, 1), ("G2", 9, 2), ("A2", 6, 1), ("A2", 3, 0)])
def test_rejected_queries(args):
    with pytest.raises(bounds.BoundQueryError):
        bounds.h_f(*args)


def test_g2_message():
    with pytest.raises(bounds.BoundQueryError, match="G2 requires p ≥ 5"):
        bounds.h_f("G2", 3, 1)


@given(st.sampled_from(ROWS), st.sampled_from([3, 5, 7, 9, 11, 25, 27]), st.integers(2, 6))
def test_growth(name, q, n):
    if allowed(name, q) or q % 5 == 0 or q == 7 or q == 11:
        if name == "G2" and q % 3 == 0:
            return
        d = bounds.d_of(name)
        assert bounds.h_f(name, q, n) == bounds.h_f(name, q, n - 1) * q ** (d + 1)


@given(st.sampled_from(ROWS), st.sampled_from([5, 7, 11, 25]), st.integers(1, 5))
def test_exponent_shape(name, q, n):
    d = bounds.d_of(name)
    C = Fraction(1, 2) if bounds.half_factor(name) else 1
    assert bounds.h_f(name, q, n) == C * q ** (n * (d + 1)) * (1 - Fraction(1, q))


def test_render():
    rows = [bounds.bound_row("A1", 7, 1), bounds.bound_row("C2", 3, 2)]
    text = bounds.render_table(rows)
    assert "C2" in text and "27" in text
    assert '"bound": 27' in bounds.render_table(rows, as_json=True)
