"""Adjoint Chevalley groups over finite local rings, their Heisenberg subgroups,
and lower bounds on minimal faithful dimension."""

from .bounds import d_of, h_f
from .localring import Ring, RingSpec, make_ring, ring_spec_for
from .rootsys import RootSystemId, build

__all__ = ["Ring", "RingSpec", "RootSystemId", "build", "d_of", "h_f", "make_ring", "ring_spec_for"]
