"""The two Dowker complexes of a relation.

``K_R`` lives on the sources: a set of sources spans a simplex when some
target is related to all of them, so the maximal simplices are among the
column supports of the matrix. ``L_R`` is the same construction on the
rows, i.e. ``K`` of the inverse relation. Empty rows and columns contribute
nothing, so sources outside ``Dom R`` are not vertices of ``K_R``.
"""
from __future__ import annotations

from typing import NamedTuple

from .relation import Relation, inverse
from .simplicial import (
    DEFAULT_DIM_CAP,
    BettiVector,
    Simplex,
    SimplicialComplex,
    betti_numbers,
)


def dowker_K(R: Relation) -> SimplicialComplex:
    return SimplicialComplex.from_masks(R.source_labels, R.columns())


def dowker_L(R: Relation) -> SimplicialComplex:
    return dowker_K(inverse(R))


def witnesses(R: Relation) -> dict[Simplex, tuple]:
    """Map each maximal simplex of ``K_R`` to the targets whose column is
    exactly that simplex."""
    K = dowker_K(R)
    out: dict[Simplex, tuple] = {}
    cols = R.columns()
    for m, s in zip(K.masks, K.maximal):
        out[s] = tuple(y for y, c in zip(R.target_labels, cols) if c == m)
    return out


class DualityReport(NamedTuple):
    holds: bool
    betti_K: BettiVector
    betti_L: BettiVector


def duality_check(R: Relation, dim_cap: int = DEFAULT_DIM_CAP) -> DualityReport:
    """Compare the Z/2 Betti numbers of ``K_R`` and ``L_R`` up to ``dim_cap``."""
    bk = betti_numbers(dowker_K(R), dim_cap)
    bl = betti_numbers(dowker_L(R), dim_cap)
    return DualityReport(bk == bl, bk, bl)
