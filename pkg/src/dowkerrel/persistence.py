"""Power filtrations of Dowker complexes and their Z/2 barcodes.

For a total self-relation the complexes ``K_{R^1} ≤ K_{R^2} ≤ ...`` are nested
and stop changing at the index ``j`` of the eventual period, so the
filtration has exactly ``j`` levels (``j + 1`` with level 0) and every class
still alive at the last level lives forever. The L side is the same with
rows instead of columns and needs surjectivity instead of totality.

Bars are half-open ``[birth, death)``; ``death is None`` means infinity.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .dowker import dowker_K, dowker_L
from .errors import DowkerError, HypothesisError, UniverseMismatchError
from .relation import (
    EventualPeriod,
    Label,
    Relation,
    _require_self,
    eventual_period,
    is_surjective,
    is_total,
    iter_bits,
    power,
)
from .simplicial import (
    DEFAULT_DIM_CAP,
    BettiVector,
    Simplex,
    SimplicialComplex,
    _popcount,
    betti_numbers,
    contains,
    is_subcomplex,
)

SIDES = ("K", "L")


def _dowker(side: str, R: Relation) -> SimplicialComplex:
    if side == "K":
        return dowker_K(R)
    if side == "L":
        return dowker_L(R)
    raise ValueError(f"side must be 'K' or 'L', not {side!r}")


@dataclass(frozen=True)
class FilteredComplex:
    side: str
    start: int
    levels: tuple[SimplicialComplex, ...]
    eventual: EventualPeriod

    @property
    def stabilization_index(self) -> int:
        return self.eventual.index

    @property
    def powers(self) -> range:
        return range(self.start, self.start + len(self.levels))

    def level(self, power: int) -> SimplicialComplex:
        return self.levels[power - self.start]

    def births(self, dim_cap: int = DEFAULT_DIM_CAP) -> dict[Simplex, int]:
        """Least level containing each simplex of dimension ``<= dim_cap``."""
        born: dict[int, int] = {}
        for t, K in zip(self.powers, self.levels):
            for m in K.face_masks(dim_cap):
                born.setdefault(m, t)
        universe = self.levels[0].universe
        return {tuple(universe[i] for i in iter_bits(m)): t for m, t in born.items()}


def _inclusion_break(side: str, R: Relation, start: int, stop: int) -> int | None:
    prev = _dowker(side, power(R, start))
    for n in range(start, stop):
        nxt = _dowker(side, power(R, n + 1))
        if not is_subcomplex(prev, nxt):
            return n
        prev = nxt
    return None


def power_filtration(R: Relation, side: str = "K", include_zero: bool = False) -> FilteredComplex:
    """Levels ``K_{R^i}`` (or ``L_{R^i}``) for ``i = 1..j``, or ``0..j``.

    Raises :class:`HypothesisError` unless ``R`` is total (K side) or
    surjective (L side); the error names the first power where inclusion
    actually breaks, when there is one.
    """
    _require_self(R)
    if side not in SIDES:
        raise ValueError(f"side must be 'K' or 'L', not {side!r}")
    ev = eventual_period(R)
    start = 0 if include_zero else 1
    ok = is_total(R) if side == "K" else is_surjective(R)
    if not ok:
        hyp = "Dom R ≠ X: the K-side filtration needs a total relation" if side == "K" \
            else "Ima R ≠ X: the L-side filtration needs a surjective relation"
        n = _inclusion_break(side, R, start, ev.index + ev.period)
        if n is not None:
            hyp += f"; {side}_(R^{n}) is not contained in {side}_(R^{n + 1})"
        raise HypothesisError(hyp, n)
    levels = tuple(_dowker(side, power(R, i)) for i in range(start, ev.index + 1))
    return FilteredComplex(side, start, levels, ev)


class Bar(NamedTuple):
    dim: int
    birth: int
    death: int | None

    def alive_at(self, t: int) -> bool:
        return self.birth <= t and (self.death is None or t < self.death)

    def __str__(self) -> str:
        end = "∞" if self.death is None else str(self.death)
        return f"{self.dim}: [{self.birth}, {end})"


@dataclass(frozen=True)
class Barcode:
    bars: tuple[Bar, ...]

    def betti_at(self, t: int, dim_cap: int = DEFAULT_DIM_CAP) -> BettiVector:
        counts = [0] * (dim_cap + 1)
        for b in self.bars:
            if b.dim <= dim_cap and b.alive_at(t):
                counts[b.dim] += 1
        return tuple(counts)

    def in_dim(self, k: int) -> list[Bar]:
        return [b for b in self.bars if b.dim == k]

    def to_dict(self) -> dict:
        return {"bars": [{"dim": b.dim, "birth": b.birth, "death": b.death} for b in self.bars]}

    def to_text(self) -> str:
        return "\n".join(str(b) for b in self.bars)


def _bar_key(b: Bar):
    return (b.dim, b.birth, float("inf") if b.death is None else b.death)


def barcode(fc: FilteredComplex, dim_cap: int = DEFAULT_DIM_CAP) -> Barcode:
    """Persistence barcode by the standard column reduction over Z/2.

    Simplices are ordered by (birth level, dimension, vertex positions), which
    is a valid filtration order and makes the output reproducible.
    """
    born: dict[int, int] = {}
    for t, K in zip(fc.powers, fc.levels):
        for m in K.face_masks(dim_cap + 1):
            born.setdefault(m, t)
    order = sorted(born, key=lambda m: (born[m], _popcount(m), sorted(iter_bits(m))))
    pos = {m: i for i, m in enumerate(order)}

    pivot_of: dict[int, int] = {}  # lowest row -> reduced column
    paired: set[int] = set()
    bars: list[Bar] = []
    for j, m in enumerate(order):
        col = 0
        if _popcount(m) > 1:
            for b in iter_bits(m):
                col |= 1 << pos[m ^ (1 << b)]
        while col:
            low = col.bit_length() - 1
            if low not in pivot_of:
                break
            col ^= pivot_of[low]
        if col:
            low = col.bit_length() - 1
            pivot_of[low] = col
            paired.add(low)
            paired.add(j)
            birth, death = born[order[low]], born[m]
            if death > birth:
                bars.append(Bar(_popcount(order[low]) - 1, birth, death))
    for j, m in enumerate(order):
        d = _popcount(m) - 1
        if j not in paired and d <= dim_cap:
            bars.append(Bar(d, born[m], None))
    return Barcode(tuple(sorted(bars, key=_bar_key)))


def intersect_complexes(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Faces common to ``A`` and ``B``; its maximal simplices are among the
    pairwise intersections of maximal simplices."""
    if A.universe != B.universe:
        raise UniverseMismatchError("cannot intersect complexes on different universes")
    return SimplicialComplex.from_masks(A.universe, [a & b for a in A.masks for b in B.masks])


@dataclass(frozen=True)
class BifiltrationGrid:
    """Complexes ``K_{R^m} ∩ L_{R^n}`` and their Betti vectors for ``1 <= m, n <= j``."""

    index: int
    dim_cap: int
    cells: dict  # (m, n) -> SimplicialComplex
    betti: dict  # (m, n) -> BettiVector

    def is_monotone(self) -> bool:
        j = self.index
        for m in range(1, j + 1):
            for n in range(1, j + 1):
                here = self.cells[m, n]
                if m < j and not is_subcomplex(here, self.cells[m + 1, n]):
                    return False
                if n < j and not is_subcomplex(here, self.cells[m, n + 1]):
                    return False
        return True

    def to_csv(self) -> str:
        header = ["m", "n"] + [f"b{k}" for k in range(self.dim_cap + 1)]
        lines = [",".join(header)]
        for (m, n), bv in sorted(self.betti.items()):
            lines.append(",".join(str(v) for v in (m, n, *bv)))
        return "\n".join(lines) + "\n"


def bifiltration_grid(R: Relation, dim_cap: int = DEFAULT_DIM_CAP) -> BifiltrationGrid:
    _require_self(R)
    if not is_total(R):
        raise HypothesisError("Dom R ≠ X: the bi-filtration needs a total relation")
    if not is_surjective(R):
        raise HypothesisError("Ima R ≠ X: the bi-filtration needs a surjective relation")
    j = eventual_period(R).index
    powers = {i: power(R, i) for i in range(1, j + 1)}
    Ks = {i: dowker_K(P) for i, P in powers.items()}
    Ls = {i: dowker_L(P) for i, P in powers.items()}
    cells, betti = {}, {}
    for m in range(1, j + 1):
        for n in range(1, j + 1):
            C = intersect_complexes(Ks[m], Ls[n])
            cells[m, n] = C
            betti[m, n] = betti_numbers(C, dim_cap)
    return BifiltrationGrid(j, dim_cap, cells, betti)


def walk_witness(R: Relation, m: int, n: int, simplex: Sequence[Label]):
    """Common ``n``-step predecessor and ``m``-step successor of a simplex.

    Returns ``(x_alpha, x_omega)`` with ``x_alpha R^n v`` and ``v R^m x_omega``
    for every vertex ``v`` of ``simplex`` (first such labels in vertex order),
    or ``None`` if the simplex is not in ``K_{R^m} ∩ L_{R^n}``.
    """
    _require_self(R)
    if m < 1 or n < 1:
        raise DowkerError("walk lengths must be positive")
    verts = [R.source_index(v) for v in simplex]
    if not verts:
        raise DowkerError("simplices are non-empty")
    succ = power(R, m).rows
    pred = power(R, n).columns()
    common_succ = common_pred = (1 << len(R.source_labels)) - 1
    for v in verts:
        common_succ &= succ[v]
        common_pred &= pred[v]
    if not common_succ or not common_pred:
        return None
    alpha = (common_pred & -common_pred).bit_length() - 1
    omega = (common_succ & -common_succ).bit_length() - 1
    return R.source_labels[alpha], R.source_labels[omega]


def in_cell(grid: BifiltrationGrid, m: int, n: int, simplex: Sequence[Label]) -> bool:
    return contains(grid.cells[m, n], simplex)

