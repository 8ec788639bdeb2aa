"""Abstract simplicial complexes kept as antichains of maximal simplices.

Faces are never stored; they are enumerated from the maximal simplices on
demand, up to a dimension cap. Internally each simplex is a bit set over the
positions of the complex's vertex universe, and a public simplex is the tuple
of its labels in universe order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import UniverseMismatchError
from .relation import Label, iter_bits

Simplex = tuple  # labels in universe order
BettiVector = tuple  # of ints, indexed by dimension

DEFAULT_DIM_CAP = 3


def _popcount(m: int) -> int:
    return bin(m).count("1")


def _antichain(masks: Iterable[int]) -> tuple[int, ...]:
    # larger simplices first so each candidate is tested only against keepers
    cands = sorted(set(m for m in masks if m), key=lambda m: (-_popcount(m), m))
    kept: list[int] = []
    for m in cands:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lambda m: sorted(iter_bits(m))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``universe`` generated by the simplices in ``maximal``.

    The constructor prunes dominated and duplicate simplices and sorts the
    rest, so two complexes with the same faces compare equal.
    """

    universe: tuple[Label, ...]
    maximal: tuple[Simplex, ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        universe = tuple(self.universe)
        if len(set(universe)) != len(universe):
            raise ValueError(f"duplicate labels in universe {list(universe)}")
        index = {v: i for i, v in enumerate(universe)}
        raw = []
        for s in self.maximal:
            s = tuple(s)
            if not s:
                continue
            m = 0
            for v in s:
                if v not in index:
                    raise UniverseMismatchError(f"vertex {v!r} is not in the universe")
                m |= 1 << index[v]
            raw.append(m)
        masks = _antichain(raw)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "maximal", tuple(self.simplex(m) for m in masks))

    @classmethod
    def from_masks(cls, universe: Sequence[Label], masks: Iterable[int]) -> SimplicialComplex:
        universe = tuple(universe)
        return cls(universe, [tuple(universe[i] for i in iter_bits(m)) for m in masks])

    def simplex(self, mask: int) -> Simplex:
        return tuple(self.universe[i] for i in iter_bits(mask))

    def mask(self, simplex: Iterable[Label]) -> int:
        m = 0
        for v in simplex:
            try:
                m |= 1 << self._index[v]
            except KeyError:
                raise UniverseMismatchError(f"vertex {v!r} is not in the universe") from None
        return m

    @property
    def is_empty(self) -> bool:
        return not self.masks

    @property
    def dimension(self) -> int:
        """-1 for the empty complex."""
        return max((_popcount(m) for m in self.masks), default=0) - 1

    @property
    def vertices(self) -> tuple[Label, ...]:
        seen = 0
        for m in self.masks:
            seen |= m
        return self.simplex(seen)

    def face_masks(self, dim_cap: int) -> set[int]:
        faces: set[int] = set()
        for m in self.masks:
            bits = list(iter_bits(m))
            for size in range(1, min(len(bits), dim_cap + 1) + 1):
                for combo in combinations(bits, size):
                    faces.add(sum(1 << b for b in combo))
        return faces

    def __contains__(self, simplex) -> bool:
        return contains(self, simplex)

    def to_dict(self) -> dict:
        return {"universe": list(self.universe), "maximal": [list(s) for s in self.maximal]}

    @classmethod
    def from_dict(cls, data: dict) -> SimplicialComplex:
        return cls(tuple(data["universe"]), [tuple(s) for s in data["maximal"]])


def from_maximal(candidates: Iterable[Iterable[Label]], universe: Sequence[Label]) -> SimplicialComplex:
    return SimplicialComplex(tuple(universe), [tuple(c) for c in candidates])


def empty_complex(universe: Sequence[Label]) -> SimplicialComplex:
    return SimplicialComplex(tuple(universe), ())


def all_faces(K: SimplicialComplex, dim_cap: int = DEFAULT_DIM_CAP) -> set[Simplex]:
    """Every face of ``K`` of dimension at most ``dim_cap``."""
    if dim_cap < 0:
        raise ValueError("dim_cap must be non-negative")
    return {K.simplex(m) for m in K.face_masks(dim_cap)}


def contains(K: SimplicialComplex, simplex: Iterable[Label]) -> bool:
    m = K.mask(simplex)
    if not m:
        raise ValueError("simplices are non-empty")
    return any(m & k == m for k in K.masks)


def _same_universe(A: SimplicialComplex, B: SimplicialComplex) -> None:
    if A.universe != B.universe:
        raise UniverseMismatchError(f"universes differ: {list(A.universe)} vs {list(B.universe)}")


def is_subcomplex(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    """``A ≤ B``: every face of ``A`` is a face of ``B``."""
    _same_universe(A, B)
    return all(any(a & b == a for b in B.masks) for a in A.masks)


def equals(A: SimplicialComplex, B: SimplicialComplex) -> bool:
    _same_universe(A, B)
    return A.masks == B.masks


def edge_connected_components(K: SimplicialComplex) -> tuple[frozenset, ...]:
    """Partition of the vertices of ``K`` into edge-connected blocks.

    Two vertices share a block iff a chain of edges with overlapping closures
    joins them; vertices lying in no edge form singleton blocks.
    """
    parent = list(range(len(K.universe)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    present = 0
    for m in K.masks:
        present |= m
        bits = list(iter_bits(m))
        for b in bits[1:]:
            ra, rb = find(bits[0]), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list] = {}
    for i in iter_bits(present):
        groups.setdefault(find(i), []).append(K.universe[i])
    return tuple(frozenset(g) for _, g in sorted(groups.items()))


def gf2_rank(columns: Iterable[int]) -> int:
    """Rank over the two-element field of vectors packed as int bit sets."""
    pivots: dict[int, int] = {}
    rank = 0
    for c in columns:
        while c:
            top = c.bit_length() - 1
            if top not in pivots:
                pivots[top] = c
                rank += 1
                break
            c ^= pivots[top]
    return rank


def _faces_by_dim(K: SimplicialComplex, max_dim: int) -> list[list[int]]:
    by_dim: list[list[int]] = [[] for _ in range(max_dim + 1)]
    for m in K.face_masks(max_dim):
        by_dim[_popcount(m) - 1].append(m)
    for faces in by_dim:
        faces.sort()
    return by_dim


def _boundary_columns(faces: list[int], lower: list[int]) -> list[int]:
    row = {m: i for i, m in enumerate(lower)}
    cols = []
    for m in faces:
        c = 0
        for b in iter_bits(m):
            c |= 1 << row[m ^ (1 << b)]
        cols.append(c)
    return cols


def betti_numbers(K: SimplicialComplex, dim_cap: int = DEFAULT_DIM_CAP) -> BettiVector:
    """Betti numbers over Z/2 in dimensions ``0..dim_cap``.

    Faces up to ``dim_cap + 1`` are enumerated so the top requested degree
    sees its full boundary image.
    """
    if dim_cap < 0:
        raise ValueError("dim_cap must be non-negative")
    by_dim = _faces_by_dim(K, dim_cap + 1)
    ranks = [0] * (dim_cap + 3)
    for k in range(1, dim_cap + 2):
        if by_dim[k]:
            ranks[k] = gf2_rank(_boundary_columns(by_dim[k], by_dim[k - 1]))
    return tuple(len(by_dim[k]) - ranks[k] - ranks[k + 1] for k in range(dim_cap + 1))


def euler_characteristic(K: SimplicialComplex) -> int:
    """Alternating count of all faces, with no dimension cap."""
    return sum(-1 if _popcount(m) % 2 == 0 else 1 for m in K.face_masks(max(K.dimension, 0)))
