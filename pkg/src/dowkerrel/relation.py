"""Finite relations stored as labeled boolean matrices.

Each row of a :class:`Relation` is a Python ``int`` used as a bit set:
bit ``k`` of ``rows[i]`` is set iff ``source_labels[i]`` relates to
``target_labels[k]``. Composition is then an OR-accumulation of rows.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Iterator, NamedTuple, Sequence

from .errors import LabelMismatchError, NotConvergentError, NotSelfRelationError, RelationError

Label = Hashable


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class Relation:
    """A relation ``R ⊂ X × Y`` between two finite labeled sets.

    Equality compares labels (with their order) and the incidence bits.
    Build instances with :func:`from_matrix` or :func:`from_pairs` rather than
    by hand unless you already have bit rows.
    """

    source_labels: tuple[Label, ...]
    target_labels: tuple[Label, ...]
    rows: tuple[int, ...]
    _src_index: dict = field(init=False, repr=False, compare=False, hash=False)
    _tgt_index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        src = tuple(self.source_labels)
        tgt = tuple(self.target_labels)
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "source_labels", src)
        object.__setattr__(self, "target_labels", tgt)
        object.__setattr__(self, "rows", rows)
        if len(set(src)) != len(src):
            raise RelationError(f"duplicate source labels in {list(src)}")
        if len(set(tgt)) != len(tgt):
            raise RelationError(f"duplicate target labels in {list(tgt)}")
        if len(rows) != len(src):
            raise RelationError(f"{len(rows)} rows for {len(src)} source labels")
        limit = 1 << len(tgt)
        for r in rows:
            if r < 0 or r >= limit:
                raise RelationError(f"row bits {r:#b} exceed {len(tgt)} target columns")
        object.__setattr__(self, "_src_index", {x: i for i, x in enumerate(src)})
        object.__setattr__(self, "_tgt_index", {y: k for k, y in enumerate(tgt)})

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.source_labels), len(self.target_labels)

    @property
    def is_self_relation(self) -> bool:
        return self.source_labels == self.target_labels

    def source_index(self, x: Label) -> int:
        try:
            return self._src_index[x]
        except KeyError:
            raise RelationError(f"unknown source label {x!r}") from None

    def target_index(self, y: Label) -> int:
        try:
            return self._tgt_index[y]
        except KeyError:
            raise RelationError(f"unknown target label {y!r}") from None

    def related(self, x: Label, y: Label) -> bool:
        return bool(self.rows[self.source_index(x)] >> self.target_index(y) & 1)

    def __contains__(self, pair) -> bool:
        x, y = pair
        if x not in self._src_index or y not in self._tgt_index:
            return False
        return self.related(x, y)

    def column(self, k: int) -> int:
        """Bit set over source indices of the ``k``-th column."""
        return mask_of(i for i, r in enumerate(self.rows) if r >> k & 1)

    def columns(self) -> tuple[int, ...]:
        return tuple(self.column(k) for k in range(len(self.target_labels)))

    def image_of(self, x: Label) -> frozenset:
        """``R(x)``: the targets related to ``x``."""
        row = self.rows[self.source_index(x)]
        return frozenset(self.target_labels[k] for k in iter_bits(row))

    def preimage_of(self, y: Label) -> frozenset:
        col = self.column(self.target_index(y))
        return frozenset(self.source_labels[i] for i in iter_bits(col))

    def pairs(self) -> list[tuple[Label, Label]]:
        return [
            (self.source_labels[i], self.target_labels[k])
            for i, r in enumerate(self.rows)
            for k in iter_bits(r)
        ]

    def matrix(self) -> list[list[int]]:
        n = len(self.target_labels)
        return [[r >> k & 1 for k in range(n)] for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.matrix())


class EventualPeriod(NamedTuple):
    index: int
    period: int


def _default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def from_matrix(
    rows: Sequence[Sequence],
    source_labels: Sequence[Label] | None = None,
    target_labels: Sequence[Label] | None = None,
) -> Relation:
    """Build a relation from a 0/1 (or boolean) matrix.

    Omitted labels default to ``x1..xm`` and ``y1..yn``, except that a square
    matrix with no target labels reuses the source labels, so that square
    input is read as a self-relation.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if rows else (len(target_labels) if target_labels is not None else 0)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise RelationError(f"ragged matrix: row {i + 1} has {len(r)} entries, expected {n}")
    if source_labels is None:
        source_labels = _default_labels("x", m)
    if target_labels is None:
        target_labels = tuple(source_labels) if m == n else _default_labels("y", n)
    if len(source_labels) != m:
        raise RelationError(f"{len(source_labels)} source labels for {m} rows")
    if len(target_labels) != n:
        raise RelationError(f"{len(target_labels)} target labels for {n} columns")
    bits = tuple(mask_of(k for k, v in enumerate(r) if v) for r in rows)
    return Relation(tuple(source_labels), tuple(target_labels), bits)


def from_pairs(
    pairs: Iterable[tuple[Label, Label]],
    source_labels: Sequence[Label],
    target_labels: Sequence[Label] | None = None,
) -> Relation:
    """Build a relation from its set of related pairs.

    ``target_labels`` defaults to ``source_labels`` (a self-relation).
    """
    if target_labels is None:
        target_labels = source_labels
    src = {x: i for i, x in enumerate(source_labels)}
    tgt = {y: k for k, y in enumerate(target_labels)}
    rows = [0] * len(src)
    for x, y in pairs:
        if x not in src:
            raise RelationError(f"pair ({x!r}, {y!r}): unknown source label")
        if y not in tgt:
            raise RelationError(f"pair ({x!r}, {y!r}): unknown target label")
        rows[src[x]] |= 1 << tgt[y]
    return Relation(tuple(source_labels), tuple(target_labels), tuple(rows))


def identity(labels: Sequence[Label]) -> Relation:
    labels = tuple(labels)
    return Relation(labels, labels, tuple(1 << i for i in range(len(labels))))


def empty(source_labels: Sequence[Label], target_labels: Sequence[Label] | None = None) -> Relation:
    if target_labels is None:
        target_labels = source_labels
    return Relation(tuple(source_labels), tuple(target_labels), (0,) * len(source_labels))


def full(source_labels: Sequence[Label], target_labels: Sequence[Label] | None = None) -> Relation:
    """The all-ones relation ``J``."""
    if target_labels is None:
        target_labels = source_labels
    ones = (1 << len(target_labels)) - 1
    return Relation(tuple(source_labels), tuple(target_labels), (ones,) * len(source_labels))


def compose(outer: Relation, inner: Relation) -> Relation:
    """``outer ∘ inner``: apply ``inner`` first, then ``outer``.

    ``(x, z)`` is in the result iff ``x inner y`` and ``y outer z`` for some ``y``.
    """
    if inner.target_labels != outer.source_labels:
        raise LabelMismatchError(
            f"cannot compose: inner targets {list(inner.target_labels)} "
            f"!= outer sources {list(outer.source_labels)}"
        )
    out_rows = outer.rows
    rows = []
    for r in inner.rows:
        acc = 0
        for k in iter_bits(r):
            acc |= out_rows[k]
        rows.append(acc)
    return Relation(inner.source_labels, outer.target_labels, tuple(rows))


def inverse(R: Relation) -> Relation:
    return Relation(R.target_labels, R.source_labels, R.columns())


def _require_self(R: Relation) -> None:
    if not R.is_self_relation:
        raise NotSelfRelationError(
            f"expected a self-relation, got {len(R.source_labels)}×{len(R.target_labels)} "
            "with different source and target labels"
        )


def power(R: Relation, n: int) -> Relation:
    """``R^n`` for a self-relation; ``R^0`` is the identity and negative
    powers iterate the inverse relation."""
    _require_self(R)
    if n == 0:
        return identity(R.source_labels)
    step = R if n > 0 else inverse(R)
    result = step
    for _ in range(abs(n) - 1):
        result = compose(step, result)
    return result


def domain(R: Relation) -> frozenset:
    return frozenset(x for x, r in zip(R.source_labels, R.rows) if r)


def image(R: Relation) -> frozenset:
    seen = 0
    for r in R.rows:
        seen |= r
    return frozenset(R.target_labels[k] for k in iter_bits(seen))


def is_total(R: Relation) -> bool:
    """``Dom R = X``: every source relates to something."""
    return all(R.rows)


def is_surjective(R: Relation) -> bool:
    """``Ima R = Y``: every target is hit."""
    seen = 0
    for r in R.rows:
        seen |= r
    return seen == (1 << len(R.target_labels)) - 1


def eventual_period(R: Relation) -> EventualPeriod:
    """Least index ``j >= 1`` and least period ``p >= 1`` with ``R^j = R^(j+p)``.

    Every power is remembered with the exponent where it first appeared; the
    first repeated matrix fixes both numbers at once.
    """
    _require_self(R)
    first_seen: dict[tuple[int, ...], int] = {}
    current = R
    k = 1
    while current.rows not in first_seen:
        first_seen[current.rows] = k
        current = compose(R, current)
        k += 1
    j = first_seen[current.rows]
    return EventualPeriod(j, k - j)


def r_infinity(R: Relation) -> Relation:
    """The limit power ``R^j``; only defined when the period is 1."""
    j, p = eventual_period(R)
    if p != 1:
        raise NotConvergentError(f"relation does not converge: eventual period ({j}, {p})")
    return power(R, j)
