"""Checks for maps between relations and the complex inclusions they induce.

Every ``is_*`` predicate has a ``*_violation`` twin that returns the first
offending pair (scanning sources then targets in label order), or ``None``
when the condition holds. The CLI uses the twins to explain a failed check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .dowker import dowker_K, dowker_L
from .errors import LabelMismatchError, MorphismError, NotBijectiveError
from .relation import Label, Relation, _require_self, compose, from_pairs, power
from .simplicial import equals, is_subcomplex

VertexMap = Mapping[Label, Label]
MultiMap = Mapping[Label, Iterable[Label]]


@dataclass(frozen=True)
class ShiftWitness:
    S: Relation  # X -> Y
    T: Relation  # Y -> X
    lag: int


def _check_map(f: VertexMap, domain: Sequence[Label], codomain: Sequence[Label], name="map"):
    cod = set(codomain)
    for x in domain:
        if x not in f:
            raise MorphismError(f"{name} is undefined at {x!r}")
        if f[x] not in cod:
            raise MorphismError(f"{name} sends {x!r} to {f[x]!r}, outside the codomain")


def _check_multimap(F: MultiMap, domain: Sequence[Label], codomain: Sequence[Label], name="multimap"):
    cod = set(codomain)
    for x in domain:
        if x not in F:
            raise MorphismError(f"{name} is undefined at {x!r}")
        for a in F[x]:
            if a not in cod:
                raise MorphismError(f"{name} sends {x!r} to {a!r}, outside the codomain")


def map_relation(f: VertexMap, source_labels: Sequence[Label], target_labels: Sequence[Label]) -> Relation:
    """The graph ``{(x, f(x))}`` of a map, as a relation."""
    _check_map(f, source_labels, target_labels)
    return from_pairs(((x, f[x]) for x in source_labels), source_labels, target_labels)


def is_bijective(f: VertexMap, domain: Sequence[Label], codomain: Sequence[Label]) -> bool:
    _check_map(f, domain, codomain)
    return len(domain) == len(codomain) and len({f[x] for x in domain}) == len(codomain)


def graph_homomorphism_violation(f: VertexMap, R: Relation, R2: Relation):
    _require_self(R)
    _require_self(R2)
    _check_map(f, R.source_labels, R2.source_labels)
    for x1, x2 in R.pairs():
        if not R2.related(f[x1], f[x2]):
            return (x1, x2)
    return None


def is_graph_homomorphism(f: VertexMap, R: Relation, R2: Relation) -> bool:
    """``x1 R x2`` implies ``f(x1) R2 f(x2)``."""
    return graph_homomorphism_violation(f, R, R2) is None


def _shared_sources(R: Relation, R2: Relation):
    if R.source_labels != R2.source_labels:
        raise LabelMismatchError("right morphisms need both relations on the same source labels")


def _shared_targets(R: Relation, R2: Relation):
    if R.target_labels != R2.target_labels:
        raise LabelMismatchError("left morphisms need both relations on the same target labels")


def right_morphism_violation(f: VertexMap, R: Relation, R2: Relation):
    _shared_sources(R, R2)
    _check_map(f, R.target_labels, R2.target_labels)
    for x, y in R.pairs():
        if not R2.related(x, f[y]):
            return (x, y)
    return None


def is_right_morphism(f: VertexMap, R: Relation, R2: Relation) -> bool:
    """``f: Y -> Z`` with ``x R y`` implying ``x R2 f(y)``."""
    return right_morphism_violation(f, R, R2) is None


def left_morphism_violation(g: VertexMap, R: Relation, R2: Relation):
    _shared_targets(R, R2)
    _check_map(g, R.source_labels, R2.source_labels)
    for x, z in R.pairs():
        if not R2.related(g[x], z):
            return (x, z)
    return None


def is_left_morphism(g: VertexMap, R: Relation, R2: Relation) -> bool:
    """``g: X -> Y`` with ``x R z`` implying ``g(x) R2 z``."""
    return left_morphism_violation(g, R, R2) is None


def multi_right_morphism_violation(F: MultiMap, R: Relation, R2: Relation):
    _shared_sources(R, R2)
    _check_multimap(F, R.target_labels, R2.target_labels)
    for x, y in R.pairs():
        for a in F[y]:
            if not R2.related(x, a):
                return (x, y, a)
    return None


def is_multi_right_morphism(F: MultiMap, R: Relation, R2: Relation) -> bool:
    return multi_right_morphism_violation(F, R, R2) is None


def multi_left_morphism_violation(G: MultiMap, R: Relation, R2: Relation):
    _shared_targets(R, R2)
    _check_multimap(G, R.source_labels, R2.source_labels)
    for x, z in R.pairs():
        for a in G[x]:
            if not R2.related(a, z):
                return (x, z, a)
    return None


def is_multi_left_morphism(G: MultiMap, R: Relation, R2: Relation) -> bool:
    return multi_left_morphism_violation(G, R, R2) is None


def relation_as_multimap(R: Relation) -> dict:
    """Read ``R ⊂ X × Y`` as the multivalued map ``x ↦ R(x)``."""
    return {x: R.image_of(x) for x in R.source_labels}


def conjugacy_violation(phi: VertexMap, R1: Relation, R2: Relation):
    """First pair where ``phi ∘ R1`` and ``R2 ∘ phi`` disagree.

    Raises :class:`NotBijectiveError` when ``phi`` is not a bijection.
    """
    _require_self(R1)
    _require_self(R2)
    if not is_bijective(phi, R1.source_labels, R2.source_labels):
        raise NotBijectiveError("conjugacy requires a bijective vertex map")
    P = map_relation(phi, R1.source_labels, R2.source_labels)
    lhs = compose(P, R1)
    rhs = compose(R2, P)
    for i, (a, b) in enumerate(zip(lhs.rows, rhs.rows)):
        diff = a ^ b
        if diff:
            k = (diff & -diff).bit_length() - 1
            return (lhs.source_labels[i], lhs.target_labels[k])
    return None


def is_conjugacy(phi: VertexMap, R1: Relation, R2: Relation) -> bool:
    return conjugacy_violation(phi, R1, R2) is None


SHIFT_EQUATIONS = (
    "R1 ∘ T = T ∘ R2",
    "S ∘ R1 = R2 ∘ S",
    "T ∘ S = R1^l",
    "S ∘ T = R2^l",
)


def shift_equivalence_violation(R1: Relation, R2: Relation, w: ShiftWitness):
    """Name of the first defining equation that fails, or ``None``."""
    _require_self(R1)
    _require_self(R2)
    if w.lag < 1:
        raise MorphismError("lag must be a positive integer")
    X, Y = R1.source_labels, R2.source_labels
    if w.S.source_labels != X or w.S.target_labels != Y:
        raise LabelMismatchError("S must relate the vertices of R1 to the vertices of R2")
    if w.T.source_labels != Y or w.T.target_labels != X:
        raise LabelMismatchError("T must relate the vertices of R2 to the vertices of R1")
    S, T = w.S, w.T
    checks = (
        (compose(R1, T), compose(T, R2)),
        (compose(S, R1), compose(R2, S)),
        (compose(T, S), power(R1, w.lag)),
        (compose(S, T), power(R2, w.lag)),
    )
    for name, (lhs, rhs) in zip(SHIFT_EQUATIONS, checks):
        if lhs != rhs:
            return name
    return None


def verify_shift_equivalence(R1: Relation, R2: Relation, w: ShiftWitness) -> bool:
    return shift_equivalence_violation(R1, R2, w) is None


def _inverse_map(f: VertexMap, domain: Sequence[Label]) -> dict:
    return {f[x]: x for x in domain}


def assert_inclusion_from_right_morphism(f: VertexMap, R: Relation, R2: Relation) -> bool:
    """Check that ``K_R ≤ K_R2`` for a right morphism ``f``; raises if ``f``
    is not one.

    Equality is also required when ``f`` is bijective and its inverse is a
    right morphism from ``R2`` back to ``R``. Bijectivity alone is not
    enough: pairs of ``R2`` outside the image of ``R`` can enlarge ``K_R2``.
    """
    bad = right_morphism_violation(f, R, R2)
    if bad is not None:
        raise MorphismError(f"not a right morphism: {bad[0]!r} R {bad[1]!r} is not preserved")
    K, K2 = dowker_K(R), dowker_K(R2)
    if not is_subcomplex(K, K2):
        return False
    if is_bijective(f, R.target_labels, R2.target_labels):
        back = _inverse_map(f, R.target_labels)
        if right_morphism_violation(back, R2, R) is None:
            return equals(K, K2)
    return True


def assert_inclusion_from_left_morphism(g: VertexMap, R: Relation, R2: Relation) -> bool:
    bad = left_morphism_violation(g, R, R2)
    if bad is not None:
        raise MorphismError(f"not a left morphism: {bad[0]!r} R {bad[1]!r} is not preserved")
    L, L2 = dowker_L(R), dowker_L(R2)
    if not is_subcomplex(L, L2):
        return False
    if is_bijective(g, R.source_labels, R2.source_labels):
        back = _inverse_map(g, R.source_labels)
        if left_morphism_violation(back, R2, R) is None:
            return equals(L, L2)
    return True
