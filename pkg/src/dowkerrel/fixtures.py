"""Small named relations used in the docs, the CLI demo files and the tests."""
from __future__ import annotations

from .relation import Relation, from_matrix, from_pairs, full, identity

X3 = ("x1", "x2", "x3")


def example_4x5() -> Relation:
    """4×5 relation whose ``K`` has two components: a triangle and a point."""
    return from_matrix(
        [
            [1, 0, 0, 0, 1],
            [0, 0, 1, 1, 0],
            [1, 0, 0, 0, 1],
            [1, 1, 0, 0, 0],
        ]
    )


def nilpotent_3() -> Relation:
    """Strictly upper triangular; its cube is empty and ``x3`` has no successor."""
    return from_matrix([[0, 1, 1], [0, 0, 1], [0, 0, 0]])


def cycle_3() -> Relation:
    return from_pairs([("x1", "x2"), ("x2", "x3"), ("x3", "x1")], X3)


def cycle(n: int) -> Relation:
    labels = tuple(f"x{i}" for i in range(1, n + 1))
    return from_pairs([(labels[i], labels[(i + 1) % n]) for i in range(n)], labels)


def all_ones_3() -> Relation:
    return full(X3)


def identity_3() -> Relation:
    return identity(X3)


def hollow_triangle() -> Relation:
    """``J - I`` on three vertices: ``K_R`` is a hollow triangle, ``K_{R^2}`` is filled."""
    return from_matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])


def acyclic_9() -> Relation:
    """Acyclic, total, eventual period (3, 1). Its K-filtration has one H1 bar
    [1, 2) and four H0 bars of which only one is infinite."""
    labels = ("u", "v", "a", "b", "c", "y1", "y2", "y3", "w")
    edges = [
        ("u", "a"), ("v", "b"),
        ("a", "y1"), ("a", "y3"), ("b", "y1"), ("b", "y2"), ("c", "y2"), ("c", "y3"),
        ("y1", "w"), ("y2", "w"), ("y3", "w"), ("w", "w"),
    ]
    return from_pairs(edges, labels)


def simple_10() -> Relation:
    """Simple, total, connected, eventual period (3, 4): a 4-cycle x1..x4 fed
    by six tree vertices. Its K-filtration has six H0 bars, four dying at
    level 2 and two infinite; ``G_{R^4}`` has two components."""
    rows = [
        [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    ]
    return from_matrix(rows)
