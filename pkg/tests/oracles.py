"""Brute-force reference implementations used only by the tests.

Nothing here touches the bit-set internals of the package: relations are
plain sets of pairs and complexes are explicit sets of frozensets, so these
functions check the library along an independent route.
"""
from __future__ import annotations

from functools import reduce
from itertools import combinations, product
from math import gcd


def pairs_of(R):
    return {(x, y) for x, y in R.pairs()}


def compose_pairs(outer: set, inner: set) -> set:
    return {(x, z) for (x, y1) in inner for (y2, z) in outer if y1 == y2}


def power_pairs(pairs: set, labels, n: int) -> set:
    result = {(x, x) for x in labels}
    for _ in range(n):
        result = compose_pairs(pairs, result)
    return result


def eventual_period_bruteforce(pairs: set, labels, limit: int = 200):
    """Scan (j, p) lexicographically; powers recomputed from scratch each time."""
    powers = [None] + [frozenset(power_pairs(pairs, labels, k)) for k in range(1, limit)]
    for j in range(1, limit):
        for p in range(1, limit - j):
            if powers[j] == powers[j + p]:
                return j, p
    raise AssertionError("no eventual period found below limit")


def reach(pairs: set, labels) -> set:
    """Pairs (x, y) joined by a walk of length >= 1 (Warshall)."""
    r = set(pairs)
    for k in labels:
        for i in labels:
            for j in labels:
                if (i, k) in r and (k, j) in r:
                    r.add((i, j))
    return r


def scc_bruteforce(pairs: set, labels) -> set:
    r = reach(pairs, labels)
    blocks = set()
    for x in labels:
        blocks.add(frozenset({x} | {y for y in labels if (x, y) in r and (y, x) in r}))
    return blocks


def cc_bruteforce(pairs: set, labels) -> set:
    sym = pairs | {(y, x) for x, y in pairs}
    return scc_bruteforce(sym | {(x, x) for x in labels}, labels)


def elementary_cycles(pairs: set, labels) -> list[tuple]:
    """All directed cycles without repeated vertices, each rooted at its
    smallest vertex (by position in ``labels``)."""
    pos = {v: i for i, v in enumerate(labels)}
    succ = {v: [w for w in labels if (v, w) in pairs] for v in labels}
    cycles = []

    def extend(path, on_path):
        v = path[-1]
        for w in succ[v]:
            if w == path[0]:
                cycles.append(tuple(path))
            elif w not in on_path and pos[w] > pos[path[0]]:
                on_path.add(w)
                path.append(w)
                extend(path, on_path)
                path.pop()
                on_path.discard(w)

    for s in labels:
        extend([s], {s})
    return cycles


def cycle_gcd(pairs: set, labels) -> int:
    return reduce(gcd, (len(c) for c in elementary_cycles(pairs, labels)), 0)


def closed_walk_gcd(pairs: set, labels) -> int:
    """gcd of closed-walk lengths up to ``2 * len(labels)``."""
    g = 0
    for n in range(1, 2 * len(labels) + 1):
        Pn = power_pairs(pairs, labels, n)
        if any((x, x) in Pn for x in labels):
            g = gcd(g, n)
    return g


def has_long_cycle(pairs: set, labels) -> bool:
    return any(len(c) >= 2 for c in elementary_cycles(pairs, labels))


def simple_bruteforce(pairs: set, labels) -> bool:
    """Any two elementary cycles share no vertex or are the same cycle."""
    cycles = [(frozenset(c), frozenset(zip(c, c[1:] + c[:1]))) for c in elementary_cycles(pairs, labels)]
    for (va, ea), (vb, eb) in combinations(cycles, 2):
        if va & vb and ea != eb:
            return False
    return True


def walk_residues(pairs: set, labels, q: int) -> dict:
    """For each (x, y), the set of walk lengths mod q (walks of length >= 0)."""
    res = {}
    for x in labels:
        seen = {(x, 0)}
        frontier = [(x, 0)]
        while frontier:
            v, r = frontier.pop()
            for w in labels:
                if (v, w) in pairs and (w, (r + 1) % q) not in seen:
                    seen.add((w, (r + 1) % q))
                    frontier.append((w, (r + 1) % q))
        for y in labels:
            res[x, y] = {r for (v, r) in seen if v == y}
    return res


def q_classes_bruteforce(pairs: set, labels, q: int) -> set:
    res = walk_residues(pairs, labels, q)
    return {frozenset(y for y in labels if res[x, y] == {0}) for x in labels}


# ---------------------------------------------------------------- complexes

def closure(simplices) -> set:
    faces = set()
    for s in simplices:
        s = tuple(s)
        for k in range(1, len(s) + 1):
            for c in combinations(s, k):
                faces.add(frozenset(c))
    return faces


def dowker_faces_bruteforce(pairs: set, xs, ys) -> set:
    """Every nonempty set of sources with a common related target."""
    faces = set()
    for k in range(1, len(xs) + 1):
        for sub in combinations(xs, k):
            if any(all((x, y) in pairs for x in sub) for y in ys):
                faces.add(frozenset(sub))
    return faces


def complex_faces(K) -> set:
    return closure(K.maximal)


def _nullity_gf2(columns: list[list[int]], nrows: int) -> int:
    """dim ker by enumerating every vector of the domain."""
    ncols = len(columns)
    zeros = 0
    for coeffs in product((0, 1), repeat=ncols):
        v = [0] * nrows
        for c, col in zip(coeffs, columns):
            if c:
                v = [(a + b) % 2 for a, b in zip(v, col)]
        if not any(v):
            zeros += 1
    return zeros.bit_length() - 1


def betti_bruteforce(faces: set, dim_cap: int) -> tuple:
    """Z/2 Betti numbers via exhaustive kernel enumeration (small complexes)."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for v in by_dim.values():
        v.sort(key=sorted)

    def boundary(k):
        rows = by_dim.get(k - 1, [])
        cols = []
        for f in by_dim.get(k, []):
            cols.append([1 if (r < f and len(r) == len(f) - 1) else 0 for r in rows])
        return cols, len(rows)

    nullity, rank = {}, {}
    for k in range(0, dim_cap + 2):
        n_k = len(by_dim.get(k, []))
        if k == 0:
            nullity[0] = n_k
            rank[0] = 0
            continue
        cols, nrows = boundary(k)
        nul = _nullity_gf2(cols, nrows) if cols else 0
        nullity[k] = nul
        rank[k] = n_k - nul
    return tuple(nullity[k] - rank.get(k + 1, 0) for k in range(dim_cap + 1))


def euler_bruteforce(faces: set) -> int:
    return sum((-1) ** (len(f) - 1) for f in faces)


# ---------------------------------------------------------------- shift witnesses

def all_relations(xs, ys):
    from dowkerrel import from_matrix

    m, n = len(xs), len(ys)
    for bits in product((0, 1), repeat=m * n):
        rows = [list(bits[i * n:(i + 1) * n]) for i in range(m)]
        yield from_matrix(rows, xs, ys)


def search_shift_witnesses(R1, R2, max_lag: int = 3):
    """Every (S, T, l) with l <= max_lag satisfying the four intertwining
    equations, by exhaustive enumeration. Only for tiny vertex sets."""
    from dowkerrel import compose, power

    X, Y = R1.source_labels, R2.source_labels
    Ss = [S for S in all_relations(X, Y) if compose(S, R1) == compose(R2, S)]
    Ts = [T for T in all_relations(Y, X) if compose(R1, T) == compose(T, R2)]
    found = []
    for lag in range(1, max_lag + 1):
        P1, P2 = power(R1, lag), power(R2, lag)
        for S in Ss:
            for T in Ts:
                if compose(T, S) == P1 and compose(S, T) == P2:
                    found.append((S, T, lag))
    return found
