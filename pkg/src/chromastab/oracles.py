"""Brute-force reference oracles for cross-checking the fast paths.

Nothing here shares code with the production algorithms: canonical forms come
from scanning all n! permutations, colorings from exhaustive assignment,
planarity from a direct search for subdivided K5/K33 subgraphs.  Intended for
test-time use on small graphs only.
"""

from __future__ import annotations

from itertools import combinations, permutations

from chromastab.graph import Graph, bits, mask_of


def all_labeled_graphs(n):
    """Every labeled simple graph on n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for picks in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if picks >> i & 1]
        yield Graph.build(n, edges)


def brute_canonical_key(g: Graph):
    """(min adjacency rows over all permutations, aut count) in one pass."""
    n = g.n
    best = None
    aut = 0
    ident = tuple(g.rows)
    for perm in permutations(range(n)):
        rows = [0] * n
        for v in range(n):
            pv = perm[v]
            for u in bits(g.rows[v]):
                rows[pv] |= 1 << perm[u]
        rows = tuple(rows)
        if rows == ident:
            aut += 1
        if best is None or rows < best:
            best = rows
    if best is None:
        best = ()
        aut = 1
    return best, aut


def brute_is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    target = tuple(h.rows)
    for perm in permutations(range(g.n)):
        rows = [0] * g.n
        ok = True
        for v in range(g.n):
            pv = perm[v]
            for u in bits(g.rows[v]):
                rows[pv] |= 1 << perm[u]
        for v in range(g.n):
            if rows[v] != target[v]:
                ok = False
                break
        if ok:
            return True
    return False


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        if _exists_coloring(g, k):
            return k
    raise AssertionError("unreachable")


def _exists_coloring(g: Graph, k):
    def walk(v, colors):
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[u] != c for u in bits(g.rows[v]) if u < v):
                colors[v] = c
                if walk(v + 1, colors):
                    return True
        colors[v] = -1
        return False

    return walk(0, [-1] * g.n)


def brute_stability(g: Graph, independent_only=False):
    """(value, witness masks) by recomputing the chromatic number per subset."""
    chi = brute_chromatic_number(g)
    if chi == 0:
        raise ValueError("undefined for the null graph")
    for s in range(1, g.n + 1):
        hits = []
        for combo in combinations(range(g.n), s):
            mask = mask_of(combo)
            if independent_only and any(g.rows[v] & mask for v in combo):
                continue
            sub = g.delete_vertices(mask)
            if brute_chromatic_number(sub) == chi - 1:
                hits.append(mask)
        if hits:
            return s, tuple(sorted(hits))
    raise AssertionError("unreachable")


def has_odd_cycle(g: Graph) -> bool:
    """Direct odd-cycle search: try every vertex sequence of each odd length."""
    for length in range(3, g.n + 1, 2):
        for combo in combinations(range(g.n), length):
            first = combo[0]
            rest = combo[1:]
            for perm in permutations(rest):
                cyc = (first,) + perm
                if all(
                    g.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)
                ):
                    return True
    return False


# ---------------------------------------------------------------------------
# Kuratowski-subdivision planarity oracle
# ---------------------------------------------------------------------------


def _connect_pairs(g: Graph, pairs, banned, used):
    """Try to realize all terminal pairs as internally disjoint paths whose
    interior vertices avoid `banned | used` and each interior vertex serves
    one path."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]

    def extend(v, interior):
        if g.has_edge(v, b) and _connect_pairs(g, rest, banned, used | interior):
            return True
        for u in bits(g.rows[v]):
            if (banned | used | interior) >> u & 1 or u == b:
                continue
            if extend(u, interior | (1 << u)):
                return True
        return False

    if g.has_edge(a, b):
        if _connect_pairs(g, rest, banned, used):
            return True
    for u in bits(g.rows[a]):
        if (banned | used) >> u & 1 or u == b:
            continue
        if extend(u, 1 << u):
            return True
    return False


def _has_subdivision(g: Graph, branch_count, pair_sets):
    for branch in combinations(range(g.n), branch_count):
        branch_mask = mask_of(branch)
        for pairs in pair_sets:
            concrete = [(branch[i], branch[j]) for i, j in pairs]
            if _connect_pairs(g, concrete, branch_mask, 0):
                return True
    return False


_K5_PAIRS = [[(i, j) for i in range(5) for j in range(i + 1, 5)]]
_K33_PAIRS = []
for split in combinations(range(1, 6), 2):
    left = (0,) + split
    right = tuple(i for i in range(6) if i not in left)
    _K33_PAIRS.append([(l, r) for l in left for r in right])


def is_planar_bruteforce(g: Graph) -> bool:
    """Planarity by the absence of a K5 or K33 subdivision."""
    if g.n < 5:
        return True
    degs = g.degrees()
    if sum(1 for d in degs if d >= 4) >= 5 and _has_subdivision(g, 5, _K5_PAIRS):
        return False
    if g.n >= 6 and sum(1 for d in degs if d >= 3) >= 6 and _has_subdivision(
        g, 6, _K33_PAIRS
    ):
        return False
    return True
