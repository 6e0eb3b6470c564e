"""Canonical labeling, isomorphism, automorphism groups and planarity.

The canonical form of a connected graph is the relabeling that minimizes the
row-bitmask tuple over a partition-refinement backtrack tree (target cell =
first largest, full backtracking, discovered automorphisms accumulated).
Disconnected graphs are canonicalized per component and the components are
concatenated in sorted key order; the automorphism order multiplies the
per-component orders with a factorial for every repeated component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from chromastab import graph6, kernels
from chromastab.graph import Graph, bits, mask_of


@dataclass(frozen=True)
class AutInfo:
    """Automorphism group size plus a witness set of generators.

    `order` is exact.  `generators` are automorphisms discovered during the
    canonical search that connect the vertex orbits; they witness every orbit
    fusion but are not guaranteed to be a minimal generating set.
    """

    order: int
    generators: tuple


@dataclass(frozen=True)
class CanonData:
    key: bytes          # graph6 bytes of the canonically relabeled graph
    perm: tuple         # vertex -> canonical position
    aut_order: int
    generators: tuple
    orbits: tuple       # vertex -> smallest vertex of its orbit
    last_orbit: int     # mask: orbit of the canonically last vertex


def _component_masks(n, rows):
    seen = 0
    comps = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = comp
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


class _Orbits:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra


def canon_data(n, rows) -> CanonData:
    """Canonical data for raw adjacency rows (component-composed)."""
    if n == 0:
        return CanonData(graph6.encode_rows(0, ()).encode(), (), 1, (), (), 0)
    kern = kernels.active()
    comps = _component_masks(n, rows)
    if len(comps) == 1:
        perm, order, gens, orbits = kern.canon_raw(n, rows)
        crows = _apply_perm(n, rows, perm)
        key = graph6.encode_rows(n, crows).encode()
        last = _orbit_mask(orbits, perm.index(n - 1))
        return CanonData(key, perm, order, gens, orbits, last)

    pieces = []
    for comp in comps:
        verts = list(bits(comp))
        index = {v: i for i, v in enumerate(verts)}
        nc = len(verts)
        sub = tuple(
            mask_of(index[u] for u in bits(rows[v] & comp)) for v in verts
        )
        perm, order, gens, orbits = kern.canon_raw(nc, sub)
        crows = _apply_perm(nc, sub, perm)
        pieces.append(
            {
                "verts": verts,
                "n": nc,
                "key": _pack(nc, crows),
                "perm": perm,
                "order": order,
                "gens": gens,
                "orbits": orbits,
            }
        )
    pieces.sort(key=lambda p: (p["n"], p["key"]))

    offsets = []
    total = 0
    for p in pieces:
        offsets.append(total)
        total += p["n"]
    assert total == n

    gperm = [0] * n
    for p, off in zip(pieces, offsets):
        for local, v in enumerate(p["verts"]):
            gperm[v] = off + p["perm"][local]

    orb = _Orbits(n)
    ggens = []
    for p in pieces:
        for gen in p["gens"]:
            lifted = list(range(n))
            for local, v in enumerate(p["verts"]):
                lifted[v] = p["verts"][gen[local]]
            ggens.append(tuple(lifted))
            for v in range(n):
                orb.union(v, lifted[v])

    order = 1
    for p in pieces:
        order *= p["order"]
    i = 0
    while i < len(pieces):
        j = i
        while j < len(pieces) and (pieces[j]["n"], pieces[j]["key"]) == (
            pieces[i]["n"],
            pieces[i]["key"],
        ):
            j += 1
        mult = j - i
        order *= math.factorial(mult)
        for a in range(i, j - 1):
            swap = _swap_components(n, pieces[a], pieces[a + 1])
            ggens.append(swap)
            for v in range(n):
                orb.union(v, swap[v])
        i = j

    orbits = tuple(orb.find(v) for v in range(n))
    crows = _apply_perm(n, rows, gperm)
    key = graph6.encode_rows(n, crows).encode()
    last_vertex = gperm.index(n - 1)
    return CanonData(key, tuple(gperm), order, tuple(ggens), orbits, _orbit_mask(orbits, last_vertex))


def _swap_components(n, pa, pb):
    """Automorphism exchanging two isomorphic components via their canonical
    labelings, identity elsewhere."""
    perm = list(range(n))
    inv_b = [0] * pb["n"]
    for local, pos in enumerate(pb["perm"]):
        inv_b[pos] = local
    inv_a = [0] * pa["n"]
    for local, pos in enumerate(pa["perm"]):
        inv_a[pos] = local
    for local, v in enumerate(pa["verts"]):
        perm[v] = pb["verts"][inv_b[pa["perm"][local]]]
    for local, v in enumerate(pb["verts"]):
        perm[v] = pa["verts"][inv_a[pb["perm"][local]]]
    return tuple(perm)


def _apply_perm(n, rows, perm):
    out = [0] * n
    for v in range(n):
        pv = perm[v]
        for u in bits(rows[v]):
            out[pv] |= 1 << perm[u]
    return tuple(out)


def _pack(n, rows):
    data = bytearray([n])
    for r in rows:
        data += int(r).to_bytes(8, "little")
    return bytes(data)


def _orbit_mask(orbits, v):
    root = orbits[v]
    return mask_of(u for u, r in enumerate(orbits) if r == root)


@lru_cache(maxsize=4096)
def _canon_cached(n, rows):
    return canon_data(n, rows)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-class key: graph6 bytes of the canonically relabeled graph."""
    return _canon_cached(g.n, g.rows).key


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled graph itself (labels carried along)."""
    data = _canon_cached(g.n, g.rows)
    return g.relabel(data.perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Graph) -> AutInfo:
    data = _canon_cached(g.n, g.rows)
    return AutInfo(data.aut_order, data.generators)


# ---------------------------------------------------------------------------
# planarity
# ---------------------------------------------------------------------------


def _to_networkx(g: Graph):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nxg


def is_planar(g: Graph) -> bool:
    """Exact planarity via the left-right criterion, with the m > 3n-6 fast
    reject for n >= 3."""
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    flag, _ = nx.check_planarity(_to_networkx(g), counterexample=False)
    return flag
