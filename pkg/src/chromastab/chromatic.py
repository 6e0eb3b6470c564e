"""Exact chromatic number and vertex-deletion stability parameters.

The two stability parameters are the least number of vertices (any set, or
an independent set) whose deletion lowers the chromatic number by exactly
one.  A size-ascending scan with a (chi-1)-colorability test is exact: a set
whose deletion lowers chi by more than one always contains a smaller set
lowering it by exactly one, so the first successful size cannot overshoot.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass

from chromastab import iso, kernels
from chromastab.graph import Graph, bits, mask_of


class ChromaticError(ValueError):
    """Parameter undefined for the given graph (e.g. the null graph)."""


StabilityResult = namedtuple("StabilityResult", ["value", "witnesses"])


@dataclass(frozen=True)
class StabilityReport:
    """Every invariant the toolkit computes for one graph.

    Witness fields hold sorted vertex tuples; `bipartizing_pair_vertices`
    lists the vertices belonging to some pair whose deletion leaves a
    2-chromatic graph.
    """

    n: int
    m: int
    max_degree: int
    chromatic_number: int
    vertex_stability: int
    independent_vertex_stability: int
    vertex_stability_witnesses: tuple
    independent_stability_witnesses: tuple
    bipartizing_pair_vertices: tuple
    planar: bool
    connected: bool
    two_connected: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "max_degree": self.max_degree,
            "chromatic_number": self.chromatic_number,
            "vertex_stability": self.vertex_stability,
            "independent_vertex_stability": self.independent_vertex_stability,
            "vertex_stability_witnesses": [list(w) for w in self.vertex_stability_witnesses],
            "independent_stability_witnesses": [
                list(w) for w in self.independent_stability_witnesses
            ],
            "bipartizing_pair_vertices": list(self.bipartizing_pair_vertices),
            "planar": self.planar,
            "connected": self.connected,
            "two_connected": self.two_connected,
        }

    @classmethod
    def from_dict(cls, d) -> "StabilityReport":
        return cls(
            n=d["n"],
            m=d["m"],
            max_degree=d["max_degree"],
            chromatic_number=d["chromatic_number"],
            vertex_stability=d["vertex_stability"],
            independent_vertex_stability=d["independent_vertex_stability"],
            vertex_stability_witnesses=tuple(tuple(w) for w in d["vertex_stability_witnesses"]),
            independent_stability_witnesses=tuple(
                tuple(w) for w in d["independent_stability_witnesses"]
            ),
            bipartizing_pair_vertices=tuple(d["bipartizing_pair_vertices"]),
            planar=d["planar"],
            connected=d["connected"],
            two_connected=d["two_connected"],
        )


@dataclass(frozen=True)
class Coloring:
    """A proper vertex coloring; k is the number of colors actually used."""

    colors: tuple
    k: int

    @classmethod
    def from_colors(cls, g: Graph, colors) -> "Coloring":
        colors = tuple(colors)
        used = sorted(set(colors))
        if len(colors) != g.n:
            raise ChromaticError("coloring length mismatch")
        if colors and used != list(range(len(used))):
            raise ChromaticError("color indices must be 0..k-1 with no gaps")
        for u, v in g.edges():
            if colors[u] == colors[v]:
                raise ChromaticError(f"edge ({u},{v}) joins equal colors")
        return cls(colors, len(used))

    def classes(self) -> tuple:
        """Color classes as vertex masks."""
        out = [0] * self.k
        for v, c in enumerate(self.colors):
            out[c] |= 1 << v
        return tuple(out)


def is_k_colorable(g: Graph, k: int):
    """A proper coloring with at most k colors, or None."""
    if k < 0:
        raise ChromaticError("color count must be nonnegative")
    colors = kernels.active().color_graph(g.n, g.rows, k)
    if colors is None:
        return None
    return Coloring.from_colors(g, colors)


def chromatic_number(g: Graph) -> int:
    return kernels.active().chromatic_number(g.n, g.rows)


def _require_colorable(g: Graph) -> int:
    chi = chromatic_number(g)
    if chi == 0:
        raise ChromaticError("stability parameters are undefined for the null graph")
    return chi


def vertex_stability(g: Graph) -> StabilityResult:
    """Least size of a vertex set whose deletion lowers chi by one, with all
    witness sets of that size (masks, ascending)."""
    chi = _require_colorable(g)
    value, masks = kernels.active().stability_witnesses(g.n, g.rows, chi, False)
    return StabilityResult(value, masks)


def independent_vertex_stability(g: Graph) -> StabilityResult:
    """Same as vertex_stability but restricted to independent sets."""
    chi = _require_colorable(g)
    value, masks = kernels.active().stability_witnesses(g.n, g.rows, chi, True)
    return StabilityResult(value, masks)


def stability_values(g: Graph) -> tuple:
    """(vs, ivs) without witness extraction; faster for sweeps."""
    chi = _require_colorable(g)
    return kernels.active().stability_values(g.n, g.rows, chi)


def min_color_class_size(g: Graph) -> int:
    """Minimum color-class size over all proper chi-colorings.

    Independent oracle for the independent stability parameter: deleting a
    minimum class of an optimal coloring lowers chi by exactly one, and any
    independent deletion set becomes a class of some optimal coloring.
    """
    chi = _require_colorable(g)
    out = kernels.active().min_color_class_size(g.n, g.rows, chi)
    if out is None:
        raise ChromaticError("graph admits no chi-coloring; inconsistent state")
    return out


def bipartizing_pair_vertices(g: Graph) -> int:
    """Mask of vertices x for which some y exists with chi(G - {x,y}) == 2.

    The constant 2 is literal (an edge must survive), so this is most
    meaningful for 3-chromatic graphs.
    """
    kern = kernels.active()
    out = 0
    for x in range(g.n):
        for y in range(g.n):
            if y == x:
                continue
            mask = 1 << x | 1 << y
            if kern.deletion_colorable(g.n, g.rows, mask, 2) and not kern.deletion_colorable(
                g.n, g.rows, mask, 1
            ):
                out |= 1 << x
                break
    return out


def analyze(g: Graph) -> StabilityReport:
    """Full invariant report; raises for the null graph."""
    chi = _require_colorable(g)
    kern = kernels.active()
    vs, vs_wit = kern.stability_witnesses(g.n, g.rows, chi, False)
    ivs, ivs_wit = kern.stability_witnesses(g.n, g.rows, chi, True)
    if not vs <= ivs:
        raise AssertionError("vs exceeds ivs; kernel inconsistency")
    if g.n < ivs * chi:
        raise AssertionError("|V| < ivs * chi violates the color-class bound")
    for mask in ivs_wit:
        if any(g.rows[v] & mask for v in bits(mask)):
            raise AssertionError("non-independent ivs witness")
    conn = g.connectivity()
    return StabilityReport(
        n=g.n,
        m=g.m,
        max_degree=g.max_degree,
        chromatic_number=chi,
        vertex_stability=vs,
        independent_vertex_stability=ivs,
        vertex_stability_witnesses=tuple(tuple(bits(w)) for w in vs_wit),
        independent_stability_witnesses=tuple(tuple(bits(w)) for w in ivs_wit),
        bipartizing_pair_vertices=tuple(bits(bipartizing_pair_vertices(g))),
        planar=iso.is_planar(g),
        connected=conn.connected,
        two_connected=conn.two_connected,
    )
