"""Isomorph-free exhaustive generation of small graphs by canonical augmentation.

Each level extends every parent by one new vertex attached to every
admissible neighbor subset; a child is accepted only when the new vertex
lies in the automorphism orbit of the canonically last vertex.  Distinct
parents then never produce isomorphic accepted children, so a per-parent
key dedup suffices and the output is independent of scheduling.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from chromastab import graph6, iso, kernels
from chromastab.chromatic import StabilityReport, analyze
from chromastab.graph import Graph, GraphError

EXHAUSTIVE_CAP = 10

KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


class GenerateError(ValueError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """What to enumerate: order, optional degree bound, optional filters.

    `predicate` is either one of the named filters ("family-members",
    "stability-gap") or any callable Graph -> bool.
    """

    n: int
    max_degree: int | None = None
    connected_only: bool = False
    predicate: object = None

    def validate(self):
        if not 1 <= self.n <= EXHAUSTIVE_CAP:
            raise GenerateError(
                f"exhaustive enumeration supports 1 <= n <= {EXHAUSTIVE_CAP}, got {self.n}"
            )
        if self.max_degree is not None and not 0 <= self.max_degree <= self.n - 1:
            raise GenerateError(f"max_degree {self.max_degree} outside 0..n-1")
        if isinstance(self.predicate, str) and self.predicate not in NAMED_PREDICATES:
            raise GenerateError(f"unknown predicate {self.predicate!r}")


@dataclass(frozen=True)
class CatalogEntry:
    key: str  # canonical graph6
    report: StabilityReport


@dataclass(frozen=True)
class Catalog:
    entries: tuple
    meta: dict = field(default_factory=dict)

    def keys(self):
        return [e.key for e in self.entries]

    def graphs(self):
        return [graph6.decode(e.key) for e in self.entries]


# ---------------------------------------------------------------------------
# level expansion
# ---------------------------------------------------------------------------


def _pack_key(n, rows):
    data = bytearray([n])
    for r in rows:
        data += int(r).to_bytes(8, "little")
    return bytes(data)


def _children_of(task):
    """Accepted one-vertex extensions of a parent: list of (packed_key, rows)."""
    n, rows, max_degree = task
    accepted = {}
    if max_degree is None:
        eligible = list(range(n))
        cap = n
    else:
        eligible = [u for u in range(n) if rows[u].bit_count() < max_degree]
        cap = max_degree
    newbit = 1 << n
    base = list(rows) + [0]
    ne = len(eligible)
    for sub in range(1 << ne):
        if sub.bit_count() > cap:
            continue
        x = 0
        child = base.copy()
        s = sub
        while s:
            b = s & -s
            u = eligible[b.bit_length() - 1]
            child[u] |= newbit
            x |= 1 << u
            s ^= b
        child[n] = x
        crows = tuple(child)
        data = iso.canon_data(n + 1, crows)
        if data.last_orbit >> n & 1:
            key = _pack_key(n + 1, _canon_rows_from(data, n + 1, crows))
            if key not in accepted:
                accepted[key] = crows
    return sorted(accepted.items())


def _canon_rows_from(data, n, rows):
    out = [0] * n
    perm = data.perm
    for v in range(n):
        pv = perm[v]
        row = rows[v]
        while row:
            b = row & -row
            out[pv] |= 1 << perm[b.bit_length() - 1]
            row ^= b
    return out


def _pmap(fn, tasks, jobs, chunksize=16):
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=chunksize))


def default_jobs() -> int:
    return os.cpu_count() or 1


_LEVEL_CACHE = {}


def all_levels(n, max_degree=None, jobs=1):
    """{order: sorted list of (packed_key, rows)} for every order 1..n, one
    representative per isomorphism class (respecting the degree bound).
    Levels are cached per max_degree within the process and extended on demand."""
    levels = _LEVEL_CACHE.setdefault(max_degree, {1: [(_pack_key(1, (0,)), (0,))]})
    for k in range(1, n):
        if k + 1 in levels:
            continue
        tasks = [(k, rows, max_degree) for _key, rows in levels[k]]
        merged = {}
        for chunk in _pmap(_children_of, tasks, jobs):
            for key, rows in chunk:
                if key in merged:
                    raise AssertionError("duplicate class across parents")
                merged[key] = rows
        levels[k + 1] = sorted(merged.items())
    return {k: levels[k] for k in range(1, n + 1)}


def levels_up_to(n, max_degree=None, jobs=1):
    """One representative of every isomorphism class of order exactly n
    (respecting the degree bound), as a sorted list of (packed_key, rows)."""
    return all_levels(n, max_degree, jobs)[n]


def class_count(n, max_degree=None, jobs=1) -> int:
    return len(levels_up_to(n, max_degree, jobs))


def expand_and_map(parents, map_fn, jobs=1, max_degree=None):
    """Expand a parent level by one vertex and fold `map_fn` over the children.

    map_fn(key, rows) runs inside the worker on every accepted child; the
    per-parent result lists are concatenated in parent order, so the outcome
    does not depend on the worker count.  Returns (total_children, results).
    """
    k = len(parents[0][1]) if parents else 0
    tasks = [(k, rows, max_degree, map_fn) for _key, rows in parents]
    total = 0
    out = []
    seen = set()
    for keys, results in _pmap(_expand_worker, tasks, jobs, chunksize=4):
        for key in keys:
            if key in seen:
                raise AssertionError("duplicate class across parents")
            seen.add(key)
        total += len(keys)
        out.extend(results)
    return total, out


def _expand_worker(task):
    n, rows, max_degree, map_fn = task
    children = _children_of((n, rows, max_degree))
    keys = [key for key, _ in children]
    results = [map_fn(child) for child in children]
    return keys, results


# ---------------------------------------------------------------------------
# filtering funnels
# ---------------------------------------------------------------------------


def _funnel_family_members(task):
    """Stage record for the max-degree-4 / chi-3 / vs-2 / ivs-3 filter."""
    key, rows = task
    kern = kernels.active()
    n = len(rows)
    delta = max((r.bit_count() for r in rows), default=0)
    if delta != 4:
        return (key, rows, 0)
    chi = kern.chromatic_number(n, rows)
    if chi != 3:
        return (key, rows, 1)
    vs, ivs = kern.stability_values(n, rows, chi)
    if vs != 2:
        return (key, rows, 2)
    if ivs != 3:
        return (key, rows, 3)
    return (key, rows, 4)


def _funnel_stability_gap(task):
    """Stage record for the ivs > vs with chi >= max_degree/2 + 1 filter."""
    key, rows = task
    kern = kernels.active()
    n = len(rows)
    delta = max((r.bit_count() for r in rows), default=0)
    chi = kern.chromatic_number(n, rows)
    if 2 * chi < delta + 2:
        return (key, rows, 1, (delta, chi, None, None))
    vs, ivs = kern.stability_values(n, rows, chi)
    if ivs <= vs:
        return (key, rows, 3, (delta, chi, vs, ivs))
    return (key, rows, 4, (delta, chi, vs, ivs))


NAMED_PREDICATES = {
    "family-members": {
        "stages": ("max_degree=4", "chi=3", "vs=2", "ivs=3"),
        "fn": _funnel_family_members,
    },
    "stability-gap": {
        "stages": ("max_degree", "chi>=max_degree/2+1", "vs", "ivs>vs"),
        "fn": _funnel_stability_gap,
    },
}


def enumerate_catalog(spec: GenSpec, jobs=1) -> Catalog:
    """Run the generation spec and return the full catalog with reports."""
    spec.validate()
    t0 = time.perf_counter()
    level = levels_up_to(spec.n, spec.max_degree, jobs)
    total = len(level)
    funnel = {"classes": total}

    survivors = []
    if spec.connected_only:
        level = [
            (key, rows)
            for key, rows in level
            if Graph(len(rows), rows).is_connected()
        ]
        funnel["connected"] = len(level)

    if spec.predicate is None:
        survivors = level
    elif isinstance(spec.predicate, str):
        named = NAMED_PREDICATES[spec.predicate]
        fn = named["fn"]
        stage_names = named["stages"]
        reached = _pmap(fn, list(level), jobs, chunksize=64)
        counts = [0] * (len(stage_names) + 1)
        for rec in reached:
            counts[rec[2]] += 1
        for i, name in enumerate(stage_names):
            funnel[name] = sum(counts[i + 1 :])
        survivors = [(rec[0], rec[1]) for rec in reached if rec[2] == len(stage_names)]
    else:
        survivors = [
            (key, rows)
            for key, rows in level
            if spec.predicate(Graph(len(rows), rows))
        ]
        funnel["predicate"] = len(survivors)

    entries = []
    for _key, rows in survivors:
        g = Graph(len(rows), rows)
        canon = iso.canonical_graph(g)
        entries.append(CatalogEntry(graph6.encode(canon), analyze(canon)))
    entries.sort(key=lambda e: e.key)
    meta = {
        "spec": {
            "n": spec.n,
            "max_degree": spec.max_degree,
            "connected_only": spec.connected_only,
            "predicate": spec.predicate if isinstance(spec.predicate, str) else None,
        },
        "funnel": funnel,
        "entry_count": len(entries),
        "wall_time_s": round(time.perf_counter() - t0, 3),
    }
    return Catalog(tuple(entries), meta)


# ---------------------------------------------------------------------------
# catalog relations and persistence
# ---------------------------------------------------------------------------


def edge_addition_links(cat: Catalog):
    """Ordered pairs (key_a, key_b) with b isomorphic to a plus one edge."""
    orders = {e.report.n for e in cat.entries}
    if len(orders) > 1:
        raise GenerateError("edge_addition_links needs a single-order catalog")
    keys = set(cat.keys())
    links = []
    for entry in cat.entries:
        g = graph6.decode(entry.key)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.has_edge(u, v):
                    continue
                child_key = iso.canonical_form(g.add_edges([(u, v)])).decode()
                if child_key in keys:
                    links.append((entry.key, child_key))
    return sorted(set(links))


def count_planar(cat: Catalog) -> int:
    return sum(1 for e in cat.entries if e.report.planar)


def write_catalog(cat: Catalog, path):
    """One line per entry: canonical graph6, tab, JSON report; metadata goes
    to a sidecar `<path>.meta.json`."""
    with open(path, "w") as fh:
        for e in cat.entries:
            fh.write(e.key)
            fh.write("\t")
            fh.write(json.dumps(e.report.to_dict(), separators=(",", ":")))
            fh.write("\n")
    with open(f"{path}.meta.json", "w") as fh:
        json.dump(cat.meta, fh, indent=2, sort_keys=False)
        fh.write("\n")


def read_catalog(path) -> Catalog:
    entries = []
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            key, _, blob = line.partition("\t")
            entries.append(CatalogEntry(key, StabilityReport.from_dict(json.loads(blob))))
    meta = {}
    try:
        with open(f"{path}.meta.json") as fh:
            meta = json.load(fh)
    except FileNotFoundError:
        pass
    return Catalog(tuple(entries), meta)
