"""Pure-Python compute kernels over bitset adjacency rows.

Every function here takes a graph as ``(n, rows)`` where ``rows[v]`` is the
neighbor bitmask of vertex ``v``.  The compiled extension
(:mod:`chromastab.kernels._ckern`) implements the same functions with the
same outputs bit for bit; this module is the fallback and the reference.
"""

from __future__ import annotations

BACKEND = "pure"


def _bits(mask):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _subsets_of_size(n, s):
    """All n-bit masks with exactly s bits set, ascending (Gosper's hack)."""
    if s == 0:
        yield 0
        return
    if s > n:
        return
    m = (1 << s) - 1
    top = 1 << n
    while m < top:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------


def _color_order(n, rows, active):
    """Active vertices sorted by descending degree within the active set."""
    verts = [v for v in range(n) if active >> v & 1]
    verts.sort(key=lambda v: (-(rows[v] & active).bit_count(), v))
    return verts


def _colorable_excluding(n, rows, excluded, k):
    """True if the graph induced on V minus `excluded` is k-colorable."""
    active = ((1 << n) - 1) & ~excluded if n else 0
    if active == 0:
        return True
    if k <= 0:
        return False
    if k == 1:
        return all(rows[v] & active == 0 for v in _bits(active))
    if k == 2:
        return _two_colorable(rows, active)
    order = _color_order(n, rows, active)
    colors = [-1] * n

    def walk(idx, used):
        if idx == len(order):
            return True
        v = order[idx]
        forb = 0
        for u in _bits(rows[v] & active):
            if colors[u] >= 0:
                forb |= 1 << colors[u]
        limit = min(used + 1, k)
        for c in range(limit):
            if forb >> c & 1:
                continue
            colors[v] = c
            if walk(idx + 1, used + 1 if c == used else used):
                return True
        colors[v] = -1
        return False

    return walk(0, 0)


def _two_colorable(rows, active):
    side = {}
    for start in _bits(active):
        if start in side:
            continue
        side[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for u in _bits(rows[v] & active):
                if u not in side:
                    side[u] = side[v] ^ 1
                    queue.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def deletion_colorable(n, rows, excluded, k):
    """True if the graph minus the `excluded` vertex mask is k-colorable."""
    return _colorable_excluding(n, rows, excluded, k)


def color_graph(n, rows, k):
    """A proper coloring with at most k colors, or None.

    Vertices are tried in descending-degree order and color symmetry is
    broken by requiring first occurrences of colors in increasing order, so
    the first vertex (a maximum-degree one) always receives color 0.
    """
    if n == 0:
        return ()
    if k <= 0:
        return None
    order = _color_order(n, rows, (1 << n) - 1)
    colors = [-1] * n

    def walk(idx, used):
        if idx == n:
            return True
        v = order[idx]
        forb = 0
        for u in _bits(rows[v]):
            if colors[u] >= 0:
                forb |= 1 << colors[u]
        limit = min(used + 1, k)
        for c in range(limit):
            if forb >> c & 1:
                continue
            colors[v] = c
            if walk(idx + 1, used + 1 if c == used else used):
                return True
        colors[v] = -1
        return False

    if not walk(0, 0):
        return None
    return tuple(colors)


def greedy_clique_bound(n, rows):
    """Size of a greedily grown clique (lower bound on the clique number)."""
    if n == 0:
        return 0
    order = sorted(range(n), key=lambda v: (-rows[v].bit_count(), v))
    clique = 0
    for v in order:
        if rows[v] & clique == clique:
            clique |= 1 << v
    return clique.bit_count()


def chromatic_number(n, rows):
    if n == 0:
        return 0
    if not any(rows):
        return 1
    lb = max(2, greedy_clique_bound(n, rows))
    for k in range(lb, n + 1):
        if _colorable_excluding(n, rows, 0, k):
            return k
    return n


def min_color_class_size(n, rows, k):
    """Minimum color-class size over all proper k-colorings, or None.

    Colorings are enumerated once per color permutation class: vertices are
    scanned in index order and each new color must be the smallest unused one.
    """
    if n == 0 or k <= 0:
        return None
    best = n + 1
    sizes = [0] * k
    assigned = [-1] * n

    def walk(v, used):
        nonlocal best
        # class sizes only grow, so min(current sizes) bounds the final
        # minimum from below once every color is open
        if used == k and min(sizes) >= best:
            return
        if v == n:
            if used == k and min(sizes) < best:
                best = min(sizes)
            return
        if k - used > n - v:
            return
        forb = 0
        for u in _bits(rows[v]):
            if u < v:
                forb |= 1 << assigned[u]
        limit = min(used + 1, k)
        for c in range(limit):
            if forb >> c & 1:
                continue
            assigned[v] = c
            sizes[c] += 1
            walk(v + 1, used + 1 if c == used else used)
            sizes[c] -= 1
        assigned[v] = -1

    walk(0, 0)
    if best == n + 1:
        return None
    return best


# ---------------------------------------------------------------------------
# deletion stability scans
# ---------------------------------------------------------------------------


def _independent(rows, mask):
    return all(rows[v] & mask == 0 for v in _bits(mask))


def stability_values(n, rows, chi):
    """(vs, ivs): least deletion-set sizes lowering the chromatic number by one.

    vs ranges over all vertex sets, ivs over independent sets only.  Assumes
    chi >= 1; always terminates because deleting a minimum color class of an
    optimal coloring lowers the chromatic number by exactly one.
    """
    k = chi - 1
    vs = 0
    for s in range(1, n + 1):
        for mask in _subsets_of_size(n, s):
            if vs and not _independent(rows, mask):
                continue
            if _colorable_excluding(n, rows, mask, k):
                if not vs:
                    vs = s
                if _independent(rows, mask):
                    return vs, s
    raise AssertionError("no deletion set found; chi inconsistent")


def stability_witnesses(n, rows, chi, independent_only):
    """(value, masks): least size and every deletion set of that size.

    With independent_only, only independent sets count.  Witness masks come
    back in ascending numeric order.  Each witness is re-checked to lower the
    chromatic number by exactly one.
    """
    k = chi - 1
    for s in range(1, n + 1):
        hits = []
        for mask in _subsets_of_size(n, s):
            if independent_only and not _independent(rows, mask):
                continue
            if _colorable_excluding(n, rows, mask, k):
                hits.append(mask)
        if hits:
            for mask in hits:
                if k > 0 and _colorable_excluding(n, rows, mask, k - 1):
                    raise AssertionError(
                        "deletion lowered the chromatic number by more than one"
                    )
            return s, tuple(hits)
    raise AssertionError("no deletion set found; chi inconsistent")


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


def _refine(n, rows, colors):
    """Equitable refinement of a coloring; deterministic cell order."""
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            neigh = sorted(colors[u] for u in _bits(rows[v]))
            sigs.append((colors[v], neigh))
        order = sorted(range(n), key=lambda v: sigs[v])
        new = [0] * n
        c = -1
        prev = None
        for v in order:
            if sigs[v] != prev:
                c += 1
                prev = sigs[v]
            new[v] = c
        colors = new
        if c + 1 == ncolors or c + 1 == n:
            return colors
        ncolors = c + 1


class _UnionFind:
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
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def canon_raw(n, rows):
    """Canonical labeling by partition refinement plus full backtracking.

    Returns (perm, aut_order, gens, orbits):
      perm      -- vertex -> canonical position; the labeling minimizing the
                   relabeled row-bitmask tuple over the whole search tree
      aut_order -- exact automorphism group order (count of leaves matching
                   the canonical labeling)
      gens      -- automorphisms discovered while searching that connected
                   previously separate vertex orbits
      orbits    -- vertex -> smallest vertex of its automorphism orbit
    """
    if n == 0:
        return (), 1, (), ()
    best_rows = None
    best_perm = None
    best_inv = None
    count = 0
    uf = _UnionFind(n)
    gens = []

    def leaf(colors):
        nonlocal best_rows, best_perm, best_inv, count
        crows = [0] * n
        for v in range(n):
            pv = colors[v]
            for u in _bits(rows[v]):
                crows[pv] |= 1 << colors[u]
        if best_rows is None or crows < best_rows:
            best_rows = crows
            best_perm = list(colors)
            best_inv = [0] * n
            for v in range(n):
                best_inv[colors[v]] = v
            count = 1
        elif crows == best_rows:
            count += 1
            alpha = tuple(best_inv[colors[v]] for v in range(n))
            merged = False
            for v in range(n):
                if uf.union(v, alpha[v]):
                    merged = True
            if merged:
                gens.append(alpha)

    def search(colors):
        cell_size = [0] * n
        for c in colors:
            cell_size[c] += 1
        target = -1
        largest = 1
        for c in range(n):
            if cell_size[c] > largest:
                largest = cell_size[c]
                target = c
        if target < 0:
            leaf(colors)
            return
        members = [v for v in range(n) if colors[v] == target]
        for w in members:
            child = [2 * c for c in colors]
            for u in members:
                if u != w:
                    child[u] += 1
            search(_refine(n, rows, child))

    search(_refine(n, rows, [0] * n))
    orbits = tuple(uf.find(v) for v in range(n))
    return tuple(best_perm), count, tuple(gens), orbits
