# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; same functions and same outputs as chromastab.kernels.pure."""

from libc.string cimport memcpy

cdef extern from *:
    """
    #define POPCNT64(x) __builtin_popcountll((unsigned long long)(x))
    """
    int POPCNT64(unsigned long long) nogil

ctypedef unsigned long long u64

BACKEND = "compiled"

DEF MAXN = 64


# ---------------------------------------------------------------------------
# coloring
# ---------------------------------------------------------------------------


cdef int _load(n, rows, u64 *adj) except -1:
    cdef int nn = n
    cdef int i
    if nn < 0 or nn > MAXN:
        raise ValueError("vertex count outside 0..64")
    for i in range(nn):
        adj[i] = rows[i]
    return nn


cdef void _active_order(int n, u64 *adj, u64 active, int *order, int *count) noexcept:
    """Active vertices by descending degree within the active set, then index."""
    cdef int c = 0, i, j, v, dv
    cdef int deg[MAXN]
    for v in range(n):
        if (active >> v) & 1:
            dv = POPCNT64(adj[v] & active)
            i = c
            while i > 0 and (deg[i - 1] < dv):
                order[i] = order[i - 1]
                deg[i] = deg[i - 1]
                i -= 1
            order[i] = v
            deg[i] = dv
            c += 1
    count[0] = c


cdef bint _two_colorable(int n, u64 *adj, u64 active) noexcept:
    cdef int side[MAXN]
    cdef int stack[MAXN]
    cdef int top, v, u, start
    for v in range(n):
        side[v] = -1
    for start in range(n):
        if not ((active >> start) & 1) or side[start] >= 0:
            continue
        side[start] = 0
        stack[0] = start
        top = 1
        while top:
            top -= 1
            v = stack[top]
            for u in range(n):
                if ((adj[v] & active) >> u) & 1:
                    if side[u] < 0:
                        side[u] = side[v] ^ 1
                        stack[top] = u
                        top += 1
                    elif side[u] == side[v]:
                        return False
    return True


cdef int _color_rec(int idx, int norder, int *order, int n, u64 *adj, u64 active,
                    int k, int *colors, int used) noexcept:
    if idx == norder:
        return 1
    cdef int v = order[idx]
    cdef u64 forb = 0
    cdef u64 neigh = adj[v] & active
    cdef int u, c, limit
    for u in range(n):
        if (neigh >> u) & 1 and colors[u] >= 0:
            forb |= (<u64>1) << colors[u]
    limit = used + 1
    if limit > k:
        limit = k
    for c in range(limit):
        if (forb >> c) & 1:
            continue
        colors[v] = c
        if _color_rec(idx + 1, norder, order, n, adj, active, k, colors,
                      used + 1 if c == used else used):
            return 1
    colors[v] = -1
    return 0


cdef bint _colorable_excluding_c(int n, u64 *adj, u64 excluded, int k) noexcept:
    cdef u64 active = 0
    cdef int v, norder
    cdef int order[MAXN]
    cdef int colors[MAXN]
    if n:
        active = (((<u64>1) << (n - 1)) << 1) - 1
        active &= ~excluded
    if active == 0:
        return True
    if k <= 0:
        return False
    if k == 1:
        for v in range(n):
            if (active >> v) & 1 and (adj[v] & active):
                return False
        return True
    if k == 2:
        return _two_colorable(n, adj, active)
    _active_order(n, adj, active, order, &norder)
    for v in range(n):
        colors[v] = -1
    return _color_rec(0, norder, order, n, adj, active, k, colors, 0) != 0


def deletion_colorable(n, rows, excluded, k):
    """True if the graph minus the `excluded` vertex mask is k-colorable."""
    cdef u64 adj[MAXN]
    cdef int nn = _load(n, rows, adj)
    return bool(_colorable_excluding_c(nn, adj, <u64>excluded, <int>k))


def color_graph(n, rows, k):
    """A proper coloring with at most k colors, or None (see the pure twin)."""
    cdef u64 adj[MAXN]
    cdef int order[MAXN]
    cdef int colors[MAXN]
    cdef int nn = _load(n, rows, adj)
    cdef int kk = k
    cdef int norder, v
    cdef u64 active
    if nn == 0:
        return ()
    if kk <= 0:
        return None
    active = (((<u64>1) << (nn - 1)) << 1) - 1
    _active_order(nn, adj, active, order, &norder)
    for v in range(nn):
        colors[v] = -1
    if not _color_rec(0, norder, order, nn, adj, active, kk, colors, 0):
        return None
    return tuple(colors[v] for v in range(nn))


cdef int _greedy_clique_c(int n, u64 *adj) noexcept:
    cdef int order[MAXN]
    cdef int norder, i, v
    cdef u64 active, clique = 0
    if n == 0:
        return 0
    active = (((<u64>1) << (n - 1)) << 1) - 1
    _active_order(n, adj, active, order, &norder)
    for i in range(norder):
        v = order[i]
        if (adj[v] & clique) == clique:
            clique |= (<u64>1) << v
    return POPCNT64(clique)


def greedy_clique_bound(n, rows):
    cdef u64 adj[MAXN]
    cdef int nn = _load(n, rows, adj)
    return _greedy_clique_c(nn, adj)


cdef int _chromatic_c(int n, u64 *adj) noexcept:
    cdef int k, lb, v
    cdef bint any_edge = False
    if n == 0:
        return 0
    for v in range(n):
        if adj[v]:
            any_edge = True
            break
    if not any_edge:
        return 1
    lb = _greedy_clique_c(n, adj)
    if lb < 2:
        lb = 2
    for k in range(lb, n + 1):
        if _colorable_excluding_c(n, adj, 0, k):
            return k
    return n


def chromatic_number(n, rows):
    cdef u64 adj[MAXN]
    cdef int nn = _load(n, rows, adj)
    return _chromatic_c(nn, adj)


cdef struct MccState:
    int n
    int k
    int best
    int sizes[MAXN]
    int assigned[MAXN]


cdef void _mcc_rec(MccState *st, u64 *adj, int v, int used) noexcept:
    cdef int c, u, limit, smallest
    cdef u64 forb = 0, neigh
    if used == st.k:
        smallest = st.sizes[0]
        for c in range(1, st.k):
            if st.sizes[c] < smallest:
                smallest = st.sizes[c]
        if smallest >= st.best:
            return
        if v == st.n:
            st.best = smallest
            return
    elif v == st.n:
        return
    if st.k - used > st.n - v:
        return
    neigh = adj[v]
    for u in range(v):
        if (neigh >> u) & 1:
            forb |= (<u64>1) << st.assigned[u]
    limit = used + 1
    if limit > st.k:
        limit = st.k
    for c in range(limit):
        if (forb >> c) & 1:
            continue
        st.assigned[v] = c
        st.sizes[c] += 1
        _mcc_rec(st, adj, v + 1, used + 1 if c == used else used)
        st.sizes[c] -= 1
    st.assigned[v] = -1


def min_color_class_size(n, rows, k):
    """Minimum color-class size over all proper k-colorings, or None."""
    cdef u64 adj[MAXN]
    cdef MccState st
    cdef int nn = _load(n, rows, adj)
    cdef int v
    if nn == 0 or <int>k <= 0:
        return None
    st.n = nn
    st.k = k
    st.best = nn + 1
    for v in range(nn):
        st.sizes[v] = 0
        st.assigned[v] = -1
    _mcc_rec(&st, adj, 0, 0)
    if st.best == nn + 1:
        return None
    return st.best


# ---------------------------------------------------------------------------
# deletion stability scans
# ---------------------------------------------------------------------------


cdef inline bint _independent_c(int n, u64 *adj, u64 mask) noexcept:
    cdef int v
    cdef u64 m = mask
    while m:
        v = POPCNT64((m & (~m + 1)) - 1)
        if adj[v] & mask:
            return False
        m &= m - 1
    return True


cdef inline u64 _gosper_next(u64 m) noexcept:
    cdef u64 c = m & (~m + 1)
    cdef u64 r = m + c
    return (((r ^ m) >> 2) / c) | r


def stability_values(n, rows, chi):
    """(vs, ivs) exactly as the pure kernel computes them."""
    cdef u64 adj[MAXN]
    cdef int nn = _load(n, rows, adj)
    cdef int k = <int>chi - 1
    cdef int vs = 0, s
    cdef u64 mask, top
    if nn > 62:
        raise ValueError("stability scans support at most 62 vertices")
    top = (<u64>1) << nn
    for s in range(1, nn + 1):
        mask = ((<u64>1) << s) - 1
        while mask < top:
            if vs and not _independent_c(nn, adj, mask):
                mask = _gosper_next(mask)
                continue
            if _colorable_excluding_c(nn, adj, mask, k):
                if not vs:
                    vs = s
                if _independent_c(nn, adj, mask):
                    return vs, s
            mask = _gosper_next(mask)
    raise AssertionError("no deletion set found; chi inconsistent")


def stability_witnesses(n, rows, chi, independent_only):
    """(value, masks) exactly as the pure kernel computes them."""
    cdef u64 adj[MAXN]
    cdef int nn = _load(n, rows, adj)
    cdef int k = <int>chi - 1
    cdef bint indep = bool(independent_only)
    cdef int s
    cdef u64 mask, top
    if nn > 62:
        raise ValueError("stability scans support at most 62 vertices")
    top = (<u64>1) << nn
    hits = []
    for s in range(1, nn + 1):
        del hits[:]
        mask = ((<u64>1) << s) - 1
        while mask < top:
            if indep and not _independent_c(nn, adj, mask):
                mask = _gosper_next(mask)
                continue
            if _colorable_excluding_c(nn, adj, mask, k):
                hits.append(<object>mask)
            mask = _gosper_next(mask)
        if hits:
            for m in hits:
                if k > 0 and _colorable_excluding_c(nn, adj, <u64>m, k - 1):
                    raise AssertionError(
                        "deletion lowered the chromatic number by more than one"
                    )
            return s, tuple(hits)
    raise AssertionError("no deletion set found; chi inconsistent")


# ---------------------------------------------------------------------------
# canonical labeling
# ---------------------------------------------------------------------------


cdef class _Canon:
    cdef int n
    cdef u64 adj[MAXN]
    cdef int best_perm[MAXN]
    cdef int best_inv[MAXN]
    cdef u64 best_rows[MAXN]
    cdef bint has_best
    cdef unsigned long long count
    cdef int uf[MAXN]
    cdef list gens
    # refinement work buffers
    cdef int sig[MAXN][MAXN + 1]
    cdef int siglen[MAXN]
    cdef int order[MAXN]

    cdef int find(self, int x) noexcept:
        cdef int root = x, nxt
        while self.uf[root] != root:
            root = self.uf[root]
        while self.uf[x] != root:
            nxt = self.uf[x]
            self.uf[x] = root
            x = nxt
        return root

    cdef bint union_(self, int a, int b) noexcept:
        cdef int ra = self.find(a), rb = self.find(b), t
        if ra == rb:
            return False
        if rb < ra:
            t = ra
            ra = rb
            rb = t
        self.uf[rb] = ra
        return True

    cdef int cmp_sig(self, int a, int b) noexcept:
        cdef int la = self.siglen[a], lb = self.siglen[b]
        cdef int m = la if la < lb else lb
        cdef int i
        for i in range(m):
            if self.sig[a][i] != self.sig[b][i]:
                return -1 if self.sig[a][i] < self.sig[b][i] else 1
        if la != lb:
            return -1 if la < lb else 1
        return 0

    cdef void refine(self, int *colors) noexcept:
        cdef int n = self.n
        cdef int ncolors = 0, v, u, i, j, c, ln, x
        cdef u64 neigh
        cdef int newc[MAXN]
        cdef bint seen[2 * MAXN]
        for v in range(2 * n):
            seen[v] = False
        for v in range(n):
            if not seen[colors[v]]:
                seen[colors[v]] = True
                ncolors += 1
        while True:
            for v in range(n):
                self.sig[v][0] = colors[v]
                ln = 1
                neigh = self.adj[v]
                for u in range(n):
                    if (neigh >> u) & 1:
                        x = colors[u]
                        i = ln
                        while i > 1 and self.sig[v][i - 1] > x:
                            self.sig[v][i] = self.sig[v][i - 1]
                            i -= 1
                        self.sig[v][i] = x
                        ln += 1
                self.siglen[v] = ln
            for i in range(n):
                v = i
                j = i
                while j > 0 and self.cmp_sig(self.order[j - 1], v) > 0:
                    self.order[j] = self.order[j - 1]
                    j -= 1
                self.order[j] = v
            c = -1
            for i in range(n):
                v = self.order[i]
                if i == 0 or self.cmp_sig(self.order[i - 1], v) != 0:
                    c += 1
                newc[v] = c
            for v in range(n):
                colors[v] = newc[v]
            if c + 1 == ncolors or c + 1 == n:
                return
            ncolors = c + 1

    cdef void leaf(self, int *colors):
        cdef int n = self.n
        cdef u64 crows[MAXN]
        cdef int v, u, pv, cmp_
        cdef u64 neigh
        cdef int alpha[MAXN]
        cdef bint merged
        for v in range(n):
            crows[v] = 0
        for v in range(n):
            pv = colors[v]
            neigh = self.adj[v]
            for u in range(n):
                if (neigh >> u) & 1:
                    crows[pv] |= (<u64>1) << colors[u]
        if self.has_best:
            cmp_ = 0
            for v in range(n):
                if crows[v] != self.best_rows[v]:
                    cmp_ = -1 if crows[v] < self.best_rows[v] else 1
                    break
        else:
            cmp_ = -1
        if cmp_ < 0:
            memcpy(self.best_rows, crows, n * sizeof(u64))
            for v in range(n):
                self.best_perm[v] = colors[v]
                self.best_inv[colors[v]] = v
            self.has_best = True
            self.count = 1
        elif cmp_ == 0:
            self.count += 1
            merged = False
            for v in range(n):
                alpha[v] = self.best_inv[colors[v]]
            for v in range(n):
                if self.union_(v, alpha[v]):
                    merged = True
            if merged:
                self.gens.append(tuple(alpha[v] for v in range(n)))

    cdef void search(self, int *colors):
        cdef int n = self.n
        cdef int cell_size[MAXN]
        cdef int child[MAXN]
        cdef int members[MAXN]
        cdef int nmembers = 0
        cdef int c, v, u, target = -1, largest = 1, i, w
        for c in range(n):
            cell_size[c] = 0
        for v in range(n):
            cell_size[colors[v]] += 1
        for c in range(n):
            if cell_size[c] > largest:
                largest = cell_size[c]
                target = c
        if target < 0:
            self.leaf(colors)
            return
        for v in range(n):
            if colors[v] == target:
                members[nmembers] = v
                nmembers += 1
        for i in range(nmembers):
            w = members[i]
            for u in range(n):
                child[u] = 2 * colors[u]
            for u in range(nmembers):
                if members[u] != w:
                    child[members[u]] += 1
            self.refine(child)
            self.search(child)

    cdef run(self, int n, rows):
        cdef int colors[MAXN]
        cdef int v
        self.n = n
        for v in range(n):
            self.adj[v] = rows[v]
            self.uf[v] = v
        self.has_best = False
        self.count = 0
        self.gens = []
        for v in range(n):
            colors[v] = 0
        self.refine(colors)
        self.search(colors)
        perm = tuple(self.best_perm[v] for v in range(n))
        orbits = tuple(self.find(v) for v in range(n))
        return perm, int(self.count), tuple(self.gens), orbits


def canon_raw(n, rows):
    """Canonical labeling data; see the pure twin for the full contract."""
    cdef int nn = n
    if nn == 0:
        return (), 1, (), ()
    if nn < 0 or nn > MAXN:
        raise ValueError("vertex count outside 0..64")
    solver = _Canon()
    return solver.run(nn, rows)
