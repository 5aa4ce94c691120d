"""Hot loops behind the graph and table invariants.

Every kernel exists twice: a numba-jitted implementation over bit-packed
uint64 adjacency rows, and a python/numpy fallback. The two are written
against the same ordering rules, so results (including witnesses and search
outcomes) are identical; only speed differs. noncyc._backend resolves which
one runs, set_backend() switches at runtime.

Kernels: exhaustive associativity audit, all-pairs BFS distances, maximum
clique (branch and bound with greedy-coloring bounds), Hamiltonian-cycle
backtracking, and bounded dominating-set search.
"""

from __future__ import annotations

import itertools

import numpy as np

from ._backend import node_budget, resolve_backend

_ACTIVE = resolve_backend()

_U0 = np.uint64(0)
_U1 = np.uint64(1)


def active_backend() -> str:
    return _ACTIVE


def set_backend(choice: str) -> str:
    """Switch kernel backend; returns the previous one (so callers can restore)."""
    global _ACTIVE
    previous = _ACTIVE
    _ACTIVE = resolve_backend(choice)
    return previous


# ---------------------------------------------------------------------------
# bitset packing


def pack_rows(mat: np.ndarray) -> np.ndarray:
    """Pack a bool matrix into uint64 words, bit b of word w = column 64w+b."""
    m, n = mat.shape
    words = max(1, (n + 63) // 64)
    out = np.zeros((m, words), np.uint64)
    rows, cols = np.nonzero(mat)
    if rows.size:
        np.bitwise_or.at(
            out, (rows, cols >> 6), _U1 << (cols & 63).astype(np.uint64)
        )
    return out


def full_words(n: int) -> np.ndarray:
    """All-ones bitset over n positions (tail bits zero)."""
    words = max(1, (n + 63) // 64)
    out = np.full(words, ~_U0, np.uint64)
    tail = n & 63
    if tail:
        out[-1] = (_U1 << np.uint64(tail)) - _U1
    if n == 0:
        out[0] = _U0
    return out


def _mask_rows(mat: np.ndarray) -> list[int]:
    """Rows of a bool matrix as python-int bitmasks."""
    out = []
    for row in mat:
        packed = np.packbits(row, bitorder="little").tobytes()
        out.append(int.from_bytes(packed, "little"))
    return out


# ---------------------------------------------------------------------------
# numba sources (compiled lazily, cached on disk)


def _assoc_src(table):
    n = table.shape[0]
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return np.int64(i) * n * n + np.int64(j) * n + np.int64(k)
    return np.int64(-1)


def _apd_src(adjw, m):
    words = adjw.shape[1]
    one = np.uint64(1)
    zero = np.uint64(0)
    dist = np.full((m, m), -1, np.int32)
    frontier = np.zeros(words, np.uint64)
    visited = np.zeros(words, np.uint64)
    nxt = np.zeros(words, np.uint64)
    for s in range(m):
        for w in range(words):
            frontier[w] = zero
            visited[w] = zero
        frontier[s >> 6] = one << np.uint64(s & 63)
        visited[s >> 6] = frontier[s >> 6]
        dist[s, s] = 0
        level = 0
        while True:
            for w in range(words):
                nxt[w] = zero
            for w in range(words):
                word = frontier[w]
                if word == zero:
                    continue
                base = w << 6
                for b in range(64):
                    if (word >> np.uint64(b)) & one:
                        row = adjw[base + b]
                        for t in range(words):
                            nxt[t] |= row[t]
            level += 1
            grew = False
            for w in range(words):
                new = nxt[w] & ~visited[w]
                nxt[w] = new
                visited[w] |= new
                if new != zero:
                    grew = True
            if not grew:
                break
            for w in range(words):
                word = nxt[w]
                if word == zero:
                    continue
                base = w << 6
                for b in range(64):
                    if (word >> np.uint64(b)) & one:
                        dist[s, base + b] = level
            for w in range(words):
                frontier[w] = nxt[w]
    return dist


def _clique_src(adjw, m, budget, stop_at):
    words = adjw.shape[1]
    one = np.uint64(1)
    zero = np.uint64(0)
    best_size = 0
    best = np.zeros(m, np.int32)
    cur = np.zeros(m + 1, np.int32)
    cand = np.zeros((m + 2, words), np.uint64)
    verts = np.zeros((m + 1, m), np.int32)
    cols = np.zeros((m + 1, m), np.int32)
    pos = np.zeros(m + 1, np.int32)
    scratch = np.zeros(words, np.uint64)
    avail = np.zeros(words, np.uint64)

    for v in range(m):
        cand[0, v >> 6] |= one << np.uint64(v & 63)
    d = 0
    fresh = True
    nodes = np.int64(1)
    completed = True
    target = False
    while d >= 0:
        if fresh:
            # greedy coloring of cand[d]; verts sorted by (color, vertex id)
            c = 0
            for w in range(words):
                scratch[w] = cand[d, w]
            color = 0
            while True:
                has = False
                for w in range(words):
                    avail[w] = scratch[w]
                    if avail[w] != zero:
                        has = True
                if not has:
                    break
                color += 1
                w = 0
                while w < words:
                    word = avail[w]
                    if word == zero:
                        w += 1
                        continue
                    b = 0
                    while ((word >> np.uint64(b)) & one) == zero:
                        b += 1
                    v = (w << 6) + b
                    mask = one << np.uint64(b)
                    avail[w] &= ~mask
                    scratch[w] &= ~mask
                    verts[d, c] = v
                    cols[d, c] = color
                    c += 1
                    row = adjw[v]
                    for t in range(words):
                        avail[t] &= ~row[t]
            pos[d] = c - 1
            fresh = False
        i = pos[d]
        if i < 0 or d + cols[d, i] <= best_size:
            d -= 1
            if d >= 0:
                v = cur[d]
                cand[d, v >> 6] &= ~(one << np.uint64(v & 63))
                pos[d] -= 1
            continue
        v = verts[d, i]
        anyc = False
        for w in range(words):
            cw = cand[d, w] & adjw[v, w]
            cand[d + 1, w] = cw
            if cw != zero:
                anyc = True
        if not anyc:
            if d + 1 > best_size:
                best_size = d + 1
                for t in range(d):
                    best[t] = cur[t]
                best[d] = v
                if stop_at > 0 and best_size >= stop_at:
                    target = True
                    break
            cand[d, v >> 6] &= ~(one << np.uint64(v & 63))
            pos[d] -= 1
            continue
        nodes += 1
        if nodes > budget:
            completed = False
            break
        cur[d] = v
        d += 1
        fresh = True
    return best_size, best, nodes, completed, target


def _ham_src(indptr, indices, adjw, m, budget):
    one = np.uint64(1)
    path = np.zeros(m, np.int32)
    choice = np.zeros(m + 1, np.int32)
    visited = np.zeros(m, np.uint8)
    avail = np.zeros(m, np.int32)
    for v in range(m):
        avail[v] = indptr[v + 1] - indptr[v]
    path[0] = 0
    visited[0] = 1
    zcnt = 0
    for e in range(indptr[0], indptr[1]):
        u = indices[e]
        avail[u] -= 1
        if avail[u] == 0 and visited[u] == 0:
            zcnt += 1
    d = 1
    choice[1] = 0
    nodes = np.int64(0)
    status = 0
    while True:
        if d == 0:
            status = 0
            break
        if d == m:
            last = path[m - 1]
            if (adjw[last, 0] & one) != np.uint64(0):
                status = 1
                break
            d -= 1
            v = path[d]
            for e in range(indptr[v], indptr[v + 1]):
                u = indices[e]
                if avail[u] == 0 and visited[u] == 0:
                    zcnt -= 1
                avail[u] += 1
            visited[v] = 0
            if avail[v] == 0:
                zcnt += 1
            continue
        prev = path[d - 1]
        found = -1
        v = choice[d]
        while v < m:
            if visited[v] == 0 and ((adjw[prev, v >> 6] >> np.uint64(v & 63)) & one):
                found = v
                break
            v += 1
        if found < 0:
            d -= 1
            if d == 0:
                status = 0
                break
            v = path[d]
            for e in range(indptr[v], indptr[v + 1]):
                u = indices[e]
                if avail[u] == 0 and visited[u] == 0:
                    zcnt -= 1
                avail[u] += 1
            visited[v] = 0
            if avail[v] == 0:
                zcnt += 1
            continue
        nodes += 1
        if nodes > budget:
            status = -1
            break
        choice[d] = found + 1
        path[d] = found
        visited[found] = 1
        if avail[found] == 0:
            zcnt -= 1
        for e in range(indptr[found], indptr[found + 1]):
            u = indices[e]
            avail[u] -= 1
            if avail[u] == 0 and visited[u] == 0:
                zcnt += 1
        remaining = m - d - 1
        if remaining >= 2 and zcnt >= 1:
            # some unvisited vertex lost its last unvisited neighbor: dead end
            for e in range(indptr[found], indptr[found + 1]):
                u = indices[e]
                if avail[u] == 0 and visited[u] == 0:
                    zcnt -= 1
                avail[u] += 1
            visited[found] = 0
            if avail[found] == 0:
                zcnt += 1
            continue
        d += 1
        choice[d] = 0
    return status, path, nodes


def _dom_src(nbrw, others, basecov, full, r):
    o = others.shape[0]
    words = full.shape[0]
    out = np.full(r, -1, np.int32)
    if r > o:
        return out
    idx = np.zeros(r, np.int32)
    for t in range(r):
        idx[t] = t
    pcov = np.zeros((r + 1, words), np.uint64)
    for w in range(words):
        pcov[0, w] = basecov[w]
    lowest = 0
    while True:
        for t in range(lowest, r):
            row = nbrw[others[idx[t]]]
            for w in range(words):
                pcov[t + 1, w] = pcov[t, w] | row[w]
        ok = True
        for w in range(words):
            if pcov[r, w] != full[w]:
                ok = False
                break
        if ok:
            for t in range(r):
                out[t] = others[idx[t]]
            return out
        t = r - 1
        while t >= 0 and idx[t] == o - r + t:
            t -= 1
        if t < 0:
            return out
        idx[t] += 1
        for s in range(t + 1, r):
            idx[s] = idx[s - 1] + 1
        lowest = t
    return out


_NB_CACHE: dict[str, object] = {}
_NB_SOURCES = {
    "assoc": _assoc_src,
    "apd": _apd_src,
    "clique": _clique_src,
    "ham": _ham_src,
    "dom": _dom_src,
}


def _jit(name: str):
    fn = _NB_CACHE.get(name)
    if fn is None:
        from numba import njit

        fn = njit(cache=True)(_NB_SOURCES[name])
        _NB_CACHE[name] = fn
    return fn


# ---------------------------------------------------------------------------
# python/numpy fallbacks


def _assoc_py(table: np.ndarray) -> int:
    n = table.shape[0]
    for i in range(n):
        left = table[table[i], :]
        right = table[i][table]
        if not np.array_equal(left, right):
            bad = np.argwhere(left != right)
            j, k = int(bad[0][0]), int(bad[0][1])
            return i * n * n + j * n + k
    return -1


def _apd_py(adj: np.ndarray) -> np.ndarray:
    m = adj.shape[0]
    dist = np.full((m, m), -1, np.int32)
    for s in range(m):
        row = dist[s]
        row[s] = 0
        frontier = np.zeros(m, bool)
        frontier[s] = True
        visited = frontier.copy()
        level = 0
        while frontier.any():
            level += 1
            nxt = adj[frontier].any(axis=0) & ~visited
            row[nxt] = level
            visited |= nxt
            frontier = nxt
    return dist


def _clique_py(nbrs: list[int], m: int, budget: int, stop_at: int):
    best_size = 0
    best: list[int] = []
    cur = [0] * (m + 1)
    cand = [0] * (m + 2)
    verts: list[list[int]] = [[] for _ in range(m + 1)]
    cols: list[list[int]] = [[] for _ in range(m + 1)]
    pos = [0] * (m + 1)
    cand[0] = (1 << m) - 1
    d = 0
    fresh = True
    nodes = 1
    completed = True
    target = False
    while d >= 0:
        if fresh:
            vl: list[int] = []
            cl: list[int] = []
            scratch = cand[d]
            color = 0
            while scratch:
                color += 1
                avail = scratch
                while avail:
                    low = avail & -avail
                    v = low.bit_length() - 1
                    avail &= ~low
                    scratch &= ~low
                    vl.append(v)
                    cl.append(color)
                    avail &= ~nbrs[v]
            verts[d] = vl
            cols[d] = cl
            pos[d] = len(vl) - 1
            fresh = False
        i = pos[d]
        if i < 0 or d + cols[d][i] <= best_size:
            d -= 1
            if d >= 0:
                v = cur[d]
                cand[d] &= ~(1 << v)
                pos[d] -= 1
            continue
        v = verts[d][i]
        child = cand[d] & nbrs[v]
        if not child:
            if d + 1 > best_size:
                best_size = d + 1
                best = cur[:d] + [v]
                if stop_at > 0 and best_size >= stop_at:
                    target = True
                    break
            cand[d] &= ~(1 << v)
            pos[d] -= 1
            continue
        nodes += 1
        if nodes > budget:
            completed = False
            break
        cand[d + 1] = child
        cur[d] = v
        d += 1
        fresh = True
    return best_size, best, nodes, completed, target


def _ham_py(nbr_lists: list[list[int]], masks: list[int], m: int, budget: int):
    path = [0] * m
    choice = [0] * (m + 1)
    visited = [False] * m
    avail = [len(nbr_lists[v]) for v in range(m)]
    visited[0] = True
    zcnt = 0
    for u in nbr_lists[0]:
        avail[u] -= 1
        if avail[u] == 0 and not visited[u]:
            zcnt += 1
    d = 1
    choice[1] = 0
    nodes = 0

    def unvisit(v: int) -> None:
        nonlocal zcnt
        for u in nbr_lists[v]:
            if avail[u] == 0 and not visited[u]:
                zcnt -= 1
            avail[u] += 1
        visited[v] = False
        if avail[v] == 0:
            zcnt += 1

    while True:
        if d == 0:
            return 0, path, nodes
        if d == m:
            if masks[path[m - 1]] & 1:
                return 1, path, nodes
            d -= 1
            unvisit(path[d])
            continue
        prev = path[d - 1]
        found = -1
        pm = masks[prev]
        for v in range(choice[d], m):
            if not visited[v] and (pm >> v) & 1:
                found = v
                break
        if found < 0:
            d -= 1
            if d == 0:
                return 0, path, nodes
            unvisit(path[d])
            continue
        nodes += 1
        if nodes > budget:
            return -1, path, nodes
        choice[d] = found + 1
        path[d] = found
        visited[found] = True
        if avail[found] == 0:
            zcnt -= 1
        for u in nbr_lists[found]:
            avail[u] -= 1
            if avail[u] == 0 and not visited[u]:
                zcnt += 1
        remaining = m - d - 1
        if remaining >= 2 and zcnt >= 1:
            unvisit(found)
            continue
        d += 1
        choice[d] = 0


def _dom_py(nbr_masks: list[int], others: list[int], basecov: int, full: int, r: int):
    for combo in itertools.combinations(others, r):
        cov = basecov
        for v in combo:
            cov |= nbr_masks[v]
        if cov == full:
            return list(combo)
    return None


# ---------------------------------------------------------------------------
# public entry points


def associativity_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """Exhaustive O(n^3) associativity audit; first violating triple or None."""
    n = table.shape[0]
    if n == 0:
        return None
    if _ACTIVE == "numba":
        code = int(_jit("assoc")(np.ascontiguousarray(table, np.int32)))
    else:
        code = _assoc_py(table)
    if code < 0:
        return None
    i, rest = divmod(code, n * n)
    j, k = divmod(rest, n)
    return (i, j, k)


def all_pairs_dist(adj: np.ndarray) -> np.ndarray:
    """BFS distance matrix, -1 for unreachable pairs."""
    m = adj.shape[0]
    if m == 0:
        return np.zeros((0, 0), np.int32)
    if _ACTIVE == "numba":
        return _jit("apd")(pack_rows(adj), m)
    return _apd_py(adj)


def max_clique(
    adj: np.ndarray, budget: int | None = None, stop_at: int = 0
) -> tuple[int, tuple[int, ...], int, bool, bool]:
    """Maximum clique by branch and bound with greedy-coloring bounds.

    Vertices are searched in descending-degree order (index tie-break), so the
    witness is reproducible across runs and backends. Returns (size, witness
    sorted ascending in the caller's ids, nodes, completed, target_hit).
    completed=False means the node budget ran out and size/witness are only
    the best found; target_hit=True means stop_at was reached and the search
    stopped early on purpose.
    """
    m = adj.shape[0]
    if budget is None:
        budget = node_budget()
    if m == 0:
        return 0, (), 1, True, False
    deg = adj.sum(axis=1)
    order = sorted(range(m), key=lambda v: (-int(deg[v]), v))
    radj = adj[np.ix_(order, order)]
    if _ACTIVE == "numba":
        size, best, nodes, completed, target = _jit("clique")(
            pack_rows(radj), m, np.int64(budget), np.int64(stop_at)
        )
        size = int(size)
        chosen = [int(best[t]) for t in range(size)]
        nodes = int(nodes)
        completed = bool(completed)
        target = bool(target)
    else:
        size, chosen, nodes, completed, target = _clique_py(
            _mask_rows(radj), m, budget, stop_at
        )
    witness = tuple(sorted(order[v] for v in chosen))
    return size, witness, nodes, completed, target


def ham_backtrack(
    adj: np.ndarray, budget: int | None = None
) -> tuple[str, tuple[int, ...], int]:
    """Backtracking Hamiltonian-cycle search with a degree-based dead-end prune.

    Vertices are relabeled by ascending degree before the walk starts, so the
    search is anchored at a scarcest vertex and always tries scarce successors
    first. That fail-first order is what keeps graphs with a few degree-2
    bottleneck vertices tractable; the returned cycle uses original labels.
    Returns (status, cycle, nodes) with status in {"found", "none", "timeout"}.
    The caller is expected to have handled m < 3, disconnection, and degree-1
    vertices.
    """
    m = adj.shape[0]
    if budget is None:
        budget = node_budget()
    order = np.argsort(adj.sum(axis=1), kind="stable")
    radj = adj[np.ix_(order, order)]
    if _ACTIVE == "numba":
        indptr = np.zeros(m + 1, np.int32)
        indptr[1:] = np.cumsum(radj.sum(axis=1))
        indices = np.nonzero(radj)[1].astype(np.int32)
        status, path, nodes = _jit("ham")(
            indptr, indices, pack_rows(radj), m, np.int64(budget)
        )
        status = int(status)
        nodes = int(nodes)
    else:
        nbr_lists = [list(np.nonzero(radj[v])[0]) for v in range(m)]
        masks = _mask_rows(radj)
        status, path, nodes = _ham_py(nbr_lists, masks, m, budget)
    if status == 1:
        return "found", tuple(int(order[v]) for v in path), nodes
    if status == 0:
        return "none", (), nodes
    return "timeout", (), nodes


def domination_bounded(
    adj: np.ndarray, cap: int
) -> tuple[int | None, tuple[int, ...]]:
    """Smallest dominating set of size <= cap, by exhaustive search.

    Returns (k, witness) or (None, ()) when every set of size <= cap fails.
    Isolated vertices are forced into the set (nothing else covers them), and
    a coverage bound (cap * max closed-neighborhood size < m) rules out
    hopeless sizes without enumeration; both pruning steps are exact.
    """
    m = adj.shape[0]
    if m == 0:
        return 0, ()
    if cap < 1:
        raise ValueError("domination cap must be >= 1")
    closed = adj.copy()
    np.fill_diagonal(closed, True)
    sizes = closed.sum(axis=1)
    isolated = [int(v) for v in np.nonzero(sizes == 1)[0]]
    if len(isolated) > cap:
        return None, ()
    others = [v for v in range(m) if sizes[v] > 1]
    maxn = int(sizes.max())
    base_needed = len(isolated)
    use_numba = _ACTIVE == "numba"
    if use_numba:
        nbrw = pack_rows(closed)
        full = full_words(m)
        basecov = np.zeros_like(full)
        for v in isolated:
            basecov |= nbrw[v]
        others_arr = np.array(others, np.int32)
    else:
        masks = _mask_rows(closed)
        full_mask = (1 << m) - 1
        basecov_mask = 0
        for v in isolated:
            basecov_mask |= masks[v]
    for k in range(max(base_needed, 1), cap + 1):
        if k * maxn < m:
            continue
        r = k - base_needed
        if r == 0:
            if use_numba:
                if np.array_equal(basecov, full):
                    return k, tuple(sorted(isolated))
            else:
                if basecov_mask == full_mask:
                    return k, tuple(sorted(isolated))
            continue
        if use_numba:
            res = _jit("dom")(nbrw, others_arr, basecov, full, r)
            if res[0] >= 0:
                return k, tuple(sorted(isolated + [int(x) for x in res]))
        else:
            res = _dom_py(masks, others, basecov_mask, full_mask, r)
            if res is not None:
                return k, tuple(sorted(isolated + res))
    return None, ()


def warmup() -> None:
    """Push a toy graph through every kernel so JIT compilation is paid once."""
    adj = np.zeros((5, 5), bool)
    for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]:
        adj[a, b] = adj[b, a] = True
    table = np.array([[(i + j) % 3 for j in range(3)] for i in range(3)], np.int32)
    associativity_violation(table)
    all_pairs_dist(adj)
    max_clique(adj, budget=1000)
    ham_backtrack(adj, budget=1000)
    domination_bounded(adj, 2)
