"""Compiled inner loops.

Every kernel takes adjacency as an ``int64`` array of neighbour bitmasks
(``n <= 62``) or, for matching, a CSR pair ``(indptr, indices)``.  The
public modules wrap these and own all validation.
"""

import numpy as np
from numba import njit

# min_ratio outcome codes
FOUND = 0
EMPTY = 1


@njit(cache=True, inline="always")
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True, inline="always")
def lowbit_index(x):
    i = 0
    while (x & 1) == 0:
        x >>= 1
        i += 1
    return i


@njit(cache=True)
def masks_from_codes(n, start, count):
    """Adjacency masks for edge codes ``start..start+count-1``; bit ``b`` of
    a code is the b-th pair in graph6 column order (0,1),(0,2),(1,2),..."""
    out = np.zeros((count, n), np.int64)
    for g in range(count):
        code = start + g
        b = 0
        for j in range(1, n):
            for i in range(j):
                if (code >> b) & 1:
                    out[g, i] |= np.int64(1) << j
                    out[g, j] |= np.int64(1) << i
                b += 1
    return out


@njit(cache=True)
def min_ratio(adj, n, k, universe, min_size, excluded_count):
    """Minimise |Lambda^k(S)|/|S| over S within ``universe`` with
    |S| >= min_size, skipping S with |Lambda^k(S)| == excluded_count
    (pass -1 to skip nothing).

    Subsets are walked in Gray-code order with per-vertex counters
    |N(v) & S|, so each step touches only the neighbours of the flipped
    vertex.  Ties go to the smallest bitmask.  Returns
    (status, num, den, witness, feasible_count).
    """
    members = np.zeros(64, np.int64)
    m = 0
    u = universe
    while u:
        low = u & -u
        members[m] = lowbit_index(low)
        m += 1
        u ^= low
    cnt = np.zeros(max(n, 1), np.int64)
    s = np.int64(0)
    size = 0
    nlam = 0
    best_p = -1
    best_q = 1
    best_w = np.int64(-1)
    feasible = 0
    for i in range(1, np.int64(1) << m):
        j = lowbit_index(i)
        v = members[j]
        bit = np.int64(1) << v
        a = adj[v]
        if s & bit:
            s ^= bit
            size -= 1
            while a:
                low = a & -a
                w = lowbit_index(low)
                if cnt[w] == k:
                    nlam -= 1
                cnt[w] -= 1
                a ^= low
        else:
            s |= bit
            size += 1
            while a:
                low = a & -a
                w = lowbit_index(low)
                cnt[w] += 1
                if cnt[w] == k:
                    nlam += 1
                a ^= low
        if size < min_size or nlam == excluded_count:
            continue
        feasible += 1
        lhs = nlam * best_q
        rhs = best_p * size
        if best_p < 0 or lhs < rhs or (lhs == rhs and s < best_w):
            best_p = nlam
            best_q = size
            best_w = s
    if best_p < 0:
        return EMPTY, 0, 0, np.int64(-1), feasible
    return FOUND, best_p, best_q, best_w, feasible


@njit(cache=True)
def beta_many(masks, n, k):
    """(num, den) of the k-th binding number for every row; den == 0 marks
    the |G| < k convention."""
    rows = masks.shape[0]
    out = np.zeros((rows, 2), np.int64)
    if n < k:
        return out
    universe = (np.int64(1) << n) - 1
    for r in range(rows):
        status, p, q, w, f = min_ratio(masks[r], n, k, universe, k, n)
        out[r, 0] = p
        out[r, 1] = q
    return out


@njit(cache=True, inline="always")
def component_of(adj, start_bit, allowed):
    comp = start_bit
    frontier = start_bit
    while frontier:
        nxt = np.int64(0)
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[lowbit_index(low)]
            f ^= low
        frontier = nxt & allowed & ~comp
        comp |= frontier
    return comp


@njit(cache=True)
def count_components(adj, allowed):
    """(components, odd-order components) of the subgraph induced on
    ``allowed``."""
    c = 0
    odd = 0
    rem = allowed
    while rem:
        comp = component_of(adj, rem & -rem, rem)
        c += 1
        if popcount(comp) & 1:
            odd += 1
        rem &= ~comp
    return c, odd


@njit(cache=True)
def toughness_scan(adj, n):
    """min |S|/c(G-S) over S with c(G-S) > 1; (num, den, witness), den == 0
    if no such S exists."""
    full = (np.int64(1) << n) - 1
    bp = -1
    bq = 1
    bw = np.int64(-1)
    for s in range(full + 1):
        c, odd = count_components(adj, full & ~s)
        if c <= 1:
            continue
        size = popcount(s)
        if bp < 0 or size * bq < bp * c:
            bp = size
            bq = c
            bw = s
    if bp < 0:
        return 0, 0, np.int64(-1)
    return bp, bq, bw


@njit(cache=True)
def toughness_many(masks, n):
    rows = masks.shape[0]
    out = np.zeros((rows, 2), np.int64)
    for r in range(rows):
        p, q, w = toughness_scan(masks[r], n)
        out[r, 0] = p
        out[r, 1] = q
    return out


@njit(cache=True)
def tutte_scan(adj, n, slack, skip_empty):
    """Smallest mask U with q(U) > |U| - slack, or -1.  slack=0 is the
    perfect-matching condition, slack=1 with skip_empty the hypomatchable
    one."""
    full = (np.int64(1) << n) - 1
    start = 1 if skip_empty else 0
    for u in range(start, full + 1):
        c, odd = count_components(adj, full & ~u)
        if odd > popcount(u) - slack:
            return np.int64(u)
    return np.int64(-1)


@njit(cache=True)
def deficiency(adj, n, k, s, t):
    """Tutte k-factor deficiency of the ordered partition (S, T, rest)."""
    full = (np.int64(1) << n) - 1
    u = full & ~(s | t)
    total = k * (popcount(s) - popcount(t))
    tt = t
    while tt:
        low = tt & -tt
        total += popcount(adj[lowbit_index(low)] & ~s)
        tt ^= low
    rem = u
    while rem:
        comp = component_of(adj, rem & -rem, rem)
        rem &= ~comp
        par = k * popcount(comp)
        cc = comp
        while cc:
            low = cc & -cc
            par += popcount(adj[lowbit_index(low)] & t)
            cc ^= low
        if par & 1:
            total -= 1
    return total


@njit(cache=True)
def barrier_scan(adj, n, k):
    """Maxmin barrier over all 3^n ordered partitions: largest |S|, then
    smallest |T|, then smallest (S, T) masks.  Returns (found, S, T, delta,
    barrier_count)."""
    full = (np.int64(1) << n) - 1
    found = False
    bs = np.int64(0)
    bt = np.int64(0)
    bd = 0
    count = 0
    for s in range(full + 1):
        rest = full & ~s
        ps = popcount(s)
        t = rest
        while True:
            d = deficiency(adj, n, k, s, t)
            if d < 0:
                count += 1
                pt = popcount(t)
                better = False
                if not found:
                    better = True
                else:
                    pbs = popcount(bs)
                    pbt = popcount(bt)
                    if ps > pbs:
                        better = True
                    elif ps == pbs:
                        if pt < pbt:
                            better = True
                        elif pt == pbt and (s < bs or (s == bs and t < bt)):
                            better = True
                if better:
                    found = True
                    bs = s
                    bt = t
                    bd = d
            if t == 0:
                break
            t = (t - 1) & rest
    return found, bs, bt, bd, count


@njit(cache=True)
def all_deficiencies_even(adj, n, k):
    """True if every ordered partition has even deficiency."""
    full = (np.int64(1) << n) - 1
    for s in range(full + 1):
        rest = full & ~s
        t = rest
        while True:
            if deficiency(adj, n, k, s, t) & 1:
                return False
            if t == 0:
                break
            t = (t - 1) & rest
    return True


# --------------------------------------------------------------------------
# Edmonds blossom, array form


@njit(cache=True)
def _lca(match, base, p, a, b, n):
    used = np.zeros(n, np.bool_)
    while True:
        a = base[a]
        used[a] = True
        if match[a] == -1:
            break
        a = p[match[a]]
    while True:
        b = base[b]
        if used[b]:
            return b
        b = p[match[b]]


@njit(cache=True)
def _mark_path(match, base, blossom, p, v, b, child):
    while base[v] != b:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        p[v] = child
        child = match[v]
        v = p[match[v]]


@njit(cache=True)
def _find_augmenting(indptr, indices, match, root, n, p, base, used, queue):
    for i in range(n):
        p[i] = -1
        base[i] = i
        used[i] = False
    used[root] = True
    qh = 0
    qt = 0
    queue[qt] = root
    qt += 1
    while qh < qt:
        v = queue[qh]
        qh += 1
        for idx in range(indptr[v], indptr[v + 1]):
            to = indices[idx]
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and p[match[to]] != -1):
                cur = _lca(match, base, p, v, to, n)
                blossom = np.zeros(n, np.bool_)
                _mark_path(match, base, blossom, p, v, cur, to)
                _mark_path(match, base, blossom, p, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue[qt] = i
                            qt += 1
            elif p[to] == -1:
                p[to] = v
                if match[to] == -1:
                    return to
                to2 = match[to]
                used[to2] = True
                queue[qt] = to2
                qt += 1
    return -1


@njit(cache=True)
def blossom_matching(indptr, indices, n):
    """Maximum-cardinality matching; returns the mate array (-1 = exposed).
    Vertices and adjacency lists are scanned in the given order."""
    match = np.full(n, -1, np.int64)
    for v in range(n):
        if match[v] == -1:
            for idx in range(indptr[v], indptr[v + 1]):
                u = indices[idx]
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break
    p = np.full(n, -1, np.int64)
    base = np.arange(n)
    used = np.zeros(n, np.bool_)
    queue = np.zeros(n, np.int64)
    for root in range(n):
        if match[root] != -1:
            continue
        v = _find_augmenting(indptr, indices, match, root, n, p, base, used, queue)
        while v != -1:
            pv = p[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


@njit(cache=True)
def is_bipartite(adj, n):
    colour = np.full(max(n, 1), -1, np.int64)
    stack = np.zeros(max(n, 1), np.int64)
    for root in range(n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        top = 0
        stack[top] = root
        top += 1
        while top:
            top -= 1
            v = stack[top]
            a = adj[v]
            while a:
                low = a & -a
                w = lowbit_index(low)
                a ^= low
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    stack[top] = w
                    top += 1
                elif colour[w] == colour[v]:
                    return False
    return True


@njit(cache=True)
def bipartite_many(masks, n):
    rows = masks.shape[0]
    out = np.zeros(rows, np.bool_)
    for r in range(rows):
        out[r] = is_bipartite(masks[r], n)
    return out


@njit(cache=True)
def csr_from_masks(adj, n, removed):
    """CSR adjacency of the graph with vertex set ``~removed`` (removed
    vertices keep empty rows)."""
    indptr = np.zeros(n + 1, np.int64)
    total = 0
    for v in range(n):
        if not (removed >> v) & 1:
            total += popcount(adj[v] & ~removed)
    indices = np.zeros(max(total, 1), np.int64)
    pos = 0
    for v in range(n):
        indptr[v] = pos
        if (removed >> v) & 1:
            continue
        a = adj[v] & ~removed
        while a:
            low = a & -a
            indices[pos] = lowbit_index(low)
            pos += 1
            a ^= low
    indptr[n] = pos
    return indptr, indices


@njit(cache=True)
def hypomatchable_many(masks, n):
    """Per row: the first vertex v whose deletion leaves no perfect
    matching, or -1 if every deletion does (odd n only)."""
    rows = masks.shape[0]
    out = np.full(rows, -1, np.int64)
    for r in range(rows):
        adj = masks[r]
        for v in range(n):
            removed = np.int64(1) << v
            indptr, indices = csr_from_masks(adj, n, removed)
            mate = blossom_matching(indptr, indices, n)
            ok = True
            for w in range(n):
                if w != v and mate[w] == -1:
                    ok = False
                    break
            if not ok:
                out[r] = v
                break
    return out


@njit(cache=True)
def tutte_many(masks, n, slack, skip_empty):
    rows = masks.shape[0]
    out = np.zeros(rows, np.int64)
    for r in range(rows):
        out[r] = tutte_scan(masks[r], n, slack, skip_empty)
    return out
