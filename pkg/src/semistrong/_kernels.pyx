# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: the per-vertex tree-DP fold and the solver backtracking.

Both mirror their pure-Python counterparts exactly (same state sets, same
node accounting, same visit order); the test suite cross-checks them.
"""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memset
from cpython.bytes cimport PyBytes_FromStringAndSize

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


# ---------------------------------------------------------------------------
# tree DP
# ---------------------------------------------------------------------------

cdef inline bint _emit_region(
    unsigned char* M, int K1, int p, int q, int pp, int sll, int tl,
    unsigned char* right_ts, int d, int budget,
) noexcept nogil:
    """Mark every (s, t) reachable from one left state and one merge case,
    over all right states present.  Layout: M[(p*K1 + t)*K1 + s]."""
    cdef bint wrote = 0
    cdef int free_colors = budget - p - q
    cdef int tr, sr, t_lo, t_hi, t, s_lo, s_hi
    if free_colors < 0:
        return 0
    for tr in range(d + 1):
        if not right_ts[tr]:
            continue
        sr = d - tr
        t_lo = tl if tl > tr else tr
        t_hi = tl + tr
        if free_colors < t_hi:
            t_hi = free_colors
        for t in range(t_lo, t_hi + 1):
            s_lo = 0
            if sll + tl - t > s_lo:
                s_lo = sll + tl - t
            if sr + tr - t - pp > s_lo:
                s_lo = sr + tr - t - pp
            s_hi = sll + sr
            if free_colors - t < s_hi:
                s_hi = free_colors - t
            if s_hi >= s_lo:
                memset(M + (p * K1 + t) * K1 + s_lo, 1, s_hi - s_lo + 1)
                wrote = 1
    return wrote


def tree_solve(int n, int budget, int[:] post, int[:] child_off, int[:] child_arr):
    """Bottom-up DP over the whole tree.

    Returns (feasible, fail_vertex, sets) where sets[v] is a bytes object of
    consecutive (p, q, s, t) state tuples, or None past an early exit.
    """
    cdef int K1 = budget + 1
    cdef int max_chd = 0, v, span
    for v in range(n):
        span = child_off[v + 1] - child_off[v]
        if span > max_chd:
            max_chd = span
    cdef int plane = K1 * K1
    cdef size_t lsize = <size_t>(max_chd + 2) * plane
    cdef unsigned char* L = <unsigned char*>malloc(lsize if lsize else 1)
    cdef unsigned char* M = <unsigned char*>malloc(lsize if lsize else 1)
    cdef unsigned char* t10 = <unsigned char*>malloc(max_chd + 2)
    cdef unsigned char* t01 = <unsigned char*>malloc(max_chd + 2)
    cdef unsigned char* tmp = <unsigned char*>malloc(
        4 * (<size_t>(max_chd + 1) * plane if max_chd else 1)
    )
    if not (L and M and t10 and t01 and tmp):
        free(L)
        free(M)
        free(t10)
        free(t01)
        free(tmp)
        raise MemoryError()

    sets = [None] * n
    cdef bint feasible = 1
    cdef int fail_vertex = -1
    cdef int oi, m, idx, c, d, j, cnt, p, q, s, t, tot, tr
    cdef int pl, tl, sl, i, c_out
    cdef bint any10, any01, any_out
    cdef const unsigned char* cb
    cdef unsigned char* swap
    cdef bytes blob

    try:
        for oi in range(n):
            v = post[oi]
            m = child_off[v + 1] - child_off[v]
            if m == 0:
                sets[v] = b"\x00\x00\x00\x00"
                continue
            for idx in range(m):
                c = child_arr[child_off[v] + idx]
                d = child_off[c + 1] - child_off[c]
                blob = <bytes>sets[c]
                cb = <const unsigned char*>blob
                cnt = len(blob) // 4
                memset(t10, 0, d + 1)
                memset(t01, 0, d + 1)
                any10 = 0
                any01 = 0
                for j in range(cnt):
                    p = cb[4 * j]
                    q = cb[4 * j + 1]
                    s = cb[4 * j + 2]
                    t = cb[4 * j + 3]
                    tot = p + q + s + t
                    if tot <= budget - 1:
                        t10[q] = 1
                        any10 = 1
                    if s >= 1 and tot <= budget:
                        t01[q] = 1
                        any01 = 1
                if not any10 and not any01:
                    feasible = 0
                    fail_vertex = v
                    break
                if idx == 0:
                    memset(L, 0, 2 * plane)
                    for tr in range(d + 1):
                        if t10[tr]:
                            L[(1 * K1 + tr) * K1 + (d - tr)] = 1
                        if t01[tr]:
                            L[(0 * K1 + tr) * K1 + (d - tr)] = 1
                else:
                    i = idx
                    memset(M, 0, <size_t>(i + 2) * plane)
                    any_out = 0
                    for pl in range(i + 1):
                        for tl in range(K1):
                            for sl in range(K1):
                                if not L[(pl * K1 + tl) * K1 + sl]:
                                    continue
                                # case 1: right branch (0,1), target p = pl
                                if _emit_region(
                                    M, K1, pl, i + 1 - pl, pl, sl, tl, t01, d, budget
                                ):
                                    any_out = 1
                                # case 2: right branch (1,0), target p = pl + 1
                                if _emit_region(
                                    M, K1, pl + 1, i - pl, pl, sl, tl, t10, d, budget
                                ):
                                    any_out = 1
                                # case 3: as case 2 but the new edge reuses a
                                # left type-s color
                                if sl >= 1 and _emit_region(
                                    M, K1, pl + 1, i - pl, pl, sl - 1, tl, t10, d,
                                    budget,
                                ):
                                    any_out = 1
                    if not any_out:
                        feasible = 0
                        fail_vertex = v
                        break
                    swap = L
                    L = M
                    M = swap
            if not feasible:
                break
            c_out = 0
            for p in range(m + 1):
                q = m - p
                for t in range(K1):
                    for s in range(K1):
                        if L[(p * K1 + t) * K1 + s]:
                            tmp[4 * c_out] = <unsigned char>p
                            tmp[4 * c_out + 1] = <unsigned char>q
                            tmp[4 * c_out + 2] = <unsigned char>s
                            tmp[4 * c_out + 3] = <unsigned char>t
                            c_out += 1
            if c_out == 0:
                feasible = 0
                fail_vertex = v
                break
            sets[v] = PyBytes_FromStringAndSize(<char*>tmp, 4 * c_out)
    finally:
        free(L)
        free(M)
        free(t10)
        free(t01)
        free(tmp)
    return bool(feasible), fail_vertex, sets


# ---------------------------------------------------------------------------
# solver backtracking
# ---------------------------------------------------------------------------

cdef struct BT:
    int m
    int palette
    int kind                   # 0 proper, 1 semistrong, 2 strong
    bint pin_first
    long long node_budget      # < 0 means unlimited
    long long solution_cap
    long long nodes
    long long count
    bint budget_hit
    bint cap_hit
    unsigned long long adj[64]
    unsigned long long covered[33]
    int cls_len[33]
    int* cls
    int* eu
    int* ev
    int* order
    int* colors


cdef inline bint _class_ok(BT* S, int c) noexcept nogil:
    cdef unsigned long long cov = S.covered[c]
    cdef int j, f
    if S.kind == 1:
        for j in range(S.cls_len[c]):
            f = S.cls[c * S.m + j]
            if (
                __builtin_popcountll(S.adj[S.eu[f]] & cov) >= 2
                and __builtin_popcountll(S.adj[S.ev[f]] & cov) >= 2
            ):
                return 0
        return 1
    if S.kind == 2:
        for j in range(S.cls_len[c]):
            f = S.cls[c * S.m + j]
            if (
                __builtin_popcountll(S.adj[S.eu[f]] & cov) >= 2
                or __builtin_popcountll(S.adj[S.ev[f]] & cov) >= 2
            ):
                return 0
        return 1
    return 1


cdef inline bint _leaf_ok(BT* S) noexcept nogil:
    cdef int c, j, f
    cdef unsigned long long cov
    if S.kind == 0:
        return 1
    for c in range(1, S.palette + 1):
        cov = S.covered[c]
        for j in range(S.cls_len[c]):
            f = S.cls[c * S.m + j]
            if S.kind == 1:
                if (
                    __builtin_popcountll(S.adj[S.eu[f]] & cov) != 1
                    and __builtin_popcountll(S.adj[S.ev[f]] & cov) != 1
                ):
                    return 0
            else:
                if (
                    __builtin_popcountll(S.adj[S.eu[f]] & cov) != 1
                    or __builtin_popcountll(S.adj[S.ev[f]] & cov) != 1
                ):
                    return 0
    return 1


cdef int _bt_rec(
    BT* S, int li, object visitor, list witness_holder, bint want_witness
) except -1:
    cdef int e, c, j
    cdef unsigned long long bits
    cdef int stop
    if li == S.m:
        if _leaf_ok(S):
            S.count += 1
            if want_witness and len(witness_holder) == 0:
                witness_holder.append([S.colors[j] for j in range(S.m)])
            if visitor is not None:
                visitor(tuple([S.colors[j] for j in range(S.m)]))
            if S.solution_cap >= 0 and S.count >= S.solution_cap:
                S.cap_hit = 1
                return 1
        return 0
    e = S.order[li]
    bits = ((<unsigned long long>1) << S.eu[e]) | ((<unsigned long long>1) << S.ev[e])
    for c in range(1, S.palette + 1):
        if S.pin_first and e == 0 and c != 1:
            continue
        if S.covered[c] & bits:
            continue
        if S.node_budget >= 0 and S.nodes >= S.node_budget:
            S.budget_hit = 1
            return 1
        S.nodes += 1
        S.colors[e] = c
        S.covered[c] |= bits
        S.cls[c * S.m + S.cls_len[c]] = e
        S.cls_len[c] += 1
        stop = 0
        if _class_ok(S, c):
            stop = _bt_rec(S, li + 1, visitor, witness_holder, want_witness)
        S.cls_len[c] -= 1
        S.covered[c] &= ~bits
        S.colors[e] = 0
        if stop:
            return 1
    return 0


def solver_search(
    int n,
    int m,
    int[:] eu,
    int[:] ev,
    int palette,
    int kind,
    int[:] order,
    bint pin_first,
    long long node_budget,
    long long solution_cap,
    bint want_witness,
    object visitor,
):
    """Returns (nodes, count, budget_hit, cap_hit, witness_or_None)."""
    if n > 64 or palette > 32:
        raise ValueError("native solver limits: n <= 64, palette <= 32")
    if kind not in (0, 1, 2):
        raise ValueError("native solver supports kinds 0..2")
    cdef BT S
    memset(&S, 0, sizeof(BT))
    S.m = m
    S.palette = palette
    S.kind = kind
    S.pin_first = pin_first
    S.node_budget = node_budget
    S.solution_cap = solution_cap
    cdef int cap = m if m > 0 else 1
    S.cls = <int*>malloc((palette + 1) * cap * sizeof(int))
    S.eu = <int*>malloc(cap * sizeof(int))
    S.ev = <int*>malloc(cap * sizeof(int))
    S.order = <int*>malloc(cap * sizeof(int))
    S.colors = <int*>calloc(cap, sizeof(int))
    if not (S.cls and S.eu and S.ev and S.order and S.colors):
        free(S.cls)
        free(S.eu)
        free(S.ev)
        free(S.order)
        free(S.colors)
        raise MemoryError()
    cdef int j
    for j in range(m):
        S.eu[j] = eu[j]
        S.ev[j] = ev[j]
        S.order[j] = order[j]
        S.adj[eu[j]] |= (<unsigned long long>1) << ev[j]
        S.adj[ev[j]] |= (<unsigned long long>1) << eu[j]
    witness_holder: list = []
    try:
        _bt_rec(&S, 0, visitor, witness_holder, want_witness)
    finally:
        free(S.cls)
        free(S.eu)
        free(S.ev)
        free(S.order)
        free(S.colors)
    witness = witness_holder[0] if witness_holder else None
    return S.nodes, S.count, bool(S.budget_hit), bool(S.cap_hit), witness
