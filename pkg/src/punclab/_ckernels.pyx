# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled backend for the exact-search kernels.

Mirrors punclab._pykernels exactly: same inputs, same traversal orders,
identical outputs including node counts.  See the pure module's docstring
for the shared contract; the parity test suite enforces it.
"""

import numpy as np


def pairwise_min_distance(int[:, ::1] words):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t m = words.shape[1]
    cdef Py_ssize_t i, j, k
    cdef int agree
    cdef int best_agree = -1
    for i in range(n_words):
        for j in range(i + 1, n_words):
            agree = 0
            for k in range(m):
                if words[i, k] == words[j, k]:
                    agree += 1
            if agree > best_agree:
                best_agree = agree
    return int(m - best_agree)


def agreements_matrix(int[:, ::1] words):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t m = words.shape[1]
    out_arr = np.empty((n_words, n_words), dtype=np.int32)
    cdef int[:, ::1] out = out_arr
    cdef Py_ssize_t i, j, k
    cdef int agree
    for i in range(n_words):
        out[i, i] = <int> m
        for j in range(i + 1, n_words):
            agree = 0
            for k in range(m):
                if words[i, k] == words[j, k]:
                    agree += 1
            out[i, j] = agree
            out[j, i] = agree
    return out_arr


def ball_count(int[:, ::1] words, int[::1] center, int t):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t m = words.shape[1]
    cdef Py_ssize_t i, k
    cdef int agree, hits = 0
    for i in range(n_words):
        agree = 0
        for k in range(m):
            if words[i, k] == center[k]:
                agree += 1
        if agree >= t:
            hits += 1
    return int(hits)


cdef int _dfs_find(int[::1] cnt, int[::1] path, Py_ssize_t d, Py_ssize_t n,
                   Py_ssize_t n_words, int t, int need,
                   int[::1] cand_sym, int[::1] cand_off,
                   int[::1] match_idx, int[::1] match_off,
                   long long node_budget, long long* nodes):
    cdef Py_ssize_t ci, e, w
    cdef int alive, hits, r
    cdef int rem
    if d == n:
        hits = 0
        for w in range(n_words):
            if cnt[w] >= t:
                hits += 1
        return 1 if hits >= need else 0
    rem = <int> (n - d - 1)
    for ci in range(cand_off[d], cand_off[d + 1]):
        nodes[0] += 1
        if node_budget >= 0 and nodes[0] > node_budget:
            return 2
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] += 1
        path[d] = cand_sym[ci]
        alive = 0
        for w in range(n_words):
            if cnt[w] + rem >= t:
                alive += 1
        if alive >= need:
            r = _dfs_find(cnt, path, d + 1, n, n_words, t, need,
                          cand_sym, cand_off, match_idx, match_off,
                          node_budget, nodes)
            if r:
                return r
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] -= 1
    return 0


def dfs_find_center(int[:, ::1] words, int t, int need,
                    int[::1] cand_sym, int[::1] cand_off,
                    int[::1] match_idx, int[::1] match_off,
                    long long node_budget):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t n = words.shape[1]
    cnt_arr = np.zeros(n_words, dtype=np.int32)
    path_arr = np.zeros(n, dtype=np.int32)
    cdef int[::1] cnt = cnt_arr
    cdef int[::1] path = path_arr
    cdef long long nodes = 0
    cdef int status = _dfs_find(cnt, path, 0, n, n_words, t, need,
                                cand_sym, cand_off, match_idx, match_off,
                                node_budget, &nodes)
    return int(status), path_arr, int(nodes)


cdef int _dfs_max(int[::1] cnt, Py_ssize_t d, Py_ssize_t n,
                  Py_ssize_t n_words, int t,
                  int[::1] cand_sym, int[::1] cand_off,
                  int[::1] match_idx, int[::1] match_off,
                  long long node_budget, long long* nodes, int* best):
    cdef Py_ssize_t ci, e, w
    cdef int ub, hits, r
    cdef int rem
    if d == n:
        hits = 0
        for w in range(n_words):
            if cnt[w] >= t:
                hits += 1
        if hits > best[0]:
            best[0] = hits
        return 0
    rem = <int> (n - d - 1)
    for ci in range(cand_off[d], cand_off[d + 1]):
        nodes[0] += 1
        if node_budget >= 0 and nodes[0] > node_budget:
            return 2
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] += 1
        ub = 0
        for w in range(n_words):
            if cnt[w] + rem >= t:
                ub += 1
        if ub > best[0]:
            r = _dfs_max(cnt, d + 1, n, n_words, t, cand_sym, cand_off,
                         match_idx, match_off, node_budget, nodes, best)
            if r:
                return r
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] -= 1
    return 0


def dfs_max_ball(int[:, ::1] words, int t,
                 int[::1] cand_sym, int[::1] cand_off,
                 int[::1] match_idx, int[::1] match_off,
                 long long node_budget):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t n = words.shape[1]
    cnt_arr = np.zeros(n_words, dtype=np.int32)
    cdef int[::1] cnt = cnt_arr
    cdef long long nodes = 0
    cdef int best = 0
    cdef int status = _dfs_max(cnt, 0, n, n_words, t, cand_sym, cand_off,
                               match_idx, match_off, node_budget,
                               &nodes, &best)
    return int(status), int(best), int(nodes)


cdef int _backtrack(int[::1] cnt, int[::1] assign, Py_ssize_t d, Py_ssize_t n,
                    Py_ssize_t n_words, int t,
                    int[::1] cand_sym, int[::1] cand_off,
                    int[::1] match_idx, int[::1] match_off,
                    long long* nodes):
    cdef Py_ssize_t ci, e, w
    cdef int all_done = 1
    cdef int rem
    for w in range(n_words):
        if cnt[w] < t:
            all_done = 0
            break
    if all_done:
        for e in range(d, n):
            assign[e] = -1
        return 1
    if d == n:
        return 0
    rem = <int> (n - d)
    for w in range(n_words):
        if cnt[w] + rem < t:
            return 0
    for ci in range(cand_off[d], cand_off[d + 1]):
        nodes[0] += 1
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] += 1
        assign[d] = cand_sym[ci]
        if _backtrack(cnt, assign, d + 1, n, n_words, t, cand_sym, cand_off,
                      match_idx, match_off, nodes):
            return 1
        for e in range(match_off[ci], match_off[ci + 1]):
            cnt[match_idx[e]] -= 1
    nodes[0] += 1
    assign[d] = -1
    return _backtrack(cnt, assign, d + 1, n, n_words, t, cand_sym, cand_off,
                      match_idx, match_off, nodes)


def backtrack_center(int[:, ::1] words, int t,
                     int[::1] cand_sym, int[::1] cand_off,
                     int[::1] match_idx, int[::1] match_off):
    cdef Py_ssize_t n_words = words.shape[0]
    cdef Py_ssize_t n = words.shape[1]
    cnt_arr = np.zeros(n_words, dtype=np.int32)
    assign_arr = np.empty(n, dtype=np.int32)
    cdef int[::1] cnt = cnt_arr
    cdef int[::1] assign = assign_arr
    cdef long long nodes = 0
    cdef int found = _backtrack(cnt, assign, 0, n, n_words, t,
                                cand_sym, cand_off, match_idx, match_off,
                                &nodes)
    return bool(found), assign_arr, int(nodes)


def rs_min_weight(int[:, :, ::1] contrib, int[:, ::1] add, int[:, ::1] sub,
                  int one_index):
    """Incremental odometer over monic-top coefficient vectors.

    The pure twin re-encodes numpy chunks instead; both scan exactly one
    representative per scalar class and return the same minimum.
    """
    cdef Py_ssize_t k = contrib.shape[0]
    cdef Py_ssize_t q = contrib.shape[1]
    cdef Py_ssize_t n = contrib.shape[2]
    word_arr = np.zeros(n, dtype=np.int32)
    digits_arr = np.zeros(k if k > 0 else 1, dtype=np.int64)
    cdef int[::1] word = word_arr
    cdef long long[::1] digits = digits_arr
    cdef int best = <int> n
    cdef long long scanned = 0
    cdef Py_ssize_t top, i, j
    cdef long long total, step
    cdef int zeros, wgt, old, v, w0, w1
    for top in range(k):
        zeros = 0
        for i in range(n):
            word[i] = contrib[top, one_index, i]
            if word[i] == 0:
                zeros += 1
        for j in range(top):
            digits[j] = 0
        wgt = <int> n - zeros
        if wgt < best:
            best = wgt
        scanned += 1
        total = 1
        for j in range(top):
            total *= q
        for step in range(1, total):
            j = 0
            while True:
                old = <int> digits[j]
                v = old + 1
                if v == <int> q:
                    v = 0
                digits[j] = v
                for i in range(n):
                    w0 = word[i]
                    w1 = add[sub[w0, contrib[j, old, i]], contrib[j, v, i]]
                    if w0 == 0:
                        if w1 != 0:
                            zeros -= 1
                    elif w1 == 0:
                        zeros += 1
                    word[i] = w1
                if v != 0:
                    break
                j += 1
            wgt = <int> n - zeros
            if wgt < best:
                best = wgt
            scanned += 1
    return int(best), int(scanned)
