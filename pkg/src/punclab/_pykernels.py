"""Pure-Python/numpy backend for the exact-search kernels.

This module and the Cython twin (punclab._ckernels) implement one shared
contract and must return identical values, including node counts, for
identical inputs.  The search kernels take pre-flattened candidate tables:

    cand_sym[cand_off[d] : cand_off[d+1]]   candidate symbols at depth d
    match_idx[match_off[c] : match_off[c+1]] word rows matching candidate c

Traversal orders are part of the contract:

* ``dfs_find_center``: depth-first over positions 0..n-1 in order,
  candidates in array order; a node is counted per candidate application;
  a branch is descended only while at least ``need`` words can still reach
  ``t`` agreements; the first full assignment whose ball count reaches
  ``need`` is returned (it is the lexicographically first one w.r.t. the
  candidate order).
* ``dfs_max_ball``: same traversal, but keeps the exact maximum leaf ball
  count; a branch is pruned only when its optimistic count cannot beat the
  current best, which never changes the maximum.
* ``backtrack_center``: depth-first over positions 0..n-1 in the given
  (caller-reordered) sequence; at every depth the real candidates are tried
  in array order followed by an implicit "no credit" branch; fails early as
  soon as some word cannot reach ``t`` even if credited everywhere below.

Status codes for the dfs kernels: 0 = exhausted, 1 = found, 2 = node budget
exceeded.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 256
_CHUNK = 1 << 14


def pairwise_min_distance(words: np.ndarray) -> int:
    """Exact minimum Hamming distance over all unordered pairs."""
    n_words, m = words.shape
    best_agree = -1
    for i0 in range(0, n_words, _BLOCK):
        blk = words[i0 : i0 + _BLOCK]
        agree = (blk[:, None, :] == words[None, :, :]).sum(axis=2)
        for r in range(blk.shape[0]):
            agree[r, i0 + r] = -1
        a = int(agree.max())
        if a > best_agree:
            best_agree = a
    return m - best_agree


def agreements_matrix(words: np.ndarray) -> np.ndarray:
    n_words = words.shape[0]
    out = np.empty((n_words, n_words), dtype=np.int32)
    for i0 in range(0, n_words, _BLOCK):
        blk = words[i0 : i0 + _BLOCK]
        out[i0 : i0 + blk.shape[0]] = (blk[:, None, :] == words[None, :, :]).sum(
            axis=2, dtype=np.int32
        )
    return out


def ball_count(words: np.ndarray, center: np.ndarray, t: int) -> int:
    return int(((words == center[None, :]).sum(axis=1) >= t).sum())


def dfs_find_center(words, t, need, cand_sym, cand_off, match_idx, match_off, node_budget):
    n_words, n = words.shape
    cnt = [0] * n_words
    path = np.zeros(n, dtype=np.int32)
    nodes = 0

    def visit(d):
        nonlocal nodes
        if d == n:
            hits = sum(1 for c in cnt if c >= t)
            return 1 if hits >= need else 0
        rem = n - d - 1
        for ci in range(cand_off[d], cand_off[d + 1]):
            nodes += 1
            if node_budget >= 0 and nodes > node_budget:
                return 2
            rows = match_idx[match_off[ci] : match_off[ci + 1]]
            for w in rows:
                cnt[w] += 1
            path[d] = cand_sym[ci]
            alive = sum(1 for c in cnt if c + rem >= t)
            if alive >= need:
                r = visit(d + 1)
                if r:
                    return r
            for w in rows:
                cnt[w] -= 1
        return 0

    status = visit(0)
    return status, path, nodes


def dfs_max_ball(words, t, cand_sym, cand_off, match_idx, match_off, node_budget):
    n_words, n = words.shape
    cnt = [0] * n_words
    nodes = 0
    best = 0

    def visit(d):
        nonlocal nodes, best
        if d == n:
            hits = sum(1 for c in cnt if c >= t)
            if hits > best:
                best = hits
            return 0
        rem = n - d - 1
        for ci in range(cand_off[d], cand_off[d + 1]):
            nodes += 1
            if node_budget >= 0 and nodes > node_budget:
                return 2
            rows = match_idx[match_off[ci] : match_off[ci + 1]]
            for w in rows:
                cnt[w] += 1
            ub = sum(1 for c in cnt if c + rem >= t)
            if ub > best:
                r = visit(d + 1)
                if r:
                    return r
            for w in rows:
                cnt[w] -= 1
        return 0

    status = visit(0)
    return status, best, nodes


def backtrack_center(words, t, cand_sym, cand_off, match_idx, match_off):
    n_words, n = words.shape
    cnt = [0] * n_words
    assign = np.empty(n, dtype=np.int32)
    nodes = 0

    def visit(d):
        nonlocal nodes
        if all(c >= t for c in cnt):
            assign[d:] = -1
            return 1
        if d == n:
            return 0
        rem = n - d
        if any(c + rem < t for c in cnt):
            return 0
        for ci in range(cand_off[d], cand_off[d + 1]):
            nodes += 1
            rows = match_idx[match_off[ci] : match_off[ci + 1]]
            for w in rows:
                cnt[w] += 1
            assign[d] = cand_sym[ci]
            if visit(d + 1):
                return 1
            for w in rows:
                cnt[w] -= 1
        nodes += 1
        assign[d] = -1
        return visit(d + 1)

    found = visit(0)
    return bool(found), assign, nodes


def rs_min_weight(contrib, add, sub, one_index):
    """Minimum weight over all nonzero codewords of the spanned code.

    ``contrib[j, a, i]`` is the symbol index of (element a) * alpha_i^j.
    Enumerates one representative per scalar class: coefficient vectors
    whose highest nonzero coefficient is the field's one.  ``sub`` is used
    only by the compiled twin (incremental odometer updates); this twin
    re-encodes chunks instead, which yields the same scan.
    """
    k, q, n = contrib.shape
    best = n
    scanned = 0
    for top in range(k):
        total = q**top
        base = contrib[top, one_index]
        for start in range(0, total, _CHUNK):
            cnt = min(_CHUNK, total - start)
            idx = np.arange(start, start + cnt, dtype=np.int64)
            word = np.repeat(base[None, :], cnt, axis=0)
            for j in range(top):
                digit = (idx // q**j) % q
                word = add[word, contrib[j][digit]]
            weights = np.count_nonzero(word, axis=1)
            w = int(weights.min())
            if w < best:
                best = w
            scanned += cnt
    return best, scanned
