"""Backend selection for the exact-search kernels.

The hot kernels exist twice: a compiled Cython extension
(``punclab._ckernels``) and a pure-Python/numpy twin
(``punclab._pykernels``) that returns identical values.  The compiled
backend is preferred when importable; set ``PUNCLAB_PURE=1`` to force the
fallback.  ``punclab bench`` times one against the other.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

if os.environ.get("PUNCLAB_PURE") == "1":
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _pykernels

BACKEND = "pure" if _impl is _pykernels else "compiled"


def backends() -> list[tuple[str, object]]:
    """Every importable backend as (name, module), compiled first."""
    out = []
    try:
        from . import _ckernels

        out.append(("compiled", _ckernels))
    except ImportError:
        pass
    out.append(("pure", _pykernels))
    return out


def _mat(words) -> np.ndarray:
    return np.ascontiguousarray(words, dtype=np.int32)


def _vec(v) -> np.ndarray:
    return np.ascontiguousarray(v, dtype=np.int32)


def pairwise_min_distance(words, impl=None) -> int:
    return int((impl or _impl).pairwise_min_distance(_mat(words)))


def agreements_matrix(words, impl=None) -> np.ndarray:
    return np.asarray((impl or _impl).agreements_matrix(_mat(words)))


def ball_count(words, center, t: int, impl=None) -> int:
    return int((impl or _impl).ball_count(_mat(words), _vec(center), int(t)))


def dfs_find_center(words, t, need, cand_sym, cand_off, match_idx, match_off,
                    node_budget=-1, impl=None):
    status, path, nodes = (impl or _impl).dfs_find_center(
        _mat(words), int(t), int(need), _vec(cand_sym), _vec(cand_off),
        _vec(match_idx), _vec(match_off), int(node_budget))
    return int(status), np.asarray(path), int(nodes)


def dfs_max_ball(words, t, cand_sym, cand_off, match_idx, match_off,
                 node_budget=-1, impl=None):
    status, best, nodes = (impl or _impl).dfs_max_ball(
        _mat(words), int(t), _vec(cand_sym), _vec(cand_off),
        _vec(match_idx), _vec(match_off), int(node_budget))
    return int(status), int(best), int(nodes)


def backtrack_center(words, t, cand_sym, cand_off, match_idx, match_off, impl=None):
    found, assign, nodes = (impl or _impl).backtrack_center(
        _mat(words), int(t), _vec(cand_sym), _vec(cand_off),
        _vec(match_idx), _vec(match_off))
    return bool(found), np.asarray(assign), int(nodes)


def rs_min_weight(contrib, add, sub, one_index: int, impl=None):
    best, scanned = (impl or _impl).rs_min_weight(
        np.ascontiguousarray(contrib, dtype=np.int32),
        np.ascontiguousarray(add, dtype=np.int32),
        np.ascontiguousarray(sub, dtype=np.int32),
        int(one_index))
    return int(best), int(scanned)
