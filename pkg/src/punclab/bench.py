"""Benchmark the compiled kernel backend against the pure-Python twin.

Run via ``punclab bench``.  Workloads mirror the hot paths: pairwise
minimum distance, the RS minimum-weight scan, the exhaustive-center DFS,
and the backtracking feasibility solver over witness subsets.  Inputs are
prebuilt outside the timed region so the numbers measure kernel work, and
both backends must return identical answers (asserted here).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels, listdec, rs
from .codes import puncture, sample_puncturing
from .gf import field_create


@dataclass(frozen=True)
class BenchRow:
    name: str
    results: dict  # backend name -> (seconds, answer)


def _time(fn, repeat: int):
    best = None
    answer = None
    for _ in range(repeat):
        start = time.perf_counter()
        answer = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, answer


def _as32(parts):
    return tuple(np.ascontiguousarray(p, dtype=np.int32) for p in parts)


def _workloads():
    ctx7 = field_create(7)
    big = rs.rs_materialize(rs.rs_full(ctx7, 4)).matrix()  # 2401 x 7

    ctx9 = field_create(3, 2)
    scan_code = rs.rs_full(ctx9, 7)  # 597871 scalar classes
    add9, sub9, mul9 = ctx9.tables()
    pows = rs._power_table(scan_code)
    contrib = np.ascontiguousarray(
        mul9[np.arange(ctx9.q)[None, :, None], pows[:, None, :]],
        dtype=np.int32)

    base = rs.rs_materialize(rs.rs_full(ctx7, 2))  # 49 words
    sub_code = puncture(base, sample_puncturing(7, 5, seed=11))
    dfs_mat = sub_code.matrix()
    params = listdec.ListDecParams(r=Fraction(1, 2), L=5, n=5)  # decodable
    dfs_args = _as32(listdec._center_space(dfs_mat, sub_code.q)[:4])

    wit_base = puncture(rs.rs_materialize(rs.rs_full(field_create(5), 2)),
                        sample_puncturing(5, 4, seed=3))
    t_wit = listdec.ListDecParams(r=Fraction(1, 2), L=2, n=4).t
    subset_tables = []
    for subset in listdec.colex_combinations(len(wit_base), 3):
        m = np.array([wit_base.words[i] for i in subset], dtype=np.int32)
        _order, cs, co, mi, mo = listdec._backtrack_tables(m)
        subset_tables.append((m, _as32((cs, co, mi, mo))))

    def min_distance(impl):
        return impl.pairwise_min_distance(big)

    def weight_scan(impl):
        return tuple(impl.rs_min_weight(contrib, add9, sub9, ctx9.one_index))

    def exhaustive(impl):
        status, _path, nodes = impl.dfs_find_center(
            dfs_mat, params.t, params.L + 1, *dfs_args, -1)
        return status, nodes

    def witness(impl):
        feasible = 0
        for m, args in subset_tables:
            ok, _assign, _nodes = impl.backtrack_center(m, t_wit, *args)
            feasible += int(ok)
        return feasible

    return [
        ("pairwise_min_distance[2401x7]", min_distance),
        ("rs_min_weight[GF(9) k=7]", weight_scan),
        ("exhaustive_center_dfs[49w n=5]", exhaustive),
        ("backtrack_feasibility[2300 subsets]", witness),
    ]


def run_benchmarks(repeat: int = 3) -> list[BenchRow]:
    rows = []
    workloads = _workloads()
    for name, fn in workloads:
        results = {}
        for backend_name, impl in kernels.backends():
            seconds, answer = _time(lambda: fn(impl), repeat)
            results[backend_name] = (seconds, answer)
        answers = {repr(a) for _, a in results.values()}
        if len(answers) > 1:
            raise AssertionError(f"backend mismatch on {name}: {results}")
        rows.append(BenchRow(name, results))
    return rows


def format_table(rows: list[BenchRow]) -> str:
    names = [n for n, _ in kernels.backends()]
    header = f"{'workload':38s}" + "".join(f"{n:>13s}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10s}"
    lines = [header, "-" * len(header)]
    for row in rows:
        cells = f"{row.name:38s}"
        for n in names:
            cells += f"{row.results[n][0] * 1e3:11.2f}ms"
        if len(names) == 2:
            fast = row.results[names[0]][0]
            slow = row.results[names[1]][0]
            cells += f"{slow / fast:9.1f}x"
        lines.append(cells)
    lines.append(f"active backend: {kernels.BACKEND}")
    return "\n".join(lines)
