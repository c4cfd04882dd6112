"""Monte-Carlo harness: random puncturings of full RS codes, decided exactly.

Per-trial randomness is split from the run seed with a fixed 64-bit mixing
function (splitmix64 applied to seed + (trial_index + 1) * golden), so any
single trial can be reproduced in isolation:

    trial_seed(seed, i) = mix64((seed + (i + 1) * 0x9E3779B97F4A7C15) mod 2^64)
    mix64(z): z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
              z *= 0x94D049BB133111EB; z ^= z >> 31   (all mod 2^64)

Runs are fully reproducible from their config: identical config yields
byte-identical persisted artifacts at any concurrency level.  Trials whose
exact search exhausts its budget are recorded as "undecided" and excluded
from the failure-fraction denominator; conflating them with verdicts would
bias the estimate.

Persisted JSON layout (schema version 1): {"schema_version", "kind",
"config" (with its sha256 hash), "aggregates", "records"}.  CSV aggregate
columns: config_hash,field,k,n,r,L,trials,seed,mode,failures,decodables,
undecided,fraction_failed.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import bounds, listdec, rs
from .codes import Code, sample_puncturing, puncture
from .errors import BudgetExceeded, ConfigInvalid, IoError, SchemaVersionMismatch
from .gf import field_create, parse_field_spec

SCHEMA_VERSION = 1
_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

CSV_HEADER = ("config_hash,field,k,n,r,L,trials,seed,mode,"
              "failures,decodables,undecided,fraction_failed")


def mix64(z: int) -> int:
    z &= _MASK64
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def trial_seed(seed: int, index: int) -> int:
    return mix64(seed + (index + 1) * _GOLDEN)


@dataclass(frozen=True)
class ExperimentConfig:
    field_spec: str
    k: int
    n: int
    r: Fraction
    L: int
    trials: int
    seed: int
    mode: str = "exhaustive"  # or "witness"
    budget_nodes: int | None = None
    budget_subsets: int = listdec.DEFAULT_SUBSET_BUDGET

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        if self.trials < 1:
            raise ConfigInvalid(f"trials must be >= 1, got {self.trials}")
        if self.mode not in ("exhaustive", "witness"):
            raise ConfigInvalid(f"unknown decider mode {self.mode!r}")
        if not 0 < self.r < 1:
            raise ConfigInvalid(f"radius must lie in (0,1), got {self.r}")
        if self.L < 1 or self.k < 1 or self.n < 1:
            raise ConfigInvalid("k, n, L must be >= 1")

    def to_json(self) -> dict:
        return {
            "field": self.field_spec, "k": self.k, "n": self.n,
            "r": str(self.r), "L": self.L, "trials": self.trials,
            "seed": self.seed, "mode": self.mode,
            "budget_nodes": self.budget_nodes,
            "budget_subsets": self.budget_subsets,
        }

    def config_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_json(cls, data: dict) -> "ExperimentConfig":
        return cls(field_spec=data["field"], k=int(data["k"]), n=int(data["n"]),
                   r=Fraction(data["r"]), L=int(data["L"]),
                   trials=int(data["trials"]), seed=int(data["seed"]),
                   mode=data.get("mode", "exhaustive"),
                   budget_nodes=data.get("budget_nodes"),
                   budget_subsets=int(data.get("budget_subsets",
                                               listdec.DEFAULT_SUBSET_BUDGET)))


@dataclass(frozen=True)
class TrialRecord:
    index: int
    seed: int
    plan: tuple[int, ...]
    verdict: str  # decodable | witness | undecided
    witness_center: tuple[int, ...] | None
    witness_members: tuple[tuple[int, ...], ...] | None
    nodes: int
    subsets: int

    def to_json(self) -> dict:
        return {
            "index": self.index, "seed": self.seed, "plan": list(self.plan),
            "verdict": self.verdict,
            "witness_center": list(self.witness_center) if self.witness_center else None,
            "witness_members": [list(w) for w in self.witness_members]
            if self.witness_members else None,
            "nodes": self.nodes, "subsets": self.subsets,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TrialRecord":
        return cls(
            index=int(data["index"]), seed=int(data["seed"]),
            plan=tuple(data["plan"]), verdict=data["verdict"],
            witness_center=tuple(data["witness_center"])
            if data["witness_center"] is not None else None,
            witness_members=tuple(tuple(w) for w in data["witness_members"])
            if data["witness_members"] is not None else None,
            nodes=int(data["nodes"]), subsets=int(data["subsets"]))


@dataclass(frozen=True)
class RunResult:
    config: ExperimentConfig
    records: tuple[TrialRecord, ...]

    @property
    def failures(self) -> int:
        return sum(1 for r in self.records if r.verdict == "witness")

    @property
    def decodables(self) -> int:
        return sum(1 for r in self.records if r.verdict == "decodable")

    @property
    def undecided(self) -> int:
        return sum(1 for r in self.records if r.verdict == "undecided")

    @property
    def fraction_failed(self) -> Fraction | None:
        decided = self.failures + self.decodables
        if decided == 0:
            return None
        return Fraction(self.failures, decided)

    def aggregates(self) -> dict:
        frac = self.fraction_failed
        return {
            "failures": self.failures,
            "decodables": self.decodables,
            "undecided": self.undecided,
            "fraction_failed": str(frac) if frac is not None else None,
        }


def _base_code(config: ExperimentConfig) -> Code:
    p, e = parse_field_spec(config.field_spec)
    ctx = field_create(p, e)
    if config.n > ctx.q:
        raise ConfigInvalid(f"puncturing length {config.n} exceeds q = {ctx.q}")
    full = rs.rs_full(ctx, config.k)
    return rs.rs_materialize(full)


def _run_trial(config: ExperimentConfig, base: Code, index: int) -> TrialRecord:
    tseed = trial_seed(config.seed, index)
    plan = sample_puncturing(base.m, config.n, tseed)
    sub = puncture(base, plan)
    params = listdec.ListDecParams(r=config.r, L=config.L, n=config.n)
    try:
        if config.mode == "exhaustive":
            decision = listdec.decide_exhaustive(sub, params,
                                                 node_budget=config.budget_nodes)
        else:
            decision = listdec.decide_witness_search(
                sub, params, subset_budget=config.budget_subsets)
    except BudgetExceeded:
        return TrialRecord(index, tseed, plan.entries, "undecided",
                           None, None, 0, 0)
    w = decision.witness
    return TrialRecord(
        index, tseed, plan.entries, decision.verdict,
        w.center if w else None, w.members if w else None,
        decision.stats.nodes, decision.stats.subsets)


def run_mc(config: ExperimentConfig, workers: int = 1) -> RunResult:
    """Run all trials; records are ordered by trial index regardless of
    the concurrency level, so output artifacts are identical."""
    base = _base_code(config)
    indices = range(config.trials)
    if workers <= 1:
        records = [_run_trial(config, base, i) for i in indices]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda i: _run_trial(config, base, i), indices))
    return RunResult(config, tuple(records))


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    config: ExperimentConfig
    result: RunResult | None
    error: str | None

    def to_json(self) -> dict:
        out = {"config": self.config.to_json(),
               "config_hash": self.config.config_hash()}
        if self.error is not None:
            out["error"] = self.error
            return out
        out.update(self.result.aggregates())
        eps = 1 - self.config.r
        profile = bounds.johnson_profile(eps, self.config.n, _field_order(self.config))
        rate = Fraction(self.config.k, self.config.n)
        out["bounds"] = {
            "rate": str(rate),
            "johnson_rate_threshold": str(profile.rate_threshold),
            "johnson_applies": rate <= profile.rate_threshold,
            "johnson_list_size": profile.list_size,
        }
        return out


def _field_order(config: ExperimentConfig) -> int:
    p, e = parse_field_spec(config.field_spec)
    return p**e


def sweep(configs, workers: int = 1) -> list[SweepRow]:
    """One row per config; per-cell errors are recorded, never fatal."""
    rows = []
    for cfg in configs:
        try:
            rows.append(SweepRow(cfg, run_mc(cfg, workers=workers), None))
        except Exception as exc:  # recorded per cell
            rows.append(SweepRow(cfg, None, f"{type(exc).__name__}: {exc}"))
    return rows


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def run_to_json(run: RunResult) -> dict:
    cfg = run.config.to_json()
    cfg["hash"] = run.config.config_hash()
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "punclab-mc-run",
        "config": cfg,
        "aggregates": run.aggregates(),
        "records": [r.to_json() for r in run.records],
    }


def dumps_run(run: RunResult) -> str:
    return json.dumps(run_to_json(run), sort_keys=True, separators=(",", ":")) + "\n"


def persist_run(run: RunResult, path) -> None:
    try:
        Path(path).write_text(dumps_run(run))
    except OSError as exc:
        raise IoError(str(exc)) from exc


def load_run(path) -> RunResult:
    """Round-trip inverse of persist_run; never returns partial data."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IoError(str(exc)) from exc
    data = json.loads(text)
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"schema version {version!r}, expected {SCHEMA_VERSION}")
    cfg_json = data["config"]
    config = ExperimentConfig.from_json(cfg_json)
    if cfg_json.get("hash") != config.config_hash():
        raise SchemaVersionMismatch("config hash does not match its contents")
    records = tuple(TrialRecord.from_json(r) for r in data["records"])
    run = RunResult(config, records)
    if run.aggregates() != data["aggregates"]:
        raise SchemaVersionMismatch("aggregates do not match the records")
    return run


def sweep_to_csv(rows: list[SweepRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        cfg = row.config
        if row.error is not None:
            agg = {"failures": "", "decodables": "", "undecided": "",
                   "fraction_failed": ""}
        else:
            agg = row.result.aggregates()
            if agg["fraction_failed"] is None:
                agg["fraction_failed"] = ""
        lines.append(",".join(str(v) for v in (
            cfg.config_hash(), cfg.field_spec, cfg.k, cfg.n, cfg.r, cfg.L,
            cfg.trials, cfg.seed, cfg.mode, agg["failures"], agg["decodables"],
            agg["undecided"], agg["fraction_failed"])))
    return "\n".join(lines) + "\n"


def run_to_csv(run: RunResult) -> str:
    return sweep_to_csv([SweepRow(run.config, run, None)])
