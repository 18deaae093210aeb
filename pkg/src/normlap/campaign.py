"""Verification campaigns over exhaustive or random graph families.

Work is split into chunks keyed by enumeration bitmask range or trial range,
and chunk results are concatenated in key order, so the CSV is byte-identical
whatever the worker count.
"""
from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .graph import MAX_ENUM_N, connected_masks, from_mask, gen_random_connected
from .report import CSV_COLUMNS, DEFAULT_TOL, FAMILIES, evaluate, family_margins

EXHAUSTIVE_CHUNK = 4096
RANDOM_CHUNK = 25


class ConfigError(ValueError):
    pass


@dataclass
class CampaignConfig:
    mode: str
    sizes: tuple[int, ...]
    trials: int = 0
    edge_prob: float = 0.5
    seed: int = 0
    tolerance: float = DEFAULT_TOL
    output: str | None = None
    workers: int = 1

    def __post_init__(self):
        self.sizes = tuple(int(n) for n in self.sizes)
        if self.mode not in ("exhaustive", "random"):
            raise ConfigError(f"mode must be 'exhaustive' or 'random', got {self.mode!r}")
        if not self.sizes:
            raise ConfigError("no graph sizes given")
        if not self.tolerance > 0:
            raise ConfigError(f"tolerance must be positive, got {self.tolerance!r}")
        if min(self.sizes) < 3:
            raise ConfigError("bounds need n >= 3")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        if self.mode == "exhaustive" and max(self.sizes) > MAX_ENUM_N:
            raise ConfigError(f"exhaustive mode supports n <= {MAX_ENUM_N}")
        if self.mode == "random":
            if self.trials < 1:
                raise ConfigError("random mode needs trials >= 1")
            if not 0.0 < self.edge_prob <= 1.0:
                raise ConfigError(f"edge probability must lie in (0, 1], got {self.edge_prob}")

    @classmethod
    def from_file(cls, path) -> "CampaignConfig":
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
        if raw.get("mode") == "random" and "seed" not in raw:
            raise ConfigError("config files for random campaigns must set 'seed'")
        sizes = raw.pop("n", None)
        if sizes is None:
            raise ConfigError("config needs 'n' (an integer or a list of integers)")
        raw["sizes"] = [sizes] if isinstance(sizes, int) else sizes
        try:
            return cls(**raw)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None


def parse_sizes(text: str) -> tuple[int, ...]:
    """``"6"`` -> (6,), ``"3-6"`` -> (3, 4, 5, 6), ``"10,20"`` -> (10, 20)."""
    out = []
    try:
        for part in text.split(","):
            if "-" in part:
                a, b = part.split("-")
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise ConfigError(f"cannot parse graph sizes {text!r}") from None
    return tuple(out)


def trial_seed(seed: int, n: int, trial: int) -> int:
    ss = np.random.SeedSequence([int(seed) & 0xFFFFFFFFFFFFFFFF, n, trial])
    return int(ss.generate_state(1, np.uint64)[0])


@dataclass
class Summary:
    graphs: int = 0
    violations: int = 0
    worst: dict[str, float] = field(default_factory=lambda: {f: float("inf") for f in FAMILIES})
    attainments: dict[str, int] = field(default_factory=dict)
    violating: list[str] = field(default_factory=list)

    def add(self, rep, margins):
        self.graphs += 1
        for k, v in margins.items():
            if v < self.worst[k]:
                self.worst[k] = v
        if not rep.all_pass:
            self.violations += 1
            self.violating.append(rep.source)
        for label in rep.equality_attainments():
            self.attainments[label] = self.attainments.get(label, 0) + 1

    def merge(self, other: "Summary"):
        self.graphs += other.graphs
        self.violations += other.violations
        self.violating.extend(other.violating)
        for k, v in other.worst.items():
            self.worst[k] = min(self.worst[k], v)
        for k, v in other.attainments.items():
            self.attainments[k] = self.attainments.get(k, 0) + v

    def format(self, tol: float) -> str:
        lines = [f"graphs checked: {self.graphs}", f"violations: {self.violations}"]
        lines.append("worst margin per family (negative = violated):")
        for k in FAMILIES:
            lines.append(f"  {k:<22} {self.worst[k]: .3e}")
        lines.append(f"equality attainments (|margin| <= {tol:g}):")
        for k in sorted(self.attainments):
            lines.append(f"  {k:<34} {self.attainments[k]}")
        if self.violating:
            lines.append("violating graphs: " + ", ".join(self.violating[:20]))
        return "\n".join(lines)


def _run_chunk(task) -> tuple[str, Summary]:
    mode, n, lo, hi, cfg = task
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    summ = Summary()
    if mode == "exhaustive":
        items = (
            (f"exhaustive/n={n}/mask={mask}", from_mask(n, mask))
            for mask in connected_masks(n, lo, hi)
        )
    else:
        items = (
            (f"random/n={n}/p={cfg.edge_prob}/seed={cfg.seed}/trial={t}",
             gen_random_connected(n, cfg.edge_prob, trial_seed(cfg.seed, n, t)))
            for t in range(lo, hi)
        )
    for source, g in items:
        rep = evaluate(g, source, cfg.tolerance)
        summ.add(rep, family_margins(rep))
        w.writerows(rep.csv_rows())
    return buf.getvalue(), summ


def _tasks(cfg: CampaignConfig):
    for n in cfg.sizes:
        if cfg.mode == "exhaustive":
            total = 1 << (n * (n - 1) // 2)
            for lo in range(0, total, EXHAUSTIVE_CHUNK):
                yield ("exhaustive", n, lo, min(lo + EXHAUSTIVE_CHUNK, total), cfg)
        else:
            for lo in range(0, cfg.trials, RANDOM_CHUNK):
                yield ("random", n, lo, min(lo + RANDOM_CHUNK, cfg.trials), cfg)


def run_campaign(cfg: CampaignConfig, out=None) -> Summary:
    """Evaluate every graph in scope, stream CSV rows to ``out`` and return the summary."""
    summary = Summary()
    tasks = list(_tasks(cfg))
    if out is not None:
        out.write(",".join(CSV_COLUMNS) + "\n")
    if cfg.workers == 1:
        _collect(map(_run_chunk, tasks), summary, out)
    else:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            _collect(pool.map(_run_chunk, tasks), summary, out)
    return summary


def _collect(results, summary: Summary, out):
    for text, part in results:
        if out is not None:
            out.write(text)
        summary.merge(part)
