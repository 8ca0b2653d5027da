"""Exhaustive conjecture sweeps with checkpointing and an ordered worker pool."""

from __future__ import annotations

import json
import os
import sys
from dataclasses import asdict, dataclass, field
from itertools import islice
from multiprocessing import Pool
from typing import Iterable, Iterator

from .analysis import Budgets, COUNTEREXAMPLE_A, COUNTEREXAMPLE_B, analyze
from .errors import StellateError
from .graph import Graph, all_graphs, is_connected
from .io import encode_graph6, parse_graph6, read_graphs

DISCONNECTED = "disconnected"
DEFAULT_CHECKPOINT_EVERY = 25
DEFAULT_MAX_N = 6


class CheckpointError(StellateError):
    """A checkpoint file is unreadable or inconsistent."""


@dataclass
class SweepState:
    source: str
    cursor: int = 0
    tallies: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)
    conjecture1_discrepancies: list = field(default_factory=list)
    budgets: dict = field(default_factory=dict)
    check_conjecture1: bool = False
    seed: int = 0
    report_offset: int = 0

    def record(self, report: dict | None) -> None:
        verdict = DISCONNECTED if report is None else report["verdict"]
        self.tallies[verdict] = self.tallies.get(verdict, 0) + 1
        if report is not None:
            if report["verdict"] in (COUNTEREXAMPLE_A, COUNTEREXAMPLE_B):
                self.counterexamples.append({"graph6": report["graph6"], "verdict": report["verdict"]})
            if report.get("verdict_conjecture1"):
                self.conjecture1_discrepancies.append(report["graph6"])
        self.cursor += 1

    @property
    def found_counterexample(self) -> bool:
        return bool(self.counterexamples or self.conjecture1_discrepancies)

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, obj: dict) -> "SweepState":
        try:
            state = cls(**obj)
        except TypeError as exc:
            raise CheckpointError(f"corrupted checkpoint: {exc}") from None
        if sum(state.tallies.values()) != state.cursor:
            raise CheckpointError("corrupted checkpoint: tallies do not sum to the cursor")
        return state

    def save(self, path: str) -> None:
        tmp = path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self.to_json(), fh, sort_keys=True)
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str) -> "SweepState":
        try:
            with open(path) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from None
        if not isinstance(obj, dict):
            raise CheckpointError("corrupted checkpoint: not an object")
        return cls.from_json(obj)


def internal_source(max_n: int) -> Iterator[Graph]:
    """Connected graphs on 1..max_n vertices, one per isomorphism class."""
    for n in range(1, max_n + 1):
        yield from all_graphs(n, connected_only=True)


def file_source(path: str) -> Iterator[Graph]:
    if path == "-":
        yield from read_graphs(sys.stdin)
        return
    with open(path) as fh:
        yield from read_graphs(fh)


def _work(args):
    g6, budgets, check_c1 = args
    g = parse_graph6(g6)
    if not is_connected(g):
        return None
    rep = analyze(g, Budgets(**budgets), check_conjecture1=check_c1)
    rep.pop("timing", None)
    return rep


def run_sweep(graphs: Iterable[Graph], state: SweepState, report_path: str | None = None,
              checkpoint_path: str | None = None, every: int = DEFAULT_CHECKPOINT_EVERY,
              jobs: int = 1, stop_after: int | None = None) -> SweepState:
    """Analyse ``graphs`` from ``state.cursor`` onwards.

    Reports are appended to ``report_path`` as JSON lines (timings dropped so
    output is reproducible); the state is checkpointed every ``every`` graphs.
    ``stop_after`` halts after that many new graphs, which is how interrupted
    runs are simulated in tests.
    """
    pending = islice(graphs, state.cursor, None)
    if stop_after is not None:
        pending = islice(pending, stop_after)
    tasks = ((encode_graph6(g), state.budgets, state.check_conjecture1) for g in pending)

    out = None
    if report_path is not None:
        mode = "r+" if os.path.exists(report_path) else "w"
        out = open(report_path, mode)
        out.seek(state.report_offset)
        out.truncate()
    pool = Pool(jobs) if jobs > 1 else None
    try:
        results = pool.imap(_work, tasks, chunksize=4) if pool else map(_work, tasks)
        for rep in results:
            state.record(rep)
            if out is not None and rep is not None:
                out.write(json.dumps(rep, sort_keys=True) + "\n")
            if checkpoint_path and state.cursor % every == 0:
                if out is not None:
                    out.flush()
                    state.report_offset = out.tell()
                state.save(checkpoint_path)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if out is not None:
            out.flush()
            state.report_offset = out.tell()
            out.close()
    if checkpoint_path:
        state.save(checkpoint_path)
    return state


def sweep(max_n: int | None = None, input_path: str | None = None, budgets: Budgets | None = None,
          check_conjecture1: bool = False, report_path: str | None = None,
          checkpoint_path: str | None = None, resume: str | None = None, jobs: int = 1,
          every: int = DEFAULT_CHECKPOINT_EVERY, seed: int = 0,
          stop_after: int | None = None) -> SweepState:
    """Sweep the internal enumeration up to ``max_n`` or a graph file.

    ``resume`` names a checkpoint file written by an earlier run; its source
    and budgets take precedence.
    """
    if resume:
        state = SweepState.load(resume)
        checkpoint_path = checkpoint_path or resume
    else:
        if (max_n is None) == (input_path is None):
            raise ValueError("give exactly one of max_n and input_path")
        source = f"internal:{max_n}" if max_n is not None else f"file:{input_path}"
        state = SweepState(source=source, budgets=(budgets or Budgets()).as_dict(),
                           check_conjecture1=check_conjecture1, seed=seed)
    kind, _, arg = state.source.partition(":")
    graphs = internal_source(int(arg)) if kind == "internal" else file_source(arg)
    return run_sweep(graphs, state, report_path, checkpoint_path, every, jobs, stop_after)
