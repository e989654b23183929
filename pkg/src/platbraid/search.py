"""Bounded search for M-equivalence between plat words."""

from __future__ import annotations

import dataclasses
import random
import time
from typing import Literal

from .bfs import bidirectional_search, thread_count
from .errors import ConfigError, OddStrandCount
from .moves import MoveApplication, MoveId, apply_move, enumerate_moves, predecessors
from .plat import component_count, component_homology
from .words import BraidWord, free_reduce

Verdict = Literal["Connected", "Exhausted", "BudgetExceeded", "DistinguishedByInvariant"]


@dataclasses.dataclass(frozen=True)
class SearchConfig:
    max_strands: int = 12
    max_word_length: int = 64
    node_budget: int = 100_000

    def __post_init__(self):
        if self.max_strands < 2 or self.max_strands % 2:
            raise ConfigError(f"max_strands must be a positive even number, got {self.max_strands}")
        if self.max_word_length < 1:
            raise ConfigError("max_word_length must be positive")
        if self.node_budget < 0:
            raise ConfigError("node_budget must be non-negative")


@dataclasses.dataclass(frozen=True)
class SearchOutcome:
    verdict: Verdict
    path: tuple[MoveApplication, ...] | None = None
    reason: str | None = None
    nodes_expanded: int = 0
    max_depth_reached: int = 0
    wall_time_ms: float = 0.0

    @property
    def connected(self) -> bool:
        return self.verdict == "Connected"

    def to_dict(self, timing: bool = True) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.path is not None:
            out["path"] = [str(step.move) for step in self.path]
        if self.reason is not None:
            out["reason"] = self.reason
        out["nodes_expanded"] = self.nodes_expanded
        out["max_depth_reached"] = self.max_depth_reached
        out["wall_time_ms"] = round(self.wall_time_ms, 3) if timing else 0
        return out


def invariant_signature(w: BraidWord) -> tuple[int, tuple[int, ...]]:
    """Component count and sorted homology classes, both M-invariant."""
    return component_count(w), tuple(sorted(component_homology(w)))


class _MoveGraph:
    def __init__(self, cfg: SearchConfig):
        self.cfg = cfg

    def _fits(self, w: BraidWord) -> bool:
        return len(w) <= self.cfg.max_word_length

    def successors(self, w: BraidWord):
        return [
            (str(app.move), app.after)
            for app in enumerate_moves(w, self.cfg.max_strands)
            if self._fits(app.after)
        ]

    def predecessors(self, w: BraidWord):
        return [
            (str(app.move), app.before)
            for app in predecessors(w, self.cfg.max_strands)
            if self._fits(app.before)
        ]


def _check_input(w: BraidWord, cfg: SearchConfig) -> None:
    if w.k % 2:
        raise OddStrandCount(f"plat words need even k, got {w.k}")
    if w.k > cfg.max_strands:
        raise ConfigError(f"word on {w.k} strands exceeds max_strands={cfg.max_strands}")
    if len(free_reduce(w)) > cfg.max_word_length:
        raise ConfigError(f"word longer than max_word_length={cfg.max_word_length}")


def m_equivalent(a: BraidWord, b: BraidWord, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Search for a sequence of M-moves turning ``a`` into ``b``.

    Inputs are free-reduced first.  A ``Connected`` path is the shortest one
    found, ties broken by the lexicographically least move strings.
    ``Exhausted`` only means no path exists inside the configured caps.
    """
    cfg = cfg or SearchConfig()
    _check_input(a, cfg)
    _check_input(b, cfg)
    t0 = time.perf_counter()
    sig_a, sig_b = invariant_signature(a), invariant_signature(b)
    if sig_a != sig_b:
        if sig_a[0] != sig_b[0]:
            reason = f"component count {sig_a[0]} != {sig_b[0]}"
        else:
            reason = f"homology classes {list(sig_a[1])} != {list(sig_b[1])}"
        elapsed = (time.perf_counter() - t0) * 1000
        return SearchOutcome("DistinguishedByInvariant", reason=reason, wall_time_ms=elapsed)

    start, goal = free_reduce(a), free_reduce(b)
    graph = _MoveGraph(cfg)
    result = bidirectional_search(
        start, goal, graph.successors, graph.predecessors, cfg.node_budget, thread_count()
    )
    elapsed = (time.perf_counter() - t0) * 1000
    depth = result.forward_depth + result.backward_depth
    if result.status == "found":
        path = tuple(
            MoveApplication(MoveId.parse(label), u, v) for label, u, v in result.path
        )
        return SearchOutcome("Connected", path, None, result.expanded, depth, elapsed)
    verdict = "Exhausted" if result.status == "exhausted" else "BudgetExceeded"
    return SearchOutcome(verdict, None, None, result.expanded, depth, elapsed)


def replay(start: BraidWord, path) -> BraidWord:
    """Apply each move of ``path`` in turn, checking recorded words on the way."""
    w = free_reduce(start)
    for step in path:
        if step.before != w:
            raise ValueError(f"path step {step.move} starts from {step.before!r}, not {w!r}")
        w = apply_move(w, step.move)
        if w != step.after:
            raise ValueError(f"path step {step.move} gives {w!r}, not {step.after!r}")
    return w


def perturb(
    w: BraidWord, moves: int, seed: int, cfg: SearchConfig | None = None
) -> tuple[BraidWord, list[MoveApplication]]:
    """Apply ``moves`` uniformly random applicable M-moves, reproducibly."""
    cfg = cfg or SearchConfig()
    rng = random.Random(seed)
    current = free_reduce(w)
    path: list[MoveApplication] = []
    for _ in range(moves):
        options = [
            app
            for app in enumerate_moves(current, cfg.max_strands)
            if len(app.after) <= cfg.max_word_length
        ]
        if not options:
            break
        step = rng.choice(options)
        path.append(step)
        current = step.after
    return current, path
