"""Level-synchronous bidirectional breadth-first search on a directed graph.

Both the relation engine and the move search use this.  The graph is given
by two callbacks: ``successors(u)`` yields ``(label, v)`` for edges u -> v and
``predecessors(v)`` yields ``(label, u)`` for the same edges seen from v.

When the two sides meet, every shortest path is recoverable from the parent
lists kept on both sides; the reported one is the shortest path whose label
sequence is lexicographically least, so the result does not depend on the
order in which frontier nodes happened to be expanded.
"""

from __future__ import annotations

import dataclasses
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Generic, Hashable, Literal, Sequence, TypeVar

Node = TypeVar("Node", bound=Hashable)
Edges = Callable[[Node], Sequence[tuple[str, Node]]]


@dataclasses.dataclass
class BidiResult(Generic[Node]):
    status: Literal["found", "exhausted", "budget"]
    path: list[tuple[str, Node, Node]] | None
    expanded: int
    forward_depth: int
    backward_depth: int


def thread_count(default: int = 1) -> int:
    raw = os.environ.get("PLATBRAID_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        return default


class _Side:
    def __init__(self, root, neighbours):
        self.neighbours = neighbours
        self.dist = {root: 0}
        # links[v]: (label, w) with dist[w] == dist[v] - 1
        self.links: dict = {root: []}
        self.frontier = [root]
        self.depth = 0


def bidirectional_search(
    start: Node,
    goal: Node,
    successors: Edges,
    predecessors: Edges,
    budget: int,
    threads: int = 1,
) -> BidiResult[Node]:
    if start == goal:
        return BidiResult("found", [], 0, 0, 0)
    fwd = _Side(start, successors)
    bwd = _Side(goal, predecessors)
    expanded = 0
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        while fwd.frontier and bwd.frontier:
            side, other = (fwd, bwd) if len(fwd.frontier) <= len(bwd.frontier) else (bwd, fwd)
            next_level = []
            depth = side.depth + 1
            pos = 0
            while pos < len(side.frontier):
                if expanded >= budget:
                    return BidiResult("budget", None, expanded, fwd.depth, bwd.depth)
                chunk = side.frontier[pos : pos + min(budget - expanded, 64 if pool else 1)]
                pos += len(chunk)
                expanded += len(chunk)
                results = pool.map(side.neighbours, chunk) if pool else map(side.neighbours, chunk)
                for node, edges in zip(chunk, results):
                    for label, nb in edges:
                        d = side.dist.get(nb)
                        if d is None:
                            side.dist[nb] = depth
                            side.links[nb] = [(label, node)]
                            next_level.append(nb)
                        elif d == depth:
                            side.links[nb].append((label, node))
            side.frontier = next_level
            side.depth = depth
            meetings = [v for v in next_level if v in other.dist]
            if meetings:
                path = _reconstruct(start, fwd, bwd, meetings)
                return BidiResult("found", path, expanded, fwd.depth, bwd.depth)
        return BidiResult("exhausted", None, expanded, fwd.depth, bwd.depth)
    finally:
        if pool:
            pool.shutdown()


def _reconstruct(start, fwd: _Side, bwd: _Side, meetings) -> list:
    da = fwd.dist[meetings[0]]
    db = bwd.dist[meetings[0]]
    total = da + db
    # layers[t]: nodes at position t of some shortest path, for t <= da
    layers = [set() for _ in range(da + 1)]
    layers[da] = set(meetings)
    # forward_edges[t][u]: (label, v) with u at position t, v in layers[t + 1]
    forward_edges: list[dict] = [dict() for _ in range(da)]
    for t in range(da, 0, -1):
        for v in layers[t]:
            for label, u in fwd.links[v]:
                layers[t - 1].add(u)
                forward_edges[t - 1].setdefault(u, []).append((label, v))
    path = []
    cur = start
    for t in range(total):
        if t < da:
            options = forward_edges[t][cur]
        else:
            options = bwd.links[cur]
        label, nxt = min(options, key=lambda e: (e[0], repr(e[1])))
        path.append((label, cur, nxt))
        cur = nxt
    return path
