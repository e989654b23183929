#!/usr/bin/env python3
"""Stress the bounded M-equivalence search.

Two experiments:

* ``perturb``: scramble short words with random M-moves and check the search
  reconnects each pair (a completeness probe on known-equivalent inputs);
* ``pairs``: run the search on random pairs that share every implemented
  invariant and tabulate how often it connects them inside the caps.

Results go to stdout as JSON lines plus a summary on stderr.
"""

from __future__ import annotations

import argparse
import collections
import dataclasses
import itertools
import json
import random
import sys
import time

from platbraid.search import SearchConfig, invariant_signature, m_equivalent, perturb, replay
from platbraid.words import BraidWord, free_reduce


@dataclasses.dataclass
class HarnessConfig:
    mode: str = "perturb"
    trials: int = 100
    seed: int = 0
    strand_counts: tuple[int, ...] = (4, 6)
    start_length: int = 2
    perturb_moves: int = 3
    search: SearchConfig = dataclasses.field(default_factory=SearchConfig)


def short_words(k: int, max_len: int) -> list[BraidWord]:
    alphabet = [v for i in range(1, k + 1) for v in (i, -i)]
    out = []
    for length in range(max_len + 1):
        out += [BraidWord.from_ints(k, vals) for vals in itertools.product(alphabet, repeat=length)]
    return out


def run_perturb(cfg: HarnessConfig, rng: random.Random):
    pool = [w for k in cfg.strand_counts for w in short_words(k, cfg.start_length)]
    for trial in range(cfg.trials):
        start = rng.choice(pool)
        end, _ = perturb(start, cfg.perturb_moves, cfg.seed * 100_003 + trial, cfg.search)
        out = m_equivalent(start, end, cfg.search)
        ok = out.connected and replay(start, out.path) == free_reduce(end)
        yield {"start": [start.k, start.text], "end": [end.k, end.text], "replayed": ok, **out.to_dict()}


def run_pairs(cfg: HarnessConfig, rng: random.Random):
    pool = [w for k in cfg.strand_counts for w in short_words(k, cfg.start_length)]
    by_sig = collections.defaultdict(list)
    for w in pool:
        by_sig[(w.k, invariant_signature(w))].append(w)
    groups = [g for g in by_sig.values() if len(g) > 1]
    for _ in range(cfg.trials):
        a, b = rng.sample(rng.choice(groups), 2)
        out = m_equivalent(a, b, cfg.search)
        yield {"a": [a.k, a.text], "b": [b.k, b.text], **out.to_dict()}


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("mode", choices=("perturb", "pairs"))
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k", type=int, nargs="+", default=[4, 6])
    p.add_argument("--start-length", type=int, default=2)
    p.add_argument("--moves", type=int, default=3)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--max-strands", type=int, default=12)
    args = p.parse_args(argv)
    cfg = HarnessConfig(
        args.mode, args.trials, args.seed, tuple(args.k), args.start_length, args.moves,
        SearchConfig(max_strands=args.max_strands, node_budget=args.budget),
    )
    rng = random.Random(cfg.seed)
    runner = run_perturb if cfg.mode == "perturb" else run_pairs
    verdicts: collections.Counter = collections.Counter()
    t0 = time.perf_counter()
    for row in runner(cfg, rng):
        verdicts[row["verdict"]] += 1
        print(json.dumps(row))
    print(
        f"{cfg.trials} trials in {time.perf_counter() - t0:.1f}s: "
        + ", ".join(f"{v}={c}" for v, c in sorted(verdicts.items())),
        file=sys.stderr,
    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
