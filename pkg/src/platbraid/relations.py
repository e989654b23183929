"""Relations of the sphere braid group and a bounded equality checker.

The checker explores rewrites by free reduction/insertion and the enabled
relation rules from both ends at once.  It is sound but incomplete: an
``Equal`` verdict carries a replayable rewrite path, anything else is
``Unknown``.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Iterable, Literal

from .bfs import bidirectional_search, thread_count
from .errors import PatternMismatch, RelationDisabled, StrandMismatch
from .words import (
    BraidWord,
    Letter,
    abelian_class,
    permutation_of,
    sphere_relator,
)


class RelationRule(enum.Enum):
    FarCommutation = "FC"
    YangBaxter = "YB"
    SphereRelation = "SR"
    # The printed expansion of s_k in terms of the other generators does not
    # typecheck; the rule exists so callers can name it, but it never fires.
    SigmaKExpansion = "SK"


DEFAULT_RULES = frozenset(
    {RelationRule.FarCommutation, RelationRule.YangBaxter, RelationRule.SphereRelation}
)


def commutes(k: int, left: int, right: int, literal: bool = False) -> bool:
    """Whether s_left s_right = s_right s_left may be applied."""
    if literal:
        return left - right > 2
    d = (left - right) % k
    return d not in (0, 1, k - 1)


def _adjacent(k: int, a: int, b: int) -> bool:
    return k >= 3 and (b == a % k + 1 or a == b % k + 1)


def _relator_variants(k: int) -> list[tuple[str, tuple[Letter, ...]]]:
    out = []
    for rotation in range(k):
        for sign in (1, -1):
            tag = f"r{rotation}{'+' if sign > 0 else '-'}"
            out.append((tag, sphere_relator(k, rotation, sign).letters))
    return out


def _match_relator(k: int, letters: tuple[Letter, ...], p: int) -> str | None:
    size = 2 * (k - 1)
    chunk = letters[p : p + size]
    if len(chunk) != size:
        return None
    for tag, variant in _relator_variants(k):
        if chunk == variant:
            return tag
    return None


def _far(k: int, letters, p: int, literal: bool) -> tuple[Letter, ...] | None:
    if p + 1 >= len(letters):
        return None
    a, b = letters[p], letters[p + 1]
    if not commutes(k, a.index, b.index, literal):
        return None
    return letters[:p] + (b, a) + letters[p + 2 :]


def _yang_baxter(k: int, letters, p: int) -> tuple[Letter, ...] | None:
    if p + 2 >= len(letters):
        return None
    a, b, c = letters[p : p + 3]
    if a != c or a.sign != b.sign or not _adjacent(k, a.index, b.index):
        return None
    return letters[:p] + (b, a, b) + letters[p + 3 :]


def apply_relation(
    w: BraidWord, rule: RelationRule, position: int, literal_commutation: bool = False
) -> BraidWord:
    """Rewrite ``w`` by ``rule`` at letter offset ``position``.

    SphereRelation deletes a (rotated, possibly inverted) sphere relator that
    starts at ``position``.
    """
    k, letters = w.k, w.letters
    if rule is RelationRule.FarCommutation:
        out = _far(k, letters, position, literal_commutation)
    elif rule is RelationRule.YangBaxter:
        out = _yang_baxter(k, letters, position)
    elif rule is RelationRule.SphereRelation:
        out = None
        if _match_relator(k, letters, position):
            out = letters[:position] + letters[position + 2 * (k - 1) :]
    else:
        raise RelationDisabled(f"{rule.name} is not available")
    if out is None:
        raise PatternMismatch(f"{rule.name} does not match {w.text!r} at {position}")
    return BraidWord(k, out)


@dataclasses.dataclass(frozen=True)
class RewriteStep:
    label: str
    before: BraidWord
    after: BraidWord


@dataclasses.dataclass(frozen=True)
class WordEquality:
    verdict: Literal["Equal", "Unknown"]
    path: tuple[RewriteStep, ...] | None = None
    reason: str | None = None
    nodes_expanded: int = 0

    @property
    def equal(self) -> bool:
        return self.verdict == "Equal"


class _RewriteGraph:
    def __init__(self, k: int, rules: Iterable[RelationRule], max_length: int, literal: bool):
        rules = frozenset(rules)
        if RelationRule.SigmaKExpansion in rules:
            raise RelationDisabled("SigmaKExpansion has no sound reading and cannot be enabled")
        self.k = k
        self.rules = rules
        self.max_length = max_length
        self.literal = literal
        self.alphabet = [Letter(i, s) for i in range(1, k + 1) for s in (1, -1)]
        self.relators = _relator_variants(k) if RelationRule.SphereRelation in rules else []
        self.relator_size = 2 * (k - 1)

    def successors(self, letters: tuple[Letter, ...]) -> list[tuple[str, tuple[Letter, ...]]]:
        k, size = self.k, len(letters)
        out = []
        for p in range(size - 1):
            a, b = letters[p], letters[p + 1]
            if a.index == b.index and a.sign == -b.sign:
                out.append((f"FR-@{p}", letters[:p] + letters[p + 2 :]))
        if size + 2 <= self.max_length:
            for p in range(size + 1):
                for x in self.alphabet:
                    out.append((f"FR+@{p}:{x}", letters[:p] + (x, x.inverse()) + letters[p:]))
        out.extend(self._symmetric(letters))
        if self.relators:
            for p in range(size):
                if _match_relator(k, letters, p):
                    out.append((f"SR-@{p}", letters[:p] + letters[p + self.relator_size :]))
            if size + self.relator_size <= self.max_length:
                for p in range(size + 1):
                    for tag, variant in self.relators:
                        out.append((f"SR+@{p}:{tag}", letters[:p] + variant + letters[p:]))
        return out

    def predecessors(self, letters: tuple[Letter, ...]) -> list[tuple[str, tuple[Letter, ...]]]:
        k, size = self.k, len(letters)
        out = []
        # u --FR-@p--> letters: u has a cancelling pair at p
        if size + 2 <= self.max_length:
            for p in range(size + 1):
                for x in self.alphabet:
                    out.append((f"FR-@{p}", letters[:p] + (x, x.inverse()) + letters[p:]))
        for p in range(size - 1):
            a, b = letters[p], letters[p + 1]
            if a.index == b.index and a.sign == -b.sign:
                out.append((f"FR+@{p}:{a}", letters[:p] + letters[p + 2 :]))
        if self.literal:
            if RelationRule.FarCommutation in self.rules:
                for p in range(size - 1):
                    u = letters[:p] + (letters[p + 1], letters[p]) + letters[p + 2 :]
                    if _far(k, u, p, True) == letters:
                        out.append((f"FC@{p}", u))
            if RelationRule.YangBaxter in self.rules:
                for p in range(size - 2):
                    u = _yang_baxter(k, letters, p)
                    if u is not None:
                        out.append((f"YB@{p}", u))
        else:
            out.extend(self._symmetric(letters))
        if self.relators:
            if size + self.relator_size <= self.max_length:
                for p in range(size + 1):
                    for _, variant in self.relators:
                        out.append((f"SR-@{p}", letters[:p] + variant + letters[p:]))
            for p in range(size):
                tag = _match_relator(k, letters, p)
                if tag:
                    out.append((f"SR+@{p}:{tag}", letters[:p] + letters[p + self.relator_size :]))
        return out

    def _symmetric(self, letters):
        # commutation and Yang-Baxter rewrites are their own inverses
        out = []
        if RelationRule.FarCommutation in self.rules:
            for p in range(len(letters) - 1):
                u = _far(self.k, letters, p, self.literal)
                if u is not None:
                    out.append((f"FC@{p}", u))
        if RelationRule.YangBaxter in self.rules:
            for p in range(len(letters) - 2):
                u = _yang_baxter(self.k, letters, p)
                if u is not None:
                    out.append((f"YB@{p}", u))
        return out


def word_equal_bounded(
    a: BraidWord,
    b: BraidWord,
    budget: int = 10_000,
    max_length: int | None = None,
    rules: Iterable[RelationRule] = DEFAULT_RULES,
    literal_commutation: bool = False,
) -> WordEquality:
    """Look for a rewrite path from ``a`` to ``b`` expanding at most ``budget`` nodes.

    Words whose strand permutations or abelian classes differ are rejected
    immediately with reason ``NotEqualByInvariant``.  Intermediate words are
    capped at ``max_length`` letters (default: two more than the longer input).
    """
    if a.k != b.k:
        raise StrandMismatch(f"words live on {a.k} and {b.k} strands")
    if permutation_of(a) != permutation_of(b) or abelian_class(a) != abelian_class(b):
        return WordEquality("Unknown", reason="NotEqualByInvariant")
    if max_length is None:
        max_length = max(len(a), len(b)) + 2
    graph = _RewriteGraph(a.k, rules, max_length, literal_commutation)
    result = bidirectional_search(
        a.letters, b.letters, graph.successors, graph.predecessors, budget, thread_count()
    )
    if result.status != "found":
        reason = "BudgetExceeded" if result.status == "budget" else "Exhausted"
        return WordEquality("Unknown", reason=reason, nodes_expanded=result.expanded)
    path = tuple(
        RewriteStep(label, BraidWord(a.k, u), BraidWord(a.k, v)) for label, u, v in result.path
    )
    return WordEquality("Equal", path=path, nodes_expanded=result.expanded)
