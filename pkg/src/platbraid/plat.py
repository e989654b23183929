"""Invariants of the projective plat closure of a word in B_{2n}.

The closure is modelled entirely on the 2n bottom points of the braid.  Two
fixed-point-free involutions live there:

* ``F = f^-1 g f``, which follows a strand up through the braid, across an
  internal arc (g pairs 2j-1 with 2j) and back down;
* ``s(i) = i + n``, the residual arc joining antipodal points.

Their union is a disjoint union of alternating cycles, one per link
component.  ``phi = s . F`` splits each alternating cycle into two orbits of
equal length (the two traversal directions), which is what
``component_count`` counts.
"""

from __future__ import annotations

import dataclasses

from .words import BraidWord, Permutation, permutation_of, require_even


def internal_matching(k: int) -> Permutation:
    return Permutation.from_function(k, lambda i: i + 1 if i % 2 else i - 1)


def residual_matching(k: int) -> Permutation:
    n = k // 2
    return Permutation.from_function(k, lambda i: (i + n - 1) % k + 1)


def coset_label(i: int, n: int) -> int:
    """Label in 1..n of the coset {i, i + n}."""
    return (i - 1) % n + 1


def internal_map(w: BraidWord) -> Permutation:
    """F = f^-1 g f on bottom points."""
    require_even(w)
    f = permutation_of(w)
    return f.then(internal_matching(w.k)).then(f.inverse())


def traversal_map(w: BraidWord) -> Permutation:
    """phi = s . F: one internal passage followed by one residual arc."""
    return internal_map(w).then(residual_matching(w.k))


def _orbits(phi: Permutation) -> list[tuple[int, ...]]:
    return phi.cycles()


def component_count(w: BraidWord) -> int:
    orbits = _orbits(traversal_map(w))
    return len(orbits) // 2


def _canonical_orbits(w: BraidWord) -> list[tuple[int, ...]]:
    """One phi-orbit per component, started at the least coset representative."""
    n = require_even(w)
    phi = traversal_map(w)
    chosen = []
    seen = set()
    for start in range(1, n + 1):
        if start in seen:
            continue
        orbit = [start]
        i = phi(start)
        while i != start:
            orbit.append(i)
            i = phi(i)
        # the mirror orbit carries the same cosets; block both
        for i in orbit:
            seen.add(coset_label(i, n))
        chosen.append(tuple(orbit))
    return chosen


@dataclasses.dataclass(frozen=True)
class ResidualCycleSet:
    cycles: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def as_lists(self) -> list[list[int]]:
        return [list(c) for c in self.cycles]

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def residual_cycles(w: BraidWord) -> ResidualCycleSet:
    """The residual permutation as canonical cycles of coset labels.

    Each cycle starts at its least label and follows phi from that label's
    representative in 1..n; cycles are sorted by least label.
    """
    n = require_even(w)
    return ResidualCycleSet(
        tuple(tuple(coset_label(i, n) for i in orbit) for orbit in _canonical_orbits(w))
    )


def component_homology(w: BraidWord) -> list[int]:
    """Z/2 class of each component: residual arcs traversed, mod 2.

    Ordered like ``residual_cycles``.
    """
    return [len(orbit) % 2 for orbit in _canonical_orbits(w)]


def witness_scan(w: BraidWord) -> int | None:
    """Least even j such that neither s_j nor s_{j+n} occurs in the word."""
    n = require_even(w)
    used = {index for index, _ in w.letters}
    for j in range(2, w.k + 1, 2):
        if j not in used and (j + n - 1) % w.k + 1 not in used:
            return j
    return None


def affine_witness(w: BraidWord, literal: bool = False) -> int | None:
    """An even class certifying that the closure is affine, if the word shows one.

    For odd n the total homology class of the closure is n mod 2 = 1, so the
    closure is never affine and no witness is returned unless ``literal`` asks
    for the raw scan.  ``None`` means only that this word exhibits no witness.
    """
    n = require_even(w)
    if n % 2 and not literal:
        return None
    return witness_scan(w)


@dataclasses.dataclass(frozen=True)
class PlatReport:
    word: BraidWord
    components: int
    cycles: ResidualCycleSet
    homology: tuple[int, ...]
    affine_witness: int | None

    def to_dict(self) -> dict:
        return {
            "k": self.word.k,
            "word": self.word.text,
            "components": self.components,
            "cycles": self.cycles.as_lists(),
            "homology": list(self.homology),
            "affine_witness": self.affine_witness,
        }


def plat_report(w: BraidWord) -> PlatReport:
    cycles = residual_cycles(w)
    return PlatReport(
        word=w,
        components=len(cycles),
        cycles=cycles,
        homology=tuple(component_homology(w)),
        affine_witness=affine_witness(w),
    )


class UnionFind:
    """Disjoint sets with path halving and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size
        self.count = size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1


def oracle_component_count(w: BraidWord) -> int:
    """Count components of the explicit closed-up 1-complex by union-find.

    Vertex (t, p) is position p on the boundary between letter slots t-1 and
    t, for t = 0..len(w).  Strand segments join slots, each crossing joins
    swapped positions, internal arcs join the last slot, residual arcs the
    first.  No permutation algebra is involved.
    """
    n = require_even(w)
    k = w.k
    slots = len(w) + 1

    def vertex(t: int, p: int) -> int:
        return t * k + (p - 1)

    uf = UnionFind(slots * k)
    for t, (index, _) in enumerate(w.letters):
        other = index % k + 1
        for p in range(1, k + 1):
            if p == index:
                uf.union(vertex(t, p), vertex(t + 1, other))
            elif p == other:
                uf.union(vertex(t, p), vertex(t + 1, index))
            else:
                uf.union(vertex(t, p), vertex(t + 1, p))
    last = slots - 1
    for j in range(1, k + 1, 2):
        uf.union(vertex(last, j), vertex(last, j + 1))
    for i in range(1, n + 1):
        uf.union(vertex(0, i), vertex(0, i + n))
    return uf.count
