"""Circular braid words over k strands and their elementary algebra.

A word is read left to right from the residual side of a plat towards the
internal tangle: the leftmost letter is the outermost ring of the annulus
diagram, and ``compose(a, b)`` nests ``b`` inside ``a``.  Generator indices
are circular, so ``sigma_k`` crosses strands ``k`` and ``1``.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    IndexOutOfRange,
    InvalidPosition,
    MalformedToken,
    OddStrandCount,
    StrandMismatch,
)


class Letter(NamedTuple):
    index: int  # residue in 1..k
    sign: int  # +1 or -1

    def inverse(self) -> Letter:
        return Letter(self.index, -self.sign)

    def __str__(self) -> str:
        return str(self.index * self.sign)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    k: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"strand count must be positive, got {self.k}")
        letters = tuple(Letter(int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.k:
                raise IndexOutOfRange(f"generator index {i} outside 1..{self.k}")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, k: int, values: Iterable[int]) -> BraidWord:
        """Build a word from signed integers, e.g. ``[1, -2]`` for s1 s2^-1."""
        letters = []
        for v in values:
            if v == 0:
                raise IndexOutOfRange("generator index 0 is not allowed")
            letters.append(Letter(abs(v), 1 if v > 0 else -1))
        return cls(k, tuple(letters))

    @property
    def text(self) -> str:
        return " ".join(str(letter) for letter in self.letters)

    @property
    def n(self) -> int:
        """Half the strand count; only meaningful for plat words."""
        return self.k // 2

    def ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def key(self) -> tuple[int, tuple[Letter, ...]]:
        return (self.k, self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"BraidWord(k={self.k}, {self.text!r})"


def require_even(w: BraidWord) -> int:
    """Return n = k/2, raising OddStrandCount for odd k."""
    if w.k % 2:
        raise OddStrandCount(f"plat closure needs an even strand count, got k={w.k}")
    return w.k // 2


def parse_word(text: str, k: int) -> BraidWord:
    """Parse whitespace separated signed integers such as ``"1 -2 4"``."""
    values = []
    for token in text.split():
        try:
            v = int(token)
        except ValueError:
            raise MalformedToken(f"not a signed integer: {token!r}") from None
        if v == 0 or abs(v) > k:
            raise IndexOutOfRange(f"token {token!r} outside ±1..±{k}")
        values.append(v)
    return BraidWord.from_ints(k, values)


def print_word(w: BraidWord) -> str:
    return w.text


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.k != b.k:
        raise StrandMismatch(f"cannot compose words on {a.k} and {b.k} strands")
    return BraidWord(a.k, a.letters + b.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.k, tuple(letter.inverse() for letter in reversed(w.letters)))


def reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.k, reduce_letters(w.letters))


def is_reduced(letters: Sequence[Letter]) -> bool:
    return all(
        not (a.index == b.index and a.sign == -b.sign) for a, b in zip(letters, letters[1:])
    )


@dataclasses.dataclass(frozen=True)
class Permutation:
    """A bijection of the residues 1..k; ``images[i - 1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection on 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, k: int) -> Permutation:
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def from_function(cls, k: int, func) -> Permutation:
        return cls(tuple(func(i) for i in range(1, k + 1)))

    @property
    def k(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other``."""
        if other.k != self.k:
            raise StrandMismatch("permutations act on different strand counts")
        return Permutation(tuple(other(x) for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.k
        for i, image in enumerate(self.images, start=1):
            inv[image - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, sorted."""
        seen = set()
        out = []
        for start in range(1, self.k + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self(i)
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())


def permutation_of(w: BraidWord) -> Permutation:
    """The strand permutation: bottom index i goes to top index f(i).

    Letters act left to right and signs are ignored.
    """
    k = w.k
    position = list(range(k + 1))  # position[strand] for strands named by start
    occupant = list(range(k + 1))  # occupant[position]
    for index, _ in w.letters:
        j = index % k + 1
        a, b = occupant[index], occupant[j]
        occupant[index], occupant[j] = b, a
        position[a], position[b] = j, index
    return Permutation(tuple(position[1:]))


def exponent_sum(w: BraidWord) -> int:
    return sum(sign for _, sign in w.letters)


def abelian_class(w: BraidWord) -> int:
    """Exponent sum modulo 2(k - 1), the order of the abelianised group."""
    modulus = 2 * (w.k - 1)
    total = exponent_sum(w)
    return total % modulus if modulus else total


def sphere_relator(k: int, rotation: int = 0, sign: int = 1) -> BraidWord:
    """s1 s2 ... s_{k-2} s_{k-1}^2 s_{k-2} ... s1, optionally rotated by ``rotation``."""
    if k < 2:
        raise ValueError("the sphere relator needs at least two strands")
    ascending = list(range(1, k))
    indices = ascending + ascending[::-1]
    return BraidWord(k, tuple(Letter((i - 1 + rotation) % k + 1, sign) for i in indices))


def strand_deletion(w: BraidWord, delete: Iterable[int]) -> BraidWord:
    """Forget the strands starting at the bottom positions in ``delete``.

    Letters crossing a forgotten strand vanish.  Each surviving strand keeps
    a slot in 1..k - |delete| (initially the order-preserving renumbering of
    the survivors) that changes only when it crosses another survivor, so a
    survivor sliding across the k|1 seam past a forgotten strand keeps its
    label.
    """
    k = w.k
    gone = set(delete)
    if not gone <= set(range(1, k + 1)):
        raise InvalidPosition(f"positions {sorted(gone)} not all within 1..{k}")
    if len(gone) >= k:
        raise InvalidPosition("cannot delete every strand")
    k_new = k - len(gone)
    # slot[p]: reduced slot of the strand now at position p, 0 if forgotten
    slot = [0] * (k + 1)
    rank = 0
    for p in range(1, k + 1):
        if p not in gone:
            rank += 1
            slot[p] = rank
    out = []
    for index, sign in w.letters:
        j = index % k + 1
        if slot[index] and slot[j]:
            # survivors trade places and therefore trade slots too
            out.append(Letter(slot[index], sign))
        else:
            slot[index], slot[j] = slot[j], slot[index]
    return BraidWord(k_new, tuple(out))


def embed_letters(letter: Letter, n: int) -> tuple[Letter, ...]:
    index, sign = letter
    if index < n:
        return (Letter(index + 2, sign),)
    if index == n:
        return (
            Letter(n + 2, 1),
            Letter(n + 3, 1),
            Letter(n + 4, sign),
            Letter(n + 3, -1),
            Letter(n + 2, -1),
        )
    if index < 2 * n:
        return (Letter(index + 4, sign),)
    return (
        Letter(2 * n + 4, 1),
        Letter(1, 1),
        Letter(2, sign),
        Letter(1, -1),
        Letter(2 * n + 4, -1),
    )


def embed_e(w: BraidWord) -> BraidWord:
    """Insert four still strands at positions 1, 2, n+3, n+4 of B_{k+4}.

    Crossings in the two gaps (s_n and s_2n) are routed as band words whose
    moving strand passes in front of the still strands.
    """
    n = require_even(w)
    out: list[Letter] = []
    for letter in w.letters:
        out.extend(embed_letters(letter, n))
    return BraidWord(w.k + 4, tuple(out))


def still_positions(k_big: int) -> tuple[int, int, int, int]:
    """Positions of the four strands added by ``embed_e`` in B_{k_big}."""
    n = (k_big - 4) // 2
    return (1, 2, n + 3, n + 4)


def unembed_e(w: BraidWord) -> BraidWord:
    """Left inverse of ``embed_e`` up to free reduction."""
    if w.k % 2 or w.k < 6:
        raise OddStrandCount(f"no embedding lands on k={w.k}")
    return free_reduce(strand_deletion(w, still_positions(w.k)))
