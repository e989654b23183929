"""M-moves on plat words and the edge generators used by the search.

Move strings::

    M0-@3  M0+@3        flip the suffix s2 s3 to negative / positive (i odd)
    M0bar+@2 M0bar-@2   same for even i
    M1+@3  M1-@3        append s3 or s3^-1 at the internal end (i odd)
    M1+@3< M1-@3<       remove that trailing letter
    M2>                 shift the outermost letter by n through the residual tangle
    M3@5  M3bar@5       stabilise to B_{k+4} with alpha_5 (or its mirror) and e
    M3@5< M3bar@5<      undo the stabilisation
    M4>   M4<           apply / undo e when n is odd

``apply_*`` functions return literal words; ``apply_move`` and the
enumerators free-reduce their results so that search nodes are canonical.
"""

from __future__ import annotations

import dataclasses
import re
from typing import Literal

from .errors import (
    BraidError,
    EmptyWord,
    EvenHalfIndex,
    FactorizationFailed,
    LetterMismatch,
    ParityMismatch,
    RangeError,
    SuffixMismatch,
    UnknownMove,
)
from .words import (
    BraidWord,
    Letter,
    embed_e,
    free_reduce,
    is_reduced,
    reduce_letters,
    require_even,
    unembed_e,
)

Direction = Literal["forward", "backward"]

KINDS = ("M0", "M0bar", "M1", "M2", "M3", "M3bar", "M4")
_MOVE_RE = re.compile(r"^(M0bar|M0|M1|M2|M3bar|M3|M4)([+-])?(?:@(\d+))?([<>])?$")


@dataclasses.dataclass(frozen=True)
class MoveId:
    kind: str
    param: int | None = None
    sign: int | None = None
    backward: bool = False

    def __str__(self) -> str:
        sign = "" if self.sign is None else ("+" if self.sign > 0 else "-")
        at = "" if self.param is None else f"@{self.param}"
        if self.kind in ("M2", "M4"):
            return f"{self.kind}{'<' if self.backward else '>'}"
        return f"{self.kind}{sign}{at}{'<' if self.backward else ''}"

    @classmethod
    def parse(cls, text: str) -> MoveId:
        m = _MOVE_RE.match(text.strip())
        if not m:
            raise UnknownMove(f"cannot parse move {text!r}")
        kind, sign, param, arrow = m.groups()
        backward = arrow == "<"
        param = int(param) if param is not None else None
        sign = None if sign is None else (1 if sign == "+" else -1)
        needs_param = kind in ("M0", "M0bar", "M1", "M3", "M3bar")
        if needs_param != (param is not None):
            raise UnknownMove(f"move {text!r} has a missing or stray @index")
        if (kind in ("M0", "M0bar", "M1")) != (sign is not None):
            raise UnknownMove(f"move {text!r} has a missing or stray sign")
        if kind in ("M0", "M0bar") and backward:
            raise UnknownMove(f"{kind} direction is given by its sign, not '<'")
        return cls(kind, param, sign, backward)


@dataclasses.dataclass(frozen=True)
class MoveApplication:
    move: MoveId
    before: BraidWord
    after: BraidWord

    def to_dict(self) -> dict:
        return {
            "move": str(self.move),
            "before": self.before.text,
            "after": self.after.text,
            "k_before": self.before.k,
            "k_after": self.after.k,
        }


def _check_index(w: BraidWord, i: int) -> None:
    if not 1 <= i <= w.k:
        raise RangeError(f"index {i} outside 1..{w.k}")


def _prev(i: int, k: int) -> int:
    return (i - 2) % k + 1


def _shift(i: int, n: int, k: int) -> int:
    return (i + n - 1) % k + 1


# -- M0 --------------------------------------------------------------------


def apply_M0(w: BraidWord, i: int, direction: Direction = "forward", bar: bool = False) -> BraidWord:
    """Flip the signs of a trailing s_{i-1}^a s_i^a.

    M0 (i odd) goes positive -> negative forwards; M0bar (i even) goes
    negative -> positive forwards.
    """
    require_even(w)
    _check_index(w, i)
    if bar != (i % 2 == 0):
        raise ParityMismatch(f"{'M0bar' if bar else 'M0'} needs {'even' if bar else 'odd'} i, got {i}")
    source = 1 if (direction == "forward") != bar else -1
    suffix = (Letter(_prev(i, w.k), source), Letter(i, source))
    if w.letters[-2:] != suffix:
        raise SuffixMismatch(f"{w.text!r} does not end with {suffix[0]} {suffix[1]}")
    flipped = tuple(letter.inverse() for letter in suffix)
    return BraidWord(w.k, w.letters[:-2] + flipped)


# -- M1 --------------------------------------------------------------------


def apply_M1(w: BraidWord, i: int, sign: int = 1, direction: Direction = "forward") -> BraidWord:
    """Append (or remove) s_i^sign at the internal end; i must be odd."""
    require_even(w)
    _check_index(w, i)
    if i % 2 == 0:
        raise ParityMismatch(f"M1 needs odd i, got {i}")
    letter = Letter(i, sign)
    if direction == "forward":
        return BraidWord(w.k, w.letters + (letter,))
    if not w.letters or w.letters[-1] != letter:
        raise LetterMismatch(f"{w.text!r} does not end with {letter}")
    return BraidWord(w.k, w.letters[:-1])


# -- M2 --------------------------------------------------------------------


def apply_M2(w: BraidWord, direction: Direction = "forward") -> BraidWord:
    """Push the outermost letter s_l^e through the residual tangle to s_{l+n}^e.

    Shifting by n is its own inverse modulo 2n, so both directions agree.
    """
    n = require_even(w)
    if not w.letters:
        raise EmptyWord("M2 needs a nonempty word")
    index, sign = w.letters[0]
    shift = n if direction == "forward" else -n
    return BraidWord(w.k, (Letter(_shift(index, shift, w.k), sign),) + w.letters[1:])


# -- M3 --------------------------------------------------------------------


def alpha_word(l: int, k: int, bar: bool = False) -> BraidWord:
    """alpha_l = s2 s3 ... s_{l-2} s_{l-1} s_{l-2}^-1 ... s2^-1 in B_{k+4}."""
    if not 3 <= l <= k + 4:
        raise RangeError(f"alpha_l needs 3 <= l <= {k + 4}, got {l}")
    s = -1 if bar else 1
    letters = (
        [Letter(i, s) for i in range(2, l - 1)]
        + [Letter(l - 1, s)]
        + [Letter(i, -s) for i in range(l - 2, 1, -1)]
    )
    return BraidWord(k + 4, tuple(letters))


def m3_parameters(k: int) -> list[int]:
    """Values of l for which alpha_l e(.) keeps the closure: every l in
    3..k+4 except the two still positions n+3, n+4."""
    n = k // 2
    return [l for l in range(3, k + 5) if l not in (n + 3, n + 4)]


def _m3_guard(k: int, l: int) -> None:
    if k % 2 or (k // 2) % 2:
        raise ParityMismatch(f"M3 needs k = 2n with n even, got k={k}")
    if l not in m3_parameters(k):
        raise RangeError(f"M3 on B_{k} needs l in {m3_parameters(k)}, got {l}")


def apply_M3(
    w: BraidWord, l: int, bar: bool = False, direction: Direction = "forward"
) -> BraidWord:
    if direction == "forward":
        _m3_guard(w.k, l)
        alpha = alpha_word(l, w.k, bar)
        return BraidWord(w.k + 4, alpha.letters + embed_e(w).letters)
    k = w.k - 4
    if k < 2:
        raise RangeError(f"no M3 lands on B_{w.k}")
    _m3_guard(k, l)
    alpha = alpha_word(l, k, bar).letters
    if w.letters[: len(alpha)] != alpha:
        raise FactorizationFailed(f"{w.text!r} does not start with alpha_{l}")
    rest = BraidWord(w.k, w.letters[len(alpha) :])
    return _unembed_checked(rest)


def _unembed_checked(w: BraidWord) -> BraidWord:
    v = unembed_e(w)
    if reduce_letters(embed_e(v).letters) != reduce_letters(w.letters):
        raise FactorizationFailed(f"{w.text!r} is not in the image of e")
    return v


# -- M4 --------------------------------------------------------------------


def apply_M4(w: BraidWord, direction: Direction = "forward") -> BraidWord:
    """For odd n the extremum-pair stabilisation is the embedding e itself."""
    if direction == "forward":
        n = require_even(w)
        if n % 2 == 0:
            raise EvenHalfIndex("M4 has no closed form for even n")
        return embed_e(w)
    n = require_even(w) - 2
    if n < 1 or n % 2 == 0:
        raise EvenHalfIndex(f"no odd-n M4 lands on B_{w.k}")
    return _unembed_checked(w)


# -- dispatch --------------------------------------------------------------


def apply_move(w: BraidWord, move: MoveId | str) -> BraidWord:
    """Apply a move given by id or string; the result is free-reduced."""
    if isinstance(move, str):
        move = MoveId.parse(move)
    kind = move.kind
    if kind in ("M0", "M0bar"):
        bar = kind == "M0bar"
        forward = (move.sign < 0) != bar
        out = apply_M0(w, move.param, "forward" if forward else "backward", bar)
    elif kind == "M1":
        out = apply_M1(w, move.param, move.sign, "backward" if move.backward else "forward")
    elif kind == "M2":
        out = apply_M2(w, "backward" if move.backward else "forward")
    elif kind in ("M3", "M3bar"):
        direction = "backward" if move.backward else "forward"
        out = apply_M3(w, move.param, kind == "M3bar", direction)
    elif kind == "M4":
        out = apply_M4(w, "backward" if move.backward else "forward")
    else:
        raise UnknownMove(kind)
    return free_reduce(out)


def _m0_id(i: int, result_sign: int) -> MoveId:
    return MoveId("M0" if i % 2 else "M0bar", i, result_sign)


def _candidate_ids(w: BraidWord, max_k: int) -> list[MoveId]:
    k, letters = w.k, w.letters
    n = k // 2
    ids: list[MoveId] = []
    if len(letters) >= 2:
        a, b = letters[-2], letters[-1]
        if a.sign == b.sign and a.index == _prev(b.index, k):
            ids.append(_m0_id(b.index, -b.sign))
    last = letters[-1] if letters else None
    for i in range(1, k + 1, 2):
        for sign in (1, -1):
            if last != Letter(i, -sign):
                ids.append(MoveId("M1", i, sign))
    if last is not None and last.index % 2:
        ids.append(MoveId("M1", last.index, last.sign, backward=True))
    if letters:
        ids.append(MoveId("M2"))
    if n % 2 == 0 and k + 4 <= max_k:
        for kind in ("M3", "M3bar"):
            ids.extend(MoveId(kind, l) for l in m3_parameters(k))
    small = k - 4
    if small >= 2 and (small // 2) % 2 == 0:
        for kind in ("M3", "M3bar"):
            ids.extend(MoveId(kind, l, backward=True) for l in m3_parameters(small))
    if n % 2 and k + 4 <= max_k:
        ids.append(MoveId("M4"))
    if small >= 2 and (small // 2) % 2:
        ids.append(MoveId("M4", backward=True))
    return ids


def _sort_key(m: MoveId):
    return (KINDS.index(m.kind), m.backward, m.param or 0, -(m.sign or 0))


def enumerate_moves(w: BraidWord, max_k: int) -> list[MoveApplication]:
    """Every applicable move whose result has at most ``max_k`` strands.

    Results are free-reduced.  Order: kind, then direction, then parameters.
    M1 insertions that would cancel the last letter are omitted because the
    matching removal already yields the same word.
    """
    require_even(w)
    out = []
    for move in sorted(_candidate_ids(w, max_k), key=_sort_key):
        try:
            after = apply_move(w, move)
        except FactorizationFailed:
            continue
        if after.k <= max_k:
            out.append(MoveApplication(move, w, after))
    return out


def predecessors(w: BraidWord, max_k: int) -> list[MoveApplication]:
    """All applications (v, move) produced by ``enumerate_moves(v, max_k)``
    with result ``w``, for free-reduced ``w``.

    Free reduction makes M0 and M2 non-invertible word by word, so their
    preimages are solved for in the free group and then checked.
    """
    k, letters = w.k, w.letters
    n = require_even(w)
    found: list[tuple[MoveId, BraidWord]] = []

    def consider(move: MoveId, v: BraidWord) -> None:
        if v.k > max_k or not is_reduced(v.letters):
            return
        try:
            ok = apply_move(v, move) == w
        except BraidError:
            return
        if ok and any(m == move for m in _candidate_ids(v, max_k)):
            found.append((move, v))

    for i in range(1, k + 1):
        for a in (1, -1):
            u = reduce_letters(letters + (Letter(i, a), Letter(_prev(i, k), a)))
            v = u + (Letter(_prev(i, k), a), Letter(i, a))
            consider(_m0_id(i, -a), BraidWord(k, v))
    if letters and letters[-1].index % 2:
        last = letters[-1]
        consider(MoveId("M1", last.index, last.sign), BraidWord(k, letters[:-1]))
    for i in range(1, k + 1, 2):
        for sign in (1, -1):
            consider(MoveId("M1", i, sign, backward=True), BraidWord(k, letters + (Letter(i, sign),)))
    for l in range(1, k + 1):
        for e in (1, -1):
            v = reduce_letters((Letter(l, e), Letter(_shift(l, n, k), -e)) + letters)
            if v and v[0] == Letter(l, e):
                consider(MoveId("M2"), BraidWord(k, v))
    small = k - 4
    if small >= 2 and (small // 2) % 2 == 0:
        for kind in ("M3", "M3bar"):
            for l in m3_parameters(small):
                try:
                    v = apply_M3(w, l, kind == "M3bar", "backward")
                except FactorizationFailed:
                    continue
                consider(MoveId(kind, l), v)
    if n % 2 == 0 and k + 4 <= max_k:
        for kind in ("M3", "M3bar"):
            for l in m3_parameters(k):
                v = free_reduce(apply_M3(w, l, kind == "M3bar"))
                consider(MoveId(kind, l, backward=True), v)
    if small >= 2 and (small // 2) % 2:
        try:
            consider(MoveId("M4"), apply_M4(w, "backward"))
        except FactorizationFailed:
            pass
    if n % 2 and k + 4 <= max_k:
        consider(MoveId("M4", backward=True), free_reduce(embed_e(w)))
    found.sort(key=lambda pair: (_sort_key(pair[0]), pair[1].k, pair[1].ints()))
    return [MoveApplication(move, v, w) for move, v in found]
