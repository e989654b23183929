import itertools

import pytest
from hypothesis import given, settings

from platbraid.errors import (
    EmptyWord,
    EvenHalfIndex,
    ParityMismatch,
    RangeError,
    SuffixMismatch,
    UnknownMove,
)
from platbraid.moves import (
    MoveId,
    alpha_word,
    apply_M0,
    apply_M1,
    apply_M2,
    apply_M3,
    apply_M4,
    apply_move,
    enumerate_moves,
    m3_parameters,
    predecessors,
)
from platbraid.plat import affine_witness
from platbraid.search import invariant_signature
from platbraid.words import BraidWord, free_reduce, parse_word
from strategies import words


def W(k, text):
    return parse_word(text, k)


class TestM0:
    def test_odd(self):
        assert apply_M0(W(4, "4 2 3"), 3) == W(4, "4 -2 -3")

    def test_even_bar(self):
        assert apply_M0(W(4, "1 2"), 2, "backward", bar=True) == W(4, "-1 -2")

    def test_suffix_mismatch(self):
        with pytest.raises(SuffixMismatch):
            apply_M0(W(4, "3 1"), 3)


class TestM1:
    def test_insert(self):
        assert apply_M1(W(4, ""), 1, 1) == W(4, "1")
        assert apply_M1(W(6, "2"), 5, -1) == W(6, "2 -5")

    def test_parity(self):
        with pytest.raises(ParityMismatch):
            apply_M1(W(4, ""), 2, 1)

    def test_remove(self):
        assert apply_M1(W(4, "2 3"), 3, 1, "backward") == W(4, "2")


class TestM2:
    def test_in_place_shift(self):
        # the letter keeps its slot; only its index moves by n
        assert apply_M2(W(4, "1 2")) == W(4, "3 2")
        assert apply_M2(W(4, "4")) == W(4, "2")

    def test_empty(self):
        with pytest.raises(EmptyWord):
            apply_M2(W(4, ""))

    @given(words(k_values=(4, 6, 8)))
    def test_involution(self, w):
        if w.letters:
            assert apply_M2(apply_M2(w)) == w


class TestM3:
    @pytest.mark.parametrize(
        "l, text", [(3, "2"), (4, "2 3 -2"), (5, "2 3 4 -3 -2")]
    )
    def test_alpha(self, l, text):
        assert alpha_word(l, 4) == W(8, text)

    def test_examples(self):
        assert apply_M3(W(4, ""), 3) == W(8, "2")
        assert apply_M3(W(4, "1"), 4) == W(8, "2 3 -2 3")
        assert apply_M3(W(8, "2"), 3, direction="backward") == W(4, "")

    def test_parameters_skip_still_strands(self):
        assert m3_parameters(4) == [3, 4, 7, 8]

    def test_bad_parameter(self):
        with pytest.raises(RangeError):
            apply_M3(W(4, ""), 5)


class TestM4:
    def test_odd_n(self):
        assert apply_M4(W(6, "1")) == W(10, "3")
        assert apply_M4(W(2, "")) == W(6, "")

    def test_even_n_guarded(self):
        with pytest.raises(EvenHalfIndex):
            apply_M4(W(4, "1"))


class TestMoveIds:
    @pytest.mark.parametrize(
        "text", ["M0-@3", "M0bar+@2", "M1+@1", "M1-@3<", "M2>", "M2<", "M3@7", "M3bar@4<", "M4>"]
    )
    def test_round_trip(self, text):
        m = MoveId.parse(text)
        assert MoveId.parse(str(m)) == m

    @pytest.mark.parametrize("text", ["M5", "M1@1", "M0+", "M3+@3", "bogus"])
    def test_rejects(self, text):
        with pytest.raises(UnknownMove):
            MoveId.parse(text)


def test_enumerate_empty_b4():
    moves = [str(a.move) for a in enumerate_moves(W(4, ""), 4)]
    assert moves == ["M1+@1", "M1-@1", "M1+@3", "M1-@3"]


def test_enumerate_contains_expected():
    apps = {str(a.move): a.after for a in enumerate_moves(W(4, "1 2"), 4)}
    assert apps["M2>"] == W(4, "3 2")
    assert apps["M0bar-@2"] == W(4, "-1 -2")
    assert "M1+@3" in apps


def test_enumerate_all_m3_with_room():
    kinds = [a.move for a in enumerate_moves(W(4, "1"), 8) if a.move.kind.startswith("M3")]
    assert len(kinds) == 2 * len(m3_parameters(4))


@settings(max_examples=60)
@given(words(k_values=(2, 4, 6), max_len=4))
def test_moves_preserve_invariants(w):
    sig = invariant_signature(w)
    for app in enumerate_moves(w, 10):
        assert invariant_signature(app.after) == sig, str(app.move)


@settings(max_examples=60)
@given(words(k_values=(4, 8), max_len=5))
def test_witness_stable_under_literal_m0_m2(w):
    has = affine_witness(w) is not None
    for app in enumerate_moves(w, w.k):
        m = app.move
        if m.kind == "M2":
            literal = apply_M2(w, "backward" if m.backward else "forward")
        elif m.kind in ("M0", "M0bar"):
            bar = m.kind == "M0bar"
            literal = apply_M0(w, m.param, "forward" if (m.sign < 0) != bar else "backward", bar)
        else:
            continue
        assert (affine_witness(literal) is not None) == has
        # free reduction can only delete letters, so a witness is never lost
        if has:
            assert affine_witness(app.after) is not None


def _reduced_words(k, max_len):
    alphabet = [v for i in range(1, k + 1) for v in (i, -i)]
    seen = set()
    for length in range(max_len + 1):
        for values in itertools.product(alphabet, repeat=length):
            w = free_reduce(BraidWord.from_ints(k, values))
            if w not in seen:
                seen.add(w)
                yield w


@pytest.mark.parametrize("k, max_len, max_k", [(4, 2, 8), (2, 3, 6), (6, 1, 10)])
def test_predecessors_match_edges(k, max_len, max_k):
    for w in _reduced_words(k, max_len):
        for app in enumerate_moves(w, max_k):
            back = {(str(p.move), p.before) for p in predecessors(app.after, max_k)}
            assert (str(app.move), w) in back


@given(words(k_values=(4, 6), max_len=4))
def test_predecessors_are_real_edges(w):
    w = free_reduce(w)
    for p in predecessors(w, w.k + 4):
        assert apply_move(p.before, p.move) == w
