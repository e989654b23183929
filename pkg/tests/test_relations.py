import pytest
from hypothesis import given, settings

from platbraid.errors import PatternMismatch, RelationDisabled
from platbraid.relations import RelationRule, apply_relation, commutes, word_equal_bounded
from platbraid.words import compose, invert, parse_word, sphere_relator
from strategies import words


def W(k, text):
    return parse_word(text, k)


def test_yang_baxter():
    assert apply_relation(W(4, "1 2 1"), RelationRule.YangBaxter, 0) == W(4, "2 1 2")


def test_far_commutation():
    assert apply_relation(W(6, "1 3"), RelationRule.FarCommutation, 0) == W(6, "3 1")
    with pytest.raises(PatternMismatch):
        apply_relation(W(4, "1 4"), RelationRule.FarCommutation, 0)


def test_circular_distance():
    assert commutes(6, 1, 3)
    assert commutes(6, 1, 5)
    assert not commutes(6, 1, 6)
    assert not commutes(4, 1, 4)


def test_sigma_k_expansion_is_disabled():
    with pytest.raises(RelationDisabled):
        apply_relation(W(4, "4"), RelationRule.SigmaKExpansion, 0)


def test_sphere_relator_deletes():
    w = compose(W(4, "3"), sphere_relator(4))
    assert apply_relation(w, RelationRule.SphereRelation, 1) == W(4, "3")


@pytest.mark.parametrize(
    "a, b",
    [("1 2 1", "2 1 2"), ("1 -1", ""), ("4 1 4", "1 4 1"), ("1 3", "3 1")],
)
def test_equal_examples(a, b):
    assert word_equal_bounded(W(4, a), W(4, b)).verdict == "Equal"


def test_invariant_rejection():
    result = word_equal_bounded(W(4, "1"), W(4, "2"))
    assert result.verdict == "Unknown" and result.reason == "NotEqualByInvariant"


def test_budget_zero():
    result = word_equal_bounded(W(4, "1 2 1"), W(4, "2 1 2"), budget=0)
    assert result.verdict == "Unknown" and result.reason == "BudgetExceeded"


def test_relator_equals_empty():
    assert word_equal_bounded(sphere_relator(4), W(4, "")).equal


@settings(max_examples=40)
@given(words(k_values=(3, 4, 5), max_len=3))
def test_word_times_inverse_is_equal_to_empty(w):
    result = word_equal_bounded(compose(w, invert(w)), W(w.k, ""), budget=2000)
    assert result.equal


def test_path_replays():
    result = word_equal_bounded(W(5, "1 2 1 4"), W(5, "4 2 1 2"))
    assert result.equal
    for step in result.path:
        assert step.before != step.after
    assert result.path[0].before == W(5, "1 2 1 4")
    assert result.path[-1].after == W(5, "4 2 1 2")
