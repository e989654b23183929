import pytest
from hypothesis import given, settings, strategies as st

from platbraid.bfs import bidirectional_search
from platbraid.errors import ConfigError, OddStrandCount
from platbraid.search import SearchConfig, m_equivalent, perturb, replay
from platbraid.words import BraidWord, parse_word


def W(k, text):
    return parse_word(text, k)


def test_single_removal():
    out = m_equivalent(W(4, "1"), W(4, ""))
    assert out.verdict == "Connected"
    assert [str(s.move) for s in out.path] == ["M1+@1<"]


def test_distinguished():
    out = m_equivalent(W(4, "2"), W(4, ""))
    assert out.verdict == "DistinguishedByInvariant"
    assert "component" in out.reason


def test_same_word():
    out = m_equivalent(W(4, "1 2"), W(4, "1 2"))
    assert out.connected and out.path == ()


def test_stabilisation():
    out = m_equivalent(W(4, ""), W(8, "2"))
    assert [str(s.move) for s in out.path] == ["M3@3"]


def test_budget_zero():
    assert m_equivalent(W(4, "1 2 -3"), W(4, ""), SearchConfig(node_budget=0)).verdict == (
        "BudgetExceeded"
    )


def test_exhausted_inside_caps():
    cfg = SearchConfig(max_strands=4, max_word_length=2)
    out = m_equivalent(W(4, "1 3"), W(4, "-2 -4"), cfg)
    assert out.verdict in ("Exhausted", "DistinguishedByInvariant")


def test_config_validation():
    with pytest.raises(ConfigError):
        SearchConfig(max_strands=7)
    with pytest.raises(ConfigError):
        m_equivalent(W(14, ""), W(4, ""))
    with pytest.raises(OddStrandCount):
        m_equivalent(BraidWord(3), W(4, ""))


def test_outcome_dict():
    d = m_equivalent(W(4, "1"), W(4, "")).to_dict(timing=False)
    assert d["path"] == ["M1+@1<"] and d["wall_time_ms"] == 0


def test_perturb_is_reproducible():
    a = perturb(W(4, "1"), 3, seed=42)
    b = perturb(W(4, "1"), 3, seed=42)
    assert a == b
    assert replay(W(4, "1"), a[1]) == a[0]


def test_perturb_empty_zero_moves():
    assert perturb(W(4, ""), 0, seed=7) == (W(4, ""), [])


@settings(max_examples=15)
@given(st.integers(0, 10_000), st.sampled_from(["", "1", "-3", "1 2"]))
def test_perturbed_pairs_connect(seed, text):
    start = W(4, text)
    end, _ = perturb(start, 2, seed)
    out = m_equivalent(start, end)
    assert out.connected
    assert replay(start, out.path) == end


def test_lexicographic_tie_break():
    # two shortest paths 0->3 on a diamond; the lexicographically least wins
    graph = {0: [("b", 1), ("a", 2)], 1: [("x", 3)], 2: [("x", 3)], 3: []}
    rev = {3: [("x", 1), ("x", 2)], 1: [("b", 0)], 2: [("a", 0)], 0: []}
    res = bidirectional_search(0, 3, lambda u: graph[u], lambda v: rev[v], 100)
    assert [label for label, _, _ in res.path] == ["a", "x"]


def test_threads_do_not_change_result(monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("PLATBRAID_THREADS", threads)
        outs.append(m_equivalent(W(4, "1 2"), W(4, "3 2")).to_dict(timing=False))
    assert outs[0] == outs[1]
