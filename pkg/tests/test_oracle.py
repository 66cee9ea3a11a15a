"""The window-profile oracle, cross-checked against brute enumeration."""

import pytest
from hypothesis import given, settings, strategies as st

from testability import (
    BadK,
    BudgetExceeded,
    ProfileAutomaton,
    brute_force_scan,
    fixtures,
    profile_determines,
    profile_of,
)
from tests import naive

FIX = fixtures()


def eval_action(s):
    """Semigroup evaluation: fold generator indices through the table."""
    def step(v, j):
        return j if v is None else s.cayley[v][j]
    return None, step


def graph_action(gr):
    """Node-map composition, written out directly from the delta table."""
    letters = [tuple(row[a] for row in gr.delta) for a in range(gr.alphabet_size)]

    def step(tr, a):
        return tuple(letters[a][p] for p in tr)

    return tuple(range(gr.node_count)), step


ACTIONS = {
    "U1": lambda: eval_action(FIX.U1),
    "LZ2": lambda: eval_action(FIX.LZ2),
    "Z2": lambda: eval_action(FIX.Z2),
    "D_triv": lambda: graph_action(FIX.D_triv),
    "D_parity": lambda: graph_action(FIX.D_parity),
    "D_ab": lambda: graph_action(FIX.D_ab),
}

ALPHABETS = {"U1": 2, "LZ2": 2, "Z2": 1, "D_triv": 2, "D_parity": 1, "D_ab": 2}


def test_profile_fields():
    p = profile_of((0, 1), 2, 1)
    assert p.prefix == (0,)
    assert p.suffix == (1,)
    assert p.counts == (((0, 1), 1),)
    assert p.short is None


def test_profiles_saturate_at_threshold():
    assert profile_of((0, 1, 0), 2, 1) == profile_of((0, 1, 0, 1, 0), 2, 1)
    assert profile_of((0, 1, 0), 2, 2) != profile_of((0, 1, 0, 1, 0), 2, 2)


def test_short_words_are_kept_whole():
    p = profile_of((0,), 2, 1)
    assert p.short == (0,)
    assert p.prefix == (0,) and p.suffix == (0,)
    assert p.counts == ()
    assert profile_of((), 3, 1).short == ()


def test_bad_window_parameters():
    with pytest.raises(BadK):
        profile_of((0,), 0)
    with pytest.raises(BadK):
        profile_of((0,), 2, 0)


@given(st.lists(st.integers(0, 1), max_size=10),
       st.integers(1, 3), st.integers(1, 2))
def test_extend_matches_profile_of(word, k, t):
    prof = profile_of((), k, t)
    for letter in word:
        prof = prof.extend(letter)
    assert prof == profile_of(word, k, t)


@given(st.lists(st.integers(0, 1), max_size=10),
       st.integers(1, 3), st.integers(1, 2))
def test_profile_matches_naive(word, k, t):
    prof = profile_of(tuple(word), k, t)
    ref = naive.profile(tuple(word), k, t)
    if prof.short is not None:
        assert ref == ("short", tuple(word))
    else:
        assert ref == (prof.prefix, prof.suffix, frozenset(prof.counts))


def test_automaton_interns_profiles():
    auto = ProfileAutomaton(1, 1)
    s1 = auto.step(auto.start, 0)
    assert auto.step(s1, 0) == s1
    assert auto.state_count == 2


def test_automaton_walk_matches_profile_of():
    auto = ProfileAutomaton(2, 2)
    pid = auto.start
    for letter in (0, 1, 0):
        pid = auto.step(pid, letter)
    assert auto.profile(pid) == profile_of((0, 1, 0), 2, 1)


def test_automaton_budget():
    auto = ProfileAutomaton(2, 3, budget=1)
    with pytest.raises(BudgetExceeded) as exc:
        auto.step(auto.start, 0)
    assert exc.value.states == 1


def test_trivial_graph_is_determined_at_k1():
    initial, step = graph_action(FIX.D_triv)
    res = profile_determines(initial, step, 2, 1)
    assert res.status == "yes"


def test_group_evaluation_is_never_determined():
    initial, step = eval_action(FIX.Z2)
    res = profile_determines(initial, step, 1, 3)
    assert res.status == "no"
    assert res.witness == ((0, 0, 0), (0, 0, 0, 0))


def test_semilattice_evaluation_is_determined_at_k1():
    initial, step = eval_action(FIX.U1)
    res = profile_determines(initial, step, 2, 1)
    assert res.status == "yes"


def test_budget_makes_the_answer_unknown():
    initial, step = graph_action(FIX.D_parity)
    res = profile_determines(initial, step, 1, 2, budget=2)
    assert res.status == "unknown"
    assert res.states >= 2


def test_brute_force_parity_witness():
    initial, step = graph_action(FIX.D_parity)
    res = brute_force_scan(initial, step, 1, 2, max_len=6)
    assert res.status == "no"
    assert res.witness == ((0, 0), (0, 0, 0))


def test_brute_force_on_empty_scan():
    initial, step = graph_action(FIX.D_parity)
    res = brute_force_scan(initial, step, 1, 2, max_len=0)
    assert res.status == "yes"
    assert res.states == 1


@pytest.mark.parametrize("name", sorted(ALPHABETS))
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("t", [1, 2])
def test_oracle_agrees_with_brute_force(name, k, t):
    initial, step = ACTIONS[name]()
    a = ALPHABETS[name]
    fast = profile_determines(initial, step, a, k, t)
    slow = brute_force_scan(initial, step, a, k, t, max_len=8)
    # shortest witnesses for these fixtures fit well inside the scan
    assert fast.status == slow.status
    if fast.status == "no":
        # both witnesses must be genuine, not necessarily identical
        for res in (fast, slow):
            u, v = res.witness
            assert naive.profile(u, k, t) == naive.profile(v, k, t)
            fu = initial
            for c in u:
                fu = step(fu, c)
            fv = initial
            for c in v:
                fv = step(fv, c)
            assert fu != fv


@pytest.mark.parametrize("name", sorted(ALPHABETS))
def test_determination_is_monotone_in_k(name):
    initial, step = ACTIONS[name]()
    a = ALPHABETS[name]
    settled = False
    for k in range(1, 5):
        # binary-alphabet profile spaces explode past k=4; stay in budget
        status = profile_determines(initial, step, a, k, budget=300_000).status
        if status == "unknown":
            break
        if settled:
            assert status == "yes"
        settled = status == "yes"


@pytest.mark.parametrize("name", sorted(ALPHABETS))
@pytest.mark.parametrize("k", [1, 2, 3])
def test_determination_is_monotone_in_t(name, k):
    initial, step = ACTIONS[name]()
    a = ALPHABETS[name]
    if profile_determines(initial, step, a, k, 1).status == "yes":
        assert profile_determines(initial, step, a, k, 2).status == "yes"


@settings(max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_oracle_witnesses_on_random_graphs(seed):
    import random

    from tests.corpus import random_graph

    gr = random_graph(random.Random(seed), 4)
    initial, step = graph_action(gr)
    res = profile_determines(initial, step, 2, 2)
    if res.status == "no":
        u, v = res.witness
        assert naive.profile(u, 2, 1) == naive.profile(v, 2, 1)
        assert naive.word_action(gr, u) != naive.word_action(gr, v)
