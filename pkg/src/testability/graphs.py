"""Decision procedures on transition graphs.

A graph is analyzed through two routes that check each other: algebraic
properties go through its transition semigroup (the closure of the
letter transformations under composition), while window-size questions
go through the profile oracle, which pairs every word's k-profile with
the transformation the word induces.  Partial graphs are completed with
a sink first; every analysis here assumes and enforces completeness.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .model import (NO, UNKNOWN, YES, FiniteSemigroup, IncompleteInput, OrderResult,
                    PropertyReport, TransitionGraph, Transformation, UNDEFINED,
                    Verdict, compose, format_word, identity_map, letter_name)
from .oracle import DEFAULT_BUDGET, DEFAULT_K_MAX, profile_determines
from .semigroups import (ONE_TESTABILITY, PROPERTY_CHECKS, _resolve_properties)

K_TESTABILITY = "k_testability"


def complete_with_sink(gr: TransitionGraph) -> TransitionGraph:
    """Route every missing transition to one new self-looping node.

    Complete graphs come back unchanged (same object), so completion is
    idempotent.
    """
    if gr.complete:
        return gr
    sink = gr.node_count
    delta = tuple(tuple(sink if c == UNDEFINED else c for c in row) for row in gr.delta)
    delta += ((sink,) * gr.alphabet_size,)
    return TransitionGraph(gr.alphabet_size, gr.node_count + 1, delta, sink)


def letter_transformations(gr: TransitionGraph) -> tuple[Transformation, ...]:
    """The node map of each letter, in label order."""
    if not gr.complete:
        raise IncompleteInput("graph has undefined transitions; complete it first")
    return tuple(tuple(row[a] for row in gr.delta) for a in range(gr.alphabet_size))


@dataclass(frozen=True)
class TransitionSemigroup:
    """A graph's transformation semigroup plus the letter bookkeeping.

    Letters with identical node maps share one generator;
    ``label_to_generator`` maps each letter to its generator and
    ``generator_letters`` picks the first letter for each generator, so
    element indices can be translated back into readable words.
    """

    semigroup: FiniteSemigroup
    label_to_generator: tuple[int, ...]
    transformations: tuple[Transformation, ...]
    generator_letters: tuple[int, ...]

    def element_word(self, x: int) -> tuple[int, ...]:
        """One letter word whose action is element x."""
        return tuple(self.generator_letters[j]
                     for j in self.semigroup.factorization[x])


def transition_semigroup(gr: TransitionGraph) -> TransitionSemigroup:
    """Close the letter transformations under composition.

    Breadth-first from the distinct letter maps, composing on the right
    (word order: existing element first, then the generator letter).
    """
    letters = letter_transformations(gr)
    gens: list[Transformation] = []
    gen_letters: list[int] = []
    label_to_gen: list[int] = []
    ids: dict[Transformation, int] = {}
    for a, tr in enumerate(letters):
        j = ids.get(tr)
        if j is None:
            j = len(gens)
            ids[tr] = j
            gens.append(tr)
            gen_letters.append(a)
        label_to_gen.append(j)
    elements = list(gens)
    rows: list[list[int]] = []
    qi = 0
    while qi < len(elements):
        cur = elements[qi]
        row = []
        for tr in gens:
            nxt = compose(cur, tr)
            z = ids.get(nxt)
            if z is None:
                z = len(elements)
                ids[nxt] = z
                elements.append(nxt)
            row.append(z)
        rows.append(row)
        qi += 1
    sg = FiniteSemigroup(rows)
    return TransitionSemigroup(sg, tuple(label_to_gen), tuple(elements),
                               tuple(gen_letters))


def is_1_testable(gr: TransitionGraph) -> Verdict:
    """Letters must be idempotent and pairwise commuting node maps.

    Then a word's action depends only on its letter set.  Witnesses are
    (letter, node) for idempotence and (letter, letter, node) for
    commutation, least first.
    """
    letters = letter_transformations(gr)
    for u, tu in enumerate(letters):
        for p in range(gr.node_count):
            if tu[tu[p]] != tu[p]:
                return Verdict(ONE_TESTABILITY, NO, (u, p),
                               f"letter {letter_name(u)} is not idempotent "
                               f"at node {p}")
        for v in range(u + 1, gr.alphabet_size):
            tv = letters[v]
            for p in range(gr.node_count):
                if tv[tu[p]] != tu[tv[p]]:
                    return Verdict(ONE_TESTABILITY, NO, (u, v, p),
                                   f"letters {letter_name(u)} and {letter_name(v)} "
                                   f"do not commute at node {p}")
    return Verdict(ONE_TESTABILITY, YES)


def _action(gr: TransitionGraph):
    letters = letter_transformations(gr)

    def step(tr: Transformation, a: int) -> Transformation:
        return compose(tr, letters[a])

    return identity_map(gr.node_count), step


def is_k_testable(gr: TransitionGraph, k: int, *, t: int = 1,
                  budget: int = DEFAULT_BUDGET) -> Verdict:
    """Does the k-profile of a word (threshold t) pin down its action?

    Decided by the profile oracle; a "no" carries two words with equal
    profiles and different node maps, an "unknown" means the profile
    state budget ran out before the search settled.
    """
    initial, step = _action(gr)
    res = profile_determines(initial, step, gr.alphabet_size, k, t, budget)
    if res.status == "yes":
        return Verdict(K_TESTABILITY, YES, None,
                       f"k={k}, t={t}: {res.states} profile states searched")
    if res.status == "no":
        u, v = res.witness
        return Verdict(K_TESTABILITY, NO, res.witness,
                       f"k={k}, t={t}: words {format_word(u)} and {format_word(v)} "
                       f"share a profile but act differently")
    return Verdict(K_TESTABILITY, UNKNOWN, None,
                   f"budget exceeded: {res.states} profile states at k={k}, t={t}")


def order_of_local_testability(gr: TransitionGraph, k_max: int = DEFAULT_K_MAX, *,
                               t: int = 1, budget: int = DEFAULT_BUDGET) -> OrderResult:
    """Least window length k <= k_max whose profiles determine the action.

    Window lengths are tried in increasing order, so a "found" result
    also proves every smaller k fails; ``largest_failing`` reports the
    failure bound established on the way.
    """
    initial, step = _action(gr)
    last = 0
    for k in range(1, k_max + 1):
        res = profile_determines(initial, step, gr.alphabet_size, k, t, budget)
        last = res.states
        if res.status == "yes":
            return OrderResult("found", k, t, k_max, k - 1, res.states,
                               f"profile oracle succeeds at k={k}")
        if res.status == "unknown":
            return OrderResult("unknown", None, t, k_max, k - 1, res.states,
                               f"budget exceeded at k={k}")
    return OrderResult("none", None, t, k_max, k_max, last,
                       f"every k up to {k_max} fails")


def _with_witness_words(v: Verdict, ts: TransitionSemigroup) -> Verdict:
    if v.witness is None:
        return v
    words = ", ".join(format_word(ts.element_word(x)) for x in v.witness)
    note = f"witness words: {words}"
    return replace(v, detail=f"{v.detail}; {note}" if v.detail else note)


def _semigroup_property(ts: TransitionSemigroup, prop: str) -> Verdict:
    return _with_witness_words(PROPERTY_CHECKS[prop](ts.semigroup), ts)


def graph_property(gr: TransitionGraph, prop: str) -> Verdict:
    """One property verdict; algebraic properties go through the
    transition semigroup, with witnesses translated back into words."""
    gr = complete_with_sink(gr)
    if prop == ONE_TESTABILITY:
        return is_1_testable(gr)
    return _semigroup_property(transition_semigroup(gr), prop)


def analyze_graph(gr: TransitionGraph, properties=None, *, order: bool = False,
                  k: int | None = None, t: int = 1, k_max: int = DEFAULT_K_MAX,
                  budget: int = DEFAULT_BUDGET, source: str = "") -> PropertyReport:
    """Run the requested checks (all of them by default) on one graph.

    The graph is completed first and the report says when a sink was
    added.  ``k`` adds a single fixed-window check; ``order`` adds the
    window length search.
    """
    completed = complete_with_sink(gr)
    sink_added = completed is not gr
    props = _resolve_properties(properties)
    ts = None
    verdicts = []
    for p in props:
        if p == ONE_TESTABILITY:
            verdicts.append(is_1_testable(completed))
            continue
        if ts is None:
            ts = transition_semigroup(completed)
        verdicts.append(_semigroup_property(ts, p))
    if k is not None:
        verdicts.append(is_k_testable(completed, k, t=t, budget=budget))
    order_result = None
    if order:
        order_result = order_of_local_testability(completed, k_max, t=t, budget=budget)
    descriptor: dict = {"kind": "graph"}
    if source:
        descriptor["source"] = source
    descriptor["alphabet"] = completed.alphabet_size
    descriptor["nodes"] = completed.node_count
    descriptor["sink_added"] = sink_added
    stats: dict = {"alphabet": completed.alphabet_size, "nodes": completed.node_count}
    if ts is not None:
        stats["semigroup_elements"] = ts.semigroup.element_count
        stats["semigroup_generators"] = ts.semigroup.generator_count
    if order_result is not None:
        stats["oracle_states"] = order_result.states
    return PropertyReport(descriptor, tuple(verdicts), order_result, stats)
