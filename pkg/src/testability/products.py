"""Direct products of semigroups and of graphs, and graph powers."""

from __future__ import annotations

from .model import FiniteSemigroup, IncompleteInput, TransitionGraph


def semigroup_direct_product(s1: FiniteSemigroup, s2: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product on all element pairs.

    The designated generating set is every pair with a generator on at
    least one side: first (x, h) for all x and generators h of s2, in
    row-major order, then (g, y) for generators g of s1 and the
    remaining y; that is n1*g2 + n2*g1 - g1*g2 generators, placed in
    front of the element list.  Remaining pairs follow row-major.
    """
    n1, g1 = s1.element_count, s1.generator_count
    n2, g2 = s2.element_count, s2.generator_count
    pairs: list[tuple[int, int]] = []
    for x in range(n1):
        for h in range(g2):
            pairs.append((x, h))
    for g in range(g1):
        for y in range(g2, n2):
            pairs.append((g, y))
    gens = tuple(pairs)
    for x in range(g1, n1):
        for y in range(g2, n2):
            pairs.append((x, y))
    index = {p: i for i, p in enumerate(pairs)}
    rows = []
    for x, y in pairs:
        r1, r2 = s1.row(x), s2.row(y)
        rows.append([index[r1[u], r2[v]] for u, v in gens])
    return FiniteSemigroup(rows)


def graph_direct_product(gr1: TransitionGraph, gr2: TransitionGraph) -> TransitionGraph:
    """Synchronous product: node pairs stepping together letter by letter.

    The alphabet is the shorter of the two, labels identified by
    position; node pair (p, q) gets index p*g2 + q.
    """
    if not gr1.complete or not gr2.complete:
        raise IncompleteInput("direct product needs complete graphs")
    a = min(gr1.alphabet_size, gr2.alphabet_size)
    g2 = gr2.node_count
    delta = []
    for p in range(gr1.node_count):
        row1 = gr1.delta[p]
        for q in range(g2):
            row2 = gr2.delta[q]
            delta.append(tuple(row1[c] * g2 + row2[c] for c in range(a)))
    return TransitionGraph(a, gr1.node_count * g2, tuple(delta))


def graph_power(gr: TransitionGraph, m: int) -> TransitionGraph:
    """The direct product of m copies of the graph."""
    if m < 1:
        raise ValueError(f"power {m} must be at least 1")
    out = gr
    for _ in range(m - 1):
        out = graph_direct_product(out, gr)
    return out
