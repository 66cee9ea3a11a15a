"""Core value types: transition graphs, finite semigroups, verdicts.

One composition convention is used everywhere in this package: the word
``uv`` means "apply u first, then v".  Multiplication tables, generator
factorizations and every witness follow it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cache

UNDEFINED = -1

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class NotGenerated(Exception):
    """An element of a Cayley-rows table is not a product of the generators."""

    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not a product of the generators")


class NotAssociative(Exception):
    """A multiplication table failed the associativity check."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        x, g, y = triple
        super().__init__(f"not associative: ({x}*{g})*{y} != {x}*({g}*{y})")


class NotIdempotent(ValueError):
    """A local submonoid was requested at a non-idempotent element."""


class IncompleteInput(ValueError):
    """An operation that needs a complete transition table got a partial one."""


class BadK(ValueError):
    """A window length or threshold below 1."""


class BudgetExceeded(Exception):
    """A bounded search ran out of its state budget."""

    def __init__(self, states: int):
        self.states = states
        super().__init__(f"state budget exceeded after {states} states")


# A transformation of the node set, as a tuple: t[p] is the image of p.
Transformation = tuple[int, ...]


def identity_map(n: int) -> Transformation:
    return tuple(range(n))


def compose(first: Transformation, then: Transformation) -> Transformation:
    """Apply ``first``, then ``then`` (same order as reading a word)."""
    return tuple(then[p] for p in first)


def letter_name(i: int) -> str:
    return chr(97 + i) if 0 <= i < 26 else f"l{i}"


def format_word(word) -> str:
    """Render a word of symbol indices: 'aba' for small alphabets."""
    word = tuple(word)
    if not word:
        return '""'
    if max(word) < 26:
        return "".join(letter_name(c) for c in word)
    return ".".join(str(c) for c in word)


@dataclass(frozen=True)
class TransitionGraph:
    """Transition table of a deterministic automaton, no accepting states.

    ``delta[p][c]`` is the node reached from node p under label c, or
    UNDEFINED (-1) where the transition is missing.  ``completed_sink``
    records the sink node index when the graph came out of
    ``complete_with_sink``; it is bookkeeping, not structure, and is
    ignored by equality.
    """

    alphabet_size: int
    node_count: int
    delta: tuple[tuple[int, ...], ...]
    completed_sink: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.alphabet_size < 1:
            raise ValueError(f"alphabet size {self.alphabet_size} must be positive")
        if self.node_count < 1:
            raise ValueError(f"node count {self.node_count} must be positive")
        delta = tuple(tuple(int(c) for c in row) for row in self.delta)
        object.__setattr__(self, "delta", delta)
        if len(delta) != self.node_count:
            raise ValueError(f"expected {self.node_count} rows, got {len(delta)}")
        for p, row in enumerate(delta):
            if len(row) != self.alphabet_size:
                raise ValueError(f"row {p} has {len(row)} cells, expected {self.alphabet_size}")
            for c in row:
                if c != UNDEFINED and not 0 <= c < self.node_count:
                    raise ValueError(f"cell {c} at node {p} out of range")
        sink = self.completed_sink
        if sink is not None:
            if not 0 <= sink < self.node_count:
                raise ValueError(f"sink {sink} out of range")
            if any(c == UNDEFINED for row in delta for c in row):
                raise ValueError("a completed graph may not contain UNDEFINED cells")
            if any(c != sink for c in delta[sink]):
                raise ValueError(f"sink {sink} must loop to itself on every label")

    @property
    def complete(self) -> bool:
        return all(c != UNDEFINED for row in self.delta for c in row)


class FiniteSemigroup:
    """Finite semigroup presented by Cayley rows (element x generator).

    Elements are numbered 0..element_count-1 with the generators first,
    so column j of ``cayley`` multiplies on the right by element j.
    Construction performs the closure: every element must be reachable
    from the generators (otherwise NotGenerated), and each element gets
    one factorization, a shortest word of generator indices found
    breadth-first.

    The full product table is derived from the rows on demand.  A row
    x*y for all y is filled in one pass over the discovery order, since
    x*(z*g) = (x*z)*g; ``product`` materializes the whole table.
    Instances are immutable apart from this internal cache.
    """

    __slots__ = ("element_count", "generator_count", "cayley", "factorization",
                 "_order", "_parent", "_rows", "_table")

    def __init__(self, rows):
        rows = tuple(tuple(int(c) for c in row) for row in rows)
        n = len(rows)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        g = len(rows[0])
        if not 1 <= g <= n:
            raise ValueError(f"generator count {g} not in 1..{n}")
        for x, row in enumerate(rows):
            if len(row) != g:
                raise ValueError(f"row {x} has {len(row)} cells, expected {g}")
            for c in row:
                if not 0 <= c < n:
                    raise ValueError(f"cell {c} in row {x} out of range")

        parent: list[tuple[int, int] | None] = [None] * n
        fact: list[tuple[int, ...] | None] = [None] * n
        order = list(range(g))
        queue = deque(order)
        for j in range(g):
            fact[j] = (j,)
        while queue:
            x = queue.popleft()
            row = rows[x]
            for j in range(g):
                y = row[j]
                if fact[y] is None:
                    fact[y] = fact[x] + (j,)
                    parent[y] = (x, j)
                    order.append(y)
                    queue.append(y)
        for x in range(n):
            if fact[x] is None:
                raise NotGenerated(x)

        self.element_count = n
        self.generator_count = g
        self.cayley = rows
        self.factorization = tuple(fact)
        self._order = tuple(order)
        self._parent = tuple(parent)
        self._rows: dict[int, list[int]] = {}
        self._table: tuple[tuple[int, ...], ...] | None = None

    def row(self, x: int) -> list[int]:
        """The full row x*y for every y.  Computed once, then cached."""
        cached = self._rows.get(x)
        if cached is not None:
            return cached
        cayley = self.cayley
        row = [0] * self.element_count
        base = cayley[x]
        for y in self._order:
            link = self._parent[y]
            if link is None:
                row[y] = base[y]
            else:
                p, j = link
                row[y] = cayley[row[p]][j]
        self._rows[x] = row
        return row

    def prod(self, x: int, y: int) -> int:
        cached = self._rows.get(x)
        if cached is not None:
            return cached[y]
        v = x
        cayley = self.cayley
        for j in self.factorization[y]:
            v = cayley[v][j]
        return v

    @property
    def product(self) -> tuple[tuple[int, ...], ...]:
        if self._table is None:
            self._table = tuple(tuple(self.row(x)) for x in range(self.element_count))
        return self._table

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return (self.element_count == other.element_count
                and self.generator_count == other.generator_count
                and self.cayley == other.cayley)

    def __hash__(self):
        return hash((self.element_count, self.generator_count, self.cayley))

    def __repr__(self):
        return f"FiniteSemigroup(elements={self.element_count}, generators={self.generator_count})"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one property check.

    ``holds`` is "yes", "no" or "unknown"; a "no" always carries a
    witness that violates the defining condition when re-evaluated.
    """

    property: str
    holds: str
    witness: tuple | None = None
    detail: str = ""

    def __post_init__(self):
        if self.holds not in (YES, NO, UNKNOWN):
            raise ValueError(f"bad verdict value {self.holds!r}")
        if self.holds == NO and self.witness is None:
            raise ValueError(f"a 'no' verdict for {self.property} needs a witness")


@dataclass(frozen=True)
class OrderResult:
    """Result of searching for the least window length k that works.

    status "found" means k holds and every smaller window provably
    fails; "none" means every k up to k_max fails; "unknown" means the
    search at ``k`` ran out of budget.  ``largest_failing`` is the
    largest window length proven to fail (0 when none was).
    """

    status: str
    k: int | None
    t: int
    k_max: int
    largest_failing: int
    states: int
    detail: str = ""

    def __post_init__(self):
        if self.status not in ("found", "none", "unknown"):
            raise ValueError(f"bad order status {self.status!r}")


@dataclass(frozen=True)
class PropertyReport:
    """Everything one analysis run produced, ready for rendering."""

    descriptor: dict
    verdicts: tuple[Verdict, ...]
    order: OrderResult | None = None
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        names = [v.property for v in self.verdicts]
        if len(names) != len(set(names)):
            raise ValueError("duplicate property in report")

    def verdict(self, prop: str) -> Verdict | None:
        for v in self.verdicts:
            if v.property == prop:
                return v
        return None


@dataclass(frozen=True)
class FixtureSet:
    U1: FiniteSemigroup
    LZ2: FiniteSemigroup
    Z2: FiniteSemigroup
    D_triv: TransitionGraph
    D_parity: TransitionGraph
    D_ab: TransitionGraph


@cache
def fixtures() -> FixtureSet:
    """Small reference inputs used across the test suite.

    U1: two-element semilattice {z, e}, both generators.
    LZ2: two-element left-zero semigroup, both generators.
    Z2: two-element cyclic group generated by s.
    D_triv: one node, two labels, both looping.
    D_parity: two nodes swapped by the single label.
    D_ab: three nodes over labels a, b.
    """
    return FixtureSet(
        U1=FiniteSemigroup(((0, 0), (0, 1))),
        LZ2=FiniteSemigroup(((0, 0), (1, 1))),
        Z2=FiniteSemigroup(((1,), (0,))),
        D_triv=TransitionGraph(2, 1, ((0, 0),)),
        D_parity=TransitionGraph(1, 2, ((1,), (0,))),
        D_ab=TransitionGraph(2, 3, ((1, 2), (2, 0), (2, 2))),
    )
