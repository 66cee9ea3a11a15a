"""Decision procedures on finite semigroups.

Every check walks elements in ascending index order and reports the
lexicographically least violating tuple as its witness, so verdicts are
reproducible run to run.  The properties decided here:

  associativity            Light's test over the generating set
  aperiodicity             every element's power sequence settles
  local_idempotence        x*x = x inside every local submonoid eSe
  local_testability        eSe is an idempotent commutative monoid
  strict_local_testability same predicate as local_testability
  right_local_testability  eSe satisfies x*x = x and x*y*x = x*y
  left_local_testability   eSe satisfies x*x = x and x*y*x = y*x
  threshold_local_testability  aperiodic and e x f u e y f = e y f u e x f
  piecewise_testability    all two-sided reachability classes are singletons
  one_testability          generators are idempotent and commute
"""

from __future__ import annotations

from .model import (NO, UNKNOWN, YES, FiniteSemigroup, NotIdempotent, OrderResult,
                    PropertyReport, Verdict)
from .oracle import DEFAULT_BUDGET, DEFAULT_K_MAX, profile_determines
from .scc import strongly_connected_components

ASSOCIATIVITY = "associativity"
APERIODICITY = "aperiodicity"
LOCAL_IDEMPOTENCE = "local_idempotence"
LOCAL_TESTABILITY = "local_testability"
STRICT_LOCAL_TESTABILITY = "strict_local_testability"
RIGHT_LOCAL_TESTABILITY = "right_local_testability"
LEFT_LOCAL_TESTABILITY = "left_local_testability"
THRESHOLD_LOCAL_TESTABILITY = "threshold_local_testability"
PIECEWISE_TESTABILITY = "piecewise_testability"
ONE_TESTABILITY = "one_testability"

LOCAL_PROPERTIES = (LOCAL_IDEMPOTENCE, LOCAL_TESTABILITY, STRICT_LOCAL_TESTABILITY,
                    RIGHT_LOCAL_TESTABILITY, LEFT_LOCAL_TESTABILITY)

ALL_PROPERTIES = (ASSOCIATIVITY, APERIODICITY, LOCAL_IDEMPOTENCE, LOCAL_TESTABILITY,
                  STRICT_LOCAL_TESTABILITY, RIGHT_LOCAL_TESTABILITY,
                  LEFT_LOCAL_TESTABILITY, THRESHOLD_LOCAL_TESTABILITY,
                  PIECEWISE_TESTABILITY, ONE_TESTABILITY)


def close_cayley(rows) -> FiniteSemigroup:
    """Close Cayley rows into a semigroup value; raises NotGenerated."""
    return FiniteSemigroup(rows)


def check_associativity(s: FiniteSemigroup) -> Verdict:
    """Light's test: (x*g)*y == x*(g*y) for all x, y and generators g."""
    n = s.element_count
    cayley = s.cayley
    for x in range(n):
        row_x = s.row(x)
        for j in range(s.generator_count):
            row_xj = s.row(cayley[x][j])
            row_j = s.row(j)
            for y in range(n):
                if row_xj[y] != row_x[row_j[y]]:
                    return Verdict(ASSOCIATIVITY, NO, (x, j, y),
                                   f"({x}*{j})*{y} != {x}*({j}*{y})")
    return Verdict(ASSOCIATIVITY, YES)


def idempotents(s: FiniteSemigroup) -> tuple[int, ...]:
    return tuple(x for x in range(s.element_count) if s.prod(x, x) == x)


def local_submonoid(s: FiniteSemigroup, e: int) -> tuple[int, ...]:
    """The set e*S*e = {e*x*e}, ascending; e must be idempotent."""
    if s.prod(e, e) != e:
        raise NotIdempotent(f"element {e} is not idempotent")
    left = set(s.row(e))
    return tuple(sorted({s.row(z)[e] for z in left}))


def check_local_property(s: FiniteSemigroup, prop: str) -> Verdict:
    """Check one of the eSe identities on every local submonoid.

    Witnesses are (e, x) for an idempotence failure and (e, x, y) for a
    two-variable identity failure, least first.
    """
    if prop not in LOCAL_PROPERTIES:
        raise ValueError(f"not a local property: {prop!r}")
    two_sided = prop != LOCAL_IDEMPOTENCE
    for e in idempotents(s):
        sub = local_submonoid(s, e)
        for x in sub:
            row_x = s.row(x)
            if row_x[x] != x:
                return Verdict(prop, NO, (e, x), f"e={e}: {x}*{x} != {x}")
            if not two_sided:
                continue
            for y in sub:
                xy = row_x[y]
                if prop in (LOCAL_TESTABILITY, STRICT_LOCAL_TESTABILITY):
                    if xy != s.row(y)[x]:
                        return Verdict(prop, NO, (e, x, y),
                                       f"e={e}: {x}*{y} != {y}*{x}")
                elif prop == RIGHT_LOCAL_TESTABILITY:
                    if s.row(xy)[x] != xy:
                        return Verdict(prop, NO, (e, x, y),
                                       f"e={e}: {x}*{y}*{x} != {x}*{y}")
                else:
                    if s.row(xy)[x] != s.row(y)[x]:
                        return Verdict(prop, NO, (e, x, y),
                                       f"e={e}: {x}*{y}*{x} != {y}*{x}")
    return Verdict(prop, YES)


def is_aperiodic(s: FiniteSemigroup) -> Verdict:
    """Iterate powers of each element until they repeat; the cycle the
    sequence falls into must have length 1."""
    n = s.element_count
    for x in range(n):
        seen = {x: 1}
        power = x
        for i in range(2, n + 2):
            power = s.row(power)[x]
            if power in seen:
                period = i - seen[power]
                if period != 1:
                    return Verdict(APERIODICITY, NO, (x,),
                                   f"element {x} has period {period}")
                break
            seen[power] = i
    return Verdict(APERIODICITY, YES)


def is_threshold_locally_testable(s: FiniteSemigroup) -> Verdict:
    """Aperiodicity plus e x f u e y f = e y f u e x f over idempotents e, f.

    Only the first x reaching each distinct value e*x*f can be part of a
    least witness, so the scan runs over those representatives; the
    winning tuple is still the lexicographically least (e, f, x, u, y).
    """
    aperiodic = is_aperiodic(s)
    if aperiodic.holds == NO:
        return Verdict(THRESHOLD_LOCAL_TESTABILITY, NO, aperiodic.witness,
                       "not aperiodic: " + aperiodic.detail)
    n = s.element_count
    idem = idempotents(s)
    for e in idem:
        row_e = s.row(e)
        for f in idem:
            sandwich = [s.row(v)[f] for v in row_e]
            firsts = []
            taken = set()
            for x, p in enumerate(sandwich):
                if p not in taken:
                    taken.add(p)
                    firsts.append((x, p))
            for x, p in firsts:
                row_p = s.row(p)
                for u in range(n):
                    row_pu = s.row(row_p[u])
                    for y, q in firsts:
                        if row_pu[q] != s.row(s.row(q)[u])[p]:
                            return Verdict(
                                THRESHOLD_LOCAL_TESTABILITY, NO, (e, f, x, u, y),
                                f"e={e}, f={f}: exf*u*eyf != eyf*u*exf "
                                f"at x={x}, u={u}, y={y}")
    return Verdict(THRESHOLD_LOCAL_TESTABILITY, YES)


def _identity_element(s: FiniteSemigroup) -> int | None:
    n = s.element_count
    for e in range(n):
        if all(v == x for x, v in enumerate(s.row(e))):
            if all(s.prod(x, e) == x for x in range(n)):
                return e
    return None


def j_classes(s: FiniteSemigroup) -> tuple[tuple[int, ...], ...]:
    """Two-sided reachability classes of S with an identity adjoined
    when no element already acts as one.

    Mutual reachability under one-step multiplication by generators, on
    either side, coincides with mutual two-sided ideal membership, so
    the classes are the SCCs of that digraph.  When an identity is
    adjoined it appears as the extra index element_count.
    """
    n = s.element_count
    g = s.generator_count
    adjoined = _identity_element(s) is None
    total = n + 1 if adjoined else n
    gen_rows = [s.row(j) for j in range(g)]
    succ: list[list[int]] = []
    for x in range(n):
        right = s.cayley[x]
        succ.append([right[j] for j in range(g)] + [gen_rows[j][x] for j in range(g)])
    if adjoined:
        succ.append(list(range(g)))
    comps = strongly_connected_components(succ)
    return tuple(tuple(c) for c in comps)


def is_piecewise_testable(s: FiniteSemigroup) -> Verdict:
    classes = j_classes(s)
    for cls in classes:
        if len(cls) > 1:
            x, y = cls[0], cls[1]
            return Verdict(PIECEWISE_TESTABILITY, NO, (x, y),
                           f"elements {x} and {y} generate the same two-sided ideal")
    return Verdict(PIECEWISE_TESTABILITY, YES)


def check_generator_testability(s: FiniteSemigroup) -> Verdict:
    """Window length 1: generator words are determined by their letter
    set, which happens exactly when generators are idempotent and
    pairwise commute."""
    cayley = s.cayley
    for u in range(s.generator_count):
        if cayley[u][u] != u:
            return Verdict(ONE_TESTABILITY, NO, (u,),
                           f"generator {u} is not idempotent")
        for v in range(u + 1, s.generator_count):
            if cayley[u][v] != cayley[v][u]:
                return Verdict(ONE_TESTABILITY, NO, (u, v),
                               f"generators {u} and {v} do not commute")
    return Verdict(ONE_TESTABILITY, YES)


def _generator_fold(s: FiniteSemigroup):
    cayley = s.cayley

    def step(value, j):
        return j if value is None else cayley[value][j]

    return None, step


def order_of_local_testability(s: FiniteSemigroup, k_max: int = DEFAULT_K_MAX,
                               budget: int = DEFAULT_BUDGET) -> OrderResult:
    """Least k <= k_max whose k-profile determines the value of every
    generator word, found by running the profile oracle on the fold
    start -> generator -> x*generator."""
    initial, step = _generator_fold(s)
    last_states = 0
    for k in range(1, k_max + 1):
        res = profile_determines(initial, step, s.generator_count, k, 1, budget)
        last_states = res.states
        if res.status == "yes":
            return OrderResult("found", k, 1, k_max, k - 1, res.states,
                               f"profile oracle succeeds at k={k}")
        if res.status == "unknown":
            return OrderResult("unknown", None, 1, k_max, k - 1, res.states,
                               f"budget exceeded at k={k}")
    return OrderResult("none", None, 1, k_max, k_max, last_states,
                       f"every k up to {k_max} fails")


def _local_check(prop):
    return lambda s: check_local_property(s, prop)


PROPERTY_CHECKS = {
    ASSOCIATIVITY: check_associativity,
    APERIODICITY: is_aperiodic,
    LOCAL_IDEMPOTENCE: _local_check(LOCAL_IDEMPOTENCE),
    LOCAL_TESTABILITY: _local_check(LOCAL_TESTABILITY),
    STRICT_LOCAL_TESTABILITY: _local_check(STRICT_LOCAL_TESTABILITY),
    RIGHT_LOCAL_TESTABILITY: _local_check(RIGHT_LOCAL_TESTABILITY),
    LEFT_LOCAL_TESTABILITY: _local_check(LEFT_LOCAL_TESTABILITY),
    THRESHOLD_LOCAL_TESTABILITY: is_threshold_locally_testable,
    PIECEWISE_TESTABILITY: is_piecewise_testable,
    ONE_TESTABILITY: check_generator_testability,
}


def _resolve_properties(properties) -> tuple[str, ...]:
    if properties is None:
        return ALL_PROPERTIES
    out = []
    for p in properties:
        if p not in PROPERTY_CHECKS:
            raise ValueError(f"unknown property {p!r}")
        if p not in out:
            out.append(p)
    return tuple(out)


def analyze_semigroup(s: FiniteSemigroup, properties=None, *, order: bool = False,
                      k_max: int = DEFAULT_K_MAX, budget: int = DEFAULT_BUDGET,
                      source: str = "") -> PropertyReport:
    """Run the requested checks (all of them by default) on one semigroup."""
    props = _resolve_properties(properties)
    verdicts = tuple(PROPERTY_CHECKS[p](s) for p in props)
    order_result = None
    stats = {"elements": s.element_count, "generators": s.generator_count}
    if order:
        order_result = order_of_local_testability(s, k_max, budget)
        stats["oracle_states"] = order_result.states
    descriptor: dict = {"kind": "semigroup"}
    if source:
        descriptor["source"] = source
    descriptor["elements"] = s.element_count
    descriptor["generators"] = s.generator_count
    return PropertyReport(descriptor, verdicts, order_result, stats)
