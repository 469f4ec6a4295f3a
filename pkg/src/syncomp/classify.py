"""Ideal and closed-class classification of regular languages.

Everything here works on the minimal DFA.  Ideal membership is decided
twice — structurally on the automaton and semantically via language
equations — and the two answers are asserted to agree.  The reported
`bound` is the tightest provable sigma upper bound implied by the detected
special quotients and unique-reachability flags; it is always sound
(sigma <= bound), see _tightest_bound for the exact rule.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from math import factorial

from .automata import (Dfa, Semiautomaton, complement, equivalent,
                       left_ideal_closure, minimize)
from .errors import SizeMismatchError
from .semigroup import transition_semigroup
from .transform import Transformation

__all__ = [
    "ClassReport",
    "classify",
    "Behavior",
    "behavior_of",
    "all_behaviors_aperiodic",
    "ruled_out_count_formula",
    "ruled_out_count_brute",
    "UniformMinimalityReport",
    "pair_graph_uniformity",
    "uniformly_minimal",
]


# ---------------------------------------------------------------------------
# Behaviors (orbit of the initial state under one transformation)


@dataclass(frozen=True)
class Behavior:
    """Orbit q0, t(q0), t²(q0), ... up to the first repeat.

    orbit holds the distinct states visited; the repeat re-enters orbit at
    loop_entry, and period = len(orbit) - loop_entry.  Aperiodic = period 1.
    """

    orbit: tuple[int, ...]
    loop_entry: int
    period: int


def _orbit_period(images: tuple[int, ...], start: int) -> int:
    pos: dict[int, int] = {}
    q = start
    while q not in pos:
        pos[q] = len(pos)
        q = images[q]
    return len(pos) - pos[q]


def behavior_of(d: Dfa, t: Transformation) -> Behavior:
    if t.n != d.n:
        raise SizeMismatchError(f"transformation on {t.n} states, DFA has {d.n}")
    pos: dict[int, int] = {}
    orbit: list[int] = []
    q = d.initial
    while q not in pos:
        pos[q] = len(orbit)
        orbit.append(q)
        q = t(q)
    entry = pos[q]
    return Behavior(tuple(orbit), entry, len(orbit) - entry)


def all_behaviors_aperiodic(d: Dfa, cap: int | None = None) -> bool:
    """True iff every word's action has an aperiodic behavior from d.initial.

    Checking the transition semigroup's elements suffices: every word acts
    as one of them.
    """
    result = transition_semigroup(d, cap=cap, track_words=False)
    return all(_orbit_period(t.images, d.initial) == 1 for t in result.elements)


# ---------------------------------------------------------------------------
# Counting the transformations excluded by the aperiodicity condition


def ruled_out_count_formula(n: int) -> int:
    """Closed form: sum over j=2..n of (n-1)!/(n-j)! * (j-1) * n^(n-j).

    Counts transformations of {0..n-1} whose behavior from state 0 has
    period >= 2 (exact big-integer arithmetic).
    """
    if n < 1:
        raise ValueError("n must be positive")
    return sum(factorial(n - 1) // factorial(n - j) * (j - 1) * n ** (n - j)
               for j in range(2, n + 1))


def ruled_out_count_brute(n: int) -> int:
    """Direct enumeration of all n^n transformations (refused for n > 8)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 8:
        raise ValueError(f"brute enumeration of {n}^{n} transformations refused")
    return sum(1 for t in product(range(n), repeat=n) if _orbit_period(t, 0) >= 2)


# ---------------------------------------------------------------------------
# Classification


@dataclass(frozen=True)
class ClassReport:
    """Class membership flags, special-quotient flags, and a sound bound."""

    kappa: int
    sigma: int
    is_right_ideal: bool
    is_left_ideal: bool
    is_two_sided_ideal: bool
    is_prefix_closed: bool
    is_suffix_closed: bool
    is_factor_closed: bool
    has_empty_q: bool
    has_sigma_star_q: bool
    has_epsilon_q: bool
    has_sigma_plus_q: bool
    l_uniquely_reachable: bool
    some_la_uniquely_reachable: bool
    bound: int

    def as_dict(self) -> dict:
        return asdict(self)


def _is_sink(d: Dfa, q: int) -> bool:
    return all(d.delta[a](q) == q for a in d.alphabet)


def _right_extension(d: Dfa) -> Dfa:
    """DFA of L·Σ*: lock into a fresh accepting sink once a final is hit."""
    top = d.n
    delta = {}
    for a in d.alphabet:
        row = [top if d.delta[a](q) in d.finals else d.delta[a](q)
               for q in range(d.n)]
        row.append(top)
        delta[a] = Transformation(tuple(row))
    initial = top if d.initial in d.finals else d.initial
    return Dfa(d.n + 1, d.alphabet, delta, initial, frozenset({top}))


def _is_right_ideal(md: Dfa) -> bool:
    """md must be minimal.  Runs the structural and the semantic test and
    insists they agree."""
    nonempty = not (md.n == 1 and not md.finals)
    structural = (nonempty and len(md.finals) == 1
                  and _is_sink(md, next(iter(md.finals))))
    semantic = nonempty and equivalent(md, _right_extension(md))
    if structural != semantic:
        raise AssertionError(
            f"right-ideal checks disagree: structural={structural}, "
            f"semantic={semantic}")
    return structural


def _is_left_ideal(md: Dfa) -> bool:
    nonempty = not (md.n == 1 and not md.finals)
    return nonempty and equivalent(md, left_ideal_closure(md))


def _tightest_bound(n: int, pins: int, l_ur: bool, la_ur: bool) -> int:
    """Minimum of the provable sigma bounds.

    Each detected special quotient (∅, Σ*, ε, Σ⁺) pins one coordinate of
    every semigroup element, giving n^(n-pins).  If no nonempty word leads
    back to the initial state, images also avoid it: (n-1)^(n-pins).  If
    additionally some letter a gives delta(q0,a) exactly one incoming edge,
    every element except the action of a also avoids that state:
    1 + (n-2)^(n-pins).
    """
    candidates = [n ** n, n ** (n - pins)]
    if l_ur:
        candidates.append((n - 1) ** (n - pins))
    if la_ur and n >= 2:
        candidates.append(1 + (n - 2) ** (n - pins))
    return min(candidates)


def classify(d: Dfa, cap: int | None = None) -> ClassReport:
    """Minimize d, then report class membership, quotients, sigma, bound."""
    md = minimize(d)
    n = md.n
    is_empty = n == 1 and not md.finals
    is_universal = n == 1 and bool(md.finals)

    sinks = [q for q in range(n) if _is_sink(md, q)]
    empty_sink = next((q for q in sinks if q not in md.finals), None)
    star_sink = next((q for q in sinks if q in md.finals), None)
    has_empty_q = empty_sink is not None
    has_sigma_star_q = star_sink is not None
    has_epsilon_q = has_empty_q and any(
        f != empty_sink and
        all(md.delta[a](f) == empty_sink for a in md.alphabet)
        for f in md.finals)
    has_sigma_plus_q = has_sigma_star_q and any(
        q not in md.finals and q != star_sink and
        all(md.delta[a](q) == star_sink for a in md.alphabet)
        for q in range(n))

    right = _is_right_ideal(md)
    left = _is_left_ideal(md)
    two_sided = right and left

    if is_universal:
        prefix = suffix = factor = True
    else:
        comp = complement(md)  # complement of a minimal DFA is minimal
        prefix = _is_right_ideal(comp)
        suffix = _is_left_ideal(comp)
        factor = prefix and suffix

    incoming = [0] * n
    for a in md.alphabet:
        for q in range(n):
            incoming[md.delta[a](q)] += 1
    l_ur = incoming[md.initial] == 0
    la_ur = l_ur and any(incoming[md.delta[a](md.initial)] == 1
                         for a in md.alphabet)

    pins = sum((has_empty_q, has_sigma_star_q, has_epsilon_q, has_sigma_plus_q))
    bound = _tightest_bound(n, pins, l_ur, la_ur)
    sigma = transition_semigroup(md, cap=cap, track_words=False).sigma

    return ClassReport(
        kappa=n, sigma=sigma,
        is_right_ideal=right, is_left_ideal=left, is_two_sided_ideal=two_sided,
        is_prefix_closed=prefix, is_suffix_closed=suffix,
        is_factor_closed=factor,
        has_empty_q=has_empty_q, has_sigma_star_q=has_sigma_star_q,
        has_epsilon_q=has_epsilon_q, has_sigma_plus_q=has_sigma_plus_q,
        l_uniquely_reachable=l_ur, some_la_uniquely_reachable=la_ur,
        bound=bound,
    )


# ---------------------------------------------------------------------------
# Uniform minimality via the pair graph


@dataclass(frozen=True)
class UniformMinimalityReport:
    """Pair-graph analysis of a sink semiautomaton.

    uniform is the verdict; the other fields explain a negative one.
    bad_pairs lists non-sink pairs with no path to a pair containing the
    sink.  A letter collapsing a pair (equal images) contributes no edge.
    """

    uniform: bool
    strongly_connected: bool
    sink_reachable: bool
    bad_pairs: tuple[tuple[int, int], ...]


def pair_graph_uniformity(s: Semiautomaton, sink: int) -> UniformMinimalityReport:
    if not 0 <= sink < s.n:
        raise ValueError(f"sink {sink} out of range")
    if any(s.delta[a](sink) != sink for a in s.alphabet):
        raise ValueError(f"state {sink} is not absorbing")
    others = [q for q in range(s.n) if q != sink]
    if not others:
        raise ValueError("need at least one non-sink state")

    def reach(start: int, forward: bool) -> set[int]:
        seen = {start}
        stack = [start]
        while stack:
            p = stack.pop()
            for a in s.alphabet:
                if forward:
                    nxt = [s.delta[a](p)] if s.delta[a](p) != sink else []
                else:
                    nxt = [q for q in others if s.delta[a](q) == p]
                for r in nxt:
                    if r in seen or r == sink:
                        continue
                    seen.add(r)
                    stack.append(r)
        return seen

    strongly_connected = (reach(others[0], True) == set(others)
                          and reach(others[0], False) == set(others))
    sink_reachable = any(s.delta[a](q) == sink for q in others
                         for a in s.alphabet)

    pairs = [(p, q) for p in range(s.n) for q in range(p + 1, s.n)]
    radj: dict[tuple[int, int], list[tuple[int, int]]] = {pr: [] for pr in pairs}
    for p, q in pairs:
        for a in s.alphabet:
            ip, iq = s.delta[a](p), s.delta[a](q)
            if ip == iq:
                continue  # collapsed pair: no edge
            target = (ip, iq) if ip < iq else (iq, ip)
            radj[target].append((p, q))
    good = {pr for pr in pairs if sink in pr}
    stack = list(good)
    while stack:
        pr = stack.pop()
        for prev in radj[pr]:
            if prev not in good:
                good.add(prev)
                stack.append(prev)
    bad = tuple(pr for pr in pairs if pr not in good)

    return UniformMinimalityReport(
        uniform=strongly_connected and sink_reachable and not bad,
        strongly_connected=strongly_connected,
        sink_reachable=sink_reachable,
        bad_pairs=bad,
    )


def uniformly_minimal(s: Semiautomaton, sink: int) -> bool:
    """True iff every acceptor (initial in P, nonempty finals in P) built on
    s is minimal, decided by the pair-graph criterion."""
    return pair_graph_uniformity(s, sink).uniform
