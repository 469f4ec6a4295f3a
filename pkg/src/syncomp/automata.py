"""Deterministic and nondeterministic finite automata over {0..n-1}.

DFAs here are always complete: one transformation of the state set per
letter.  States are plain ints; operations that rebuild an automaton
renumber states canonically by BFS from the initial state, letters taken
in alphabet order, so equal inputs give byte-equal outputs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import AlphabetMismatchError, FormatError, SizeMismatchError
from .transform import Transformation

__all__ = [
    "Dfa",
    "Nfa",
    "Semiautomaton",
    "reachable_trim",
    "minimize",
    "determinize",
    "reverse",
    "complement",
    "equivalent",
    "left_ideal_closure",
    "parse_dfa_json",
    "emit_dfa_json",
    "to_dot",
]


@dataclass(frozen=True)
class Semiautomaton:
    """States plus letter actions, with no initial state or finals."""

    n: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", dict(self.delta))
        if self.n < 1:
            raise ValueError("need at least one state")
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate letters in alphabet")
        if set(self.delta) != set(self.alphabet):
            raise ValueError("delta must define exactly the alphabet letters")
        for a in self.alphabet:
            if self.delta[a].n != self.n:
                raise SizeMismatchError(
                    f"letter {a!r} acts on {self.delta[a].n} states, expected {self.n}"
                )

    def with_acceptor(self, initial: int, finals: Iterable[int]) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.delta, initial, frozenset(finals))


@dataclass(frozen=True)
class Dfa:
    """Complete DFA: delta maps each letter to a Transformation."""

    n: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        Semiautomaton.__post_init__(self)  # shared structural checks
        object.__setattr__(self, "finals", frozenset(self.finals))
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < self.n:
                raise ValueError(f"final state {f} out of range")

    def step(self, state: int, letter: str) -> int:
        return self.delta[letter](state)

    def run(self, word: Iterable[str]) -> int:
        q = self.initial
        for a in word:
            q = self.delta[a](q)
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.run(word) in self.finals

    def transformation_of(self, word: Iterable[str]) -> Transformation:
        """Action of a word on the full state set."""
        images = list(range(self.n))
        for a in word:
            t = self.delta[a].images
            images = [t[i] for i in images]
        return Transformation(tuple(images))

    def semiautomaton(self) -> Semiautomaton:
        return Semiautomaton(self.n, self.alphabet, self.delta)

    def restrict(self, letters: Iterable[str]) -> "Dfa":
        """Sub-alphabet DFA; letter order follows the original alphabet."""
        want = set(letters)
        unknown = want - set(self.alphabet)
        if unknown:
            raise ValueError(f"letters not in alphabet: {sorted(unknown)}")
        if not want:
            raise ValueError("restriction to an empty alphabet")
        alph = tuple(a for a in self.alphabet if a in want)
        return Dfa(self.n, alph, {a: self.delta[a] for a in alph},
                   self.initial, self.finals)


@dataclass(frozen=True)
class Nfa:
    """NFA with a set of initial states; eta[a][q] is a set of successors."""

    n: int
    alphabet: tuple[str, ...]
    eta: Mapping[str, tuple[frozenset[int], ...]]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "eta",
                           {a: tuple(frozenset(s) for s in rows)
                            for a, rows in dict(self.eta).items()})
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.n < 1:
            raise ValueError("need at least one state")
        if set(self.eta) != set(self.alphabet):
            raise ValueError("eta must define exactly the alphabet letters")
        for a in self.alphabet:
            if len(self.eta[a]) != self.n:
                raise SizeMismatchError(f"letter {a!r} row has wrong length")


def reachable_trim(d: Dfa) -> Dfa:
    """Drop unreachable states; renumber by BFS (letters in alphabet order)."""
    order: dict[int, int] = {d.initial: 0}
    queue = deque([d.initial])
    while queue:
        q = queue.popleft()
        for a in d.alphabet:
            r = d.delta[a](q)
            if r not in order:
                order[r] = len(order)
                queue.append(r)
    m = len(order)
    delta = {
        a: Transformation(tuple(
            order[d.delta[a](q)]
            for q in sorted(order, key=order.get)
        ))
        for a in d.alphabet
    }
    finals = frozenset(order[f] for f in d.finals if f in order)
    return Dfa(m, d.alphabet, delta, 0, finals)


def minimize(d: Dfa) -> Dfa:
    """Unique minimal complete DFA, canonically numbered.

    Moore partition refinement on the reachable part; classes are numbered
    by first occurrence so the refinement itself is deterministic, then the
    quotient is renumbered by reachable_trim's BFS order.
    """
    d = reachable_trim(d)
    cls = [1 if q in d.finals else 0 for q in range(d.n)]
    if len(set(cls)) == 1:
        cls = [0] * d.n
    rows = [d.delta[a].images for a in d.alphabet]
    while True:
        sig: dict[tuple, int] = {}
        new = []
        for q in range(d.n):
            key = (cls[q],) + tuple(cls[row[q]] for row in rows)
            if key not in sig:
                sig[key] = len(sig)
            new.append(sig[key])
        if new == cls:
            break
        cls = new
    k = max(cls) + 1
    rep = [0] * k
    for q in range(d.n - 1, -1, -1):
        rep[cls[q]] = q
    delta = {
        a: Transformation(tuple(cls[d.delta[a](rep[c])] for c in range(k)))
        for a in d.alphabet
    }
    finals = frozenset(cls[f] for f in d.finals)
    return reachable_trim(Dfa(k, d.alphabet, delta, cls[d.initial], finals))


def determinize(m: Nfa) -> Dfa:
    """Accessible subset construction; the empty subset is a non-final sink.

    Subsets are numbered in BFS discovery order, letters in alphabet order.
    """
    start = frozenset(m.initials)
    index: dict[frozenset[int], int] = {start: 0}
    subsets = [start]
    rows: dict[str, list[int]] = {a: [] for a in m.alphabet}
    i = 0
    while i < len(subsets):
        s = subsets[i]
        for a in m.alphabet:
            eta_a = m.eta[a]
            succ = frozenset(q for p in s for q in eta_a[p])
            if succ not in index:
                index[succ] = len(subsets)
                subsets.append(succ)
            rows[a].append(index[succ])
        i += 1
    delta = {a: Transformation(tuple(rows[a])) for a in m.alphabet}
    finals = frozenset(i for i, s in enumerate(subsets) if s & m.finals)
    return Dfa(len(subsets), m.alphabet, delta, 0, finals)


def reverse(d: Dfa) -> Nfa:
    """Reverse every edge; initials = old finals, finals = {old initial}."""
    pred: dict[str, list[set[int]]] = {a: [set() for _ in range(d.n)]
                                       for a in d.alphabet}
    for a in d.alphabet:
        for p in range(d.n):
            pred[a][d.delta[a](p)].add(p)
    eta = {a: tuple(frozenset(s) for s in pred[a]) for a in d.alphabet}
    return Nfa(d.n, d.alphabet, eta, frozenset(d.finals), frozenset({d.initial}))


def complement(d: Dfa) -> Dfa:
    return Dfa(d.n, d.alphabet, d.delta, d.initial,
               frozenset(range(d.n)) - d.finals)


def equivalent(d1: Dfa, d2: Dfa) -> bool:
    """Language equality via synchronized BFS over the pair graph.

    Alphabets must consist of the same letters (order may differ).
    """
    if set(d1.alphabet) != set(d2.alphabet):
        raise AlphabetMismatchError(
            f"alphabets differ: {sorted(d1.alphabet)} vs {sorted(d2.alphabet)}"
        )
    seen = {(d1.initial, d2.initial)}
    queue = deque(seen)
    while queue:
        p, q = queue.popleft()
        if (p in d1.finals) != (q in d2.finals):
            return False
        for a in d1.alphabet:
            nxt = (d1.delta[a](p), d2.delta[a](q))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True


def left_ideal_closure(d: Dfa) -> Dfa:
    """Minimal DFA of {uv : v in L(d)}: all words with a suffix in L(d).

    A fresh initial state loops on every letter while also entering d at
    delta(q0, a); it is final iff q0 is, so the empty suffix is covered.
    """
    fresh = d.n
    eta: dict[str, tuple[frozenset[int], ...]] = {}
    for a in d.alphabet:
        rows = [frozenset({d.delta[a](q)}) for q in range(d.n)]
        rows.append(frozenset({fresh, d.delta[a](d.initial)}))
        eta[a] = tuple(rows)
    finals = set(d.finals)
    if d.initial in d.finals:
        finals.add(fresh)
    nfa = Nfa(d.n + 1, d.alphabet, eta, frozenset({fresh}), frozenset(finals))
    return minimize(determinize(nfa))


# ---------------------------------------------------------------------------
# Interchange formats


def _require(cond: bool, message: str, path: str) -> None:
    if not cond:
        raise FormatError(message, path)


def parse_dfa_json(source: str | Mapping) -> Dfa:
    """Parse the JSON DFA format, rejecting incomplete or out-of-range input.

    Expected shape::

        {"states": 3, "alphabet": ["a", "b"],
         "transitions": {"a": [1, 2, 2], "b": [0, 1, 0]},
         "initial": 0, "finals": [2]}
    """
    if isinstance(source, str):
        try:
            obj = json.loads(source)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
    else:
        obj = source
    _require(isinstance(obj, dict), "expected a JSON object", "")
    for key in ("states", "alphabet", "transitions", "initial", "finals"):
        _require(key in obj, "missing field", key)
    n = obj["states"]
    _require(isinstance(n, int) and n >= 1, "must be a positive integer", "states")
    alph = obj["alphabet"]
    _require(isinstance(alph, list) and alph, "must be a nonempty list", "alphabet")
    for i, a in enumerate(alph):
        _require(isinstance(a, str) and a, "letters must be nonempty strings",
                 f"alphabet[{i}]")
    _require(len(set(alph)) == len(alph), "duplicate letters", "alphabet")
    trans = obj["transitions"]
    _require(isinstance(trans, dict), "must be an object", "transitions")
    extra = set(trans) - set(alph)
    _require(not extra, f"unknown letters {sorted(extra)}", "transitions")
    delta = {}
    for a in alph:
        _require(a in trans, "missing row for letter", f"transitions.{a}")
        row = trans[a]
        _require(isinstance(row, list), "must be a list", f"transitions.{a}")
        _require(len(row) == n, f"expected {n} entries, got {len(row)}",
                 f"transitions.{a}")
        for q, r in enumerate(row):
            _require(isinstance(r, int) and 0 <= r < n,
                     f"target {r!r} not a state in 0..{n - 1}",
                     f"transitions.{a}[{q}]")
        delta[a] = Transformation(tuple(row))
    init = obj["initial"]
    _require(isinstance(init, int) and 0 <= init < n,
             f"not a state in 0..{n - 1}", "initial")
    finals = obj["finals"]
    _require(isinstance(finals, list), "must be a list", "finals")
    for i, f in enumerate(finals):
        _require(isinstance(f, int) and 0 <= f < n,
                 f"not a state in 0..{n - 1}", f"finals[{i}]")
    return Dfa(n, tuple(alph), delta, init, frozenset(finals))


def emit_dfa_json(d: Dfa) -> str:
    obj = {
        "states": d.n,
        "alphabet": list(d.alphabet),
        "transitions": {a: list(d.delta[a].images) for a in d.alphabet},
        "initial": d.initial,
        "finals": sorted(d.finals),
    }
    return json.dumps(obj, indent=2) + "\n"


def to_dot(d: Dfa, name: str = "dfa") -> str:
    """Graphviz rendering: doublecircle finals, point-node arrow into initial,
    parallel edges merged with comma-joined labels."""
    lines = [f"digraph {name} {{", "  rankdir=LR;",
             '  __start [shape=point, label=""];',
             f"  __start -> {d.initial};"]
    for q in range(d.n):
        shape = "doublecircle" if q in d.finals else "circle"
        lines.append(f"  {q} [shape={shape}];")
    edges: dict[tuple[int, int], list[str]] = {}
    for a in d.alphabet:
        for p in range(d.n):
            edges.setdefault((p, d.delta[a](p)), []).append(a)
    for (p, q), labels in sorted(edges.items()):
        lines.append(f'  {p} -> {q} [label="{",".join(labels)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
