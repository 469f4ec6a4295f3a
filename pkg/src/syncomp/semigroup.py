"""Transition semigroups and the syntactic complexity measure.

The transition semigroup of a DFA is the closure of its letter actions
under composition.  For a minimal DFA this is the syntactic semigroup of
the language, so sigma(L) = its size and mu(L) = sigma + 1 exactly when no
nonempty word acts as the identity.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

from .automata import Dfa, minimize
from .errors import CapExceededError
from .transform import Transformation

__all__ = [
    "SemigroupResult",
    "transition_semigroup",
    "sigma_of_language",
    "witness_words",
    "word_length_histogram",
]


@dataclass(frozen=True)
class SemigroupResult:
    """Closure of the letter actions, with one shortest witness word each.

    words maps every element to its earliest witness in BFS order (a tuple
    of letters): shortest first, ties broken by alphabet order.  It is None
    when word tracking was disabled.
    """

    n: int
    alphabet: tuple[str, ...]
    elements: frozenset[Transformation]
    sigma: int
    mu: int
    contains_identity_as_nonempty_word: bool
    words: dict[Transformation, tuple[str, ...]] | None


def transition_semigroup(d: Dfa, cap: int | None = None,
                         track_words: bool = True) -> SemigroupResult:
    """BFS closure of the letter actions of d under word-order composition.

    cap defaults to n^n, the sharp cardinality limit; a smaller cap makes
    the closure abort with CapExceededError once more elements than that
    have been found (defensive for large n).
    """
    if cap is None:
        cap = d.n ** d.n
    letters = [(a, d.delta[a].images) for a in d.alphabet]
    seen: dict[tuple[int, ...], tuple[str, ...]] = {}
    queue: deque[tuple[int, ...]] = deque()

    def add(t: tuple[int, ...], word: tuple[str, ...]) -> None:
        if t in seen:
            return
        if len(seen) >= cap:
            raise CapExceededError(cap, len(seen))
        seen[t] = word
        queue.append(t)

    for a, t in letters:
        add(t, (a,))
    while queue:
        t = queue.popleft()
        w = seen[t]
        for a, g in letters:
            add(tuple(g[i] for i in t), w + (a,))

    ident = tuple(range(d.n))
    has_ident = ident in seen
    sigma = len(seen)
    elements = frozenset(Transformation(t) for t in seen)
    words = ({Transformation(t): w for t, w in seen.items()}
             if track_words else None)
    return SemigroupResult(d.n, d.alphabet, elements, sigma,
                           sigma if has_ident else sigma + 1,
                           has_ident, words)


def sigma_of_language(d: Dfa, cap: int | None = None) -> int:
    """Syntactic complexity: |transition semigroup of the minimal DFA|."""
    return transition_semigroup(minimize(d), cap=cap, track_words=False).sigma


def witness_words(result: SemigroupResult, t: Transformation) -> str:
    """Shortest witness word for an element (lex-least by letter order),
    rendered as the concatenation of its letters."""
    if result.words is None:
        raise ValueError("semigroup was computed with track_words=False")
    try:
        return "".join(result.words[t])
    except KeyError:
        raise ValueError(f"{t} is not in the semigroup") from None


def word_length_histogram(result: SemigroupResult) -> dict[int, int]:
    """Element count by shortest-witness length."""
    if result.words is None:
        raise ValueError("semigroup was computed with track_words=False")
    return dict(sorted(Counter(len(w) for w in result.words.values()).items()))
