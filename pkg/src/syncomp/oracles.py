"""Slow, independent cross-check oracles.

These deliberately avoid the closure machinery in semigroup.py: the sigma
oracle enumerates words level by level and refolds every word's action from
its letters, so agreement with transition_semigroup is meaningful evidence.
"""

from __future__ import annotations

from .automata import Dfa

__all__ = ["word_bfs_sigma"]


def word_bfs_sigma(d: Dfa, max_words: int = 1_000_000) -> int:
    """Count distinct word actions by plain breadth-first word enumeration.

    Stops after the first word length that contributes no new action.  Work
    grows like |alphabet|^depth; max_words bounds the total number of words
    examined (RuntimeError beyond that).
    """
    rows = {a: d.delta[a].images for a in d.alphabet}
    seen: set[tuple[int, ...]] = set()
    level: list[tuple[str, ...]] = [()]
    examined = 0
    while True:
        nxt = []
        fresh = 0
        for w in level:
            for a in d.alphabet:
                wa = w + (a,)
                examined += 1
                if examined > max_words:
                    raise RuntimeError(
                        f"word-BFS oracle exceeded {max_words} words")
                images = tuple(range(d.n))
                for letter in wa:  # refold from scratch on purpose
                    row = rows[letter]
                    images = tuple(row[i] for i in images)
                if images not in seen:
                    seen.add(images)
                    fresh += 1
                nxt.append(wa)
        if fresh == 0:
            return len(seen)
        level = nxt
