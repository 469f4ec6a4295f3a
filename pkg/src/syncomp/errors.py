"""Exception types shared across the package."""

from __future__ import annotations


class SizeMismatchError(ValueError):
    """Two objects that must act on the same state set have different sizes."""


class AlphabetMismatchError(ValueError):
    """Two automata that must share an alphabet have different letter sets."""


class FormatError(ValueError):
    """Malformed external input (JSON, rendered transformations, ...).

    `path` locates the offending field, e.g. "transitions.a[3]".
    """

    def __init__(self, message: str, path: str = ""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class CapExceededError(RuntimeError):
    """Semigroup closure aborted after exceeding the element cap.

    `partial_count` is the number of distinct elements found before aborting.
    """

    def __init__(self, cap: int, partial_count: int):
        self.cap = cap
        self.partial_count = partial_count
        super().__init__(
            f"semigroup closure exceeded cap={cap} (found {partial_count} elements)"
        )
