"""Positive roots of type A_n written in the simple-root basis."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class RootSystemA:
    """Root data of ``A_n``.

    ``positive_roots`` lists ``e_i - e_j`` (``1 <= i < j <= n+1``) as the
    0/1 vector with ones in positions ``i..j-1``; ``pairs`` keeps the
    matching ``(i, j)`` labels in the same order.
    """

    n: int
    positive_roots: tuple[tuple[int, ...], ...]
    pairs: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.positive_roots)

    def root(self, i: int, j: int) -> tuple[int, ...]:
        return root_vector(self.n, i, j)


def root_vector(n: int, i: int, j: int) -> tuple[int, ...]:
    """Coordinates of ``e_i - e_j`` (``i < j``) with respect to the simple roots."""
    if not 1 <= i < j <= n + 1:
        raise InputError(f"need 1 <= i < j <= {n + 1}, got ({i}, {j})")
    return tuple(1 if i <= k < j else 0 for k in range(1, n + 1))


def positive_roots(n: int) -> RootSystemA:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    # shorter roots first, then by starting index
    pairs = tuple(
        (i, i + length)
        for length in range(1, n + 1)
        for i in range(1, n + 2 - length)
    )
    return RootSystemA(n, tuple(root_vector(n, i, j) for i, j in pairs), pairs)
