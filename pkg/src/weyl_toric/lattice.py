"""Exact integer lattice algebra.

Everything here works on Python ``int`` so entries never overflow.  The
canonical form of a sublattice of ``Z^n`` is its row Hermite normal form:
positive pivots, each pivot strictly right of the one above it, entries
above a pivot reduced into ``[0, pivot)``, zero rows dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Iterable, Sequence

from .errors import InputError

Row = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise InputError(f"row {r} does not have length {cols}")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    def to_rows(self) -> list[Row]:
        c = self.cols
        return [self.entries[i * c:(i + 1) * c] for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.to_rows()]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _hnf_rows(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    A = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        if r == len(A):
            break
        for i in range(r + 1, len(A)):
            b = A[i][c]
            if b == 0:
                continue
            a = A[r][c]
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            # unimodular 2x2 step: [[x, y], [-b/g, a/g]]
            Ar, Ai = A[r], A[i]
            A[r] = [x * u + y * v for u, v in zip(Ar, Ai)]
            A[i] = [ag * v - bg * u for u, v in zip(Ar, Ai)]
        p = A[r][c]
        if p == 0:
            continue
        if p < 0:
            A[r] = [-u for u in A[r]]
            p = -p
        pivot_row = A[r]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], pivot_row)]
        r += 1
    return A[:r]


def hnf(m: IntMatrix) -> tuple[IntMatrix, int]:
    """Canonical row Hermite normal form of ``m`` and its rank.

    Zero rows are removed, so the returned matrix has exactly ``rank`` rows
    and the same row span over the integers as ``m``.
    """
    H = _hnf_rows(m.to_rows(), m.cols)
    return IntMatrix.from_rows(H, m.cols), len(H)


def elementary_divisors(m: IntMatrix) -> list[int]:
    """Nonzero diagonal ``d_1 | d_2 | ...`` of the Smith normal form of ``m``."""
    A = [list(r) for r in m.to_rows()]
    nr, nc = m.rows, m.cols
    divisors = []
    t = 0
    while t < min(nr, nc):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nr):
                q = A[i][t] // p
                if q:
                    A[i] = [u - q * v for u, v in zip(A[i], A[t])]
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, nc):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the remaining block
                bad = next(
                    ((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [u + v for u, v in zip(A[t], A[bad[0]])]
                continue
            # move the smallest entry of row/column t into the pivot slot
            cands = [(abs(A[i][t]), i, t) for i in range(t, nr) if A[i][t]]
            cands += [(abs(A[t][j]), t, j) for j in range(t, nc) if A[t][j]]
            _, pi, pj = min(cands)
            A[t], A[pi] = A[pi], A[t]
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        divisors.append(abs(A[t][t]))
        t += 1
    return divisors


@dataclass(frozen=True)
class Sublattice:
    """A submodule of ``Z^n`` held by its canonical HNF basis."""

    ambient_rank: int
    basis: tuple[Row, ...]
    rank: int = field(compare=False)
    torsion_order: int = field(compare=False)

    @property
    def saturated(self) -> bool:
        return self.torsion_order == 1

    @property
    def sort_key(self) -> tuple:
        return (self.rank, self.basis)

    def __lt__(self, other: "Sublattice") -> bool:
        return self.sort_key < other.sort_key

    def contains(self, v: Sequence[int]) -> bool:
        """Exact membership test by reduction against the echelon basis."""
        v = list(v)
        if len(v) != self.ambient_rank:
            raise InputError("vector length does not match ambient rank")
        for row in self.basis:
            c = next(j for j, x in enumerate(row) if x)
            q, rem = divmod(v[c], row[c])
            if rem:
                return False
            if q:
                v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def issubset(self, other: "Sublattice") -> bool:
        if self.ambient_rank != other.ambient_rank:
            raise InputError("ambient ranks differ")
        return self.rank <= other.rank and all(other.contains(r) for r in self.basis)


def sublattice_from_rows(ambient_rank: int, rows: Iterable[Sequence[int]]) -> Sublattice:
    """Canonical sublattice of ``Z^ambient_rank`` spanned by ``rows``."""
    rows = [tuple(int(x) for x in r) for r in rows]
    for r in rows:
        if len(r) != ambient_rank:
            raise InputError(f"vector {r} has length {len(r)}, expected {ambient_rank}")
    H = _hnf_rows(rows, ambient_rank)
    torsion = prod(elementary_divisors(IntMatrix.from_rows(H, ambient_rank)))
    return Sublattice(ambient_rank, tuple(tuple(r) for r in H), len(H), torsion)


def zero_sublattice(ambient_rank: int) -> Sublattice:
    return Sublattice(ambient_rank, (), 0, 1)


def join(a: Sublattice, b: Sublattice) -> Sublattice:
    """Smallest sublattice containing both ``a`` and ``b``."""
    if a.ambient_rank != b.ambient_rank:
        raise InputError(f"ambient ranks differ: {a.ambient_rank} != {b.ambient_rank}")
    if not b.basis:
        return a
    if not a.basis:
        return b
    return sublattice_from_rows(a.ambient_rank, a.basis + b.basis)


def is_consecutive_ones(row: Sequence[int]) -> bool:
    if any(x not in (0, 1) for x in row):
        return False
    ones = [j for j, x in enumerate(row) if x]
    return bool(ones) and ones[-1] - ones[0] + 1 == len(ones)


def consecutive_ones_pivots_unit(m: IntMatrix) -> bool:
    """Check that every HNF pivot of a full-rank consecutive-ones matrix is 1.

    The matrix must be binary, of full row rank, with the ones of each row
    forming a single block.
    """
    rows = m.to_rows()
    for r in rows:
        if not is_consecutive_ones(r):
            raise InputError(f"row {r} is not a binary consecutive-ones row")
    H, rank = hnf(m)
    if rank != m.rows:
        raise InputError("matrix is not of full row rank")
    return all(next(x for x in r if x) == 1 for r in H.to_rows())
