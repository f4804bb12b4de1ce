"""Intersection poset of the A_n toric arrangement.

Layers of the arrangement correspond to sublattices spanned by sets of
positive roots, ordered by containment of sublattices.  Elements are kept
in a fixed order (rank, then canonical basis) so Möbius vectors and exports
are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError
from .lattice import Sublattice, join, sublattice_from_rows, zero_sublattice
from .poly import elementary_symmetric
from .roots import RootSystemA, root_vector


@dataclass(frozen=True)
class IntersectionPoset:
    n: int
    elements: tuple[Sublattice, ...]
    # below[i] holds the indices of elements strictly contained in element i
    below: tuple[frozenset[int], ...]
    mobius: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def rank_of(self, i: int) -> int:
        return self.elements[i].rank

    def leq(self, i: int, j: int) -> bool:
        return i == j or i in self.below[j]

    def index(self, lattice: Sublattice) -> int:
        return self.elements.index(lattice)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs ``(i, j)`` where ``j`` covers ``i``."""
        out = []
        for j, lower in enumerate(self.below):
            shadowed = set().union(*(self.below[k] for k in lower))
            out.extend((i, j) for i in lower - shadowed)
        return sorted(out)

    @classmethod
    def from_elements(cls, n: int, lattices: Iterable[Sublattice]) -> "IntersectionPoset":
        elements = tuple(sorted(set(lattices)))
        for e in elements:
            if e.ambient_rank != n:
                raise InputError("all elements must live in the same ambient lattice")
        below = tuple(frozenset(_strictly_below(elements, j)) for j in range(len(elements)))
        return cls(n, elements, below, tuple(_mobius_from_bottom(elements, below)))


def _support(lattice: Sublattice) -> int:
    mask = 0
    for row in lattice.basis:
        for c, x in enumerate(row):
            if x:
                mask |= 1 << c
    return mask


def _strictly_below(elements: tuple[Sublattice, ...], j: int) -> Iterator[int]:
    top = elements[j]
    top_support = _support(top)
    for i, e in enumerate(elements):
        if i == j or e.rank > top.rank:
            continue
        # cheap necessary condition before exact membership solving
        if _support(e) & ~top_support:
            continue
        if all(top.contains(r) for r in e.basis):
            yield i


def _mobius_from_bottom(elements, below) -> list[int]:
    mu = [0] * len(elements)
    # a < b implies below[a] is a proper subset of below[b], so this is a linear extension
    for j in sorted(range(len(elements)), key=lambda k: len(below[k])):
        if not below[j]:
            mu[j] = 1
        else:
            mu[j] = -sum(mu[i] for i in below[j])
    return mu


def closure_elements(roots: RootSystemA) -> list[Sublattice]:
    """All distinct spans of root subsets, grown from the zero lattice by single-root joins."""
    n = roots.n
    atoms = [sublattice_from_rows(n, [r]) for r in roots.positive_roots]
    seen = {zero_sublattice(n)}
    frontier = list(seen)
    while frontier:
        new = []
        for lat in frontier:
            for atom in atoms:
                nxt = join(lat, atom)
                if nxt not in seen:
                    seen.add(nxt)
                    new.append(nxt)
        frontier = new
    return sorted(seen)


def build_poset(roots: RootSystemA) -> IntersectionPoset:
    return IntersectionPoset.from_elements(roots.n, closure_elements(roots))


def mobius(poset: IntersectionPoset) -> tuple[int, ...]:
    """Möbius values ``mu(0, Z)`` measured from the bottom element."""
    return tuple(_mobius_from_bottom(poset.elements, poset.below))


def whitney_numbers(poset: IntersectionPoset) -> tuple[list[int], list[int]]:
    top = max((e.rank for e in poset.elements), default=0)
    sizes = [0] * (top + 1)
    signed = [0] * (top + 1)
    for e, mu in zip(poset.elements, poset.mobius):
        sizes[e.rank] += 1
        signed[e.rank] += (-1) ** e.rank * mu
    return sizes, signed


def expected_whitney_signed_sums(n: int) -> list[int]:
    vals = list(range(1, n + 1))
    return [elementary_symmetric(vals, r) for r in range(n + 1)]


def all_saturated(poset: IntersectionPoset) -> bool:
    return all(e.saturated for e in poset.elements)


def set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def partition_sublattice(n: int, blocks: list[list[int]]) -> Sublattice:
    rows = [
        root_vector(n, i, j)
        for block in blocks
        for a, i in enumerate(sorted(block))
        for j in sorted(block)[a + 1:]
    ]
    return sublattice_from_rows(n, rows)


def _pair_mask(blocks: list[list[int]], m: int) -> int:
    mask = 0
    for block in blocks:
        for i in block:
            for j in block:
                if i < j:
                    mask |= 1 << (i * m + j)
    return mask


def matches_partition_lattice(poset: IntersectionPoset, n: int) -> bool:
    """Whether set partitions of ``{1..n+1}`` map order-isomorphically onto the poset."""
    m = n + 1
    parts = list(set_partitions(list(range(1, m + 1))))
    image = []
    for blocks in parts:
        try:
            image.append(poset.index(partition_sublattice(n, blocks)))
        except ValueError:
            return False
    if len(set(image)) != len(parts) or len(parts) != len(poset):
        return False
    masks = [_pair_mask(b, m + 1) for b in parts]
    for a in range(len(parts)):
        for b in range(len(parts)):
            refines = masks[a] & ~masks[b] == 0
            if refines != poset.leq(image[a], image[b]):
                return False
    return True


def export(poset: IntersectionPoset, format: str) -> str:
    if format == "json":
        doc = {
            "n": poset.n,
            "elements": [
                {
                    "id": i,
                    "rank": e.rank,
                    "basis": [list(r) for r in e.basis],
                    "mobius": mu,
                    "torsion": e.torsion_order,
                }
                for i, (e, mu) in enumerate(zip(poset.elements, poset.mobius))
            ],
            "covers": [list(c) for c in poset.covers()],
        }
        return json.dumps(doc, indent=2) + "\n"
    if format == "dot":
        lines = [f"digraph A{poset.n} {{", "  rankdir=BT;"]
        for i, (e, mu) in enumerate(zip(poset.elements, poset.mobius)):
            lines.append(f'  {i} [label="{e.rank}/{mu}"];')
        for i, j in poset.covers():
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise InputError(f"unknown export format {format!r}; expected 'json' or 'dot'")
