"""Poincaré polynomial of the A_n toric arrangement complement by four routes.

* closed form ``prod_{i=1}^n (1 + (i+1) t)``;
* Möbius sum over the intersection poset weighted by component counts;
* point count of ``M_{0,n+3}`` over ``F_q`` followed by ``(-t)^n p(-1/t)``;
* arithmetic Tutte polynomial evaluated at ``((2t+1)/t, 0)`` times ``t^n``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial

from .errors import InputError, InternalError
from .lattice import Sublattice, join, sublattice_from_rows, zero_sublattice
from .poly import BiPoly, UniPoly, reverse_transform, shifted_monomial, tutte_eval_poincare
from .poset import IntersectionPoset, build_poset
from .roots import RootSystemA, positive_roots

THREADS_ENV = "WEYL_TORIC_THREADS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def poincare_closed_form(n: int) -> UniPoly:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    p = UniPoly.constant(1)
    for i in range(1, n + 1):
        p = p * UniPoly([1, i + 1])
    return p


def poincare_macmeikan(poset: IntersectionPoset) -> UniPoly:
    """``sum_Z mu(Z) (-t)^rk(Z) c_Z (1+t)^(n - rk Z)`` with ``c_Z`` the torsion order."""
    n = poset.n
    one_plus_t = UniPoly([1, 1])
    total = UniPoly()
    for e, mu in zip(poset.elements, poset.mobius):
        coeff = mu * e.torsion_order * (-1) ** e.rank
        total = total + (UniPoly.monomial(e.rank) * one_plus_t ** (n - e.rank)).scale(coeff)
    return total


def point_count_poly(n: int) -> UniPoly:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    p = UniPoly.constant(1)
    for i in range(1, n + 1):
        p = p * UniPoly([-(i + 1), 1])
    return p


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


class PrimeField:
    """Arithmetic in ``F_p`` for a prime ``p``."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise InputError(f"{p} is not prime; only prime fields are supported")
        self.p = p

    def elements(self) -> range:
        return range(self.p)

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.p)

    def projective_line(self) -> list[tuple[int, int]]:
        """Normalized representatives ``[x:1]`` and ``[1:0]`` of ``P^1(F_p)``."""
        return [(x, 1) for x in self.elements()] + [(1, 0)]

    def same_point(self, u: tuple[int, int], v: tuple[int, int]) -> bool:
        return self.sub(self.mul(u[0], v[1]), self.mul(u[1], v[0])) == 0


def _count_distinct_tuples(field: PrimeField, length: int, first: int | None = None) -> int:
    points = field.projective_line()
    chosen: list[tuple[int, int]] = []

    def extend(depth: int) -> int:
        if depth == length:
            return 1
        total = 0
        for pt in points:
            if any(field.same_point(pt, c) for c in chosen):
                continue
            chosen.append(pt)
            total += extend(depth + 1)
            chosen.pop()
        return total

    if first is None:
        return extend(0)
    chosen.append(points[first])
    count = extend(1)
    chosen.pop()
    return count


def _count_with_first(args):
    q, length, first = args
    return _count_distinct_tuples(PrimeField(q), length, first)


def brute_force_point_count(n: int, q: int, field: PrimeField | None = None,
                            workers: int | None = None) -> int:
    """Count ``M_{0,n+3}(F_q)`` by listing ordered tuples of distinct points of ``P^1``.

    The tuple count is divided by ``|PGL(2, F_q)| = (q+1) q (q-1)``.
    """
    field = field or PrimeField(q)
    if field.p != q:
        raise InputError("field order does not match q")
    length = n + 3
    if q + 1 < length:
        raise InputError(f"P^1(F_{q}) has only {q + 1} points; need {length} distinct ones")
    workers = workers or default_workers()
    jobs = [(q, length, first) for first in range(q + 1)]
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            tuples = sum(pool.map(_count_with_first, jobs))
    else:
        tuples = sum(_count_with_first(j) for j in jobs)
    pgl = (q + 1) * q * (q - 1)
    count, rem = divmod(tuples, pgl)
    if rem:
        raise InternalError(f"{tuples} tuples is not divisible by |PGL(2,F_{q})| = {pgl}")
    return count


class _SpanTable:
    """Memoized ``span(S) -> span(S + {root})`` transitions keyed by lattice id."""

    def __init__(self, roots: RootSystemA):
        self.n = roots.n
        self.atoms = [sublattice_from_rows(self.n, [r]) for r in roots.positive_roots]
        self.lattices: list[Sublattice] = [zero_sublattice(self.n)]
        self.ids = {self.lattices[0]: 0}
        self.table: list[list[int | None]] = [[None] * len(self.atoms)]

    def step(self, lid: int, k: int) -> int:
        nxt = self.table[lid][k]
        if nxt is None:
            lat = join(self.lattices[lid], self.atoms[k])
            nxt = self.ids.get(lat)
            if nxt is None:
                nxt = len(self.lattices)
                self.ids[lat] = nxt
                self.lattices.append(lat)
                self.table.append([None] * len(self.atoms))
            self.table[lid][k] = nxt
        return nxt


def _enumerate_subsets(roots: RootSystemA, prefix_bits: int, prefix: int) -> dict[tuple, int]:
    """Tally ``(rank, torsion, |S|)`` over all subsets whose first ``prefix_bits`` roots follow ``prefix``."""
    spans = _SpanTable(roots)
    m = len(roots)
    lid, size = 0, 0
    for k in range(prefix_bits):
        if prefix >> k & 1:
            lid = spans.step(lid, k)
            size += 1
    tally: dict[tuple[int, int], int] = {}
    # iterative depth-first walk over include/exclude decisions for the rest
    stack = [(prefix_bits, lid, size)]
    while stack:
        k, lid, size = stack.pop()
        if k == m:
            key = (lid, size)
            tally[key] = tally.get(key, 0) + 1
            continue
        stack.append((k + 1, lid, size))
        stack.append((k + 1, spans.step(lid, k), size + 1))
    out: dict[tuple, int] = {}
    for (lid, size), count in tally.items():
        lat = spans.lattices[lid]
        key = (lat.rank, lat.torsion_order, size)
        out[key] = out.get(key, 0) + count
    return out


def _enumerate_job(args):
    return _enumerate_subsets(*args)


def _tutte_from_tally(n: int, tally: dict[tuple, int]) -> BiPoly:
    m = BiPoly()
    for (rank, torsion, size), count in tally.items():
        m = m + shifted_monomial(n - rank, size - rank, torsion * count)
    return m


def subset_statistics(roots: RootSystemA, workers: int | None = None) -> dict[tuple, int]:
    """Number of root subsets ``S`` for each ``(rk S, m(S), |S|)``.

    Every one of the ``2^|roots|`` subsets is visited; the span of each is the
    span of its prefix joined with one more root, with joins memoized.
    """
    workers = workers or default_workers()
    m = len(roots)
    prefix_bits = min(m, max(0, (workers - 1).bit_length() + 2)) if workers > 1 else 0
    jobs = [(roots, prefix_bits, p) for p in range(1 << prefix_bits)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_enumerate_job, jobs))
    else:
        parts = [_enumerate_job(j) for j in jobs]
    tally: dict[tuple, int] = {}
    for part in parts:
        for k, v in part.items():
            tally[k] = tally.get(k, 0) + v
    return tally


def arithmetic_tutte(roots: RootSystemA, workers: int | None = None) -> BiPoly:
    """``sum_S m(S) (x-1)^(n - rk S) (y-1)^(|S| - rk S)`` over subsets of positive roots."""
    return _tutte_from_tally(roots.n, subset_statistics(roots, workers))


def all_multiplicities_one(roots: RootSystemA, workers: int | None = None) -> bool:
    return all(torsion == 1 for _, torsion, _ in subset_statistics(roots, workers))


@dataclass
class PoincareReport:
    n: int
    closed_form: UniPoly
    macmeikan: UniPoly
    point_count: UniPoly
    tutte: UniPoly
    agree: bool
    euler_at_1: int
    euler_expected: int

    @property
    def passed(self) -> bool:
        return self.agree and self.euler_at_1 == self.euler_expected

    def mismatches(self) -> list[str]:
        out = []
        for name in ("macmeikan", "point_count", "tutte"):
            other = getattr(self, name)
            if other != self.closed_form:
                out.append(f"{name}: {other} != closed_form: {self.closed_form}")
        if self.euler_at_1 != self.euler_expected:
            out.append(f"P(1) = {self.euler_at_1}, expected {self.euler_expected}")
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "closed_form": str(self.closed_form),
            "macmeikan": str(self.macmeikan),
            "point_count": str(self.point_count),
            "tutte": str(self.tutte),
            "agree": self.agree,
            "euler_at_1": self.euler_at_1,
        }


def verify_all(n: int, workers: int | None = None) -> PoincareReport:
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    roots = positive_roots(n)
    closed = poincare_closed_form(n)
    routes = [
        poincare_macmeikan(build_poset(roots)),
        reverse_transform(point_count_poly(n), n),
        tutte_eval_poincare(arithmetic_tutte(roots, workers), n),
    ]
    agree = all(p == closed for p in routes)
    return PoincareReport(
        n, closed, *routes, agree=agree,
        euler_at_1=closed(1), euler_expected=factorial(n + 2) // 2,
    )

