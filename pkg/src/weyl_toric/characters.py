"""Class functions on the symmetric group ``S_{n+1}``, the Weyl group of A_n.

Conjugacy classes are indexed by cycle type, i.e. partitions of ``n+1``
written as weakly decreasing tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterator

from .errors import InputError

Partition = tuple[int, ...]


def partitions(m: int) -> list[Partition]:
    """Partitions of ``m`` in reverse lexicographic order, ``(m)`` first."""
    if m < 1:
        raise InputError(f"need m >= 1, got {m}")
    return list(_partitions(m, m))


def _partitions(m: int, largest: int) -> Iterator[Partition]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _check_partition(lam: Partition) -> None:
    if any(p <= 0 for p in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise InputError(f"{lam} is not a partition")


def z_lambda(lam: Partition) -> int:
    """Centralizer order ``prod k^{m_k} m_k!``."""
    out = 1
    for k in set(lam):
        mk = lam.count(k)
        out *= k**mk * factorial(mk)
    return out


def class_size(lam: Partition) -> int:
    _check_partition(lam)
    return factorial(sum(lam)) // z_lambda(lam)


def label(lam: Partition) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


@dataclass
class ClassFunction:
    m: int
    values: dict[Partition, Fraction] = field(default_factory=dict)

    @classmethod
    def from_rule(cls, m: int, rule: Callable[[Partition], object]) -> "ClassFunction":
        return cls(m, {lam: Fraction(rule(lam)) for lam in partitions(m)})

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.values[tuple(lam)]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._same_group(other)
        return ClassFunction(self.m, {k: v + other.values[k] for k, v in self.values.items()})

    def __rmul__(self, c) -> "ClassFunction":
        return ClassFunction(self.m, {k: c * v for k, v in self.values.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.m == other.m and self.values == other.values

    def _same_group(self, other: "ClassFunction") -> None:
        if self.m != other.m:
            raise InputError(f"class functions on S_{self.m} and S_{other.m}")

    def inner(self, other: "ClassFunction") -> Fraction:
        """Standard inner product; characters here are real so no conjugation is needed."""
        self._same_group(other)
        total = sum(class_size(lam) * v * other.values[lam] for lam, v in self.values.items())
        return Fraction(total, factorial(self.m))


def total_character(n: int) -> ClassFunction:
    """Total character of ``H^*`` of the A_n toric complement.

    It is ``(n+2)!/2`` on the identity, ``n!`` on transpositions and zero on
    every other class (elements of order > 2 and products of two or more
    disjoint transpositions).
    """
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")

    def rule(lam: Partition) -> int:
        if max(lam) == 1:
            return factorial(n + 2) // 2
        if max(lam) == 2 and lam.count(2) == 1:
            return factorial(n)
        return 0

    return ClassFunction.from_rule(n + 1, rule)


def regular_character(n: int) -> ClassFunction:
    m = n + 1
    return ClassFunction.from_rule(m, lambda lam: factorial(m) if max(lam) == 1 else 0)


def cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        k, length = start, 0
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def induced_character(m: int, subgroup: list[tuple[int, ...]]) -> ClassFunction:
    """Character of ``Ind_H^{S_m}`` of the trivial character of ``H``.

    Value on a class ``K`` is ``|G| / (|H| |K|) * |K ∩ H|``.
    """
    order = factorial(m)
    hits: dict[Partition, int] = {}
    for h in subgroup:
        ct = cycle_type(h)
        hits[ct] = hits.get(ct, 0) + 1
    return ClassFunction.from_rule(
        m,
        lambda lam: Fraction(order * hits.get(lam, 0), len(subgroup) * class_size(lam)),
    )


def induced_trivial_from_transposition(n: int) -> ClassFunction:
    """Induced character from the trivial character of ``<s>``, ``s = (1 2)``."""
    if n < 1:
        raise InputError(f"rank must be at least 1, got {n}")
    m = n + 1
    identity = tuple(range(m))
    s = (1, 0) + tuple(range(2, m))
    return induced_character(m, [identity, s])


def _beta_set(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(p + k - 1 - i for i, p in enumerate(lam))


def _from_beta(beta: tuple[int, ...]) -> Partition:
    k = len(beta)
    parts = sorted((b - (k - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))), reverse=True)
    return tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    # removing a border strip of length r = sliding one bead down r positions
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beta if target < c < b)
        smaller = _from_beta(tuple(target if c == b else c for c in beta))
        total += (-1) ** height * _mn(smaller, rest)
    return total


def irreducible_character(lam: Partition, mu: Partition) -> int:
    """``chi^lam(mu)`` by the Murnaghan-Nakayama rule."""
    lam, mu = tuple(lam), tuple(mu)
    _check_partition(lam)
    _check_partition(mu)
    if sum(lam) != sum(mu):
        raise InputError(f"weights differ: |{lam}| = {sum(lam)}, |{mu}| = {sum(mu)}")
    return _mn(lam, mu)


def irreducible(lam: Partition) -> ClassFunction:
    return ClassFunction.from_rule(sum(lam), lambda mu: irreducible_character(lam, mu))


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    return {lam: f.inner(irreducible(lam)) for lam in partitions(f.m)}


@dataclass
class Theorem1Row:
    cls: Partition
    total: Fraction
    regular: Fraction
    induced: Fraction
    n_times_induced: Fraction

    @property
    def rhs(self) -> Fraction:
        return self.regular + self.n_times_induced

    @property
    def ok(self) -> bool:
        return self.total == self.rhs


@dataclass
class Theorem1Report:
    """Comparison of the total character with ``Reg + n * Ind`` class by class."""

    n: int
    rows: list[Theorem1Row]
    induced_transposition_formula: Fraction
    # value quoted in the literature for Ind on transpositions, kept for contrast
    induced_transposition_quoted: int

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def quoted_value_consistent(self) -> bool:
        return self.n * self.induced_transposition_quoted == factorial(self.n)

    @property
    def failures(self) -> list[Theorem1Row]:
        return [r for r in self.rows if not r.ok]

    def notes(self) -> list[str]:
        if self.quoted_value_consistent:
            return []
        return [
            f"Ind on transpositions is {self.induced_transposition_formula} by the induced-character "
            f"formula; the quoted value 2(n-1)! = {self.induced_transposition_quoted} would give "
            f"n*Ind = {self.n * self.induced_transposition_quoted} != n! = {factorial(self.n)}"
        ]


def verify_theorem1(n: int) -> Theorem1Report:
    total = total_character(n)
    reg = regular_character(n)
    ind = induced_trivial_from_transposition(n)
    rows = [
        Theorem1Row(lam, total[lam], reg[lam], ind[lam], n * ind[lam])
        for lam in partitions(n + 1)
    ]
    transposition = (2,) + (1,) * (n - 1)
    return Theorem1Report(n, rows, ind[transposition], 2 * factorial(n - 1))


def _rat(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def character_report(n: int) -> dict:
    """JSON-ready summary of the total character and its decomposition."""
    report = verify_theorem1(n)
    mult = decompose(total_character(n))
    return {
        "n": n,
        "classes": [label(r.cls) for r in report.rows],
        "total": [_rat(r.total) for r in report.rows],
        "regular": [_rat(r.regular) for r in report.rows],
        "induced": [_rat(r.induced) for r in report.rows],
        "theorem1": report.passed,
        "irreducible_multiplicities": {label(lam): _rat(v) for lam, v in mult.items()},
    }
