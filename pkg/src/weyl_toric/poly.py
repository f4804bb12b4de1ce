"""Exact integer polynomials in one variable and in two variables."""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping

from .errors import InputError, InternalError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class UniPoly:
    """Univariate integer polynomial; ``coeffs[k]`` multiplies ``var^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def constant(cls, c: int) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "UniPoly":
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly.constant(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, UniPoly) else -int(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = UniPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: int) -> "UniPoly":
        return UniPoly([c * x for x in self.coeffs])

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def to_str(self, var: str = "t") -> str:
        """Descending powers with ``^`` exponents, e.g. ``6t^2 + 5t + 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.to_str("t")

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


class BiPoly:
    """Bivariate integer polynomial as a sparse map ``(deg_x, deg_y) -> coeff``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {k: int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    def coefficient(self, i: int, j: int) -> int:
        return self.terms.get((i, j), 0)

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPoly.constant(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, BiPoly) else -int(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, int], int] = {}
        for (a, b), u in self.terms.items():
            for (c, d), v in other.terms.items():
                key = (a + c, b + d)
                out[key] = out.get(key, 0) + u * v
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = BiPoly.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: int) -> "BiPoly":
        return BiPoly({k: c * v for k, v in self.terms.items()})

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(i, j)]
            mono = ("x" + (f"^{i}" if i > 1 else "") if i else "") + (
                "y" + (f"^{j}" if j > 1 else "") if j else ""
            )
            mag = abs(c)
            body = str(mag) if not mono else ("" if mag == 1 else str(mag)) + mono
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))})"


def shifted_monomial(a: int, b: int, c: int = 1) -> BiPoly:
    """Expand ``c * (x-1)^a * (y-1)^b``."""
    return BiPoly(
        {
            (i, j): c * comb(a, i) * comb(b, j) * (-1) ** (a - i + b - j)
            for i in range(a + 1)
            for j in range(b + 1)
        }
    )


def elementary_symmetric(values: list[int], r: int) -> int:
    if not 0 <= r <= len(values):
        raise InputError(f"r={r} outside 0..{len(values)}")
    # one-pass recurrence e_k <- e_k + v * e_{k-1}
    e = [1] + [0] * r
    for v in values:
        for k in range(r, 0, -1):
            e[k] += v * e[k - 1]
    return e[r]


def coeff_identity_lhs(n: int, k: int) -> int:
    """``sum_{j<=k} C(n-j, k-j) * e_j(1..n)``, the ``t^k`` coefficient of the Möbius expansion."""
    if not 0 <= k <= n:
        raise InputError(f"need 0 <= k <= n, got k={k}, n={n}")
    vals = list(range(1, n + 1))
    return sum(comb(n - j, k - j) * elementary_symmetric(vals, j) for j in range(k + 1))


def reverse_transform(p: UniPoly, n: int) -> UniPoly:
    """Return ``(-t)^n * p(-1/t)`` for ``deg p <= n``."""
    if p.degree > n:
        raise InputError(f"degree {p.degree} exceeds n={n}")
    out = [0] * (n + 1)
    for j, a in enumerate(p.coeffs):
        out[n - j] = a * (-1) ** (n - j)
    return UniPoly(out)


def tutte_eval_poincare(m: BiPoly, n: int) -> UniPoly:
    """``t^n * m((2t+1)/t, 0)`` as an honest polynomial in ``t``."""
    if m.x_degree > n:
        raise InternalError(
            f"x-degree {m.x_degree} exceeds n={n}; substitution would leave negative powers of t"
        )
    base = UniPoly([1, 2])
    out = UniPoly()
    for (i, j), c in m.terms.items():
        if j == 0:
            out = out + (base**i * UniPoly.monomial(n - i)).scale(c)
    return out


def poincare_to_point_count(p: UniPoly, n: int) -> UniPoly:
    """Inverse of :func:`reverse_transform`: ``q^n * p(-1/q)``."""
    if p.degree > n:
        raise InputError(f"degree {p.degree} exceeds n={n}")
    out = [0] * (n + 1)
    for k, a in enumerate(p.coeffs):
        out[n - k] = a * (-1) ** k
    return UniPoly(out)
