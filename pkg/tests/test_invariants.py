from itertools import combinations
from math import factorial

import pytest

from oracles import determinantal_divisors, points_fixing_three, rational_rank
from weyl_toric.errors import InputError
from weyl_toric.invariants import (
    PrimeField,
    all_multiplicities_one,
    arithmetic_tutte,
    brute_force_point_count,
    point_count_poly,
    poincare_closed_form,
    poincare_macmeikan,
    subset_statistics,
    verify_all,
)
from weyl_toric.poly import BiPoly, UniPoly, coeff_identity_lhs, shifted_monomial
from weyl_toric.poset import build_poset
from weyl_toric.roots import positive_roots


def tutte_oracle(n):
    """Direct subset sum with rank and multiplicity from minors, no memoization."""
    roots = positive_roots(n).positive_roots
    total = BiPoly()
    for size in range(len(roots) + 1):
        for S in combinations(roots, size):
            rows = [list(r) for r in S]
            rk = rational_rank(rows) if rows else 0
            mult = 1
            for d in determinantal_divisors(rows):
                mult *= d
            total = total + shifted_monomial(n - rk, size - rk, mult)
    return total


@pytest.mark.parametrize(
    "n,expected", [(1, [1, 2]), (2, [1, 5, 6]), (3, [1, 9, 26, 24])]
)
def test_closed_form_examples(n, expected):
    assert poincare_closed_form(n) == UniPoly(expected)


@pytest.mark.parametrize("n", range(1, 9))
def test_closed_form_ends(n):
    p = poincare_closed_form(n)
    assert p.coefficient(0) == 1
    assert p.coefficient(n) == factorial(n + 1)
    for k in range(n + 1):
        assert p.coefficient(k) == coeff_identity_lhs(n, k)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_macmeikan(n):
    assert poincare_macmeikan(build_poset(positive_roots(n))) == poincare_closed_form(n)


@pytest.mark.parametrize(
    "n,expected", [(1, [-2, 1]), (2, [6, -5, 1]), (3, [-24, 26, -9, 1])]
)
def test_point_count_poly(n, expected):
    assert point_count_poly(n) == UniPoly(expected)


@pytest.mark.parametrize("n,q,expected", [(1, 5, 3), (2, 7, 20), (1, 3, 1)])
def test_brute_force_point_count_examples(n, q, expected):
    assert brute_force_point_count(n, q) == expected
    assert points_fixing_three(n, q) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("q", [5, 7, 11, 13])
def test_brute_force_point_count_matches_poly(n, q):
    got = brute_force_point_count(n, q)
    assert got == point_count_poly(n)(q) == points_fixing_three(n, q)


def test_point_count_guards():
    with pytest.raises(InputError):
        brute_force_point_count(4, 5)  # 7 distinct points needed, P^1(F_5) has 6
    with pytest.raises(InputError):
        brute_force_point_count(1, 9)  # not prime
    with pytest.raises(InputError):
        brute_force_point_count(1, 5, field=PrimeField(7))


def test_point_count_edge_of_guard():
    # q + 1 == n + 3: every point of P^1 is used
    assert brute_force_point_count(3, 5) == point_count_poly(3)(5) == 6


def test_prime_field():
    f = PrimeField(7)
    assert f.mul(3, 5) == 1 and f.inv(3) == 5 and f.sub(2, 5) == 4
    assert len(f.projective_line()) == 8
    assert f.same_point((2, 1), (4, 2)) and not f.same_point((1, 0), (0, 1))
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, BiPoly.x()),
        (2, BiPoly({(2, 0): 1, (1, 0): 1, (0, 1): 1})),
    ],
)
def test_arithmetic_tutte_examples(n, expected):
    assert arithmetic_tutte(positive_roots(n)) == expected


def test_a2_tutte_value():
    assert arithmetic_tutte(positive_roots(2))(2, 1) == 7


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_arithmetic_tutte_matches_direct_sum(n):
    assert arithmetic_tutte(positive_roots(n)) == tutte_oracle(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_subset_statistics_cover_every_subset(n):
    stats = subset_statistics(positive_roots(n))
    assert sum(stats.values()) == 2 ** (n * (n + 1) // 2)
    assert all_multiplicities_one(positive_roots(n))


def test_tutte_independent_of_partitioning():
    roots = positive_roots(4)
    assert subset_statistics(roots, workers=1) == subset_statistics(roots, workers=3)


def test_point_count_independent_of_workers():
    assert brute_force_point_count(2, 7, workers=2) == brute_force_point_count(2, 7, workers=1)


def test_tutte_specializes_to_graphic_tutte():
    # A_n roots are the edges of K_{n+1}; Tutte of K_3 is x^2 + x + y, of K_4 is known
    k4 = {(3, 0): 1, (2, 0): 3, (1, 0): 2, (1, 1): 4, (0, 1): 2, (0, 2): 3, (0, 3): 1}
    assert arithmetic_tutte(positive_roots(3)) == BiPoly(k4)


@pytest.mark.parametrize("n,euler", [(1, 3), (2, 12), (5, 2520)])
def test_verify_all_examples(n, euler):
    report = verify_all(n)
    assert report.passed and report.agree
    assert report.euler_at_1 == euler
    assert report.closed_form == poincare_closed_form(n)
    doc = report.to_dict()
    assert set(doc) == {"n", "closed_form", "macmeikan", "point_count", "tutte", "agree", "euler_at_1"}
    assert report.mismatches() == []


def test_verify_all_reports_mismatch():
    report = verify_all(2)
    report.tutte = UniPoly([1, 5, 7])
    report.agree = False
    assert not report.passed
    assert any("tutte" in m for m in report.mismatches())


def test_verify_all_rejects_zero():
    with pytest.raises(InputError):
        verify_all(0)
