"""Cohomology of the complement of the toric arrangement of type A_n."""

from .characters import (
    ClassFunction,
    decompose,
    induced_trivial_from_transposition,
    irreducible_character,
    partitions,
    regular_character,
    total_character,
    verify_theorem1,
)
from .errors import InputError, InternalError
from .invariants import (
    arithmetic_tutte,
    brute_force_point_count,
    point_count_poly,
    poincare_closed_form,
    poincare_macmeikan,
    verify_all,
)
from .lattice import IntMatrix, Sublattice, elementary_divisors, hnf, join, sublattice_from_rows
from .poly import BiPoly, UniPoly
from .poset import IntersectionPoset, build_poset
from .roots import RootSystemA, positive_roots

__version__ = "0.1.0"
