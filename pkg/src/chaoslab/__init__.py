"""Exact-arithmetic models of free and classical Wiener chaos.

Two group algebras, their finite-n model elements, the limiting pairing
combinatorics, moment-cumulant inversion, orthogonal polynomial
linearization, and three equivalent counting models, all over exact
rationals and cross-validated against each other.
"""

from .algebra import AlgebraElement, FiniteSet, Permutation, trace_of_product
from .chaos import (
    ScaledElement,
    classical_element,
    finite_trace_classical,
    finite_trace_free,
    free_element,
    residual_classical,
    residual_free,
)
from .cumulants import (
    MomentFunctional,
    classical_cumulant,
    count_by_collapse,
    free_cumulant,
    nc2_moments,
    pi2_moments,
)
from .dyck import DyckPath, enumerate_dyck_paths, enumerate_irreducible_dyck_paths, pairing_to_path, path_to_pairing
from .orthopoly import (
    MomentSequence,
    Polynomial,
    chebyshev_u,
    free_charlier,
    hermite,
    integrate,
    linearize_charlier,
    linearize_chebyshev,
    linearize_hermite,
    weight_moments,
)
from .partitions import (
    Composition,
    GuardExceeded,
    SetPartition,
    collapse,
    count_nc2,
    count_nc2_star,
    count_pi2,
    count_pi2_star,
    enumerate_nc,
    enumerate_nc2,
    enumerate_nc2_star,
    enumerate_pairings,
    enumerate_pi2,
    enumerate_pi2_star,
    enumerate_set_partitions,
    is_noncrossing,
    join,
    meet,
    weighted_pairing_sum,
)
from .tableaux import Tableau, enumerate_ssyt, pairing_to_tableau
from .toeplitz import toeplitz_matrix, toeplitz_moment

__version__ = "0.1.0"
