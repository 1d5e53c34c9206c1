"""Mixed Hodge structures and point counts of small cluster varieties."""

from .exceptions import *  # noqa: F401,F403
from .hodge import (
    Case,
    Classification,
    MixedHodgeTable,
    RestrictionRankData,
    Variant,
    assemble,
    classify,
    e_polynomial,
    is_mixed_tate,
    kunneth,
    mayer_vietoris,
    numerical_chl,
    table,
    table_for,
)
from .logforms import LogForm, MonomialMap, basis_for, bezout_change, bezout_pair, pullback
from .pointcount import (
    PrimeField,
    VerificationReport,
    admissible_modulus,
    admissible_primes,
    count_isolated,
    count_variety,
    interpolate,
    verify_table,
)
from .polynomial import CountingPolynomial
from .quiver import (
    ExtendedExchangeMatrix,
    FiniteType,
    QuiverGraph,
    Seed,
    finite_type_check,
    freeze,
    is_isolated,
    isolated_presentation,
    louise_decompose,
    mutate_matrix,
    separating_edges,
)

__version__ = "0.1.0"
