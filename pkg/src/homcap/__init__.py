"""Exact homotopy-capacity computations.

The capacity of a space is the number of homotopy types it dominates.
This package computes it (and enumerates the dominated types) for the
families where the answer is settled: wedges of spheres of arbitrary
dimensions, Moore spaces, abelian Eilenberg-MacLane spaces, and CP^2,
with certified lower bounds for finite products.  The supporting layers
are exact: integer linear algebra through Smith normal form, canonical
finitely generated abelian groups, and degreewise homology with the
Kunneth formula.
"""

from .abelian import (
    DEFAULT_BRUTE_FORCE_LIMIT,
    TRIVIAL,
    Z,
    FgAbelianGroup,
    IntMatrix,
    PrimaryComponent,
    PrimaryDecomposition,
    SizeLimitError,
    brute_force_summands,
    count_direct_summands,
    cyclic,
    direct_sum,
    enumerate_direct_summands,
    free,
    from_presentation,
    is_isomorphic,
    primary_decomposition,
    smith_normal_form,
    tensor,
    tor,
)
from .capacity import (
    CounterexampleReport,
    ExtendedCount,
    UnsupportedCapacityError,
    borsuk_report,
    capacity,
    capacity_two_complex,
    default_comparison_bound,
    enumerate_dominated,
    homology_equivalent,
    uses_moore_wedge_extension,
)
from .grammar import (
    DomainError,
    ParseError,
    parse_group,
    parse_space,
    render_group,
    render_space,
)
from .spaces import (
    POINT,
    ComplexProjective,
    EilenbergMacLane,
    HomologyProfile,
    Moore,
    Point,
    Product,
    SpaceExpr,
    Sphere,
    UnsupportedSpaceError,
    Wedge,
    canonicalize,
    fundamental_group_free_rank,
    homological_dimension,
    homology,
    homology_profile,
    is_homology_supported,
    product,
    wedge,
)

__version__ = "0.1.0"
