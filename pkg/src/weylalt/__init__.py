"""Exact computation of Kostant weight multiplicities and Weyl alternation
sets for the rank-2 simple Lie algebras A2, B2, C2, D2 and G2."""

from .conditions import (
    alt_set_closed,
    condition_table,
    evaluate_condition,
    member_closed,
    membership_pair,
    serialize_conditions,
    theorem_case,
)
from .geometry import DiagramGrid, classify_shape, diagram, empty_region
from .kostant import (
    make_cached_partition,
    partition,
    partition_a2_closed,
    partition_positive,
)
from .multiplicity import (
    AltSet,
    alt_set_oracle,
    multiplicity,
    multiplicity_restricted,
    sigma_shift,
)
from .render import DEFAULT_PALETTE, emit_csv, emit_svg, emit_tikz
from .rootsys import (
    ALGEBRAS,
    Weight,
    WeylElement,
    apply_element,
    element_by_word,
    element_index,
    inverse_element,
    fundamental_weights,
    positive_roots,
    rho,
    simple_roots,
    weyl_group,
)
from .weightlat import (
    FundCoords,
    in_root_lattice,
    sl3_param,
    to_fund_basis,
    to_root_basis,
)

__version__ = "0.1.0"
