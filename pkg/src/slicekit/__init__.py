"""Exact slice-filtration computations for finite groups.

The package computes Mackey-functor filtrations, slice towers of
suspended and desuspended Eilenberg-MacLane spectra, slice-cell
combinatorics, geometric fixed-point degree transport and generator
sets, all over explicit permutation groups with integer arithmetic.
"""

from .abelian import (
    AbElement,
    AbHom,
    FgAbGroup,
    SubgroupInclusion,
    ColumnSolver,
    column_lattice_basis,
    compose,
    cyclic_group,
    direct_sum,
    equal_elements,
    factor_string,
    free_group,
    full_subgroup,
    identity_hom,
    image,
    is_zero_hom,
    kernel,
    kernel_basis,
    preimage_basis,
    quotient,
    smith_normal_form,
    solve,
    subgroup_generated,
    zero_hom,
    zero_subgroup,
)
from .errors import DomainError, ParseError, SliceKitError
from .groups import (
    NAMED_GENERATORS,
    PRESET_GROUPS,
    PermGroup,
    QuotientData,
    Subgroup,
    SubgroupLattice,
    WeylData,
    double_cosets,
    family_not_containing,
    group_from_generators,
    named_group,
    quotient_group,
    subgroup_lattice,
    weyl_group,
)
from .mackey import (
    MACKEY_PRESETS,
    AxiomFailure,
    AxiomReport,
    MackeyElement,
    MackeyFunctor,
    SubMackey,
    burnside_mackey,
    check_mackey_axioms,
    constant_mackey,
    fixed_point_mackey,
    full_submackey,
    hill_filtration,
    inflate_mackey,
    mackey_preset,
    order_generated_filtration,
    quotient_mackey,
    reg_coh,
    regular_action_mackey,
    restrict_mackey,
    sign_action_mackey,
    sub_as_mackey,
    sub_mackey_generated,
    zero_submackey,
)
from .slices import (
    EMTower,
    FiltrationBounds,
    GeneratorSet,
    SliceCell,
    cell_dual,
    em_tower_minus,
    em_tower_plus,
    filtration_bounds,
    geometric_fixed_points_cell,
    homotopy_filtration,
    irregular_tower_from_regular,
    negative_generators,
    pullback_degree,
    pullback_tower,
    slice_cells,
    tau_one_generators,
)
from .serialize import (
    canonical_json,
    group_to_json,
    mackey_to_json,
    parse_group_obj,
    parse_mackey_obj,
    tower_to_json,
)
from .chart import render_chart, render_tower_svg

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
