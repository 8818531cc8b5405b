"""Exact-arithmetic analysis of linear rank-metric codes over finite fields.

Computes the fundamental parameters of a code (minimum distance, rank
distribution, maximum rank, covering radius, MRD/anticode defects), the
MacWilliams-type transforms relating a code to its dual, the classical MRD
and optimal-anticode constructions, covering-radius bounds, and exact or
bounded densities of MRD codes -- every closed form cross-checked against
brute-force oracles at desk scale.
"""

from .codes import (
    DEFAULT_BUDGET,
    AnticodeClassification,
    EntrySet,
    RankDistribution,
    RankMetricCode,
    ambient_code,
    anticode_defect,
    codewords,
    contains,
    covering_radius_exact,
    dual,
    from_generators,
    initial_entry,
    initial_set,
    is_mrd,
    is_optimal_anticode,
    maximum_rank,
    minimum_distance,
    rank_distribution,
    shorten,
    singleton_defect,
    translate_rank_distribution,
)
from .codefile import parse_code, read_code, write_code, write_code_file
from .constructions import build_column_anticode, build_mrd, build_row_anticode
from .covering import (
    CoveringReport,
    covering_report,
    dual_distance_bound,
    external_distance_bound,
    initial_set_bound,
    lambda_cover,
)
from .density import (
    CensusResult,
    DensityReport,
    Enclosure,
    asymptotic_m_bounds,
    asymptotic_q_limit,
    density_bound_ball,
    density_bound_cc,
    density_census,
    density_exact,
    density_report,
    euler_phi_pentagonal,
    euler_phi_truncated,
)
from .errors import BudgetExceededError, CodeFileError
from .fields import (
    ExtensionTower,
    FieldElement,
    FieldSpec,
    dual_basis,
    field_for_order,
    field_with_modulus,
    make_field,
    trace_to_base,
)
from .macwilliams import (
    binomial_moment_check,
    mrd_distribution,
    solve_dual_distribution_by_moments,
    transform,
    translate_tail,
)
from .matrices import (
    MatrixOverFq,
    Subspace,
    column_space,
    enumerate_subspaces,
    orthogonal_subspace,
    rank,
    rank_distance,
    row_space,
    trace_product,
)
from .qcombinatorics import (
    ball_size,
    moebius_coefficient,
    nu,
    q_binomial,
    q_binomial_identity_check,
    theta,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
