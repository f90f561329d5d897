"""Exact star discrepancy, lower-bound witness certificates, and
combinatorial complexity of point sets in the unit cube."""

__version__ = "0.1.0"

from .complexity import (
    BoundsTable,
    ShatterReport,
    binomial_sum_bound,
    bounds_table,
    factored_shatter_bound,
    growth_bound,
    has_sparse_boundary,
    max_boundary_box,
    packing_condition,
    packing_epsilon,
    restricted_shatter_bound,
    sauer_shelah,
    shatter_count,
    shatter_recursion,
    shatter_report,
    sparse_boundary_lower_bound,
)
from .discrepancy import (
    DEFAULT_CELL_BUDGET,
    BudgetExceededError,
    DiscrepancyResult,
    critical_grid,
    lower_bound_sample,
    star_discrepancy_exact,
    star_discrepancy_oracle,
)
from .generators import (
    GeneratorSpec,
    gen_chain,
    gen_halton,
    gen_lattice,
    gen_random,
    gen_staircase,
    splitmix64,
)
from .geometry import (
    AnchoredBox,
    LocalDiscrepancy,
    PointSet,
    Side,
    as_box,
    as_point_set,
    boundary_count,
    count_le,
    count_lt,
    local_disc,
    volume,
)
from .pointsfile import PointsFormatError, format_points, parse_points
from .witness import (
    Case3Trace,
    CaseLabel,
    GridMinReport,
    KappaPartition,
    RemovalStep,
    WitnessCertificate,
    case3_guarantee,
    check_bernoulli_inequality,
    check_case3_rational,
    inverse_discrepancy_lower_bound,
    lower_bound_witness,
    partition_kappa,
    simple_witness,
)

__all__ = [
    "__version__",
    # geometry
    "PointSet",
    "AnchoredBox",
    "LocalDiscrepancy",
    "Side",
    "as_point_set",
    "as_box",
    "volume",
    "count_le",
    "count_lt",
    "boundary_count",
    "local_disc",
    # discrepancy
    "DEFAULT_CELL_BUDGET",
    "BudgetExceededError",
    "DiscrepancyResult",
    "critical_grid",
    "star_discrepancy_exact",
    "star_discrepancy_oracle",
    "lower_bound_sample",
    # witness
    "CaseLabel",
    "KappaPartition",
    "RemovalStep",
    "Case3Trace",
    "WitnessCertificate",
    "GridMinReport",
    "partition_kappa",
    "simple_witness",
    "lower_bound_witness",
    "case3_guarantee",
    "check_bernoulli_inequality",
    "check_case3_rational",
    "inverse_discrepancy_lower_bound",
    # complexity
    "ShatterReport",
    "BoundsTable",
    "shatter_count",
    "shatter_report",
    "max_boundary_box",
    "has_sparse_boundary",
    "sauer_shelah",
    "shatter_recursion",
    "restricted_shatter_bound",
    "factored_shatter_bound",
    "growth_bound",
    "binomial_sum_bound",
    "sparse_boundary_lower_bound",
    "packing_epsilon",
    "packing_condition",
    "bounds_table",
    # generators
    "GeneratorSpec",
    "gen_chain",
    "gen_staircase",
    "gen_random",
    "gen_lattice",
    "gen_halton",
    "splitmix64",
    # points files
    "PointsFormatError",
    "format_points",
    "parse_points",
]
