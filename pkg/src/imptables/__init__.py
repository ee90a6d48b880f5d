"""Truth tables of bracketed implication chains.

Exact entry counts over all bracketings in classical and three-valued
logic, computed three independent ways (brute force, convolution
recurrence, closed-form series expansion), plus coefficientwise
verification of the algebraic structure the count series generate.
"""

from .logic import (
    CLASSICAL,
    FALSE,
    KLEENE,
    TRUE,
    UNKNOWN,
    Bracketing,
    BudgetError,
    CountVector,
    Leaf,
    Node,
    Semantics,
    brute_counts,
    catalan,
    color_class_counts,
    enumerate_bracketings,
    evaluate,
    format_formula,
    implies,
    iter_valuations,
    leaf_count,
    semantics_from_radix,
    tree_counts,
)
from .monoid import (
    MonoidElement,
    Realizer,
    VerificationReport,
    Witness,
    default_sample,
    run_all,
    verify_associativity,
    verify_bound,
    verify_commutativity,
    verify_ideal_samples,
    verify_partitions,
    verify_power_identities,
    verify_substitution_bounds,
)
from .recurrences import (
    SequenceTable,
    classical_by_recurrence,
    counts_by_recurrence,
    kleene_by_recurrence,
)
from .series import (
    CLASSICAL_SERIES,
    KLEENE_SERIES,
    SERIES_NAMES,
    ConsistencyError,
    PowerSeries,
    closed_form,
    series_description,
)

__version__ = "0.1.0"

__all__ = [
    "Bracketing",
    "BudgetError",
    "CLASSICAL",
    "CLASSICAL_SERIES",
    "ConsistencyError",
    "CountVector",
    "FALSE",
    "KLEENE",
    "KLEENE_SERIES",
    "Leaf",
    "MonoidElement",
    "Node",
    "PowerSeries",
    "Realizer",
    "SERIES_NAMES",
    "Semantics",
    "SequenceTable",
    "TRUE",
    "UNKNOWN",
    "VerificationReport",
    "Witness",
    "brute_counts",
    "catalan",
    "classical_by_recurrence",
    "closed_form",
    "color_class_counts",
    "counts_by_recurrence",
    "default_sample",
    "enumerate_bracketings",
    "evaluate",
    "format_formula",
    "implies",
    "iter_valuations",
    "kleene_by_recurrence",
    "leaf_count",
    "run_all",
    "semantics_from_radix",
    "series_description",
    "tree_counts",
    "verify_associativity",
    "verify_bound",
    "verify_commutativity",
    "verify_ideal_samples",
    "verify_partitions",
    "verify_power_identities",
    "verify_substitution_bounds",
    "__version__",
]
