"""Labeled packings of cycles and circuits.

Construct packings with the best known label counts, verify arbitrary
packing certificates, evaluate closed-form and partition bounds, and compute
exact packing numbers on small instances by exhaustive search.
"""

from .bounds import (
    ClosedBound,
    PartitionBoundResult,
    Table1Row,
    circuit_closed_upper,
    circuit_upper_lemma,
    cycle_closed_upper,
    cycle_lower_bound,
    lambda_exact_large_cycle,
    lambda_known,
    partition_bound,
    partition_feasible,
    table1,
)
from .constructions import (
    CycleCase,
    builtin_directed_exceptions,
    circuit_placement_exists,
    classify_cycle_case,
    construct_circuit_packing,
    construct_circuit_packing_large,
    construct_circuit_packing_small_even,
    construct_circuit_packing_small_odd,
    construct_cycle_packing,
)
from .errors import (
    CertificateError,
    ConstructionError,
    ExcludedInstanceError,
    NoPlacementError,
    RangeError,
)
from .graphs import circuit_arcs, cycle_edges, is_single_circuit, is_single_cycle
from .model import LabeledPacking, Labeling, dot_documents, fixed_points
from .oracle import (
    CounterexampleResult,
    OracleResult,
    SearchBudget,
    guided_counterexample_search,
    lambda_exact,
    normalize_first_copy,
)
from .verifier import VerificationReport, max_labels_of_placement, verify

__version__ = "0.1.0"

__all__ = [
    "CertificateError",
    "ClosedBound",
    "ConstructionError",
    "CounterexampleResult",
    "CycleCase",
    "ExcludedInstanceError",
    "LabeledPacking",
    "Labeling",
    "NoPlacementError",
    "OracleResult",
    "PartitionBoundResult",
    "RangeError",
    "SearchBudget",
    "Table1Row",
    "VerificationReport",
    "builtin_directed_exceptions",
    "circuit_arcs",
    "circuit_closed_upper",
    "circuit_placement_exists",
    "circuit_upper_lemma",
    "classify_cycle_case",
    "construct_circuit_packing",
    "construct_circuit_packing_large",
    "construct_circuit_packing_small_even",
    "construct_circuit_packing_small_odd",
    "construct_cycle_packing",
    "cycle_closed_upper",
    "cycle_edges",
    "cycle_lower_bound",
    "dot_documents",
    "fixed_points",
    "guided_counterexample_search",
    "is_single_circuit",
    "is_single_cycle",
    "lambda_exact",
    "lambda_exact_large_cycle",
    "lambda_known",
    "max_labels_of_placement",
    "normalize_first_copy",
    "partition_bound",
    "partition_feasible",
    "table1",
    "verify",
]
