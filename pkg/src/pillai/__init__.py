"""Exact-arithmetic toolkit for the generalized Pillai equation
(-1)**u * r * a**x + (-1)**v * s * b**y = c.

Solves instances exactly, normalizes solution sets to their unique basic
form, classifies sets against the pinned registry of exceptional cases,
realizes the infinite three-solution generator families, reproduces the
quantitative bound crossings, and searches bounded coefficient boxes
exhaustively with checkpointing.
"""

from .equation import (
    DEFAULT_EXPONENT_CAP,
    Enumeration,
    Instance,
    PairRelation,
    Solution,
    THEOREM2_EXPONENT_BOUND,
    determine_signs,
    enumerate_solutions,
    gcd_exponent_cap,
    pair_relation,
)
from .families import (
    BasicForm,
    FamilyWitness,
    ReductionError,
    SolutionSet,
    associate,
    family_key,
    format_set,
    is_basic_form,
    is_subset,
    parse_set,
    reduce_to_basic_form,
    same_family,
)
from .catalog import CatalogEntry, ParamFamily, catalog_entries, match_catalog
from .generators import (
    FAMILY_IDS,
    GeneratedSet,
    GeneratorParameterError,
    classify_generator_family,
    generate,
    sweep,
)
from .bounds import (
    BoundReport,
    NumericError,
    SigmaBreakdown,
    check_lemma13,
    check_lemma14,
    check_lemma17,
    check_lemma18,
    lemma15_bound,
    lemma19_threshold,
    sigma,
    theorem2_fixed_points,
)
from .search import (
    CheckpointError,
    Finding,
    SearchBox,
    StructureReport,
    check_structure,
    classify_finding,
    findings_digest,
    merge_findings,
    run_search,
)

__version__ = "0.1.0"

__all__ = [
    "BasicForm",
    "BoundReport",
    "CatalogEntry",
    "CheckpointError",
    "DEFAULT_EXPONENT_CAP",
    "Enumeration",
    "FAMILY_IDS",
    "FamilyWitness",
    "Finding",
    "GeneratedSet",
    "GeneratorParameterError",
    "Instance",
    "NumericError",
    "PairRelation",
    "ParamFamily",
    "ReductionError",
    "SearchBox",
    "SigmaBreakdown",
    "Solution",
    "SolutionSet",
    "StructureReport",
    "THEOREM2_EXPONENT_BOUND",
    "associate",
    "catalog_entries",
    "check_lemma13",
    "check_lemma14",
    "check_lemma17",
    "check_lemma18",
    "check_structure",
    "classify_finding",
    "classify_generator_family",
    "determine_signs",
    "enumerate_solutions",
    "family_key",
    "findings_digest",
    "format_set",
    "gcd_exponent_cap",
    "generate",
    "is_basic_form",
    "is_subset",
    "lemma15_bound",
    "lemma19_threshold",
    "match_catalog",
    "merge_findings",
    "pair_relation",
    "parse_set",
    "reduce_to_basic_form",
    "run_search",
    "same_family",
    "sigma",
    "sweep",
    "theorem2_fixed_points",
]
