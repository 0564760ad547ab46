"""Bit-exact MDL inference and transfer scoring for string analogies.

Measures, in whole bits under one fixed prefix-free code, whether what was
learned from a solved word pair can be carried over to another: it infers
minimal transformation models for a pair, scores how reusable a model is
for a new case (weakly: it shortens the best description; strongly: it
compresses every optimal model), scores how transferable one case is to
another, and solves a : b :: c : ? by transferring models.
"""

from .coding import (
    Alphabet,
    BitLength,
    Case,
    DEFAULT_ALPHABET,
    Word,
    null_case_cost,
    unary_cost,
    word_cost,
)
from .errors import (
    AlphabetError,
    AnalogyMdlError,
    ArityError,
    CanonicalFormError,
    DomainError,
    EmptySolutionError,
    ModelSyntaxError,
    ResourceError,
    SchemaError,
    SearchError,
)
from .inference import MdlResult, compatible_models, optimal_models
from .model_space import ModelSpace, MorphologySpace, SyntheticSpace, load_synthetic
from .morphology import (
    DEFAULT_BOUNDS,
    IDENTITY_MODEL,
    Lit,
    MorphModel,
    Pattern,
    Representation,
    SearchBounds,
    Slot,
    apply,
    case_cost_given_model,
    format_model,
    generate_candidates,
    invert,
    is_canonical,
    model_cost,
    parse_model,
    transfer_cost,
)
from .reusability import ReusabilityReport, reusability_report, rho_strong, rho_weak
from .solver import Solution, UNREACHABLE_BITS, score_candidate, solve
from .transferability import (
    TransferReport,
    is_transferable,
    tau_avg,
    tau_max,
    transfer_report,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "AnalogyMdlError",
    "ArityError",
    "BitLength",
    "CanonicalFormError",
    "Case",
    "DEFAULT_ALPHABET",
    "DEFAULT_BOUNDS",
    "DomainError",
    "EmptySolutionError",
    "IDENTITY_MODEL",
    "Lit",
    "MdlResult",
    "ModelSpace",
    "ModelSyntaxError",
    "MorphModel",
    "MorphologySpace",
    "Pattern",
    "Representation",
    "ResourceError",
    "ReusabilityReport",
    "SchemaError",
    "SearchBounds",
    "SearchError",
    "Slot",
    "Solution",
    "SyntheticSpace",
    "TransferReport",
    "UNREACHABLE_BITS",
    "Word",
    "apply",
    "case_cost_given_model",
    "compatible_models",
    "format_model",
    "generate_candidates",
    "invert",
    "is_canonical",
    "is_transferable",
    "load_synthetic",
    "model_cost",
    "null_case_cost",
    "optimal_models",
    "parse_model",
    "reusability_report",
    "rho_strong",
    "rho_weak",
    "score_candidate",
    "solve",
    "tau_avg",
    "tau_max",
    "transfer_cost",
    "transfer_report",
    "unary_cost",
    "word_cost",
]
