"""Two-part minimum-description-length inference on a single case.

The total cost of describing an observed case through a model is the
model's own code length plus the case's code length given the model.
`optimal_models` minimizes this total over the space's candidate set and
returns the complete set of minimizers, which downstream strong-reusability
checks quantify over. `compatible_models` keeps every candidate whose total
strictly beats the model-free encoding of the case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import SearchError
from .model_space import CaseLike, Model, ModelSpace
from .morphology import DEFAULT_BOUNDS, SearchBounds


@dataclass(frozen=True)
class MdlResult:
    """Outcome of two-part minimization over one case.

    argmin_models is sorted by (model cost, printed form);
    per_model_breakdown maps every candidate to (model bits, case bits).
    """

    opt_bits: int
    argmin_models: tuple
    per_model_breakdown: Mapping[Model, tuple[int, int]]


def optimal_models(
    space: ModelSpace, case: CaseLike, bounds: SearchBounds = DEFAULT_BOUNDS
) -> MdlResult:
    """Minimize model bits plus case-given-model bits over the candidates."""
    candidates = space.enumerate_candidates(case, bounds)
    if not candidates:
        raise SearchError(f"no candidate models for case {case!r}")
    breakdown = {
        m: (space.model_cost(m), space.case_cost_given_model(m, case))
        for m in candidates
    }
    opt_bits = min(km + kc for km, kc in breakdown.values())
    argmin = tuple(
        sorted(
            (m for m, (km, kc) in breakdown.items() if km + kc == opt_bits),
            key=space.sort_key,
        )
    )
    return MdlResult(opt_bits=opt_bits, argmin_models=argmin, per_model_breakdown=breakdown)


def compatible_models(
    space: ModelSpace, case: CaseLike, bounds: SearchBounds = DEFAULT_BOUNDS
) -> tuple:
    """Candidates whose two-part total is strictly below the model-free cost."""
    baseline = space.null_case_cost(case)
    result = optimal_models(space, case, bounds)
    return tuple(
        sorted(
            (
                m
                for m, (km, kc) in result.per_model_breakdown.items()
                if km + kc < baseline
            ),
            key=space.sort_key,
        )
    )
