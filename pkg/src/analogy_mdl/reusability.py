"""Weak and strong reusability degrees of a source model for a target case.

A source model is weakly eta-reusable when knowing it shortens the best
two-part description of the target case by at least eta bits: the best
total where each candidate pays its own model cost, versus the best total
where each candidate pays only its transfer cost from the source model.
It is strongly eta-reusable when every minimizer of the plain two-part
total is itself compressible by at least eta bits given the source model.

Degrees are the largest integer eta for which the property holds, with 0
meaning not reusable at any positive eta. With integer bit costs both
degrees reduce to the max-with-zero of a difference, which the test-side
definitional oracle cross-checks by scanning eta directly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .inference import optimal_models
from .model_space import CaseLike, Model, ModelSpace
from .morphology import DEFAULT_BOUNDS, SearchBounds


@dataclass(frozen=True)
class ReusabilityReport:
    """Both degrees plus the quantities they are computed from.

    weak_lhs is the best unassisted total; weak_rhs_min the best total with
    transfer costs in place of model costs; strong_witnesses lists, for each
    minimizer of the unassisted total, (model, model bits, transfer bits).
    """

    rho_weak: int
    rho_strong: int
    weak_lhs: int
    weak_rhs_min: int
    strong_witnesses: tuple


def reusability_report(
    space: ModelSpace,
    source_model: Model,
    case: CaseLike,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    mdl_result=None,
) -> ReusabilityReport:
    result = mdl_result or optimal_models(space, case, bounds)
    lhs = result.opt_bits
    rhs = min(
        space.transfer_cost(m, source_model) + kc
        for m, (_, kc) in result.per_model_breakdown.items()
    )
    witnesses = tuple(
        (m, space.model_cost(m), space.transfer_cost(m, source_model))
        for m in result.argmin_models
    )
    strong = min(km - kt for _, km, kt in witnesses)
    return ReusabilityReport(
        rho_weak=max(lhs - rhs, 0),
        rho_strong=max(strong, 0),
        weak_lhs=lhs,
        weak_rhs_min=rhs,
        strong_witnesses=witnesses,
    )


def rho_weak(
    space: ModelSpace,
    source_model: Model,
    case: CaseLike,
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> int:
    return reusability_report(space, source_model, case, bounds).rho_weak


def rho_strong(
    space: ModelSpace,
    source_model: Model,
    case: CaseLike,
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> int:
    return reusability_report(space, source_model, case, bounds).rho_strong


def rho(
    space: ModelSpace,
    source_model: Model,
    case: CaseLike,
    variant: str,
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> int:
    """Dispatch on variant: 'weak' or 'strong'."""
    report = reusability_report(space, source_model, case, bounds)
    if variant == "weak":
        return report.rho_weak
    if variant == "strong":
        return report.rho_strong
    raise ValueError(f"variant must be 'weak' or 'strong', got {variant!r}")


def rho_problem_only(
    space,
    source_model,
    problem: str,
    variant: str = "weak",
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> tuple[int, str | None]:
    """Experimental: score a bare target problem, no solution word given.

    Completes the problem into a case by transferring the source model
    through the solver, then scores that case. Returns (degree, predicted
    solution); (0, None) when the source model cannot generate anything for
    the problem. Morphology spaces only.
    """
    from .solver import solve_with_sources

    solutions = solve_with_sources(space, [source_model], problem, bounds, top_k=1)
    if not solutions:
        return 0, None
    predicted = solutions[0].y
    return rho(space, source_model, (problem, predicted), variant, bounds), predicted
