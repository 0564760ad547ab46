"""Case-to-case transferability scores.

A source case is eta-transferable to a target case when some model that
compresses the source case (a compatible model) is eta-reusable for the
target. Two coefficients summarize this over the whole compatible set:
the best reusability degree (tau_max, 0 on an empty set) and the degree's
expectation under the models' algorithmic posterior given the source case
(tau_avg). Posterior weights are exact dyadic rationals 2^-(case bits +
model bits), normalized over the compatible set so tau_avg is a true
expectation; all arithmetic uses fractions.Fraction, so the reported
values and the tau_avg <= tau_max bound are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .inference import compatible_models, optimal_models
from .model_space import CaseLike, ModelSpace
from .morphology import DEFAULT_BOUNDS, SearchBounds
from .reusability import reusability_report


@dataclass(frozen=True)
class TransferReport:
    """Scores and per-model accounting for one source-to-target transfer.

    per_model lists (model, posterior weight, reusability degree) over the
    compatible set; weights sum to 1 when the set is nonempty. rho_variance
    is the posterior-weighted variance of the degree, an extra diagnostic
    beyond the two coefficients (tau_avg alone cannot distinguish many
    mildly reusable models from one highly reusable one).
    """

    variant: str
    tau_max: int
    tau_avg: Fraction
    compatible_count: int
    per_model: tuple
    rho_variance: Fraction


def transfer_report(
    source_space: ModelSpace,
    target_space: ModelSpace,
    source_case: CaseLike,
    target_case: CaseLike,
    variant: str = "weak",
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> TransferReport:
    if variant not in ("weak", "strong"):
        raise ValueError(f"variant must be 'weak' or 'strong', got {variant!r}")
    compatible = compatible_models(source_space, source_case, bounds)
    if not compatible:
        return TransferReport(
            variant=variant,
            tau_max=0,
            tau_avg=Fraction(0),
            compatible_count=0,
            per_model=(),
            rho_variance=Fraction(0),
        )
    breakdown = optimal_models(source_space, source_case, bounds).per_model_breakdown
    raw = {
        m: Fraction(1, 2 ** (breakdown[m][0] + breakdown[m][1])) for m in compatible
    }
    total = sum(raw.values())
    per_model = []
    for m in compatible:
        report = reusability_report(target_space, m, target_case, bounds)
        degree = report.rho_weak if variant == "weak" else report.rho_strong
        per_model.append((m, raw[m] / total, degree))
    tau_avg = sum((w * d for _, w, d in per_model), Fraction(0))
    variance = sum((w * (d - tau_avg) ** 2 for _, w, d in per_model), Fraction(0))
    return TransferReport(
        variant=variant,
        tau_max=max(d for _, _, d in per_model),
        tau_avg=tau_avg,
        compatible_count=len(compatible),
        per_model=tuple(per_model),
        rho_variance=variance,
    )


def tau_max(
    source_space: ModelSpace,
    target_space: ModelSpace,
    source_case: CaseLike,
    target_case: CaseLike,
    variant: str = "weak",
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> int:
    """Best reusability degree over the source case's compatible models."""
    return transfer_report(
        source_space, target_space, source_case, target_case, variant, bounds
    ).tau_max


def tau_avg(
    source_space: ModelSpace,
    target_space: ModelSpace,
    source_case: CaseLike,
    target_case: CaseLike,
    variant: str = "weak",
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> Fraction:
    """Posterior-weighted expected reusability degree; exact rational."""
    return transfer_report(
        source_space, target_space, source_case, target_case, variant, bounds
    ).tau_avg


def is_transferable(
    source_space: ModelSpace,
    target_space: ModelSpace,
    source_case: CaseLike,
    target_case: CaseLike,
    eta: int,
    variant: str = "weak",
    bounds: SearchBounds = DEFAULT_BOUNDS,
) -> bool:
    """True iff some compatible source model reaches degree eta on the target."""
    if eta < 1:
        raise ValueError("eta must be >= 1")
    report = transfer_report(
        source_space, target_space, source_case, target_case, variant, bounds
    )
    return any(d >= eta for _, _, d in report.per_model)
