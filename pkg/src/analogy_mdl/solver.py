"""Solve analogical equations a : b :: c : ? by model transfer.

The solved source pair (a, b) nominates source models: its compatible
models, or, when no model compresses a single observation below the raw
encoding, the minimizers of its two-part cost. Each source model is carried
to the target either verbatim (one transfer bit) or by redefining a fresh
model drawn from the source pair's candidate set (one bit plus the model's
own code). A carried model whose first pattern matches c yields a
completion y from its second pattern; completions are ranked by transfer
bits plus the bits of the completed case given the carried model.

Slots used only by the second pattern are not pinned by c; they are taken
empty, the cheapest completion of that model. Redefinition cost does not
depend on which source model is redefined, so fresh models are scanned
once, cheapest first, stopping as soon as no remaining model can still
enter the top k (its transfer bits plus the least possible case bits
already exceed the current cutoff); the returned ranking is exact.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass

from .coding import Alphabet, DEFAULT_ALPHABET, Word
from .errors import EmptySolutionError
from .inference import compatible_models, optimal_models
from .model_space import MorphologySpace
from .morphology import (
    DEFAULT_BOUNDS,
    MorphModel,
    Representation,
    SearchBounds,
    _match_pattern,
    apply,
)

# Sentinel for completions unreachable within the search bounds.
UNREACHABLE_BITS = sys.maxsize


@dataclass(frozen=True)
class Solution:
    """One ranked completion, reconstructible as apply(model, representation)."""

    y: Word
    model: MorphModel
    representation: Representation
    total_bits: int
    transfer_bits: int
    case_bits: int
    source_model: MorphModel
    rank: int


def source_pool(
    space: MorphologySpace, case, bounds: SearchBounds = DEFAULT_BOUNDS
) -> tuple[tuple[MorphModel, ...], str]:
    """Source models nominated by a solved case, with the pool kind.

    Returns the compatible models when any exist ("compatible"), otherwise
    the two-part minimizers ("optimal"): a lone observation often admits no
    strictly compressing model, yet its best explanation is still the thing
    an analogy transfers.
    """
    compatible = compatible_models(space, case, bounds)
    if compatible:
        return compatible, "compatible"
    return optimal_models(space, case, bounds).argmin_models, "optimal"


def _phi1_representations(model: MorphModel, problem: Word) -> list[Representation]:
    reps = set()
    for binding in _match_pattern(model.phi1, problem, 0, {}):
        reps.add(tuple(binding.get(i, "") for i in range(1, model.slot_count + 1)))
    return sorted(reps)


class _Ranking:
    """Keeps, per completion, the cheapest producing transfer."""

    def __init__(self, space: MorphologySpace, problem: Word, top_k: int):
        self.space = space
        self.problem = problem
        self.top_k = top_k
        self.best: dict[Word, tuple] = {}

    def consider(self, source: MorphModel, carried: MorphModel) -> None:
        space = self.space
        reps = _phi1_representations(carried, self.problem)
        if not reps:
            return
        transfer_bits = space.transfer_cost(carried, source)
        for rep in reps:
            y = apply(carried, rep)[1]
            case_bits, witness = space.case_cost_with_witness(carried, (self.problem, y))
            total = transfer_bits + case_bits
            key = (total, space.format_model(carried), space.format_model(source))
            if y not in self.best or key < self.best[y][0]:
                self.best[y] = (key, y, carried, witness, transfer_bits, case_bits, source)

    def cutoff(self) -> int | None:
        """Total bits a new entry must not exceed to change the top k."""
        if len(self.best) < self.top_k:
            return None
        return sorted(e[0][0] for e in self.best.values())[self.top_k - 1]

    def ranked(self) -> list[Solution]:
        ordered = sorted(self.best.values(), key=lambda e: (e[0][0], e[1], e[0]))
        return [
            Solution(
                y=y,
                model=carried,
                representation=witness,
                total_bits=key[0],
                transfer_bits=transfer_bits,
                case_bits=case_bits,
                source_model=source,
                rank=i + 1,
            )
            for i, (key, y, carried, witness, transfer_bits, case_bits, source)
            in enumerate(ordered[: self.top_k])
        ]


def solve_with_sources(
    space: MorphologySpace,
    sources,
    problem: Word,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    top_k: int = 3,
    fresh_pool=(),
) -> list[Solution]:
    """Rank completions of `problem` reachable from the given source models."""
    ranking = _Ranking(space, problem, top_k)
    source_set = set(sources)
    for ms in sources:
        ranking.consider(ms, ms)
    if sources and fresh_pool:
        first = sources[0]
        # one rep value per slot is unavoidable, each at least an end token
        floor = 1 + space.alphabet.symbol_cost
        for mt in sorted(fresh_pool, key=space.model_cost):
            if mt in source_set:
                continue
            cutoff = ranking.cutoff()
            if cutoff is not None and 1 + space.model_cost(mt) + floor > cutoff:
                break
            ranking.consider(first, mt)
    return ranking.ranked()


def solve(
    a: Word,
    b: Word,
    c: Word,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    top_k: int = 3,
    alphabet: Alphabet = DEFAULT_ALPHABET,
    space: MorphologySpace | None = None,
) -> list[Solution]:
    """Top completions of a : b :: c : ?, ranked by total transfer bits.

    Raises EmptySolutionError when no carried model's first pattern matches
    the target problem at all.
    """
    if top_k < 1:
        raise ValueError("top_k must be >= 1")
    space = space or MorphologySpace(alphabet)
    for word in (a, b, c):
        space.alphabet.validate_word(word)
    sources, _ = source_pool(space, (a, b), bounds)
    fresh_pool = space.enumerate_candidates((a, b), bounds)
    solutions = solve_with_sources(space, sources, c, bounds, top_k, fresh_pool)
    if not solutions:
        raise EmptySolutionError(
            f"no transferred model generates any completion for {c!r}"
        )
    return solutions


def score_candidate(
    a: Word,
    b: Word,
    c: Word,
    d: Word,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    alphabet: Alphabet = DEFAULT_ALPHABET,
    space: MorphologySpace | None = None,
) -> int:
    """Minimal total bits over transferred models generating exactly (c, d);
    UNREACHABLE_BITS when no carried model produces d within bounds."""
    space = space or MorphologySpace(alphabet)
    for word in (a, b, c, d):
        space.alphabet.validate_word(word)
    sources, _ = source_pool(space, (a, b), bounds)
    fresh_pool = space.enumerate_candidates((a, b), bounds)
    best = UNREACHABLE_BITS

    def offer(ms: MorphModel, mt: MorphModel) -> None:
        nonlocal best
        case_bits, witness = space.case_cost_with_witness(mt, (c, d))
        if witness is None:
            return  # the model cannot generate (c, d), only hard-code it
        best = min(best, space.transfer_cost(mt, ms) + case_bits)

    source_set = set(sources)
    for ms in sources:
        offer(ms, ms)
    if sources:
        for mt in sorted(fresh_pool, key=space.model_cost):
            if mt in source_set:
                continue
            if 2 + space.model_cost(mt) > best:
                break
            offer(sources[0], mt)
    return best
