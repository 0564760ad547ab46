"""Model-space interface and its two implementations.

Reusability and transferability are defined once, over an abstract space
exposing candidate enumeration and three bit costs: a model on its own, a
case given a model, and a target model given a source model, plus the
model-free cost of a case used as the compatibility baseline. The
morphology space computes these from the reference codec; the synthetic
space reads them from tables, which is how worked counter-examples and
property suites are driven.

Implementations are immutable after construction; concurrent reads are
safe. Internal memo caches only ever add entries for already-determined
pure results.
"""

from __future__ import annotations

import json
from abc import ABC, abstractmethod
from typing import Any, Hashable, Mapping, Sequence

from . import morphology
from .coding import Alphabet, BitLength, DEFAULT_ALPHABET, null_case_cost, word_cost
from .errors import SchemaError
from .morphology import MorphModel, SearchBounds

Model = Hashable
CaseLike = Any


class ModelSpace(ABC):
    """Provider of model enumeration and the three description lengths."""

    @abstractmethod
    def enumerate_candidates(self, case: CaseLike, bounds: SearchBounds) -> tuple:
        """Deterministic tuple of models considered for `case`."""

    @abstractmethod
    def model_cost(self, model: Model) -> BitLength:
        ...

    @abstractmethod
    def case_cost_given_model(self, model: Model, case: CaseLike) -> BitLength:
        ...

    @abstractmethod
    def transfer_cost(self, target_model: Model, source_model: Model) -> BitLength:
        ...

    @abstractmethod
    def null_case_cost(self, case: CaseLike) -> BitLength:
        """Model-free cost of the case, the compatibility baseline."""

    @abstractmethod
    def format_model(self, model: Model) -> str:
        """Stable printable form, used for reports and deterministic order."""

    def sort_key(self, model: Model):
        return (self.model_cost(model), self.format_model(model))


class MorphologySpace(ModelSpace):
    """Concatenation-pattern models over a fixed alphabet."""

    def __init__(self, alphabet: Alphabet = DEFAULT_ALPHABET):
        self.alphabet = alphabet
        self._candidates: dict = {}
        self._case_costs: dict = {}
        self._model_costs: dict = {}

    def enumerate_candidates(self, case, bounds: SearchBounds) -> tuple[MorphModel, ...]:
        key = (tuple(case), bounds)
        if key not in self._candidates:
            models, witnesses = morphology.generate_candidates_with_witnesses(
                tuple(case), bounds, self.alphabet
            )
            # the factorization search already found each model's cheapest
            # representation for this case; record it as the case cost
            base = 1 + self.null_case_cost(case)
            for model, witness in witnesses.items():
                if witness is None:
                    self._case_costs[(model, tuple(case))] = (base, None)
                else:
                    bits = 1 + sum(word_cost(v, self.alphabet) for v in witness)
                    self._case_costs[(model, tuple(case))] = (bits, witness)
            self._candidates[key] = models
        return self._candidates[key]

    def model_cost(self, model: MorphModel) -> BitLength:
        if model not in self._model_costs:
            self._model_costs[model] = morphology.model_cost(model, self.alphabet)
        return self._model_costs[model]

    def case_cost_given_model(self, model: MorphModel, case) -> BitLength:
        return self.case_cost_with_witness(model, case)[0]

    def case_cost_with_witness(self, model: MorphModel, case):
        key = (model, tuple(case))
        if key not in self._case_costs:
            self._case_costs[key] = morphology.case_cost_given_model(
                model, tuple(case), self.alphabet
            )
        return self._case_costs[key]

    def transfer_cost(self, target_model: MorphModel, source_model: MorphModel) -> BitLength:
        return morphology.transfer_cost(target_model, source_model, self.alphabet)

    def null_case_cost(self, case) -> BitLength:
        return null_case_cost(tuple(case), self.alphabet)

    def format_model(self, model: MorphModel) -> str:
        return morphology.format_model(model)


class SyntheticSpace(ModelSpace):
    """Table-driven space over opaque model and case identifiers.

    Candidate enumeration returns all declared models for every case;
    costs are pure lookups. Transfer tables may mention source identifiers
    that are not themselves declared models.
    """

    def __init__(
        self,
        models: Sequence[str],
        k_model: Mapping[str, int],
        k_case_given: Mapping[tuple[str, str], int],
        k_transfer: Mapping[tuple[str, str], int],
        k_null: Mapping[str, int],
    ):
        self.models = tuple(models)
        self._k_model = dict(k_model)
        self._k_case_given = dict(k_case_given)
        self._k_transfer = dict(k_transfer)
        self._k_null = dict(k_null)
        self.cases = tuple(sorted(self._k_null))

    def enumerate_candidates(self, case, bounds=None) -> tuple[str, ...]:
        self.null_case_cost(case)  # validates the case id
        return self.models

    def model_cost(self, model: str) -> BitLength:
        try:
            return self._k_model[model]
        except KeyError:
            raise SchemaError(f"k_model has no entry for {model!r}") from None

    def case_cost_given_model(self, model: str, case) -> BitLength:
        try:
            return self._k_case_given[(model, case)]
        except KeyError:
            raise SchemaError(
                f"k_case_given has no entry for ({model!r}, {case!r})"
            ) from None

    def transfer_cost(self, target_model: str, source_model: str) -> BitLength:
        try:
            return self._k_transfer[(target_model, source_model)]
        except KeyError:
            raise SchemaError(
                f"k_transfer has no entry for ({target_model!r}, {source_model!r})"
            ) from None

    def null_case_cost(self, case) -> BitLength:
        try:
            return self._k_null[case]
        except KeyError:
            raise SchemaError(f"k_null has no entry for {case!r}") from None

    def format_model(self, model: str) -> str:
        return model


def _expect_bits(value, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise SchemaError(f"{where} must be a nonnegative integer, got {value!r}")
    return value


def load_synthetic(document: Mapping | str) -> SyntheticSpace:
    """Build a SyntheticSpace from a JSON document (dict or JSON text).

    Expected shape (see docs/synthetic.md):
      {"models": [...], "k_model": {model: bits},
       "k_case_given": {model: {case: bits}},
       "k_transfer": {model: {source: bits}},
       "k_null": {case: bits}}

    Tables must be total over the declared models, cases and source ids;
    any hole raises SchemaError naming it.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from None
    if not isinstance(document, Mapping):
        raise SchemaError("synthetic-space document must be a JSON object")

    models = document.get("models")
    if not isinstance(models, list) or not models:
        raise SchemaError("'models' must be a nonempty list of model ids")
    if len(set(models)) != len(models):
        raise SchemaError("'models' contains duplicate ids")

    k_null_doc = document.get("k_null")
    if not isinstance(k_null_doc, Mapping) or not k_null_doc:
        raise SchemaError("'k_null' must be a nonempty map of case id to bits")
    cases = sorted(k_null_doc)
    k_null = {c: _expect_bits(k_null_doc[c], f"k_null[{c!r}]") for c in cases}

    k_model_doc = document.get("k_model", {})
    k_model = {}
    for m in models:
        if m not in k_model_doc:
            raise SchemaError(f"k_model is missing an entry for {m!r}")
        k_model[m] = _expect_bits(k_model_doc[m], f"k_model[{m!r}]")

    k_case_doc = document.get("k_case_given", {})
    k_case = {}
    for m in models:
        row = k_case_doc.get(m)
        if not isinstance(row, Mapping):
            raise SchemaError(f"k_case_given is missing a row for {m!r}")
        for c in cases:
            if c not in row:
                raise SchemaError(f"k_case_given is missing ({m!r}, {c!r})")
            k_case[(m, c)] = _expect_bits(row[c], f"k_case_given[{m!r}][{c!r}]")

    k_transfer_doc = document.get("k_transfer", {})
    if not isinstance(k_transfer_doc, Mapping):
        raise SchemaError("'k_transfer' must be a map of model id to row")
    sources = document.get("sources")
    if sources is None:
        sources = sorted({s for row in k_transfer_doc.values() for s in row})
    k_transfer = {}
    for m in models:
        row = k_transfer_doc.get(m, {})
        for s in sources:
            if s not in row:
                raise SchemaError(f"k_transfer is missing ({m!r}, {s!r})")
            k_transfer[(m, s)] = _expect_bits(row[s], f"k_transfer[{m!r}][{s!r}]")

    return SyntheticSpace(models, k_model, k_case, k_transfer, k_null)
