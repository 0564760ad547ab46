"""Concatenation-pattern transformation models over words.

A model is a pair of patterns (phi1, phi2) built from literal strings and
numbered slots. Instantiating both patterns with a representation (one word
per slot, possibly empty) yields a case (x, y). The module provides:

- application and exact inversion (recovering every representation that
  generates a given case),
- the three bit costs used everywhere else: model cost, case cost given a
  model, and model-to-model transfer cost, each backed by an actual bit
  emitter so computed costs equal emitted lengths,
- bounded candidate generation for a case, by factorizing both words into
  shared slots and literal remainders,
- the textual expression syntax used by the CLI and JSON reports.

Model encoding layout (see docs/coding.md): a unary slot count, then each
pattern as a self-delimiting stream mixing two codeword kinds: literal
characters and the end-of-pattern marker at a fixed width chosen so no
codeword starts with 111, and slot references as 111 plus a fixed-width
slot field. Slot references being cheaper than spelled characters is what
makes genuinely shared content beat letter-by-letter re-spelling, so the
minimal model for a pair is a real transformation whenever one exists.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coding import (
    Alphabet,
    BitLength,
    Case,
    DEFAULT_ALPHABET,
    Word,
    encode_fixed,
    encode_unary,
    encode_word,
    decode_unary,
    null_case_cost,
    unary_cost,
    word_cost,
)
from .errors import (
    AlphabetError,
    ArityError,
    CanonicalFormError,
    DomainError,
    ModelSyntaxError,
    ResourceError,
)


@dataclass(frozen=True)
class Lit:
    """A literal token: a fixed nonempty word fragment."""

    word: Word

    def __post_init__(self):
        if not self.word:
            raise DomainError("literal tokens must be nonempty")


@dataclass(frozen=True)
class Slot:
    """A slot token: a 1-based reference into the representation vector."""

    index: int

    def __post_init__(self):
        if self.index < 1:
            raise DomainError("slot indices are 1-based")


PatternToken = Lit | Slot
Pattern = tuple[PatternToken, ...]
Representation = tuple[Word, ...]


@dataclass(frozen=True)
class MorphModel:
    """A transformation (phi1, phi2) over `slot_count` representation slots.

    Construction enforces structural validity (slot_count >= 1, slot indices
    within range). Canonical form, which additionally requires merged
    adjacent literals and no unused slots, is checked by `is_canonical` and
    required only where costs are computed.
    """

    slot_count: int
    phi1: Pattern
    phi2: Pattern

    def __post_init__(self):
        if self.slot_count < 1:
            raise DomainError("slot count must be >= 1")
        for token in self.phi1 + self.phi2:
            if isinstance(token, Slot) and token.index > self.slot_count:
                raise DomainError(
                    f"slot ${token.index} exceeds slot count {self.slot_count}"
                )

    @property
    def slots_used(self) -> frozenset[int]:
        return frozenset(
            t.index for t in self.phi1 + self.phi2 if isinstance(t, Slot)
        )


def _pattern_canonical(pattern: Pattern) -> bool:
    return not any(
        isinstance(a, Lit) and isinstance(b, Lit)
        for a, b in zip(pattern, pattern[1:])
    )


def is_canonical(model: MorphModel) -> bool:
    """Adjacent literals merged and every slot in 1..slot_count used."""
    if not (_pattern_canonical(model.phi1) and _pattern_canonical(model.phi2)):
        return False
    return model.slots_used == frozenset(range(1, model.slot_count + 1))


IDENTITY_MODEL = MorphModel(1, (Slot(1),), (Slot(1),))


# --- application and inversion -------------------------------------------


def _instantiate(pattern: Pattern, rep: Representation) -> Word:
    parts = []
    for token in pattern:
        parts.append(token.word if isinstance(token, Lit) else rep[token.index - 1])
    return "".join(parts)


def apply(model: MorphModel, rep: Representation) -> Case:
    """Instantiate both patterns with `rep` by string concatenation."""
    if len(rep) != model.slot_count:
        raise ArityError(
            f"representation has {len(rep)} values, model expects {model.slot_count}"
        )
    return _instantiate(model.phi1, rep), _instantiate(model.phi2, rep)


def _match_pattern(tokens: Pattern, text: Word, start: int, binding: dict):
    """Yield slot bindings extending `binding` so tokens consume text[start:]."""
    if not tokens:
        if start == len(text):
            yield binding
        return
    token, rest = tokens[0], tokens[1:]
    if isinstance(token, Lit):
        if text.startswith(token.word, start):
            yield from _match_pattern(rest, text, start + len(token.word), binding)
        return
    bound = binding.get(token.index)
    if bound is not None:
        if text.startswith(bound, start):
            yield from _match_pattern(rest, text, start + len(bound), binding)
        return
    for end in range(start, len(text) + 1):
        extended = dict(binding)
        extended[token.index] = text[start:end]
        yield from _match_pattern(rest, text, end, extended)


def invert(model: MorphModel, case: Case) -> tuple[Representation, ...]:
    """All representations r with apply(model, r) == case, sorted.

    Exhaustive: slot values are substrings of the case words, so the search
    is finite. Slots that occur in neither pattern (non-canonical models)
    are pinned to the empty word rather than enumerated.
    """
    x, y = case
    found = set()
    for b1 in _match_pattern(model.phi1, x, 0, {}):
        for b2 in _match_pattern(model.phi2, y, 0, b1):
            found.add(tuple(b2.get(i, "") for i in range(1, model.slot_count + 1)))
    return tuple(sorted(found))


# --- bit costs and emission ----------------------------------------------


SLOT_MARKER = "111"


def pattern_symbol_cost(alphabet: Alphabet, slot_count: int = 1) -> int:
    """Width of one literal-character or end-of-pattern codeword.

    The smallest width w >= 3 fitting the letters plus the end marker below
    the reserved 111 prefix, i.e. alphabet size + 1 <= 2^w - 2^(w-3).
    """
    width = 3
    while alphabet.size + 1 > (1 << width) - (1 << (width - 3)):
        width += 1
    return width


def slot_ref_cost(slot_count: int) -> int:
    """Bits of one slot reference: the 111 marker plus a slot field."""
    return len(SLOT_MARKER) + (slot_count - 1).bit_length()


def _pattern_stream_cost(pattern: Pattern, width: int, slot_bits: int) -> int:
    """Bits of the pattern stream including its end marker."""
    total = width  # end-of-pattern marker
    for token in pattern:
        total += len(token.word) * width if isinstance(token, Lit) else slot_bits
    return total


def _require_canonical(model: MorphModel) -> None:
    if not is_canonical(model):
        raise CanonicalFormError(f"model is not canonical: {format_model(model)}")


def _validate_literals(model: MorphModel, alphabet: Alphabet) -> None:
    for token in model.phi1 + model.phi2:
        if isinstance(token, Lit):
            alphabet.validate_word(token.word)


def model_cost(model: MorphModel, alphabet: Alphabet = DEFAULT_ALPHABET) -> BitLength:
    """Bits of the model's binary code; equals len(encode_model(model))."""
    _require_canonical(model)
    _validate_literals(model, alphabet)
    width = pattern_symbol_cost(alphabet)
    slot_bits = slot_ref_cost(model.slot_count)
    return unary_cost(model.slot_count) + _pattern_stream_cost(
        model.phi1, width, slot_bits
    ) + _pattern_stream_cost(model.phi2, width, slot_bits)


def encode_pattern(pattern: Pattern, alphabet: Alphabet, slot_count: int) -> str:
    width = pattern_symbol_cost(alphabet)
    field = (slot_count - 1).bit_length()
    out = []
    for token in pattern:
        if isinstance(token, Lit):
            out.extend(
                encode_fixed(alphabet.index(c, token.word), width) for c in token.word
            )
        else:
            out.append(SLOT_MARKER + (encode_fixed(token.index - 1, field) if field else ""))
    out.append(encode_fixed(alphabet.size, width))  # end-of-pattern marker
    return "".join(out)


def encode_model(model: MorphModel, alphabet: Alphabet = DEFAULT_ALPHABET) -> str:
    _require_canonical(model)
    _validate_literals(model, alphabet)
    return (
        encode_unary(model.slot_count)
        + encode_pattern(model.phi1, alphabet, model.slot_count)
        + encode_pattern(model.phi2, alphabet, model.slot_count)
    )


def decode_model(bits: str, alphabet: Alphabet = DEFAULT_ALPHABET, start: int = 0) -> tuple[MorphModel, int]:
    """Read one model code; returns (model, next position)."""
    slot_count, pos = decode_unary(bits, start)
    width = pattern_symbol_cost(alphabet)
    field = (slot_count - 1).bit_length()
    marker = len(SLOT_MARKER)

    def read_pattern(pos: int) -> tuple[Pattern, int]:
        tokens: list[PatternToken] = []
        chars: list[str] = []
        while True:
            if bits[pos : pos + marker] == SLOT_MARKER:
                pos += marker
                index = (int(bits[pos : pos + field], 2) if field else 0) + 1
                pos += field
                if chars:
                    tokens.append(Lit("".join(chars)))
                    chars = []
                tokens.append(Slot(index))
                continue
            code = int(bits[pos : pos + width], 2)
            pos += width
            if code < alphabet.size:
                chars.append(alphabet.symbols[code])
                continue
            if code != alphabet.size:
                raise DomainError(f"codeword {code} is not assigned")
            if chars:
                tokens.append(Lit("".join(chars)))
            return tuple(tokens), pos

    phi1, pos = read_pattern(pos)
    phi2, pos = read_pattern(pos)
    return MorphModel(slot_count, phi1, phi2), pos


def case_cost_given_model(
    model: MorphModel, case: Case, alphabet: Alphabet = DEFAULT_ALPHABET
) -> tuple[BitLength, Representation | None]:
    """Cost of the case knowing the model, with the witness representation.

    One flag bit selects the channel: a representation generating the case
    through the model, or both words hard-coded when no representation
    exists. Returns (bits, witness); witness is None on the hard-coded
    channel. Among minimal representations, ties break lexicographically.
    """
    x, y = case
    alphabet.validate_word(x)
    alphabet.validate_word(y)
    reps = invert(model, case)
    if not reps:
        return 1 + null_case_cost(case, alphabet), None
    best = min(reps, key=lambda r: (sum(word_cost(v, alphabet) for v in r), r))
    return 1 + sum(word_cost(v, alphabet) for v in best), best


def encode_case_given_model(
    model: MorphModel, case: Case, alphabet: Alphabet = DEFAULT_ALPHABET
) -> str:
    _, witness = case_cost_given_model(model, case, alphabet)
    if witness is None:
        return "1" + encode_word(case[0], alphabet) + encode_word(case[1], alphabet)
    return "0" + "".join(encode_word(v, alphabet) for v in witness)


def transfer_cost(
    target_model: MorphModel,
    source_model: MorphModel,
    alphabet: Alphabet = DEFAULT_ALPHABET,
) -> BitLength:
    """One bit to reuse the source model unchanged, else one bit plus a
    full redefinition of the target model."""
    if target_model == source_model:
        return 1
    return 1 + model_cost(target_model, alphabet)


def encode_transfer(
    target_model: MorphModel,
    source_model: MorphModel,
    alphabet: Alphabet = DEFAULT_ALPHABET,
) -> str:
    if target_model == source_model:
        return "0"
    return "1" + encode_model(target_model, alphabet)


# --- candidate generation -------------------------------------------------


@dataclass(frozen=True)
class SearchBounds:
    """Limits on the model shapes considered during candidate generation.

    max_slot_tokens caps slot occurrences per pattern; without it the set
    of in-bounds models admitting a representation would be infinite, since
    slots may take empty values. max_literal_len of None means literals may
    span a whole word. max_candidates guards runaway enumeration.
    """

    max_slots: int = 2
    max_literals: int = 3
    max_slot_tokens: int = 2
    max_literal_len: int | None = None
    max_candidates: int = 200_000

    def __post_init__(self):
        if self.max_slots < 1 or self.max_slot_tokens < 1:
            raise DomainError("slot bounds must be >= 1")
        if self.max_literals < 0:
            raise DomainError("max_literals must be >= 0")
        if self.max_literal_len is not None and self.max_literal_len < 1:
            raise DomainError("max_literal_len must be >= 1 or None")
        if self.max_candidates < 1:
            raise DomainError("max_candidates must be >= 1")


DEFAULT_BOUNDS = SearchBounds()


def _segmentations(
    text: Word,
    pos: int,
    bounds: SearchBounds,
    binding: dict,
    next_slot: int,
    lits: int,
    slot_tokens: int,
    stack: list,
):
    """Yield (tokens, binding items, slot count) covering text[pos:] exactly.

    Slots may bind the empty word; existing slots must re-match their bound
    value. Literal tokens are nonempty and never adjacent, keeping every
    produced pattern canonical by construction. The yielded binding tuple
    must be consumed before the next iteration step (the dict is reused).
    """
    if pos == len(text):
        yield tuple(stack), binding, next_slot
        # empty-valued slots may still follow; the slot branches below run
    last_was_lit = bool(stack) and type(stack[-1]) is Lit
    if lits < bounds.max_literals and not last_was_lit and pos < len(text):
        max_end = len(text)
        if bounds.max_literal_len is not None:
            max_end = min(max_end, pos + bounds.max_literal_len)
        for end in range(pos + 1, max_end + 1):
            stack.append(Lit(text[pos:end]))
            yield from _segmentations(
                text, end, bounds, binding, next_slot, lits + 1, slot_tokens, stack
            )
            stack.pop()
    if slot_tokens < bounds.max_slot_tokens:
        for index in range(1, next_slot):
            value = binding[index]
            if text.startswith(value, pos):
                stack.append(Slot(index))
                yield from _segmentations(
                    text, pos + len(value), bounds, binding, next_slot,
                    lits, slot_tokens + 1, stack,
                )
                stack.pop()
        if next_slot <= bounds.max_slots:
            stack.append(Slot(next_slot))
            for end in range(pos, len(text) + 1):
                binding[next_slot] = text[pos:end]
                yield from _segmentations(
                    text, end, bounds, binding, next_slot + 1,
                    lits, slot_tokens + 1, stack,
                )
            del binding[next_slot]
            stack.pop()


def _permute_pattern(pattern: Pattern, mapping) -> Pattern:
    return tuple(
        Slot(mapping[t.index - 1]) if type(t) is Slot else t for t in pattern
    )


def generate_candidates_with_witnesses(
    case: Case,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    alphabet: Alphabet = DEFAULT_ALPHABET,
) -> tuple[tuple[MorphModel, ...], dict]:
    """As generate_candidates, also returning each model's cheapest witness.

    The factorization search visits every (model, representation) pair that
    generates the case, so the per-model minimum over visited bindings is
    exactly the minimum over all representations. The identity model is
    always included; its witness entry is None when it cannot generate the
    case (the hard-coded channel applies then).
    """
    x, y = case
    alphabet.validate_word(x)
    alphabet.validate_word(y)
    sc = alphabet.symbol_cost
    witnesses: dict[MorphModel, tuple | None] = {
        IDENTITY_MODEL: (x,) if x == y else None
    }

    def offer(model: MorphModel, rep: tuple) -> None:
        known = witnesses.get(model)
        if known is None or (sum(map(len, rep)), rep) < (sum(map(len, known)), known):
            witnesses[model] = rep

    for phi1, binding, next_slot in _segmentations(x, 0, bounds, {}, 1, 0, 0, []):
        phi1 = tuple(phi1)
        for phi2, binding2, next_slot2 in _segmentations(
            y, 0, bounds, binding, next_slot, 0, 0, []
        ):
            slot_count = next_slot2 - 1
            if slot_count < 1 or slot_count > bounds.max_slots:
                continue
            values = tuple(binding2[i] for i in range(1, slot_count + 1))
            if slot_count == 1:
                offer(MorphModel(1, phi1, tuple(phi2)), values)
            else:
                phi2 = tuple(phi2)
                for perm in itertools.permutations(range(1, slot_count + 1)):
                    model = MorphModel(
                        slot_count,
                        _permute_pattern(phi1, perm),
                        _permute_pattern(phi2, perm),
                    )
                    rep = [""] * slot_count
                    for i, target in enumerate(perm):
                        rep[target - 1] = values[i]
                    offer(model, tuple(rep))
            if len(witnesses) > bounds.max_candidates:
                raise ResourceError(
                    f"candidate enumeration for {case!r} exceeded "
                    f"{bounds.max_candidates} models",
                    count=len(witnesses),
                    limit=bounds.max_candidates,
                )
    models = tuple(sorted(witnesses, key=_structural_key))
    return models, witnesses


def _token_key(token: PatternToken):
    return (0, token.index, "") if type(token) is Slot else (1, 0, token.word)


def _structural_key(model: MorphModel):
    return (
        model.slot_count,
        tuple(_token_key(t) for t in model.phi1),
        tuple(_token_key(t) for t in model.phi2),
    )


def generate_candidates(
    case: Case,
    bounds: SearchBounds = DEFAULT_BOUNDS,
    alphabet: Alphabet = DEFAULT_ALPHABET,
) -> tuple[MorphModel, ...]:
    """Every canonical in-bounds model admitting a representation for `case`,
    plus the identity model as the always-available fallback.

    Built by jointly factorizing both case words into shared-substring slots
    and literal remainders; all slot-label permutations are emitted so the
    result is closed under relabeling. Deterministic: sorted by structure
    (slot count, then tokens).
    """
    return generate_candidates_with_witnesses(case, bounds, alphabet)[0]


# --- textual model expressions --------------------------------------------


def format_pattern(pattern: Pattern) -> str:
    if not pattern:
        return '""'
    parts = [
        f'"{t.word}"' if isinstance(t, Lit) else f"${t.index}" for t in pattern
    ]
    return " . ".join(parts)


def format_model(model: MorphModel) -> str:
    return f"phi1 = {format_pattern(model.phi1)} ; phi2 = {format_pattern(model.phi2)}"


def _parse_pattern(text: str, side: str) -> Pattern:
    tokens: list[PatternToken] = []
    pos = 0
    expecting_term = True
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "." and not expecting_term:
            expecting_term = True
            pos += 1
            continue
        if not expecting_term:
            raise ModelSyntaxError(f"{side}: expected '.' before {text[pos:]!r}")
        if ch == "$":
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            if end == pos + 1:
                raise ModelSyntaxError(f"{side}: '$' must be followed by a slot number")
            tokens.append(Slot(int(text[pos + 1 : end])))
            pos = end
        elif ch == '"':
            end = text.find('"', pos + 1)
            if end < 0:
                raise ModelSyntaxError(f"{side}: unterminated literal")
            word = text[pos + 1 : end]
            if word:
                tokens.append(Lit(word))
            elif tokens or text[end + 1 :].strip():
                raise ModelSyntaxError(f'{side}: "" denotes the empty pattern only')
            pos = end + 1
        else:
            raise ModelSyntaxError(f"{side}: unexpected character {ch!r}")
        expecting_term = False
    if expecting_term and tokens:
        raise ModelSyntaxError(f"{side}: trailing '.'")
    return tuple(tokens)


def parse_model(text: str) -> MorphModel:
    """Parse `phi1 = EXPR ; phi2 = EXPR` where EXPR concatenates $k slots and
    quoted literals with '.'; `""` denotes the empty pattern. The slot count
    is the highest slot index (1 when the model uses no slots)."""
    halves = [h for h in text.replace("\n", ";").split(";") if h.strip()]
    if len(halves) != 2:
        raise ModelSyntaxError("expected exactly two pattern definitions")
    patterns: dict[str, Pattern] = {}
    for half in halves:
        name, eq, expr = half.partition("=")
        name = name.strip().lower()
        if not eq or name not in ("phi1", "phi2"):
            raise ModelSyntaxError(f"expected 'phi1 = ...' or 'phi2 = ...', got {half!r}")
        if name in patterns:
            raise ModelSyntaxError(f"duplicate definition of {name}")
        patterns[name] = _parse_pattern(expr.strip(), name)
    if set(patterns) != {"phi1", "phi2"}:
        raise ModelSyntaxError("both phi1 and phi2 must be defined")
    indices = [
        t.index for t in patterns["phi1"] + patterns["phi2"] if isinstance(t, Slot)
    ]
    slot_count = max(indices) if indices else 1
    return MorphModel(slot_count, patterns["phi1"], patterns["phi2"])
