"""Recursive syntax bootstrapping from a tiny seed lexicon.

Two learners feed each other. The context learner types each unknown word
from its neighbours (``a<prev type> b<next type>``) and records the sentence
as a new pattern. The pattern learner aligns a sentence against the stored
patterns and, when enough positions agree, copies the pattern's slot types
onto the unknown words.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .exceptions import ValidationError

NOUN = "noun"
VERB = "verb"
PRIMITIVES = (NOUN, VERB)

_TERMINAL_PUNCT = ".,!?"


@dataclass(frozen=True)
class LexEntry:
    word: str
    type: str

    def __post_init__(self):
        if not self.word or re.search(r"\s", self.word):
            raise ValidationError(f"invalid word {self.word!r}")
        object.__setattr__(self, "type", self.type.strip())
        if not self.type:
            raise ValidationError(f"empty type for word {self.word!r}")


class Lexicon:
    """Insertion-ordered map from word to type-string."""

    def __init__(self, entries: Iterable[Union[LexEntry, tuple[str, str]]] = ()):
        self._types: dict[str, str] = {}
        for e in entries:
            if not isinstance(e, LexEntry):
                e = LexEntry(*e)
            if e.word in self._types:
                raise ValidationError(f"duplicate word {e.word!r} in lexicon")
            self._types[e.word] = e.type

    def __contains__(self, word) -> bool:
        return word in self._types

    def __len__(self) -> int:
        return len(self._types)

    def __getitem__(self, word: str) -> str:
        return self._types[word]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return list(self._types.items()) == list(other._types.items())

    def __repr__(self) -> str:
        return f"Lexicon({list(self._types.items())!r})"

    def get(self, word: str, default=None) -> Optional[str]:
        return self._types.get(word, default)

    @property
    def entries(self) -> list[LexEntry]:
        return [LexEntry(w, t) for w, t in self._types.items()]

    def items(self):
        return self._types.items()

    def copy(self) -> "Lexicon":
        new = Lexicon()
        new._types = dict(self._types)
        return new

    def define(self, word: str, type_: str) -> None:
        entry = LexEntry(word, type_)
        self._types[entry.word] = entry.type


@dataclass(frozen=True)
class SentencePattern:
    wcount: int
    slots: tuple[str, ...]

    def __post_init__(self):
        slots = tuple(s.strip() for s in self.slots)
        object.__setattr__(self, "slots", slots)
        if self.wcount < 1 or self.wcount != len(slots):
            raise ValidationError(f"pattern wcount {self.wcount} != {len(slots)} slots")
        if not all(slots):
            raise ValidationError("pattern has an empty slot")

    @classmethod
    def from_types(cls, types: Sequence[str]) -> "SentencePattern":
        return cls(len(types), tuple(types))

    def __str__(self) -> str:
        return f"{self.wcount} {'|'.join(self.slots)}"


@dataclass
class PatternCatalog:
    """Learned sentence patterns in learning order. Duplicates are kept."""

    patterns: list[SentencePattern] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __getitem__(self, i) -> SentencePattern:
        return self.patterns[i]

    def append(self, pattern: SentencePattern) -> None:
        self.patterns.append(pattern)

    def copy(self) -> "PatternCatalog":
        return PatternCatalog(list(self.patterns))


def seed_lexicon(seed: Iterable[tuple[str, str]]) -> Lexicon:
    """Initial lexicon; every seed type must be ``noun`` or ``verb``."""
    seed = list(seed)
    for word, type_ in seed:
        if type_ not in PRIMITIVES:
            raise ValidationError(f"seed word {word!r} has non-primitive type {type_!r}")
    return Lexicon(seed)


def normalize_sentence(raw: str) -> list[str]:
    words = [w.rstrip(_TERMINAL_PUNCT) for w in raw.lower().split()]
    words = [w for w in words if w]
    if not words:
        raise ValidationError("empty sentence")
    return words


def _check_sentence(sentence: Sequence[str]) -> list[str]:
    if isinstance(sentence, str):
        return normalize_sentence(sentence)
    words = list(sentence)
    if not words:
        raise ValidationError("empty sentence")
    return words


def _context_type(prev: Optional[str], nxt: Optional[str]) -> str:
    parts = []
    if prev:
        parts.append("a" + prev)
    if nxt:
        parts.append("b" + nxt)
    return " ".join(parts)


def learn_by_context(sentence: Sequence[str], lex: Lexicon,
                     cat: PatternCatalog) -> tuple[Lexicon, PatternCatalog]:
    """Type words from their neighbours and catalogue the sentence pattern.

    Words are visited left to right. A neighbour known before this call
    contributes its type as it stood at the start; a neighbour first typed
    earlier in this same call contributes that fresh type; an untyped
    neighbour contributes no marker. A known composite type is replaced only
    by a candidate of equal or smaller length built from fully typed
    neighbours. Primitive types are never touched.

    Returns new objects; the inputs are not modified.
    """
    words = _check_sentence(sentence)
    start = lex
    lex, cat = lex.copy(), cat.copy()
    last = len(words) - 1

    def neighbour(j):
        w = words[j]
        return start.get(w) if w in start else lex.get(w)

    for i, w in enumerate(words):
        prev = neighbour(i - 1) if i > 0 else None
        nxt = neighbour(i + 1) if i < last else None
        candidate = _context_type(prev, nxt)
        current = lex.get(w)
        if current is None:
            if candidate:
                lex.define(w, candidate)
        elif current not in PRIMITIVES:
            complete = (i == 0 or prev) and (i == last or nxt)
            if complete and candidate and len(candidate) <= len(current):
                lex.define(w, candidate)
    types = [lex.get(w) for w in words]
    if all(types):
        cat.append(SentencePattern.from_types(types))
    return lex, cat


class PatternMatch(NamedTuple):
    """Outcome of aligning a sentence against the catalogue.

    ``index`` is the best pattern's position (None for an empty catalogue),
    ``applied`` whether its score cleared the half-length bar, and
    ``defined`` maps each newly typed word to its type.
    """

    index: Optional[int]
    pattern: Optional[SentencePattern]
    score: int
    scores: tuple[int, ...]
    applied: bool
    defined: dict


def pattern_scores(sentence: Sequence[str], lex: Lexicon, cat: PatternCatalog) -> list[int]:
    scores = []
    for pat in cat:
        score = sum(1 for w, slot in zip(sentence, pat.slots) if lex.get(w) == slot)
        if pat.wcount == len(sentence):
            score += 1
        scores.append(score)
    return scores


def learn_by_pattern(sentence: Sequence[str], lex: Lexicon,
                     cat: PatternCatalog) -> tuple[Lexicon, PatternMatch]:
    """Type unknown words from the best-matching stored pattern.

    Each pattern scores one point per position whose known word has exactly
    the slot's type, plus one if the word counts agree. The highest score
    wins (earliest pattern on ties) and is applied only when it exceeds
    ``len(sentence) // 2``. Known words are never retyped.
    """
    words = _check_sentence(sentence)
    if not len(cat):
        raise ValidationError("pattern catalogue is empty")
    scores = pattern_scores(words, lex, cat)
    best = max(range(len(scores)), key=lambda j: (scores[j], -j))
    pat = cat[best]
    applied = scores[best] > len(words) // 2
    new = lex.copy()
    defined = {}
    if applied:
        for w, slot in zip(words, pat.slots):
            if w not in lex and w not in defined:
                new.define(w, slot)
                defined[w] = slot
    return new, PatternMatch(best, pat, scores[best], tuple(scores), applied, defined)


@dataclass(frozen=True)
class LearnResult:
    lexicon: Lexicon
    catalog: PatternCatalog
    method: str
    match: Optional[PatternMatch] = None


def learn(sentence: Sequence[str], lex: Lexicon, cat: PatternCatalog) -> LearnResult:
    """Try the pattern learner first, fall back to the context learner.

    The pattern learner counts as used only when it actually typed a new
    word; a sentence of known words therefore goes to the context learner,
    which can still generalise composite types and record the pattern.
    """
    words = _check_sentence(sentence)
    match = None
    if len(cat):
        new_lex, match = learn_by_pattern(words, lex, cat)
        if match.applied and match.defined:
            return LearnResult(new_lex, cat.copy(), "pattern", match)
    new_lex, new_cat = learn_by_context(words, lex, cat)
    return LearnResult(new_lex, new_cat, "context", match)


class Unit(NamedTuple):
    label: str
    size: int = 1

    def __str__(self) -> str:
        return f"{self.label}({self.size})" if self.size > 1 else self.label


def collapse_phrases(slots: Sequence[str]) -> list[Unit]:
    """Merge runs of two or more identical primitive types into phrase units."""
    out: list[Unit] = []
    i = 0
    while i < len(slots):
        j = i + 1
        if slots[i] in PRIMITIVES:
            while j < len(slots) and slots[j] == slots[i]:
                j += 1
        if j - i >= 2:
            out.append(Unit(f"{slots[i]}-phrase", j - i))
        else:
            out.append(Unit(slots[i]))
        i = j
    return out


class SyntaxState:
    """A lexicon and pattern catalogue that learn together, sentence by sentence."""

    def __init__(self, lexicon: Optional[Lexicon] = None,
                 catalog: Optional[PatternCatalog] = None):
        self.lexicon = lexicon if lexicon is not None else Lexicon()
        self.catalog = catalog if catalog is not None else PatternCatalog()

    def learn(self, sentence: Union[str, Sequence[str]]) -> LearnResult:
        result = learn(_check_sentence(sentence), self.lexicon, self.catalog)
        self.lexicon, self.catalog = result.lexicon, result.catalog
        return result

    def types_of(self, sentence: Union[str, Sequence[str]]) -> list[Optional[str]]:
        return [self.lexicon.get(w) for w in _check_sentence(sentence)]

    def copy(self) -> "SyntaxState":
        return SyntaxState(self.lexicon.copy(), self.catalog.copy())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SyntaxState):
            return NotImplemented
        return self.lexicon == other.lexicon and self.catalog == other.catalog

    def dumps(self) -> str:
        lines = [f"{w}\t{t}" for w, t in self.lexicon.items()]
        lines.append("")
        lines += [f"{p.wcount}\t{'|'.join(p.slots)}" for p in self.catalog]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "SyntaxState":
        lines = text.split("\n")
        try:
            split = lines.index("")
        except ValueError:
            split = len(lines)
        lex = Lexicon()
        for ln in lines[:split]:
            word, sep, type_ = ln.partition("\t")
            if not sep:
                raise ValidationError(f"bad lexicon line {ln!r}")
            if word in lex:
                raise ValidationError(f"duplicate word {word!r} in state")
            lex.define(word, type_)
        cat = PatternCatalog()
        for ln in lines[split + 1:]:
            if not ln.strip():
                continue
            count, sep, slots = ln.partition("\t")
            if not sep or not count.isdigit():
                raise ValidationError(f"bad pattern line {ln!r}")
            cat.append(SentencePattern(int(count), tuple(slots.split("|"))))
        return cls(lex, cat)

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SyntaxState":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def read_seed_file(path: Union[str, Path]) -> Lexicon:
    """Parse ``word<TAB>noun|verb`` lines into a seed lexicon."""
    pairs = []
    for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValidationError(f"{path}:{n}: expected 'word<TAB>type'")
        pairs.append((parts[0].strip().lower(), parts[1].strip()))
    return seed_lexicon(pairs)
