"""Text ingestion: alphabets, whitespace tokenization and file reading."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence, Union

from .exceptions import ValidationError

# Latin letters plus the accented forms needed for French and Spanish
# morphology, in the order the frequency table is laid out.
LATIN_41 = (
    "a", "à", "â", "ä", "b", "c", "ç", "d", "e", "è", "é", "ê", "ë",
    "f", "g", "h", "i", "î", "ï", "j", "k", "l", "m", "n", "o", "ô",
    "p", "q", "r", "s", "t", "u", "ù", "û", "ü", "v", "w", "x", "y",
    "ÿ", "z",
)

PRESETS = {
    "default": LATIN_41,
    "latin-41": LATIN_41,
    "paper-default": LATIN_41,
    "ascii": tuple("abcdefghijklmnopqrstuvwxyz"),
}

_WHITESPACE = re.compile(r"[ \t\r\n]+")


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of characters spanning the n-gram index space."""

    chars: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        chars = tuple(self.chars)
        if not chars:
            raise ValidationError("alphabet is empty")
        seen = set()
        for c in chars:
            if len(c) != 1:
                raise ValidationError(f"alphabet entry {c!r} is not a single character")
            if c in seen:
                raise ValidationError(f"duplicate character {c!r} in alphabet")
            seen.add(c)
        if len(chars) < 2:
            warnings.warn("alphabet has a single character; every profile will be trivial",
                          stacklevel=3)
        object.__setattr__(self, "chars", chars)
        object.__setattr__(self, "_index", {c: i for i, c in enumerate(chars)})

    def __len__(self) -> int:
        return len(self.chars)

    def __iter__(self) -> Iterator[str]:
        return iter(self.chars)

    def __contains__(self, c) -> bool:
        return c in self._index

    def index(self, c: str) -> int:
        """Position of `c`, or -1 if it is not in the alphabet."""
        return self._index.get(c, -1)


def load_alphabet(spec: Union[str, Sequence[str], Alphabet]) -> Alphabet:
    """Build an :class:`Alphabet` from a preset name or a character list.

    A string naming one of :data:`PRESETS` selects that preset; any other
    string is read as the literal characters in order.
    """
    if isinstance(spec, Alphabet):
        return spec
    if spec is None or len(spec) == 0:
        raise ValidationError("alphabet specification is empty")
    if isinstance(spec, str):
        if spec in PRESETS:
            return Alphabet(PRESETS[spec])
        return Alphabet(tuple(spec))
    return Alphabet(tuple(spec))


@dataclass(frozen=True)
class TokenStream:
    tokens: tuple[str, ...]

    @property
    def word_count(self) -> int:
        return len(self.tokens)

    def __iter__(self) -> Iterator[str]:
        return iter(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)

    def __add__(self, other: "TokenStream") -> "TokenStream":
        return TokenStream(self.tokens + tuple(other))


def tokenize(text: str) -> TokenStream:
    """Split on runs of space, tab, CR and LF, lowercasing every token."""
    return TokenStream(tuple(t.lower() for t in _WHITESPACE.split(text) if t))


def as_tokens(obj: Union[str, TokenStream, Iterable[str]]) -> TokenStream:
    if isinstance(obj, TokenStream):
        return obj
    if isinstance(obj, str):
        return tokenize(obj)
    return tokenize(" ".join(obj))


def read_text(path: Union[str, Path]) -> str:
    return Path(path).read_text(encoding="utf-8")


def tokenize_file(path: Union[str, Path]) -> TokenStream:
    return tokenize(read_text(path))
