"""Character n-gram frequency profiles and summed-difference language comparison."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

import numpy as np

from .corpus import Alphabet, TokenStream, as_tokens, load_alphabet
from .exceptions import ValidationError

DEFAULT_THRESHOLD = 55.0
# Below this many words the same/different verdict is unreliable.
LOW_CONFIDENCE_WORDS = 400


@dataclass(frozen=True, eq=False)
class FrequencyProfile:
    """Percentage frequency of every n-gram over an alphabet.

    ``table`` has shape ``(len(alphabet),) * n`` and is indexed by character
    position, so ``table[i, j]`` is the share of bigram ``alphabet[i] + alphabet[j]``.
    ``total`` is the raw number of counted n-grams and ``word_count`` the
    number of tokens the profile was built from.
    """

    alphabet: Alphabet
    n: int
    table: np.ndarray
    total: int
    word_count: int = 0

    def __post_init__(self):
        table = np.array(self.table, dtype=np.float64)
        if table.shape != (len(self.alphabet),) * self.n:
            raise ValidationError(
                f"table shape {table.shape} does not match alphabet of size "
                f"{len(self.alphabet)} and n={self.n}")
        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    def __getitem__(self, ngram: str) -> float:
        if len(ngram) != self.n:
            raise KeyError(ngram)
        idx = tuple(self.alphabet.index(c) for c in ngram)
        if min(idx) < 0:
            raise KeyError(ngram)
        return float(self.table[idx])

    def ngrams(self) -> Iterable[str]:
        """All n-grams in table (row-major) order."""
        for combo in itertools.product(self.alphabet.chars, repeat=self.n):
            yield "".join(combo)

    def same_space(self, other: "FrequencyProfile") -> bool:
        return self.n == other.n and self.alphabet.chars == other.alphabet.chars


def _count_ngrams(tokens: Iterable[str], alphabet: Alphabet, n: int) -> np.ndarray:
    counts = np.zeros((len(alphabet),) * n, dtype=np.int64)
    for word in tokens:
        if len(word) < n:
            continue
        idx = [alphabet.index(c) for c in word]
        for k in range(len(idx) - n + 1):
            window = idx[k:k + n]
            if min(window) >= 0:
                counts[tuple(window)] += 1
    return counts


def build_profile(tokens: Union[TokenStream, str, Iterable[str]],
                  alphabet: Union[Alphabet, str] = "default", n: int = 2) -> FrequencyProfile:
    """Count every in-word window of ``n`` characters and convert to percentages.

    A window containing any character outside the alphabet is skipped; the
    word is not split around it. Tokens shorter than ``n`` contribute nothing.
    """
    if n < 2:
        raise ValidationError(f"n-gram order must be >= 2, got {n}")
    alphabet = load_alphabet(alphabet)
    stream = as_tokens(tokens)
    counts = _count_ngrams(stream, alphabet, n)
    total = int(counts.sum())
    if total:
        table = counts / total * 100.0
    else:
        table = counts.astype(np.float64)
    return FrequencyProfile(alphabet, n, table, total, stream.word_count)


def _check_comparable(p1: FrequencyProfile, p2: FrequencyProfile) -> None:
    if p1.n != p2.n:
        raise ValidationError(f"profiles have different n-gram orders ({p1.n} vs {p2.n})")
    if p1.alphabet.chars != p2.alphabet.chars:
        raise ValidationError("profiles were built over different alphabets")


def compare_profiles(p1: FrequencyProfile, p2: FrequencyProfile) -> float:
    """Sum of absolute cell-wise differences between two profiles."""
    _check_comparable(p1, p2)
    return float(np.abs(p1.table - p2.table).sum())


class Verdict(str, enum.Enum):
    SAME = "Same Language"
    DIFFERENT = "Different Language"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ComparisonResult:
    difference: float
    verdict: Verdict
    threshold_used: float
    low_confidence: bool


def classify(p1: FrequencyProfile, p2: FrequencyProfile,
             threshold: float = DEFAULT_THRESHOLD) -> ComparisonResult:
    """Same language iff the summed difference is strictly below ``threshold``."""
    if not threshold > 0:
        raise ValidationError(f"threshold must be > 0, got {threshold}")
    diff = compare_profiles(p1, p2)
    verdict = Verdict.SAME if diff < threshold else Verdict.DIFFERENT
    low = min(p1.word_count, p2.word_count) < LOW_CONFIDENCE_WORDS
    return ComparisonResult(diff, verdict, float(threshold), low)


def top_ngrams(p: FrequencyProfile, k: int) -> list[tuple[str, float]]:
    """The ``k`` most frequent n-grams, ties in alphabet order."""
    if k < 1:
        raise ValidationError(f"k must be >= 1, got {k}")
    flat = p.table.ravel()
    # stable sort on the negated values keeps row-major (alphabet) order for ties
    order = np.argsort(-flat, kind="stable")[:k]
    shape = p.table.shape
    out = []
    for i in order:
        idx = np.unravel_index(i, shape)
        out.append(("".join(p.alphabet.chars[j] for j in idx), float(flat[i])))
    return out


def format_value(v: float) -> str:
    """Shortest rendering with at most 6 significant digits."""
    s = f"{v:.6g}"
    return "0" if s in ("0", "-0") else s


def profile_to_csv(p: FrequencyProfile) -> str:
    size = len(p.alphabet)
    rows = p.table.reshape(size, -1)
    return "".join("".join(format_value(v) + "," for v in row) + "\n" for row in rows)


def export_profile(p: FrequencyProfile, path: Union[str, Path]) -> Path:
    """Write the profile as comma-terminated values, one row per leading character.

    For ``n > 2`` each row holds the trailing ``n - 1`` dimensions flattened
    in alphabet order.
    """
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(profile_to_csv(p))
    except OSError as e:
        raise OSError(e.errno, f"cannot write profile to {path}: {e.strerror}") from e
    return path


def load_profile_csv(path: Union[str, Path], alphabet: Union[Alphabet, str] = "default",
                     n: int = 2) -> FrequencyProfile:
    """Read a table written by :func:`export_profile`.

    Values round-trip to 6 significant digits; ``total`` and ``word_count``
    are not stored in the file and come back as 0.
    """
    alphabet = load_alphabet(alphabet)
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OSError(e.errno, f"cannot read profile {path}: {e.strerror}") from e
    rows = []
    for line in text.split("\n"):
        if not line:
            continue
        if not line.endswith(","):
            raise ValidationError(f"{path}: row is not comma-terminated")
        rows.append([float(v) for v in line[:-1].split(",")])
    size = len(alphabet)
    arr = np.array(rows, dtype=np.float64)
    if arr.shape != (size, size ** (n - 1)):
        raise ValidationError(f"{path}: table shape {arr.shape} does not fit alphabet/n")
    return FrequencyProfile(alphabet, n, arr.reshape((size,) * n), 0)
