"""scikit-learn compatible wrappers around the profile, syntax and web learners."""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import morphology, semantics, syntax
from .corpus import load_alphabet, tokenize
from .validation import (check_consistent_length, check_order, check_positive,
                         check_texts, check_unit_interval)


class NgramProfileVectorizer(TransformerMixin, BaseEstimator):
    """Turn each text into its flattened n-gram percentage profile.

    Parameters
    ----------
    alphabet : str or sequence of str, default="default"
        Preset name or literal characters.
    n : int, default=2
        N-gram order.

    The output has one column per n-gram in alphabet order, so the L1
    distance between two rows equals :func:`morphology.compare_profiles`
    on the corresponding profiles.
    """

    def __init__(self, alphabet="default", n=2):
        self.alphabet = alphabet
        self.n = n

    def fit(self, X=None, y=None):
        check_order(self.n)
        self.alphabet_ = load_alphabet(self.alphabet)
        self.n_features_out_ = len(self.alphabet_) ** self.n
        return self

    def profiles(self, X) -> list:
        check_is_fitted(self, "alphabet_")
        return [morphology.build_profile(tokenize(t), self.alphabet_, self.n)
                for t in check_texts(X)]

    def transform(self, X):
        profs = self.profiles(X)
        out = np.zeros((len(profs), self.n_features_out_))
        for i, p in enumerate(profs):
            out[i] = p.table.ravel()
        return out

    def get_feature_names_out(self, input_features=None):
        check_is_fitted(self, "alphabet_")
        empty = morphology.FrequencyProfile(
            self.alphabet_, self.n, np.zeros((len(self.alphabet_),) * self.n), 0)
        return np.array(list(empty.ngrams()), dtype=object)


class ProfileDistanceClassifier(ClassifierMixin, BaseEstimator):
    """Nearest-reference language classifier over summed profile differences.

    ``fit`` pools all texts sharing a label into one reference profile.
    ``predict`` returns the label of the closest reference when that
    distance is strictly below ``threshold``, else ``unknown_label``.
    """

    def __init__(self, alphabet="default", n=2, threshold=morphology.DEFAULT_THRESHOLD,
                 unknown_label="unknown"):
        self.alphabet = alphabet
        self.n = n
        self.threshold = threshold
        self.unknown_label = unknown_label

    def fit(self, X, y):
        X = check_texts(X)
        y = list(y)
        check_consistent_length(X, y)
        check_order(self.n)
        check_positive("threshold", self.threshold)
        self.alphabet_ = load_alphabet(self.alphabet)
        self.classes_ = np.array(sorted(set(y), key=str), dtype=object)
        self.references_ = {}
        for label in self.classes_:
            tokens = []
            for text, lab in zip(X, y):
                if lab == label:
                    tokens.extend(tokenize(text))
            self.references_[label] = morphology.build_profile(tokens, self.alphabet_, self.n)
        return self

    def distances(self, X) -> np.ndarray:
        """Matrix of summed differences, one column per class in ``classes_``."""
        check_is_fitted(self, "references_")
        out = []
        for text in check_texts(X):
            p = morphology.build_profile(tokenize(text), self.alphabet_, self.n)
            out.append([morphology.compare_profiles(p, self.references_[c])
                        for c in self.classes_])
        return np.array(out, dtype=np.float64).reshape(-1, len(self.classes_))

    def decision_function(self, X):
        return -self.distances(X)

    def predict(self, X):
        d = self.distances(X)
        best = d.argmin(axis=1)
        labels = self.classes_[best].copy()
        labels[d[np.arange(len(d)), best] >= self.threshold] = self.unknown_label
        return labels


class RecursiveSyntaxLearner(TransformerMixin, BaseEstimator):
    """Bootstrap word types and sentence patterns from a seed lexicon.

    ``fit`` restarts from ``seed`` and learns the sentences in order;
    ``partial_fit`` continues from the current state. ``transform`` maps each
    sentence to its per-word types under the learned lexicon (``None`` for
    unknown words) without learning anything.
    """

    def __init__(self, seed=()):
        self.seed = seed

    def _reset(self):
        self.state_ = syntax.SyntaxState(syntax.seed_lexicon(self.seed))
        self.methods_ = []

    def fit(self, X, y=None):
        self._reset()
        return self.partial_fit(X)

    def partial_fit(self, X, y=None):
        if not hasattr(self, "state_"):
            self._reset()
        for sentence in check_texts(X):
            self.methods_.append(self.state_.learn(sentence).method)
        return self

    @property
    def lexicon_(self) -> syntax.Lexicon:
        check_is_fitted(self, "state_")
        return self.state_.lexicon

    @property
    def catalog_(self) -> syntax.PatternCatalog:
        check_is_fitted(self, "state_")
        return self.state_.catalog

    def transform(self, X) -> list[list[Optional[str]]]:
        check_is_fitted(self, "state_")
        return [self.state_.types_of(s) for s in check_texts(X)]


class NounCategorizer(BaseEstimator):
    """Group nouns by shared attributes in an association web.

    ``X`` is a sequence of :class:`semantics.AnnotatedSentence` or of their
    ``subject|verb|object|adj@role`` line form.
    """

    def __init__(self, threshold=semantics.DEFAULT_SIMILARITY):
        self.threshold = threshold

    def fit(self, X, y=None):
        check_unit_interval("threshold", self.threshold)
        sentences = [s if isinstance(s, semantics.AnnotatedSentence)
                     else semantics.AnnotatedSentence.parse(s) for s in X]
        self.web_ = semantics.build_web(sentences)
        self.groups_ = semantics.categorize(self.web_, self.threshold)
        self.labels_ = {noun: i for i, g in enumerate(self.groups_) for noun in g}
        return self

    def predict(self, nouns):
        """Group index of each noun, -1 for nouns never seen."""
        check_is_fitted(self, "labels_")
        return np.array([self.labels_.get(n, -1) for n in nouns])

    def similarity(self, n1: str, n2: str) -> float:
        check_is_fitted(self, "web_")
        return semantics.noun_similarity(n1, n2, self.web_)
