"""Bigram language profiling and recursive syntax/semantics bootstrapping."""

from .corpus import Alphabet, TokenStream, load_alphabet, tokenize
from .exceptions import ValidationError
from .morphology import (ComparisonResult, FrequencyProfile, Verdict, build_profile,
                         classify, compare_profiles, export_profile, top_ngrams)
from .semantics import (AnnotatedSentence, AssociationWeb, categorize, ingest,
                        noun_similarity)
from .syntax import (Lexicon, PatternCatalog, SentencePattern, SyntaxState,
                     collapse_phrases, learn, learn_by_context, learn_by_pattern,
                     normalize_sentence, seed_lexicon)

__version__ = "0.1.0"
