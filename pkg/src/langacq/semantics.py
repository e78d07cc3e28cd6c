"""Associative noun/verb web built from role-annotated sentences.

A noun's attributes are the adjectives applied to it and the verbs it
receives as an object. Two nouns are similar to the degree their attribute
sets overlap (Jaccard); nouns are grouped by single-linkage over that
similarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

import networkx as nx

from .exceptions import ValidationError
from .syntax import NOUN, PRIMITIVES, VERB, collapse_phrases

SUBJECT = "subject"
OBJECT = "object"
DEFAULT_SIMILARITY = 0.5


@dataclass(frozen=True)
class AnnotatedSentence:
    subject: str
    verb: str
    object: Optional[str] = None
    adjectives: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if not self.subject or not self.verb:
            raise ValidationError("subject and verb are required")
        if self.object == "":
            object.__setattr__(self, "object", None)
        adjs = tuple((a, role) for a, role in self.adjectives)
        for adj, role in adjs:
            if not adj:
                raise ValidationError("empty adjective")
            if role not in (SUBJECT, OBJECT):
                raise ValidationError(f"adjective {adj!r} attaches to unknown role {role!r}")
            if role == OBJECT and self.object is None:
                raise ValidationError(f"adjective {adj!r} attaches to a missing object")
        object.__setattr__(self, "adjectives", adjs)

    @classmethod
    def parse(cls, line: str) -> "AnnotatedSentence":
        """Parse ``subject|verb|object?|adj@subject,adj@object,...``."""
        fields = [f.strip() for f in line.strip().split("|")]
        if len(fields) < 2 or len(fields) > 4:
            raise ValidationError(f"expected 2-4 '|'-separated fields: {line!r}")
        fields += [""] * (4 - len(fields))
        subject, verb, obj, adj_field = fields
        adjs = []
        for item in filter(None, (a.strip() for a in adj_field.split(","))):
            adj, sep, role = item.partition("@")
            if not sep:
                raise ValidationError(f"adjective {item!r} lacks an @subject/@object role")
            adjs.append((adj.strip().lower(), role.strip().lower()))
        return cls(subject.lower(), verb.lower(), obj.lower() or None, tuple(adjs))

    def format(self) -> str:
        adjs = ",".join(f"{a}@{r}" for a, r in self.adjectives)
        return f"{self.subject}|{self.verb}|{self.object or ''}|{adjs}"


@dataclass
class NounRecord:
    noun: str
    adjectives: set = field(default_factory=set)
    verbs_as_subject: set = field(default_factory=set)
    verbs_as_object: set = field(default_factory=set)

    @property
    def attributes(self) -> frozenset:
        return frozenset(self.adjectives | self.verbs_as_object)


@dataclass
class VerbRecord:
    verb: str
    subjects: set = field(default_factory=set)
    objects: set = field(default_factory=set)


@dataclass
class AssociationWeb:
    nouns: dict = field(default_factory=dict)
    verbs: dict = field(default_factory=dict)

    def noun(self, name: str) -> NounRecord:
        if name not in self.nouns:
            self.nouns[name] = NounRecord(name)
        return self.nouns[name]

    def verb(self, name: str) -> VerbRecord:
        if name not in self.verbs:
            self.verbs[name] = VerbRecord(name)
        return self.verbs[name]

    def dumps(self) -> str:
        """One tab-separated record per line, nouns then verbs, sorted by name."""
        def j(s):
            return ",".join(sorted(s))
        lines = []
        for name in sorted(self.nouns):
            r = self.nouns[name]
            lines.append(f"noun\t{name}\t{j(r.adjectives)}\t{j(r.verbs_as_subject)}\t"
                         f"{j(r.verbs_as_object)}")
        for name in sorted(self.verbs):
            r = self.verbs[name]
            lines.append(f"verb\t{name}\t{j(r.subjects)}\t{j(r.objects)}")
        return "".join(ln + "\n" for ln in lines)

    @classmethod
    def loads(cls, text: str) -> "AssociationWeb":
        def s(v):
            return set(filter(None, v.split(",")))
        web = cls()
        for n, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            parts = line.split("\t")
            if parts[0] == "noun" and len(parts) == 5:
                web.nouns[parts[1]] = NounRecord(parts[1], s(parts[2]), s(parts[3]), s(parts[4]))
            elif parts[0] == "verb" and len(parts) == 4:
                web.verbs[parts[1]] = VerbRecord(parts[1], s(parts[2]), s(parts[3]))
            else:
                raise ValidationError(f"line {n}: malformed web record {line!r}")
        return web

    def save(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def load(cls, path: Union[str, Path]) -> "AssociationWeb":
        return cls.loads(Path(path).read_text(encoding="utf-8"))


def ingest(s: AnnotatedSentence, web: AssociationWeb) -> AssociationWeb:
    """Add one sentence's links to ``web`` in place and return it."""
    subj = web.noun(s.subject)
    verb = web.verb(s.verb)
    subj.verbs_as_subject.add(s.verb)
    verb.subjects.add(s.subject)
    obj = None
    if s.object is not None:
        obj = web.noun(s.object)
        obj.verbs_as_object.add(s.verb)
        verb.objects.add(s.object)
    for adj, role in s.adjectives:
        (subj if role == SUBJECT else obj).adjectives.add(adj)
    return web


def build_web(sentences: Iterable[AnnotatedSentence]) -> AssociationWeb:
    web = AssociationWeb()
    for s in sentences:
        ingest(s, web)
    return web


def jaccard(a: frozenset, b: frozenset) -> float:
    union = a | b
    if not union:
        return 0.0
    return len(a & b) / len(union)


def noun_similarity(n1: str, n2: str, web: AssociationWeb) -> float:
    for n in (n1, n2):
        if n not in web.nouns:
            raise KeyError(f"unknown noun {n!r}")
    return jaccard(web.nouns[n1].attributes, web.nouns[n2].attributes)


def categorize(web: AssociationWeb, threshold: float = DEFAULT_SIMILARITY) -> list[list[str]]:
    """Single-linkage groups of nouns whose similarity is at least ``threshold``.

    Groups are sorted internally and ordered by their first member.
    """
    if not 0 < threshold <= 1:
        raise ValidationError(f"similarity threshold must be in (0, 1], got {threshold}")
    g = nx.Graph()
    g.add_nodes_from(web.nouns)
    for a, b in combinations(sorted(web.nouns), 2):
        if noun_similarity(a, b, web) >= threshold:
            g.add_edge(a, b)
    return sorted(sorted(c) for c in nx.connected_components(g))


def _primitive_view(type_: Optional[str]) -> Optional[str]:
    if type_ in PRIMITIVES:
        return type_
    # a word following a determiner-like "bnoun" word reads as part of the noun phrase
    if type_ and type_.split()[0] == "abnoun":
        return NOUN
    return None


def from_typed_sentence(words: Sequence[str],
                        types: Sequence[Optional[str]]) -> Optional[AnnotatedSentence]:
    """Best-effort role labelling of a sentence typed by the syntax learner.

    The first noun phrase is the subject, the first verb after it the verb
    and the next noun phrase the object. Within a noun phrase the last word
    is the head and the earlier ones are its adjectives. Returns None when
    no subject or verb can be found.
    """
    kept = [(w, p) for w, p in zip(words, map(_primitive_view, types)) if p]
    units = collapse_phrases([p for _, p in kept])
    spans, pos = [], 0
    for u in units:
        spans.append((u.label.split("-")[0], [w for w, _ in kept[pos:pos + u.size]]))
        pos += u.size
    subject = verb = obj = None
    adjs = []
    for kind, ws in spans:
        if kind == NOUN and subject is None:
            subject = ws[-1]
            adjs += [(a, SUBJECT) for a in ws[:-1]]
        elif kind == VERB and subject is not None and verb is None:
            verb = ws[-1]
        elif kind == NOUN and verb is not None and obj is None:
            obj = ws[-1]
            adjs += [(a, OBJECT) for a in ws[:-1]]
    if subject is None or verb is None:
        return None
    return AnnotatedSentence(subject, verb, obj, tuple(adjs))


def read_annotated_file(path: Union[str, Path]) -> list[AnnotatedSentence]:
    out = []
    for n, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        try:
            out.append(AnnotatedSentence.parse(line))
        except ValidationError as e:
            raise ValidationError(f"{path}:{n}: {e}") from None
    return out
