"""Command-line entry point: ``langacq <subcommand> ...``.

Exit status is 0 on success, 1 on invalid input or usage, 2 on I/O failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Sequence

from . import morphology, semantics, syntax
from .corpus import load_alphabet, tokenize_file
from .exceptions import ValidationError
from .validation import check_order, check_positive, check_unit_interval

log = logging.getLogger("langacq")

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2

ENV_ALPHABET = "LANGACQ_ALPHABET"
ENV_THRESHOLD = "LANGACQ_THRESHOLD"
ENV_SIMILARITY = "LANGACQ_SIMILARITY_THRESHOLD"


@dataclass(frozen=True)
class Config:
    alphabet: str = "default"
    n: int = 2
    threshold: float = morphology.DEFAULT_THRESHOLD
    similarity_threshold: float = semantics.DEFAULT_SIMILARITY
    output: Optional[str] = None
    verbosity: int = 0

    def validate(self) -> "Config":
        load_alphabet(self.alphabet)
        check_order(self.n)
        check_positive("threshold", self.threshold)
        check_unit_interval("similarity threshold", self.similarity_threshold)
        return self


def _alphabet_from_env(value: str) -> str:
    # the variable may name a file holding the characters
    p = Path(value)
    if p.is_file():
        return "".join(p.read_text(encoding="utf-8").split())
    return value


def resolve_config(args: argparse.Namespace, environ=os.environ) -> Config:
    """Defaults, then ``--config`` JSON, then environment, then flags."""
    cfg = Config()
    if getattr(args, "config", None):
        data = json.loads(Path(args.config).read_text(encoding="utf-8"))
        known = {f.name for f in fields(Config)}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown config keys: {', '.join(sorted(unknown))}")
        cfg = replace(cfg, **data)
    try:
        if ENV_ALPHABET in environ:
            cfg = replace(cfg, alphabet=_alphabet_from_env(environ[ENV_ALPHABET]))
        if ENV_THRESHOLD in environ:
            cfg = replace(cfg, threshold=float(environ[ENV_THRESHOLD]))
        if ENV_SIMILARITY in environ:
            cfg = replace(cfg, similarity_threshold=float(environ[ENV_SIMILARITY]))
    except ValueError as e:
        raise ValidationError(f"bad environment override: {e}") from None
    overrides = {}
    for name in ("alphabet", "n", "threshold", "similarity_threshold", "output"):
        v = getattr(args, name, None)
        if v is not None:
            overrides[name] = v
    overrides["verbosity"] = getattr(args, "verbose", 0)
    return replace(cfg, **overrides).validate()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="langacq", description=__doc__.splitlines()[0])
    parser.add_argument("--config", help="JSON file of default settings")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def morph_opts(p):
        p.add_argument("--alphabet", help="preset name or literal characters")
        p.add_argument("--n", type=int, help="n-gram order (default 2)")

    p = sub.add_parser("profile", help="build an n-gram frequency table")
    p.add_argument("file")
    morph_opts(p)
    p.add_argument("--top", type=int, default=10, help="print the k most frequent n-grams")
    p.add_argument("--output", help="CSV path (default <stem>_tab.csv beside the input)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare", help="same/different language verdict for two files")
    p.add_argument("file1")
    p.add_argument("file2")
    morph_opts(p)
    p.add_argument("--threshold", type=float, help="same-language cutoff (default 55)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("syntax-train", help="learn word types and patterns from sentences")
    p.add_argument("--seed", required=True, help="word<TAB>noun|verb lines")
    p.add_argument("sentences", help="one sentence per line")
    p.add_argument("--dump-state", help="write the learned state here")

    p = sub.add_parser("syntax-analyze", help="type a sentence against a learned state")
    p.add_argument("--state", required=True)
    p.add_argument("sentence")
    p.add_argument("--update", action="store_true", help="write what was learned back")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("semantics-train", help="build an association web")
    p.add_argument("annotated", help="subject|verb|object|adj@role,... lines")
    p.add_argument("--state", help="web file to extend and write (stdout if omitted)")

    p = sub.add_parser("semantics-query", help="query an association web")
    p.add_argument("--state", required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--similar", nargs=2, metavar=("NOUN1", "NOUN2"))
    g.add_argument("--categorize", action="store_true")
    p.add_argument("--threshold", dest="similarity_threshold", type=float,
                   help="similarity cutoff for --categorize (default 0.5)")
    return parser


def _default_csv_path(src: str) -> Path:
    p = Path(src)
    return p.with_name(f"{p.stem}_tab.csv")


def cmd_profile(args, cfg: Config, out) -> int:
    if args.top < 1:
        raise ValidationError("--top must be >= 1")
    prof = morphology.build_profile(tokenize_file(args.file), cfg.alphabet, cfg.n)
    dest = morphology.export_profile(prof, cfg.output or _default_csv_path(args.file))
    top = morphology.top_ngrams(prof, args.top)
    if args.json:
        json.dump({"file": args.file, "csv": str(dest), "words": prof.word_count,
                   "total_ngrams": prof.total, "top": top}, out, ensure_ascii=False)
        out.write("\n")
    else:
        out.write(f"words\t{prof.word_count}\n")
        out.write(f"ngrams\t{prof.total}\n")
        for gram, pct in top:
            out.write(f"{gram}\t{pct:.4f}\n")
    return EXIT_OK


def cmd_compare(args, cfg: Config, out) -> int:
    p1 = morphology.build_profile(tokenize_file(args.file1), cfg.alphabet, cfg.n)
    p2 = morphology.build_profile(tokenize_file(args.file2), cfg.alphabet, cfg.n)
    res = morphology.classify(p1, p2, cfg.threshold)
    if res.low_confidence:
        log.warning("fewer than %d words in an input; verdict may be unreliable",
                    morphology.LOW_CONFIDENCE_WORDS)
    if args.json:
        json.dump({"difference": res.difference, "verdict": res.verdict.value,
                   "threshold": res.threshold_used,
                   "low_confidence": res.low_confidence}, out)
        out.write("\n")
    else:
        out.write(f"{res.difference:.2f}\n{res.verdict.value}\n")
    return EXIT_OK


def _read_sentences(path) -> list[str]:
    return [ln for ln in Path(path).read_text(encoding="utf-8").splitlines() if ln.strip()]


def cmd_syntax_train(args, cfg: Config, out) -> int:
    state = syntax.SyntaxState(syntax.read_seed_file(args.seed))
    log_stream = out if args.dump_state else sys.stderr
    for sentence in _read_sentences(args.sentences):
        result = state.learn(sentence)
        log_stream.write(f"{result.method}\t{' '.join(syntax.normalize_sentence(sentence))}\n")
    if args.dump_state:
        state.save(args.dump_state)
    else:
        out.write(state.dumps())
    return EXIT_OK


def cmd_syntax_analyze(args, cfg: Config, out) -> int:
    state = syntax.SyntaxState.load(args.state)
    words = syntax.normalize_sentence(args.sentence)
    work = state.copy()
    result = work.learn(words)
    types = work.types_of(words)
    phrases = [str(u) for u in syntax.collapse_phrases([t or "?" for t in types])]
    if args.json:
        json.dump({"words": words, "types": types, "method": result.method,
                   "phrases": phrases}, out)
        out.write("\n")
    else:
        for w, t in zip(words, types):
            out.write(f"{w}\t{t or '?'}\n")
        out.write(f"method\t{result.method}\n")
        out.write(f"phrases\t{' '.join(phrases)}\n")
    if args.update:
        work.save(args.state)
    return EXIT_OK


def cmd_semantics_train(args, cfg: Config, out) -> int:
    sentences = semantics.read_annotated_file(args.annotated)
    if args.state and Path(args.state).exists():
        web = semantics.AssociationWeb.load(args.state)
    else:
        web = semantics.AssociationWeb()
    for s in sentences:
        semantics.ingest(s, web)
    if args.state:
        web.save(args.state)
    else:
        out.write(web.dumps())
    return EXIT_OK


def cmd_semantics_query(args, cfg: Config, out) -> int:
    web = semantics.AssociationWeb.load(args.state)
    if args.similar:
        try:
            sim = semantics.noun_similarity(*args.similar, web)
        except KeyError as e:
            raise ValidationError(e.args[0]) from None
        out.write(f"{sim:.6g}\n")
    else:
        for group in semantics.categorize(web, cfg.similarity_threshold):
            out.write(" ".join(group) + "\n")
    return EXIT_OK


COMMANDS = {
    "profile": cmd_profile,
    "compare": cmd_compare,
    "syntax-train": cmd_syntax_train,
    "syntax-analyze": cmd_syntax_analyze,
    "semantics-train": cmd_semantics_train,
    "semantics-query": cmd_semantics_query,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    if args.command is None:
        parser.print_usage(err)
        return EXIT_INVALID
    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO if args.verbose
                 else logging.WARNING)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](args, cfg, out)
    except ValidationError as e:
        err.write(f"error: {e}\n")
        return EXIT_INVALID
    except json.JSONDecodeError as e:
        err.write(f"error: bad config file: {e}\n")
        return EXIT_INVALID
    except OSError as e:
        err.write(f"error: {e}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
