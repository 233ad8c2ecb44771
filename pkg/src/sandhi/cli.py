"""Command line interface: ``sandhi join|forms|search|translit``.

Exit codes: 0 success (or matches found), 1 search found nothing,
2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import unicodedata
from typing import Sequence

from .alphabet import tokenize
from .corpus import load_document, normalize_text, transliterate_devanagari
from .engine import apply_scutva, describe_rule, vowel_sandhi
from .errors import SandhiError
from .search import build_matcher, fold_case, search_docs
from .wordforms import generate_word_forms


class UsageError(Exception):
    pass


def _word(arg: str, what: str = "word") -> str:
    word = unicodedata.normalize("NFC", arg.strip())
    if not word:
        raise UsageError(f"{what} must not be empty")
    return word


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, ensure_ascii=False, indent=2)
    sys.stdout.write("\n")


def render_join(record: dict, trace: bool = False) -> list[str]:
    lines = [record["output"]]
    if trace:
        lines += [f"  {describe_rule(s)}" for s in record["rules"]]
        lines += [f"  {p}\t{t}" for p, t in zip(record["phonemes"], record["provenance"])]
    return lines


def render_form(record: dict) -> str:
    rules = ",".join(record["rules"]) or "-"
    return f"{record['pattern']}\t{rules}\t{record['context']}"


def render_match(record: dict) -> str:
    rules = ",".join(record["rules"]) or "-"
    return f"{record['path']}:{record['line']}:{record['column']}  {record['pattern']}  {rules}"


def cmd_join(args: argparse.Namespace) -> int:
    x = tokenize(_word(args.x))
    y = tokenize(_word(args.y))
    outcome = apply_scutva(x, y) if args.scutva else vowel_sandhi(x, y)
    record = {
        "x": args.x,
        "y": args.y,
        "output": outcome.text,
        "rules": list(outcome.rules_applied),
        "phonemes": [p.surface for p in outcome.output],
        "provenance": [t.value for t in outcome.provenance],
        "returnedEarly": outcome.returned_early,
    }
    if args.json:
        _dump(record)
    else:
        print("\n".join(render_join(record, args.trace)))
    return 0


def cmd_forms(args: argparse.Namespace) -> int:
    forms = generate_word_forms(_word(args.word), extended=args.extended_contexts)
    records = [e.to_dict() for e in forms]
    if args.json:
        _dump(records)
    else:
        for r in records:
            print(render_form(r))
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    word = _word(args.word)
    if args.fold_case:
        word = fold_case(word)
    forms = generate_word_forms(word, extended=args.extended_contexts)
    docs = [load_document(p) for p in args.paths]
    matcher = build_matcher(forms.patterns, fold=args.fold_case)
    by_pattern = {e.pattern: e for e in forms}
    records = [m.to_dict() for m in search_docs(matcher, docs, by_pattern)]
    if args.json:
        _dump(records)
    else:
        for r in records:
            print(render_match(r))
    return 0 if records else 1


def cmd_translit(args: argparse.Namespace) -> int:
    with open(args.path, "rb") as fh:
        text = normalize_text(fh.read(), args.path)
    sys.stdout.write(transliterate_devanagari(text))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sandhi", description="Vowel sandhi joins, word-form generation and e-text search."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("join", help="join two words with vowel sandhi")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--trace", action="store_true", help="print applied rules and provenance")
    p.add_argument("--scutva", action="store_true", help="apply the palatal assimilation rule instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("forms", help="list the sandhi forms of a word")
    p.add_argument("word")
    p.add_argument("--extended-contexts", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("search", help="search e-texts for a word and its sandhi forms")
    p.add_argument("word")
    p.add_argument("paths", nargs="+")
    p.add_argument("--extended-contexts", action="store_true")
    p.add_argument("--fold-case", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("translit", help="transliterate a Devanāgarī file to IAST")
    p.add_argument("path")
    p.set_defaults(func=cmd_translit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SandhiError, UsageError, OSError) as exc:
        print(f"sandhi: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
