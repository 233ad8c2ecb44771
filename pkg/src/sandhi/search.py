"""Multi-pattern substring search over loaded documents.

:class:`Matcher` is an Aho-Corasick automaton compiled into a full
transition table (one dict per state), so a scan costs one dict lookup
per code point plus the reported matches. Overlapping and nested matches
are all reported.

:func:`naive_search` is the brute-force reference used to check it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .corpus import Document
from .errors import EmptyPatternSet
from .wordforms import FormEntry


def fold_case(text: str) -> str:
    """Lowercase without changing the string length (columns stay valid)."""
    folded = text.lower()
    if len(folded) == len(text):
        return folded
    return "".join(lc if len(lc := c.lower()) == 1 else c for c in text)


@dataclass(frozen=True)
class Match:
    path: str
    byte_offset: int
    line: int
    column: int
    pattern: str
    form: FormEntry | None = None

    @property
    def sort_key(self) -> tuple[str, int, str]:
        return (self.path, self.byte_offset, self.pattern)

    def to_dict(self) -> dict:
        d = {
            "path": self.path,
            "byteOffset": self.byte_offset,
            "line": self.line,
            "column": self.column,
            "pattern": self.pattern,
            "rules": [],
            "context": None,
            "fullJoin": None,
        }
        if self.form is not None:
            d.update(rules=list(self.form.rules), context=self.form.context, fullJoin=self.form.full_join)
        return d


class Matcher:
    def __init__(self, patterns: Iterable[str], fold: bool = False) -> None:
        self.fold = fold
        self.patterns = tuple(sorted({p for p in patterns if p}))
        if not self.patterns:
            raise EmptyPatternSet()
        keys = [fold_case(p) if fold else p for p in self.patterns]

        goto: list[dict[str, int]] = [{}]
        outputs: list[list[int]] = [[]]
        for pid, key in enumerate(keys):
            state = 0
            for ch in key:
                nxt = goto[state].get(ch)
                if nxt is None:
                    nxt = len(goto)
                    goto[state][ch] = nxt
                    goto.append({})
                    outputs.append([])
                state = nxt
            outputs[state].append(pid)

        fail = [0] * len(goto)
        delta: list[dict[str, int]] = [dict() for _ in goto]
        delta[0] = dict(goto[0])
        queue = deque(goto[0].values())
        while queue:
            state = queue.popleft()
            # fail[state] is final here: it is shallower, so already processed
            delta[state] = {**delta[fail[state]], **goto[state]}
            outputs[state] = outputs[state] + outputs[fail[state]]
            for ch, child in goto[state].items():
                fail[child] = delta[fail[state]].get(ch, 0)
                queue.append(child)

        self._delta = delta
        self._outputs = [tuple((pid, len(keys[pid])) for pid in out) for out in outputs]

    def __len__(self) -> int:
        return len(self.patterns)

    def iter_matches(self, text: str) -> Iterator[tuple[int, str]]:
        """(code point offset, pattern) for every occurrence in ``text``."""
        if self.fold:
            text = fold_case(text)
        delta = self._delta
        outputs = self._outputs
        patterns = self.patterns
        state = 0
        for i, ch in enumerate(text):
            state = delta[state].get(ch, 0)
            if outputs[state]:
                for pid, size in outputs[state]:
                    yield i - size + 1, patterns[pid]


def build_matcher(patterns: Iterable[str], fold: bool = False) -> Matcher:
    return Matcher(patterns, fold=fold)


def _to_matches(
    doc: Document, hits: Iterable[tuple[int, str]], forms: Mapping[str, FormEntry] | None
) -> list[Match]:
    hits = list(hits)
    places = doc.locate_many([start for start, _ in hits])
    out = []
    for (_, pattern), (byte, line, col) in zip(hits, places):
        form = forms.get(pattern) if forms is not None else None
        out.append(Match(doc.path, byte, line, col, pattern, form))
    return out


def search_docs(
    matcher: Matcher,
    docs: Iterable[Document],
    forms: Mapping[str, FormEntry] | None = None,
) -> list[Match]:
    """Every occurrence of every pattern, sorted by (path, byte offset, pattern)."""
    matches: list[Match] = []
    for doc in docs:
        matches.extend(_to_matches(doc, matcher.iter_matches(doc.text), forms))
    matches.sort(key=lambda m: m.sort_key)
    return matches


def naive_search(
    patterns: Iterable[str],
    docs: Iterable[Document],
    forms: Mapping[str, FormEntry] | None = None,
    fold: bool = False,
) -> list[Match]:
    """Position-by-position reference scan with the same contract as search_docs."""
    patterns = sorted({p for p in patterns if p})
    if not patterns:
        raise EmptyPatternSet()
    matches: list[Match] = []
    for doc in docs:
        text = fold_case(doc.text) if fold else doc.text
        hits = []
        for i in range(len(text)):
            for p in patterns:
                key = fold_case(p) if fold else p
                if text[i : i + len(key)] == key:
                    hits.append((i, p))
        matches.extend(_to_matches(doc, hits, forms))
    matches.sort(key=lambda m: m.sort_key)
    return matches
