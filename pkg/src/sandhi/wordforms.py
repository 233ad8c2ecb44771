"""Generate the sandhi-transformed surface forms of a search word.

A word Z can show up in a text fused with its neighbours. The generator
joins Z to every single-vowel follower (plus "om"/"oṁ"), then joins each
form found so far to every single-vowel predecessor and to the words
go, pra, ava, apa, upa, parā. Each join is trimmed down to the letters
that still belong to Z, so the result is a set of substrings that can be
searched for directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .alphabet import PhonemeClass, detokenize, load_table, tokenize
from .engine import PREPOSITIONS, RNA_WORDS, SandhiOutcome, Tag, vowel_sandhi
from .errors import EmptyWord

PREFIX_WORDS = ("go",) + PREPOSITIONS
SUFFIX_WORDS = ("om", "oṁ")

# Lexical triggers of the vṛddhi exceptions; only used with extended=True.
EXTENDED_FOLLOWERS = ("eti", "edhati", "edhate", "eṣa", "eṣyati", "ūha", "ūḍha", "īra", "ṛṇa")
EXTENDED_PREDECESSORS = ("sva",) + RNA_WORDS

_JOINING = {Tag.MERGED, Tag.INSERTED}


def vowels() -> list[str]:
    return [s for s, p in load_table().inventory.items() if p.kind is PhonemeClass.VOWEL]


@dataclass(frozen=True)
class FormEntry:
    pattern: str
    full_join: str
    context: str
    rules: tuple[str, ...]
    source: str

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern,
            "rules": list(self.rules),
            "context": self.context,
            "fullJoin": self.full_join,
            "source": self.source,
        }


def _rank(entry: FormEntry) -> tuple:
    return (len(entry.rules), entry.context, entry.full_join)


class FormSet:
    """Form entries keyed by pattern.

    When two joins yield the same pattern the entry with the shorter rule
    list (then the smaller context string) is kept, so the result does not
    depend on insertion order.
    """

    def __init__(self, source: str) -> None:
        self.source = source
        self._entries: dict[str, FormEntry] = {}

    def add(self, entry: FormEntry) -> bool:
        old = self._entries.get(entry.pattern)
        if old is not None and _rank(old) <= _rank(entry):
            return False
        self._entries[entry.pattern] = entry
        return True

    def __contains__(self, pattern: object) -> bool:
        return pattern in self._entries

    def __iter__(self) -> Iterator[FormEntry]:
        return iter(sorted(self._entries.values(), key=lambda e: e.pattern))

    def __len__(self) -> int:
        return len(self._entries)

    def __getitem__(self, pattern: str) -> FormEntry:
        return self._entries[pattern]

    @property
    def patterns(self) -> set[str]:
        return set(self._entries)


def extract_pattern(outcome: SandhiOutcome, z_side: Tag) -> str:
    """Shortest run of the joined word that still covers the search word.

    The run holds every letter tagged ``z_side`` plus any merged or
    inserted letters touching it; letters that only belong to the context
    word are dropped.
    """
    tags = outcome.provenance
    core = [i for i, t in enumerate(tags) if t is z_side]
    if not core:
        core = [i for i, t in enumerate(tags) if t in _JOINING]
    if not core:
        return ""
    lo, hi = min(core), max(core)
    while lo > 0 and tags[lo - 1] in _JOINING:
        lo -= 1
    while hi + 1 < len(tags) and tags[hi + 1] in _JOINING:
        hi += 1
    return detokenize(outcome.output[lo : hi + 1])


def generate_word_forms(z: str, extended: bool = False) -> FormSet:
    """All forms under which ``z`` may appear after vowel sandhi.

    >>> sorted(generate_word_forms("iti").patterns)[:5]
    ['eti', 'ety', 'etī', 'iti', 'ity']
    """
    if not z:
        raise EmptyWord("search word")
    z_letters = tokenize(z)
    forms = FormSet(z)
    forms.add(FormEntry(z, z, "query", (), z))

    followers: Sequence[str] = vowels() + list(SUFFIX_WORDS)
    predecessors: Sequence[str] = list(PREFIX_WORDS) + vowels()
    if extended:
        followers = list(followers) + list(EXTENDED_FOLLOWERS)
        predecessors = list(predecessors) + list(EXTENDED_PREDECESSORS)

    for y_word in followers:
        out = vowel_sandhi(z_letters, tokenize(y_word))
        if not out.rules_applied:
            continue
        forms.add(
            FormEntry(extract_pattern(out, Tag.FROM_X), out.text, f"{z} + {y_word}", out.rules_applied, z)
        )

    # snapshot: forms added below are not joined again
    for entry in list(forms._entries.values()):
        y_letters = tokenize(entry.pattern)
        for x_word in predecessors:
            out = vowel_sandhi(tokenize(x_word), y_letters)
            if not out.rules_applied:
                continue
            rules = tuple(dict.fromkeys(entry.rules + out.rules_applied))
            context = f"{x_word} + {entry.pattern}"
            forms.add(FormEntry(extract_pattern(out, Tag.FROM_Y), out.text, context, rules, z))
    return forms
