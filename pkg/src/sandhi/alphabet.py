"""IAST letter inventory and the two-part binary letter schema.

Every letter is described by two bit strings. Part 1 is a 48-bit
membership mask over the category rows of the schema: bits 0-3 give the
letter's class (vowel, semivowel, consonant, special) and bits 4-47 the
finer categories the letter belongs to. Part 2 gives the position of the
letter inside a category row (at most 16 positions).

A letter that belongs to several rows has several representations, one
per row. :class:`LetterCode` keeps all of them at once: ``part1`` is the
union of the category bits and ``part2`` maps each category to the
letter's index in that row. Rule code therefore always asks "is x in row
n" (:func:`part1_test`) and "is x the k-th entry of row n"
(:func:`part2_test`).

Rows whose entries line up by position (e.g. dentals in row 32 and
palatals in row 30) let a substitution be written as "leave row A, join
row B at the same index", which is :func:`retarget`.

The row data itself is loaded from ``data/table1.txt``.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from functools import cache
from importlib import resources
from typing import Iterable, Sequence

from .errors import AmbiguousSublist, IndexOutOfRange, UnknownCharacter

PART1_WIDTH = 48
PART2_WIDTH = 16

CLASS_RANGES = {0: range(4, 20), 1: range(20, 22), 2: range(22, 42), 3: range(42, 48)}


class PhonemeClass(enum.IntEnum):
    """Letter class; the value is the Part 1 class bit."""

    VOWEL = 0
    SEMIVOWEL = 1
    CONSONANT = 2
    SPECIAL = 3


@dataclass(frozen=True)
class Phoneme:
    surface: str
    kind: PhonemeClass = field(compare=False)

    def __str__(self) -> str:
        return self.surface

    def __repr__(self) -> str:
        return f"Phoneme({self.surface!r})"


@dataclass(frozen=True)
class Entry:
    """One position of a category row.

    For an ordinary entry ``letters`` is the decode target (possibly
    several letters, e.g. ā + r). For a sublist it is the set of
    alternatives that share the position.
    """

    letters: tuple[Phoneme, ...]
    sublist: bool = False

    def __str__(self) -> str:
        text = " ".join(p.surface for p in self.letters)
        if self.sublist:
            return f"[{text}]"
        return "".join(p.surface for p in self.letters)


@dataclass(frozen=True)
class CategoryRow:
    number: int
    entries: tuple[Entry, ...]

    @property
    def is_class_row(self) -> bool:
        return self.number < 4

    def index_of(self, phoneme: Phoneme) -> int | None:
        for i, entry in enumerate(self.entries):
            if entry.sublist:
                if phoneme in entry.letters:
                    return i
            elif entry.letters == (phoneme,):
                return i
        return None


class CategoryTable:
    """The 48 category rows plus the letter inventory they define."""

    def __init__(self, rows: Sequence[CategoryRow], inventory: dict[str, Phoneme]) -> None:
        if len(rows) != PART1_WIDTH or [r.number for r in rows] != list(range(PART1_WIDTH)):
            raise ValueError("schema must define rows 0-47 in order")
        for row in rows[4:]:
            if len(row.entries) > PART2_WIDTH:
                raise ValueError(f"row {row.number} has more than {PART2_WIDTH} entries")
        self.rows = tuple(rows)
        self.inventory = inventory
        self.max_length = max(len(s) for s in inventory)

    def __getitem__(self, number: int) -> CategoryRow:
        return self.rows[number]

    def __len__(self) -> int:
        return len(self.rows)

    @classmethod
    def from_text(cls, text: str) -> CategoryTable:
        raw: dict[int, list[str]] = {}
        for lineno, line in enumerate(text.splitlines(), 1):
            line = unicodedata.normalize("NFC", line.strip())
            if not line or line.startswith(";"):
                continue
            number, sep, body = line.partition("|")
            if not sep:
                raise ValueError(f"line {lineno}: expected '<row>|<entries>'")
            number = int(number)
            if number in raw:
                raise ValueError(f"line {lineno}: row {number} defined twice")
            raw[number] = [item.strip() for item in body.split(",")]

        inventory: dict[str, Phoneme] = {}
        for kind in PhonemeClass:
            for surface in raw.get(kind.value, []):
                if surface in inventory:
                    raise ValueError(f"letter {surface!r} listed in two class rows")
                inventory[surface] = Phoneme(surface, kind)

        def letters(s: str) -> tuple[Phoneme, ...]:
            return tuple(_tokenize(s, inventory, max(map(len, inventory))))

        rows = []
        for number in sorted(raw):
            entries = []
            for item in raw[number]:
                if item.startswith("[") and item.endswith("]"):
                    members = tuple(inventory[s] for s in item[1:-1].split())
                    entries.append(Entry(members, sublist=True))
                elif number < 4:
                    entries.append(Entry((inventory[item],)))
                else:
                    entries.append(Entry(letters(item)))
            rows.append(CategoryRow(number, tuple(entries)))
        return cls(rows, inventory)

    def phoneme(self, surface: str) -> Phoneme:
        try:
            return self.inventory[surface]
        except KeyError:
            raise UnknownCharacter(surface, 0) from None


@dataclass(frozen=True)
class LetterCode:
    """Full binary identity of one letter.

    ``part1`` is an int used as a 48-bit mask; ``part2`` maps each category
    (4-47) the letter belongs to onto its index within that row.
    """

    phoneme: Phoneme | None
    part1: int
    part2: tuple[tuple[int, int], ...] = ()

    @property
    def is_null(self) -> bool:
        return self.part1 == 0

    @property
    def categories(self) -> tuple[int, ...]:
        return tuple(cat for cat, _ in self.part2)

    def index_in(self, category: int) -> int | None:
        for cat, idx in self.part2:
            if cat == category:
                return idx
        return None

    def x1(self, n: int) -> bool:
        return bool(self.part1 >> n & 1)

    def x2(self, category: int, index: int) -> bool:
        return self.index_in(category) == index

    def representations(self) -> list[tuple[int, int]]:
        """One (Part 1, Part 2) integer pair per category membership."""
        class_bits = self.part1 & 0b1111
        return [(class_bits | 1 << cat, 1 << idx) for cat, idx in self.part2]


NULL_LETTER = LetterCode(None, 0)


def bitstring(value: int, width: int) -> str:
    """Render ``value`` with bit 0 leftmost, as the schema tables print it."""
    return "".join("1" if value >> i & 1 else "0" for i in range(width))


@cache
def load_table() -> CategoryTable:
    text = resources.files(__package__).joinpath("data/table1.txt").read_text("utf-8")
    return CategoryTable.from_text(text)


def _tokenize(text: str, inventory: dict[str, Phoneme], max_len: int) -> list[Phoneme]:
    out = []
    pos = 0
    while pos < len(text):
        for size in range(min(max_len, len(text) - pos), 0, -1):
            p = inventory.get(text[pos : pos + size])
            if p is not None:
                out.append(p)
                pos += size
                break
        else:
            raise UnknownCharacter(text, pos)
    return out


def tokenize(text: str) -> list[Phoneme]:
    """Split an IAST word into letters, longest match first.

    >>> [p.surface for p in tokenize("dadhyatra")]
    ['d', 'a', 'dh', 'y', 'a', 't', 'r', 'a']
    """
    table = load_table()
    return _tokenize(text, table.inventory, table.max_length)


def detokenize(seq: Iterable[Phoneme]) -> str:
    return "".join(p.surface for p in seq)


def phonemes(text: str) -> tuple[Phoneme, ...]:
    return tuple(tokenize(text))


def inventory() -> dict[str, Phoneme]:
    return dict(load_table().inventory)


@cache
def encode(p: Phoneme) -> LetterCode:
    table = load_table()
    if table.inventory.get(p.surface) != p:
        raise UnknownCharacter(p.surface, 0)
    part1 = 1 << p.kind.value
    part2 = []
    for row in table.rows[4:]:
        idx = row.index_of(p)
        if idx is not None:
            part1 |= 1 << row.number
            part2.append((row.number, idx))
    return LetterCode(p, part1, tuple(part2))


def part1_test(code: LetterCode, n: int) -> bool:
    return code.x1(n)


def part2_test(code: LetterCode, category: int, index: int) -> bool:
    return code.x2(category, index)


def decode_entry(category: int, index: int, origin: Phoneme | None = None) -> list[Phoneme]:
    """Letters stored at ``index`` of row ``category``.

    A sublist entry only decodes when ``origin`` names one of its members.
    """
    row = load_table()[category]
    if row.is_class_row or not 0 <= index < len(row.entries):
        raise IndexOutOfRange(category, index)
    entry = row.entries[index]
    if entry.sublist:
        if origin is not None and origin in entry.letters:
            return [origin]
        raise AmbiguousSublist(category, index)
    return list(entry.letters)


def retarget(code: LetterCode, from_category: int, to_category: int) -> list[Phoneme]:
    """Move a letter from one row to the entry at the same index of another."""
    index = code.index_in(from_category)
    if index is None:
        raise ValueError(f"{code.phoneme} is not in category {from_category}")
    return decode_entry(to_category, index, origin=code.phoneme)
