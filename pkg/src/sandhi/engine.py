"""Vowel sandhi processor and the palatal-assimilation (ścutva) demo.

Both operate on a junction ``X + Y`` of two letter sequences, with the
letters nearest the junction named

    u x + y w

(``x`` ends X, ``y`` starts Y, ``u`` precedes x, ``w`` follows y). Every
rule is a row test on these letters followed by at most a deletion and a
row-to-row substitution, so the code below reads as a list of
``part1_test``/``part2_test`` checks and ``retarget`` calls.

The vowel rules are tried in a fixed order. The first (go + vowel) only
rewrites X and lets the rest run; each later rule returns as soon as it
fires.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .alphabet import (
    LetterCode,
    Phoneme,
    decode_entry,
    detokenize,
    encode,
    part1_test,
    part2_test,
    phonemes,
    retarget,
)
from .errors import EmptyWord

RULE_NAMES = {
    "6.1.123": "avaṅādeśa sandhi",
    "6.1.109": "pūrvarūpa sandhi",
    "6.1.101": "savarṇadīrgha sandhi",
    "6.1.95": "pararūpa sandhi",
    "6.1.89": "vṛddhi sandhi",
    "6.1.94": "pararūpa sandhi",
    "6.1.91": "vṛddhi sandhi",
    "6.1.88": "vṛddhi sandhi",
    "6.1.87": "guṇa sandhi",
    "6.1.78": "ayāyāvāvādeśa sandhi",
    "6.1.77": "yaṇādeśa sandhi",
    "8.4.40": "ścutva sandhi",
}

PREPOSITIONS = ("pra", "ava", "apa", "upa", "parā")
RNA_WORDS = ("vatsara", "kambala", "vasana", "daśa", "ṛṇa")


def describe_rule(sutra: str) -> str:
    return f"{sutra} {RULE_NAMES[sutra]}"


class Tag(str, enum.Enum):
    """Where an output letter came from."""

    FROM_X = "fromX"
    FROM_Y = "fromY"
    MERGED = "merged"
    INSERTED = "inserted"


@dataclass
class SandhiContext:
    """Mutable working state of one junction."""

    X: list[Phoneme]
    Y: list[Phoneme]
    x_tags: list[Tag] = field(default_factory=list)
    y_tags: list[Tag] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.X or not self.Y:
            raise EmptyWord("both sides of a junction")
        self.x_tags = [Tag.FROM_X] * len(self.X)
        self.y_tags = [Tag.FROM_Y] * len(self.Y)

    @property
    def x(self) -> LetterCode:
        return encode(self.X[-1])

    @property
    def y(self) -> LetterCode:
        return encode(self.Y[0])

    @property
    def u(self) -> LetterCode | None:
        return encode(self.X[-2]) if len(self.X) > 1 else None

    @property
    def w(self) -> LetterCode | None:
        return encode(self.Y[1]) if len(self.Y) > 1 else None

    def x_word(self) -> str:
        return detokenize(self.X)

    def y_word(self) -> str:
        return detokenize(self.Y)

    def y_starts_with(self, prefix: str) -> bool:
        want = phonemes(prefix)
        return tuple(self.Y[: len(want)]) == want

    def replace_x(self, letters: Sequence[Phoneme], tag: Tag = Tag.FROM_X) -> None:
        self.X[-1:] = letters
        self.x_tags[-1:] = [tag] * len(letters)

    def replace_y(self, letters: Sequence[Phoneme], tag: Tag = Tag.FROM_Y) -> None:
        self.Y[:1] = letters
        self.y_tags[:1] = [tag] * len(letters)

    def delete_x(self) -> None:
        del self.X[-1]
        del self.x_tags[-1]

    def delete_y(self) -> None:
        del self.Y[0]
        del self.y_tags[0]


@dataclass(frozen=True)
class SandhiOutcome:
    output: tuple[Phoneme, ...]
    provenance: tuple[Tag, ...]
    rules_applied: tuple[str, ...] = ()
    returned_early: bool = False

    @property
    def text(self) -> str:
        return detokenize(self.output)

    @property
    def trace(self) -> list[str]:
        return [describe_rule(s) for s in self.rules_applied]

    @classmethod
    def from_context(cls, ctx: SandhiContext, rules: list[str], early: bool) -> SandhiOutcome:
        return cls(
            tuple(ctx.X + ctx.Y),
            tuple(ctx.x_tags + ctx.y_tags),
            tuple(rules),
            early,
        )


def _in_any(code: LetterCode | None, *rows: int) -> bool:
    return code is not None and any(part1_test(code, n) for n in rows)


def _first_row(code: LetterCode, *rows: int) -> int:
    return next(n for n in rows if part1_test(code, n))


def vowel_sandhi(X: Sequence[Phoneme] | str, Y: Sequence[Phoneme] | str) -> SandhiOutcome:
    """Join two words across a vowel junction.

    >>> vowel_sandhi("deva", "indra").text
    'devendra'
    """
    if isinstance(X, str):
        X = phonemes(X)
    if isinstance(Y, str):
        Y = phonemes(Y)
    ctx = SandhiContext(list(X), list(Y))
    rules: list[str] = []

    def done(sutra: str) -> SandhiOutcome:
        rules.append(sutra)
        return SandhiOutcome.from_context(ctx, rules, True)

    def merge_into_y(target_row: int | None, *from_rows: int) -> None:
        # delete x; the (possibly substituted) y stands for both letters
        y = ctx.y
        letters = ctx.Y[:1]
        if target_row is not None:
            letters = retarget(y, _first_row(y, *from_rows), target_row)
        ctx.delete_x()
        ctx.replace_y(letters, Tag.MERGED)

    # avaṅ: the o of "go" becomes "ava" before a vowel; later rules still apply
    if ctx.x_word() == "go" and part1_test(ctx.y, 0):
        ctx.replace_x(decode_entry(19, 0))
        rules.append("6.1.123")

    x, y, w = ctx.x, ctx.y, ctx.w

    # e/o + a: the a becomes avagraha
    if part1_test(x, 13) and part1_test(y, 4):
        ctx.replace_y(decode_entry(46, 0), Tag.INSERTED)
        return done("6.1.109")

    # homogeneous vowels fuse into the long vowel
    if _in_any(x, 8, 9) and _in_any(y, 8, 9):
        xi = x.index_in(_first_row(x, 8, 9))
        yi = y.index_in(_first_row(y, 8, 9))
        if xi == yi:
            long_vowel = retarget(x, _first_row(x, 8, 9), 9)
            ctx.delete_y()
            ctx.replace_x(long_vowel, Tag.MERGED)
            return done("6.1.101")

    # a/ā + the o of om/oṁ: o replaces both
    if part1_test(x, 5) and part1_test(y, 13) and part2_test(y, 13, 1) and _in_any(w, 28, 42):
        merge_into_y(None)
        return done("6.1.95")

    # lexical vṛddhi exceptions
    if part1_test(x, 5):
        if part1_test(y, 13) and part2_test(y, 13, 0):
            if ctx.y_starts_with("et") or ctx.y_starts_with("edhat"):
                merge_into_y(14, 13)
                return done("6.1.89")
            elif ctx.x_word() == "pra" and (ctx.y_starts_with("eṣ") or ctx.y_starts_with("eṣy")):
                merge_into_y(14, 13)
                return done("6.1.89")
        elif part1_test(y, 7) and part2_test(y, 7, 1):
            if _in_any(w, 25):
                merge_into_y(14, 7)
                return done("6.1.89")
            elif ctx.x_word() == "pra" and ctx.y_starts_with("ūḍh"):
                merge_into_y(14, 7)
                return done("6.1.89")
        elif (
            ctx.x_word() == "sva"
            and part1_test(y, 11)
            and part2_test(y, 11, 0)
            and w is not None
            and part1_test(w, 20)
            and part2_test(w, 20, 2)
        ):
            merge_into_y(14, 11)
            return done("6.1.89")

    # preposition-final a/ā + e/o: e/o replaces both
    if ctx.x_word() in PREPOSITIONS and part1_test(y, 13):
        merge_into_y(None)
        return done("6.1.94")

    # preposition + ṛ/ṝ/ḷ, and the ṛṇa compounds: vṛddhi ār/āl
    if ctx.x_word() in PREPOSITIONS and part1_test(y, 12):
        merge_into_y(17, 12)
        return done("6.1.91")
    if ctx.x_word() in RNA_WORDS and ctx.y_word() == "ṛṇa":
        merge_into_y(17, 12)
        return done("6.1.91")

    # a/ā + e/o/ai/au: vṛddhi ai/au
    if part1_test(x, 5) and _in_any(y, 13, 14):
        merge_into_y(14, 13, 14)
        return done("6.1.88")

    # a/ā + i/u/ṛ/ḷ (short or long): guṇa e/o/ar/al
    if part1_test(x, 5) and _in_any(y, 10, 11):
        merge_into_y(16, 10, 11)
        return done("6.1.87")

    # e/o/ai/au + vowel: ay/av/āy/āv
    if part1_test(x, 15) and part1_test(y, 0):
        ctx.replace_x(retarget(x, 15, 18))
        return done("6.1.78")

    # i/u/ṛ/ḷ (short or long) + vowel: y/v/r/l
    if _in_any(x, 10, 11) and part1_test(y, 0):
        ctx.replace_x(retarget(x, _first_row(x, 10, 11), 20))
        return done("6.1.77")

    return SandhiOutcome.from_context(ctx, rules, False)


def apply_scutva(X: Sequence[Phoneme] | str, Y: Sequence[Phoneme] | str) -> SandhiOutcome:
    """Dental or s next to a palatal or ś becomes the matching palatal.

    Blocked when the palatal is a preceding ś (praś + naḥ stays).
    """
    if isinstance(X, str):
        X = phonemes(X)
    if isinstance(Y, str):
        Y = phonemes(Y)
    ctx = SandhiContext(list(X), list(Y))
    x, y = ctx.x, ctx.y
    if part1_test(x, 30) and not part2_test(x, 30, 5) and part1_test(y, 32):
        ctx.replace_y(retarget(y, 32, 30))
    elif part1_test(x, 32) and part1_test(y, 30):
        ctx.replace_x(retarget(x, 32, 30))
    else:
        return SandhiOutcome.from_context(ctx, [], False)
    return SandhiOutcome.from_context(ctx, ["8.4.40"], False)

