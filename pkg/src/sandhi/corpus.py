"""Loading e-texts: UTF-8 decoding, NFC normalisation, Devanāgarī to IAST."""

from __future__ import annotations

import unicodedata
from bisect import bisect_right
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidUtf8, UnmappedCodePoint

DEVANAGARI = range(0x0900, 0x0980)

VIRAMA = "्"

INDEPENDENT_VOWELS = {
    "अ": "a", "आ": "ā", "इ": "i", "ई": "ī", "उ": "u", "ऊ": "ū",
    "ऋ": "ṛ", "ॠ": "ṝ", "ऌ": "ḷ", "ॡ": "ḹ",
    "ए": "e", "ऐ": "ai", "ओ": "o", "औ": "au",
}

VOWEL_SIGNS = {
    "ा": "ā", "ि": "i", "ी": "ī", "ु": "u", "ू": "ū",
    "ृ": "ṛ", "ॄ": "ṝ", "ॢ": "ḷ", "ॣ": "ḹ",
    "े": "e", "ै": "ai", "ो": "o", "ौ": "au",
}

CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ṅ",
    "च": "c", "छ": "ch", "ज": "j", "झ": "jh", "ञ": "ñ",
    "ट": "ṭ", "ठ": "ṭh", "ड": "ḍ", "ढ": "ḍh", "ण": "ṇ",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "व": "v",
    "श": "ś", "ष": "ṣ", "स": "s", "ह": "h",
}

OTHER_SIGNS = {
    "ँ": "m̐", "ं": "ṁ", "ः": "ḥ", "ऽ": "'", "ॐ": "oṁ",
    "।": "|", "॥": "||",
    "०": "0", "१": "1", "२": "2", "३": "3", "४": "4",
    "५": "5", "६": "6", "७": "7", "८": "8", "९": "9",
}


def has_devanagari(text: str) -> bool:
    return any(ord(c) in DEVANAGARI for c in text)


def transliterate_devanagari(text: str) -> str:
    """Convert Devanāgarī to IAST; other characters pass through.

    Consonants carry an inherent ``a`` unless a virāma or a vowel sign
    follows. Signs of the block without a Sanskrit IAST value (Vedic
    accents, nukta, letters of other languages) raise UnmappedCodePoint.

    >>> transliterate_devanagari("सत्")
    'sat'
    """
    out = []
    pending = False  # a consonant was just emitted and still owes its vowel
    for i, ch in enumerate(text):
        if ch in CONSONANTS:
            if pending:
                out.append("a")
            out.append(CONSONANTS[ch])
            pending = True
            continue
        if ch == VIRAMA and pending:
            pending = False
            continue
        if ch in VOWEL_SIGNS and pending:
            out.append(VOWEL_SIGNS[ch])
            pending = False
            continue
        if pending:
            out.append("a")
            pending = False
        if ch in INDEPENDENT_VOWELS:
            out.append(INDEPENDENT_VOWELS[ch])
        elif ch in OTHER_SIGNS:
            out.append(OTHER_SIGNS[ch])
        elif ord(ch) in DEVANAGARI:
            raise UnmappedCodePoint(ch, i)
        else:
            out.append(ch)
    if pending:
        out.append("a")
    return unicodedata.normalize("NFC", "".join(out))


def normalize_text(data: bytes | str, source: str | None = None) -> str:
    """Decode UTF-8, apply NFC and turn CRLF / CR line ends into LF."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InvalidUtf8(exc.start, source) from None
    else:
        text = data
    if text.startswith("\ufeff"):
        text = text[1:]
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    return unicodedata.normalize("NFC", text)


@dataclass(frozen=True)
class Document:
    path: str
    text: str
    line_starts: tuple[int, ...]  # byte offsets
    line_starts_cp: tuple[int, ...]  # the same lines, in code points

    @classmethod
    def from_text(cls, path: str, text: str) -> Document:
        starts = [0]
        starts_cp = [0]
        pos = 0
        for line in text.split("\n")[:-1]:
            pos += len(line.encode("utf-8")) + 1
            starts.append(pos)
            starts_cp.append(starts_cp[-1] + len(line) + 1)
        return cls(path, text, tuple(starts), tuple(starts_cp))

    def locate(self, cp_offset: int) -> tuple[int, int, int]:
        """Byte offset, 1-based line and 1-based column of a code point offset."""
        return self.locate_many([cp_offset])[0]

    def locate_many(self, cp_offsets: list[int]) -> list[tuple[int, int, int]]:
        """``locate`` for many offsets in one left-to-right pass over the text."""
        order = sorted(range(len(cp_offsets)), key=cp_offsets.__getitem__)
        out: list[tuple[int, int, int]] = [(0, 0, 0)] * len(cp_offsets)
        prev_cp = prev_byte = 0
        for k in order:
            cp = cp_offsets[k]
            line = bisect_right(self.line_starts_cp, cp) - 1
            start = self.line_starts_cp[line]
            if start > prev_cp:
                prev_cp, prev_byte = start, self.line_starts[line]
            prev_byte += len(self.text[prev_cp:cp].encode("utf-8"))
            prev_cp = cp
            out[k] = (prev_byte, line + 1, cp - start + 1)
        return out


def load_text(data: bytes | str, path: str = "<text>") -> Document:
    text = normalize_text(data, path)
    if has_devanagari(text):
        text = transliterate_devanagari(text)
    return Document.from_text(path, text)


def load_document(path: str | Path) -> Document:
    path = Path(path)
    return load_text(path.read_bytes(), str(path))
