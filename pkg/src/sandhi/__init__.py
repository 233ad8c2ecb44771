"""Vowel sandhi over a two-part binary letter schema, and sandhi-aware e-text search."""

from .alphabet import (
    NULL_LETTER,
    CategoryTable,
    LetterCode,
    Phoneme,
    PhonemeClass,
    decode_entry,
    detokenize,
    encode,
    load_table,
    part1_test,
    part2_test,
    retarget,
    tokenize,
)
from .corpus import Document, load_document, load_text, normalize_text, transliterate_devanagari
from .engine import SandhiOutcome, Tag, apply_scutva, vowel_sandhi
from .search import Match, Matcher, build_matcher, naive_search, search_docs
from .wordforms import FormEntry, FormSet, extract_pattern, generate_word_forms

__version__ = "0.1.0"
