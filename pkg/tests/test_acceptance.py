"""Acceptance criteria AC1-AC8, one test each.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""

from __future__ import annotations

import random
import time
import tracemalloc
import unicodedata

import pytest

from sandhi.alphabet import (
    CLASS_RANGES,
    PhonemeClass,
    decode_entry,
    detokenize,
    encode,
    inventory,
    load_table,
    retarget,
    tokenize,
)
from sandhi.cli import main
from sandhi.corpus import load_document, load_text, normalize_text
from sandhi.engine import apply_scutva, vowel_sandhi
from sandhi.search import build_matcher, naive_search, search_docs
from sandhi.wordforms import PREFIX_WORDS, SUFFIX_WORDS, generate_word_forms, vowels

INV = inventory()
VOWELS = vowels()
CONSONANTS = [s for s, p in INV.items() if p.kind is PhonemeClass.CONSONANT]


@pytest.mark.criterion("AC1 ścutva fidelity (byte-exact, <1 ms each)")
@pytest.mark.parametrize(
    "x, y, joined",
    [
        ("sat", "cit", "saccit"),
        ("śārṅgin", "jaya", "śārṅgiñjaya"),
        ("rāmas", "cinoti", "rāmaścinoti"),
        ("praś", "naḥ", "praśnaḥ"),
    ],
)
def test_ac1_scutva(x, y, joined):
    X, Y = tokenize(x), tokenize(y)
    apply_scutva(X, Y)  # warm caches
    reps = 200
    start = time.perf_counter()
    for _ in range(reps):
        out = apply_scutva(X, Y)
    per_call = (time.perf_counter() - start) / reps
    assert out.text.encode() == joined.encode()
    assert per_call < 1e-3


VOWEL_TABLE = [
    ("go", "agram", "gavāgram", ("6.1.123", "6.1.101")),
    ("te", "atra", "te'tra", ("6.1.109",)),
    ("muni", "indra", "munīndra", ("6.1.101",)),
    ("śivāya", "om", "śivāyom", ("6.1.95",)),
    ("upa", "eti", "upaiti", ("6.1.89",)),
    ("upa", "eva", "upeva", ("6.1.94",)),
    ("pra", "ṛcchati", "prārcchati", ("6.1.91",)),
    ("kambala", "ṛṇa", "kambalārṇa", ("6.1.91",)),
    ("sā", "eva", "saiva", ("6.1.88",)),
    ("deva", "indra", "devendra", ("6.1.87",)),
    ("prabho", "iti", "prabhaviti", ("6.1.78",)),
    ("dadhi", "atra", "dadhyatra", ("6.1.77",)),
    ("sva", "īra", "svaira", ("6.1.89",)),
    ("rāmaḥ", "gacchati", "rāmaḥgacchati", ()),
]


@pytest.mark.criterion("AC2 vowel-sandhi oracle table (14 joins, byte-exact, rule lists)")
def test_ac2_vowel_table():
    assert len(VOWEL_TABLE) >= 14
    for x, y, joined, rules in VOWEL_TABLE:
        out = vowel_sandhi(x, y)
        assert out.text.encode() == joined.encode(), (x, y)
        assert out.rules_applied == rules, (x, y)
    # precedence: 6.1.89 beats 6.1.94, 6.1.91 beats 6.1.87
    assert vowel_sandhi("upa", "eti").text == "upaiti"
    assert vowel_sandhi("pra", "ṛcchati").text == "prārcchati"


ALIGNED_PAIRS = [(13, 14), (10, 16), (11, 16), (12, 17), (15, 18), (10, 20), (11, 20), (30, 32), (8, 9)]
EXPECTED_ALIGNMENT = {
    (13, 14): ["ai", "au"],
    (10, 16): ["e", "o", "ar", "al"],
    (11, 16): ["e", "o", "ar"],
    (12, 17): ["ār", "ār", "āl"],
    (15, 18): ["av", "āv", "ay", "āy"],
    (10, 20): ["y", "v", "r", "l"],
    (11, 20): ["y", "v", "r"],
    (30, 32): ["t", "th", "d", "dh", "n", "s"],
    (8, 9): ["ī", "ū", "ṝ", "ā"],
}


@pytest.mark.criterion("AC3 schema structural suite (exhaustive, <1 s)")
def test_ac3_schema():
    start = time.perf_counter()
    table = load_table()
    for surface, p in INV.items():
        code = encode(p)
        flags = [n for n in range(4) if code.x1(n)]
        assert len(flags) == 1
        for cat, idx in code.part2:
            assert cat in CLASS_RANGES[flags[0]]
            assert idx < 16
            entry = table[cat].entries[idx]
            if entry.sublist:
                assert p in entry.letters
            else:
                assert decode_entry(cat, idx) == [p]
    for a, b in ALIGNED_PAIRS:
        got = []
        for entry in table[a].entries:
            letter = entry.letters[0]
            got.append(detokenize(retarget(encode(letter), a, b)))
        assert got == EXPECTED_ALIGNMENT[(a, b)], (a, b)
    assert time.perf_counter() - start < 1.0


def _random_iast(rng, max_len=64):
    letters = sorted(INV)
    out = ""
    while True:
        nxt = rng.choice(letters)
        if len(out) + len(nxt) > max_len or rng.random() < 0.03:
            return out
        out += nxt


@pytest.mark.criterion("AC4 roundtrips (tokenize, normalize, composed vs decomposed)")
def test_ac4_roundtrips(tmp_path):
    rng = random.Random(2024)
    for _ in range(1000):
        s = _random_iast(rng)
        assert len(s) <= 64
        assert detokenize(tokenize(s)) == s
        b = s.encode()
        once = normalize_text(b)
        assert normalize_text(once.encode()) == once
    text = "\n".join(" ".join(_random_iast(rng, 12) for _ in range(8)) for _ in range(50))
    (tmp_path / "nfc.txt").write_bytes(unicodedata.normalize("NFC", text).encode())
    (tmp_path / "nfd.txt").write_bytes(unicodedata.normalize("NFD", text).encode())
    a = load_document(tmp_path / "nfc.txt")
    b = load_document(tmp_path / "nfd.txt")
    assert (a.text, a.line_starts) == (b.text, b.line_starts)


@pytest.mark.criterion("AC5 word-form desk check (iti, te, asamṛddhiḥ)")
def test_ac5_wordforms():
    iti = generate_word_forms("iti")
    assert {"iti", "ity", "itī", "eti", "īti"} <= iti.patterns
    assert "te'" in generate_word_forms("te")
    asam = generate_word_forms("asamṛddhiḥ")
    assert "āsamṛddhiḥ" in asam
    for forms in (iti, generate_word_forms("te"), asam):
        for e in forms:
            assert e.pattern in e.full_join


def _random_word(rng, vowel_edges):
    parts = []
    if vowel_edges and rng.random() < 0.7:
        parts.append(rng.choice(VOWELS))
    for _ in range(rng.randint(1, 3)):
        parts.append(rng.choice(CONSONANTS))
        parts.append(rng.choice(VOWELS))
    if rng.random() < 0.3:
        parts.append(rng.choice(CONSONANTS))
    return "".join(parts)


def _contexts(z):
    zl = tokenize(z)
    joins = [vowel_sandhi(zl, tokenize(y)).text for y in VOWELS + list(SUFFIX_WORDS)]
    joins += [vowel_sandhi(tokenize(x), zl).text for x in list(PREFIX_WORDS) + VOWELS]
    return joins


@pytest.mark.criterion("AC6 search completeness on 200 planted corpora (<10 s)")
def test_ac6_planted_corpora():
    rng = random.Random(6)
    start = time.perf_counter()
    planted_total = found_total = 0
    for n in range(200):
        z = _random_word(rng, vowel_edges=True)
        forms = generate_word_forms(z)
        joins = _contexts(z)
        words, sites, pos = [], [], 0
        for _ in range(rng.randint(10, 25)):
            if rng.random() < 0.3:
                w = rng.choice(joins)
                sites.append((pos, pos + len(w)))
            else:
                w = _random_word(rng, vowel_edges=False)
            words.append(w)
            pos += len(w) + 1
        text = " ".join(words)
        doc = load_text(text.encode(), f"corpus{n}.txt")
        matches = search_docs(build_matcher(forms.patterns), [doc])
        assert matches == naive_search(forms.patterns, [doc])
        starts = [len(text.encode()[: m.byte_offset].decode()) for m in matches]
        for lo, hi in sites:
            planted_total += 1
            if any(lo <= s and s + len(m.pattern) <= hi for s, m in zip(starts, matches)):
                found_total += 1
    elapsed = time.perf_counter() - start
    assert planted_total > 0
    assert found_total == planted_total
    assert elapsed < 10.0


@pytest.mark.criterion("AC7 end-to-end āsamṛddhiḥ scenario with negative control")
def test_ac7_end_to_end(tmp_path, capsys):
    line = vowel_sandhi("na", "asamṛddhiḥ").text
    assert line == "nāsamṛddhiḥ"
    path = tmp_path / "corpus.txt"
    path.write_text(f"tasya {line} bhavati\n", encoding="utf-8")

    code = main(["search", "asamṛddhiḥ", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines() == [f"{path}:1:8  āsamṛddhiḥ  6.1.101"]

    # negative control: the literal word alone is not in the text
    doc = load_document(path)
    assert search_docs(build_matcher({"asamṛddhiḥ"}), [doc]) == []
    assert naive_search({"asamṛddhiḥ"}, [doc]) == []


@pytest.mark.criterion("AC8 performance smoke (1 MB, <=200 patterns, <1 s, <100 MB)")
def test_ac8_performance():
    rng = random.Random(8)
    patterns: set[str] = set()
    while len(patterns) < 200:
        for p in generate_word_forms(_random_word(rng, vowel_edges=True)).patterns:
            if len(patterns) < 200:
                patterns.add(p)
    words = []
    size = 0
    while size < 1_000_000:
        w = _random_word(rng, vowel_edges=True)
        words.append(w)
        size += len(w.encode()) + 1
    doc = load_text(" ".join(words).encode(), "big.txt")
    assert len(doc.text.encode()) >= 1_000_000
    assert len(patterns) <= 200

    start = time.perf_counter()
    matcher = build_matcher(patterns)
    matches = search_docs(matcher, [doc])
    elapsed = time.perf_counter() - start
    print(f"\n1 MB scan: {elapsed:.3f} s, {len(matches)} matches")

    tracemalloc.start()
    search_docs(build_matcher(patterns), [doc])
    _, peak = tracemalloc.get_traced_memory()
    tracemalloc.stop()
    print(f"peak traced memory: {peak / 1e6:.1f} MB")

    assert elapsed < 1.0
    assert peak < 100e6
