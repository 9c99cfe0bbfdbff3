"""Bag-of-words representations of comments and member signatures.

The pipeline turns text into stems: identifiers are split into words,
abbreviations expanded, stopwords dropped, and the remainder Porter-stemmed.
Two bags are then compared with cosine similarity over their counts.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import sqrt
from pathlib import Path
from typing import Iterable, Union

from .stemming import porter_stem

BagOfWords = Counter

_DATA_DIR = Path(__file__).parent / "data"

_WORD_RE = re.compile(r"[A-Za-z0-9]+")
_SENTENCE_END_RE = re.compile(r"(?<=[.!?])\s+")
_CAMEL_BOUNDARY_RE = re.compile(
    r"(?<=[a-z])(?=[A-Z])"          # lower -> upper
    r"|(?<=[A-Z])(?=[A-Z][a-z])"    # run of capitals followed by a word
    r"|(?<=[A-Za-z])(?=[0-9])"      # letter -> digit
    r"|(?<=[0-9])(?=[A-Za-z])"      # digit -> letter
)


def _read_data_lines(path: Path) -> list[str]:
    lines = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


@dataclass(frozen=True)
class StopwordSet:
    """Lowercase words excluded from every bag of words."""

    words: frozenset

    def __contains__(self, word: str) -> bool:
        return word in self.words

    @classmethod
    def load(cls, path: Union[str, Path]) -> "StopwordSet":
        return cls(frozenset(w.lower() for w in _read_data_lines(Path(path))))

    @classmethod
    def default(cls) -> "StopwordSet":
        return _default_stopwords()


@dataclass(frozen=True)
class AbbrevTable:
    """Maps lowercase abbreviations to their expansion word sequences."""

    entries: dict

    def expand(self, word: str) -> tuple:
        return self.entries.get(word, (word,))

    @classmethod
    def load(cls, path: Union[str, Path]) -> "AbbrevTable":
        entries = {}
        for line in _read_data_lines(Path(path)):
            abbr, _, expansion = line.partition("=")
            words = tuple(expansion.lower().split())
            if abbr and words:
                entries[abbr.strip().lower()] = words
        return cls(entries)

    @classmethod
    def default(cls) -> "AbbrevTable":
        return _default_abbreviations()


@lru_cache(maxsize=1)
def _default_stopwords() -> StopwordSet:
    return StopwordSet.load(_DATA_DIR / "stopwords.txt")


@lru_cache(maxsize=1)
def _default_abbreviations() -> AbbrevTable:
    return AbbrevTable.load(_DATA_DIR / "abbreviations.txt")


def split_identifier(ident: str) -> list[str]:
    """Split an identifier into lowercase words.

    Handles underscores, dollar signs, digit boundaries and camel case;
    a run of capitals followed by a lowercase letter splits before the
    last capital ("XMLParser" -> xml, parser).
    """
    words = []
    for part in re.split(r"[_$]+", ident):
        for piece in _CAMEL_BOUNDARY_RE.split(part):
            if piece:
                words.append(piece.lower())
    return words


def normalize_tokens(words: Iterable[str], abbrev: AbbrevTable, stop: StopwordSet) -> list[str]:
    """Expand abbreviations, drop stopwords, stem, in that order."""
    stems = []
    for word in words:
        for expanded in abbrev.expand(word):
            if expanded in stop:
                continue
            stem = porter_stem(expanded)
            if len(stem) > 1:  # single letters carry no lexical signal
                stems.append(stem)
    return stems


def split_sentences(text: str) -> list[str]:
    """Split cleaned text into sentences terminated by '.', '!' or '?'."""
    return [s for s in _SENTENCE_END_RE.split(text) if s]


def _words_of(text: str) -> list[str]:
    words = []
    for token in _WORD_RE.findall(text):
        words.extend(split_identifier(token))
    return words


def text_bow(text: str, abbrev: AbbrevTable = None, stop: StopwordSet = None) -> BagOfWords:
    """Bag of stems for a cleaned comment text."""
    abbrev = abbrev or _default_abbreviations()
    stop = stop or _default_stopwords()
    bag = Counter()
    for sentence in split_sentences(text):
        bag.update(normalize_tokens(_words_of(sentence), abbrev, stop))
    return bag


def signature_bow(element, abbrev: AbbrevTable = None, stop: StopwordSet = None) -> BagOfWords:
    """Bag of stems for a method signature or a field declaration.

    Methods contribute their simple name, every parameter type and name,
    and the return type; fields contribute their name and type.
    """
    abbrev = abbrev or _default_abbreviations()
    stop = stop or _default_stopwords()
    words = []
    if hasattr(element, "params"):  # method
        words.extend(split_identifier(element.simple_name))
        for type_name, param_name in element.params:
            words.extend(_words_of(type_name))
            words.extend(split_identifier(param_name))
        if element.return_type:
            words.extend(_words_of(element.return_type))
    else:  # field
        words.extend(split_identifier(element.name))
        words.extend(_words_of(element.type_name))
    return Counter(normalize_tokens(words, abbrev, stop))


def cosine(a: BagOfWords, b: BagOfWords) -> float:
    """Cosine similarity of two count vectors; 0.0 when either is empty."""
    if not a or not b:
        return 0.0
    dot = sum(count * b[token] for token, count in a.items() if token in b)
    if dot == 0:
        return 0.0
    norm_sq = sum(c * c for c in a.values()) * sum(c * c for c in b.values())
    return min(dot / sqrt(norm_sq), 1.0)
