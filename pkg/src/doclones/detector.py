"""Clone detection over element pairs, with legitimacy heuristics.

Whole-comment clones are looked for first (only when both comments carry a
free-text summary); otherwise each same-kind comment part is compared.
Matching is case-insensitive on whitespace-collapsed text with the trailing
period stripped, so Type I formatting variations compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .corpus import Corpus, ElementPair, MemberRef, PairKind, Relation, Scope
from .extractor import MethodInfo

_DATA_DIR = Path(__file__).parent / "data"

# Primitive-like return types: cloned "@return" text on these is as
# uninformative as "true or false", so it gets no same-type exemption.
_PRIMITIVE_LIKE = {
    "byte", "short", "int", "long", "float", "double", "boolean", "char",
    "Byte", "Short", "Integer", "Long", "Float", "Double", "Boolean",
    "Character", "String",
}


class CloneKind(Enum):
    WHOLE = "Whole"
    FREE_TEXT = "Summary"
    PARAM = "@param"
    RETURN = "@return"
    THROWS = "@throws"
    FIELD = "Field"


def _default_patterns() -> list:
    patterns = []
    for raw in (_DATA_DIR / "generic_throws.txt").read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            patterns.append(re.compile(line, re.IGNORECASE))
    return patterns


def load_patterns(path) -> list:
    """Read one case-insensitive regular expression per line; '#' comments."""
    patterns = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            patterns.append(re.compile(line, re.IGNORECASE))
    return patterns


@dataclass
class DetectorConfig:
    min_throws_words: int = 4
    generic_throws_patterns: list = field(default_factory=_default_patterns)
    strict_case: bool = False
    # Opposite reading of the exception heuristic: exempt every clone that
    # merely describes the same exception type, with no word-count gate.
    legacy_throws_exemption: bool = False


@dataclass
class CloneRecord:
    class1_fqn: str
    class2_fqn: str
    elem1_sig: str
    elem2_sig: str
    kind: CloneKind
    cloned_text: str
    legit: bool
    scope: Scope
    aux: tuple | None = None     # (param names) or (exception types)
    first: MemberRef | None = None
    second: MemberRef | None = None
    # unlabeled text used for similarity scoring; differs from cloned_text
    # only for whole-comment clones, whose display form keeps tag markers
    plain_text: str = ""


def comparable_text(part_text: str, strict: bool = False) -> str:
    """Canonical clone-equality key for a cleaned comment part."""
    text = re.sub(r"\s+", " ", part_text).strip()
    if text.endswith("."):
        text = text[:-1]
    return text if strict else text.lower()


def _display(element) -> str:
    return element.signature if isinstance(element, MethodInfo) else element.name


def is_legitimate(record: CloneRecord, e1, e2, cfg: DetectorConfig) -> bool:
    """Decide whether a detected clone is justified by code structure."""
    both_methods = isinstance(e1, MethodInfo) and isinstance(e2, MethodInfo)
    if (both_methods and e1.is_constructor and e2.is_constructor
            and not e1.params and not e2.params):
        return True  # parameterless constructors may share generic comments
    if record.kind is CloneKind.WHOLE:
        return False
    if record.kind is CloneKind.FIELD:
        return record.class1_fqn != record.class2_fqn and e1.name == e2.name
    if both_methods and e1.simple_name == e2.simple_name:
        return True  # overloaded (or overriding) names
    if record.kind is CloneKind.PARAM:
        return record.aux is not None and record.aux[0] == record.aux[1]
    if record.kind is CloneKind.RETURN:
        return (bool(e1.return_type)
                and e1.return_type == e2.return_type
                and e1.return_type.split(".")[-1] not in _PRIMITIVE_LIKE)
    if record.kind is CloneKind.THROWS:
        if record.aux is None or record.aux[0] != record.aux[1]:
            return False
        if cfg.legacy_throws_exemption:
            return True
        key = comparable_text(record.cloned_text)
        if len(key.split()) < cfg.min_throws_words:
            return False
        return not any(p.fullmatch(key) for p in cfg.generic_throws_patterns)
    return False


def compare_pair(pair: ElementPair, corpus: Corpus, cfg: DetectorConfig = None) -> list:
    """Detect whole and part clones between one pair of documented members."""
    cfg = cfg or DetectorConfig()
    e1 = corpus.member(pair.first)
    e2 = corpus.member(pair.second)
    d1, d2 = e1.doc, e2.doc
    if d1 is None or d2 is None:
        return []
    scope = _scope_of(pair.relation)

    def make(kind, text, aux=None, plain=None):
        rec = CloneRecord(
            class1_fqn=pair.first.class_fqn,
            class2_fqn=pair.second.class_fqn,
            elem1_sig=_display(e1),
            elem2_sig=_display(e2),
            kind=kind,
            cloned_text=text,
            legit=False,
            scope=scope,
            aux=aux,
            first=pair.first,
            second=pair.second,
            plain_text=plain if plain is not None else text,
        )
        rec.legit = is_legitimate(rec, e1, e2, cfg)
        return rec

    def same(a: str, b: str) -> bool:
        return bool(a) and bool(b) and (
            comparable_text(a, cfg.strict_case) == comparable_text(b, cfg.strict_case))

    if pair.kind is PairKind.FIELD_PAIR:
        if same(d1.whole_text, d2.whole_text):
            return [make(CloneKind.FIELD, d1.whole_text)]
        return []

    # whole-comment clones need a free-text summary on both sides;
    # otherwise a lone cloned tag is reported as that part, not as a whole
    if d1.free_text and d2.free_text and same(d1.whole_text, d2.whole_text):
        return [make(CloneKind.WHOLE, d1.whole_labeled, plain=d1.whole_text)]

    records = []
    if same(d1.free_text, d2.free_text):
        records.append(make(CloneKind.FREE_TEXT, d1.free_text))
    for name1, text1 in d1.params:
        for name2, text2 in d2.params:
            if same(text1, text2):
                records.append(make(CloneKind.PARAM, text1, aux=(name1, name2)))
    if d1.returns and d2.returns and same(d1.returns, d2.returns):
        records.append(make(CloneKind.RETURN, d1.returns))
    for type1, text1 in d1.throws_list:
        for type2, text2 in d2.throws_list:
            if same(text1, text2):
                records.append(make(CloneKind.THROWS, text1, aux=(type1, type2)))
    return records


def _scope_of(relation: Relation) -> Scope:
    if relation is Relation.SAME_CLASS:
        return Scope.INTRA_CLASS
    if relation is Relation.ANCESTOR:
        return Scope.HIERARCHY
    return Scope.INTER_CLASS


def detect(corpus: Corpus, pair_list, cfg: DetectorConfig = None) -> list:
    """Run compare_pair over an ordered pair list, keeping canonical order."""
    cfg = cfg or DetectorConfig()
    records = []
    for pair in pair_list:
        records.extend(compare_pair(pair, corpus, cfg))
    return records
