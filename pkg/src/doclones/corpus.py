"""Project model: all extracted classes, their hierarchy, and element pairs.

Pairs are enumerated per analysis scope. The three scopes partition the
set of documented member pairs: same class, ancestor/descendant classes,
and unrelated classes.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Union

from .extractor import ClassInfo, FieldInfo, MethodInfo, extract_classes

log = logging.getLogger(__name__)


class Scope(Enum):
    INTRA_CLASS = "intra"
    HIERARCHY = "hierarchy"
    INTER_CLASS = "inter"


class Target(Enum):
    METHODS = "methods"
    FIELDS = "fields"
    ALL = "all"


class PairKind(Enum):
    METHOD_PAIR = "method"
    FIELD_PAIR = "field"


class Relation(Enum):
    SAME_CLASS = "same_class"
    ANCESTOR = "ancestor"
    UNRELATED = "unrelated"


@dataclass(frozen=True, order=True)
class MemberRef:
    """Reference to one documented member: class fqn + member list index."""

    class_fqn: str
    kind: PairKind
    index: int


@dataclass(frozen=True)
class ElementPair:
    kind: PairKind
    first: MemberRef
    second: MemberRef
    relation: Relation


@dataclass
class Corpus:
    classes: dict = field(default_factory=dict)    # fqn -> ClassInfo
    hierarchy: dict = field(default_factory=dict)  # fqn -> superclass fqn

    def member(self, ref: MemberRef) -> Union[MethodInfo, FieldInfo]:
        cls = self.classes[ref.class_fqn]
        members = cls.methods if ref.kind is PairKind.METHOD_PAIR else cls.fields
        return members[ref.index]

    def ancestors(self, fqn: str) -> list:
        """Transitive superclass chain, nearest first."""
        chain = []
        seen = {fqn}
        node = fqn
        while node in self.hierarchy:
            node = self.hierarchy[node]
            if node in seen:
                break
            chain.append(node)
            seen.add(node)
        return chain


def build_corpus(roots: Iterable[Union[str, Path]]) -> Corpus:
    """Extract every .java file under the given roots into one corpus.

    Files are processed in sorted path order; the first declaration of a
    duplicated fqn wins.
    """
    paths = []
    for root in roots:
        root = Path(root)
        if root.is_file() and root.suffix == ".java":
            paths.append(root)
        else:
            paths.extend(p for p in root.rglob("*.java") if p.is_file())
    paths = sorted(set(paths), key=str)

    corpus = Corpus()
    if not paths:
        log.warning("empty corpus: no .java files found under the given roots")
        return corpus

    for path in paths:
        data = path.read_bytes()
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError:
            log.warning("%s: invalid UTF-8 sequences replaced", path)
            text = data.decode("utf-8", errors="replace")
        for cls in extract_classes(text, path):
            if cls.fqn in corpus.classes:
                log.warning("duplicate class %s in %s ignored (first definition kept)",
                            cls.fqn, path)
                continue
            corpus.classes[cls.fqn] = cls
    if not corpus.classes:
        log.warning("empty corpus: no classes extracted")
    return corpus


def resolve_supertypes(corpus: Corpus) -> Corpus:
    """Link each class to its superclass when it lives inside the corpus.

    Resolution of the raw extends name: exact fqn match, then an import
    ending in the name, then same-package lookup. Cycles are broken by
    dropping the closing edge.
    """
    corpus.hierarchy.clear()
    for fqn in sorted(corpus.classes):
        cls = corpus.classes[fqn]
        raw = cls.supertype_name
        if not raw:
            continue
        target = _resolve_name(corpus, cls, raw)
        if target is not None and target != fqn:
            corpus.hierarchy[fqn] = target
    _break_cycles(corpus.hierarchy)
    return corpus


def _resolve_name(corpus: Corpus, cls: ClassInfo, raw: str) -> str | None:
    if raw in corpus.classes:
        return raw
    simple = raw.rsplit(".", 1)[-1]
    for imp in cls.imports:
        if imp.endswith("." + simple) and imp in corpus.classes:
            return imp
        if imp.endswith(".*"):
            candidate = imp[:-1] + simple
            if candidate in corpus.classes:
                return candidate
    candidate = f"{cls.package}.{raw}" if cls.package else raw
    if candidate in corpus.classes:
        return candidate
    return None


def _break_cycles(hierarchy: dict) -> None:
    for start in sorted(hierarchy):
        seen = {start}
        node = start
        while node in hierarchy:
            parent = hierarchy[node]
            if parent in seen:
                log.warning("hierarchy cycle broken at %s -> %s", node, parent)
                del hierarchy[node]
                break
            seen.add(parent)
            node = parent


def _documented(corpus: Corpus, fqn: str, kind: PairKind) -> list:
    cls = corpus.classes[fqn]
    members = cls.methods if kind is PairKind.METHOD_PAIR else cls.fields
    return [MemberRef(fqn, kind, m.decl_order) for m in members if m.raw_doc is not None]


def _kinds_for(target: Target) -> list:
    if target is Target.METHODS:
        return [PairKind.METHOD_PAIR]
    if target is Target.FIELDS:
        return [PairKind.FIELD_PAIR]
    return [PairKind.METHOD_PAIR, PairKind.FIELD_PAIR]


def pairs(corpus: Corpus, scope: Scope, target: Target = Target.ALL) -> list:
    """Enumerate documented member pairs for one scope, in canonical order.

    Hierarchy pairs put the descendant's member first so that reports can
    name the subclass and its superclass. Undocumented members never pair.
    """
    result = []
    fqns = sorted(corpus.classes)
    kinds = _kinds_for(target)

    if scope is Scope.INTRA_CLASS:
        for fqn in fqns:
            for kind in kinds:
                refs = _documented(corpus, fqn, kind)
                for i in range(len(refs)):
                    for j in range(i + 1, len(refs)):
                        result.append(ElementPair(kind, refs[i], refs[j], Relation.SAME_CLASS))
        return result

    if scope is Scope.HIERARCHY:
        for fqn in fqns:
            for ancestor in corpus.ancestors(fqn):
                for kind in kinds:
                    for d_ref in _documented(corpus, fqn, kind):
                        for a_ref in _documented(corpus, ancestor, kind):
                            result.append(ElementPair(kind, d_ref, a_ref, Relation.ANCESTOR))
        return result

    for i, fqn1 in enumerate(fqns):
        anc1 = set(corpus.ancestors(fqn1))
        for fqn2 in fqns[i + 1:]:
            if fqn2 in anc1 or fqn1 in set(corpus.ancestors(fqn2)):
                continue
            for kind in kinds:
                for r1 in _documented(corpus, fqn1, kind):
                    for r2 in _documented(corpus, fqn2, kind):
                        result.append(ElementPair(kind, r1, r2, Relation.UNRELATED))
    return result
