"""Random in-memory corpora for property and oracle tests."""

from __future__ import annotations

import random

from doclones.corpus import Corpus
from doclones.extractor import FieldInfo, MethodInfo, RawJavadoc, parse_javadoc

_WORDS = ["value", "element", "stream", "buffer", "node", "index", "cache",
          "token", "writer", "reader", "count", "entry"]
_TYPES = ["int", "boolean", "String", "List", "Node", "Buffer", "void", "T"]
_EXCEPTIONS = ["IOException", "IllegalStateException", "ParseException"]
# small pools on purpose: collisions are what create clones
_TEXT_POOL = [
    "returns the first element",
    "returns the first element",
    "on error",
    "if the underlying stream cannot be read from disk",
    "the value to insert",
    "the index of the entry",
    "true or false",
    "Removes the entry at the given position.",
    "removes the entry at the given position",
    "Creates a new buffer with the default capacity.",
    "",
]
_NAMES = ["get", "poll", "insert", "remove", "flush"]


def random_method(rng: random.Random, class_name: str, order: int) -> MethodInfo:
    is_ctor = rng.random() < 0.15
    name = class_name if is_ctor else rng.choice(_NAMES) + rng.choice(["", "First", "All"])
    n_params = rng.randint(0, 2)
    params = [(rng.choice([t for t in _TYPES if t != "void"]), rng.choice(_WORDS))
              for _ in range(n_params)]
    return_type = "" if is_ctor else rng.choice(_TYPES)

    doc_lines = []
    if rng.random() < 0.7:
        doc_lines.append(rng.choice(_TEXT_POOL))
    for _, pname in params:
        if rng.random() < 0.7:
            doc_lines.append(f"@param {pname} {rng.choice(_TEXT_POOL)}")
    if return_type not in ("", "void") and rng.random() < 0.7:
        doc_lines.append(f"@return {rng.choice(_TEXT_POOL)}")
    if rng.random() < 0.4:
        doc_lines.append(f"@throws {rng.choice(_EXCEPTIONS)} {rng.choice(_TEXT_POOL)}")

    raw = RawJavadoc("\n".join(doc_lines)) if (doc_lines and rng.random() < 0.9) else None
    param_display = ", ".join(f"{t} {n}" for t, n in params)
    if is_ctor:
        signature = f"{name}({param_display})"
    else:
        signature = f"{return_type} {name}({param_display})"
    return MethodInfo(
        simple_name=name,
        is_constructor=is_ctor,
        params=params,
        return_type="" if is_ctor else return_type,
        signature=signature,
        raw_doc=raw,
        doc=parse_javadoc(raw) if raw else None,
        decl_order=order,
    )


def random_field(rng: random.Random, order: int) -> FieldInfo:
    raw = None
    if rng.random() < 0.7:
        raw = RawJavadoc(rng.choice(_TEXT_POOL))
    return FieldInfo(
        name=rng.choice(_WORDS) + rng.choice(["", "Count", "Cache"]),
        type_name=rng.choice([t for t in _TYPES if t != "void"]),
        raw_doc=raw,
        doc=parse_javadoc(raw) if raw else None,
        decl_order=order,
    )


def random_corpus(rng: random.Random, max_classes: int = 10, max_members: int = 8) -> Corpus:
    from doclones.extractor import ClassInfo

    corpus = Corpus()
    n_classes = rng.randint(1, max_classes)
    fqns = []
    for ci in range(n_classes):
        package = rng.choice(["com.alpha", "com.beta", ""])
        simple = f"Widget{ci}"
        fqn = f"{package}.{simple}" if package else simple
        info = ClassInfo(
            fqn=fqn, simple_name=simple, package=package,
            supertype_name=None, imports=[], source_path=f"{simple}.java",
            decl_order=ci,
        )
        n_methods = rng.randint(0, max_members)
        for mi in range(n_methods):
            info.methods.append(random_method(rng, simple, mi))
        for fi in range(rng.randint(0, max(0, max_members - n_methods))):
            info.fields.append(random_field(rng, fi))
        corpus.classes[fqn] = info
        fqns.append(fqn)

    # acyclic hierarchy: only link to earlier classes
    for i, fqn in enumerate(fqns):
        if i > 0 and rng.random() < 0.4:
            corpus.hierarchy[fqn] = fqns[rng.randrange(i)]
    return corpus
