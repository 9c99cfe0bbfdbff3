"""Java source scanning: classes, members and their Javadoc blocks.

A token-level scanner (no full grammar): comments and literals are masked
out, then class bodies are walked chunk by chunk to recover declarations,
extends clauses, imports and the doc comment preceding each member.
Javadoc blocks are decomposed into cleaned, labeled comment parts.
"""

from __future__ import annotations

import html
import logging
import re
from bisect import bisect_right
from dataclasses import dataclass, field

log = logging.getLogger(__name__)

_MODIFIERS = {
    "public", "protected", "private", "static", "final", "abstract",
    "synchronized", "native", "strictfp", "default", "transient",
    "volatile", "sealed", "non-sealed",
}

_TYPE_KEYWORD_RE = re.compile(r"(?<![.\w$])(class|interface|enum)\s+([A-Za-z_$][\w$]*)")
_PACKAGE_RE = re.compile(r"^\s*package\s+([\w.]+)\s*;", re.M)
_IMPORT_RE = re.compile(r"\bimport\s+(static\s+)?([\w.]+(?:\.\*)?)\s*;")
_BLOCK_TAG_RE = re.compile(r"^\s*@(\w+)(.*)$")
_GUTTER_RE = re.compile(r"^[ \t]*\*+[ \t]?")


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RawJavadoc:
    """Verbatim comment body between ``/**`` and ``*/``, gutters stripped."""

    text: str


@dataclass(frozen=True)
class CommentDoc:
    """A Javadoc block decomposed into cleaned, labeled parts.

    ``whole_text`` concatenates every non-empty part in source order;
    ``whole_labeled`` is the same with ``@param``/``@return``/``@throws``
    markers kept, the form shown in reports for whole-comment clones.
    """

    free_text: str = ""
    params: tuple = ()       # ordered (param_name, cleaned_text)
    returns: str | None = None
    throws_list: tuple = ()  # ordered (exception_type_name, cleaned_text)
    whole_text: str = ""
    whole_labeled: str = ""


@dataclass
class FieldInfo:
    name: str
    type_name: str
    raw_doc: RawJavadoc | None = None
    doc: CommentDoc | None = None
    decl_order: int = 0


@dataclass
class MethodInfo:
    simple_name: str
    is_constructor: bool
    params: list  # ordered (type_name, param_name)
    return_type: str
    signature: str
    raw_doc: RawJavadoc | None = None
    doc: CommentDoc | None = None
    decl_order: int = 0


@dataclass
class ClassInfo:
    fqn: str
    simple_name: str
    package: str
    supertype_name: str | None
    imports: list
    methods: list = field(default_factory=list)
    fields: list = field(default_factory=list)
    source_path: str = ""
    decl_order: int = 0


# ---------------------------------------------------------------------------
# Comment cleaning and Javadoc parsing
# ---------------------------------------------------------------------------

def clean_text(raw: str) -> str:
    """Normalize a comment fragment to plain prose.

    Drops HTML tags, @see lines and {@link}/{@linkplain} constructs,
    unwraps {@code}/{@literal}, and collapses all whitespace runs.
    """
    text = re.sub(r"(?m)^\s*@see\b.*$", " ", raw)
    text = re.sub(r"\{@(?:link|linkplain|see)\b[^}]*\}", " ", text)
    # keep {@code}/{@literal} payloads; escape angle brackets so the
    # HTML pass leaves them alone and the final unescape restores them
    text = re.sub(
        r"\{@(?:code|literal)\b\s*([^}]*)\}",
        lambda m: m.group(1).replace("<", "&lt;").replace(">", "&gt;"),
        text,
    )
    text = re.sub(r"\{@\w+[^}]*\}", " ", text)
    text = re.sub(r"</?[A-Za-z][^>]*>", " ", text)
    text = html.unescape(text)
    return re.sub(r"\s+", " ", text).strip()


def parse_javadoc(raw: RawJavadoc) -> CommentDoc:
    """Split a Javadoc body into free text, @param, @return and @throws parts."""
    blocks = []  # (tag or None, body text)
    tag = None
    buf: list[str] = []
    for line in raw.text.split("\n"):
        m = _BLOCK_TAG_RE.match(line)
        if m:
            blocks.append((tag, "\n".join(buf)))
            tag = m.group(1).lower()
            buf = [m.group(2)]
        else:
            buf.append(line)
    blocks.append((tag, "\n".join(buf)))

    free_text = ""
    params = []
    returns = None
    throws = []
    ordered_parts = []  # (label or None, cleaned_text) in source order

    for tag, body in blocks:
        if tag is None:
            free_text = clean_text(body)
            if free_text:
                ordered_parts.append((None, free_text))
        elif tag == "param":
            name, text = _split_leading_token(body)
            if not name:
                log.warning("@param tag without a parameter name")
            params.append((name, text))
            if text:
                ordered_parts.append(("@param", text))
        elif tag == "return":
            text = clean_text(body)
            if returns is None:
                returns = text
                if text:
                    ordered_parts.append(("@return", text))
            else:
                log.warning("duplicate @return tag ignored")
        elif tag in ("throws", "exception"):
            name, text = _split_leading_token(body)
            if not name:
                log.warning("@%s tag without an exception type", tag)
            throws.append((name, text))
            if text:
                ordered_parts.append(("@throws", text))
        # other block tags (@see, @since, @author, ...) carry no comparable text

    whole_text = " ".join(text for _, text in ordered_parts)
    whole_labeled = " ".join(
        text if label is None else f"{label} {text}" for label, text in ordered_parts
    )
    return CommentDoc(
        free_text=free_text,
        params=tuple(params),
        returns=returns,
        throws_list=tuple(throws),
        whole_text=whole_text,
        whole_labeled=whole_labeled,
    )


def _split_leading_token(body: str) -> tuple[str, str]:
    m = re.match(r"\s*(\S+)([\s\S]*)$", body)
    if not m:
        return "", clean_text(body)
    return m.group(1), clean_text(m.group(2))


# ---------------------------------------------------------------------------
# Source masking
# ---------------------------------------------------------------------------

def _mask_source(source: str) -> tuple[str, list[tuple[int, int, str]]]:
    """Blank out comments and literals, keeping offsets and newlines.

    Returns the masked text plus every Javadoc comment as
    (start_offset, end_offset, body_text_with_gutters_stripped).
    """
    out = list(source)
    docs = []
    n = len(source)
    i = 0

    def blank(a: int, b: int) -> None:
        for k in range(a, b):
            if out[k] != "\n":
                out[k] = " "

    while i < n:
        ch = source[i]
        nxt = source[i + 1] if i + 1 < n else ""
        if ch == "/" and nxt == "/":
            j = source.find("\n", i)
            j = n if j == -1 else j
            blank(i, j)
            i = j
        elif ch == "/" and nxt == "*":
            close = source.find("*/", i + 2)
            j = n if close == -1 else close + 2
            if close != -1 and source.startswith("/**", i) and close >= i + 3:
                body = source[i + 3 : close]
                docs.append((i, j, _strip_gutters(body)))
            blank(i, j)
            i = j
        elif ch == '"':
            if source.startswith('"""', i):
                close = source.find('"""', i + 3)
                j = n if close == -1 else close + 3
            else:
                j = i + 1
                while j < n and source[j] not in '"\n':
                    j += 2 if source[j] == "\\" else 1
                j = min(j + 1, n)
            blank(i, j)
            i = j
        elif ch == "'":
            j = i + 1
            while j < n and source[j] not in "'\n":
                j += 2 if source[j] == "\\" else 1
            j = min(j + 1, n)
            blank(i, j)
            i = j
        else:
            i += 1
    return "".join(out), docs


def _strip_gutters(body: str) -> str:
    lines = []
    for line in body.split("\n"):
        if re.match(r"[ \t]*\*", line):
            line = _GUTTER_RE.sub("", line, count=1)
        lines.append(line.rstrip())
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Declaration chunking
# ---------------------------------------------------------------------------

@dataclass
class _Chunk:
    start: int        # offset of the first token
    end: int          # offset one past the chunk
    body_open: int    # offset of '{' opening a declaration body, or -1
    body_close: int   # offset of the matching '}', or -1


def _scan_chunks(masked: str, start: int, end: int) -> list[_Chunk]:
    """Split a top level or class body into declaration chunks.

    A chunk ends at a top-level ';', or at the matching '}' of a body
    brace. Braces inside parentheses or after a top-level '=' belong to
    annotation arguments or initializers, not to a declaration body.
    """
    chunks = []
    i = start
    n = end
    while i < n:
        while i < n and (masked[i].isspace() or masked[i] == ";"):
            i += 1
        if i >= n:
            break
        chunk_start = i
        paren = 0
        brace = 0
        seen_eq = False
        body_open = body_close = -1
        while i < n:
            ch = masked[i]
            if ch == "(":
                paren += 1
            elif ch == ")":
                paren = max(paren - 1, 0)
            elif ch == "=" and paren == 0 and brace == 0:
                seen_eq = True
            elif ch == "{":
                if paren == 0 and brace == 0 and not seen_eq:
                    body_open = i
                    body_close = _match_brace(masked, i, n)
                    i = body_close + 1
                    break
                brace += 1
            elif ch == "}":
                brace = max(brace - 1, 0)
            elif ch == ";" and paren == 0 and brace == 0:
                break
            i += 1
        chunk_end = min(i, n)
        chunks.append(_Chunk(chunk_start, chunk_end, body_open, body_close))
        i = chunk_end + 1 if chunk_end < n and masked[chunk_end] == ";" else chunk_end
    return chunks


def _match_brace(masked: str, open_pos: int, end: int) -> int:
    depth = 0
    for i in range(open_pos, end):
        if masked[i] == "{":
            depth += 1
        elif masked[i] == "}":
            depth -= 1
            if depth == 0:
                return i
    return end - 1


def _strip_annotations(text: str) -> str:
    out = []
    i = 0
    n = len(text)
    while i < n:
        if text[i] == "@":
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            m = re.match(r"[A-Za-z_$][\w$.]*", text[j:])
            if m:
                j += m.end()
                k = j
                while k < n and text[k].isspace():
                    k += 1
                if k < n and text[k] == "(":
                    depth = 0
                    while k < n:
                        if text[k] == "(":
                            depth += 1
                        elif text[k] == ")":
                            depth -= 1
                            if depth == 0:
                                k += 1
                                break
                        k += 1
                    j = k
                out.append(" ")
                i = j
                continue
        out.append(text[i])
        i += 1
    return "".join(out)


# ---------------------------------------------------------------------------
# Signature parsing
# ---------------------------------------------------------------------------

def _canon_type(text: str) -> str:
    tokens = re.findall(r"[\w$]+(?:\.[\w$]+)*|\.\.\.|\S", text)
    out = ""
    for tok in tokens:
        if out and (tok[0].isalnum() or tok[0] in "_$?") and (out[-1].isalnum() or out[-1] in "_$?,"):
            out += " "
        out += tok
    return out


def _split_top_level(text: str, sep: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in text:
        if ch in "<([{":
            depth += 1
        elif ch in ">)]}":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


_DECLARATOR_RE = re.compile(r"^(.*?)\b([A-Za-z_$][\w$]*)\s*((?:\[\s*\])*)$", re.S)


def _parse_param(text: str) -> tuple[str, str] | None:
    text = _strip_annotations(text).strip()
    tokens = text.split()
    if tokens and tokens[0] == "final":
        text = text.split(None, 1)[1] if len(tokens) > 1 else ""
    m = _DECLARATOR_RE.match(text.strip())
    if not m or not m.group(1).strip():
        return None
    type_text = _canon_type(m.group(1).strip() + m.group(3).replace(" ", ""))
    return type_text, m.group(2)


def _drop_leading_modifiers(text: str) -> str:
    while True:
        stripped = text.lstrip()
        m = re.match(r"[A-Za-z-]+", stripped)
        if m and m.group(0) in _MODIFIERS:
            text = stripped[m.end():]
        else:
            return stripped


def _drop_type_params(text: str) -> str:
    text = text.lstrip()
    if not text.startswith("<"):
        return text
    depth = 0
    for i, ch in enumerate(text):
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
            if depth == 0:
                return text[i + 1:]
    return text


def _parse_method(header: str, class_simple_name: str) -> MethodInfo | None:
    header = _split_top_level(header, "=")[0]
    open_paren = header.find("(")
    if open_paren == -1:
        return None
    close_paren = header.rfind(")")
    if close_paren < open_paren:
        return None
    before = header[:open_paren].rstrip()
    m = re.search(r"([A-Za-z_$][\w$]*)$", before)
    if not m:
        return None
    name = m.group(1)
    ret_text = _drop_type_params(_drop_leading_modifiers(before[: m.start()]))
    return_type = _canon_type(ret_text.strip())

    params = []
    param_text = header[open_paren + 1 : close_paren].strip()
    if param_text:
        for piece in _split_top_level(param_text, ","):
            parsed = _parse_param(piece)
            if parsed:
                params.append(parsed)

    is_constructor = not return_type and name == class_simple_name
    if not return_type and not is_constructor:
        return None
    param_display = ", ".join(f"{t} {n}" for t, n in params)
    if is_constructor:
        signature = f"{name}({param_display})"
        return_type = ""
    else:
        signature = f"{return_type} {name}({param_display})"
    return MethodInfo(
        simple_name=name,
        is_constructor=is_constructor,
        params=params,
        return_type=return_type,
        signature=signature,
    )


def _parse_fields(text: str) -> list[tuple[str, str]]:
    """Parse one field declaration chunk into (type, name) declarators."""
    declarators = _split_top_level(text, ",")
    results = []
    base_type = None
    for k, decl in enumerate(declarators):
        left = _split_top_level(decl, "=")[0].strip()
        if k == 0:
            left = _drop_leading_modifiers(left)
            m = _DECLARATOR_RE.match(left)
            if not m or not m.group(1).strip():
                return []
            base_type = _canon_type(m.group(1).strip())
            own = m.group(3).replace(" ", "")
            results.append((_canon_type(m.group(1).strip() + own), m.group(2)))
        else:
            m = re.match(r"^([A-Za-z_$][\w$]*)\s*((?:\[\s*\])*)$", left)
            if not m:
                continue
            results.append((_canon_type(base_type + m.group(2).replace(" ", "")), m.group(1)))
    return results


# ---------------------------------------------------------------------------
# Top-level extraction
# ---------------------------------------------------------------------------

def extract_classes(source_text: str, file_path) -> list[ClassInfo]:
    """Extract every class/interface/enum with its documented members.

    A file that cannot be scanned yields an empty list and a warning;
    the surrounding pipeline carries on.
    """
    try:
        return _extract(source_text, str(file_path))
    except Exception as exc:  # defensive: never kill a whole run on one file
        log.warning("could not parse %s: %s", file_path, exc)
        return []


def _extract(source_text: str, file_path: str) -> list[ClassInfo]:
    masked, docs = _mask_source(source_text)
    doc_ends = [d[1] for d in docs]

    pkg_match = _PACKAGE_RE.search(masked)
    package = pkg_match.group(1) if pkg_match else ""
    imports = [m.group(2) for m in _IMPORT_RE.finditer(masked) if not m.group(1)]

    classes: list[ClassInfo] = []
    decl_counter = 0

    def doc_for(chunk_start: int) -> RawJavadoc | None:
        idx = bisect_right(doc_ends, chunk_start) - 1
        if idx < 0:
            return None
        _, end, body = docs[idx]
        if masked[end:chunk_start].strip():
            return None
        return RawJavadoc(body)

    def walk(start: int, end: int, owner: ClassInfo | None, owner_local: str) -> None:
        for chunk in _scan_chunks(masked, start, end):
            header_end = chunk.body_open if chunk.body_open != -1 else chunk.end
            header = masked[chunk.start:header_end]
            first_word = re.match(r"\s*([A-Za-z-]+)", header)
            if first_word and first_word.group(1) in ("package", "import"):
                continue
            if re.search(r"@\s*interface\b", header):
                continue
            stripped = _strip_annotations(header)
            type_match = _TYPE_KEYWORD_RE.search(stripped)
            if type_match and chunk.body_open != -1:
                handle_type(chunk, stripped, type_match, owner_local)
            elif owner is not None:
                handle_member(chunk, stripped, owner)

    def handle_type(chunk: _Chunk, header: str, type_match, outer_local: str) -> None:
        nonlocal decl_counter
        keyword, simple_name = type_match.group(1), type_match.group(2)
        fqn_local = f"{outer_local}.{simple_name}" if outer_local else simple_name
        fqn = f"{package}.{fqn_local}" if package else fqn_local

        supertype = None
        if keyword in ("class", "interface"):
            tail = _drop_type_params(header[type_match.end():])
            sup_match = re.search(r"\bextends\s+([\w$.]+)", tail)
            if sup_match:
                supertype = sup_match.group(1)

        info = ClassInfo(
            fqn=fqn,
            simple_name=simple_name,
            package=package,
            supertype_name=supertype,
            imports=list(imports),
            source_path=file_path,
            decl_order=decl_counter,
        )
        decl_counter += 1
        classes.append(info)

        body_start = chunk.body_open + 1
        body_end = chunk.body_close
        if keyword == "enum":
            body_start = _skip_enum_constants(masked, body_start, body_end)
        walk(body_start, body_end, info, fqn_local)

    def handle_member(chunk: _Chunk, header: str, owner: ClassInfo) -> None:
        tokens = header.split()
        if not tokens or all(t in _MODIFIERS for t in tokens):
            return  # initializer block
        raw_doc = doc_for(chunk.start)
        parsed_doc = parse_javadoc(raw_doc) if raw_doc else None
        if "(" in _split_top_level(header, "=")[0]:
            method = _parse_method(header, owner.simple_name)
            if method is None:
                return
            method.raw_doc = raw_doc
            method.doc = parsed_doc
            method.decl_order = len(owner.methods)
            owner.methods.append(method)
        else:
            for type_name, name in _parse_fields(header):
                owner.fields.append(FieldInfo(
                    name=name,
                    type_name=type_name,
                    raw_doc=raw_doc,
                    doc=parsed_doc,
                    decl_order=len(owner.fields),
                ))

    walk(0, len(masked), None, "")
    return classes


def _skip_enum_constants(masked: str, start: int, end: int) -> int:
    """Enum bodies start with a constants section ending at the first ';'."""
    paren = 0
    brace = 0
    for i in range(start, end):
        ch = masked[i]
        if ch == "(":
            paren += 1
        elif ch == ")":
            paren = max(paren - 1, 0)
        elif ch == "{":
            brace += 1
        elif ch == "}":
            brace = max(brace - 1, 0)
        elif ch == ";" and paren == 0 and brace == 0:
            return i + 1
    return end
