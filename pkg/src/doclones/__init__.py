"""Clone detection for Javadoc comments.

Scans a Java project, detects whole-comment and comment-part clones,
filters structurally legitimate ones, classifies the rest by severity
and points out which comment is the likely copy-and-paste victim.
"""

from .analyzer import (
    AnalysisResult,
    AnalyzerConfig,
    Severity,
    analyze,
    element_similarity,
    is_overloading,
)
from .corpus import (
    Corpus,
    ElementPair,
    MemberRef,
    PairKind,
    Relation,
    Scope,
    Target,
    build_corpus,
    pairs,
    resolve_supertypes,
)
from .detector import (
    CloneKind,
    CloneRecord,
    DetectorConfig,
    comparable_text,
    compare_pair,
    detect,
    is_legitimate,
)
from .extractor import (
    ClassInfo,
    CommentDoc,
    FieldInfo,
    MethodInfo,
    RawJavadoc,
    clean_text,
    extract_classes,
    parse_javadoc,
)
from .report import EmptyCorpusError, RunConfig, main, run, write_csv, write_reports
from .similarity import (
    AbbrevTable,
    BagOfWords,
    StopwordSet,
    cosine,
    normalize_tokens,
    signature_bow,
    split_identifier,
    text_bow,
)
from .stemming import porter_stem

__version__ = "0.1.0"

__all__ = [
    "AbbrevTable", "AnalysisResult", "AnalyzerConfig", "BagOfWords",
    "ClassInfo", "CloneKind", "CloneRecord", "CommentDoc", "Corpus",
    "DetectorConfig", "ElementPair", "EmptyCorpusError", "FieldInfo",
    "MemberRef", "MethodInfo", "PairKind", "RawJavadoc", "Relation",
    "RunConfig", "Scope", "Severity", "Target", "analyze", "build_corpus",
    "clean_text", "comparable_text", "compare_pair", "cosine", "detect",
    "element_similarity", "extract_classes", "is_legitimate",
    "is_overloading", "main", "normalize_tokens", "pairs", "parse_javadoc",
    "porter_stem", "resolve_supertypes", "run", "signature_bow",
    "split_identifier", "text_bow", "write_csv", "write_reports",
]
