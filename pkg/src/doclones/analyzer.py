"""Severity classification of non-legit clones and comment-owner selection.

Each record is scored by the lexical similarity between the cloned text and
each member's signature. Branches are evaluated in a fixed order and the
first match decides the severity, so every record gets exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .corpus import MemberRef
from .detector import CloneKind, CloneRecord
from .extractor import MethodInfo
from .similarity import AbbrevTable, StopwordSet, cosine, signature_bow, text_bow


class Severity(Enum):
    LOW = "low"
    MILD = "mild"
    HIGH = "high"


@dataclass
class AnalyzerConfig:
    min_threshold: float = 0.25
    high_threshold: float = 0.50
    diff_threshold: float = 0.1

    def validate(self) -> None:
        if not (0 <= self.min_threshold < self.high_threshold <= 1):
            raise ValueError("thresholds must satisfy 0 <= min < high <= 1")
        if self.diff_threshold <= 0:
            raise ValueError("diff threshold must be positive")


@dataclass
class AnalysisResult:
    record: CloneRecord
    severity: Severity
    m1_sim: float | None = None
    m2_sim: float | None = None
    owner: MemberRef | None = None
    messages: list = field(default_factory=list)


def is_overloading(m1: MethodInfo, m2: MethodInfo) -> bool:
    """Same simple name; constructors compare their class names."""
    return m1.simple_name == m2.simple_name


def element_similarity(element, cloned_text: str,
                       abbrev: AbbrevTable = None, stop: StopwordSet = None) -> float:
    """Cosine similarity between a member's signature and a cloned text."""
    return cosine(signature_bow(element, abbrev, stop), text_bow(cloned_text, abbrev, stop))


def _display(element) -> str:
    return element.signature if isinstance(element, MethodInfo) else element.name


def _noun(element) -> str:
    return "method" if isinstance(element, MethodInfo) else "field"


def analyze(record: CloneRecord, e1, e2, cfg: AnalyzerConfig = None,
            abbrev: AbbrevTable = None, stop: StopwordSet = None) -> AnalysisResult:
    """Assign a severity to one non-legit clone record."""
    cfg = cfg or AnalyzerConfig()
    a_disp, b_disp = _display(e1), _display(e2)
    label = record.kind.value
    quoted = f'The comment you cloned:"({label}){record.cloned_text}"'

    if record.kind is CloneKind.WHOLE:
        whole_msg = f"You cloned the whole comment for methods <{a_disp}> and <{b_disp}>"
        if is_overloading(e1, e2):
            msg = (f"{whole_msg}\n\nThese methods are overloaded. "
                   "Please document the parameters that differ between them.")
            return AnalysisResult(record, Severity.MILD, messages=[msg])
        m1 = element_similarity(e1, record.plain_text, abbrev, stop)
        m2 = element_similarity(e2, record.plain_text, abbrev, stop)
        msg = (f"{whole_msg}\n\nThis is not an overloading case. "
               "Check the differences among the two methods and document them.")
        messages = [msg]
        owner = None
        if abs(m1 - m2) > cfg.diff_threshold:
            owner_e, victim_e = (e1, e2) if m1 > m2 else (e2, e1)
            owner = record.first if m1 > m2 else record.second
            messages.append(
                f"{quoted}\nseems more related to <{_display(owner_e)}> "
                f"than <{_display(victim_e)}>")
        return AnalysisResult(record, Severity.HIGH, m1, m2, owner, messages)

    m1 = element_similarity(e1, record.plain_text, abbrev, stop)
    m2 = element_similarity(e2, record.plain_text, abbrev, stop)

    if m1 < cfg.min_threshold and m2 < cfg.min_threshold:
        msg = (f"{quoted}\nis too generic to describe either <{a_disp}> or <{b_disp}>. "
               "Please fix this poor info comment by adding more detail.")
        return AnalysisResult(record, Severity.MILD, m1, m2, None, [msg])

    if m1 > cfg.high_threshold and m2 > cfg.high_threshold:
        msg = (f"{quoted}\nrelates well to both <{a_disp}> and <{b_disp}>. "
               "This looks like a false positive; you may want to ignore it.")
        return AnalysisResult(record, Severity.LOW, m1, m2, None, [msg])

    if abs(m1 - m2) > cfg.diff_threshold:
        owner_e, victim_e = (e1, e2) if m1 > m2 else (e2, e1)
        owner = record.first if m1 > m2 else record.second
        msg = (f"{quoted}\nseems more related to <{_display(owner_e)}> than <{_display(victim_e)}>"
               f"\n\nIt is strongly advised to document {_noun(victim_e)} <{_display(victim_e)}> "
               "with a different, appropriate comment.")
        return AnalysisResult(record, Severity.HIGH, m1, m2, owner, [msg])

    msg = (f"{quoted}\nrelates similarly to <{a_disp}> and <{b_disp}>. "
           "Fix these comments: at least one of them needs a distinct, "
           "appropriate description.")
    return AnalysisResult(record, Severity.HIGH, m1, m2, None, [msg])
