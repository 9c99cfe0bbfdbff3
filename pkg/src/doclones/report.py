"""Command-line entry point and report writers.

Runs the whole pipeline (extract, pair, detect, analyze), stores every
clone record in a CSV file and writes one text report per severity level.
Output is byte-deterministic for a fixed corpus and configuration.

Exit codes: 0 success, 1 usage error, 2 empty corpus, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from pathlib import Path

from .analyzer import AnalysisResult, AnalyzerConfig, Severity, analyze
from .corpus import Scope, Target, build_corpus, pairs, resolve_supertypes
from .detector import DetectorConfig, detect, load_patterns
from .similarity import AbbrevTable, StopwordSet

log = logging.getLogger(__name__)

CSV_NAME = "clones.csv"
CSV_HEADER = ["class", "element1", "element2", "kind", "cloned_text", "legit"]

_SEVERITY_FILES = {
    Severity.HIGH: "high_severity.txt",
    Severity.MILD: "mild_severity.txt",
    Severity.LOW: "low_severity.txt",
}


class EmptyCorpusError(Exception):
    pass


@dataclass
class RunConfig:
    roots: list
    scope: Scope = Scope.INTRA_CLASS
    target: Target = Target.ALL
    out_dir: Path = Path("out")
    analyzer: AnalyzerConfig = field(default_factory=AnalyzerConfig)
    detector: DetectorConfig = field(default_factory=DetectorConfig)
    abbrev_path: Path | None = None
    stopword_path: Path | None = None
    patterns_path: Path | None = None
    strict_case: bool = False
    group_duplicates: bool = False
    figures: bool = True


def write_csv(records, path) -> int:
    """Write clone records; returns the number of data rows."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for rec in records:
            class_col = rec.class1_fqn if rec.class1_fqn == rec.class2_fqn \
                else f"{rec.class1_fqn}|{rec.class2_fqn}"
            text = rec.cloned_text
            if text.endswith("."):
                text = text[:-1]
            writer.writerow([
                class_col, rec.elem1_sig, rec.elem2_sig,
                rec.kind.value, text, "true" if rec.legit else "false",
            ])
    return len(records)


def _entry(row: int, result: AnalysisResult, csv_name: str) -> str:
    rec = result.record
    lines = [f"---- Record #{row} file:{csv_name} ----", f"In class: {rec.class1_fqn}"]
    if rec.class2_fqn != rec.class1_fqn:
        header = "And its superclass" if rec.scope is Scope.HIERARCHY else "And class"
        lines.append(f"{header}: {rec.class2_fqn}")
    lines.append("")
    for i, msg in enumerate(result.messages, 1):
        if i > 1:
            lines.append("")
        lines.append(f"{i}) {msg}")
    return "\n".join(lines) + "\n"


def write_reports(numbered_results, csv_name: str, out_dir) -> dict:
    """Write high/mild/low severity text reports; returns severity -> path.

    ``numbered_results`` holds (csv_row_index, AnalysisResult) in record
    order; row indices are 1-based over all CSV rows, legit ones included.
    """
    out_dir = Path(out_dir)
    entries = {sev: [] for sev in _SEVERITY_FILES}
    for row, result in numbered_results:
        entries[result.severity].append(_entry(row, result, csv_name))
    paths = {}
    for sev, name in _SEVERITY_FILES.items():
        path = out_dir / name
        path.write_text("\n".join(entries[sev]), encoding="utf-8")
        paths[sev] = path
    return paths


def write_duplicate_groups(records, path) -> int:
    """Group CSV rows sharing one cloned text; returns the group count."""
    groups = OrderedDict()
    for row, rec in enumerate(records, 1):
        groups.setdefault((rec.kind.value, rec.cloned_text), []).append(row)
    lines = []
    count = 0
    for (kind, text), rows in groups.items():
        if len(rows) < 2:
            continue
        count += 1
        lines.append(f'({kind}){text}')
        lines.append("records: " + ", ".join(f"#{r}" for r in rows))
        lines.append("")
    Path(path).write_text("\n".join(lines), encoding="utf-8")
    return count


@dataclass
class RunSummary:
    records: list
    numbered_results: list
    counts: dict
    out_dir: Path


def run(config: RunConfig) -> RunSummary:
    """Execute the full pipeline and write all outputs."""
    abbrev = AbbrevTable.load(config.abbrev_path) if config.abbrev_path else AbbrevTable.default()
    stop = StopwordSet.load(config.stopword_path) if config.stopword_path else StopwordSet.default()
    if config.patterns_path:
        config.detector.generic_throws_patterns = load_patterns(config.patterns_path)
    config.detector.strict_case = config.strict_case

    corpus = build_corpus(config.roots)
    if not corpus.classes:
        raise EmptyCorpusError("no Java classes found under: "
                               + ", ".join(str(r) for r in config.roots))
    resolve_supertypes(corpus)

    pair_list = pairs(corpus, config.scope, config.target)
    records = detect(corpus, pair_list, config.detector)

    numbered_results = []
    for row, rec in enumerate(records, 1):
        if rec.legit:
            continue
        e1, e2 = corpus.member(rec.first), corpus.member(rec.second)
        numbered_results.append((row, analyze(rec, e1, e2, config.analyzer, abbrev, stop)))

    config.out_dir.mkdir(parents=True, exist_ok=True)
    write_csv(records, config.out_dir / CSV_NAME)
    write_reports(numbered_results, CSV_NAME, config.out_dir)

    severity_counts = Counter(result.severity for _, result in numbered_results)
    counts = {
        "high": severity_counts[Severity.HIGH],
        "mild": severity_counts[Severity.MILD],
        "low": severity_counts[Severity.LOW],
        "legit": sum(1 for r in records if r.legit),
        "total": len(records),
    }
    if config.group_duplicates:
        counts["duplicate_groups"] = write_duplicate_groups(
            records, config.out_dir / "duplicate_groups.txt")
    if config.figures:
        from .figures import render_summary
        render_summary(records, numbered_results, config.out_dir)
    return RunSummary(records, numbered_results, counts, config.out_dir)


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="doclones",
        description="Detect clones in the Javadoc comments of a Java project "
                    "and report the ones that look like copy-and-paste mistakes.",
    )
    parser.add_argument("roots", nargs="*", type=Path,
                        help="directories (or .java files) to analyze")
    parser.add_argument("--scope", choices=[s.value for s in Scope], default="intra",
                        help="which element pairs to compare (default: intra)")
    parser.add_argument("--target", choices=[t.value for t in Target], default="all",
                        help="compare methods, fields, or both (default: all)")
    parser.add_argument("--out", type=Path, default=Path("out"), metavar="DIR",
                        help="output directory (default: out)")
    parser.add_argument("--min-threshold", type=float, default=0.25,
                        help="below this similarity on both sides the clone is "
                             "poor info (default: 0.25)")
    parser.add_argument("--high-threshold", type=float, default=0.50,
                        help="above this similarity on both sides the clone is a "
                             "likely false positive (default: 0.50)")
    parser.add_argument("--diff-threshold", type=float, default=0.1,
                        help="similarity gap that singles out the comment owner "
                             "(default: 0.1)")
    parser.add_argument("--min-throws-words", type=int, default=4,
                        help="minimum words for a legit @throws clone (default: 4)")
    parser.add_argument("--abbreviations", type=Path, metavar="FILE",
                        help="abbreviation expansions, one 'abbr=words' per line")
    parser.add_argument("--stopwords", type=Path, metavar="FILE",
                        help="stopword list, one word per line")
    parser.add_argument("--generic-throws", type=Path, metavar="FILE",
                        help="generic exception description patterns, one regex per line")
    parser.add_argument("--strict-case", action="store_true",
                        help="make clone matching case-sensitive")
    parser.add_argument("--group-duplicates", action="store_true",
                        help="also group records that share the same cloned text")
    parser.add_argument("--no-figures", action="store_true",
                        help="skip rendering the summary figure")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "analyze":  # tolerate an explicit subcommand word
        argv = argv[1:]
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1

    logging.basicConfig(stream=sys.stderr, level=logging.WARNING,
                        format="warning: %(message)s")

    if not ns.roots:
        parser.print_usage(sys.stderr)
        print("doclones: error: at least one root directory is required", file=sys.stderr)
        return 1
    for root in ns.roots:
        if not root.exists():
            print(f"doclones: error: no such path: {root}", file=sys.stderr)
            return 1

    analyzer_cfg = AnalyzerConfig(ns.min_threshold, ns.high_threshold, ns.diff_threshold)
    try:
        analyzer_cfg.validate()
        if ns.min_throws_words < 1:
            raise ValueError("--min-throws-words must be at least 1")
    except ValueError as exc:
        print(f"doclones: error: {exc}", file=sys.stderr)
        return 1

    config = RunConfig(
        roots=list(ns.roots),
        scope=Scope(ns.scope),
        target=Target(ns.target),
        out_dir=ns.out,
        analyzer=analyzer_cfg,
        detector=DetectorConfig(min_throws_words=ns.min_throws_words),
        abbrev_path=ns.abbreviations,
        stopword_path=ns.stopwords,
        patterns_path=ns.generic_throws,
        strict_case=ns.strict_case,
        group_duplicates=ns.group_duplicates,
        figures=not ns.no_figures,
    )

    try:
        summary = run(config)
    except EmptyCorpusError as exc:
        print(f"doclones: error: empty corpus: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"doclones: error: {exc}", file=sys.stderr)
        return 3

    counts = summary.counts
    print(f"high severity: {counts['high']}")
    print(f"mild severity: {counts['mild']}")
    print(f"low severity: {counts['low']}")
    print(f"legit (filtered): {counts['legit']}")
    print(f"total records: {counts['total']}")
    if "duplicate_groups" in counts:
        print(f"duplicate text groups: {counts['duplicate_groups']}")
    print(f"reports written to {summary.out_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
