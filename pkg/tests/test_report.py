from __future__ import annotations

from doclones.analyzer import AnalysisResult, Severity
from doclones.corpus import MemberRef, PairKind, Scope
from doclones.detector import CloneKind, CloneRecord
from doclones.report import (
    CSV_NAME,
    RunConfig,
    main,
    run,
    write_csv,
    write_reports,
)

SAMPLE1_ROW = (
    "com.google.common.base.CharMatcher,"
    "boolean matchesAllOf(CharSequence sequence),"
    "boolean matchesNoneOf(CharSequence sequence),"
    '@return,'
    '"true if this matcher matches every character in the sequence, '
    'including when the sequence is empty",false'
)


def sample1_record():
    return CloneRecord(
        class1_fqn="com.google.common.base.CharMatcher",
        class2_fqn="com.google.common.base.CharMatcher",
        elem1_sig="boolean matchesAllOf(CharSequence sequence)",
        elem2_sig="boolean matchesNoneOf(CharSequence sequence)",
        kind=CloneKind.RETURN,
        cloned_text=("true if this matcher matches every character in the sequence, "
                     "including when the sequence is empty."),
        legit=False,
        scope=Scope.INTRA_CLASS,
        first=MemberRef("com.google.common.base.CharMatcher", PairKind.METHOD_PAIR, 0),
        second=MemberRef("com.google.common.base.CharMatcher", PairKind.METHOD_PAIR, 1),
    )


def result_for(record, severity=Severity.HIGH, messages=("message one",), owner=None):
    return AnalysisResult(record=record, severity=severity, owner=owner,
                          messages=list(messages))


# --- write_csv ---------------------------------------------------------------

def test_csv_sample1_row_matches_expected_serialization(tmp_path):
    path = tmp_path / "clones.csv"
    count = write_csv([sample1_record()], path)
    assert count == 1
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "class,element1,element2,kind,cloned_text,legit"
    assert lines[1] == SAMPLE1_ROW


def test_csv_empty_records(tmp_path):
    path = tmp_path / "clones.csv"
    assert write_csv([], path) == 0
    assert path.read_text(encoding="utf-8") == "class,element1,element2,kind,cloned_text,legit\n"


def test_csv_is_byte_identical_across_runs(tmp_path):
    records = [sample1_record()]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    write_csv(records, a)
    write_csv(records, b)
    assert a.read_bytes() == b.read_bytes()


def test_csv_cross_class_row_joins_fqns_with_pipe(tmp_path):
    rec = sample1_record()
    rec.class2_fqn = "other.Class"
    path = tmp_path / "c.csv"
    write_csv([rec], path)
    row = path.read_text(encoding="utf-8").splitlines()[1]
    assert row.startswith("com.google.common.base.CharMatcher|other.Class,")


def test_csv_quotes_embedded_quotes(tmp_path):
    rec = sample1_record()
    rec.cloned_text = 'says "hello", twice'
    path = tmp_path / "q.csv"
    write_csv([rec], path)
    assert '"says ""hello"", twice"' in path.read_text(encoding="utf-8")


# --- write_reports -----------------------------------------------------------

def test_report_entry_matches_result_file_template(tmp_path):
    rec = CloneRecord(
        class1_fqn="org.apache.log4j.lf5.LogRecord",
        class2_fqn="org.apache.log4j.lf5.LogRecord",
        elem1_sig="LogLevel getLevel()", elem2_sig="Throwable getThrown()",
        kind=CloneKind.RETURN, cloned_text="The LogLevel of this record.",
        legit=False, scope=Scope.INTRA_CLASS,
    )
    message = (
        'The comment you cloned:"(@return)The LogLevel of this record."\n'
        "seems more related to <LogLevel getLevel()> than <Throwable getThrown()>\n\n"
        "It is strongly advised to document method <Throwable getThrown()> "
        "with a different, appropriate comment."
    )
    paths = write_reports([(53, result_for(rec, messages=[message]))], "clones.csv", tmp_path)
    text = paths[Severity.HIGH].read_text(encoding="utf-8")
    assert text == (
        "---- Record #53 file:clones.csv ----\n"
        "In class: org.apache.log4j.lf5.LogRecord\n"
        "\n"
        '1) The comment you cloned:"(@return)The LogLevel of this record."\n'
        "seems more related to <LogLevel getLevel()> than <Throwable getThrown()>\n"
        "\n"
        "It is strongly advised to document method <Throwable getThrown()> "
        "with a different, appropriate comment.\n"
    )


def test_report_field_entry_uses_field_label(tmp_path):
    rec = CloneRecord(
        class1_fqn="org.apache.hadoop.hdfs.shortcircuit.ShortCircuitCache",
        class2_fqn="org.apache.hadoop.hdfs.shortcircuit.ShortCircuitCache",
        elem1_sig="cleanerExecutor", elem2_sig="releaserExecutor",
        kind=CloneKind.FIELD,
        cloned_text="The executor service that runs the cacheCleaner.",
        legit=False, scope=Scope.INTRA_CLASS,
    )
    message = (
        'The comment you cloned:"(Field)The executor service that runs the cacheCleaner."\n'
        "seems more related to <cleanerExecutor> than <releaserExecutor>"
    )
    paths = write_reports([(7, result_for(rec, messages=[message]))], "clones.csv", tmp_path)
    text = paths[Severity.HIGH].read_text(encoding="utf-8")
    assert '1) The comment you cloned:"(Field)The executor service that runs ' \
           'the cacheCleaner."' in text
    assert "seems more related to <cleanerExecutor> than <releaserExecutor>" in text


def test_report_headers_for_cross_class_scopes(tmp_path):
    rec = sample1_record()
    rec.class2_fqn = "pkg.Parent"
    rec.scope = Scope.HIERARCHY
    paths = write_reports([(4, result_for(rec))], "clones.csv", tmp_path)
    text = paths[Severity.HIGH].read_text(encoding="utf-8")
    assert "In class: com.google.common.base.CharMatcher\n" \
           "And its superclass: pkg.Parent\n" in text

    rec2 = sample1_record()
    rec2.class2_fqn = "pkg.Unrelated"
    rec2.scope = Scope.INTER_CLASS
    paths = write_reports([(6, result_for(rec2))], "clones.csv", tmp_path)
    text = paths[Severity.HIGH].read_text(encoding="utf-8")
    assert "And class: pkg.Unrelated\n" in text


def test_all_three_files_created_even_when_empty(tmp_path):
    paths = write_reports([], "clones.csv", tmp_path)
    for severity, path in paths.items():
        assert path.exists(), severity
        assert path.read_text(encoding="utf-8") == ""
    assert {p.name for p in paths.values()} == {
        "high_severity.txt", "mild_severity.txt", "low_severity.txt"}


def test_record_numbers_refer_to_csv_rows(tmp_path, samples_dir):
    summary = run(RunConfig(roots=[samples_dir], out_dir=tmp_path, figures=False))
    csv_lines = (tmp_path / CSV_NAME).read_text(encoding="utf-8").splitlines()
    for row, result in summary.numbered_results:
        csv_row = csv_lines[row]  # header occupies line 0
        assert result.record.elem1_sig.split("(")[0].split()[-1] in csv_row


# --- pipeline + CLI ----------------------------------------------------------

def test_run_counts_are_consistent(tmp_path, fixtures_dir):
    summary = run(RunConfig(roots=[fixtures_dir], out_dir=tmp_path, figures=False))
    counts = summary.counts
    assert counts["high"] + counts["mild"] + counts["low"] == len(summary.numbered_results)
    assert counts["legit"] + len(summary.numbered_results) == counts["total"]


def test_legit_records_written_to_csv_but_not_reported(tmp_path, samples_dir):
    summary = run(RunConfig(roots=[samples_dir], out_dir=tmp_path, figures=False))
    legit_rows = [i + 1 for i, rec in enumerate(summary.records) if rec.legit]
    assert legit_rows  # the overload fixture produces legit records
    reported = {row for row, _ in summary.numbered_results}
    assert not reported.intersection(legit_rows)
    csv_text = (tmp_path / CSV_NAME).read_text(encoding="utf-8")
    assert ",true" in csv_text  # legit row present in the CSV


def test_main_success_prints_summary(tmp_path, samples_dir, capsys):
    code = main([str(samples_dir), "--scope", "intra", "--out", str(tmp_path),
                 "--no-figures"])
    assert code == 0
    out = capsys.readouterr().out
    assert "high severity: " in out
    assert "mild severity: 1" in out
    assert "low severity: 1" in out
    assert "legit (filtered): 2" in out
    assert "total records: 4" in out
    assert (tmp_path / "clones.csv").exists()
    assert (tmp_path / "high_severity.txt").exists()


def test_main_accepts_analyze_subcommand_word(tmp_path, samples_dir):
    code = main(["analyze", str(samples_dir), "--out", str(tmp_path), "--no-figures"])
    assert code == 0


def test_main_usage_errors_exit_1(tmp_path, capsys):
    assert main([]) == 1
    assert "error" in capsys.readouterr().err
    assert main(["--bogus-flag"]) == 1
    assert main([str(tmp_path / "missing")]) == 1
    assert main([str(tmp_path), "--min-threshold", "0.9",
                 "--high-threshold", "0.5"]) == 1


def test_main_empty_corpus_exits_2(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main([str(empty), "--out", str(tmp_path / "out")]) == 2
    assert "empty corpus" in capsys.readouterr().err


def test_main_io_failure_exits_3(tmp_path, samples_dir, capsys):
    blocker = tmp_path / "not-a-dir"
    blocker.write_text("", encoding="utf-8")
    assert main([str(samples_dir), "--out", str(blocker), "--no-figures"]) == 3
    assert "error" in capsys.readouterr().err


def test_main_renders_figure_by_default(tmp_path, samples_dir):
    out = tmp_path / "out"
    assert main([str(samples_dir), "--out", str(out)]) == 0
    figure = out / "clone_summary.png"
    assert figure.exists() and figure.stat().st_size > 0


def test_group_duplicates_flag(tmp_path, fixtures_dir, capsys):
    hier = fixtures_dir / "hierarchy"
    code = main([str(hier), "--scope", "hierarchy", "--out", str(tmp_path / "out"),
                 "--no-figures", "--group-duplicates"])
    assert code == 0
    assert "duplicate text groups: 1" in capsys.readouterr().out
    groups = (tmp_path / "out" / "duplicate_groups.txt").read_text(encoding="utf-8")
    assert "(@return)first element" in groups
    assert "records: #1, #2" in groups


def test_custom_wordlist_flags(tmp_path, samples_dir, capsys):
    stopfile = tmp_path / "stop.txt"
    stopfile.write_text("the\n", encoding="utf-8")
    abbrevfile = tmp_path / "abbrev.txt"
    abbrevfile.write_text("id=identifier\n", encoding="utf-8")
    code = main([str(samples_dir), "--out", str(tmp_path / "out"), "--no-figures",
                 "--stopwords", str(stopfile), "--abbreviations", str(abbrevfile)])
    assert code == 0


def test_custom_generic_throws_pattern_file(tmp_path):
    src = tmp_path / "src"
    src.mkdir()
    (src / "A.java").write_text("""
package p;
class A {
  /** @throws IOException when the moon is full tonight */
  void a() {}
  /** @throws IOException when the moon is full tonight */
  void b() {}
}
""", encoding="utf-8")
    out1 = tmp_path / "out1"
    assert main([str(src), "--out", str(out1), "--no-figures"]) == 0
    assert ",true" in (out1 / CSV_NAME).read_text(encoding="utf-8")  # legit: 6 specific words

    patterns = tmp_path / "patterns.txt"
    patterns.write_text("# match the moon text\nwhen the moon is .*\n", encoding="utf-8")
    out2 = tmp_path / "out2"
    assert main([str(src), "--out", str(out2), "--no-figures",
                 "--generic-throws", str(patterns)]) == 0
    assert ",false" in (out2 / CSV_NAME).read_text(encoding="utf-8")  # now generic


def test_byte_determinism_across_runs_and_root_order(tmp_path, fixtures_dir):
    roots = [str(fixtures_dir / "samples"), str(fixtures_dir / "logrecord")]
    outputs = []
    for i, root_order in enumerate([roots, roots[::-1], roots]):
        out = tmp_path / f"out{i}"
        assert main([*root_order, "--out", str(out), "--no-figures"]) == 0
        outputs.append({p.name: p.read_bytes() for p in sorted(out.iterdir())})
    assert outputs[0] == outputs[1] == outputs[2]
