"""Summary figure rendered next to the CSV and text reports."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

from .analyzer import Severity

_SEVERITY_ORDER = [Severity.HIGH, Severity.MILD, Severity.LOW]
_SEVERITY_COLORS = {"high": "#c0392b", "mild": "#e67e22", "low": "#f1c40f"}


def render_summary(records, numbered_results, out_dir) -> Path:
    """Render severity and clone-kind counts as bar charts (PNG)."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    severity_counts = Counter(result.severity for _, result in numbered_results)
    kind_counts = Counter(rec.kind.value for rec in records)
    legit = sum(1 for rec in records if rec.legit)

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))

    labels = [sev.value for sev in _SEVERITY_ORDER] + ["legit"]
    values = [severity_counts[sev] for sev in _SEVERITY_ORDER] + [legit]
    colors = [_SEVERITY_COLORS.get(lbl, "#27ae60") for lbl in labels]
    ax1.bar(labels, values, color=colors)
    ax1.set_title("Clones by severity")
    ax1.set_ylabel("records")

    kinds = sorted(kind_counts)
    ax2.bar(kinds, [kind_counts[k] for k in kinds], color="#2980b9")
    ax2.set_title("Clones by comment part")
    ax2.tick_params(axis="x", labelrotation=30)

    fig.tight_layout()
    out = Path(out_dir) / "clone_summary.png"
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
