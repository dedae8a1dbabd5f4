"""Figure rendering for table and scan reports.

Companion plots written next to the delimited output: the radicand spread and
residue-class makeup for a reference table, and the form breakdown of a range
scan.  Rendering is headless (Agg) and deterministic.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_RC = {
    "figure.figsize": (9.0, 3.6),
    "font.size": 9,
    "axes.linewidth": 0.6,
    "axes.grid": True,
    "grid.alpha": 0.25,
    "savefig.dpi": 150,
}

_FORM_COLORS = {"Form1": "#1f77b4", "Form2": "#d62728", "Form3": "#2ca02c"}


def save_table_figure(doc: dict, path: str) -> None:
    rows = doc["rows"]
    with plt.rc_context(_RC):
        fig, (ax_n, ax_res) = plt.subplots(1, 2)
        xs = list(range(1, len(rows) + 1))
        ax_n.semilogy(xs, [r["n"] for r in rows], "o", ms=4, color="#1f77b4")
        ax_n.set_xlabel("row")
        ax_n.set_ylabel("n")
        ax_n.set_title(f"table {doc['which']}: radicands ({len(rows)} rows)")

        counts: dict[int, int] = {}
        for r in rows:
            for col in ("q1_mod25", "q2_mod25"):
                if col in r:
                    counts[r[col]] = counts.get(r[col], 0) + 1
        residues = sorted(counts)
        ax_res.bar([str(v) for v in residues], [counts[v] for v in residues],
                   color="#888888", width=0.6)
        ax_res.set_xlabel("prime residue mod 25 (signed)")
        ax_res.set_ylabel("count")
        ax_res.set_title("congruence classes")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)


def save_scan_figure(rows: list[dict], path: str) -> None:
    supported = [r for r in rows if r.get("form") in _FORM_COLORS]
    with plt.rc_context(_RC):
        fig, (ax_n, ax_forms) = plt.subplots(1, 2)
        for form, color in _FORM_COLORS.items():
            idx = [i for i, r in enumerate(supported) if r["form"] == form]
            if idx:
                ax_n.semilogy(idx, [supported[i]["n"] for i in idx],
                              "o", ms=3, color=color, label=form)
        ax_n.set_xlabel("match index")
        ax_n.set_ylabel("n")
        ax_n.set_title("scan matches")
        if supported:
            ax_n.legend(frameon=False)

        counts: dict[str, int] = {}
        for r in rows:
            counts[r.get("form", "error")] = counts.get(r.get("form", "error"), 0) + 1
        labels = sorted(counts)
        ax_forms.bar(labels, [counts[k] for k in labels],
                     color=[_FORM_COLORS.get(k, "#888888") for k in labels], width=0.6)
        ax_forms.set_ylabel("rows")
        ax_forms.set_title("forms in range")
        for tick in ax_forms.get_xticklabels():
            tick.set_rotation(20)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
