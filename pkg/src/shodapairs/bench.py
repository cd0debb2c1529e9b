"""A/B timing of the extremely-strong-first search against the direct lattice search.

Each run gets a freshly enumerated copy of the group so that cached normal
subgroups or subgroup lattices from one variant never leak into another.
Idempotent sets are compared after timing and are not part of the timed region.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Callable

from .group import FiniteGroup
from .search import (SearchOptions, SearchReport, direct_strong_shoda_pairs,
                     strong_shoda_pairs)

VARIANTS = {
    "ssp": (strong_shoda_pairs, {}),
    "ssp-no-lemma1": (strong_shoda_pairs, {"lemma1": False}),
    "ssp-no-lemma3": (strong_shoda_pairs, {"lemma3": False}),
    "direct-ssp": (direct_strong_shoda_pairs, {}),
}

COLUMNS = ["variant", "wall_ms", "sum_dim", "order", "pairs", "lattice_computed",
           "subgroups_enumerated", "normals_visited", "pruned_lemma1", "pruned_lemma3",
           "classes_visited", "candidates_tested", "same_idempotents"]


@dataclass
class BenchRow:
    variant: str
    wall_ms: float
    report: SearchReport
    same_idempotents: bool

    def as_dict(self) -> dict:
        st = self.report.stats
        return {
            "variant": self.variant,
            "wall_ms": round(self.wall_ms, 3),
            "sum_dim": self.report.sum_dim,
            "order": self.report.group.order,
            "pairs": len(self.report.pairs),
            "lattice_computed": st.lattice_computed,
            "subgroups_enumerated": st.subgroups_enumerated,
            "normals_visited": st.normals_visited,
            "pruned_lemma1": st.pruned_lemma1,
            "pruned_lemma3": st.pruned_lemma3,
            "classes_visited": st.classes_visited,
            "candidates_tested": st.candidates_tested,
            "same_idempotents": self.same_idempotents,
        }


def select_variants(no_lemma1: bool = False, no_lemma3: bool = False,
                    direct_ssp: bool = False) -> list[str]:
    """Baseline always; with no flags given every variant runs."""
    if not (no_lemma1 or no_lemma3 or direct_ssp):
        return list(VARIANTS)
    out = ["ssp"]
    if no_lemma1:
        out.append("ssp-no-lemma1")
    if no_lemma3:
        out.append("ssp-no-lemma3")
    if direct_ssp:
        out.append("direct-ssp")
    return out


def run_bench(make_group: Callable[[], FiniteGroup], variants: list[str],
              repeat: int = 1) -> list[BenchRow]:
    rows = []
    baseline = None
    for name in variants:
        fn, kw = VARIANTS[name]
        best = None
        report = None
        for _ in range(max(1, repeat)):
            G = make_group()
            t0 = time.perf_counter()
            report = fn(G, SearchOptions(**kw))
            dt = (time.perf_counter() - t0) * 1000
            best = dt if best is None else min(best, dt)
        ids = report.idempotent_keys()
        if baseline is None:
            baseline = ids
        rows.append(BenchRow(name, best, report, ids == baseline))
    return rows


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()


def rows_to_table(rows: list[BenchRow]) -> str:
    dicts = [r.as_dict() for r in rows]
    widths = {c: max(len(c), *(len(str(d[c])) for d in dicts)) for c in COLUMNS}
    lines = ["  ".join(c.ljust(widths[c]) for c in COLUMNS)]
    for d in dicts:
        lines.append("  ".join(str(d[c]).ljust(widths[c]) for c in COLUMNS))
    return "\n".join(lines)
