"""Acceptance criteria 1-9; each test prints a single PASS/FAIL line."""

import time

import pytest

from corpus import CORPUS, ODD_EXTRA, fresh_group, get_group
from shodapairs.algebra import DIM_ORACLE_CAP, AlgebraElement, dim_direct, dim_formula, is_central
from shodapairs.bench import run_bench, select_variants
from shodapairs.builders import builtin_group, heisenberg_semidirect_c3
from shodapairs.search import (NORMALLY_MONOMIAL, SearchOptions, ext_strong_shoda_pairs,
                               is_normally_monomial, strong_shoda_pairs)

_REPORTS: dict = {}


def reports(name):
    """(essp, ssp) reports with idempotents, computed once per corpus group."""
    if name not in _REPORTS:
        G = get_group(name)
        opts = SearchOptions(collect_idempotents=True)
        _REPORTS[name] = (ext_strong_shoda_pairs(G, opts), strong_shoda_pairs(G, opts))
    return _REPORTS[name]


def total(G, es):
    out = AlgebraElement.zero(G)
    for e in es:
        out = out + e
    return out


def test_criterion_1_idempotent_laws(criterion):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for name in CORPUS:
        for rep in reports(name):
            es = rep.idempotents
            for i, e in enumerate(es):
                checked += 1
                if e * e != e or not is_central(e):
                    bad.append(f"{name}/{rep.algorithm}[{i}]")
                for j in range(i + 1, len(es)):
                    if not (e * es[j]).is_zero():
                        bad.append(f"{name}/{rep.algorithm}[{i},{j}]")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    criterion(1, ok, f"{checked} idempotents over {len(CORPUS)} groups, "
                     f"{len(bad)} violations, {elapsed:.1f}s (target < 60s)")


def test_criterion_2_dimension_agreement(criterion):
    bad, pairs = [], 0
    for name in CORPUS:
        G = get_group(name)
        if G.order > DIM_ORACLE_CAP:
            continue
        for rep in reports(name):
            for p, e in zip(rep.pairs, rep.idempotents):
                pairs += 1
                f, d = dim_formula(G, p.H, p.K), dim_direct(G, e)
                if f != d or p.dim != f:
                    bad.append(f"{name}: formula {f} direct {d}")
    criterion(2, not bad, f"{pairs} pairs checked, mismatches: {bad[:3] or 'none'}")


def test_criterion_3_completeness_dichotomy(criterion):
    bad = []
    for name in CORPUS:
        G = get_group(name)
        essp, _ = reports(name)
        sums_to_one = total(G, essp.idempotents) == AlgebraElement.one(G)
        full = essp.sum_dim == G.order
        nm = is_normally_monomial(G)
        if not (sums_to_one == full == nm == (essp.verdict == NORMALLY_MONOMIAL)):
            bad.append(name)
    criterion(3, not bad, f"{len(CORPUS)} groups, disagreements: {bad or 'none'}")


def test_criterion_4_berman_witt_count(criterion):
    bad, nm = [], 0
    for name in CORPUS:
        G = get_group(name)
        essp, _ = reports(name)
        if not essp.complete:
            continue
        nm += 1
        if len(essp.pairs) != G.rational_class_count():
            bad.append(name)
    criterion(4, not bad and nm > 0, f"{nm} normally monomial groups, mismatches: {bad or 'none'}")


def _direct_dims(G, rep):
    return sorted(dim_direct(G, e) for e in rep.idempotents)


def test_criterion_5_known_decompositions(criterion):
    opts = SearchOptions(collect_idempotents=True)
    got = {}
    for name, label in [("dicyclic:8", "Q8"), ("dihedral:8", "D8"), ("cyclic:4", "C4"),
                        ("symmetric:3", "S3")]:
        G = builtin_group(name)
        rep = ext_strong_shoda_pairs(G, opts)
        got[label] = (sorted(rep.dims), _direct_dims(G, rep))
    S4 = builtin_group("symmetric:4")
    e4 = ext_strong_shoda_pairs(S4, opts)
    s4 = strong_shoda_pairs(S4, opts)
    sl = strong_shoda_pairs(get_group("SL(2,3)"))
    checks = [
        got["Q8"] == ([1, 1, 1, 1, 4],) * 2,
        got["D8"] == ([1, 1, 1, 1, 4],) * 2,
        got["C4"] == ([1, 1, 2],) * 2,
        got["S3"] == ([1, 1, 4],) * 2,
        sorted(e4.dims) == _direct_dims(S4, e4) == [1, 1, 4] and e4.sum_dim == 6,
        s4.sum_dim == 24 and sorted(s4.dims) == _direct_dims(S4, s4) == [1, 1, 4, 9, 9],
        [p.dim for p in s4.pairs if p.kind == "strong"] == [9, 9],
        sl.sum_dim < 24 and sl.verdict == "neither_or_unknown",
    ]
    criterion(5, all(checks), f"Q8 {got['Q8'][0]}, D8 {got['D8'][0]}, C4 {got['C4'][0]}, "
                              f"S3 {got['S3'][0]}, S4 essp {sorted(e4.dims)} / ssp {sorted(s4.dims)}, "
                              f"SL(2,3) ssp sum {sl.sum_dim} {sl.verdict}")


def test_criterion_6_order_375(criterion):
    t0 = time.perf_counter()
    G = heisenberg_semidirect_c3(5)
    valid = G.order == 375 and G.center().order == 5
    nm = is_normally_monomial(G) if valid else None
    elapsed = time.perf_counter() - t0
    odd = [n for n in CORPUS if get_group(n).order % 2 == 1] + list(ODD_EXTRA)
    odd_bad = [n for n in odd if get_group(n).order < 375 and not is_normally_monomial(get_group(n))]
    ok = valid and nm is False and elapsed < 300 and not odd_bad
    criterion(6, ok, f"|G|={G.order}, |Z|={G.center().order}, normally monomial {nm}, "
                     f"{elapsed:.2f}s; {len(odd)} smaller odd-order groups, non-normally-monomial: "
                     f"{odd_bad or 'none'}")


def test_criterion_7_choice_of_A_N(criterion):
    bad, moved = [], 0
    for name in CORPUS:
        G = get_group(name)
        a = ext_strong_shoda_pairs(G, SearchOptions(collect_idempotents=True))
        b = ext_strong_shoda_pairs(G, SearchOptions(collect_idempotents=True, reverse_tiebreak=True))
        if a.idempotent_set() != b.idempotent_set():
            bad.append(name)
        if any(G.max_abelian_normal_above(N) != G.max_abelian_normal_above(N, reverse=True)
               for N in G.normal_subgroups()):
            moved += 1
    criterion(7, not bad, f"{len(CORPUS)} groups ({moved} with a different A_N choice), "
                          f"set mismatches: {bad or 'none'}")


def test_criterion_8_pruning_and_lattice(criterion):
    variants = select_variants(no_lemma1=True, no_lemma3=True, direct_ssp=True)
    differ, lattice_touched, direct_skipped = [], [], []
    for name in CORPUS:
        rows = run_bench(lambda: fresh_group(name), variants)
        by = {r.variant: r for r in rows}
        if not all(r.same_idempotents for r in rows):
            differ.append(name)
        if by["ssp"].report.complete and by["ssp"].report.verdict == NORMALLY_MONOMIAL:
            st = by["ssp"].report.stats
            if st.lattice_computed or st.subgroups_enumerated or by["ssp"].report.group.lattice_computed:
                lattice_touched.append(name)
        if not by["direct-ssp"].report.stats.lattice_computed:
            direct_skipped.append(name)
    ok = not (differ or lattice_touched or direct_skipped)
    criterion(8, ok, f"ablation mismatches: {differ or 'none'}; lattice enumerated for "
                     f"normally monomial groups: {lattice_touched or 'none'}; direct search "
                     f"without lattice: {direct_skipped or 'none'}")


def test_criterion_9_essp_subset_of_ssp(criterion):
    bad = []
    for name in CORPUS:
        essp, ssp = reports(name)
        if not essp.idempotent_set() <= ssp.idempotent_set():
            bad.append(name)
    criterion(9, not bad, f"{len(CORPUS)} groups, violations: {bad or 'none'}")
