"""Extremely strong and strong Shoda pair search.

``ext_strong_shoda_pairs`` walks the normal subgroups N of G in decreasing
order and builds, for each, the pairs (A_N, D) with A_N/N a maximal-order
abelian normal subgroup of G/N; ``strong_shoda_pairs`` starts from that result
and only touches the subgroup lattice when the extremely strong pairs do not
already account for all of Q[G].

Pruning rules (each can be switched off through ``SearchOptions``):

* abelian quotient: if G' <= N then S_N is {(G, N)} when G/N is cyclic and
  empty otherwise; if A_N/N is cyclic, S_N is {(A_N, N)} when A_N/N is maximal
  abelian in G/N and empty otherwise;
* dimension budget: once the summed component dimensions reach |G| nothing
  further can be found;
* cyclic centre: a pair (H, K) can only exist if Z(G/core_G(K)) is cyclic.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

from .algebra import (AlgebraElement, Idempotent, dim_formula, distinct_conjugates, e_of,
                      epsilon)
from .group import FiniteGroup, Subgroup, mask_from

EXTREMELY_STRONG = "extremely_strong"
STRONG = "strong"

NORMALLY_MONOMIAL = "normally_monomial"
STRONGLY_MONOMIAL_ONLY = "strongly_monomial_only"
NEITHER_OR_UNKNOWN = "neither_or_unknown"
# only reported by the direct search, which cannot tell the first two apart
STRONGLY_MONOMIAL = "strongly_monomial"


@dataclass
class ShodaPair:
    H: Subgroup
    K: Subgroup
    kind: str
    dim: int

    def to_dict(self) -> dict:
        els = self.H.parent.elements
        return {
            "H": {"order": self.H.order,
                  "generators": [els[g].cycle_string() for g in self.H.canonical_gens()]},
            "K": {"order": self.K.order,
                  "generators": [els[g].cycle_string() for g in self.K.canonical_gens()]},
            "kind": self.kind,
            "dim": self.dim,
        }


@dataclass
class SearchOptions:
    lemma1: bool = True
    lemma3: bool = True
    early_stop: bool = True
    reverse_tiebreak: bool = False
    collect_idempotents: bool = False


@dataclass
class SearchStats:
    normals_visited: int = 0
    pruned_lemma1: int = 0
    pruned_lemma3: int = 0
    early_stop: bool = False
    lattice_computed: bool = False
    subgroups_enumerated: int = 0
    classes_visited: int = 0
    candidates_tested: int = 0
    wall_ms: float = 0.0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SearchReport:
    group: FiniteGroup
    algorithm: str
    pairs: list[ShodaPair]
    sum_dim: int
    verdict: str
    idempotents: list[Idempotent] | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def complete(self) -> bool:
        return self.sum_dim == self.group.order

    @property
    def dims(self) -> list[int]:
        return [p.dim for p in self.pairs]

    def idempotent_set(self) -> frozenset:
        es = self.idempotents if self.idempotents is not None else [
            e_of(self.group, p.H, p.K) for p in self.pairs]
        return frozenset(AlgebraElement(self.group, e.coeffs) for e in es)

    def idempotent_keys(self) -> frozenset:
        """Idempotents as plain coefficient sets, comparable across copies of the same group."""
        return frozenset(frozenset(e.coeffs.items()) for e in self.idempotent_set())

    def to_dict(self, with_idempotents: bool = False) -> dict:
        out = {
            "algorithm": self.algorithm,
            "group_order": self.group.order,
            "pairs": [p.to_dict() for p in self.pairs],
            "sum_dim": self.sum_dim,
            "complete": self.complete,
            "verdict": self.verdict,
            "stats": self.stats.to_dict(),
        }
        if with_idempotents and self.idempotents is not None:
            out["idempotents"] = [serialize_idempotent(e) for e in self.idempotents]
        return out


def serialize_idempotent(e: AlgebraElement) -> list[list]:
    return [[s, n, d] for s, n, d in e.to_triples()]


# -- pair tests ----------------------------------------------------------------------------

def _conditions_i_ii(G: FiniteGroup, H: Subgroup, K: Subgroup, NK: Subgroup) -> bool:
    if not (K <= H and H <= NK):
        return False
    if not (G.is_normal(K, H) and G.is_normal(H, NK)):
        return False
    if not G.is_cyclic_mod(H, K):
        return False
    return G.is_maximal_abelian_mod(NK, H, K)


def _orthogonal_conjugates(G: FiniteGroup, H: Subgroup, K: Subgroup,
                           eps: AlgebraElement) -> tuple[bool, list[AlgebraElement]]:
    conjs = distinct_conjugates(G, H, K, eps)
    # conjugation is an automorphism, so testing eps against the others suffices
    ok = all((eps * c).is_zero() for c in conjs[1:])
    return ok, conjs


def is_strong_shoda_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    NK = G.normalizer(K)
    if not _conditions_i_ii(G, H, K, NK):
        return False
    ok, _ = _orthogonal_conjugates(G, H, K, epsilon(H, K))
    return ok


def is_extremely_strong_shoda_pair(G: FiniteGroup, H: Subgroup, K: Subgroup) -> bool:
    return G.is_normal(H) and is_strong_shoda_pair(G, H, K)


def _centre_cyclic(G: FiniteGroup, N: Subgroup) -> bool:
    return G.is_cyclic_mod(G.center_mod(N), N)


def _conjugacy_reps(G: FiniteGroup, subs: list[Subgroup]) -> list[Subgroup]:
    """First member (in the given order) of each G-conjugacy class present in ``subs``."""
    covered: set[int] = set()
    reps = []
    for D in subs:
        if D.mask in covered:
            continue
        reps.append(D)
        covered.update(C.mask for C in G.subgroup_orbit(D))
    return reps


def compute_S_N(G: FiniteGroup, N: Subgroup, reverse_tiebreak: bool = False,
                lemma1: bool = True, lemma3: bool = True) -> list[ShodaPair]:
    """The pairs (A_N, D) contributed by the normal subgroup N."""
    if N == G.whole:
        return [ShodaPair(G.whole, G.whole, EXTREMELY_STRONG, 1)]
    if lemma1 and G.commutator_subgroup() <= N:
        if G.is_cyclic_mod(G.whole, N):
            return [ShodaPair(G.whole, N, EXTREMELY_STRONG, dim_formula(G, G.whole, N))]
        return []
    if lemma3 and not _centre_cyclic(G, N):
        return []
    A = G.max_abelian_normal_above(N, reverse=reverse_tiebreak)
    if lemma1 and G.is_cyclic_mod(A, N):
        if G.is_maximal_abelian_mod(G.whole, A, N):
            return [ShodaPair(A, N, EXTREMELY_STRONG, dim_formula(G, A, N))]
        return []
    cands = []
    for D in G.subgroups_between(N, A):
        if G.core(D) != N or not G.is_cyclic_mod(A, D):
            continue
        if G.is_maximal_abelian_mod(G.normalizer(D), A, D):
            cands.append(D)
    return [ShodaPair(A, D, EXTREMELY_STRONG, dim_formula(G, A, D))
            for D in _conjugacy_reps(G, cands)]


# -- extremely strong pairs ----------------------------------------------------------------

class _Budget(Exception):
    """Raised internally once the dimensions sum to |G|."""


def ext_strong_shoda_pairs(G: FiniteGroup, options: SearchOptions | None = None) -> SearchReport:
    """A complete irredundant set of extremely strong Shoda pairs of G."""
    opts = options or SearchOptions()
    t0 = time.perf_counter()
    stats = SearchStats()
    whole = G.whole
    pairs = [ShodaPair(whole, whole, EXTREMELY_STRONG, 1)]
    total = [1]

    def add(H, K):
        d = dim_formula(G, H, K)
        pairs.append(ShodaPair(H, K, EXTREMELY_STRONG, d))
        total[0] += d
        if opts.early_stop and total[0] == G.order:
            stats.early_stop = True
            raise _Budget

    try:
        if total[0] != G.order:
            _essp_body(G, opts, stats, add)
    except _Budget:
        pass

    verdict = NORMALLY_MONOMIAL if total[0] == G.order else NEITHER_OR_UNKNOWN
    report = SearchReport(G, "essp", pairs, total[0], verdict, stats=stats)
    if opts.collect_idempotents:
        report.idempotents = [e_of(G, p.H, p.K) for p in pairs]
    stats.wall_ms = (time.perf_counter() - t0) * 1000
    return report


def _essp_body(G: FiniteGroup, opts: SearchOptions, stats: SearchStats, add) -> None:
    whole = G.whole
    derived = G.commutator_subgroup()
    normals = [N for N in G.normal_subgroups() if N != whole]

    n1 = []
    for N in normals:
        stats.normals_visited += 1
        if opts.lemma1 and derived <= N:
            stats.pruned_lemma1 += 1
            if G.is_cyclic_mod(whole, N):
                add(whole, N)
        else:
            n1.append(N)

    n2 = []
    for N in n1:
        if not opts.lemma3 or _centre_cyclic(G, N):
            n2.append(N)
        else:
            stats.pruned_lemma3 += 1

    list0: list[tuple[Subgroup, Subgroup]] = []
    for N in n2:
        A = G.max_abelian_normal_above(N, reverse=opts.reverse_tiebreak)
        if A == N:
            continue
        if opts.lemma1 and G.is_cyclic_mod(A, N):
            stats.pruned_lemma1 += 1
            if G.is_maximal_abelian_mod(whole, A, N):
                add(A, N)
        else:
            list0.append((A, N))

    pending = list0
    while pending:
        A = pending[0][0]
        group0 = [q for q in pending if q[0] == A]
        na = _cyclic_quotient_normals(G, A, [N for _, N in group0])
        for _, N in group0:
            ds = [D for D in na if G.core(D) == N]
            for T in _conjugacy_reps(G, ds):
                if G.is_maximal_abelian_mod(G.normalizer(T), A, T):
                    add(A, T)
        pending = [q for q in pending if q[0] != A]


def _cyclic_quotient_normals(G: FiniteGroup, A: Subgroup, lows: list[Subgroup]) -> list[Subgroup]:
    """Normal subgroups D of A with A/D cyclic, restricted to those above every N in ``lows``.

    Such D contain A', so the search starts from A' joined with the
    intersection of ``lows`` (every later core test needs D >= N anyway).
    """
    base_mask = lows[0].mask
    for N in lows[1:]:
        base_mask &= N.mask
    base = G.join(G.commutator_subgroup(A), G.subgroup_from_mask(base_mask).gens)
    return [D for D in G.subgroups_between(base, A) if G.is_cyclic_mod(A, D)]


# -- strong pairs --------------------------------------------------------------------------

def _cyclic_extensions(G: FiniteGroup, K: Subgroup, NK: Subgroup) -> list[Subgroup]:
    """All H = <K, x> with x in N_G(K) (H = K included), smallest first."""
    found: dict[int, Subgroup] = {K.mask: K}
    covered = K.mask
    for x in NK.members:
        if (covered >> x) & 1:
            continue
        H = G.join(K, [x])
        found.setdefault(H.mask, H)
        # every x^k K with k prime to [H:K] generates the same H/K
        m = H.order // K.order
        y = x
        for k in range(1, m):
            if gcd(k, m) == 1:
                covered |= mask_from((G.mul(z, y) for z in K.members), G.order)
            y = G.mul(y, x)
    return sorted(found.values(), key=Subgroup.key)


def _sorted_classes(classes):
    return sorted(classes, key=lambda c: (-c.rep.order, c.rep.members))


def strong_shoda_pairs(G: FiniteGroup, options: SearchOptions | None = None) -> SearchReport:
    """A complete irredundant set of strong Shoda pairs, extremely strong ones first.

    For groups that are not strongly monomial the conjugacy classes are
    scanned once and the report comes back with ``sum_dim < |G|``.
    """
    opts = options or SearchOptions()
    t0 = time.perf_counter()
    first = ext_strong_shoda_pairs(G, SearchOptions(
        lemma1=opts.lemma1, lemma3=opts.lemma3, early_stop=opts.early_stop,
        reverse_tiebreak=opts.reverse_tiebreak, collect_idempotents=opts.collect_idempotents))
    stats = first.stats
    if first.complete:
        first.algorithm = "ssp"
        stats.wall_ms = (time.perf_counter() - t0) * 1000
        return first

    pairs = list(first.pairs)
    pcis = first.idempotents if first.idempotents is not None else [
        e_of(G, p.H, p.K) for p in pairs]
    pcis = list(pcis)
    seen = set(pcis)
    total = first.sum_dim

    classes = G.subgroup_classes()
    stats.lattice_computed = True
    stats.subgroups_enumerated = sum(c.size for c in classes)
    for c in _sorted_classes(classes):
        if total == G.order:
            break
        K = c.rep
        if G.is_normal(K):
            continue
        for H, e, d in _pairs_for_K(G, K, opts, stats, require_non_normal=True):
            if e not in seen:
                seen.add(e)
                pcis.append(e)
                pairs.append(ShodaPair(H, K, STRONG, d))
                total += d
                if total == G.order:
                    break

    verdict = STRONGLY_MONOMIAL_ONLY if total == G.order else NEITHER_OR_UNKNOWN
    report = SearchReport(G, "ssp", pairs, total, verdict, stats=stats)
    if opts.collect_idempotents:
        report.idempotents = pcis
    stats.wall_ms = (time.perf_counter() - t0) * 1000
    return report


def _pairs_for_K(G: FiniteGroup, K: Subgroup, opts: SearchOptions, stats: SearchStats,
                 require_non_normal: bool) -> Iterator[tuple[Subgroup, Idempotent, int]]:
    stats.classes_visited += 1
    if opts.lemma3 and not _centre_cyclic(G, G.core(K)):
        stats.pruned_lemma3 += 1
        return
    NK = G.normalizer(K)
    for H in _cyclic_extensions(G, K, NK):
        stats.candidates_tested += 1
        if require_non_normal and G.is_normal(H):
            continue
        if not _conditions_i_ii(G, H, K, NK):
            continue
        eps = epsilon(H, K)
        ok, conjs = _orthogonal_conjugates(G, H, K, eps)
        if not ok:
            continue
        total = conjs[0]
        for cj in conjs[1:]:
            total = total + cj
        yield H, Idempotent.wrap(total, (H, K)), dim_formula(G, H, K)


def direct_strong_shoda_pairs(G: FiniteGroup, options: SearchOptions | None = None) -> SearchReport:
    """Strong Shoda pairs straight from the full subgroup lattice, with no extremely strong phase.

    Every class of subgroups K (normal or not) is tried, and every new
    idempotent is checked against those already found. This is the baseline
    the extremely-strong-first search is compared with.
    """
    opts = options or SearchOptions()
    t0 = time.perf_counter()
    stats = SearchStats()
    classes = G.subgroup_classes()
    stats.lattice_computed = True
    stats.subgroups_enumerated = sum(c.size for c in classes)
    pairs: list[ShodaPair] = []
    pcis: list[Idempotent] = []
    seen: set = set()
    total = 0
    for c in _sorted_classes(classes):
        if opts.early_stop and total == G.order:
            stats.early_stop = True
            break
        K = c.rep
        for H, e, d in _pairs_for_K(G, K, opts, stats, require_non_normal=False):
            if e in seen:
                continue
            seen.add(e)
            pcis.append(e)
            kind = EXTREMELY_STRONG if G.is_normal(H) else STRONG
            pairs.append(ShodaPair(H, K, kind, d))
            total += d
            if opts.early_stop and total == G.order:
                break
    verdict = STRONGLY_MONOMIAL if total == G.order else NEITHER_OR_UNKNOWN
    report = SearchReport(G, "direct-ssp", pairs, total, verdict, stats=stats)
    if opts.collect_idempotents:
        report.idempotents = pcis
    stats.wall_ms = (time.perf_counter() - t0) * 1000
    return report


# -- thin wrappers -------------------------------------------------------------------------

def pcis_by_essp(G: FiniteGroup, options: SearchOptions | None = None) -> list[Idempotent]:
    opts = options or SearchOptions()
    opts.collect_idempotents = True
    return ext_strong_shoda_pairs(G, opts).idempotents


def pcis_by_ssp(G: FiniteGroup, options: SearchOptions | None = None) -> list[Idempotent]:
    opts = options or SearchOptions()
    opts.collect_idempotents = True
    return strong_shoda_pairs(G, opts).idempotents


def is_normally_monomial(G: FiniteGroup) -> bool:
    return ext_strong_shoda_pairs(G).sum_dim == G.order


def is_strongly_monomial(G: FiniteGroup) -> bool:
    return strong_shoda_pairs(G).sum_dim == G.order
