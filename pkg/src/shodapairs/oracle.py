"""Brute-force cross-checks, kept off the main computation path."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (DIM_ORACLE_CAP, AlgebraElement, Idempotent, dim_direct, epsilon, hat,
                      is_central)
from .group import FiniteGroup
from .search import ext_strong_shoda_pairs


def linear_pci_set(G: FiniteGroup) -> list[Idempotent]:
    """hat(G) together with epsilon(G, N) for each proper N >= G' with G/N cyclic."""
    out: dict[AlgebraElement, Idempotent] = {}
    g_hat = Idempotent.wrap(hat(G.whole), (G.whole, G.whole))
    out[g_hat] = g_hat
    derived = G.commutator_subgroup()
    for N in G.normal_subgroups():
        if N == G.whole or not derived <= N or not G.is_cyclic_mod(G.whole, N):
            continue
        e = epsilon(G.whole, N)
        out.setdefault(e, e)
    return list(out.values())


@dataclass
class VerifyReport:
    ok: bool = True
    failures: list[str] = field(default_factory=list)
    count: int = 0
    sum_dim_direct: int | None = None
    sum_is_one: bool = False

    def fail(self, msg: str) -> None:
        self.ok = False
        self.failures.append(msg)

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def verify_pci_set(G: FiniteGroup, es: list[AlgebraElement], claimed_complete: bool | None = None,
                   oracle_cap: int = DIM_ORACLE_CAP) -> VerifyReport:
    """Check idempotency, centrality, pairwise orthogonality, dimension budget and the sum.

    ``claimed_complete`` True/False additionally requires the sum to be / not
    to be the identity. Dimensions are computed only when |G| <= oracle_cap.
    """
    rep = VerifyReport(count=len(es))
    one = AlgebraElement.one(G)
    for i, e in enumerate(es):
        if e * e != e:
            rep.fail(f"idempotent {i} is not idempotent")
        if not is_central(e):
            rep.fail(f"idempotent {i} is not central")
    for i, a in enumerate(es):
        for j in range(i + 1, len(es)):
            if not (a * es[j]).is_zero():
                rep.fail(f"idempotents {i} and {j} are not orthogonal")
    total = AlgebraElement.zero(G)
    for e in es:
        total = total + e
    rep.sum_is_one = total == one
    if G.order <= oracle_cap:
        rep.sum_dim_direct = sum(dim_direct(G, e, cap=oracle_cap) for e in es)
        if rep.sum_dim_direct > G.order:
            rep.fail(f"dimensions sum to {rep.sum_dim_direct} > |G| = {G.order}")
    if claimed_complete is True and not rep.sum_is_one:
        rep.fail("claimed complete but the idempotents do not sum to 1")
    if claimed_complete is False and rep.sum_is_one:
        rep.fail("claimed incomplete but the idempotents sum to 1")
    return rep


def count_consistency(G: FiniteGroup) -> bool:
    """For normally monomial G: one extremely strong pair per rational class."""
    return len(ext_strong_shoda_pairs(G).pairs) == G.rational_class_count()
