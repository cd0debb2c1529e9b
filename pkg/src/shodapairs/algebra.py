"""Exact sparse arithmetic in Q[G] and the idempotents built from subgroups."""

from __future__ import annotations

import os
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

from .errors import GroupSizeError
from .group import FiniteGroup, Subgroup

DIM_ORACLE_CAP = 200

# idempotency of every constructed Idempotent is asserted when this is on
CHECK_IDEMPOTENTS = os.environ.get("SHODAPAIRS_CHECK", "") not in ("", "0")


class AlgebraElement:
    """An element of Q[G]: ordinal -> non-zero Fraction."""

    __slots__ = ("group", "coeffs", "_hash")

    def __init__(self, group: FiniteGroup, coeffs: Mapping[int, Fraction | int] | None = None):
        self.group = group
        self.coeffs = {k: Fraction(v) for k, v in (coeffs or {}).items() if v != 0}
        self._hash = None

    @classmethod
    def one(cls, group: FiniteGroup) -> "AlgebraElement":
        return cls(group, {0: 1})

    @classmethod
    def zero(cls, group: FiniteGroup) -> "AlgebraElement":
        return cls(group)

    @classmethod
    def basis(cls, group: FiniteGroup, x: int) -> "AlgebraElement":
        return cls(group, {x: 1})

    def _check(self, other: "AlgebraElement"):
        if self.group is not other.group:
            raise ValueError("elements of different group algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(self.group, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.group, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, c) -> "AlgebraElement":
        c = Fraction(c)
        return AlgebraElement(self.group, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        self._check(other)
        mul = self.group.mul
        out: dict[int, Fraction] = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                g = mul(a, b)
                out[g] = out.get(g, 0) + ca * cb
        return AlgebraElement(self.group, out)

    def __rmul__(self, c) -> "AlgebraElement":
        return self.scale(c)

    def conjugate(self, g: int) -> "AlgebraElement":
        """Transport coefficients along x -> g x g^-1."""
        conj = self.group.conj
        return AlgebraElement(self.group, {conj(g, x): v for x, v in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AlgebraElement) and self.group is other.group
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.coeffs.items()))
        return self._hash

    def to_triples(self) -> list[tuple[str, int, int]]:
        """(element in cycle notation, numerator, denominator), by ordinal."""
        els = self.group.elements
        return [(els[k].cycle_string(), v.numerator, v.denominator)
                for k, v in sorted(self.coeffs.items())]

    def __repr__(self) -> str:
        terms = " + ".join(f"{v}*{self.group.elements[k]}" for k, v in sorted(self.coeffs.items()))
        return f"AlgebraElement({terms or '0'})"


class Idempotent(AlgebraElement):
    """An idempotent with a record of where it came from; equality ignores provenance."""

    __slots__ = ("provenance",)

    def __init__(self, group, coeffs=None, provenance=None):
        super().__init__(group, coeffs)
        self.provenance = provenance
        if CHECK_IDEMPOTENTS and self * self != self:
            raise AssertionError(f"not idempotent: {provenance}")

    @classmethod
    def wrap(cls, e: AlgebraElement, provenance=None) -> "Idempotent":
        return cls(e.group, e.coeffs, provenance)


def hat(H: Subgroup) -> AlgebraElement:
    """(1/|H|) * sum of the elements of H."""
    c = Fraction(1, H.order)
    return AlgebraElement(H.parent, {h: c for h in H.members})


def epsilon(H: Subgroup, K: Subgroup) -> Idempotent:
    """hat(H) if H = K, else the product of (hat(K) - hat(L)) over minimal normal L of H above K."""
    G = H.parent
    if not (K <= H and G.is_normal(K, H)):
        raise ValueError("K must be a normal subgroup of H")
    if H == K:
        return Idempotent.wrap(hat(H), ("epsilon", H, K))
    kh = hat(K)
    out = kh
    for L in G.minimal_normals_above(H, K):
        out = out * (kh - hat(L))
    return Idempotent.wrap(out, ("epsilon", H, K))


def distinct_conjugates(G: FiniteGroup, H: Subgroup, K: Subgroup,
                        eps: AlgebraElement | None = None) -> list[AlgebraElement]:
    """Distinct G-conjugates of epsilon(H, K), first one being epsilon itself.

    Only a left transversal of N_G(H) n N_G(K) is visited; conjugates are
    constant on its cosets.
    """
    eps = epsilon(H, K) if eps is None else eps
    stab = G.subgroup_from_mask(G.normalizer(H).mask & G.normalizer(K).mask)
    seen: dict[AlgebraElement, None] = {}
    for t in G.left_transversal(stab):
        seen.setdefault(eps.conjugate(t) if t else eps, None)
    return list(seen)


def e_of(G: FiniteGroup, H: Subgroup, K: Subgroup) -> Idempotent:
    """Sum of the distinct G-conjugates of epsilon(H, K)."""
    total = AlgebraElement.zero(G)
    for c in distinct_conjugates(G, H, K):
        total = total + c
    return Idempotent.wrap(total, (H, K))


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def dim_formula(G: FiniteGroup, H: Subgroup, K: Subgroup) -> int:
    """phi([H:K]) * [N_G(K):H] * [G:N_G(K)]^2 for a strong Shoda pair (H, K)."""
    NK = G.normalizer(K)
    return euler_phi(H.order // K.order) * (NK.order // H.order) * (G.order // NK.order) ** 2


def dim_direct(G: FiniteGroup, e: AlgebraElement, cap: int = DIM_ORACLE_CAP) -> int:
    """Rank over Q of {g e : g in G}, by exact elimination on integer rows."""
    if G.order > cap:
        raise GroupSizeError(f"dim_direct limited to |G| <= {cap}")
    if e.is_zero():
        return 0
    den = 1
    for v in e.coeffs.values():
        den = den * v.denominator // gcd(den, v.denominator)
    ints = {k: int(v * den) for k, v in e.coeffs.items()}
    rows = []
    for g in range(G.order):
        row = [0] * G.order
        for x, c in ints.items():
            row[G.mul(g, x)] = c
        rows.append(row)
    return _rank(rows)


def _rank(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination; rows are reduced by their content."""
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        pv = p[col]
        for i in range(rank + 1, len(rows)):
            r = rows[i]
            rv = r[col]
            if rv:
                new = [pv * a - rv * b for a, b in zip(r, p)]
                g = 0
                for a in new:
                    if a:
                        g = gcd(g, a)
                        if g == 1:
                            break
                if g > 1:
                    new = [a // g for a in new]
                rows[i] = new
        rank += 1
    return rank


def is_central(e: AlgebraElement) -> bool:
    return all(e.conjugate(s) == e for s in e.group.gen_ordinals)


def are_orthogonal(es: Iterable[AlgebraElement]) -> bool:
    es = list(es)
    return all((a * b).is_zero() for i, a in enumerate(es) for j, b in enumerate(es) if i != j)


def sum_is_one(es: Iterable[AlgebraElement]) -> bool:
    es = list(es)
    if not es:
        return False
    total = AlgebraElement.zero(es[0].group)
    for e in es:
        total = total + e
    return total == AlgebraElement.one(es[0].group)
