"""Finite permutation groups with fully enumerated elements.

Elements are addressed by ordinals into ``FiniteGroup.elements``, which is
sorted lexicographically by image arrays, so ordinal 0 is always the identity.
Subgroups are bitsets (Python ints) over those ordinals.

Subgroup lattice strategy: conjugacy classes are grown by cyclic extension.
Starting from the trivial subgroup, each class representative H is joined with
every element of prime-power order outside H; every subgroup arises this way
(a subgroup is generated by its prime-power elements, adjoined one at a time),
and working on class representatives only is enough because conjugation
commutes with joins. This is complete for non-solvable groups as well, so no
separate brute-force fallback is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import GroupSizeError
from .perm import Permutation

DEFAULT_ORDER_CAP = 20000
DEFAULT_LATTICE_CAP = 100000
# above this order the multiplication table is not materialised
TABLE_LIMIT = 2500


def mask_from(ordinals: Iterable[int], size: int) -> int:
    flags = np.zeros(size, dtype=np.uint8)
    idx = np.fromiter(ordinals, dtype=np.int64)
    flags[idx] = 1
    return int.from_bytes(np.packbits(flags, bitorder="little").tobytes(), "little")


def members_of(mask: int, size: int) -> tuple[int, ...]:
    raw = np.frombuffer(mask.to_bytes((size + 7) // 8, "little"), dtype=np.uint8)
    bits = np.unpackbits(raw, bitorder="little")[:size]
    return tuple(np.flatnonzero(bits).tolist())


class Subgroup:
    """A subgroup of ``parent`` stored as a bitset over element ordinals."""

    __slots__ = ("parent", "mask", "order", "_members", "_gens", "_hash")

    def __init__(self, parent: "FiniteGroup", mask: int, gens: Sequence[int] | None = None,
                 members: Sequence[int] | None = None):
        self.parent = parent
        self.mask = mask
        self._members = tuple(sorted(members)) if members is not None else None
        self.order = len(self._members) if members is not None else mask.bit_count()
        self._gens = tuple(gens) if gens is not None and len(gens) <= 8 else None
        self._hash = hash(mask)

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = members_of(self.mask, self.parent.order)
        return self._members

    @property
    def gens(self) -> tuple[int, ...]:
        """A small generating set (greedy over ascending ordinals unless a short witness is known)."""
        if self._gens is None:
            self._gens = self.canonical_gens()
        return self._gens

    def canonical_gens(self) -> tuple[int, ...]:
        G = self.parent
        cur = G.trivial
        out: list[int] = []
        for x in self.members:
            if x not in cur:
                out.append(x)
                cur = G.join(cur, [x])
                if cur.order == self.order:
                    break
        return tuple(out)

    def key(self) -> tuple:
        """Canonical sort key: order first, then the sorted ordinal list."""
        return (self.order, self.members)

    def __contains__(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self.mask != other.mask and self <= other

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.mask == other.mask

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<Subgroup of order {self.order} in group of order {self.parent.order}>"


@dataclass
class SubgroupClass:
    rep: Subgroup
    members: list[Subgroup] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)


class FiniteGroup:
    """A permutation group with its full, lexicographically ordered element list."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None,
                 cap: int = DEFAULT_ORDER_CAP, name: str | None = None):
        gens = list(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required when there are no generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"degree mismatch: generator of degree {g.degree}, expected {degree}")
        self.degree = degree
        self.name = name
        self.cap = cap
        self.generators = tuple(gens)

        ident = Permutation.identity(degree)
        seen = {ident}
        queue = [ident]
        distinct_gens = [g for g in dict.fromkeys(gens) if not g.is_identity()]
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            for g in distinct_gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
                    if len(seen) > cap:
                        raise GroupSizeError(f"group order exceeds cap of {cap} elements")
        self.elements: list[Permutation] = sorted(seen)
        self.order = len(self.elements)
        self.elem_index: dict[Permutation, int] = {p: k for k, p in enumerate(self.elements)}
        self.gen_ordinals = tuple(dict.fromkeys(self.elem_index[g] for g in gens if not g.is_identity()))

        self.table: list[list[int]] | None = None
        self._mul_cache: dict[tuple[int, int], int] = {}
        if self.order <= TABLE_LIMIT:
            self.table = self._build_table()
        self.inv = [self.index(p.inverse()) for p in self.elements]
        self._orders: list[int] | None = None
        self._trivial = Subgroup(self, 1, gens=(), members=(0,))
        self._whole = Subgroup(self, (1 << self.order) - 1, gens=self.gen_ordinals,
                               members=range(self.order))
        self._normals: list[Subgroup] | None = None
        self._classes: list[SubgroupClass] | None = None
        self._element_classes: list[list[int]] | None = None
        self._derived: Subgroup | None = None
        self.counters = {"lattice_builds": 0, "normal_subgroup_builds": 0}

    # -- element arithmetic ---------------------------------------------------

    def _build_table(self) -> list[list[int]]:
        n = self.order
        if n == 1:
            return [[0]]
        P = np.array([p.images for p in self.elements], dtype=np.int64)
        deg = self.degree
        # pick base points whose images identify each element, keyed in mixed radix
        keys = np.zeros(n, dtype=np.int64)
        base: list[int] = []
        distinct = 1
        for pt in range(deg):
            if deg ** (len(base) + 1) >= 2 ** 62:
                break
            trial = keys * deg + P[:, pt]
            cnt = len(np.unique(trial))
            if cnt > distinct:
                base.append(pt)
                keys = trial
                distinct = cnt
                if cnt == n:
                    break
        if distinct < n:
            return [[self.elem_index[self.elements[a] * self.elements[b]] for b in range(n)]
                    for a in range(n)]
        order = np.argsort(keys)
        sorted_keys = keys[order]
        base_arr = np.array(base, dtype=np.int64)
        radix = deg ** np.arange(len(base) - 1, -1, -1, dtype=np.int64)
        rows = []
        for a in range(n):
            # (a*b)(pt) = b(a(pt)); only the base images are needed
            imgs = P[:, P[a, base_arr]]
            k = imgs @ radix
            rows.append(order[np.searchsorted(sorted_keys, k)].tolist())
        return rows

    def index(self, p: Permutation) -> int:
        return self.elem_index[p]

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return self.table[a][b]
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is None:
            r = self.elem_index[self.elements[a] * self.elements[b]]
            self._mul_cache[key] = r
        return r

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv[g])

    def comm(self, x: int, y: int) -> int:
        """x^-1 y^-1 x y."""
        return self.mul(self.mul(self.inv[x], self.inv[y]), self.mul(x, y))

    def power(self, x: int, k: int) -> int:
        k %= self.element_order(x)
        out = 0
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def element_order(self, x: int) -> int:
        if self._orders is None:
            orders = [0] * self.order
            for a in range(self.order):
                if orders[a]:
                    continue
                k, y = 1, a
                cyc = [a]
                while y != 0:
                    y = self.mul(y, a)
                    k += 1
                    cyc.append(y)
                # powers a^j of an element of order k have order k / gcd(j, k)
                for j, z in enumerate(cyc[:-1], start=1):
                    if not orders[z]:
                        orders[z] = k // math.gcd(j, k)
            self._orders = orders
        return self._orders[x]

    # -- subgroups --------------------------------------------------------------

    @property
    def trivial(self) -> Subgroup:
        return self._trivial

    @property
    def whole(self) -> Subgroup:
        return self._whole

    def subgroup_from_mask(self, mask: int) -> Subgroup:
        return Subgroup(self, mask)

    def subgroup_from_members(self, members: Iterable[int]) -> Subgroup:
        members = list(members)
        return Subgroup(self, mask_from(members, self.order), members=members)

    def subgroup(self, gens: Iterable[int]) -> Subgroup:
        """Smallest subgroup containing the given element ordinals."""
        return self.join(self._trivial, gens)

    def subgroup_by_perms(self, perms: Iterable[Permutation]) -> Subgroup:
        return self.subgroup(self.index(p) for p in perms)

    def join(self, base: Subgroup, extra: Iterable[int]) -> Subgroup:
        """The subgroup generated by ``base`` and ``extra`` (Dimino-style coset closure)."""
        new = [x for x in dict.fromkeys(extra) if x not in base]
        if not new:
            return base
        base_members = base.members
        all_gens = list(base.gens) + new
        flags = bytearray(self.order)
        for b in base_members:
            flags[b] = 1
        elements = list(base_members)
        reps = [0]
        mul = self.mul
        i = 0
        while i < len(reps):
            r = reps[i]
            i += 1
            for s in all_gens:
                y = mul(r, s)
                if not flags[y]:
                    for b in base_members:
                        c = mul(b, y)
                        flags[c] = 1
                        elements.append(c)
                    reps.append(y)
        mask = int.from_bytes(np.packbits(np.frombuffer(bytes(flags), dtype=np.uint8),
                                          bitorder="little").tobytes(), "little")
        return Subgroup(self, mask, gens=all_gens, members=elements)

    def conjugate_subgroup(self, H: Subgroup, g: int) -> Subgroup:
        """g H g^-1."""
        return self.subgroup_from_members(self.conj(g, h) for h in H.members)

    def is_normal(self, H: Subgroup, X: Subgroup | None = None) -> bool:
        """Whether H is normalised by every element of X (default: the whole group)."""
        xs = self.gen_ordinals if X is None else X.gens
        return all(self.conj(x, h) in H for x in xs for h in H.gens)

    def normalizer(self, H: Subgroup, X: Subgroup | None = None) -> Subgroup:
        """N_X(H) = {x in X : x H x^-1 = H}."""
        X = self.whole if X is None else X
        hg = H.gens
        keep = [x for x in X.members if all(self.conj(x, h) in H for h in hg)]
        return self.subgroup_from_members(keep)

    def subgroup_orbit(self, H: Subgroup) -> list[Subgroup]:
        """The conjugacy class of H, in discovery order starting with H."""
        seen = {H.mask: H}
        queue = [H]
        i = 0
        while i < len(queue):
            J = queue[i]
            i += 1
            for s in self.gen_ordinals:
                C = self.conjugate_subgroup(J, s)
                if C.mask not in seen:
                    seen[C.mask] = C
                    queue.append(C)
        return queue

    def core(self, K: Subgroup) -> Subgroup:
        """Intersection of all conjugates of K."""
        mask = K.mask
        for C in self.subgroup_orbit(K):
            mask &= C.mask
        return self.subgroup_from_mask(mask)

    def normal_closure(self, gens: Iterable[int], within: Subgroup | None = None) -> Subgroup:
        """Smallest subgroup normalised by ``within`` (default G) containing ``gens``."""
        conj_by = self.gen_ordinals if within is None else within.gens
        H = self.subgroup(gens)
        changed = True
        while changed:
            changed = False
            for h in H.gens:
                for s in conj_by:
                    c = self.conj(s, h)
                    if c not in H:
                        H = self.join(H, [c])
                        changed = True
        return H

    def commutator_subgroup(self, H: Subgroup | None = None) -> Subgroup:
        if H is None:
            if self._derived is None:
                gs = self.gen_ordinals
                self._derived = self.normal_closure(self.comm(a, b) for a in gs for b in gs)
            return self._derived
        gs = H.gens
        return self.normal_closure((self.comm(a, b) for a in gs for b in gs), within=H)

    def centralizer_mod(self, X: Subgroup, A: Subgroup, K: Subgroup) -> Subgroup:
        """Preimage in X of the centraliser of AK/K in X/K: {x : [x, a] in K for a in A}."""
        ag = A.gens
        keep = [x for x in X.members if all(self.comm(x, a) in K for a in ag)]
        return self.subgroup_from_members(keep)

    def center_mod(self, N: Subgroup) -> Subgroup:
        """Preimage of Z(G/N)."""
        return self.centralizer_mod(self.whole, self.whole, N)

    def center(self) -> Subgroup:
        return self.center_mod(self.trivial)

    def is_abelian_mod(self, H: Subgroup, K: Subgroup) -> bool:
        gs = H.gens
        return all(self.comm(a, b) in K for i, a in enumerate(gs) for b in gs[i + 1:])

    def coset_order(self, x: int, K: Subgroup) -> int:
        """Order of xK in a quotient by the normal-in-context subgroup K."""
        k, y = 1, x
        while y not in K:
            y = self.mul(y, x)
            k += 1
        return k

    def is_cyclic_mod(self, H: Subgroup, K: Subgroup) -> bool:
        """H/K cyclic, K normal in H; decided by maximal coset order."""
        m = H.order // K.order
        if m == 1:
            return True
        covered = K.mask
        for x in H.members:
            if (covered >> x) & 1:
                continue
            if self.coset_order(x, K) == m:
                return True
            covered |= mask_from((self.mul(k, x) for k in K.members), self.order)
        return False

    def is_maximal_abelian_mod(self, X: Subgroup, A: Subgroup, K: Subgroup) -> bool:
        """A/K is a maximal abelian subgroup of X/K (A/K assumed abelian): self-centralising."""
        return self.centralizer_mod(X, A, K) == A

    # -- normal structure ---------------------------------------------------------

    def conjugacy_classes(self) -> list[list[int]]:
        """Conjugacy classes of elements, each sorted, ordered by least member."""
        if self._element_classes is None:
            seen = bytearray(self.order)
            classes = []
            for x in range(self.order):
                if seen[x]:
                    continue
                cls = [x]
                seen[x] = 1
                i = 0
                while i < len(cls):
                    y = cls[i]
                    i += 1
                    for s in self.gen_ordinals:
                        z = self.conj(s, y)
                        if not seen[z]:
                            seen[z] = 1
                            cls.append(z)
                classes.append(sorted(cls))
            self._element_classes = classes
        return self._element_classes

    def rational_class_count(self) -> int:
        """Number of classes after fusing x with x^k for k prime to the order of x."""
        classes = self.conjugacy_classes()
        where = {}
        for i, cls in enumerate(classes):
            for x in cls:
                where[x] = i
        parent = list(range(len(classes)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i, cls in enumerate(classes):
            x = cls[0]
            m = self.element_order(x)
            y = x
            for k in range(2, m):
                y = self.mul(y, x)
                if math.gcd(k, m) == 1:
                    a, b = find(i), find(where[y])
                    if a != b:
                        parent[b] = a
        return len({find(i) for i in range(len(classes))})

    def normal_subgroups(self) -> list[Subgroup]:
        """All normal subgroups by decreasing order, ties by canonical subgroup order."""
        if self._normals is None:
            self.counters["normal_subgroup_builds"] += 1
            closures: dict[int, Subgroup] = {}
            for cls in self.conjugacy_classes()[1:]:
                C = self.normal_closure([cls[0]])
                closures.setdefault(C.mask, C)
            found = {self.trivial.mask: self.trivial}
            found.update(closures)
            frontier = list(closures.values())
            atoms = list(closures.values())
            while frontier:
                nxt = []
                for N in frontier:
                    for C in atoms:
                        if C <= N:
                            continue
                        J = self.join(N, C.gens)
                        if J.mask not in found:
                            found[J.mask] = J
                            nxt.append(J)
                frontier = nxt
            self._normals = sorted(found.values(), key=lambda H: (-H.order, H.members))
        return list(self._normals)

    def max_abelian_normal_above(self, N: Subgroup, reverse: bool = False) -> Subgroup:
        """A normal A >= N with A/N abelian of maximal order.

        Ties go to the first candidate in canonical order, or the last with
        ``reverse=True``.
        """
        cands = [A for A in self.normal_subgroups() if N <= A and self.is_abelian_mod(A, N)]
        best = max(A.order for A in cands)
        tied = sorted((A for A in cands if A.order == best), key=Subgroup.key)
        return tied[-1] if reverse else tied[0]

    def minimal_normals_above(self, H: Subgroup, K: Subgroup) -> list[Subgroup]:
        """Minimal normal subgroups of H properly containing K (K normal in H)."""
        found: dict[int, Subgroup] = {}
        covered = K.mask
        for x in H.members:
            if (covered >> x) & 1:
                continue
            L = self.normal_closure(list(K.gens) + [x], within=H)
            found.setdefault(L.mask, L)
            covered |= mask_from((self.mul(k, x) for k in K.members), self.order)
        cands = sorted(found.values(), key=Subgroup.key)
        return [L for L in cands if not any(M < L for M in cands)]

    def subgroups_between(self, lower: Subgroup, upper: Subgroup) -> list[Subgroup]:
        """All subgroups D with lower <= D <= upper, in canonical order."""
        found = {lower.mask: lower}
        queue = [lower]
        i = 0
        while i < len(queue):
            D = queue[i]
            i += 1
            covered = D.mask
            for x in upper.members:
                if (covered >> x) & 1:
                    continue
                J = self.join(D, [x])
                covered |= mask_from((self.mul(d, x) for d in D.members), self.order)
                if J.mask not in found:
                    found[J.mask] = J
                    queue.append(J)
        return sorted(found.values(), key=Subgroup.key)

    # -- full lattice ---------------------------------------------------------------

    def subgroup_classes(self, max_subgroups: int = DEFAULT_LATTICE_CAP) -> list[SubgroupClass]:
        """Conjugacy classes of all subgroups, ordered by canonical order of representatives.

        Each representative is the least member of its class in canonical order.
        """
        if self._classes is None:
            self.counters["lattice_builds"] += 1
            pp = [x for x in range(1, self.order) if _is_prime_power(self.element_order(x))]
            # one generator per cyclic subgroup
            cyc_seen: set[int] = set()
            cyc_gens = []
            for x in pp:
                C = self.subgroup([x])
                if C.mask not in cyc_seen:
                    cyc_seen.add(C.mask)
                    cyc_gens.append(x)
            known: dict[int, int] = {}
            classes: list[list[Subgroup]] = []
            total = 0

            def register(H):
                nonlocal total
                orbit = self.subgroup_orbit(H)
                cid = len(classes)
                for C in orbit:
                    known[C.mask] = cid
                classes.append(orbit)
                total += len(orbit)
                if total > max_subgroups:
                    raise GroupSizeError(f"subgroup lattice exceeds {max_subgroups} subgroups")

            register(self.trivial)
            i = 0
            while i < len(classes):
                H = classes[i][0]
                i += 1
                if H.order == self.order:
                    continue
                covered = H.mask
                for g in cyc_gens:
                    if (covered >> g) & 1:
                        continue
                    J = self.join(H, [g])
                    covered |= mask_from((self.mul(h, g) for h in H.members), self.order)
                    if J.mask not in known:
                        register(J)
            out = []
            for orbit in classes:
                ms = sorted(orbit, key=Subgroup.key)
                out.append(SubgroupClass(rep=ms[0], members=ms))
            out.sort(key=lambda c: c.rep.key())
            self._classes = out
        return self._classes

    def all_subgroups(self) -> list[Subgroup]:
        return sorted((H for c in self.subgroup_classes() for H in c.members), key=Subgroup.key)

    @property
    def lattice_computed(self) -> bool:
        return self._classes is not None

    # -- misc -------------------------------------------------------------------------

    def is_abelian(self) -> bool:
        return self.is_abelian_mod(self.whole, self.trivial)

    def left_transversal(self, S: Subgroup) -> list[int]:
        """Least ordinal of each left coset gS."""
        covered = 0
        reps = []
        for g in range(self.order):
            if (covered >> g) & 1:
                continue
            reps.append(g)
            covered |= mask_from((self.mul(g, s) for s in S.members), self.order)
        return reps

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order} on {self.degree} points>"


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


class Quotient:
    """The quotient H/K materialised as a coset table (K normal in H).

    Cosets are numbered in order of their least element; coset 0 is K.
    """

    def __init__(self, H: Subgroup, K: Subgroup):
        G = H.parent
        if not K <= H:
            raise ValueError("modulus is not contained in the numerator")
        if not G.is_normal(K, H):
            raise ValueError("modulus is not normal in the numerator")
        self.parent = G
        self.numerator = H
        self.modulus = K
        self.coset_of: dict[int, int] = {}
        self.coset_reps: list[int] = []
        for x in H.members:
            if x in self.coset_of:
                continue
            idx = len(self.coset_reps)
            self.coset_reps.append(x)
            for k in K.members:
                self.coset_of[G.mul(k, x)] = idx
        reps = self.coset_reps
        self.mult_table = [[self.coset_of[G.mul(a, b)] for b in reps] for a in reps]

    @property
    def order(self) -> int:
        return len(self.coset_reps)

    def mul(self, i: int, j: int) -> int:
        return self.mult_table[i][j]

    def element_order(self, i: int) -> int:
        k, y = 1, i
        while y != 0:
            y = self.mult_table[y][i]
            k += 1
        return k

    def is_abelian(self) -> bool:
        t = self.mult_table
        n = self.order
        return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))

    def is_cyclic(self) -> bool:
        return max(self.element_order(i) for i in range(self.order)) == self.order

    def center(self) -> list[int]:
        return self.centralizer(range(self.order))

    def centralizer(self, idxs: Iterable[int]) -> list[int]:
        idxs = list(idxs)
        t = self.mult_table
        return [x for x in range(self.order) if all(t[x][a] == t[a][x] for a in idxs)]

    def cosets_of(self, A: Subgroup) -> list[int]:
        """Cosets making up A/K for K <= A <= H."""
        if not (self.modulus <= A and A <= self.numerator):
            raise ValueError("subgroup does not lie between modulus and numerator")
        return sorted({self.coset_of[a] for a in A.members})

    def is_maximal_abelian(self, A: Subgroup) -> bool:
        """A/K maximal abelian in H/K, i.e. self-centralising."""
        idxs = self.cosets_of(A)
        t = self.mult_table
        if any(t[a][b] != t[b][a] for a in idxs for b in idxs):
            raise ValueError("subquotient is not abelian")
        return self.centralizer(idxs) == idxs

    def as_permutation_group(self) -> FiniteGroup:
        """Right regular action on the cosets."""
        gens = [Permutation([self.mult_table[c][i] for c in range(self.order)])
                for i in sorted({self.coset_of[g] for g in self.numerator.gens})]
        return FiniteGroup(gens, degree=self.order)


def enumerate_group(generators: Sequence[Permutation], degree: int | None = None,
                    cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    return FiniteGroup(generators, degree=degree, cap=cap)
