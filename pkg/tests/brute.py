"""Naive reference computations on raw image tuples, sharing no code with the package."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def compose(a, b):
    """a first, then b."""
    return tuple(b[i] for i in a)


def inverse(a):
    out = [0] * len(a)
    for i, j in enumerate(a):
        out[j] = i
    return tuple(out)


def closure(gens, degree):
    ident = tuple(range(degree))
    elems = {ident} | set(gens)
    while True:
        new = {compose(x, y) for x in elems for y in elems} - elems
        if not new:
            return frozenset(elems)
        elems |= new


def cycle_perm(cycles, degree):
    img = list(range(degree))
    for c in cycles:
        for i, p in enumerate(c):
            img[p] = c[(i + 1) % len(c)]
    return tuple(img)


def subgroups(elements, degree, max_gens=2):
    """All subgroups generated by at most ``max_gens`` elements."""
    els = sorted(elements)
    out = {closure([], degree)}
    for k in range(1, max_gens + 1):
        for gens in combinations(els, k):
            out.add(closure(gens, degree))
    return out


def subsets_closed(elements, degree):
    """Every subset of size dividing |G|, containing 1 and closed under products."""
    els = sorted(elements)
    n = len(els)
    ident = tuple(range(degree))
    rest = [e for e in els if e != ident]
    out = set()
    for size in range(n):
        if n % (size + 1):
            continue
        for combo in combinations(rest, size):
            s = set(combo) | {ident}
            if all(compose(a, b) in s for a in s for b in s):
                out.add(frozenset(s))
    return out


def conjugate_set(S, g):
    gi = inverse(g)
    return frozenset(compose(compose(g, x), gi) for x in S)


def is_normal(S, elements):
    return all(conjugate_set(S, g) == S for g in elements)


def subgroup_classes(subs, elements):
    remaining = set(subs)
    classes = []
    while remaining:
        H = remaining.pop()
        cls = {conjugate_set(H, g) for g in elements}
        remaining -= cls
        classes.append(cls)
    return classes


def order_of(x):
    ident = tuple(range(len(x)))
    k, y = 1, x
    while y != ident:
        y = compose(y, x)
        k += 1
    return k


def power(x, k):
    y = tuple(range(len(x)))
    for _ in range(k):
        y = compose(y, x)
    return y


def rational_classes(elements):
    """Orbits of G under g -> h g^k h^-1, gcd(k, |g|) = 1."""
    remaining = set(elements)
    count = 0
    while remaining:
        x = remaining.pop()
        m = order_of(x)
        orbit = set()
        for k in range(1, m + 1):
            if gcd(k, m) == 1:
                xk = power(x, k)
                orbit |= {compose(compose(g, xk), inverse(g)) for g in elements}
        remaining -= orbit
        count += 1
    return count


def convolve(a, b):
    """Product in Q[G] with elements as keys."""
    out = {}
    for x, cx in a.items():
        for y, cy in b.items():
            z = compose(x, y)
            out[z] = out.get(z, Fraction(0)) + cx * cy
    return {k: v for k, v in out.items() if v}
