"""Groups the suites iterate over.

``CORPUS`` holds every builtin family member of order <= 48, cyclic groups up
to 48, a set of direct products and a few explicit constructions.
"""

from functools import lru_cache

from shodapairs.builders import (builtin_group, extraspecial, heisenberg_semidirect_c3,
                                 metacyclic, sl2_3)

CYCLIC = [f"cyclic:{n}" for n in range(1, 49)]
DIHEDRAL = [f"dihedral:{n}" for n in range(2, 49, 2)]
DICYCLIC = [f"dicyclic:{n}" for n in range(4, 49, 4)]
SYMMETRIC = [f"symmetric:{n}" for n in range(1, 5)]
ALTERNATING = [f"alternating:{n}" for n in range(1, 5)]
ELEMENTARY = ["elementary_abelian:2^2", "elementary_abelian:2^3", "elementary_abelian:2^4",
              "elementary_abelian:2^5", "elementary_abelian:3^2", "elementary_abelian:3^3",
              "elementary_abelian:5^2"]
PRODUCTS = [
    "cyclic:2*symmetric:3", "cyclic:2*dihedral:8", "cyclic:2*dicyclic:8",
    "cyclic:3*symmetric:3", "symmetric:3*symmetric:3", "cyclic:2*alternating:4",
    "cyclic:2*symmetric:4", "cyclic:4*symmetric:3", "cyclic:3*dicyclic:8",
    "cyclic:2*cyclic:2*symmetric:3", "cyclic:3*alternating:4", "dihedral:8*cyclic:3",
    "dicyclic:12*cyclic:2", "cyclic:2*cyclic:4", "cyclic:4*cyclic:4", "cyclic:3*cyclic:6",
    "dihedral:8*cyclic:2*cyclic:2", "dihedral:6*dihedral:6", "dicyclic:8*cyclic:3",
    "cyclic:5*symmetric:3", "dihedral:10*cyclic:2", "cyclic:2*cyclic:2*cyclic:2*cyclic:3",
]
EXPLICIT = {
    "SL(2,3)": sl2_3,
    "C7:C3": lambda: metacyclic(7, 3, 2),
    "C5:C4": lambda: metacyclic(5, 4, 2),
    "C3:C8": lambda: metacyclic(3, 8, 2),
    "C9:C3": lambda: metacyclic(9, 3, 4),
    "3^(1+2)": lambda: extraspecial(3),
}
# odd-order, beyond the order-48 corpus; used by the normal-monomiality datum
ODD_EXTRA = {
    "C11:C5": lambda: metacyclic(11, 5, 3),
    "C13:C3": lambda: metacyclic(13, 3, 3),
    "C7:C9": lambda: metacyclic(7, 9, 2),
    "5^(1+2)": lambda: extraspecial(5),
    "C3*C7:C3": lambda: _product_explicit(),
}

CORPUS = CYCLIC + DIHEDRAL + DICYCLIC + SYMMETRIC + ALTERNATING + ELEMENTARY + PRODUCTS + list(EXPLICIT)


def _product_explicit():
    from shodapairs.builders import direct_product_gens
    from shodapairs.group import FiniteGroup
    F = metacyclic(7, 3, 2)
    deg, gens = direct_product_gens([(3, list(builtin_group("cyclic:3").generators)),
                                     (F.degree, list(F.generators))])
    return FiniteGroup(gens, degree=deg, name="C3xC7:C3")


@lru_cache(maxsize=None)
def get_group(name: str):
    if name in EXPLICIT:
        return EXPLICIT[name]()
    if name in ODD_EXTRA:
        return ODD_EXTRA[name]()
    if name == "5^(1+2):3":
        return heisenberg_semidirect_c3(5)
    return builtin_group(name)


def fresh_group(name: str):
    """An uncached copy, for checks that look at lazily computed state."""
    return get_group.__wrapped__(name)
