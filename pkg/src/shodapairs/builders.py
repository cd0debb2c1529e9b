"""Fixed permutation realisations of the builtin group families.

* ``cyclic:n`` -- an n-cycle on n points.
* ``dihedral:2n`` -- the rotation ``i -> i+1`` and reflection ``i -> -i`` on n
  points for n >= 3; for n <= 2 (orders 2 and 4) the left regular action on
  2n points, since the polygon action is not faithful there.
* ``dicyclic:4n`` -- the left regular action on 4n points of
  ``<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>``; ``dicyclic:8`` is Q8.
* ``symmetric:n`` -- an n-cycle and the transposition (0 1).
* ``alternating:n`` -- the 3-cycles (0 1 i), i = 2..n-1.
* ``elementary_abelian:p^k`` -- k disjoint p-cycles.
* direct products -- factors placed on disjoint consecutive point ranges.
"""

from __future__ import annotations

from .errors import ParseError
from .group import DEFAULT_ORDER_CAP, FiniteGroup
from .perm import Permutation


def _cycle(points, degree):
    return Permutation.from_cycles([list(points)], degree)


def cyclic_gens(n: int) -> tuple[int, list[Permutation]]:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    if n == 1:
        return 1, []
    return n, [_cycle(range(n), n)]


def dihedral_gens(order: int) -> tuple[int, list[Permutation]]:
    if order < 2 or order % 2:
        raise ValueError("dihedral order must be even and at least 2")
    n = order // 2
    if n >= 3:
        rot = Permutation([(i + 1) % n for i in range(n)])
        ref = Permutation([(-i) % n for i in range(n)])
        return n, [rot, ref]
    # regular action on r^i s^j, point i + n*j
    deg = 2 * n
    rot = Permutation([((i + 1) % n) + n * j for j in range(2) for i in range(n)])
    # s r^i = r^-i s ; s r^i s = r^-i
    ref = Permutation([((-i) % n) + n * (1 - j) for j in range(2) for i in range(n)])
    return deg, [rot, ref]


def dicyclic_gens(order: int) -> tuple[int, list[Permutation]]:
    if order < 4 or order % 4:
        raise ValueError("dicyclic order must be a multiple of 4")
    n = order // 4
    m = 2 * n
    deg = 4 * n
    # point i + m*j stands for a^i x^j
    a = Permutation([((i + 1) % m) + m * j for j in range(2) for i in range(m)])
    imgs = [0] * deg
    for i in range(m):
        imgs[i] = (-i) % m + m            # x a^i = a^-i x
        imgs[i + m] = (n - i) % m         # x a^i x = a^-i x^2 = a^(n-i)
    return deg, [a, Permutation(imgs)]


def symmetric_gens(n: int) -> tuple[int, list[Permutation]]:
    if n < 1:
        raise ValueError("symmetric degree must be positive")
    if n == 1:
        return 1, []
    if n == 2:
        return 2, [_cycle([0, 1], 2)]
    return n, [_cycle(range(n), n), _cycle([0, 1], n)]


def alternating_gens(n: int) -> tuple[int, list[Permutation]]:
    if n < 1:
        raise ValueError("alternating degree must be positive")
    return n, [_cycle([0, 1, i], n) for i in range(2, n)]


def elementary_abelian_gens(p: int, k: int) -> tuple[int, list[Permutation]]:
    if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    if k < 0:
        raise ValueError("rank must be non-negative")
    if k == 0:
        return 1, []
    deg = p * k
    return deg, [_cycle(range(i * p, (i + 1) * p), deg) for i in range(k)]


def direct_product_gens(factors: list[tuple[int, list[Permutation]]]) -> tuple[int, list[Permutation]]:
    total = sum(d for d, _ in factors)
    gens = []
    offset = 0
    for d, fgens in factors:
        for g in fgens:
            imgs = list(range(total))
            for i, j in enumerate(g.images):
                imgs[offset + i] = offset + j
            gens.append(Permutation(imgs))
        offset += d
    return total, gens


def _int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer in {spec!r}, got {text!r}") from None


def family_gens(spec: str) -> tuple[int, list[Permutation]]:
    """Degree and generators for one ``family:param`` factor."""
    spec = spec.strip()
    if ":" not in spec:
        raise ParseError(f"expected family:parameter, got {spec!r}")
    fam, arg = (s.strip() for s in spec.split(":", 1))
    fam = fam.lower()
    try:
        if fam == "cyclic":
            return cyclic_gens(_int(arg, spec))
        if fam == "dihedral":
            return dihedral_gens(_int(arg, spec))
        if fam in ("dicyclic", "quaternion"):
            return dicyclic_gens(_int(arg, spec))
        if fam == "symmetric":
            return symmetric_gens(_int(arg, spec))
        if fam == "alternating":
            return alternating_gens(_int(arg, spec))
        if fam == "elementary_abelian":
            if "^" in arg:
                p, k = arg.split("^", 1)
                return elementary_abelian_gens(_int(p, spec), _int(k, spec))
            n = _int(arg, spec)
            p = next((q for q in range(2, n + 1) if n % q == 0), None)
            if p is None:
                return elementary_abelian_gens(2, 0)
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise ValueError(f"{arg} is not a prime power")
            return elementary_abelian_gens(p, k)
        if fam == "direct_product":
            return _product(arg)
    except ValueError as exc:
        raise ParseError(f"{spec!r}: {exc}") from None
    raise ParseError(f"unknown group family {fam!r}")


def _product(text: str) -> tuple[int, list[Permutation]]:
    parts = [p for p in text.replace(" x ", "*").split("*")]
    if any(not p.strip() for p in parts):
        raise ParseError(f"empty factor in {text!r}")
    return direct_product_gens([family_gens(p) for p in parts])


def builtin_group(spec: str, cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
    """Build a group from text such as ``dihedral:8`` or ``cyclic:2*symmetric:3``.

    ``direct_product:A*B`` is accepted as an explicit spelling of ``A*B``.
    """
    spec = spec.strip()
    if spec.lower().startswith("direct_product:"):
        spec = spec.split(":", 1)[1]
    deg, gens = _product(spec)
    return FiniteGroup(gens, degree=deg, cap=cap, name=spec)


def group_from_cycles(degree: int, generators: list[str], cap: int = DEFAULT_ORDER_CAP,
                      name: str | None = None) -> FiniteGroup:
    return FiniteGroup([Permutation.parse(g, degree) for g in generators], degree=degree,
                       cap=cap, name=name)


def parse_group_file(text: str, cap: int = DEFAULT_ORDER_CAP, name: str | None = None) -> FiniteGroup:
    """Parse the group file format: ``degree: n`` then one cycle-notation generator per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if degree is None:
            key, _, val = line.partition(":")
            if key.strip().lower() != "degree" or not _:
                raise ParseError("first line must be 'degree: n'", line=lineno, column=1)
            try:
                degree = int(val)
            except ValueError:
                raise ParseError(f"bad degree {val.strip()!r}", line=lineno,
                                 column=raw.index(":") + 2) from None
            if degree < 1:
                raise ParseError("degree must be positive", line=lineno, column=raw.index(":") + 2)
            continue
        try:
            gens.append(Permutation.parse(line, degree))
        except ParseError as exc:
            col = (exc.column or 1) + (len(raw) - len(raw.lstrip()))
            raise ParseError(exc.message, line=lineno, column=col) from None
    if degree is None:
        raise ParseError("missing 'degree: n' header", line=1, column=1)
    return FiniteGroup(gens, degree=degree, cap=cap, name=name)


# -- explicit constructions used where no family covers the group ----------------------

def sl2_3() -> FiniteGroup:
    """SL(2,3) acting on the 8 non-zero vectors of F_3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}

    def act(m):
        (p, q), (r, s) = m
        return Permutation([pos[((p * x + q * y) % 3, (r * x + s * y) % 3)] for x, y in vecs])

    return FiniteGroup([act(((1, 1), (0, 1))), act(((1, 0), (1, 1)))], degree=8, name="SL(2,3)")


def heisenberg_semidirect_c3(p: int = 5) -> FiniteGroup:
    """p^(1+2) of exponent p extended by an order-3 symplectic automorphism (p odd, 3 | p^2-1).

    The extraspecial group is realised on F_p^2 x F_p with
    ``(v, c)(w, d) = (v + w, c + d + w(v, w)/2)`` where ``w`` is the standard
    symplectic form; ``M = [[0, -1], [1, -1]]`` lies in SL(2, p) and has order
    3, so ``(v, c) -> (Mv, c)`` is an automorphism fixing the centre. The group
    acts on the p^3 points of the extraspecial group by left translations and
    by that automorphism. For p = 5 this is the order-375 group 5^(1+2) : 3.
    """
    half = pow(2, -1, p)
    pts = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    pos = {v: i for i, v in enumerate(pts)}

    def mul(u, v):
        a, b, c = u
        x, y, z = v
        return ((a + x) % p, (b + y) % p, (c + z + half * (a * y - b * x)) % p)

    def left(u):
        return Permutation([pos[mul(u, v)] for v in pts])

    def aut(v):
        a, b, c = v
        return (-b % p, (a - b) % p, c)

    sigma = Permutation([pos[aut(v)] for v in pts])
    return FiniteGroup([left((1, 0, 0)), left((0, 1, 0)), sigma], degree=p ** 3,
                       name=f"{p}^(1+2):3")


def extraspecial(p: int) -> FiniteGroup:
    """The extraspecial group p^(1+2) of exponent p (p odd) via left translations."""
    half = pow(2, -1, p)
    pts = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    pos = {v: i for i, v in enumerate(pts)}

    def left(u):
        a, b, c = u
        return Permutation([pos[((a + x) % p, (b + y) % p, (c + z + half * (a * y - b * x)) % p)]
                            for x, y, z in pts])

    return FiniteGroup([left((1, 0, 0)), left((0, 1, 0))], degree=p ** 3, name=f"{p}^(1+2)")


def metacyclic(m: int, n: int, r: int) -> FiniteGroup:
    """C_m : C_n with the generator of C_n acting as x -> x^r on C_m (r^n = 1 mod m).

    Acts on Z_m x Z_n by the regular action.
    """
    if pow(r, n, m) != 1 % m:
        raise ValueError("r must have multiplicative order dividing n modulo m")
    pts = [(i, j) for j in range(n) for i in range(m)]
    pos = {v: k for k, v in enumerate(pts)}
    # element a^i b^j; a * a^i b^j = a^(i+1) b^j ; b * a^i b^j = a^(i r) b^(j+1)
    a = Permutation([pos[((i + 1) % m, j)] for i, j in pts])
    b = Permutation([pos[((i * r) % m, (j + 1) % n)] for i, j in pts])
    return FiniteGroup([a, b], degree=m * n, name=f"C{m}:C{n}")
