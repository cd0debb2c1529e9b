"""Permutations on 0-based points, with cycle-notation parsing and printing.

Products compose left to right: ``(p * q)(x) = q(p(x))``, i.e. points are acted
on from the right as in GAP.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import ParseError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    __slots__ = ("images", "_hash")

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for pt in cyc:
                if not 0 <= pt < degree:
                    raise ValueError(f"point {pt} outside 0..{degree - 1}")
                if pt in seen:
                    raise ValueError(f"point {pt} repeated in cycle notation")
                seen.add(pt)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation such as ``(0 1 2)(3 4)``; ``()`` is the identity.

        Points may be separated by spaces or commas.
        """
        stripped = text.strip()
        if not stripped:
            raise ParseError("empty permutation", column=1)
        cycles = []
        pos = 0
        for m in _CYCLE_RE.finditer(stripped):
            gap = stripped[pos:m.start()]
            if gap.strip():
                raise ParseError(f"unexpected text {gap.strip()!r}", column=pos + 1)
            body = m.group(1).replace(",", " ").split()
            try:
                cycles.append([int(tok) for tok in body])
            except ValueError:
                raise ParseError(f"non-integer point in {m.group(0)!r}", column=m.start() + 1) from None
            pos = m.end()
        if stripped[pos:].strip():
            raise ParseError(f"unexpected text {stripped[pos:].strip()!r}", column=pos + 1)
        try:
            return cls.from_cycles(cycles, degree)
        except ValueError as exc:
            raise ParseError(str(exc), column=1) from None

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return Permutation(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        out = []
        seen = set()
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"

    def __str__(self) -> str:
        return self.cycle_string()
