"""Permutations on {1..n} and cycle notation.

Products are read left to right: ``a * b`` applies ``a`` first, then ``b``.
That is the convention of right actions (``x^g``) used throughout the
package, so conjugation is ``h^g = g^-1 * h * g``.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = ["Permutation", "compose", "parse_cycles", "format_cycles"]


class Permutation:
    """A bijection of {1..degree}, stored as a 0-based image tuple.

    ``images`` exposes the 1-based view: ``images[i-1]`` is the image of
    point ``i``.  Ordering is lexicographic on the image arrays, which is
    the canonical element order of every group in this package.
    """

    __slots__ = ("_img", "_hash")

    def __init__(self, images: Sequence[int], *, zero_based: bool = False):
        img = tuple(int(x) for x in images)
        if not zero_based:
            img = tuple(x - 1 for x in img)
        if sorted(img) != list(range(len(img))):
            raise ValueError(f"not a permutation: {images!r}")
        self._img = img
        self._hash = hash(img)

    @classmethod
    def _raw(cls, img: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p._img = img
        p._hash = hash(img)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    @property
    def degree(self) -> int:
        return len(self._img)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._img)

    @property
    def array_form(self) -> tuple[int, ...]:
        """0-based images."""
        return self._img

    def __call__(self, point: int) -> int:
        return self._img[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._img)
        for i, x in enumerate(self._img):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._img))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = set()
        out = []
        for start in range(len(self._img)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._img[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._img[j]
            if len(cyc) > 1:
                out.append(tuple(x + 1 for x in cyc))
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._img == other._img

    def __lt__(self, other: "Permutation") -> bool:
        return self._img < other._img

    def __le__(self, other: "Permutation") -> bool:
        return self._img <= other._img

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Permutation('{format_cycles(self)}', degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` then ``b``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    bi = b._img
    return Permutation._raw(tuple(bi[x] for x in a._img))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``(1 2 3)(4 5)``.

    Points are 1-based and may be separated by spaces or commas. ``()`` and
    the empty string denote the identity.
    """
    stripped = text.strip()
    pos = 0
    img = list(range(degree))
    used: set[int] = set()
    for m in _CYCLE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ValueError(f"unexpected text {stripped[pos:m.start()]!r} in {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            pts = [int(tok) for tok in body]
        except ValueError:
            raise ValueError(f"bad point in cycle {m.group(0)!r}") from None
        for p in pts:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in used:
                raise ValueError(f"point {p} repeated in {text!r}")
            used.add(p)
        for i, p in enumerate(pts):
            img[p - 1] = pts[(i + 1) % len(pts)] - 1
    if stripped[pos:].strip():
        raise ValueError(f"unexpected text {stripped[pos:]!r} in {text!r}")
    return Permutation._raw(tuple(img))


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def perms_from_cycles(texts: Iterable[str], degree: int) -> list[Permutation]:
    return [parse_cycles(t, degree) for t in texts]
