"""Permutations on points 0..degree-1 with a right-action convention.

``compose(a, b)`` applies ``a`` first and ``b`` second, so that points are
acted on from the right: ``x^(ab) = (x^a)^b``.  Cycle notation is 1-based
externally and 0-based internally.
"""

from __future__ import annotations

from math import lcm

from .errors import (
    DegreeMismatch,
    DuplicatePoint,
    NotABijection,
    ParseError,
    PointOutOfRange,
)


class Permutation:
    """An immutable permutation stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        seen = [False] * n
        for x in images:
            if x < 0 or x >= n or seen[x]:
                raise NotABijection(f"images {images} are not a bijection on 0..{n - 1}")
            seen[x] = True
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        p = cls.__new__(cls)
        object.__setattr__(p, "images", tuple(range(degree)))
        return p

    @classmethod
    def _unchecked(cls, images: tuple) -> Permutation:
        p = cls.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    def apply(self, point: int) -> int:
        """Image of a point under the right action."""
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: self first, then other."""
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        o = other.images
        return Permutation._unchecked(tuple(o[x] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._unchecked(tuple(inv))

    def order(self) -> int:
        """Least n >= 1 with self**n the identity (lcm of cycle lengths)."""
        return lcm(*(len(c) for c in self.cycles())) if self.degree else 1

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles (including fixed points), each starting at its
        least point, ordered by least point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """Canonical 1-based cycle notation; fixed points omitted, identity
        printed as "()"."""
        parts = [
            "(" + " ".join(str(p + 1) for p in cyc) + ")"
            for cyc in self.cycles()
            if len(cyc) > 1
        ]
        return "".join(parts) if parts else "()"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def perm_from_images(images) -> Permutation:
    """Build a permutation from a 0-based image array."""
    return Permutation(images)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Apply ``a`` first, then ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def element_order(a: Permutation) -> int:
    return a.order()


def perm_from_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation into a permutation of the given degree.

    Grammar: zero or more parenthesized cycles of comma- or
    whitespace-separated decimal labels; "()" and the empty string both
    denote the identity.  Points absent from all cycles are fixed.
    """
    images = list(range(degree))
    used = set()
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise ParseError(f"unexpected character {ch!r} at position {i}")
        i += 1
        labels = []
        current = ""
        closed = False
        while i < n:
            ch = text[i]
            if ch.isdigit():
                current += ch
                i += 1
            elif ch in ", \t":
                if current:
                    labels.append(int(current))
                    current = ""
                i += 1
            elif ch == ")":
                if current:
                    labels.append(int(current))
                i += 1
                closed = True
                break
            else:
                raise ParseError(f"unexpected character {ch!r} at position {i}")
        if not closed:
            raise ParseError("unbalanced parenthesis")
        points = []
        for lab in labels:
            if lab < 1 or lab > degree:
                raise PointOutOfRange(f"point {lab} outside 1..{degree}")
            pt = lab - 1
            if pt in used:
                raise DuplicatePoint(f"point {lab} appears twice")
            used.add(pt)
            points.append(pt)
        for j, pt in enumerate(points):
            images[pt] = points[(j + 1) % len(points)]
    return Permutation(images)
