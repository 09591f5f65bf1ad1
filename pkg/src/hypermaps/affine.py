"""Affine maps of the plane F_p^2 acting on row vectors from the right.

A map (M, v) sends u to u*M + v, so composition reads left to right:
(M1, v1) then (M2, v2) is (M1*M2, v1*M2 + v2).  Points of the plane are
indexed (a, b) -> a*p + b, which turns every affine map into a permutation
of degree p^2 compatible with the package-wide right-action convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation


@dataclass(frozen=True)
class AffineMap:
    """u  |->  u * ||a,b;c,d|| + (e,f)  over F_p (entries stored mod p)."""

    p: int
    a: int
    b: int
    c: int
    d: int
    e: int = 0
    f: int = 0

    def __post_init__(self):
        p = self.p
        for name in ("a", "b", "c", "d", "e", "f"):
            object.__setattr__(self, name, getattr(self, name) % p)
        if (self.a * self.d - self.b * self.c) % p == 0:
            raise ValueError("matrix part is singular")

    @classmethod
    def identity(cls, p: int) -> AffineMap:
        return cls(p, 1, 0, 0, 1)

    @classmethod
    def linear(cls, p: int, a: int, b: int, c: int, d: int) -> AffineMap:
        return cls(p, a, b, c, d)

    @classmethod
    def translation(cls, p: int, e: int, f: int) -> AffineMap:
        return cls(p, 1, 0, 0, 1, e, f)

    def apply(self, u: tuple[int, int]) -> tuple[int, int]:
        x, y = u
        return (
            (x * self.a + y * self.c + self.e) % self.p,
            (x * self.b + y * self.d + self.f) % self.p,
        )

    def __mul__(self, other: AffineMap) -> AffineMap:
        """Apply self first, then other."""
        if self.p != other.p:
            raise ValueError("affine maps over different primes")
        p = self.p
        return AffineMap(
            p,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.e * other.a + self.f * other.c + other.e,
            self.e * other.b + self.f * other.d + other.f,
        )

    def __pow__(self, n: int) -> AffineMap:
        if n < 0:
            raise ValueError("negative powers not supported")
        acc = AffineMap.identity(self.p)
        for _ in range(n):
            acc = acc * self
        return acc

    def to_permutation(self) -> Permutation:
        p = self.p
        images = [0] * (p * p)
        for a in range(p):
            for b in range(p):
                x, y = self.apply((a, b))
                images[a * p + b] = x * p + y
        return Permutation(images)
