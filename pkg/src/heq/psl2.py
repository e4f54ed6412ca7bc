"""Exact arithmetic in PSL2(Z).

Elements are 2x2 integer matrices of determinant 1 taken modulo the center
{I, -I}.  Every value is stored sign-normalized: the first nonzero entry in
reading order (e11, e12, e21, e22) is positive, which makes the class
representative unique and equality entrywise.  All entries are plain Python
integers, so there is no overflow anywhere.
"""

from __future__ import annotations

import math


class NotUnimodular(ValueError):
    """Raised when a raw matrix does not have determinant 1."""


class ProjMat2:
    """A sign-normalized element of PSL2(Z).

    Immutable after construction; multiplication, inversion and equality are
    pure functions of the four entries.
    """

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11: int, e12: int, e21: int, e22: int):
        det = e11 * e22 - e12 * e21
        if det != 1:
            raise NotUnimodular(
                f"determinant is {det}, expected 1: [[{e11},{e12}],[{e21},{e22}]]"
            )
        for entry in (e11, e12, e21, e22):
            if entry != 0:
                if entry < 0:
                    e11, e12, e21, e22 = -e11, -e12, -e21, -e22
                break
        object.__setattr__(self, "e11", e11)
        object.__setattr__(self, "e12", e12)
        object.__setattr__(self, "e21", e21)
        object.__setattr__(self, "e22", e22)

    def __setattr__(self, name, value):
        raise AttributeError("ProjMat2 is immutable")

    def entries(self) -> tuple[int, int, int, int]:
        return (self.e11, self.e12, self.e21, self.e22)

    def rows(self) -> list[list[int]]:
        return [[self.e11, self.e12], [self.e21, self.e22]]

    def __mul__(self, other: "ProjMat2") -> "ProjMat2":
        a, b, c, d = self.entries()
        e, f, g, h = other.entries()
        return ProjMat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inv(self) -> "ProjMat2":
        # adjugate; determinant is 1 so no division is needed
        return ProjMat2(self.e22, -self.e12, -self.e21, self.e11)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjMat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"ProjMat2({self.e11}, {self.e12}, {self.e21}, {self.e22})"

    def __str__(self) -> str:
        return f"[[{self.e11},{self.e12}],[{self.e21},{self.e22}]]"


def normalize(e11: int, e12: int, e21: int, e22: int) -> ProjMat2:
    """Build the canonical representative of a raw determinant-1 matrix."""
    return ProjMat2(e11, e12, e21, e22)


IDENTITY = ProjMat2(1, 0, 0, 1)

# The fixed generators of PSL2(Z) = C2 * C3 and the free basis of the
# commutator subgroup F (kernel of the abelianization onto C2 x C3):
#   a^2 = b^3 = 1,  p = a b^2 a b,  q = b a b^2 a.
MAT_A = ProjMat2(0, -1, 1, 0)
MAT_B = ProjMat2(1, -1, 1, 0)
MAT_P = ProjMat2(2, -1, -1, 1)
MAT_Q = ProjMat2(2, 1, 1, 1)


def order(m: ProjMat2) -> int | float:
    """Torsion order of m in PSL2(Z): one of 1, 2, 3 or math.inf.

    The answer is read off the trace of the normalized representative
    (0 -> order 2, +-1 -> order 3, anything else nontrivial -> infinite) and
    then re-verified by explicit powering, so it does not depend on the
    trace criterion being right.
    """
    if m == IDENTITY:
        return 1
    tr = abs(m.e11 + m.e22)
    if tr == 0:
        guess: int | float = 2
    elif tr == 1:
        guess = 3
    else:
        guess = math.inf
    m2 = m * m
    m3 = m2 * m
    if guess == 2:
        assert m2 == IDENTITY
    elif guess == 3:
        assert m2 != IDENTITY and m3 == IDENTITY
    else:
        assert m2 != IDENTITY and m3 != IDENTITY
    return guess
