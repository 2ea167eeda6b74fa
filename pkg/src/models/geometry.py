"""Roots, reflections and group elements of the geometric representation."""
from dataclasses import dataclass
from typing import Sequence, Tuple

from .field import FieldElement

Vector = Tuple[FieldElement, ...]
Word = Tuple[int, ...]


def dot(row: Sequence[FieldElement], column: Sequence[FieldElement]) -> FieldElement:
    """Sum of products, skipping zero terms."""
    acc = None
    for a, b in zip(row, column):
        if a and b:
            term = a * b
            acc = term if acc is None else acc + term
    return acc if acc is not None else row[0].ctx.zero


@dataclass(frozen=True)
class Root:
    """Vector in the simple-root basis; canonical roots have first nonzero coordinate 1."""

    coords: Vector

    @property
    def key(self) -> tuple:
        return tuple(c.coeffs for c in self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return "Root(" + ", ".join(repr(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Reflection:
    """A reflection t in T, stored only as its canonical positive root."""

    root: Root

    @property
    def key(self) -> tuple:
        return self.root.key

    def __repr__(self) -> str:
        return "Reflection(" + ", ".join(repr(c) for c in self.root.coords) + ")"


@dataclass(frozen=True)
class GroupElement:
    """Element of W as its exact matrix on the root space (columns are images of simple roots)."""

    matrix: Tuple[Vector, ...]

    @property
    def rank(self) -> int:
        return len(self.matrix)

    @property
    def key(self) -> tuple:
        return tuple(tuple(c.coeffs for c in row) for row in self.matrix)

    def column(self, j: int) -> Vector:
        """Image of the 1-based simple root alpha_j."""
        return tuple(row[j - 1] for row in self.matrix)

    def apply(self, vector: Sequence[FieldElement]) -> Vector:
        return tuple(dot(row, vector) for row in self.matrix)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        columns = list(zip(*other.matrix))
        return GroupElement(tuple(
            tuple(dot(row, column) for column in columns) for row in self.matrix
        ))
