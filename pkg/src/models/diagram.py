"""Coxeter diagram models."""
import math
from dataclasses import dataclass
from typing import Dict, List, Set, Tuple, Union

from ..errors import DiagramValidationError

INFINITY = math.inf
Label = Union[int, float]


def is_valid_label(m) -> bool:
    return m == INFINITY or (isinstance(m, int) and not isinstance(m, bool) and m >= 2)


@dataclass(frozen=True)
class CoxeterDiagram:
    """Coxeter system (W, S) given by its rank and symmetric label matrix m(i, j)."""

    rank: int
    labels: Tuple[Tuple[Label, ...], ...]

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DiagramValidationError(f"rank must be a positive integer, got {self.rank!r}")
        if len(self.labels) != self.rank or any(len(row) != self.rank for row in self.labels):
            raise DiagramValidationError(f"label matrix must be {self.rank}x{self.rank}")
        for i in range(self.rank):
            if self.labels[i][i] != 1:
                raise DiagramValidationError(f"m({i + 1},{i + 1}) must be 1")
            for j in range(i + 1, self.rank):
                m, m_t = self.labels[i][j], self.labels[j][i]
                if m != m_t:
                    raise DiagramValidationError(
                        f"label matrix is not symmetric: m({i + 1},{j + 1})={m} but m({j + 1},{i + 1})={m_t}"
                    )
                if not is_valid_label(m):
                    raise DiagramValidationError(f"m({i + 1},{j + 1})={m!r} is not an integer >= 2 or inf")

    @classmethod
    def from_bonds(cls, rank: int, bonds: List[Tuple[int, int, Label]]) -> "CoxeterDiagram":
        """Build from (i, j, label) triples; unmentioned pairs commute (label 2)."""
        if not isinstance(rank, int) or rank < 1:
            raise DiagramValidationError(f"rank must be a positive integer, got {rank!r}")
        matrix = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
        seen: Dict[Tuple[int, int], Label] = {}
        for i, j, m in bonds:
            for index in (i, j):
                if not isinstance(index, int) or not 1 <= index <= rank:
                    raise DiagramValidationError(f"generator index {index!r} outside 1..{rank}")
            if i == j:
                raise DiagramValidationError(f"bond ({i},{j}) joins a generator to itself")
            if not is_valid_label(m):
                raise DiagramValidationError(f"label {m!r} for bond ({i},{j}) is not an integer >= 2 or inf")
            pair = (min(i, j), max(i, j))
            if pair in seen and seen[pair] != m:
                raise DiagramValidationError(
                    f"conflicting labels {seen[pair]} and {m} for bond {pair}"
                )
            seen[pair] = m
            matrix[i - 1][j - 1] = matrix[j - 1][i - 1] = m
        return cls(rank, tuple(tuple(row) for row in matrix))

    def label(self, i: int, j: int) -> Label:
        """m(i, j) for 1-based generator indices."""
        return self.labels[i - 1][j - 1]

    def bonds(self) -> List[Tuple[int, int, Label]]:
        """Non-commuting pairs i < j with their labels."""
        return [
            (i, j, self.label(i, j))
            for i in range(1, self.rank + 1)
            for j in range(i + 1, self.rank + 1)
            if self.label(i, j) != 2
        ]

    def finite_labels(self) -> Set[int]:
        """Finite labels whose form entry is irrational or -1/2 (labels >= 3)."""
        return {m for _, _, m in self.bonds() if m != INFINITY}

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "bonds": [[i, j, 0 if m == INFINITY else m] for i, j, m in self.bonds()],
        }


@dataclass(frozen=True)
class ClassLabeling:
    """Conjugacy-class ids of the simple reflections, canonical by smallest member."""

    class_of_simple: Tuple[int, ...]
    class_count: int

    def class_of(self, i: int) -> int:
        return self.class_of_simple[i - 1]

    def members(self, class_id: int) -> Tuple[int, ...]:
        return tuple(i + 1 for i, c in enumerate(self.class_of_simple) if c == class_id)

    def representative(self, class_id: int) -> int:
        """Smallest simple index in the class."""
        return self.members(class_id)[0]

    def to_json(self) -> dict:
        return {
            "class_count": self.class_count,
            "class_of_simple": {str(i + 1): c for i, c in enumerate(self.class_of_simple)},
            "classes": {str(c): list(self.members(c)) for c in range(1, self.class_count + 1)},
        }


@dataclass(frozen=True)
class CoxeterWord:
    """s_{pi(1)} ... s_{pi(k)}: each generator of the support used exactly once."""

    letters: Tuple[int, ...]
    rank: int

    @property
    def is_parabolic(self) -> bool:
        """True when the word only covers a proper subset of S."""
        return len(self.letters) < self.rank

    def to_json(self) -> List[int]:
        return list(self.letters)
