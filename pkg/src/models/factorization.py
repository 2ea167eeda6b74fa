"""Reflection factorizations, braid words and class multisets."""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from ..errors import PreconditionError
from .geometry import GroupElement, Reflection


@dataclass(frozen=True)
class Factorization:
    """Tuple of reflections whose left-to-right product is ``target``.

    Construct through ``RootSystem.make_factorization`` to have the product checked.
    """

    target: GroupElement
    factors: Tuple[Reflection, ...]

    def __len__(self) -> int:
        return len(self.factors)

    def factor(self, i: int) -> Reflection:
        """1-based access, matching braid generator numbering."""
        return self.factors[i - 1]

    @property
    def key(self) -> tuple:
        """Exact state key: concatenated canonical root coefficients."""
        return tuple(t.key for t in self.factors)

    def with_factors(self, factors: Iterable[Reflection]) -> "Factorization":
        return Factorization(self.target, tuple(factors))


@dataclass(frozen=True)
class BraidWord:
    """Signed Hurwitz generators applied left to right: +i is sigma_i, -i its inverse."""

    moves: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(not isinstance(m, int) or isinstance(m, bool) or m == 0 for m in self.moves):
            raise PreconditionError(f"braid moves must be nonzero integers: {list(self.moves)}")

    @classmethod
    def power(cls, i: int, k: int) -> "BraidWord":
        """sigma_i^k."""
        return cls((i if k > 0 else -i,) * abs(k))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-m for m in reversed(self.moves)))

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.moves + other.moves)

    def __len__(self) -> int:
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def to_json(self) -> List[int]:
        return list(self.moves)


@dataclass(frozen=True)
class ClassMultiset:
    """Multiset of reflection conjugacy classes, as sorted (class id, count) pairs."""

    counts: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_classes(cls, class_ids: Iterable[int]) -> "ClassMultiset":
        return cls(tuple(sorted(Counter(class_ids).items())))

    @property
    def total(self) -> int:
        return sum(count for _, count in self.counts)

    def to_json(self) -> Dict[str, int]:
        return {str(c): n for c, n in self.counts}
