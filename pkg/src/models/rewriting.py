"""Bruhat path profiles and normal forms."""
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .factorization import BraidWord, Factorization
from .geometry import Reflection


class Direction(str, Enum):
    """Orientation of a path edge in the Bruhat graph."""
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class PathProfile:
    """Lengths of the prefix products e, t_1, t_1 t_2, ... and the edge directions."""

    vertex_lengths: Tuple[int, ...]
    directions: Tuple[Direction, ...]

    @classmethod
    def from_lengths(cls, lengths: Tuple[int, ...]) -> "PathProfile":
        directions = tuple(
            Direction.UP if b > a else Direction.DOWN for a, b in zip(lengths, lengths[1:])
        )
        return cls(tuple(lengths), directions)

    @property
    def all_up(self) -> bool:
        return all(d is Direction.UP for d in self.directions)

    @property
    def vertex_sum(self) -> int:
        return sum(self.vertex_lengths)


@dataclass(frozen=True)
class PeakResolution:
    """One replacement of an up-down shape by powers of a single generator."""

    index: int
    power: int
    sum_before: int
    sum_after: int


@dataclass(frozen=True)
class NormalForm:
    """Strictly increasing core followed by equal pairs, listed left to right."""

    core: Factorization
    pairs: Tuple[Reflection, ...]
    braid: BraidWord
    resolutions: Tuple[PeakResolution, ...] = ()

    def flat_factors(self) -> Tuple[Reflection, ...]:
        flat = list(self.core.factors)
        for t in self.pairs:
            flat.extend((t, t))
        return tuple(flat)

    def flat(self) -> Factorization:
        return self.core.with_factors(self.flat_factors())
