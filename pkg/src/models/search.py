"""Orbit search results."""
from dataclasses import dataclass
from typing import Tuple

from .factorization import Factorization


@dataclass(frozen=True)
class OrbitResult:
    """States reached by breadth-first closure, in discovery order."""

    states: Tuple[Factorization, ...]
    truncated: bool

    @property
    def size(self) -> int:
        return len(self.states)

    def keys(self) -> set:
        return {state.key for state in self.states}
