"""Hurwitz equivalence decisions."""
from dataclasses import dataclass
from typing import Optional, Tuple

from .factorization import BraidWord, ClassMultiset


@dataclass(frozen=True)
class Decision:
    """Equivalence verdict; equivalent iff the two class multisets agree."""

    equivalent: bool
    certificate: Tuple[ClassMultiset, ClassMultiset]
    witness: Optional[BraidWord] = None

    def to_json(self) -> dict:
        payload = {
            "equivalent": self.equivalent,
            "certificate": {
                "f": self.certificate[0].to_json(),
                "g": self.certificate[1].to_json(),
            },
        }
        if self.witness is not None:
            payload["witness"] = self.witness.to_json()
        return payload
