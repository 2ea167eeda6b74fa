"""Models package."""
from .field import FieldContext, FieldElement, context_for, chebyshev_value, bond_value
from .diagram import INFINITY, CoxeterDiagram, ClassLabeling, CoxeterWord
from .geometry import Root, Reflection, GroupElement, Word
from .factorization import Factorization, BraidWord, ClassMultiset
from .search import OrbitResult
from .rewriting import Direction, PathProfile, PeakResolution, NormalForm
from .decision import Decision
from .job import JobSpec

__all__ = [
    "FieldContext", "FieldElement", "context_for", "chebyshev_value", "bond_value",
    "INFINITY", "CoxeterDiagram", "ClassLabeling", "CoxeterWord",
    "Root", "Reflection", "GroupElement", "Word",
    "Factorization", "BraidWord", "ClassMultiset",
    "OrbitResult",
    "Direction", "PathProfile", "PeakResolution", "NormalForm",
    "Decision",
    "JobSpec",
]
