"""Validated command-line job."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .diagram import CoxeterDiagram, CoxeterWord

ReflectionWords = List[Tuple[int, ...]]


@dataclass
class JobSpec:
    """Everything a subcommand needs, checked against the diagram's rank."""

    diagram: CoxeterDiagram
    coxeter: Optional[CoxeterWord] = None
    f: Optional[ReflectionWords] = None
    g: Optional[ReflectionWords] = None
    braid: Optional[List[int]] = None
    expect: Optional[ReflectionWords] = None
    options: Dict[str, Any] = field(default_factory=dict)
