"""Services package."""
from .rootspace import RootSystem
from .diagrams import (
    BUILTIN_DIAGRAMS, DiagramParser, builtin_diagram, coxeter_word, odd_components,
    odd_path, parabolic_coxeter_word, parse_diagram,
)
from .hurwitz import HurwitzEngine
from .path_rewriter import PathRewriter
from .connector import HurwitzConnector
from .oracle import FiniteGroupTable, GroupOracle
from .job_loader import JobLoader
from .selftest import SelfTest

__all__ = [
    "RootSystem",
    "BUILTIN_DIAGRAMS",
    "DiagramParser",
    "builtin_diagram",
    "coxeter_word",
    "odd_components",
    "odd_path",
    "parabolic_coxeter_word",
    "parse_diagram",
    "HurwitzEngine",
    "PathRewriter",
    "HurwitzConnector",
    "FiniteGroupTable",
    "GroupOracle",
    "JobLoader",
    "SelfTest",
]
