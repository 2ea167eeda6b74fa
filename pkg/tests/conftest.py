import os

os.environ.setdefault("LOG_TO_FILE", "false")

import pytest

from src.services import (
    HurwitzConnector, HurwitzEngine, PathRewriter, RootSystem, builtin_diagram, odd_components,
)


class Toolkit:
    """One built-in system with every service wired up."""

    def __init__(self, name: str):
        self.name = name
        self.diagram = builtin_diagram(name)
        self.system = RootSystem(self.diagram)
        self.labeling = odd_components(self.diagram)
        self.hurwitz = HurwitzEngine(self.system)
        self.rewriter = PathRewriter(self.system, self.hurwitz)
        self.connector = HurwitzConnector(self.system, self.labeling)

    def f(self, *words, target=None):
        """Factorization from reflection words, e.g. tk.f([1], [2, 1, 2])."""
        return self.system.factorization_of_words(words, target=target)

    def t(self, *word):
        return self.system.reflection_of_word(word)

    def g(self, *word):
        return self.system.element_of_word(word)


_TOOLKITS = {}


def toolkit(name: str) -> Toolkit:
    if name not in _TOOLKITS:
        _TOOLKITS[name] = Toolkit(name)
    return _TOOLKITS[name]


@pytest.fixture(scope="session")
def a2():
    return toolkit("A2")


@pytest.fixture(scope="session")
def b2():
    return toolkit("B2")


@pytest.fixture(scope="session")
def a1xa1():
    return toolkit("A1xA1")


@pytest.fixture(scope="session")
def i25():
    return toolkit("I2(5)")


@pytest.fixture(scope="session")
def i26():
    return toolkit("I2(6)")


@pytest.fixture(scope="session")
def a3():
    return toolkit("A3")


@pytest.fixture(scope="session")
def b3():
    return toolkit("B3")


@pytest.fixture(scope="session")
def i2inf():
    return toolkit("I2(inf)")


@pytest.fixture(params=["A2", "B2", "A1xA1", "I2(5)", "I2(6)", "I2(inf)"])
def rank2(request):
    """Every rank-2 test system."""
    return toolkit(request.param)


@pytest.fixture(params=["A2", "B2", "A1xA1", "I2(5)", "I2(6)", "A3"])
def finite(request):
    """Every finite test system."""
    return toolkit(request.param)


@pytest.fixture(scope="session")
def toolkit_for():
    """Look up a built-in system by name."""
    return toolkit
