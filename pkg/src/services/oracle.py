"""Brute-force ground truth for finite Coxeter groups.

Shares only the matrix layer with the main code path: conjugacy classes and
Hurwitz orbits are recomputed here by exhaustion over a Cayley table.
"""
from collections import defaultdict, deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import CapExceeded
from ..models import Factorization, GroupElement, Word
from ..utils import setup_logger
from .rootspace import RootSystem


logger = setup_logger(__name__, config.LOGS_DIR / "oracle.log", config.LOG_LEVEL, config.LOG_TO_FILE)

IndexTuple = Tuple[int, ...]


class FiniteGroupTable:
    """Elements of W by word BFS, with lazy multiplication and the reflection subset."""

    def __init__(self, elements: List[GroupElement], words: List[Word], simple: Tuple[int, ...]):
        self.elements = elements
        self.words = words
        self.index: Dict[tuple, int] = {g.key: k for k, g in enumerate(elements)}
        self.simple = simple
        self._products: Dict[Tuple[int, int], int] = {}
        self.inverse = [self.index_of_word(tuple(reversed(w))) for w in words]

        found: Dict[int, Word] = {}
        for g in range(len(elements)):
            for s in simple:
                t = self.multiply(self.multiply(g, s), self.inverse[g])
                if t not in found:
                    letter = words[s][0]
                    found[t] = words[g] + (letter,) + tuple(reversed(words[g]))
        self.reflections: List[int] = sorted(found)
        self.reflection_words: List[Word] = [found[t] for t in self.reflections]
        self.position = {t: k for k, t in enumerate(self.reflections)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def multiply(self, a: int, b: int) -> int:
        key = (a, b)
        if key not in self._products:
            self._products[key] = self.index[(self.elements[a] * self.elements[b]).key]
        return self._products[key]

    def index_of_word(self, word: Sequence[int]) -> int:
        k = 0
        for letter in word:
            k = self.multiply(k, self.simple[letter - 1])
        return k


class GroupOracle:
    """Exhaustive enumeration over a finite Coxeter group."""

    def __init__(self, system: RootSystem):
        self.system = system

    def enumerate_group(self, cap: Optional[int] = None) -> FiniteGroupTable:
        """Word-graph BFS closure from the identity; CapExceeded if the group looks infinite."""
        cap = config.GROUP_CAP if cap is None else cap
        identity = self.system.identity
        elements = [identity]
        words: List[Word] = [()]
        seen = {identity.key: 0}
        queue = deque([0])
        while queue:
            k = queue.popleft()
            for i in range(1, self.system.rank + 1):
                g = elements[k] * self.system.simple_reflection(i)
                if g.key in seen:
                    continue
                if len(elements) >= cap:
                    raise CapExceeded(f"more than {cap} elements; the group is presumably infinite")
                seen[g.key] = len(elements)
                elements.append(g)
                words.append(words[k] + (i,))
                queue.append(len(elements) - 1)
        simple = tuple(seen[self.system.simple_reflection(i).key] for i in range(1, self.system.rank + 1))
        table = FiniteGroupTable(elements, words, simple)
        logger.info(f"Enumerated group of order {table.order} with {len(table.reflections)} reflections")
        return table

    @staticmethod
    def all_factorizations(table: FiniteGroupTable, target: int, length: int) -> List[IndexTuple]:
        """Every tuple of reflection positions whose product is the element ``target``."""
        if length == 0:
            return [()] if target == 0 else []
        reflection_set = table.position
        results: List[IndexTuple] = []

        def extend(prefix: List[int], product: int) -> None:
            if len(prefix) == length - 1:
                last = table.multiply(table.inverse[product], target)
                if last in reflection_set:
                    results.append(tuple(prefix) + (reflection_set[last],))
                return
            for k, t in enumerate(table.reflections):
                prefix.append(k)
                extend(prefix, table.multiply(product, t))
                prefix.pop()

        extend([], 0)
        return results

    @staticmethod
    def _conjugation(table: FiniteGroupTable) -> List[List[int]]:
        # conj[a][b] = position of t_a t_b t_a
        return [
            [table.position[table.multiply(table.multiply(a, b), a)] for b in table.reflections]
            for a in table.reflections
        ]

    def orbit_partition(
        self, table: FiniteGroupTable, factorizations: Iterable[IndexTuple]
    ) -> List[FrozenSet[IndexTuple]]:
        """Union-find closure under sigma_1, ..., sigma_{m-1} of a move-closed set."""
        conj = self._conjugation(table)
        states = list(factorizations)
        parent = {state: state for state in states}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for state in states:
            for i in range(len(state) - 1):
                a, b = state[i], state[i + 1]
                moved = state[:i] + (conj[a][b], a) + state[i + 2:]
                root_a, root_b = find(state), find(moved)
                if root_a != root_b:
                    parent[root_a] = root_b

        orbits: Dict[IndexTuple, set] = defaultdict(set)
        for state in states:
            orbits[find(state)].add(state)
        return sorted((frozenset(o) for o in orbits.values()), key=lambda o: min(o))

    def brute_conjugacy(self, table: FiniteGroupTable) -> Dict[int, int]:
        """Class id per reflection position, ids ordered by smallest simple member."""
        class_id: Dict[int, int] = {}
        for s in table.simple:
            k = table.position[s]
            if k in class_id:
                continue
            cid = len(set(class_id.values())) + 1
            for g in range(table.order):
                t = table.multiply(table.multiply(g, s), table.inverse[g])
                class_id[table.position[t]] = cid
        return class_id

    @staticmethod
    def class_multiset_partition(
        factorizations: Iterable[IndexTuple], classes: Dict[int, int]
    ) -> List[FrozenSet[IndexTuple]]:
        """Group factorizations by the multiset of brute-force class ids."""
        groups: Dict[tuple, set] = defaultdict(set)
        for state in factorizations:
            groups[tuple(sorted(classes[k] for k in state))].add(state)
        return sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g))

    def to_factorization(self, table: FiniteGroupTable, state: IndexTuple) -> Factorization:
        """Main-path factorization from oracle reflection positions."""
        return self.system.factorization_of_words(table.reflection_words[k] for k in state)
