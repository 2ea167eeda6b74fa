"""Hurwitz moves, braid replay and orbit search."""
import asyncio
from collections import deque
from typing import Dict, Iterable, List, Optional, Tuple

from ..config import config
from ..errors import BraidIndexError, InternalError, NotConnected, PreconditionError
from ..models import BraidWord, ClassLabeling, ClassMultiset, Factorization, OrbitResult
from ..utils import setup_logger
from .rootspace import RootSystem


logger = setup_logger(__name__, config.LOGS_DIR / "hurwitz.log", config.LOG_LEVEL, config.LOG_TO_FILE)

Edge = Tuple[tuple, int]


class HurwitzEngine:
    """Braid group action on reflection factorizations of a fixed root system."""

    def __init__(self, system: RootSystem):
        self.system = system

    # single moves -------------------------------------------------------

    def apply_generator(self, f: Factorization, i: int, sign: int) -> Factorization:
        """sigma_i (sign +1): (.., t_{i+1}^{t_i}, t_i, ..); sigma_i^-1: (.., t_{i+1}, t_i^{t_{i+1}}, ..)."""
        if sign not in (1, -1):
            raise PreconditionError(f"generator sign must be +1 or -1, got {sign!r}")
        if not 1 <= i <= len(f) - 1:
            raise PreconditionError(f"generator index {i} outside 1..{len(f) - 1}")
        factors = list(f.factors)
        a, b = factors[i - 1], factors[i]
        if sign > 0:
            factors[i - 1], factors[i] = self.system.reflect(b, a), a
        else:
            factors[i - 1], factors[i] = b, self.system.reflect(a, b)
        return f.with_factors(factors)

    def replay(self, f: Factorization, braid: BraidWord, verify: bool = True) -> Factorization:
        """Apply the moves of ``braid`` left to right."""
        current = f
        for position, move in enumerate(braid.moves):
            if not 1 <= abs(move) <= len(current) - 1:
                raise BraidIndexError(
                    f"move {move} at position {position} is outside 1..{len(current) - 1}",
                    position,
                )
            current = self.apply_generator(current, abs(move), 1 if move > 0 else -1)
        if verify and braid.moves and self.system.product(current.factors) != f.target:
            raise InternalError("replay changed the product of the factorization")
        return current

    def class_multiset(self, f: Factorization, labeling: ClassLabeling) -> ClassMultiset:
        multiset = ClassMultiset.from_classes(self.system.class_of(t, labeling) for t in f.factors)
        if multiset.total != len(f):
            raise InternalError(f"class multiset counts {multiset.total} factors, expected {len(f)}")
        return multiset

    # pair blocks --------------------------------------------------------

    def shift_pair_right(self, f: Factorization, i: int) -> Tuple[Factorization, BraidWord]:
        """(.., t, t, r, ..) -> (.., r, t, t, ..) with braid [i+1, i]."""
        if not 1 <= i or i + 2 > len(f):
            raise PreconditionError(f"no factor to the right of the pair at {i} (length {len(f)})")
        if f.factor(i) != f.factor(i + 1):
            raise PreconditionError(f"factors {i} and {i + 1} are not an equal pair")
        braid = BraidWord((i + 1, i))
        return self.replay(f, braid, verify=False), braid

    def swap_pair_blocks(self, f: Factorization, i: int) -> Tuple[Factorization, BraidWord]:
        """(.., t, t, r, r, ..) -> (.., r, r, t, t, ..) with braid [i+1, i, i+2, i+1]."""
        if not 1 <= i or i + 3 > len(f):
            raise PreconditionError(f"no pair block at {i + 2} (length {len(f)})")
        if f.factor(i) != f.factor(i + 1) or f.factor(i + 2) != f.factor(i + 3):
            raise PreconditionError(f"positions {i}..{i + 3} are not two equal pairs")
        first, b1 = self.shift_pair_right(f, i)
        second, b2 = self.shift_pair_right(first, i + 1)
        return second, b1 + b2

    # search -------------------------------------------------------------

    def _neighbours(self, f: Factorization) -> List[Tuple[int, Factorization]]:
        out = []
        for i in range(1, len(f)):
            for sign in (1, -1):
                out.append((i * sign, self.apply_generator(f, i, sign)))
        return out

    def orbit_bfs(self, f: Factorization, cap: Optional[int] = None, threads: Optional[int] = None) -> OrbitResult:
        """Breadth-first closure of f under all single moves, up to ``cap`` states."""
        cap = config.ORBIT_CAP if cap is None else cap
        threads = config.THREADS if threads is None else threads
        if cap < 1 or threads < 1:
            raise PreconditionError(f"cap and threads must be positive, got cap={cap}, threads={threads}")
        if threads > 1:
            return asyncio.run(self.orbit_bfs_async(f, cap, threads))

        seen = {f.key}
        states = [f]
        queue = deque([f])
        truncated = False
        while queue and not truncated:
            current = queue.popleft()
            for _, state in self._neighbours(current):
                if state.key in seen:
                    continue
                if len(states) >= cap:
                    truncated = True
                    break
                seen.add(state.key)
                states.append(state)
                queue.append(state)
        if truncated:
            logger.warning(f"Orbit search truncated at {cap} states")
        logger.debug(f"Orbit of length-{len(f)} factorization: {len(states)} states")
        return OrbitResult(tuple(states), truncated)

    async def orbit_bfs_async(self, f: Factorization, cap: int, threads: int) -> OrbitResult:
        """Layered BFS; neighbour generation runs in worker threads, merging stays in frontier order."""
        semaphore = asyncio.Semaphore(threads)

        async def expand(state: Factorization) -> List[Tuple[int, Factorization]]:
            async with semaphore:
                return await asyncio.to_thread(self._neighbours, state)

        seen = {f.key}
        states = [f]
        frontier = [f]
        truncated = False
        layer = 0
        while frontier and not truncated:
            expansions = await asyncio.gather(*(expand(state) for state in frontier))
            next_frontier = []
            for neighbours in expansions:
                for _, state in neighbours:
                    if state.key in seen:
                        continue
                    if len(states) >= cap:
                        truncated = True
                        break
                    seen.add(state.key)
                    states.append(state)
                    next_frontier.append(state)
                if truncated:
                    break
            layer += 1
            logger.debug(f"Layer {layer}: {len(next_frontier)} new states")
            frontier = next_frontier
        if truncated:
            logger.warning(f"Orbit search truncated at {cap} states")
        return OrbitResult(tuple(states), truncated)

    def connect_bfs(self, f: Factorization, g: Factorization, cap: Optional[int] = None) -> BraidWord:
        """Bidirectional search for a braid b with replay(f, b) = g."""
        if len(f) != len(g):
            raise PreconditionError(f"lengths differ: {len(f)} vs {len(g)}")
        if f.key == g.key:
            return BraidWord()
        cap = config.CONNECT_CAP if cap is None else cap
        if cap < 1:
            raise PreconditionError(f"cap must be positive, got {cap}")

        # parent maps: key -> (parent key, move from parent to child)
        forward: Dict[tuple, Optional[Edge]] = {f.key: None}
        backward: Dict[tuple, Optional[Edge]] = {g.key: None}
        forward_frontier, backward_frontier = [f], [g]
        meeting = None
        while forward_frontier and backward_frontier and meeting is None:
            if len(forward) + len(backward) > cap:
                raise NotConnected(f"no connection found within {cap} states")
            if len(forward_frontier) <= len(backward_frontier):
                forward_frontier, meeting = self._expand(forward_frontier, forward, backward)
            else:
                backward_frontier, meeting = self._expand(backward_frontier, backward, forward)
        if meeting is None:
            raise NotConnected("the two factorizations lie in different Hurwitz orbits")

        braid = BraidWord(tuple(self._path(forward, meeting)))
        braid = braid + BraidWord(tuple(self._path(backward, meeting))).inverse()
        if self.replay(f, braid).key != g.key:
            raise InternalError("bidirectional search produced a braid that does not connect")
        logger.debug(f"Connected length-{len(f)} factorizations with {len(braid)} moves")
        return braid

    def _expand(
        self,
        frontier: Iterable[Factorization],
        own: Dict[tuple, Optional[Edge]],
        other: Dict[tuple, Optional[Edge]],
    ) -> Tuple[List[Factorization], Optional[tuple]]:
        next_frontier = []
        for state in frontier:
            for move, neighbour in self._neighbours(state):
                if neighbour.key in own:
                    continue
                own[neighbour.key] = (state.key, move)
                if neighbour.key in other:
                    return next_frontier, neighbour.key
                next_frontier.append(neighbour)
        return next_frontier, None

    @staticmethod
    def _path(parents: Dict[tuple, Optional[Edge]], key: tuple) -> List[int]:
        moves = []
        while parents[key] is not None:
            key, move = parents[key]
            moves.append(move)
        return moves[::-1]
