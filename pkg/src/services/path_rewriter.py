"""Bruhat path profiles, peak resolution and normalization to core plus pairs."""
from typing import List, Optional, Sequence, Tuple

from ..config import config
from ..errors import InternalError, PreconditionError, ProductMismatch
from ..models import (
    BraidWord, CoxeterWord, Direction, Factorization, NormalForm, PathProfile,
    PeakResolution, Reflection,
)
from ..utils import setup_logger
from .hurwitz import HurwitzEngine
from .rootspace import RootSystem


logger = setup_logger(__name__, config.LOGS_DIR / "rewriter.log", config.LOG_LEVEL, config.LOG_TO_FILE)


class PathRewriter:
    """Rewrites factorizations by Hurwitz moves until their Bruhat path is strictly increasing."""

    def __init__(self, system: RootSystem, hurwitz: HurwitzEngine):
        self.system = system
        self.hurwitz = hurwitz

    def _profile_of(self, factors: Sequence[Reflection]) -> PathProfile:
        g = self.system.identity
        lengths = [0]
        for t in factors:
            g = g * self.system.reflection_matrix(t)
            lengths.append(self.system.length(g))
        return PathProfile.from_lengths(tuple(lengths))

    def profile(self, f: Factorization) -> PathProfile:
        """Lengths of e, t_1, t_1 t_2, ... and the direction of each edge."""
        return self._profile_of(f.factors)

    @staticmethod
    def find_peak(profile: PathProfile) -> Optional[int]:
        """Smallest 1-based i with edge i up and edge i+1 down."""
        directions = profile.directions
        for i in range(len(directions) - 1):
            if directions[i] is Direction.UP and directions[i + 1] is Direction.DOWN:
                return i + 1
        return None

    def resolve_peak(
        self,
        f: Factorization,
        i: int,
        profile: Optional[PathProfile] = None,
    ) -> Tuple[Factorization, BraidWord, PeakResolution]:
        """Replace the peak at vertex i by the first sigma_i^k (k = 1, -1, 2, -2, ...) that removes it."""
        profile = profile or self.profile(f)
        directions = profile.directions
        if not 1 <= i < len(directions) or not (
            directions[i - 1] is Direction.UP and directions[i] is Direction.DOWN
        ):
            raise PreconditionError(f"edges {i} and {i + 1} do not form a peak")
        if f.factor(i) == f.factor(i + 1):
            raise PreconditionError(f"peak at {i} has equal factors; extract the pair instead")

        lengths = profile.vertex_lengths
        before, peak, after = lengths[i - 1], lengths[i], lengths[i + 1]
        prefix = self.system.identity
        for t in f.factors[:i - 1]:
            prefix = prefix * self.system.reflection_matrix(t)
        bound = config.PEAK_SEARCH_FACTOR * (len(f) + peak)

        plus, minus = f, f
        for k in range(1, bound + 1):
            for power in (k, -k):
                if power > 0:
                    plus = self.hurwitz.apply_generator(plus, i, 1)
                    candidate = plus
                else:
                    minus = self.hurwitz.apply_generator(minus, i, -1)
                    candidate = minus
                middle = self.system.length(prefix * self.system.reflection_matrix(candidate.factor(i)))
                if middle > before and middle > after:
                    continue
                new_profile = PathProfile.from_lengths(lengths[:i] + (middle,) + lengths[i + 1:])
                resolution = PeakResolution(i, power, profile.vertex_sum, new_profile.vertex_sum)
                logger.debug(
                    f"Resolved peak at {i} with sigma_{i}^{power}: "
                    f"middle length {peak} -> {middle}"
                )
                return candidate, BraidWord.power(i, power), resolution
        raise InternalError(f"no resolution of the peak at {i} within |k| <= {bound}")

    def normalize(self, f: Factorization, coxeter: Optional[CoxeterWord] = None) -> NormalForm:
        """Move equal pairs to the end and resolve peaks until the rest is strictly increasing."""
        if coxeter is not None and self.system.element_of_word(coxeter.letters) != f.target:
            raise ProductMismatch("factorization product differs from the Coxeter element")

        current = f
        moves: List[int] = []
        resolutions: List[PeakResolution] = []
        active = len(f)
        pair_count = 0
        cached_profile: Optional[PathProfile] = None
        while True:
            pair = self._rightmost_pair(current, active)
            if pair is not None:
                for position in range(pair, active - 1):
                    current, braid = self.hurwitz.shift_pair_right(current, position)
                    moves.extend(braid.moves)
                logger.debug(f"Extracted pair from position {pair} to {active - 1}")
                active -= 2
                pair_count += 1
                cached_profile = None
                continue

            profile = cached_profile or self._profile_of(current.factors[:active])
            i = self.find_peak(profile)
            if i is None:
                break
            current, braid, resolution = self.resolve_peak(current, i, profile)
            if resolution.sum_after >= resolution.sum_before:
                raise InternalError(
                    f"peak resolution at {i} did not decrease the vertex-length sum "
                    f"({resolution.sum_before} -> {resolution.sum_after})"
                )
            moves.extend(braid.moves)
            resolutions.append(resolution)
            cached_profile = self._profile_of(current.factors[:active])

        core = current.with_factors(current.factors[:active])
        pairs = tuple(current.factors[k] for k in range(active, len(current), 2))
        result = NormalForm(core, pairs, BraidWord(tuple(moves)), tuple(resolutions))
        self._check(f, result, coxeter)
        logger.info(
            f"Normalized length-{len(f)} factorization: core {active}, "
            f"{pair_count} pairs, {len(moves)} moves, {len(resolutions)} peak resolutions"
        )
        return result

    @staticmethod
    def _rightmost_pair(f: Factorization, active: int) -> Optional[int]:
        for i in range(active - 1, 0, -1):
            if f.factor(i) == f.factor(i + 1):
                return i
        return None

    def _check(self, f: Factorization, result: NormalForm, coxeter: Optional[CoxeterWord]) -> None:
        core = result.core
        if not self.profile(core).all_up:
            raise InternalError("normalized core is not a strictly increasing path")
        if len(core) > self.system.length(self.system.product(core.factors)):
            raise InternalError("strictly increasing core is longer than the length of its product")
        if coxeter is not None and len(core) != len(coxeter.letters):
            raise InternalError(
                f"core of a Coxeter element has length {len(core)}, expected {len(coxeter.letters)}"
            )
        if self.hurwitz.replay(f, result.braid, verify=False).key != result.flat().key:
            raise InternalError("normal form braid does not replay to the normal form")
