"""Decision and braid witnesses for Hurwitz equivalence of Coxeter element factorizations."""
from typing import List, Optional, Sequence, Tuple

from ..config import config
from ..errors import (
    InternalError, LengthError, ParityError, PreconditionError, ProductMismatch,
)
from ..models import (
    BraidWord, ClassLabeling, CoxeterWord, Decision, Factorization, Reflection, Word,
)
from ..utils import free_reduce, setup_logger
from .diagrams import odd_path
from .hurwitz import HurwitzEngine
from .path_rewriter import PathRewriter
from .rootspace import RootSystem


logger = setup_logger(__name__, config.LOGS_DIR / "connector.log", config.LOG_LEVEL, config.LOG_TO_FILE)


class HurwitzConnector:
    """Decides equivalence by class multisets and builds verified witnesses.

    Both factorizations are carried to a canonical form: the defining Coxeter word
    followed by class-representative pairs sorted by class id. The witness is
    the braid to the canonical form of f followed by the inverse braid for g.
    """

    def __init__(self, system: RootSystem, labeling: ClassLabeling):
        self.system = system
        self.labeling = labeling
        self.hurwitz = HurwitzEngine(system)
        self.rewriter = PathRewriter(system, self.hurwitz)

    def validate_coxeter_target(self, cw: CoxeterWord, f: Factorization) -> None:
        if cw.is_parabolic:
            raise PreconditionError(
                f"{cw.to_json()} is a parabolic Coxeter word; equivalence needs all {cw.rank} generators"
            )
        n = len(cw.letters)
        if (len(f) - n) % 2:
            raise ParityError(f"length {len(f)} has the wrong parity for a Coxeter element of rank {n}")
        if len(f) < n:
            raise LengthError(f"length {len(f)} is below the reflection length {n}")
        if self.system.product(f.factors) != self.system.element_of_word(cw.letters):
            raise ProductMismatch(f"product of the factors is not the Coxeter element {cw.to_json()}")

    def decide(self, f: Factorization, g: Factorization) -> Decision:
        """Equivalent iff the class multisets agree."""
        if len(f) != len(g):
            raise LengthError(f"lengths differ: {len(f)} vs {len(g)}")
        mf = self.hurwitz.class_multiset(f, self.labeling)
        mg = self.hurwitz.class_multiset(g, self.labeling)
        logger.info(f"Decision for length {len(f)}: {mf.to_json()} vs {mg.to_json()}")
        return Decision(mf == mg, (mf, mg))

    # pair conjugation ---------------------------------------------------

    def conjugate_pair_by_prefix_entry(
        self, f: Factorization, pair_pos: int, i: int
    ) -> Tuple[Factorization, BraidWord]:
        """(.., t_i, .., t, t, ..) -> (.., t_i, .., t^{t_i}, t^{t_i}, ..), all other factors restored."""
        if not 1 <= i < pair_pos or pair_pos + 1 > len(f):
            raise PreconditionError(f"prefix entry {i} must precede the pair at {pair_pos}")
        t = f.factor(pair_pos)
        if t != f.factor(pair_pos + 1):
            raise PreconditionError(f"factors {pair_pos} and {pair_pos + 1} are not an equal pair")
        moves: List[int] = []
        # carry the pair left, unchanged, to sit right after t_i
        for q in range(pair_pos, i + 1, -1):
            moves.extend((-(q - 1), -q))
        # pass it through t_i, which conjugates both copies
        moves.extend((i, i + 1))
        # carry it back right past t_i, .., t_{pair_pos - 1}
        for q in range(i, pair_pos):
            moves.extend((q + 1, q))
        braid = BraidWord(tuple(moves))
        result = self.hurwitz.replay(f, braid, verify=False)
        expected = self.system.reflect(t, f.factor(i))
        factors = list(f.factors)
        factors[pair_pos - 1] = factors[pair_pos] = expected
        if result.key != f.with_factors(factors).key:
            raise InternalError(f"conjugating the pair at {pair_pos} by entry {i} went wrong")
        return result, braid

    def conjugate_pair_by_word(
        self, f: Factorization, pair_pos: int, u: Sequence[int], core_length: Optional[int] = None
    ) -> Tuple[Factorization, BraidWord]:
        """Pair (t, t) -> (w t w^-1, w t w^-1) for w = element_of_word(u), rightmost letter first."""
        core_length = core_length if core_length is not None else pair_pos - 1
        core = f.factors[:core_length]
        braid = BraidWord()
        for letter in reversed(tuple(u)):
            simple = self.system.simple_reflection_of(letter)
            try:
                position = core.index(simple) + 1
            except ValueError:
                raise PreconditionError(f"prefix does not contain s{letter}") from None
            f, step = self.conjugate_pair_by_prefix_entry(f, pair_pos, position)
            braid = braid + step
        return f, braid

    def class_representative_conjugator(self, t: Reflection) -> Word:
        """u with u s_q u^-1 = t, q the smallest simple index in the class of t."""
        p, u1 = self.system.class_witness(t)
        q = self.labeling.representative(self.labeling.class_of(p))
        letters = list(u1)
        path = odd_path(self.system.diagram, p, q)
        for a, b in zip(path, path[1:]):
            half = (self.system.diagram.label(a, b) - 1) // 2
            # (s_a s_b)^half carries s_a to s_b; its inverse is the reversed word
            letters.extend(reversed((a, b) * half))
        u = free_reduce(letters)
        if self.system.conjugate(self.system.simple_reflection_of(q), self.system.element_of_word(u)) != t:
            raise InternalError(f"conjugator {list(u)} does not carry s{q} to {t!r}")
        return u

    # canonical form -----------------------------------------------------

    def canonical_factors(self, cw: CoxeterWord, classes: Sequence[int]) -> Tuple[Reflection, ...]:
        """Coxeter word letters followed by one representative pair per class id, sorted."""
        core = tuple(self.system.simple_reflection_of(i) for i in cw.letters)
        pairs = []
        for cid in sorted(classes):
            s = self.system.simple_reflection_of(self.labeling.representative(cid))
            pairs.extend((s, s))
        return core + tuple(pairs)

    def canonicalize(self, f: Factorization, cw: CoxeterWord) -> Tuple[Factorization, BraidWord]:
        """Carry f to the canonical factorization determined by (cw, class multiset)."""
        self.validate_coxeter_target(cw, f)
        n = len(cw.letters)
        normal = self.rewriter.normalize(f, coxeter=cw)
        current = normal.flat()
        braid = normal.braid

        canonical_core = f.with_factors(self.system.simple_reflection_of(i) for i in cw.letters)
        core_braid = self.hurwitz.connect_bfs(normal.core, canonical_core)
        current = self.hurwitz.replay(current, core_braid, verify=False)
        braid = braid + core_braid

        pair_classes = []
        for k, t in enumerate(normal.pairs):
            pair_pos = n + 2 * k + 1
            u = self.class_representative_conjugator(t)
            # t = u s_q u^-1, so conjugating by u^-1 gives s_q
            current, step = self.conjugate_pair_by_word(current, pair_pos, u[::-1], core_length=n)
            braid = braid + step
            pair_classes.append(self.system.class_of(t, self.labeling))

        # stable bubble sort of pair blocks by class id
        for sweep in range(len(pair_classes)):
            for k in range(len(pair_classes) - 1 - sweep):
                if pair_classes[k] > pair_classes[k + 1]:
                    current, step = self.hurwitz.swap_pair_blocks(current, n + 2 * k + 1)
                    braid = braid + step
                    pair_classes[k], pair_classes[k + 1] = pair_classes[k + 1], pair_classes[k]

        expected = self.canonical_factors(cw, pair_classes)
        if current.factors != expected:
            raise InternalError("canonicalization did not reach the canonical factorization")
        if self.hurwitz.replay(f, braid).key != current.key:
            raise InternalError("canonicalization braid does not replay")
        logger.info(f"Canonicalized length-{len(f)} factorization with {len(braid)} moves")
        return current, braid

    def connect(self, f: Factorization, g: Factorization, cw: CoxeterWord) -> Decision:
        """Decision with a verified witness braid when f and g are equivalent."""
        self.validate_coxeter_target(cw, f)
        self.validate_coxeter_target(cw, g)
        decision = self.decide(f, g)
        if not decision.equivalent:
            return decision
        canonical_f, braid_f = self.canonicalize(f, cw)
        canonical_g, braid_g = self.canonicalize(g, cw)
        if canonical_f.key != canonical_g.key:
            raise InternalError("equal class multisets gave different canonical forms")
        witness = braid_f + braid_g.inverse()
        if self.hurwitz.replay(f, witness).key != g.key:
            raise InternalError("witness braid does not carry f to g")
        logger.info(f"Connected with a {len(witness)}-move witness")
        return Decision(True, decision.certificate, witness)
