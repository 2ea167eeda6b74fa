"""Geometric representation of a Coxeter system."""
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

from ..config import config
from ..errors import InternalError, NotAReflection, PreconditionError, ProductMismatch
from ..models import (
    ClassLabeling, CoxeterDiagram, Factorization, FieldContext, FieldElement,
    GroupElement, Reflection, Root, Word, bond_value, context_for,
)
from ..utils import setup_logger


logger = setup_logger(__name__, config.LOGS_DIR / "rootspace.log", config.LOG_LEVEL, config.LOG_TO_FILE)


class RootSystem:
    """Roots, reflections and exact group elements of W acting on the root space.

    Every matrix is written in the simple-root basis; column j is the image of alpha_j.
    """

    def __init__(
        self, diagram: CoxeterDiagram, ctx: Optional[FieldContext] = None, cache_size: Optional[int] = None
    ):
        """Build the bilinear form B over Q(2cos(pi/L)) for the diagram's finite labels.

        Reflection matrices and class witnesses are memoized per reflection in LRU
        caches of ``cache_size`` entries (default ``config.ROOT_CACHE_SIZE``).
        """
        self.diagram = diagram
        self.rank = diagram.rank
        self.ctx = ctx or context_for(diagram.finite_labels())
        self.form: Tuple[Tuple[FieldElement, ...], ...] = tuple(
            tuple(
                self.ctx.one if i == j else bond_value(self.ctx, diagram.label(i, j))
                for j in range(1, self.rank + 1)
            )
            for i in range(1, self.rank + 1)
        )
        self.identity = GroupElement(tuple(
            tuple(self.ctx.one if i == j else self.ctx.zero for j in range(self.rank))
            for i in range(self.rank)
        ))
        self._simple = tuple(self._build_simple(i) for i in range(1, self.rank + 1))
        size = config.ROOT_CACHE_SIZE if cache_size is None else cache_size
        self.reflection_matrix = lru_cache(maxsize=size)(self._reflection_matrix)
        self.class_witness = lru_cache(maxsize=size)(self._class_witness)

    def __repr__(self) -> str:
        return f"RootSystem(rank={self.rank}, L={self.ctx.L})"

    # form and simple generators -----------------------------------------

    def form_matrix(self) -> Tuple[Tuple[FieldElement, ...], ...]:
        return self.form

    def bilinear(self, u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
        """B(u, v) for coordinate vectors in the simple-root basis."""
        acc = self.ctx.zero
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and self.form[i][j]:
                    acc = acc + a * self.form[i][j] * b
        return acc

    def _check_index(self, i: int) -> None:
        if not isinstance(i, int) or isinstance(i, bool) or not 1 <= i <= self.rank:
            raise PreconditionError(f"simple index {i!r} outside 1..{self.rank}")

    def simple_root(self, i: int) -> Root:
        self._check_index(i)
        return Root(tuple(self.ctx.one if j == i else self.ctx.zero for j in range(1, self.rank + 1)))

    def simple_reflection_of(self, i: int) -> Reflection:
        return Reflection(self.simple_root(i))

    def _build_simple(self, i: int) -> GroupElement:
        rows = []
        for r in range(1, self.rank + 1):
            if r == i:
                rows.append(tuple(
                    self.ctx.element(-1) if c == i else self.form[i - 1][c - 1] * -2
                    for c in range(1, self.rank + 1)
                ))
            else:
                rows.append(self.identity.matrix[r - 1])
        return GroupElement(tuple(rows))

    def simple_reflection(self, i: int) -> GroupElement:
        """s_i: v -> v - 2B(alpha_i, v) alpha_i."""
        self._check_index(i)
        return self._simple[i - 1]

    def apply(self, g: GroupElement, root: Root) -> Root:
        """g applied to a root, without canonicalization."""
        return Root(g.apply(root.coords))

    def element_of_word(self, word: Iterable[int]) -> GroupElement:
        """Product s_{w_1} ... s_{w_k}, multiplied left to right."""
        g = self.identity
        for letter in word:
            self._check_index(letter)
            g = self._times_simple(g, letter)
        return g

    def _times_simple(self, g: GroupElement, i: int) -> GroupElement:
        # column c of g s_i is g(alpha_c) - 2B(alpha_i, alpha_c) g(alpha_i)
        col_i = [row[i - 1] for row in g.matrix]
        rows = []
        for r, row in enumerate(g.matrix):
            new_row = []
            for c, entry in enumerate(row):
                if c == i - 1:
                    new_row.append(-entry)
                else:
                    coeff = self.form[i - 1][c]
                    new_row.append(entry - coeff * 2 * col_i[r] if coeff and col_i[r] else entry)
            rows.append(tuple(new_row))
        return GroupElement(tuple(rows))

    # length and reduced words -------------------------------------------

    def is_negative(self, vector: Sequence[FieldElement]) -> bool:
        """Sign of the first nonzero coordinate; roots have uniform sign."""
        for c in vector:
            if c:
                return c.sign() < 0
        return False

    def _descend(self, g: GroupElement) -> List[int]:
        letters: List[int] = []
        while g != self.identity:
            if len(letters) >= config.DEPTH_REDUCTION_CAP:
                raise InternalError(f"greedy descent exceeded {config.DEPTH_REDUCTION_CAP} steps")
            for i in range(1, self.rank + 1):
                if self.is_negative(g.column(i)):
                    break
            else:
                raise InternalError("no descent found for a non-identity element")
            g = self._times_simple(g, i)
            letters.append(i)
        return letters

    def length(self, g: GroupElement) -> int:
        """l_S(g) by greedy descent."""
        return len(self._descend(g))

    def word_of(self, g: GroupElement) -> Word:
        """Reduced word for g, smallest descent first."""
        return tuple(reversed(self._descend(g)))

    def inverse(self, g: GroupElement) -> GroupElement:
        return self.element_of_word(reversed(self.word_of(g)))

    def product(self, factors: Iterable[Reflection]) -> GroupElement:
        g = self.identity
        for t in factors:
            g = g * self.reflection_matrix(t)
        return g

    # reflections --------------------------------------------------------

    def canonical_root(self, vector: Sequence[FieldElement], check: bool = True) -> Root:
        """Scale so that the first nonzero coordinate is 1."""
        lead = next((c for c in vector if c), None)
        if lead is None:
            raise InternalError("zero vector is not a root")
        scale = lead.inverse()
        coords = tuple(c * scale for c in vector)
        if check and any(c.sign() < 0 for c in coords):
            raise InternalError(f"root coordinates have mixed signs: {coords!r}")
        return Root(coords)

    def _reflection_matrix(self, t: Reflection) -> GroupElement:
        """x -> x - (2B(beta, x) / B(beta, beta)) beta."""
        beta = t.root.coords
        norm = self.bilinear(beta, beta)
        if not norm:
            raise NotAReflection(f"isotropic vector {t.root!r} does not define a reflection")
        scale = Fraction(2) / norm
        form_beta = [self.bilinear(beta, col) for col in self.identity.matrix]
        rows = []
        for r in range(self.rank):
            rows.append(tuple(
                self.identity.matrix[r][c] - (beta[r] * form_beta[c] * scale if beta[r] and form_beta[c] else self.ctx.zero)
                for c in range(self.rank)
            ))
        return GroupElement(tuple(rows))

    def reflection_of_element(self, g: GroupElement) -> Reflection:
        """The reflection g, if g is one; NotAReflection otherwise."""
        columns = [
            tuple(self.identity.matrix[r][c] - g.matrix[r][c] for r in range(self.rank))
            for c in range(self.rank)
        ]
        v = next((col for col in columns if any(col)), None)
        if v is None:
            raise NotAReflection("the identity is not a reflection")
        if not self.bilinear(v, v):
            raise NotAReflection("element fixes no root hyperplane")
        candidate = Reflection(Root(v))
        if self.reflection_matrix(candidate) != g:
            raise NotAReflection("element is not a reflection")
        return Reflection(self.canonical_root(v))

    def reflection_of_word(self, word: Sequence[int]) -> Reflection:
        if not word:
            raise NotAReflection("the empty word is the identity, not a reflection")
        try:
            return self.reflection_of_element(self.element_of_word(word))
        except NotAReflection as e:
            raise NotAReflection(f"word {list(word)} is not a reflection: {e.message}") from e

    def conjugate(self, t: Reflection, g: GroupElement) -> Reflection:
        """g t g^-1, via the canonical root of g(beta)."""
        return Reflection(self.canonical_root(g.apply(t.root.coords)))

    def reflect(self, t: Reflection, by: Reflection) -> Reflection:
        """by t by, computed on roots: beta - (2B(gamma, beta) / B(gamma, gamma)) gamma."""
        if t.key == by.key:
            return t
        beta, gamma = t.root.coords, by.root.coords
        pairing = self.bilinear(gamma, beta)
        if not pairing:
            return t
        scale = pairing * 2 / self.bilinear(gamma, gamma)
        return Reflection(self.canonical_root(tuple(b - scale * c for b, c in zip(beta, gamma))))

    # conjugacy classes --------------------------------------------------

    def _class_witness(self, t: Reflection) -> Tuple[int, Word]:
        """(p, u) with u s_p u^-1 = t, found by depth reduction."""
        beta = t.root.coords
        letters: List[int] = []
        while sum(1 for c in beta if c) > 1:
            if len(letters) >= config.DEPTH_REDUCTION_CAP:
                raise InternalError(f"depth reduction exceeded {config.DEPTH_REDUCTION_CAP} steps")
            for i in range(1, self.rank + 1):
                if self.bilinear(self.identity.matrix[i - 1], beta).sign() > 0:
                    break
            else:
                raise InternalError(f"no depth-reducing simple root for {t!r}")
            beta = self._simple[i - 1].apply(beta)
            letters.append(i)
        p = next(k for k, c in enumerate(beta, start=1) if c)
        u = tuple(letters)
        if self.conjugate(self.simple_reflection_of(p), self.element_of_word(u)) != t:
            raise InternalError(f"class witness ({p}, {list(u)}) does not reconstruct {t!r}")
        return p, u

    def class_of(self, t: Reflection, labeling: ClassLabeling) -> int:
        p, _ = self.class_witness(t)
        return labeling.class_of(p)

    def word_of_reflection(self, t: Reflection) -> Word:
        """Palindromic word u + [p] + reverse(u) for t."""
        p, u = self.class_witness(t)
        return u + (p,) + tuple(reversed(u))

    # factorizations -----------------------------------------------------

    def make_factorization(
        self,
        factors: Iterable[Reflection],
        target: Optional[GroupElement] = None,
    ) -> Factorization:
        """Factorization of ``target`` (default: the product of the factors)."""
        factors = tuple(factors)
        product = self.product(factors)
        if target is not None and product != target:
            raise ProductMismatch("product of the factors differs from the target element")
        return Factorization(product if target is None else target, factors)

    def factorization_of_words(
        self,
        words: Iterable[Sequence[int]],
        target: Optional[GroupElement] = None,
    ) -> Factorization:
        return self.make_factorization((self.reflection_of_word(w) for w in words), target)
