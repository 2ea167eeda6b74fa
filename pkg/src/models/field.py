"""Exact arithmetic in the real cyclotomic field Q(theta), theta = 2cos(pi/L).

Elements are polynomials in theta with rational coefficients, reduced modulo
the minimal polynomial of theta. Coefficient lists follow sympy's dense
univariate convention (highest degree first) and all ring operations are
delegated to ``sympy.polys``.
"""
import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Tuple, Union

from sympy import Poly, Rational, Symbol
from sympy.polys.densearith import (
    dup_add, dup_exquo, dup_mul, dup_mul_ground, dup_neg, dup_rem, dup_sub,
)
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.polyerrors import NotInvertible

from ..errors import FieldError, InternalError

Scalar = Union[int, Fraction, "FieldElement"]

_X = [ZZ(1), ZZ(0)]


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Phi_n over ZZ, highest degree first, by exact division of z^n - 1."""
    poly = [ZZ(1)] + [ZZ(0)] * (n - 1) + [ZZ(-1)]
    for d in range(1, n):
        if n % d == 0:
            poly = dup_exquo(poly, list(cyclotomic_coefficients(d)), ZZ)
    return tuple(int(c) for c in poly)


def chebyshev_polynomial(k: int) -> list:
    """p_k with p_0 = 2, p_1 = x, p_{k+1} = x p_k - p_{k-1}; p_k(z + 1/z) = z^k + z^-k."""
    prev, cur = [ZZ(2)], list(_X)
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, dup_sub(dup_mul(_X, cur, ZZ), prev, ZZ)
    return cur


def fold_palindromic(coeffs: Iterable[int]) -> list:
    """Rewrite a palindromic polynomial of degree 2d as a degree-d polynomial in x = z + 1/z."""
    low = [ZZ(c) for c in reversed(list(coeffs))]
    d = (len(low) - 1) // 2
    result = [low[d]]
    for k in range(1, d + 1):
        result = dup_add(result, dup_mul_ground(chebyshev_polynomial(k), low[d + k], ZZ), ZZ)
    return result


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _imul(a: Tuple[Fraction, Fraction], b: Tuple[Fraction, Fraction]) -> Tuple[Fraction, Fraction]:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


class FieldContext:
    """The field Q(2cos(pi/L)) together with an isolating interval for its generator.

    L = 1 is the rationals (theta = -2). The refined interval is shared by all
    sign computations and only ever narrowed, under a lock.
    """

    def __init__(self, L: int):
        if L < 1:
            raise FieldError(f"L must be positive, got {L}")
        self.L = L
        if L == 1:
            psi = [ZZ(1), ZZ(2)]
        else:
            psi = fold_palindromic(cyclotomic_coefficients(2 * L))
        self.min_poly: Tuple[int, ...] = tuple(int(c) for c in psi)
        self.degree = len(self.min_poly) - 1
        self._modulus = [QQ(c) for c in self.min_poly]
        self._lock = threading.Lock()
        self._interval = self._isolate()

        self.zero = FieldElement((), self)
        self.one = self.element(1)
        self.theta = self._wrap(dup_rem([QQ(1), QQ(0)], self._modulus, QQ))

    def __repr__(self) -> str:
        return f"FieldContext(L={self.L}, min_poly={list(self.min_poly)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldContext) and other.L == self.L

    def __hash__(self) -> int:
        return hash(("FieldContext", self.L))

    @property
    def isolating_interval(self) -> Tuple[Fraction, Fraction]:
        return self._interval

    @property
    def theta_float(self) -> float:
        return 2 * math.cos(math.pi / self.L)

    # construction -------------------------------------------------------

    def _wrap(self, rep) -> "FieldElement":
        return FieldElement(tuple(dup_strip(list(rep))), self)

    def element(self, value: Scalar) -> "FieldElement":
        """Coerce an int, Fraction or element of this field."""
        if isinstance(value, FieldElement):
            return value
        if isinstance(value, bool):
            raise FieldError("booleans are not field elements")
        if isinstance(value, int):
            return self._wrap([QQ(value)])
        if isinstance(value, Fraction):
            return self._wrap([QQ(value.numerator, value.denominator)])
        raise FieldError(f"cannot coerce {value!r} into {self!r}")

    def from_coefficients(self, coeffs: Iterable[Scalar]) -> "FieldElement":
        """Element sum c_k theta^k from coefficients listed lowest degree first."""
        rep = []
        for c in reversed(list(coeffs)):
            c = Fraction(c)
            rep.append(QQ(c.numerator, c.denominator))
        return self._wrap(dup_rem(dup_strip(rep), self._modulus, QQ))

    # arithmetic on representations -------------------------------------

    def add(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return self._wrap(dup_add(list(x.coeffs), list(y.coeffs), QQ))

    def sub(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        return self._wrap(dup_sub(list(x.coeffs), list(y.coeffs), QQ))

    def mul(self, x: "FieldElement", y: "FieldElement") -> "FieldElement":
        if not x.coeffs or not y.coeffs:
            return self.zero
        product = dup_mul(list(x.coeffs), list(y.coeffs), QQ)
        if len(product) > self.degree:
            product = dup_rem(product, self._modulus, QQ)
        return self._wrap(product)

    def neg(self, x: "FieldElement") -> "FieldElement":
        return self._wrap(dup_neg(list(x.coeffs), QQ))

    def inv(self, x: "FieldElement") -> "FieldElement":
        if not x.coeffs:
            raise FieldError("division by zero")
        try:
            return self._wrap(dup_invert(list(x.coeffs), self._modulus, QQ))
        except NotInvertible as e:
            raise InternalError(f"{x!r} is not invertible modulo an irreducible polynomial") from e

    # sign determination -------------------------------------------------

    def _psi_at(self, q: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in self.min_poly:
            acc = acc * q + c
        return acc

    def _isolate(self) -> Tuple[Fraction, Fraction]:
        """Rational interval around the float approximation that holds exactly one root of psi."""
        poly = Poly(list(self.min_poly), Symbol("x"))
        approx = Fraction(self.theta_float)
        half = Fraction(1, 2 ** 20)
        for _ in range(256):
            lo, hi = approx - half, approx + half
            roots = poly.count_roots(
                Rational(lo.numerator, lo.denominator),
                Rational(hi.numerator, hi.denominator),
            )
            if roots == 1 and self._psi_at(lo) * self._psi_at(hi) < 0:
                return lo, hi
            half = half * 2 if roots == 0 else half / 2
        raise InternalError(f"could not isolate 2cos(pi/{self.L})")

    def _bisect(self, lo: Fraction, hi: Fraction) -> Tuple[Fraction, Fraction]:
        mid = (lo + hi) / 2
        at_mid = self._psi_at(mid)
        if at_mid == 0:
            return mid, mid
        if (self._psi_at(lo) < 0) != (at_mid < 0):
            return lo, mid
        return mid, hi

    def _narrow(self, lo: Fraction, hi: Fraction) -> None:
        with self._lock:
            cur_lo, cur_hi = self._interval
            if hi - lo < cur_hi - cur_lo:
                self._interval = (lo, hi)

    def sign(self, x: "FieldElement") -> int:
        """Exact sign of x at the real embedding theta = 2cos(pi/L)."""
        if not x.coeffs:
            return 0
        if len(x.coeffs) == 1:
            return 1 if x.coeffs[0] > 0 else -1
        coeffs = [_to_fraction(c) for c in x.coeffs]
        lo, hi = self._interval
        refined = False
        while True:
            span = (coeffs[0], coeffs[0])
            for c in coeffs[1:]:
                a, b = _imul(span, (lo, hi))
                span = (a + c, b + c)
            if span[0] > 0 or span[1] < 0:
                if refined:
                    self._narrow(lo, hi)
                return 1 if span[0] > 0 else -1
            lo, hi = self._bisect(lo, hi)
            refined = True


@dataclass(frozen=True, eq=False)
class FieldElement:
    """Immutable element of a FieldContext; canonical reduced representation."""

    coeffs: Tuple
    ctx: FieldContext = field(repr=False, compare=False)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        return self.ctx.element(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == self.ctx.element(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: Scalar) -> "FieldElement":
        return self.ctx.add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "FieldElement":
        return self.ctx.sub(self, self._coerce(other))

    def __rsub__(self, other: Scalar) -> "FieldElement":
        return self.ctx.sub(self._coerce(other), self)

    def __mul__(self, other: Scalar) -> "FieldElement":
        return self.ctx.mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "FieldElement":
        return self.ctx.neg(self)

    def __truediv__(self, other: Scalar) -> "FieldElement":
        return self.ctx.mul(self, self.ctx.inv(self._coerce(other)))

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        return self.ctx.mul(self._coerce(other), self.ctx.inv(self))

    def inverse(self) -> "FieldElement":
        return self.ctx.inv(self)

    def sign(self) -> int:
        return self.ctx.sign(self)

    def coefficients(self) -> Tuple[Fraction, ...]:
        """Rational coefficients, lowest degree first, padded to the field degree."""
        low = [_to_fraction(c) for c in reversed(self.coeffs)]
        return tuple(low + [Fraction(0)] * (self.ctx.degree - len(low)))

    def __float__(self) -> float:
        theta = self.ctx.theta_float
        return float(sum(float(c) * theta ** k for k, c in enumerate(self.coefficients())))

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients()):
            if c == 0:
                continue
            terms.append(str(c) if k == 0 else f"{c}*θ" + (f"^{k}" if k > 1 else ""))
        return " + ".join(terms) if terms else "0"


def _lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


@lru_cache(maxsize=None)
def _context(L: int) -> FieldContext:
    return FieldContext(L)


def context_for(labels: Iterable[int]) -> FieldContext:
    """Shared context for L = lcm(labels); L = 1 when labels is empty."""
    labels = sorted(set(labels))
    for m in labels:
        if not isinstance(m, int) or m < 2:
            raise FieldError(f"labels must be finite integers >= 2, got {m!r}")
    return _context(_lcm(labels))


def chebyshev_value(ctx: FieldContext, k: int) -> FieldElement:
    """p_k(theta) = 2cos(k pi / L) for 0 <= k <= L."""
    if not 0 <= k <= ctx.L:
        raise FieldError(f"chebyshev index {k} outside 0..{ctx.L}")
    prev, cur = ctx.element(2), ctx.theta
    if k == 0:
        return prev
    for _ in range(k - 1):
        prev, cur = cur, ctx.theta * cur - prev
    return cur


def bond_value(ctx: FieldContext, m: Union[int, float]) -> FieldElement:
    """Form entry -cos(pi/m); -1 for m = infinity and 0 for m = 2 in every context."""
    if m == math.inf:
        return ctx.element(-1)
    if m == 2:
        return ctx.zero
    if not isinstance(m, int) or m < 2:
        raise FieldError(f"invalid label {m!r}")
    if ctx.L % m:
        raise FieldError(f"label {m} does not divide L={ctx.L}")
    return chebyshev_value(ctx, ctx.L // m) * Fraction(-1, 2)
