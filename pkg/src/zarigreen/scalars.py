"""Exact arithmetic in Q and in a single real quadratic field Q(sqrt(d)).

A :class:`Scalar` stores ``a + b*sqrt(d)`` with ``a``, ``b`` rational
(:class:`fractions.Fraction`) and ``d`` a square-free integer, ``d = 0``
encoding a plain rational.  Values are kept in canonical form at all
times, so equality is structural, hashing is cheap, and the total order
agrees exactly with the order on the reals.

Mixing two honest quadratic fields raises :class:`MixedFields`; rationals
promote silently into either field.  There are no floating point
fallbacks anywhere in this module.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering

from .errors import DivisionByZero, MixedFields, NestedExtension

#: Canonical return values of :func:`compare`.
LT, EQ, GT = -1, 0, 1

#: The rationals are represented by the stdlib Fraction type.
Rational = Fraction


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """Write ``n > 0`` as ``s**2 * d`` with ``d`` square-free; return ``(s, d)``."""
    if n <= 0:
        raise ValueError("expected a positive integer")
    s, d, m = 1, 1, n
    f = 2
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    d *= m  # leftover factor is prime
    return s, d


def _sqrt_fraction(q: Fraction) -> Fraction | None:
    """Exact nonnegative square root of a rational, or None."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@total_ordering
class Scalar:
    """An element ``a + b*sqrt(d)`` of Q or of a real quadratic field."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0, d: int = 0):
        if isinstance(a, float) or isinstance(b, float):
            raise TypeError("floating point input is not allowed; use Fraction")
        a, b = Fraction(a), Fraction(b)
        if d < 0:
            raise ValueError("d must be a nonnegative integer")
        if d == 1:
            a, b, d = a + b, Fraction(0), 0
        if d == 0:
            if b != 0:
                raise ValueError("d = 0 requires b = 0")
        elif b != 0:
            s, dd = squarefree_decomposition(d)
            b, d = b * s, dd
            if d == 1:
                a, b, d = a + b, Fraction(0), 0
        if b == 0:
            d = 0
        self.a, self.b, self.d = a, b, d

    # -- construction helpers ------------------------------------------------

    @classmethod
    def of(cls, x: "Scalar | Fraction | int") -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x)
        raise TypeError(f"cannot interpret {x!r} as a Scalar")

    @classmethod
    def sqrt_of_int(cls, n: int) -> "Scalar":
        """The exact square root of a nonnegative integer."""
        if n < 0:
            raise ValueError("negative radicand")
        if n == 0:
            return cls(0)
        s, d = squarefree_decomposition(n)
        return cls(s) if d == 1 else cls(0, s, d)

    # -- canonical predicates ------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def sign(self) -> int:
        """Exact sign of the real value, decided by rational sign tests."""
        a, b, d = self.a, self.b, self.d
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0 or (a > 0) == (b > 0):
            return 1 if b > 0 else -1
        # opposite signs: compare a**2 against b**2 * d
        t = a * a - b * b * d
        if a > 0:
            return (t > 0) - (t < 0)
        return (t < 0) - (t > 0)

    # -- field promotion -----------------------------------------------------

    def _joint_field(self, other: "Scalar") -> int:
        if self.d == 0:
            return other.d
        if other.d == 0 or other.d == self.d:
            return self.d
        raise MixedFields(f"cannot mix sqrt({self.d}) with sqrt({other.d})")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        d = self._joint_field(other)
        return Scalar(self.a + other.a, self.b + other.b, d)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Scalar(-self.a, -self.b, self.d)

    def __mul__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        d = self._joint_field(other)
        a = self.a * other.a + self.b * other.b * d
        b = self.a * other.b + self.b * other.a
        return Scalar(a, b, d)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("scalar inverse of zero")
        if self.b == 0:
            return Scalar(1 / self.a)
        n = self.a * self.a - self.b * self.b * self.d  # norm, nonzero for d square-free
        return Scalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.of(other) * self.inverse()

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- order, equality, hashing ---------------------------------------------

    def __eq__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.d == other.d

    def __lt__(self, other):
        try:
            other = Scalar.of(other)
        except TypeError:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return not self.is_zero()

    # -- text form -----------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"Scalar({format_scalar(self)!r})"


ZERO = Scalar(0)
ONE = Scalar(1)


def common_field(*values) -> int:
    """The single square-free d shared by all values (0 if all rational)."""
    d = 0
    for x in values:
        x = Scalar.of(x)
        if x.d:
            if d and x.d != d:
                raise MixedFields(f"cannot mix sqrt({d}) with sqrt({x.d})")
            d = x.d
    return d


# -- spec-level operation surface ---------------------------------------------

def add(x, y) -> Scalar:
    return Scalar.of(x) + Scalar.of(y)


def mul(x, y) -> Scalar:
    return Scalar.of(x) * Scalar.of(y)


def neg(x) -> Scalar:
    return -Scalar.of(x)


def inv(x) -> Scalar:
    return Scalar.of(x).inverse()


def compare(x, y) -> int:
    """Exact comparison of real values; returns LT, EQ or GT."""
    return (Scalar.of(x) - Scalar.of(y)).sign()


def is_rational(x) -> bool:
    return Scalar.of(x).is_rational()


def scalar_sqrt(x: Scalar) -> Scalar | None:
    """Square root of ``x`` inside its own field Q(sqrt(d)), or None.

    For ``x = A + B*sqrt(d)`` a root ``p + q*sqrt(d)`` exists iff
    ``A**2 - B**2*d`` is a rational square ``r**2`` and ``(A +- r)/2`` is a
    rational square.  Returns the nonnegative root when one exists.
    """
    x = Scalar.of(x)
    if x.sign() < 0:
        return None
    if x.is_zero():
        return ZERO
    if x.d == 0:
        r = _sqrt_fraction(x.a)
        return None if r is None else Scalar(r)
    A, B, d = x.a, x.b, x.d
    if B == 0:  # pure rational value inside a declared field
        r = _sqrt_fraction(A)
        if r is not None:
            return Scalar(r)
        r = _sqrt_fraction(A / d)
        return None if r is None else Scalar(0, r, d)
    r = _sqrt_fraction(A * A - B * B * d)
    if r is None:
        return None
    for branch in (A + r, A - r):
        p = _sqrt_fraction(branch / 2)
        if p is not None and p != 0:
            q = B / (2 * p)
            root = Scalar(p, q, d)
            if root.sign() < 0:
                root = -root
            if root * root == x:
                return root
    return None


def solve_quadratic(c2, c1, c0) -> list[Scalar]:
    """Real roots of ``c2*x**2 + c1*x + c0 = 0``, ascending, multiplicity 1.

    Rational coefficients may introduce a single square root; coefficients
    already living in Q(sqrt(d)) must have their discriminant resolvable in
    the same field, otherwise :class:`NestedExtension` is raised.  The
    degenerate all-zero equation is rejected; ``0 = c0 != 0`` yields no
    roots and returns the empty list.
    """
    c2, c1, c0 = Scalar.of(c2), Scalar.of(c1), Scalar.of(c0)
    d = common_field(c2, c1, c0)
    if c2.is_zero():
        if c1.is_zero():
            if c0.is_zero():
                raise ValueError("degenerate equation: every value is a root")
            return []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    s = disc.sign()
    if s < 0:
        return []
    if s == 0:
        return [-c1 / (2 * c2)]
    if d == 0:
        # rational data: allowed to introduce one fresh square root
        n = disc.a.numerator * disc.a.denominator
        sq, fresh = squarefree_decomposition(n)
        coeff = Fraction(sq, disc.a.denominator)
        root_disc = Scalar(coeff) if fresh == 1 else Scalar(0, coeff, fresh)
    else:
        root_disc = scalar_sqrt(disc)
        if root_disc is None:
            raise NestedExtension(
                f"roots require a square root of {disc} outside Q(sqrt({d}))")
    lo = (-c1 - root_disc) / (2 * c2)
    hi = (-c1 + root_disc) / (2 * c2)
    return sorted((lo, hi))


# -- serialization -------------------------------------------------------------

_SCALAR_RE = re.compile(
    r"""^(?:(?P<a>[+-]?\d+(?:/\d+)?)(?=$|[+-]))?
         (?:(?P<sign>[+-])?(?:(?P<b>\d+(?:/\d+)?)\*)?sqrt\((?P<d>\d+)\))?$""",
    re.VERBOSE,
)


def format_scalar(x: Scalar) -> str:
    """Canonical text form: ``p/q`` or ``p/q + r/s*sqrt(D)``."""
    x = Scalar.of(x)
    if x.d == 0:
        return str(x.a)
    sign = "-" if x.b < 0 else "+"
    return f"{x.a} {sign} {abs(x.b)}*sqrt({x.d})"


def parse_scalar(text: str) -> Scalar:
    """Parse the :func:`format_scalar` form; whitespace-insensitive."""
    from .errors import ParseError

    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty scalar")
    m = _SCALAR_RE.match(compact)
    if not m or (m.group("a") is None and m.group("d") is None):
        raise ParseError(f"cannot parse scalar {text!r}")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    if m.group("d") is None:
        return Scalar(a)
    b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
    if m.group("sign") == "-":
        b = -b
    return Scalar(a, b, int(m.group("d")))
