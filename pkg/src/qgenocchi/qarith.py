"""Exact q-arithmetic over arbitrary-precision rationals.

The scalar field is ``fractions.Fraction``: every value is stored in lowest
terms and all arithmetic is exact.  No floating point appears anywhere in
this package.

The deformation parameter q lives in a :class:`QContext`.  q = 1 is handled
by an explicit limit branch ([n]_1 = n, classical binomials, ...) rather
than through the singular (1 - q^a)/(1 - q) formula, so classical-limit
checks can be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

# The coefficient field: arbitrary-precision rationals in lowest terms.
Scalar = Fraction

ONE = Fraction(1)
ZERO = Fraction(0)


def as_scalar(value: int | Fraction) -> Fraction:
    """Coerce an int (or Fraction) to the exact scalar type."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal like ``3``, ``-1/2`` or ``7/4``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render exactly, as ``p/q`` or a bare integer (never a float)."""
    return str(value)


@dataclass(frozen=True)
class QContext:
    """A fixed deformation parameter q > 0.

    q > 0 guarantees [n]_q = 1 + q + ... + q^(n-1) > 0 for n >= 1, so no
    q-factorial or q-binomial can ever hit a zero denominator.
    """

    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", as_scalar(self.q))
        if self.q <= 0:
            raise ValueError(f"q must be positive, got {self.q}")

    @property
    def is_one(self) -> bool:
        return self.q == 1

    def q_pow(self, exponent: int) -> Fraction:
        """q**exponent, exact (exponent may be negative)."""
        return self.q**exponent


def triangular(k: int) -> int:
    """k(k-1)/2, always an integer; the exponent in big-E style factors."""
    return k * (k - 1) // 2


@lru_cache(maxsize=None)
def q_number(a: int, ctx: QContext) -> Fraction:
    """The q-integer [a]_q = (1 - q^a)/(1 - q), with [a]_1 = a."""
    if a < 0:
        raise ValueError(f"q_number needs a >= 0, got {a}")
    if ctx.is_one:
        return Fraction(a)
    return (1 - ctx.q_pow(a)) / (1 - ctx.q)


@lru_cache(maxsize=None)
def q_factorial(n: int, ctx: QContext) -> Fraction:
    """[n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1."""
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1, ctx) * q_number(n, ctx)


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int, ctx: QContext) -> Fraction:
    """The Gaussian binomial coefficient [n k]_q.

    Zero outside 0 <= k <= n (the usual convention); the classical binomial
    at q = 1.
    """
    if n < 0:
        raise ValueError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    if ctx.is_one:
        return Fraction(comb(n, k))
    return q_factorial(n, ctx) / (q_factorial(k, ctx) * q_factorial(n - k, ctx))


def q_pochhammer(a: int | Fraction, ctx: QContext, n: int) -> Fraction:
    """The q-shifted factorial (a; q)_n = prod_{j=0}^{n-1} (1 - q^j a)."""
    if n < 0:
        raise ValueError(f"q_pochhammer needs n >= 0, got {n}")
    a = as_scalar(a)
    out = ONE
    for j in range(n):
        out *= 1 - ctx.q_pow(j) * a
    return out


def q_add_pow(x: int | Fraction, y: int | Fraction, n: int, ctx: QContext) -> Fraction:
    """The q-analogue (x + y)_q^n = sum_k [n k]_q q^(k(k-1)/2) x^(n-k) y^k.

    Collapses to the classical binomial expansion at q = 1.  0**0 evaluates
    to 1 (Fraction semantics), which is the convention this kernel relies on
    when an argument vanishes.
    """
    if n < 0:
        raise ValueError(f"q_add_pow needs n >= 0, got {n}")
    x = as_scalar(x)
    y = as_scalar(y)
    out = ZERO
    for k in range(n + 1):
        out += q_binomial(n, k, ctx) * ctx.q_pow(triangular(k)) * x ** (n - k) * y**k
    return out
