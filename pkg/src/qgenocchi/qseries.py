"""Truncated formal power series over a generic exact coefficient ring.

A Series stores coefficients c_0..c_N for a fixed truncation order N and is
exact through degree N: coefficient n of any result equals the coefficient
of the untruncated operation for all n <= N.  Binary operations demand equal
truncation orders and the same coefficient ring; nothing is coerced
silently, because silent precision loss is the classic bug in series code.

Two rings are provided: exact rationals (SCALAR_RING) and bivariate
polynomials (BIPOLY_RING), so the same engine extracts both number tables
and symbolic polynomial tables from a generating function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable

from .qarith import QContext, as_scalar, q_factorial, q_number, triangular
from .qpoly import BiPoly


@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag: identity elements plus unit inversion."""

    name: str
    zero: Any
    one: Any
    invert: Callable[[Any], Any]


def _invert_bipoly(value: BiPoly) -> BiPoly:
    # Units of the polynomial ring are the nonzero constants.
    return BiPoly.constant(1 / value.constant_value())


SCALAR_RING = Ring("scalar", Fraction(0), Fraction(1), lambda c: 1 / c)
BIPOLY_RING = Ring("bipoly", BiPoly.zero(), BiPoly.one(), _invert_bipoly)


class Series:
    """A truncated formal power series sum c_n t^n, n = 0..order."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[Any], ring: Ring):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Series is immutable")

    @property
    def order(self) -> int:
        """The truncation order N (inclusive)."""
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value: Any, order: int, ring: Ring) -> "Series":
        return cls((value,) + (ring.zero,) * order, ring)

    @classmethod
    def zero(cls, order: int, ring: Ring) -> "Series":
        return cls.constant(ring.zero, order, ring)

    @classmethod
    def one(cls, order: int, ring: Ring) -> "Series":
        return cls.constant(ring.one, order, ring)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ring.name, self.coeffs))

    def __repr__(self) -> str:
        inner = ", ".join(str(c) for c in self.coeffs[:5])
        if self.order >= 5:
            inner += ", ..."
        return f"Series[{self.ring.name}; N={self.order}]({inner})"

    def _require_compatible(self, other: "Series") -> None:
        if self.ring is not other.ring:
            raise ValueError(f"ring mismatch: {self.ring.name} vs {other.ring.name}")
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._require_compatible(other)
        return Series((a + b for a, b in zip(self.coeffs, other.coeffs)), self.ring)

    def __neg__(self) -> "Series":
        return Series((-c for c in self.coeffs), self.ring)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Series | int | Fraction") -> "Series":
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            return Series((coef * c for coef in self.coeffs), self.ring)
        if not isinstance(other, Series):
            return NotImplemented
        self._require_compatible(other)
        f, g = self.coeffs, other.coeffs
        out = []
        for n in range(self.order + 1):
            acc = f[0] * g[n]
            for k in range(1, n + 1):
                acc = acc + f[k] * g[n - k]
            out.append(acc)
        return Series(out, self.ring)

    def __rmul__(self, other: "int | Fraction") -> "Series":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def reciprocal(self) -> "Series":
        """The series g with self * g = 1 through the truncation order.

        Uses the linear recurrence g_0 = 1/c_0,
        g_n = -(1/c_0) * sum_{k=1..n} c_k g_{n-k}.
        """
        c0 = self.coeffs[0]
        try:
            inv0 = self.ring.invert(c0)
        except (ZeroDivisionError, ValueError) as exc:
            raise ValueError(f"constant term {c0!s} is not invertible in {self.ring.name}") from exc
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out.append(-(inv0 * acc))
        return Series(out, self.ring)

    def int_pow(self, exponent: int) -> "Series":
        """self**exponent for a nonnegative integer exponent, by squaring."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        out = Series.one(self.order, self.ring)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- argument manipulation ------------------------------------------------

    def scale_arg(self, c: int | Fraction) -> "Series":
        """f(t) -> f(c t): coefficient n is scaled by c^n."""
        c = as_scalar(c)
        power = Fraction(1)
        out = []
        for coef in self.coeffs:
            out.append(coef * power)
            power *= c
        return Series(out, self.ring)

    def shift_div_t(self) -> "Series":
        """f(t)/t for a series with zero constant term; order drops by one.

        The caller must budget one extra order when building the input.
        """
        if self.coeffs[0] != self.ring.zero:
            raise ValueError(f"cannot divide by t: constant term is {self.coeffs[0]!s}, not zero")
        if self.order == 0:
            raise ValueError("cannot divide by t at truncation order 0")
        return Series(self.coeffs[1:], self.ring)

    def shift_mul_t(self) -> "Series":
        """t * f(t) at the same truncation order (top coefficient drops off)."""
        return Series((self.ring.zero,) + self.coeffs[:-1], self.ring)

    def truncate(self, order: int) -> "Series":
        """Restrict to a smaller truncation order."""
        if order < 0 or order > self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to order {order}")
        return Series(self.coeffs[: order + 1], self.ring)

    def q_derivative(self, ctx: QContext) -> "Series":
        """The Jackson derivative D_q: c_n t^n -> c_n [n]_q t^(n-1); order drops by one."""
        if self.order == 0:
            return Series.zero(0, self.ring)
        return Series(
            (self.coeffs[n] * q_number(n, ctx) for n in range(1, self.order + 1)),
            self.ring,
        )


def lift_to_bipoly(f: Series) -> Series:
    """Embed a scalar-coefficient series into the BiPoly coefficient ring."""
    if f.ring is not SCALAR_RING:
        raise ValueError(f"can only lift scalar series, got ring {f.ring.name}")
    return Series((BiPoly.constant(c) for c in f.coeffs), BIPOLY_RING)


# -- q-exponential builders -----------------------------------------------


def q_exp_small(ctx: QContext, order: int) -> Series:
    """The small q-exponential e_q(t): coefficient n is 1/[n]_q!."""
    return Series((1 / q_factorial(n, ctx) for n in range(order + 1)), SCALAR_RING)


def q_exp_big(ctx: QContext, order: int) -> Series:
    """The big q-exponential E_q(t): coefficient n is q^(n(n-1)/2)/[n]_q!."""
    return Series(
        (ctx.q_pow(triangular(n)) / q_factorial(n, ctx) for n in range(order + 1)),
        SCALAR_RING,
    )


def q_exp_small_var(ctx: QContext, order: int, var: str = "x") -> Series:
    """e_q(t*var) over the BiPoly ring: coefficient n is var^n/[n]_q!."""
    i, j = (1, 0) if var == "x" else (0, 1)
    if var not in ("x", "y"):
        raise ValueError(f"var must be 'x' or 'y', got {var!r}")
    return Series(
        (BiPoly.term(1 / q_factorial(n, ctx), i * n, j * n) for n in range(order + 1)),
        BIPOLY_RING,
    )


def q_exp_big_var(ctx: QContext, order: int, var: str = "y") -> Series:
    """E_q(t*var) over the BiPoly ring: coefficient n is q^(n(n-1)/2) var^n/[n]_q!."""
    i, j = (1, 0) if var == "x" else (0, 1)
    if var not in ("x", "y"):
        raise ValueError(f"var must be 'x' or 'y', got {var!r}")
    return Series(
        (
            BiPoly.term(ctx.q_pow(triangular(n)) / q_factorial(n, ctx), i * n, j * n)
            for n in range(order + 1)
        ),
        BIPOLY_RING,
    )


# -- factorial form --------------------------------------------------------


@dataclass(frozen=True)
class FactorialForm:
    """Coefficients a_n of the convention f(t) = sum a_n t^n / [n]_q!."""

    values: tuple

    @property
    def order(self) -> int:
        return len(self.values) - 1


def to_factorial_form(f: Series, ctx: QContext) -> FactorialForm:
    """a_n = c_n * [n]_q!; round-trips exactly with from_factorial_form."""
    return FactorialForm(tuple(f.coeffs[n] * q_factorial(n, ctx) for n in range(f.order + 1)))


def from_factorial_form(form: FactorialForm, ctx: QContext, ring: Ring = SCALAR_RING) -> Series:
    return Series(
        (form.values[n] * (1 / q_factorial(n, ctx)) for n in range(form.order + 1)),
        ring,
    )
