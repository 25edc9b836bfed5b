"""q-Bernoulli and q-Genocchi numbers and polynomials of integer order.

The order-a Bernoulli family comes from (t/(e_q(t)-1))^a and the order-a
Genocchi family from (2t/(e_q(t)+1))^a; multiplying the base series by
e_q(tx) E_q(ty) and reading factorial-form coefficients yields the
bivariate polynomials.  Two independent construction paths are provided
(direct series extraction, and reconstruction from the numbers via the
summation formulas) so each can serve as an oracle for the other.

Classical Bernoulli/Genocchi oracles live here too; they use their own
recurrences and never touch the q-engine, so classical-limit checks are
not circular.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb
from typing import Sequence

from .qarith import QContext, as_scalar, q_binomial, triangular
from .qpoly import BiPoly
from .qseries import (
    SCALAR_RING,
    Series,
    lift_to_bipoly,
    q_exp_big_var,
    q_exp_small,
    q_exp_small_var,
    to_factorial_form,
)


class FamilyKind(enum.Enum):
    BERNOULLI = "bernoulli"
    GENOCCHI = "genocchi"


@dataclass(frozen=True)
class FamilyId:
    """A polynomial family: which base generating function, at which order."""

    kind: FamilyKind
    order: int

    def __post_init__(self) -> None:
        if self.order < 0:
            raise ValueError(f"family order must be >= 0, got {self.order}")


def _base_series(family: FamilyId, ctx: QContext, order: int) -> Series:
    """The order-a base series as a unit power series times t^a (Genocchi).

    Bernoulli: (t/(e_q - 1))^a, directly a unit series (constant term 1).
    Genocchi: (2t/(e_q + 1))^a = (t * reciprocal((e_q + 1)/2))^a; keeping
    the factor 2 inside the reciprocal keeps the constant term invertible.
    """
    one = Series.one(order, SCALAR_RING)
    if family.kind is FamilyKind.BERNOULLI:
        eq = q_exp_small(ctx, order + 1)
        unit = (eq - Series.one(order + 1, SCALAR_RING)).shift_div_t()
        return unit.reciprocal().int_pow(family.order)
    eq = q_exp_small(ctx, order)
    half_sum = (eq + one) * Fraction(1, 2)
    base = half_sum.reciprocal().shift_mul_t()
    return base.int_pow(family.order)


def compute_numbers(family: FamilyId, ctx: QContext, max_n: int) -> list[Fraction]:
    """Factorial-form coefficients of the order-a base generating function."""
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    budget = max_n + family.order + 2
    base = _base_series(family, ctx, budget)
    return list(to_factorial_form(base.truncate(max_n), ctx).values)


def compute_polys_direct(family: FamilyId, ctx: QContext, max_n: int) -> list[BiPoly]:
    """Bivariate polynomials extracted directly from the generating function.

    Runs the series engine over the BiPoly ring: base series (lifted) times
    e_q(tx) times E_q(ty), read off in factorial form.
    """
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    budget = max_n + family.order + 2
    base = lift_to_bipoly(_base_series(family, ctx, budget))
    product = base * q_exp_small_var(ctx, budget, "x") * q_exp_big_var(ctx, budget, "y")
    return list(to_factorial_form(product.truncate(max_n), ctx).values)


def compute_polys_summation(family: FamilyId, ctx: QContext, max_n: int) -> list[BiPoly]:
    """Bivariate polynomials rebuilt from the numbers by summation formulas.

    First P_n(x, 0) = sum_k [n k]_q * N_k * x^(n-k), then
    P_n(x, y) = sum_k [n k]_q q^((n-k)(n-k-1)/2) P_k(x, 0) y^(n-k).
    Must agree exactly with compute_polys_direct; the two paths are
    independent cross-checks.
    """
    numbers = compute_numbers(family, ctx, max_n)
    on_axis: list[BiPoly] = []
    for n in range(max_n + 1):
        p = BiPoly.zero()
        for k in range(n + 1):
            p += q_binomial(n, k, ctx) * numbers[k] * BiPoly.term(1, n - k, 0)
        on_axis.append(p)
    full: list[BiPoly] = []
    for n in range(max_n + 1):
        p = BiPoly.zero()
        for k in range(n + 1):
            c = q_binomial(n, k, ctx) * ctx.q_pow(triangular(n - k))
            p += c * (on_axis[k] * BiPoly.term(1, 0, n - k))
        full.append(p)
    return full


@dataclass(frozen=True)
class FamilyTable:
    """Computed numbers (and optionally polynomials) for one family and q."""

    family: FamilyId
    ctx: QContext
    numbers: tuple[Fraction, ...]
    polys: tuple[BiPoly, ...] | None = None

    @property
    def max_n(self) -> int:
        return len(self.numbers) - 1

    def number(self, n: int) -> Fraction:
        return self.numbers[n]

    def poly(self, n: int) -> BiPoly:
        if self.polys is None:
            raise ValueError("table was built without polynomials")
        return self.polys[n]

    def with_number_mutation(self, n: int, delta: Fraction) -> "FamilyTable":
        """A copy with numbers[n] perturbed by delta (for verifier kill-tests).

        Deliberately breaks the numbers/polys consistency invariant; the
        verification suite is expected to notice.
        """
        mutated = list(self.numbers)
        mutated[n] = mutated[n] + as_scalar(delta)
        return replace(self, numbers=tuple(mutated))

    def with_poly_mutation(self, n: int, i: int, j: int, delta: Fraction) -> "FamilyTable":
        """A copy with the x^i y^j coefficient of polys[n] perturbed by delta."""
        if self.polys is None:
            raise ValueError("table was built without polynomials")
        mutated = list(self.polys)
        mutated[n] = mutated[n] + BiPoly.term(as_scalar(delta), i, j)
        return replace(self, polys=tuple(mutated))

    def to_json_dict(self) -> dict:
        out = {
            "family": self.family.kind.value,
            "order": self.family.order,
            "q": str(self.ctx.q),
            "max_n": self.max_n,
            "numbers": [str(v) for v in self.numbers],
        }
        if self.polys is not None:
            out["polys"] = [p.to_records() for p in self.polys]
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "FamilyTable":
        family = FamilyId(FamilyKind(data["family"]), int(data["order"]))
        ctx = QContext(Fraction(str(data["q"])))
        numbers = tuple(Fraction(str(v)) for v in data["numbers"])
        polys = None
        if "polys" in data:
            polys = tuple(BiPoly.from_records(records) for records in data["polys"])
        return cls(family, ctx, numbers, polys)


def build_table(family: FamilyId, ctx: QContext, max_n: int, with_polys: bool = True) -> FamilyTable:
    """Build a family table; polynomials come from the direct series path."""
    numbers = tuple(compute_numbers(family, ctx, max_n))
    polys = tuple(compute_polys_direct(family, ctx, max_n)) if with_polys else None
    return FamilyTable(family, ctx, numbers, polys)


# -- classical oracles -------------------------------------------------------


def classical_bernoulli(max_n: int) -> list[Fraction]:
    """Classical Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0."""
    values = [Fraction(1)]
    for n in range(1, max_n + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += comb(n + 1, k) * values[k]
        values.append(-acc / (n + 1))
    return values


def classical_genocchi(max_n: int) -> list[Fraction]:
    """Classical Genocchi numbers via G_n = 2 (1 - 2^n) B_n."""
    bern = classical_bernoulli(max_n)
    return [2 * (1 - Fraction(2) ** n) * bern[n] for n in range(max_n + 1)]


def appell_poly(numbers: Sequence[Fraction], n: int, var: str = "x", shift: int | Fraction = 0) -> BiPoly:
    """The degree-n Appell polynomial sum_k C(n, k) a_k (var + shift)^(n-k).

    With the classical Bernoulli numbers this is B_n(var + shift); with the
    Genocchi numbers, G_n(var + shift).  Exact binomial expansion of the
    shifted argument; ``var`` is "x" or "y".
    """
    shift = as_scalar(shift)
    out = BiPoly.zero()
    for k in range(n + 1):
        c = comb(n, k) * numbers[k]
        if not c:
            continue
        out += c * shifted_var_power(var, shift, n - k)
    return out


def shifted_var_power(var: str, shift: Fraction, exponent: int) -> BiPoly:
    """(var + shift)^exponent expanded exactly as a BiPoly."""
    i, j = (1, 0) if var == "x" else (0, 1)
    if var not in ("x", "y"):
        raise ValueError(f"var must be 'x' or 'y', got {var!r}")
    out = BiPoly.zero()
    for d in range(exponent + 1):
        out += BiPoly.term(comb(exponent, d) * shift ** (exponent - d), i * d, j * d)
    return out


def classical_xy_power(n: int) -> BiPoly:
    """(x + y)^n expanded exactly (the classical addition kernel)."""
    out = BiPoly.zero()
    for k in range(n + 1):
        out += BiPoly.term(comb(n, k), n - k, k)
    return out
