"""Bivariate polynomials in x, y over exact rationals.

Sparse map representation: a BiPoly is a finite map (i, j) -> coefficient
with no stored zeros, so structural equality is map equality.  These house
the polynomial families' values and every symbolic identity check.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .qarith import QContext, Scalar, as_scalar, q_binomial, q_number, triangular

Monomial = tuple[int, int]


class BiPoly:
    """A polynomial sum of c * x^i * y^j terms, kept in canonical form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent in monomial ({i}, {j})")
                c = as_scalar(c) + clean.get((i, j), Fraction(0))
                if c:
                    clean[(i, j)] = c
                elif (i, j) in clean:
                    del clean[(i, j)]
        self._terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls.constant(1)

    @classmethod
    def constant(cls, c: int | Fraction) -> "BiPoly":
        return cls({(0, 0): as_scalar(c)})

    @classmethod
    def term(cls, c: int | Fraction, i: int, j: int) -> "BiPoly":
        return cls({(i, j): as_scalar(c)})

    @classmethod
    def var_x(cls) -> "BiPoly":
        return cls.term(1, 1, 0)

    @classmethod
    def var_y(cls) -> "BiPoly":
        return cls.term(1, 0, 1)

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in (i, j) lexicographic order (deterministic)."""
        return iter(sorted(self._terms.items()))

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0, 0)}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self.coefficient(0, 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BiPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            factors = [str(c)]
            if i:
                factors.append(f"x^{i}" if i > 1 else "x")
            if j:
                factors.append(f"y^{j}" if j > 1 else "y")
            parts.append("*".join(factors))
        return " + ".join(parts)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "BiPoly | int | Fraction") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        new = BiPoly.__new__(BiPoly)
        new._terms = out
        return new

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        new = BiPoly.__new__(BiPoly)
        new._terms = {key: -c for key, c in self._terms.items()}
        return new

    def __sub__(self, other: "BiPoly | int | Fraction") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "BiPoly | int | Fraction") -> "BiPoly":
        return (-self) + other

    def __mul__(self, other: "BiPoly | int | Fraction") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            c = as_scalar(other)
            new = BiPoly.__new__(BiPoly)
            new._terms = {} if not c else {key: v * c for key, v in self._terms.items()}
            return new
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, Fraction(0)) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        new = BiPoly.__new__(BiPoly)
        new._terms = out
        return new

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        out = BiPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, x0: int | Fraction, y0: int | Fraction) -> Fraction:
        """Exact full evaluation at (x0, y0)."""
        x0 = as_scalar(x0)
        y0 = as_scalar(y0)
        out = Fraction(0)
        for (i, j), c in self._terms.items():
            out += c * x0**i * y0**j
        return out

    def eval_x(self, x0: int | Fraction) -> "BiPoly":
        """Substitute x = x0, leaving a polynomial in y."""
        x0 = as_scalar(x0)
        out = BiPoly.zero()
        for (i, j), c in self._terms.items():
            out += BiPoly.term(c * x0**i, 0, j)
        return out

    def eval_y(self, y0: int | Fraction) -> "BiPoly":
        """Substitute y = y0, leaving a polynomial in x."""
        y0 = as_scalar(y0)
        out = BiPoly.zero()
        for (i, j), c in self._terms.items():
            out += BiPoly.term(c * y0**j, i, 0)
        return out

    def substitute_scaled(self, var: str, c: int | Fraction) -> "BiPoly":
        """Substitute var -> c * var (var is "x" or "y")."""
        c = as_scalar(c)
        if var == "x":
            scaled = {(i, j): coef * c**i for (i, j), coef in self._terms.items()}
        elif var == "y":
            scaled = {(i, j): coef * c**j for (i, j), coef in self._terms.items()}
        else:
            raise ValueError(f"var must be 'x' or 'y', got {var!r}")
        return BiPoly(scaled)

    # -- wire format ---------------------------------------------------------

    def to_records(self) -> list[dict[str, object]]:
        """Serialize as sorted {i, j, c} records with "p/q" coefficient strings."""
        return [{"i": i, "j": j, "c": str(c)} for (i, j), c in self.items()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, object]]) -> "BiPoly":
        return cls({(int(r["i"]), int(r["j"])): Fraction(str(r["c"])) for r in records})


def poly_eval(p: BiPoly, x0: int | Fraction, y0: int | Fraction) -> Fraction:
    return p.evaluate(x0, y0)


def poly_substitute_scaled(p: BiPoly, var: str, c: int | Fraction) -> BiPoly:
    return p.substitute_scaled(var, c)


def q_derivative_x(p: BiPoly, ctx: QContext) -> BiPoly:
    """Jackson q-derivative in x, holding y fixed: x^i y^j -> [i]_q x^(i-1) y^j.

    Equals (p(qx, y) - p(x, y)) / ((q - 1) x) for q != 1 and the classical
    partial derivative at q = 1.
    """
    out: dict[Monomial, Fraction] = {}
    for (i, j), c in p._terms.items():
        if i == 0:
            continue
        out[(i - 1, j)] = c * q_number(i, ctx)
    return BiPoly(out)


def q_derivative_y(p: BiPoly, ctx: QContext) -> BiPoly:
    """Jackson q-derivative in y, holding x fixed."""
    out: dict[Monomial, Fraction] = {}
    for (i, j), c in p._terms.items():
        if j == 0:
            continue
        out[(i, j - 1)] = c * q_number(j, ctx)
    return BiPoly(out)


def q_add_pow_poly(n: int, ctx: QContext) -> BiPoly:
    """The symbolic q-power (x + y)_q^n as a BiPoly."""
    if n < 0:
        raise ValueError(f"q_add_pow_poly needs n >= 0, got {n}")
    out = BiPoly.zero()
    for k in range(n + 1):
        c = q_binomial(n, k, ctx) * ctx.q_pow(triangular(k))
        out += BiPoly.term(c, n - k, k)
    return out
