"""Exact univariate polynomial and polynomial-matrix arithmetic.

Polynomials live in Z[q] (or Q[q] for :class:`RatPoly`) with a dense
coefficient list, index i holding the coefficient of q^i.  Coefficients are
Python ints / Fractions, so there is no overflow and no rounding anywhere;
every operation here is exact or raises.

The zero polynomial stores an empty coefficient tuple and its ``degree`` is
``None`` rather than an integer, so a degree of -1 can never be confused
with a valid degree.
"""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction
from typing import Iterable, Iterator


class NotDivisible(ArithmeticError):
    """Exact division was requested but a nonzero remainder appeared."""


class DimensionMismatch(ValueError):
    """Matrix shapes are incompatible for the requested operation."""


def _render(coeffs, var: str = "q") -> str:
    # Descending powers, explicit signs: "q^3 - q^2", "2q - 2", "7", "0".
    if not coeffs:
        return "0"
    parts: list[str] = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else f"{var}^{i}"
            body = power if mag == 1 else f"{mag}{power}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


@dataclasses.dataclass(frozen=True, init=False)
class IntPoly:
    """A polynomial in q with arbitrary-precision integer coefficients.

    >>> IntPoly([-1, 0, 1])
    IntPoly('q^2 - 1')
    >>> IntPoly([0, -1, 1]) * IntPoly([1, 1])
    IntPoly('q^3 - q')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def constant(c: int) -> IntPoly:
        return IntPoly([c])

    @staticmethod
    def monomial(c: int, power: int) -> IntPoly:
        if power < 0:
            raise ValueError("monomial power must be non-negative")
        return IntPoly([0] * power + [c])

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial; ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _as_poly(other)
        return IntPoly(
            a + b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: IntPoly | int) -> IntPoly:
        return _as_poly(other) + (-self)

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative powers are not defined in Z[q]")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point by Horner's rule, exactly."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def exact_div(self, d: IntPoly) -> IntPoly:
        """Return c with d * c == self, or raise.

        Synthetic long division with an integer-divisibility check at every
        step; any nonzero remainder raises :class:`NotDivisible` instead of
        truncating.
        """
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return IntPoly()
        rem = list(self.coeffs)
        dc = d.coeffs
        lead = dc[-1]
        if len(rem) < len(dc):
            raise NotDivisible(f"({self}) is not divisible by ({d})")
        quot = [0] * (len(rem) - len(dc) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = rem[k + len(dc) - 1]
            if top % lead != 0:
                raise NotDivisible(f"({self}) is not divisible by ({d})")
            t = top // lead
            quot[k] = t
            if t:
                for j, c in enumerate(dc):
                    rem[k + j] -= t * c
        if any(rem):
            raise NotDivisible(f"({self}) is not divisible by ({d})")
        return IntPoly(quot)

    def to_rational(self) -> RatPoly:
        return RatPoly(Fraction(c) for c in self.coeffs)

    def __str__(self) -> str:
        return _render(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def _as_poly(x: IntPoly | int) -> IntPoly:
    return x if isinstance(x, IntPoly) else IntPoly([x])


ZERO = IntPoly()
ONE = IntPoly([1])
Q = IntPoly([0, 1])


@dataclasses.dataclass(frozen=True, init=False)
class RatPoly:
    """A polynomial with exact rational coefficients.

    Intermediate form for interpolation; ``Fraction`` keeps every
    coefficient in lowest terms with a positive denominator.
    """

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: RatPoly) -> RatPoly:
        return RatPoly(
            a + b
            for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0))
        )

    def __neg__(self) -> RatPoly:
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: RatPoly) -> RatPoly:
        return self + (-other)

    def __mul__(self, other: RatPoly | Fraction | int) -> RatPoly:
        if isinstance(other, (Fraction, int)):
            return RatPoly(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __call__(self, x: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_integer(self) -> IntPoly:
        """Convert to :class:`IntPoly`; raises if any coefficient is non-integral."""
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"coefficient {c} is not an integer")
        return IntPoly(c.numerator for c in self.coeffs)

    def __str__(self) -> str:
        return _render(self.coeffs)

    def __repr__(self) -> str:
        return f"RatPoly({str(self)!r})"


@dataclasses.dataclass(frozen=True, init=False)
class PolyMatrix:
    """A rows x cols matrix over :class:`IntPoly`, stored row-major."""

    rows: int
    cols: int
    entries: tuple[IntPoly, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[IntPoly | int]):
        es = tuple(_as_poly(e) for e in entries)
        if rows <= 0 or cols <= 0:
            raise DimensionMismatch("matrix dimensions must be positive")
        if len(es) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(es)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", es)

    @staticmethod
    def from_rows(rows: Iterable[Iterable[IntPoly | int]]) -> PolyMatrix:
        rs = [list(r) for r in rows]
        if not rs or any(len(r) != len(rs[0]) for r in rs):
            raise DimensionMismatch("rows must be non-empty and of equal length")
        return PolyMatrix(len(rs), len(rs[0]), [e for r in rs for e in r])

    @staticmethod
    def identity(n: int) -> PolyMatrix:
        return PolyMatrix(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> IntPoly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[IntPoly, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = ZERO
                for k in range(self.cols):
                    acc = acc + self.entry(i, k) * other.entry(k, j)
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out)

    def __pow__(self, e: int) -> PolyMatrix:
        """Matrix power by repeated squaring; ``A ** 0`` is the identity."""
        if self.rows != self.cols:
            raise DimensionMismatch("only square matrices can be raised to a power")
        if e < 0:
            raise ValueError("negative matrix powers are not defined over Z[q]")
        result = PolyMatrix.identity(self.rows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def scale(self, f: IntPoly | int) -> PolyMatrix:
        f = _as_poly(f)
        return PolyMatrix(self.rows, self.cols, [f * e for e in self.entries])

    def exact_div_scalar(self, d: IntPoly) -> PolyMatrix:
        """Entry-wise exact division; raises :class:`NotDivisible` on failure."""
        return PolyMatrix(self.rows, self.cols, [e.exact_div(d) for e in self.entries])

    def trace(self) -> IntPoly:
        if self.rows != self.cols:
            raise DimensionMismatch("trace requires a square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entry(i, i)
        return acc

    def __iter__(self) -> Iterator[tuple[IntPoly, ...]]:
        return (self.row(i) for i in range(self.rows))

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self) + "]"
