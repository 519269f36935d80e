"""Construction of F_{p^n} and exact field arithmetic.

Elements are residue-coefficient vectors of length n modulo a monic
irreducible polynomial over F_p.  Everything is deterministic: the default
modulus is the lexicographically smallest monic irreducible polynomial of
degree n (coefficients compared constant term first), so two runs always
build the same field.  Orders in scope are tiny, so irreducibility is
checked by exhaustive trial division.
"""

from __future__ import annotations

import dataclasses
import itertools
from math import isqrt
from typing import Iterator, Sequence

DEFAULT_MAX_ORDER = 4096


class NotPrime(ValueError):
    """The requested characteristic is not a prime number."""


class OrderTooLarge(ValueError):
    """The requested field order exceeds the enumeration bound."""


class FieldMismatch(ValueError):
    """Operands belong to different fields; no implicit coercion."""


class InverseOfZero(ZeroDivisionError):
    """The zero element has no multiplicative inverse."""


def is_prime(p: int) -> bool:
    """Deterministic trial-division primality check."""
    if p < 2:
        return False
    return all(p % d for d in range(2, isqrt(p) + 1))


def _poly_rem(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    # Remainder of num by monic den over F_p; both low-to-high coefficient lists.
    rem = [c % p for c in num]
    dn = len(den) - 1
    for k in range(len(rem) - 1, dn - 1, -1):
        t = rem[k]
        if t:
            for j in range(dn + 1):
                rem[k - dn + j] = (rem[k - dn + j] - t * den[j]) % p
    while rem and rem[-1] == 0:
        rem.pop()
    return rem


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    # Trial division by every monic polynomial of degree 1..deg/2.
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not _poly_rem(poly, divisor, p):
                return False
    return True


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """The field F_{p^n} presented as F_p[X] modulo a monic irreducible polynomial.

    ``modulus`` is a low-to-high coefficient tuple of length n + 1 with
    leading coefficient 1.
    """

    p: int
    n: int
    modulus: tuple[int, ...]

    @property
    def order(self) -> int:
        return self.p**self.n

    def descriptor(self) -> str:
        """The ``p^n`` form accepted on the command line."""
        return f"{self.p}^{self.n}"

    def modulus_text(self) -> str:
        from .exactpoly import _render

        return _render(self.modulus, var="X")

    def element(self, coeffs: Sequence[int]) -> FqElem:
        if len(coeffs) > self.n:
            raise ValueError(f"at most {self.n} coefficients expected")
        cs = [c % self.p for c in coeffs]
        cs += [0] * (self.n - len(cs))
        return FqElem(self, tuple(cs))

    def from_int(self, k: int) -> FqElem:
        """The k-th element in enumeration order (inverse of :meth:`FqElem.index`)."""
        if not 0 <= k < self.order:
            raise ValueError(f"index {k} outside [0, {self.order})")
        cs = []
        for _ in range(self.n):
            cs.append(k % self.p)
            k //= self.p
        cs.reverse()
        return FqElem(self, tuple(cs))

    def zero(self) -> FqElem:
        return FqElem(self, (0,) * self.n)

    def one(self) -> FqElem:
        return self.element([1])

    def elements(self) -> Iterator[FqElem]:
        """All p^n elements, coefficient-vector lexicographic order."""
        for coeffs in itertools.product(range(self.p), repeat=self.n):
            yield FqElem(self, coeffs)


def make_field(
    p: int,
    n: int,
    modulus: Sequence[int] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> FieldSpec:
    """Build F_{p^n}, picking the lex-smallest irreducible modulus by default.

    An explicit ``modulus`` (low-to-high, monic, degree n) may be supplied;
    it is validated for irreducibility.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if p**n > max_order:
        raise OrderTooLarge(f"{p}^{n} exceeds the enumeration bound {max_order}")
    if modulus is not None:
        mod = tuple(c % p for c in modulus)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree n")
        if not _is_irreducible(mod, p):
            raise ValueError(f"modulus is not irreducible over F_{p}")
        return FieldSpec(p, n, mod)
    for tail in itertools.product(range(p), repeat=n):
        cand = tuple(tail) + (1,)
        if _is_irreducible(cand, p):
            return FieldSpec(p, n, cand)
    raise AssertionError(f"no irreducible polynomial of degree {n} over F_{p}")


def irreducible_moduli(p: int, n: int) -> list[tuple[int, ...]]:
    """Every monic irreducible polynomial of degree n over F_p, lex order."""
    out = []
    for tail in itertools.product(range(p), repeat=n):
        cand = tuple(tail) + (1,)
        if _is_irreducible(cand, p):
            out.append(cand)
    return out


def parse_descriptor(text: str) -> tuple[int, int]:
    """Parse a ``p^n`` or bare-prime field descriptor into (p, n)."""
    base, sep, exp = text.partition("^")
    try:
        p = int(base)
        n = int(exp) if sep else 1
    except ValueError:
        raise ValueError(f"malformed field descriptor {text!r}") from None
    return p, n


@dataclasses.dataclass(frozen=True)
class FqElem:
    """An element of a :class:`FieldSpec`, as n residues modulo p."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: FqElem) -> None:
        if self.field != other.field:
            raise FieldMismatch(
                f"elements of F_{self.field.descriptor()} and F_{other.field.descriptor()}"
            )

    def __add__(self, other: FqElem) -> FqElem:
        self._check(other)
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: FqElem) -> FqElem:
        self._check(other)
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> FqElem:
        p = self.field.p
        return FqElem(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other: FqElem) -> FqElem:
        self._check(other)
        f = self.field
        prod = [0] * (2 * f.n - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] += a * b
        rem = _poly_rem(prod, f.modulus, f.p)
        rem += [0] * (f.n - len(rem))
        return FqElem(f, tuple(rem))

    def __pow__(self, e: int) -> FqElem:
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inv(self) -> FqElem:
        """Multiplicative inverse via x^(q-2); raises on zero."""
        if self.is_zero():
            raise InverseOfZero("0 has no inverse")
        return self ** (self.field.order - 2)

    def index(self) -> int:
        """Position of this element in the field's enumeration order."""
        k = 0
        for c in self.coeffs:
            k = k * self.field.p + c
        return k

    def __str__(self) -> str:
        from .exactpoly import _render

        return _render(self.coeffs, var="t")

    def __repr__(self) -> str:
        return f"FqElem(F_{self.field.descriptor()}, {str(self)!r})"
