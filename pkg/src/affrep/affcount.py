"""The group Aff(1, F_q) and engines counting surface-group representations.

A representation of the genus-g surface group is a tuple (A_1, ..., A_2g)
of group elements whose product of commutators [A_1,A_2]...[A_2g-1,A_2g] is
the identity.  Three independent engines count them:

* ``count_naive``  -- exhaustive enumeration of group-element tuples,
* ``count_semi``   -- enumeration of the scaling coordinates only, with the
  translation coordinates counted as solutions of a linear form,
* ``count_closed`` -- direct evaluation of the closed-form polynomial.

The naive engine works on raw group elements and the semi engine works on
the shifted linear-form model (a |-> a - 1 folded into its coordinates), so
agreement between them is a genuine cross-check, not a tautology.
"""

from __future__ import annotations

import dataclasses
import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .finitefield import FieldMismatch, FieldSpec, FqElem

DEFAULT_GUARD = 10**8


class BudgetExceeded(RuntimeError):
    """The enumeration is larger than the configured guard."""


class InvalidGroupTable(ValueError):
    """The supplied multiplication table is not a group."""


@dataclasses.dataclass(frozen=True)
class AffElem:
    """The affine map x |-> a*x + b with a nonzero, as a pair (a, b)."""

    a: FqElem
    b: FqElem

    def __post_init__(self):
        if self.a.field != self.b.field:
            raise FieldMismatch("components of an affine element must share a field")
        if self.a.is_zero():
            raise ValueError("the scaling component of an affine element must be nonzero")

    @property
    def field(self) -> FieldSpec:
        return self.a.field

    def __mul__(self, other: AffElem) -> AffElem:
        # (a1, b1) * (a2, b2) = (a1*a2, a1*b2 + b1), i.e. composition of maps.
        return AffElem(self.a * other.a, self.a * other.b + self.b)

    def inv(self) -> AffElem:
        ainv = self.a.inv()
        return AffElem(ainv, -(ainv * self.b))

    def is_identity(self) -> bool:
        return self.a == self.field.one() and self.b.is_zero()


def aff_identity(field: FieldSpec) -> AffElem:
    return AffElem(field.one(), field.zero())


def commutator(x: AffElem, y: AffElem) -> AffElem:
    """x * y * x^-1 * y^-1; always lands in the translation subgroup."""
    return x * y * x.inv() * y.inv()


def aff_elements(field: FieldSpec) -> list[AffElem]:
    """All q(q-1) group elements, deterministic order (a outer, b inner)."""
    elems = list(field.elements())
    return [AffElem(a, b) for a in elems if not a.is_zero() for b in elems]


@dataclasses.dataclass
class CountRecord:
    """One point count, tagged with the field, genus and engine that produced it."""

    p: int
    n: int
    q: int
    genus: int
    count: int
    engine: str
    elapsed: float

    def __post_init__(self):
        if self.q != self.p**self.n:
            raise ValueError("q must equal p^n")
        if self.count < 0:
            raise ValueError("count must be non-negative")

    def as_json(self) -> dict:
        # count as a decimal string: consumers with 53-bit doubles must not truncate it
        return {
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "genus": self.genus,
            "count": str(self.count),
            "engine": self.engine,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }


def _record(field: FieldSpec, genus: int, count: int, engine: str, t0: float) -> CountRecord:
    return CountRecord(
        p=field.p,
        n=field.n,
        q=field.order,
        genus=genus,
        count=count,
        engine=engine,
        elapsed=time.perf_counter() - t0,
    )


def count_naive(field: FieldSpec, genus: int, guard: int = DEFAULT_GUARD) -> CountRecord:
    """Exhaustively enumerate group-element tuples and test the relation.

    Visits all (q(q-1))^2g tuples; raises :class:`BudgetExceeded` when that
    exceeds ``guard``.  Commutators are memoised per ordered pair, which
    changes nothing about the enumeration itself.
    """
    if genus < 1:
        raise ValueError("genus must be >= 1")
    t0 = time.perf_counter()
    order = field.order * (field.order - 1)
    if order ** (2 * genus) > guard:
        raise BudgetExceeded(
            f"naive enumeration needs {order ** (2 * genus)} tuples (guard {guard})"
        )
    elems = aff_elements(field)
    pair_comms = [commutator(x, y) for x in elems for y in elems]
    ident = aff_identity(field)
    if genus == 1:
        total = sum(1 for c in pair_comms if c == ident)
        return _record(field, genus, total, "naive", t0)
    total = 0
    for combo in itertools.product(pair_comms, repeat=genus):
        prod = combo[0]
        for c in combo[1:]:
            prod = prod * c
        if prod == ident:
            total += 1
    return _record(field, genus, total, "naive", t0)


def _admissible_alpha_indices(field: FieldSpec) -> list[int]:
    # Enumeration indices of the elements != -1; the zero element is index 0,
    # so truthiness of an index is exactly "nonzero coordinate".
    minus_one = -field.one()
    return [e.index() for e in field.elements() if e != minus_one]


def _rank1_in_stripe(args: tuple[int, tuple[int, ...], int]) -> int:
    # Rank-1 alpha vectors in one lexicographic stripe (fixed first coordinate).
    first, vals, s_rest = args
    if first:
        # the first coordinate is already a pivot, so every vector has rank 1
        return len(vals) ** s_rest
    if s_rest == 0:
        return 0
    return sum(map(any, itertools.product(vals, repeat=s_rest)))


def count_semi(
    field: FieldSpec,
    genus: int,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    check_kernels: bool = False,
) -> CountRecord:
    """Count points of the linear-form model by enumerating scaling coordinates.

    Iterates over every alpha in (F_q - {-1})^2g and adds the number of beta
    solutions of sum(alpha_i * beta_i) = 0, namely q^(2g - rank) where the
    rank of the 1 x 2g form is computed from its coordinates (first nonzero
    entry is the pivot), never assumed.

    With ``workers`` > 1 the alpha space is partitioned into contiguous
    lexicographic stripes by first coordinate and the stripe counts are
    summed, which is deterministic because integer addition is associative
    and commutative.  ``check_kernels`` re-verifies every kernel size by
    direct beta enumeration with full field arithmetic (orders <= 5 only).
    """
    if genus < 1:
        raise ValueError("genus must be >= 1")
    t0 = time.perf_counter()
    s = 2 * genus
    q = field.order
    if (q - 1) ** s > guard:
        raise BudgetExceeded(f"semi enumeration needs {(q - 1) ** s} iterations (guard {guard})")
    vals = tuple(_admissible_alpha_indices(field))
    n_alpha = len(vals) ** s
    if check_kernels:
        if q > 5:
            raise ValueError("kernel cross-verification is a debug tool for orders <= 5")
        count = _count_semi_checked(field, s)
        return _record(field, genus, count, "semi", t0)
    if workers > 1 and len(vals) > 1:
        tasks = [(first, vals, s - 1) for first in vals]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            n_rank1 = sum(pool.map(_rank1_in_stripe, tasks))
    else:
        n_rank1 = sum(map(any, itertools.product(vals, repeat=s)))
    count = n_rank1 * q ** (s - 1) + (n_alpha - n_rank1) * q**s
    return _record(field, genus, count, "semi", t0)


def _count_semi_checked(field: FieldSpec, s: int) -> int:
    # Debug path: per-alpha beta enumeration with field arithmetic, compared
    # against the rank-derived kernel size.
    minus_one = -field.one()
    zero = field.zero()
    admissible = [e for e in field.elements() if e != minus_one]
    all_elems = list(field.elements())
    q = field.order
    total = 0
    for alpha in itertools.product(admissible, repeat=s):
        rank = 1 if any(not a.is_zero() for a in alpha) else 0
        expected = q ** (s - rank)
        actual = 0
        for beta in itertools.product(all_elems, repeat=s):
            acc = zero
            for a, b in zip(alpha, beta):
                acc = acc + a * b
            if acc.is_zero():
                actual += 1
        if actual != expected:
            raise AssertionError(
                f"kernel size mismatch at alpha={alpha}: enumerated {actual}, rank gives {expected}"
            )
        total += actual
    return total


def count_closed(q: int, genus: int) -> int:
    """Evaluate the closed-form count q^(2g-1)(q-1)^2g + q^2g - q^(2g-1)."""
    if genus < 1:
        raise ValueError("genus must be >= 1")
    if q < 2:
        raise ValueError("q must be >= 2")
    s = 2 * genus
    return q ** (s - 1) * (q - 1) ** s + q**s - q ** (s - 1)


def validate_group_table(table: Sequence[Sequence[int]], identity: int) -> None:
    """Check the table is a plausible group: identity, inverses, sampled associativity."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise InvalidGroupTable("table must be square and non-empty")
    if any(not 0 <= x < n for row in table for x in row):
        raise InvalidGroupTable("table entries must be element indices")
    if not 0 <= identity < n:
        raise InvalidGroupTable("identity index out of range")
    for x in range(n):
        if table[identity][x] != x or table[x][identity] != x:
            raise InvalidGroupTable(f"index {identity} is not a two-sided identity")
    for x in range(n):
        if not any(table[x][y] == identity and table[y][x] == identity for y in range(n)):
            raise InvalidGroupTable(f"element {x} has no inverse")
    if n**3 <= 1000:
        triples = itertools.product(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(1000))
    for x, y, z in triples:
        if table[table[x][y]][z] != table[x][table[y][z]]:
            raise InvalidGroupTable(f"associativity fails on ({x}, {y}, {z})")


def count_group_generic(
    table: Sequence[Sequence[int]],
    identity: int,
    genus: int,
    guard: int = DEFAULT_GUARD,
) -> int:
    """Brute-force commutator-relation count using only a multiplication table.

    Independent of any affine structure: an oracle for cross-checking the
    other engines on the same group fed back as an opaque table.
    """
    if genus < 1:
        raise ValueError("genus must be >= 1")
    validate_group_table(table, identity)
    n = len(table)
    if n ** (2 * genus) > guard:
        raise BudgetExceeded(f"generic enumeration needs {n ** (2 * genus)} tuples (guard {guard})")
    inv = [0] * n
    for x in range(n):
        inv[x] = next(y for y in range(n) if table[x][y] == identity and table[y][x] == identity)
    pair_comms = [
        table[table[table[x][y]][inv[x]]][inv[y]] for x in range(n) for y in range(n)
    ]
    if genus == 1:
        return sum(1 for c in pair_comms if c == identity)
    total = 0
    for combo in itertools.product(pair_comms, repeat=genus):
        prod = combo[0]
        for c in combo[1:]:
            prod = table[prod][c]
        if prod == identity:
            total += 1
    return total


def aff_group_table(field: FieldSpec) -> tuple[list[list[int]], int]:
    """The multiplication table of Aff(1, F_q) in ``aff_elements`` order."""
    elems = aff_elements(field)
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[x * y] for y in elems] for x in elems]
    return table, index[aff_identity(field)]


ENGINES = ("naive", "semi", "closed", "generic")


def count_points(
    field: FieldSpec,
    genus: int,
    engine: str = "semi",
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> CountRecord:
    """Run the selected engine and wrap the result in a :class:`CountRecord`."""
    if engine == "naive":
        return count_naive(field, genus, guard)
    if engine == "semi":
        return count_semi(field, genus, guard, workers=workers)
    if engine == "closed":
        t0 = time.perf_counter()
        return _record(field, genus, count_closed(field.order, genus), "closed", t0)
    if engine == "generic":
        t0 = time.perf_counter()
        table, ident = aff_group_table(field)
        return _record(field, genus, count_group_generic(table, ident, genus, guard), "generic", t0)
    raise ValueError(f"unknown engine {engine!r}; expected one of {ENGINES}")
