"""Exact arithmetic on monomials and monomial ideals.

Everything here is immutable and pure: a :class:`RingContext` fixes the
variable names (optionally split into two disjoint blocks), a
:class:`Monomial` is an exponent vector in a context, and a
:class:`MonomialIdeal` is a canonical minimal generating set sorted in
graded-lex order, so ideal equality is plain tuple equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence


DEFAULT_GENERATOR_CAP = 5000


class ContextMismatchError(ValueError):
    """Operands live in different ring contexts."""


class GeneratorCapError(RuntimeError):
    """An ideal operation would exceed the configured generator cap."""


@dataclass(frozen=True)
class RingContext:
    """A polynomial ring given by its ordered variable names.

    ``split=r`` marks the first ``r`` variables as block A and the rest as
    block B; :func:`tensor_join` produces split contexts.
    """

    variables: tuple[str, ...]
    split: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("context needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be unique")
        if self.split is not None and not (1 <= self.split < len(self.variables)):
            raise ValueError("split must satisfy 1 <= r < number of variables")

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def block_a(self) -> tuple[str, ...]:
        if self.split is None:
            raise ValueError("context has no split")
        return self.variables[: self.split]

    @property
    def block_b(self) -> tuple[str, ...]:
        if self.split is None:
            raise ValueError("context has no split")
        return self.variables[self.split :]

    def index_of(self, name: str) -> int:
        return self.variables.index(name)

    def monomial(self, exponents: Sequence[int]) -> "Monomial":
        return Monomial(self, tuple(exponents))

    def one(self) -> "Monomial":
        return Monomial(self, (0,) * self.arity)

    def variable(self, j: int) -> "Monomial":
        exps = [0] * self.arity
        exps[j] = 1
        return Monomial(self, tuple(exps))


def make_context(*names: str, split: int | None = None) -> RingContext:
    return RingContext(tuple(names), split)


@dataclass(frozen=True)
class Monomial:
    """Exponent vector in a fixed ring context; the unit is all zeros."""

    context: RingContext
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if len(self.exponents) != self.context.arity:
            raise ValueError("exponent vector length must equal context arity")
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    def _check(self, other: "Monomial") -> None:
        if self.context != other.context:
            raise ContextMismatchError("monomials from different contexts")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # graded-lex: total degree first, then lexicographic on exponents
        return (self.degree, self.exponents)

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(map(min, self.exponents, other.exponents)))

    def support(self) -> frozenset[int]:
        """Indices of variables with positive exponent."""
        return frozenset(j for j, e in enumerate(self.exponents) if e > 0)

    def support_names(self) -> frozenset[str]:
        return frozenset(self.context.variables[j] for j in self.support())

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(self.context, tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.context, tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power")
        return Monomial(self.context, tuple(e * k for e in self.exponents))

    def __str__(self) -> str:
        parts = []
        for name, e in zip(self.context.variables, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _minimal_gens(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every monomial strictly divided by another; dedupe; sort graded-lex."""
    uniq = sorted(set(gens), key=Monomial.sort_key)
    kept: list[Monomial] = []
    for m in uniq:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in canonical form.

    The zero ideal has an empty generator tuple; the unit ideal is generated
    by the unit monomial.  Construct through :meth:`from_gens` (which
    minimalizes) unless the input is already canonical.
    """

    context: RingContext
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            if g.context != self.context:
                raise ContextMismatchError("generator context differs from ideal context")

    @classmethod
    def from_gens(cls, context: RingContext, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = list(gens)
        for g in gens:
            if g.context != context:
                raise ContextMismatchError("generator context differs from ideal context")
        return cls(context, _minimal_gens(gens))

    @classmethod
    def zero(cls, context: RingContext) -> "MonomialIdeal":
        return cls(context, ())

    @classmethod
    def unit(cls, context: RingContext) -> "MonomialIdeal":
        return cls(context, (context.one(),))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_unit

    @property
    def is_proper(self) -> bool:
        return not self.is_unit

    def contains(self, m: Monomial) -> bool:
        """Membership of a monomial: some minimal generator divides it."""
        if m.context != self.context:
            raise ContextMismatchError("monomial from a different context")
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal.from_gens(self.context, self.gens + other.gens)

    def multiply(self, other: "MonomialIdeal", cap: int = DEFAULT_GENERATOR_CAP) -> "MonomialIdeal":
        self._check(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.context)
        if len(self.gens) * len(other.gens) > cap:
            raise GeneratorCapError(
                f"product would form {len(self.gens) * len(other.gens)} generators (cap {cap})"
            )
        return MonomialIdeal.from_gens(
            self.context, (a * b for a in self.gens for b in other.gens)
        )

    def power(self, n: int, cap: int = DEFAULT_GENERATOR_CAP) -> "MonomialIdeal":
        if n < 0:
            raise ValueError("negative ideal power")
        result = MonomialIdeal.unit(self.context)
        for _ in range(n):
            result = result.multiply(self, cap=cap)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_zero or other.is_zero:
            return MonomialIdeal.zero(self.context)
        return MonomialIdeal.from_gens(
            self.context, (a.lcm(b) for a in self.gens for b in other.gens)
        )

    def colon(self, m: Monomial) -> "MonomialIdeal":
        """Monomial colon (I : m), generated by g / gcd(g, m)."""
        if m.context != self.context:
            raise ContextMismatchError("monomial from a different context")
        return MonomialIdeal.from_gens(self.context, (g / g.gcd(m) for g in self.gens))

    def colon_maximal(self) -> "MonomialIdeal":
        """(I : (x_1,...,x_n)), the intersection of the variable colons."""
        colons = [self.colon(self.context.variable(j)) for j in range(self.context.arity)]
        return reduce(MonomialIdeal.intersect, colons)

    def _check(self, other: "MonomialIdeal") -> None:
        if self.context != other.context:
            raise ContextMismatchError("ideals from different contexts")

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.gens) + ")" if self.gens else "(0)"

    def __repr__(self) -> str:
        return f"MonomialIdeal{self}"


def tensor_join(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal
) -> tuple[RingContext, MonomialIdeal, MonomialIdeal]:
    """Extend two ideals over disjoint variable sets into their joint ring.

    Returns the combined context (split at the arity of the first factor)
    together with both extensions.
    """
    ca, cb = ideal_a.context, ideal_b.context
    if set(ca.variables) & set(cb.variables):
        raise ValueError("variable names overlap; contexts are not tensor-compatible")
    joint = RingContext(ca.variables + cb.variables, split=ca.arity)
    pad_b = (0,) * cb.arity
    pad_a = (0,) * ca.arity
    ext_a = MonomialIdeal(
        joint, tuple(Monomial(joint, g.exponents + pad_b) for g in ideal_a.gens)
    )
    ext_b = MonomialIdeal(
        joint, tuple(Monomial(joint, pad_a + g.exponents) for g in ideal_b.gens)
    )
    # extension preserves minimality and graded-lex order inside each block,
    # but re-sort the B block since padding changes lex position
    ext_b = MonomialIdeal(joint, tuple(sorted(ext_b.gens, key=Monomial.sort_key)))
    return joint, ext_a, ext_b


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """Minimal generators form a regular sequence: pairwise disjoint supports."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("complete-intersection test needs a nonzero proper ideal")
    supports = [g.support() for g in ideal.gens]
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if supports[i] & supports[j]:
                return False
    return True


def krull_dim_quotient(ideal: MonomialIdeal) -> int:
    """Krull dimension of S/I via minimum vertex cover of generator supports.

    Exhaustive over variable subsets; fine at desk scale (arity <= ~12).
    """
    if ideal.is_unit:
        raise ValueError("dimension of the zero ring is undefined")
    n = ideal.context.arity
    if ideal.is_zero:
        return n
    supports = [g.support() for g in ideal.gens]
    for size in range(n + 1):
        for cover in itertools.combinations(range(n), size):
            cs = set(cover)
            if all(s & cs for s in supports):
                return n - size
    raise AssertionError("unreachable: full variable set covers every support")


@dataclass(frozen=True)
class QuotientModule:
    """Multigraded module I/J presented by a pair of ideals with J inside I.

    Ideals are I/0, quotient rings are <1>/I.  Monomial membership is
    "in I but not in J".
    """

    outer: MonomialIdeal
    inner: MonomialIdeal

    def __post_init__(self):
        if self.outer.context != self.inner.context:
            raise ContextMismatchError("module pieces from different contexts")
        for g in self.inner.gens:
            if not self.outer.contains(g):
                raise ValueError(f"inner generator {g} is not contained in the outer ideal")

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> "QuotientModule":
        return cls(ideal, MonomialIdeal.zero(ideal.context))

    @classmethod
    def of_quotient_ring(cls, ideal: MonomialIdeal) -> "QuotientModule":
        return cls(MonomialIdeal.unit(ideal.context), ideal)

    @property
    def context(self) -> RingContext:
        return self.outer.context

    @property
    def is_zero(self) -> bool:
        return self.outer == self.inner

    def contains(self, m: Monomial) -> bool:
        return self.outer.contains(m) and not self.inner.contains(m)

    def __str__(self) -> str:
        outer = "S" if self.outer.is_unit else str(self.outer)
        return outer if self.inner.is_zero else f"{outer}/{self.inner}"
