"""Depth of monomial quotients via multigraded Taylor homology.

The Taylor complex on the minimal generators of I, tensored with the base
field, splits into strands indexed by lcm multidegrees; the homology rank of
each strand is the corresponding multigraded Betti number of S/I.  Depth
then follows from depth + pd = n (Auslander-Buchsbaum).  Ranks are computed
by exact rational elimination; the sign of the differential is the position
of the dropped generator in the sorted subset (any consistent convention
gives the same ranks).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .core import Monomial, MonomialIdeal


DEFAULT_TAYLOR_CAP = 20


class TaylorCapError(RuntimeError):
    """Too many minimal generators for subset enumeration."""


def rational_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix over the rationals, by Gaussian elimination."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    row = 0
    for col in range(ncols):
        pivot = next((r for r in range(row, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        pv = mat[row][col]
        for r in range(row + 1, len(mat)):
            if mat[r][col] != 0:
                factor = mat[r][col] / pv
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers beta_{i,m}(S/I)."""

    arity: int
    entries: dict[tuple[int, tuple[int, ...]], int]

    @property
    def pd(self) -> int:
        return max((i for (i, _m), v in self.entries.items() if v), default=0)

    def total(self, i: int) -> int:
        return sum(v for (j, _m), v in self.entries.items() if j == i)

    def totals(self) -> list[int]:
        return [self.total(i) for i in range(self.pd + 1)]

    def to_json_dict(self) -> dict:
        return {
            "pd": self.pd,
            "totals": self.totals(),
            "entries": [
                {"i": i, "multidegree": list(m), "rank": v}
                for (i, m), v in sorted(self.entries.items())
            ],
        }


@dataclass(frozen=True)
class DepthReport:
    depth_quotient: int
    pd: int
    method: str  # "taylor" | "socle-shortcut"


def taylor_tor_ranks(ideal: MonomialIdeal, cap: int = DEFAULT_TAYLOR_CAP) -> BettiTable:
    """Multigraded Betti numbers of S/I from the Taylor complex."""
    gens = list(ideal.gens)
    t = len(gens)
    if t > cap:
        raise TaylorCapError(f"{t} generators exceed the Taylor cap {cap}")
    n = ideal.context.arity
    zero = (0,) * n
    # group subsets of generators by the exponent vector of their lcm
    strands: dict[tuple[int, ...], dict[int, list[tuple[int, ...]]]] = {}
    lcm_of: dict[tuple[int, ...], tuple[int, ...]] = {(): zero}
    strands.setdefault(zero, {}).setdefault(0, []).append(())
    for size in range(1, t + 1):
        for subset in itertools.combinations(range(t), size):
            m = lcm_of[subset[:-1]]
            last = gens[subset[-1]].exponents
            m = tuple(max(a, b) for a, b in zip(m, last))
            lcm_of[subset] = m
            strands.setdefault(m, {}).setdefault(size, []).append(subset)
    entries: dict[tuple[int, tuple[int, ...]], int] = {}
    for m, by_size in strands.items():
        sizes = sorted(by_size)
        rank_in: dict[int, int] = {}  # rank of d_i restricted to the strand
        for i in sizes:
            if i == 0:
                continue
            targets = by_size.get(i - 1, [])
            if not targets:
                rank_in[i] = 0
                continue
            col_of = {s: c for c, s in enumerate(targets)}
            rows = []
            for subset in by_size[i]:
                row = [0] * len(targets)
                for pos in range(i):
                    smaller = subset[:pos] + subset[pos + 1 :]
                    if lcm_of[smaller] == m:
                        row[col_of[smaller]] = -1 if pos % 2 else 1
                rows.append(row)
            rank_in[i] = rational_rank(rows)
        for i in sizes:
            dim = len(by_size[i])
            betti = dim - rank_in.get(i, 0) - rank_in.get(i + 1, 0)
            if betti:
                entries[(i, m)] = betti
    return BettiTable(n, entries)


def depth_quotient(
    ideal: MonomialIdeal, cap: int = DEFAULT_TAYLOR_CAP, socle_shortcut: bool = True
) -> DepthReport:
    """depth(S/I) = n - pd(S/I); depth 0 is detected without homology when
    the colon by the maximal ideal is strictly larger than I."""
    if ideal.is_unit:
        raise ValueError("depth of the zero module is undefined")
    n = ideal.context.arity
    if ideal.is_zero:
        return DepthReport(n, 0, "taylor")
    if socle_shortcut and ideal.colon_maximal() != ideal:
        return DepthReport(0, n, "socle-shortcut")
    table = taylor_tor_ranks(ideal, cap=cap)
    pd = table.pd
    return DepthReport(n - pd, pd, "taylor")


def depth_ideal(ideal: MonomialIdeal, cap: int = DEFAULT_TAYLOR_CAP) -> int:
    """depth(I) = depth(S/I) + 1 for a nonzero proper ideal."""
    if ideal.is_zero or ideal.is_unit:
        raise ValueError("depth_ideal needs a nonzero proper ideal")
    return depth_quotient(ideal, cap=cap).depth_quotient + 1
