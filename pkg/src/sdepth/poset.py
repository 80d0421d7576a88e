"""Stanley depth via the characteristic poset of a quotient module.

The poset of a module I/J truncated at the box [0, g] (g the componentwise
max of the generator exponents of I and J) carries enough information to
decide, for each k, whether a partition of the poset into intervals [c, d]
with rho(d) = #{j : d_j = g_j} >= k exists.  Stanley depth is the largest
such k; every positive answer ships an interval partition that converts to
an independently checkable Stanley decomposition.
"""
from __future__ import annotations

import itertools
import sys
import time
from dataclasses import dataclass, field

from .core import Monomial, MonomialIdeal, QuotientModule, RingContext


class ResourceCapError(RuntimeError):
    """A configured cell/volume cap was exceeded."""


class _BudgetExhausted(Exception):
    """Internal: search ran out of time; surfaces as an 'unknown' outcome."""


@dataclass(frozen=True)
class Budget:
    """Resource limits for poset construction and partition search."""

    cell_cap: int = 10**6
    time_limit: float = 60.0
    memo_cap: int = 200_000


DEFAULT_BUDGET = Budget()


class CharPoset:
    """Cells of the box [0, g] whose monomials lie in outer but not inner."""

    def __init__(self, context: RingContext, g: tuple[int, ...], cells: list[tuple[int, ...]]):
        self.context = context
        self.g = g
        self.cells = sorted(cells, key=lambda c: (sum(c), c))
        self.index = {c: i for i, c in enumerate(self.cells)}

    @property
    def arity(self) -> int:
        return len(self.g)

    def rho(self, point: tuple[int, ...]) -> int:
        return sum(1 for pj, gj in zip(point, self.g) if pj == gj)

    def is_cell(self, point: tuple[int, ...]) -> bool:
        return point in self.index

    def maximal_cells(self) -> list[tuple[int, ...]]:
        out = []
        for c in self.cells:
            top = True
            for j in range(self.arity):
                if c[j] < self.g[j]:
                    q = c[:j] + (c[j] + 1,) + c[j + 1 :]
                    if q in self.index:
                        top = False
                        break
            if top:
                out.append(c)
        return out

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True)
class Interval:
    """Lattice interval [lo, hi], all of whose points are poset cells."""

    lo: tuple[int, ...]
    hi: tuple[int, ...]

    def __post_init__(self):
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise ValueError("interval needs lo <= hi componentwise")

    def points(self):
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))


@dataclass(frozen=True)
class IntervalPartition:
    """Disjoint intervals covering all cells, with the partition's min rho."""

    intervals: tuple[Interval, ...]
    rho_min: int


@dataclass(frozen=True)
class StanleyDecomposition:
    """Certificate: spaces (monomial, free-variable index set)."""

    context: RingContext
    spaces: tuple[tuple[Monomial, frozenset[int]], ...]

    @property
    def sdepth(self) -> int:
        return min((len(z) for _, z in self.spaces), default=0)


@dataclass(frozen=True)
class Decision:
    """Tri-state answer of the interval-partition decision problem."""

    status: str  # "true" | "false" | "unknown"
    partition: IntervalPartition | None
    nodes: int
    elapsed: float


@dataclass(frozen=True)
class SdepthResult:
    status: str  # "exact" | "unknown"
    value: int | None
    lo: int
    hi: int
    witness: IntervalPartition | None
    nodes: int = 0
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = [[list(iv.lo), list(iv.hi)] for iv in self.witness.intervals]
        return {
            "value": self.value,
            "status": self.status,
            "lo": self.lo,
            "hi": self.hi,
            "witness": witness,
            "nodes_expanded": self.nodes,
            "elapsed": self.elapsed,
        }


def degree_bound_g(module: QuotientModule) -> tuple[int, ...]:
    """Componentwise max over the generator exponents of both ideals."""
    n = module.context.arity
    g = [0] * n
    for ideal in (module.outer, module.inner):
        for gen in ideal.gens:
            for j, e in enumerate(gen.exponents):
                g[j] = max(g[j], e)
    return tuple(g)


def build_poset(
    module: QuotientModule, g: tuple[int, ...] | None = None, budget: Budget = DEFAULT_BUDGET
) -> CharPoset:
    """Enumerate the cells of the box [0, g] belonging to the module."""
    gmin = degree_bound_g(module)
    if g is None:
        g = gmin
    elif any(a < b for a, b in zip(g, gmin)):
        raise ValueError(f"g must dominate the generator exponents {gmin}")
    volume = 1
    for gj in g:
        volume *= gj + 1
    if volume > budget.cell_cap:
        raise ResourceCapError(f"box volume {volume} exceeds cell cap {budget.cell_cap}")
    ctx = module.context
    cells = [
        p
        for p in itertools.product(*(range(gj + 1) for gj in g))
        if module.contains(Monomial(ctx, p))
    ]
    return CharPoset(ctx, g, cells)


class _PartitionSearch:
    """Backtracking interval-partition search for a fixed rho target k.

    Branches on the graded-lex smallest uncovered cell; candidate tops are
    tried in decreasing rho, ties broken lex.  Failed uncovered-set bitmasks
    are memoized (lossy beyond the cap).
    """

    def __init__(self, poset: CharPoset, k: int, budget: Budget):
        self.poset = poset
        self.k = k
        self.budget = budget
        self.deadline = time.monotonic() + budget.time_limit
        self.nodes = 0
        self.failed: set[int] = set()
        self.order = self._order_greedy
        cells = poset.cells
        n = poset.arity
        g = poset.g
        self.ncells = len(cells)
        self.rho = [poset.rho(c) for c in cells]
        index = poset.index
        # successors/predecessors restricted to the box; predecessor entries
        # keep the step direction so "pred >= branch cell" is a coordinate test
        self.succ: list[list[int]] = []
        self.preds: list[list[tuple[int, int | None]]] = []
        for c in cells:
            succ = []
            for j in range(n):
                if c[j] < g[j]:
                    q = c[:j] + (c[j] + 1,) + c[j + 1 :]
                    qi = index.get(q)
                    if qi is not None:
                        succ.append(qi)
            self.succ.append(succ)
            preds = []
            for j in range(n):
                if c[j] > 0:
                    q = c[:j] + (c[j] - 1,) + c[j + 1 :]
                    preds.append((j, index.get(q)))
            self.preds.append(preds)

    def _candidates(self, ci: int, uncovered: int) -> list[tuple[int, int]]:
        """Interval tops d >= cell ci with [c, d] inside the uncovered set.

        Returns (top index, interval bitmask) pairs, best rho first.  The
        reachability recursion: [c,d] is uncovered iff d is uncovered and
        every predecessor of d above c spans an uncovered interval.
        """
        cells = self.poset.cells
        cc = cells[ci]
        reach: dict[int, int] = {ci: 1 << ci}
        level = [ci]
        out: list[tuple[int, int]] = []
        if self.rho[ci] >= self.k:
            out.append((ci, 1 << ci))
        while level:
            proposed: set[int] = set()
            for di in level:
                for si in self.succ[di]:
                    if si not in reach:
                        proposed.add(si)
            nxt = []
            for si in sorted(proposed):
                if not (uncovered >> si) & 1:
                    continue
                sc = cells[si]
                mask = 1 << si
                ok = True
                for j, pi in self.preds[si]:
                    if sc[j] > cc[j]:  # predecessor lies in [c, d]
                        pm = None if pi is None else reach.get(pi)
                        if pm is None:
                            ok = False
                            break
                        mask |= pm
                if ok:
                    reach[si] = mask
                    nxt.append(si)
                    if self.rho[si] >= self.k:
                        out.append((si, mask))
            level = nxt
        out.sort(key=self.order)
        return out

    def _order_greedy(self, cand: tuple[int, int]) -> tuple:
        """Best rho first, then larger intervals: good at refutation and on
        most satisfiable instances."""
        return (-self.rho[cand[0]], -cand[1].bit_count(), self.poset.cells[cand[0]])

    def _order_frugal(self, cand: tuple[int, int]) -> tuple:
        """Smaller intervals first: keeps high-rho tops available for the
        cells that need them; rescues instances where greed paints the
        search into a corner."""
        return (cand[1].bit_count(), -self.rho[cand[0]], self.poset.cells[cand[0]])

    def run(self) -> Decision:
        start = time.monotonic()
        if self.k == 0:
            # singleton intervals always work
            intervals = tuple(Interval(c, c) for c in self.poset.cells)
            rho_min = min((self.rho[i] for i in range(self.ncells)), default=0)
            part = IntervalPartition(intervals, rho_min)
            return Decision("true", part, 0, time.monotonic() - start)
        full = (1 << self.ncells) - 1
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 2 * self.ncells + 10_000))
        # two-phase portfolio: restart with the frugal ordering when the
        # greedy one times out; the failure memo states ordering-independent
        # facts, so it carries over
        phases = [
            (self._order_greedy, start + 0.5 * self.budget.time_limit),
            (self._order_frugal, self.deadline),
        ]
        chosen: list[tuple[int, int]] | None = None
        exhausted = True
        try:
            for order, deadline in phases:
                self.order = order
                self.deadline = deadline
                try:
                    chosen = self._solve(full)
                    exhausted = False
                    break
                except _BudgetExhausted:
                    continue
        finally:
            sys.setrecursionlimit(old_limit)
        if exhausted:
            return Decision("unknown", None, self.nodes, time.monotonic() - start)
        if chosen is None:
            return Decision("false", None, self.nodes, time.monotonic() - start)
        cells = self.poset.cells
        intervals = tuple(Interval(cells[ci], cells[di]) for ci, di in chosen)
        rho_min = min(self.rho[di] for _, di in chosen) if chosen else self.poset.arity
        part = IntervalPartition(intervals, rho_min)
        return Decision("true", part, self.nodes, time.monotonic() - start)

    def _solve(self, uncovered: int) -> list[tuple[int, int]] | None:
        if uncovered == 0:
            return []
        if uncovered in self.failed:
            return None
        self.nodes += 1
        if self.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted
        ci = (uncovered & -uncovered).bit_length() - 1
        for di, mask in self._candidates(ci, uncovered):
            rest = self._solve(uncovered & ~mask)
            if rest is not None:
                rest.append((ci, di))
                return rest
        if len(self.failed) < self.budget.memo_cap:
            self.failed.add(uncovered)
        return None


def sdepth_decision(poset: CharPoset, k: int, budget: Budget = DEFAULT_BUDGET) -> Decision:
    """Does some interval partition of the poset achieve rho >= k everywhere?"""
    if not 0 <= k <= poset.arity:
        raise ValueError("k must lie between 0 and the number of variables")
    if len(poset) == 0:
        raise ValueError("empty poset: the module is zero")
    return _PartitionSearch(poset, k, budget).run()


def sdepth_exact(
    module: QuotientModule,
    g: tuple[int, ...] | None = None,
    budget: Budget = DEFAULT_BUDGET,
) -> SdepthResult:
    """Largest k admitting an interval partition, walking down from the
    maximal-cell upper bound; 'unknown' outcomes carry a verified bracket."""
    if module.is_zero:
        raise ValueError("Stanley depth of the zero module is undefined")
    poset = build_poset(module, g, budget)
    ub = min(poset.rho(c) for c in poset.maximal_cells())
    nodes = 0
    elapsed = 0.0
    hi = ub
    saw_unknown = False
    for k in range(ub, -1, -1):
        decision = sdepth_decision(poset, k, budget)
        nodes += decision.nodes
        elapsed += decision.elapsed
        if decision.status == "true":
            if saw_unknown:
                return SdepthResult("unknown", None, k, hi, decision.partition, nodes, elapsed)
            return SdepthResult("exact", k, k, k, decision.partition, nodes, elapsed)
        if decision.status == "false":
            hi = k - 1
        else:
            saw_unknown = True
    # k = 0 always succeeds on a nonempty poset
    raise AssertionError("unreachable: decision at k=0 cannot fail")


def partition_to_decomposition(
    poset: CharPoset, partition: IntervalPartition
) -> StanleyDecomposition:
    """Expand an interval partition into Stanley spaces.

    For [c, d] with free set Z = {j : d_j = g_j}, each cell e in [c, d]
    with e_j = c_j on Z contributes the space x^e K[Z].
    """
    ctx = poset.context
    g = poset.g
    spaces = []
    for iv in partition.intervals:
        free = frozenset(j for j in range(poset.arity) if iv.hi[j] == g[j])
        ranges = [
            range(iv.lo[j], iv.lo[j] + 1) if j in free else range(iv.lo[j], iv.hi[j] + 1)
            for j in range(poset.arity)
        ]
        for e in itertools.product(*ranges):
            spaces.append((Monomial(ctx, e), free))
    return StanleyDecomposition(ctx, tuple(spaces))


def verify_decomposition(
    decomposition: StanleyDecomposition,
    module: QuotientModule,
    budget: Budget = DEFAULT_BUDGET,
) -> bool:
    """Pointwise direct-sum check on the certifying box [0, g+1].

    One step beyond g separates free from capped directions; membership in a
    monomial ideal is determined by truncation at g, so exact cover on this
    box certifies exact cover everywhere.
    """
    if decomposition.context != module.context:
        return False
    g = degree_bound_g(module)
    n = module.context.arity
    bounds = [gj + 1 for gj in g]
    volume = 1
    for b in bounds:
        volume *= b + 1
    if volume > budget.cell_cap:
        raise ResourceCapError(f"certifying box volume {volume} exceeds cap {budget.cell_cap}")
    counts: dict[tuple[int, ...], int] = {}
    for mono, free in decomposition.spaces:
        ranges = []
        empty = False
        for j in range(n):
            if j in free:
                ranges.append(range(mono.exponents[j], bounds[j] + 1))
            elif mono.exponents[j] <= bounds[j]:
                ranges.append(range(mono.exponents[j], mono.exponents[j] + 1))
            else:
                empty = True
                break
        if empty:
            continue
        for p in itertools.product(*ranges):
            counts[p] = counts.get(p, 0) + 1
    ctx = module.context
    for p in itertools.product(*(range(b + 1) for b in bounds)):
        expected = 1 if module.contains(Monomial(ctx, p)) else 0
        if counts.get(p, 0) != expected:
            return False
    return True


def poset_to_dot(poset: CharPoset, partition: IntervalPartition | None = None) -> str:
    """DOT rendering of the Hasse diagram; optional partition coloring.

    Cover relations are computed pairwise, so keep this to diagnostic-size
    posets (a few hundred cells).
    """
    cells = poset.cells
    lower: dict[tuple[int, ...], list[tuple[int, ...]]] = {c: [] for c in cells}
    for p in cells:
        for q in cells:
            if p != q and all(a <= b for a, b in zip(p, q)):
                lower[q].append(p)
    palette = [
        "lightblue", "lightyellow", "lightpink", "lightgreen", "orange",
        "cyan", "violet", "khaki", "salmon", "palegreen",
    ]
    color: dict[tuple[int, ...], str] = {}
    label_extra: dict[tuple[int, ...], str] = {}
    if partition is not None:
        for i, iv in enumerate(partition.intervals):
            for p in iv.points():
                color[p] = palette[i % len(palette)]
                label_extra[p] = f"\\n[{i}]"
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box, style=filled, fillcolor=white];"]
    def node_id(p):
        return "c_" + "_".join(map(str, p))
    for p in cells:
        label = str(Monomial(poset.context, p)) + label_extra.get(p, "")
        fill = color.get(p, "white")
        lines.append(f'  {node_id(p)} [label="{label}", fillcolor={fill}];')
    for q in cells:
        below = lower[q]
        covers = [p for p in below if not any(all(a <= b for a, b in zip(p, r)) and r != p for r in below)]
        for p in covers:
            lines.append(f"  {node_id(p)} -> {node_id(q)};")
    lines.append("}")
    return "\n".join(lines)
