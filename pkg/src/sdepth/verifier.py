"""Executable checks for the catalogued statements about sdepth/depth of
powers of sums of monomial ideals in disjoint variable blocks.

Each ``check_*`` evaluates both sides of its (in)equalities on a concrete
instance and returns a :class:`TheoremReport` with verdict ``holds``,
``fails``, ``unknown`` (budget) or ``vacuous``.  Conjecture-style items are
recorded as observations, never asserted.  A ``fails`` verdict on an
instance satisfying the hypotheses is a bug, and reports carry a full
reproducible instance dump for that reason.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import reduce

from .core import (
    GeneratorCapError,
    Monomial,
    MonomialIdeal,
    QuotientModule,
    RingContext,
    is_complete_intersection,
    krull_dim_quotient,
    tensor_join,
)
from .lattice import build_lcm_lattice, ci_power_atom_map, sdepth_transfer
from .parsing import format_ideal
from .poset import (
    Budget,
    DEFAULT_BUDGET,
    ResourceCapError,
    SdepthResult,
    degree_bound_g,
    sdepth_exact,
)
from .taylor import TaylorCapError, depth_ideal, depth_quotient


@dataclass(frozen=True)
class InstanceSpec:
    """A verification instance: block-A ideal, block-B ideal, power range."""

    ideal_a: MonomialIdeal
    ideal_b: MonomialIdeal
    n_max: int = 1
    budget: Budget = DEFAULT_BUDGET


@dataclass(frozen=True)
class CheckItem:
    label: str
    lhs: int | None
    rhs: int | None
    relation: str  # "<=", ">=", "==" (lhs REL rhs)
    verdict: str  # holds | fails | unknown | vacuous | observed-holds | observed-fails

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "verdict": self.verdict,
        }


@dataclass
class TheoremReport:
    statement: str
    instance: dict[str, str]
    items: list[CheckItem] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        decisive = [i for i in self.items if not i.verdict.startswith("observed")]
        if any(i.verdict == "fails" for i in decisive):
            return "fails"
        if any(i.verdict == "unknown" for i in decisive):
            return "unknown"
        if decisive and all(i.verdict == "vacuous" for i in decisive):
            return "vacuous"
        return "holds"

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "verdict": self.verdict,
            "instance": self.instance,
            "items": [i.to_json_dict() for i in self.items],
            "notes": self.notes,
        }


class HypothesisError(ValueError):
    """The instance violates a statement's stated hypotheses."""


# --- evaluation helpers ------------------------------------------------------


def _sd(module: QuotientModule, budget: Budget) -> int | None:
    """Stanley depth as a plain value; None when the budget ran out."""
    try:
        res = sdepth_exact(module, budget=budget)
    except (ResourceCapError, GeneratorCapError):
        return None
    return res.value if res.status == "exact" else None


def _depth_q(ideal: MonomialIdeal) -> int | None:
    try:
        return depth_quotient(ideal).depth_quotient
    except (TaylorCapError, GeneratorCapError):
        return None


def _depth_i(ideal: MonomialIdeal) -> int | None:
    try:
        return depth_ideal(ideal)
    except (TaylorCapError, GeneratorCapError):
        return None


def _min(values) -> int | None:
    values = list(values)
    if any(v is None for v in values):
        return None
    return min(values)


def _verdict(lhs, rhs, relation) -> str:
    if lhs is None or rhs is None:
        return "unknown"
    ok = {"<=": lhs <= rhs, ">=": lhs >= rhs, "==": lhs == rhs}[relation]
    return "holds" if ok else "fails"


def _item(label, lhs, rhs, relation) -> CheckItem:
    return CheckItem(label, lhs, rhs, relation, _verdict(lhs, rhs, relation))


def _observed(label, lhs, rhs, relation) -> CheckItem:
    base = _verdict(lhs, rhs, relation)
    verdict = {"holds": "observed-holds", "fails": "observed-fails"}.get(base, base)
    return CheckItem(label, lhs, rhs, relation, verdict)


def _dump_pair(ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, **extra) -> dict[str, str]:
    out = {"I": format_ideal(ideal_a), "J": format_ideal(ideal_b)}
    out.update({k: str(v) for k, v in extra.items()})
    return out


def _require_blocks(ideal_a: MonomialIdeal, ideal_b: MonomialIdeal) -> None:
    if set(ideal_a.context.variables) & set(ideal_b.context.variables):
        raise HypothesisError("block ideals must live in disjoint variable sets")
    for ideal, name in ((ideal_a, "I"), (ideal_b, "J")):
        if ideal.is_zero or ideal.is_unit:
            raise HypothesisError(f"{name} must be nonzero and proper")


def _require_ci(ideal: MonomialIdeal, name: str = "J") -> None:
    if ideal.is_zero or ideal.is_unit:
        raise HypothesisError(f"{name} must be nonzero and proper")
    if not is_complete_intersection(ideal):
        raise HypothesisError(f"{name} must be a monomial complete intersection")


def q_chain(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int
) -> list[MonomialIdeal]:
    """The ascending chain Q_i = sum_{j<=i} I^(n-j) J^j from I^n to (I+J)^n."""
    if n < 1:
        raise ValueError("q_chain needs n >= 1")
    if ideal_a.context == ideal_b.context:
        ia, ib = ideal_a, ideal_b
    else:
        _, ia, ib = tensor_join(ideal_a, ideal_b)
    chain = []
    current = MonomialIdeal.zero(ia.context)
    for i in range(n + 1):
        current = current.add(ia.power(n - i).multiply(ib.power(i)))
        chain.append(current)
    return chain


# --- statement checks --------------------------------------------------------


def check_lemma_2_1(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Product equals intersection across blocks, and the joint depth formula
    depth(R/IJ) = depth_A(A/I) + depth_B(B/J) + 1."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("lemma_2_1", _dump_pair(ideal_a, ideal_b))
    product = ia.multiply(ib)
    same = product == ia.intersect(ib)
    report.items.append(CheckItem("IJ == I∩J", int(same), 1, "==", "holds" if same else "fails"))
    lhs = _depth_q(product)
    da, db = _depth_q(ideal_a), _depth_q(ideal_b)
    rhs = None if da is None or db is None else da + db + 1
    report.items.append(_item("depth(R/IJ) == depth(A/I)+depth(B/J)+1", lhs, rhs, "=="))
    return report


def check_prop_2_2(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Stanley depth of a cross-block product against block values, plus the
    recorded Stanley-inequality implications."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_2", _dump_pair(ideal_a, ideal_b))
    report.notes.append(
        "item (3) follows the block-symmetric reading of the printed statement;"
        " see docs/statement-catalog.md"
    )
    product = ia.multiply(ib)
    sd_i = _sd(QuotientModule.of_ideal(ideal_a), budget)
    sd_j = _sd(QuotientModule.of_ideal(ideal_b), budget)
    sd_ai = _sd(QuotientModule.of_quotient_ring(ideal_a), budget)
    sd_bj = _sd(QuotientModule.of_quotient_ring(ideal_b), budget)
    sd_prod = _sd(QuotientModule.of_ideal(product), budget)
    sd_r_prod = _sd(QuotientModule.of_quotient_ring(product), budget)
    sd_ri = _sd(QuotientModule.of_quotient_ring(ia), budget)
    sd_rj = _sd(QuotientModule.of_quotient_ring(ib), budget)
    add = lambda a, b: None if a is None or b is None else a + b
    report.items.append(_item("(1) sdepth(IJ) >= sdepth_A(I)+sdepth_B(J)", sd_prod, add(sd_i, sd_j), ">="))
    report.items.append(_item("(2a) sdepth(R/I) >= sdepth(R/IJ)", sd_ri, sd_r_prod, ">="))
    report.items.append(
        _item("(2b) sdepth(R/IJ) >= min{sdepth(R/I), sdepth_B(B/J)+sdepth_A(I)}",
              sd_r_prod, _min([sd_ri, add(sd_bj, sd_i)]), ">=")
    )
    report.items.append(_item("(3a) sdepth(R/J) >= sdepth(R/IJ)", sd_rj, sd_r_prod, ">="))
    report.items.append(
        _item("(3b) sdepth(R/IJ) >= min{sdepth(R/J), sdepth_A(A/I)+sdepth_B(J)}",
              sd_r_prod, _min([sd_rj, add(sd_ai, sd_j)]), ">=")
    )
    # (4)-(6): implications recorded as observations
    d_i, d_j = _depth_i(ideal_a), _depth_i(ideal_b)
    d_ai, d_bj = _depth_q(ideal_a), _depth_q(ideal_b)
    d_prod = _depth_i(product)
    d_r_prod = _depth_q(product)
    known = lambda *vs: all(v is not None for v in vs)
    if known(sd_i, d_i, sd_j, d_j, sd_prod, d_prod):
        if sd_i >= d_i and sd_j >= d_j:
            report.items.append(_observed("(4) sdepth(IJ) >= depth(IJ)", sd_prod, d_prod, ">="))
        else:
            report.items.append(CheckItem("(4) hypothesis fails", None, None, ">=", "vacuous"))
    if known(sd_i, sd_ai, sd_j, sd_bj, d_ai, d_bj, sd_r_prod, d_r_prod):
        conj2 = sd_i >= sd_ai + 1 or sd_j >= sd_bj + 1
        if conj2 and sd_ai >= d_ai and sd_bj >= d_bj:
            report.items.append(
                _observed("(5) sdepth(R/IJ) >= depth(R/IJ)", sd_r_prod, d_r_prod, ">=")
            )
        else:
            report.items.append(CheckItem("(5) hypothesis fails", None, None, ">=", "vacuous"))
    if known(sd_i, d_i, sd_j, d_j, sd_ai, d_ai, sd_bj, d_bj, sd_r_prod, d_r_prod):
        if sd_i >= d_i and sd_j >= d_j and sd_ai >= d_ai - 1 and sd_bj >= d_bj - 1:
            report.items.append(
                _observed("(6) sdepth(R/IJ) >= depth(R/IJ)-1", sd_r_prod, d_r_prod - 1, ">=")
            )
        else:
            report.items.append(CheckItem("(6) hypothesis fails", None, None, ">=", "vacuous"))
    return report


def check_prop_2_3(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Multidegree direct-sum decomposition of (I+J)^n/(I+J)^(n+1) into the
    tensor strata (I^i/I^(i+1)) (x) (J^j/J^(j+1)), checked on a finite box."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_3", _dump_pair(ideal_a, ideal_b, n=n))
    total = ia.add(ib)
    shell = QuotientModule(total.power(n), total.power(n + 1))
    pow_a = [ideal_a.power(i) for i in range(n + 2)]
    pow_b = [ideal_b.power(i) for i in range(n + 2)]
    g = degree_bound_g(shell)
    r = ideal_a.context.arity
    ctx_a, ctx_b = ideal_a.context, ideal_b.context
    mismatches = 0
    volume = 1
    for gj in g:
        volume *= gj + 2
    if volume > budget.cell_cap:
        report.items.append(CheckItem("stratum cover on box", None, None, "==", "unknown"))
        return report
    for p in itertools.product(*(range(gj + 2) for gj in g)):
        member = shell.contains(Monomial(shell.context, p))
        a_part, b_part = Monomial(ctx_a, p[:r]), Monomial(ctx_b, p[r:])
        hits = 0
        for i in range(n + 1):
            j = n - i
            if (
                pow_a[i].contains(a_part)
                and not pow_a[i + 1].contains(a_part)
                and pow_b[j].contains(b_part)
                and not pow_b[j + 1].contains(b_part)
            ):
                hits += 1
        if hits != (1 if member else 0):
            mismatches += 1
    report.items.append(_item("stratum cover mismatches", mismatches, 0, "=="))
    return report


def check_prop_2_4(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """sdepth of the n-th shell of I+J against the best split of n across
    the block shells."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_4", _dump_pair(ideal_a, ideal_b, n=n))
    total = ia.add(ib)
    lhs = _sd(QuotientModule(total.power(n), total.power(n + 1)), budget)
    parts = []
    for i in range(n + 1):
        j = n - i
        sa = _sd(QuotientModule(ideal_a.power(i), ideal_a.power(i + 1)), budget)
        sb = _sd(QuotientModule(ideal_b.power(j), ideal_b.power(j + 1)), budget)
        parts.append(None if sa is None or sb is None else sa + sb)
    report.items.append(
        _item("sdepth((I+J)^n/(I+J)^(n+1)) >= min_{i+j=n} sums", lhs, _min(parts), ">=")
    )
    return report


def check_prop_2_5(
    ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """All shells J^m/J^(m+1) of a complete intersection have sdepth equal to
    dim(B/J), for m = 0..n."""
    _require_ci(ideal_b)
    report = TheoremReport("prop_2_5", {"J": format_ideal(ideal_b), "n": str(n)})
    dim = krull_dim_quotient(ideal_b)
    for m in range(n + 1):
        shell = QuotientModule(ideal_b.power(m), ideal_b.power(m + 1))
        report.items.append(
            _item(f"sdepth(J^{m}/J^{m + 1}) == dim(B/J)", _sd(shell, budget), dim, "==")
        )
    return report


def check_prop_2_6(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """sdepth((I+J)^n) against the minimum over the filtration factors."""
    _require_blocks(ideal_a, ideal_b)
    if n < 1:
        raise HypothesisError("needs n >= 1")
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_6", _dump_pair(ideal_a, ideal_b, n=n))
    total = ia.add(ib)
    lhs = _sd(QuotientModule.of_ideal(total.power(n)), budget)
    factors = [_sd(QuotientModule.of_ideal(ia.power(n)), budget)]
    for i in range(1, n + 1):
        outer = ia.power(n - i).multiply(ib.power(i))
        factors.append(_sd(QuotientModule(outer, outer.multiply(ia)), budget))
    report.items.append(_item("sdepth((I+J)^n) >= min over factors", lhs, _min(factors), ">="))
    return report


def check_prop_2_7(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Short-exact-sequence bounds linking consecutive powers of I+J and
    their shell."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_7", _dump_pair(ideal_a, ideal_b, n=n))
    total = ia.add(ib)
    p_n, p_n1 = total.power(n), total.power(n + 1)
    sd_pn = _sd(QuotientModule.of_ideal(p_n), budget)
    sd_pn1 = _sd(QuotientModule.of_ideal(p_n1), budget)
    sd_shell = _sd(QuotientModule(p_n, p_n1), budget)
    sd_r_n = _sd(QuotientModule.of_quotient_ring(p_n), budget)
    sd_r_n1 = _sd(QuotientModule.of_quotient_ring(p_n1), budget)
    report.items.append(
        _item("sdepth((I+J)^n) >= min{sdepth((I+J)^(n+1)), sdepth(shell)}",
              sd_pn, _min([sd_pn1, sd_shell]), ">=")
    )
    report.items.append(
        _item("sdepth(R/(I+J)^(n+1)) >= min{sdepth(R/(I+J)^n), sdepth(shell)}",
              sd_r_n1, _min([sd_r_n, sd_shell]), ">=")
    )
    return report


def check_obs_2_8(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Filtration bounds along the chain Q_0 ⊂ ... ⊂ Q_n."""
    _require_blocks(ideal_a, ideal_b)
    if n < 1:
        raise HypothesisError("needs n >= 1")
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("obs_2_8", _dump_pair(ideal_a, ideal_b, n=n))
    chain = q_chain(ia, ib, n)
    for i in range(1, n + 1):
        sd_factor = _sd(QuotientModule(chain[i], chain[i - 1]), budget)
        lhs = _sd(QuotientModule.of_quotient_ring(chain[i - 1]), budget)
        rhs = _min([_sd(QuotientModule.of_quotient_ring(chain[i]), budget), sd_factor])
        report.items.append(
            _item(f"sdepth(R/Q_{i - 1}) >= min{{sdepth(R/Q_{i}), sdepth(Q_{i}/Q_{i - 1})}}",
                  lhs, rhs, ">=")
        )
        big = ia.power(n - i + 1).multiply(ib.power(i))
        small = ia.power(n - i).multiply(ib.power(i))
        lhs2 = _sd(QuotientModule.of_quotient_ring(big), budget)
        rhs2 = _min([_sd(QuotientModule.of_quotient_ring(small), budget), sd_factor])
        report.items.append(
            _item(
                f"sdepth(R/I^{n - i + 1}J^{i}) >= min{{sdepth(R/I^{n - i}J^{i}), sdepth(Q_{i}/Q_{i - 1})}}",
                lhs2, rhs2, ">=")
        )
    return report


def check_prop_2_9(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Conditional upper bounds for sdepth(R/(I+J)^2); hypotheses are
    evaluated first and failures reported as vacuous."""
    _require_blocks(ideal_a, ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("prop_2_9", _dump_pair(ideal_a, ideal_b))
    mixed = ia.power(2).add(ia.multiply(ib))
    sd_mixed = _sd(QuotientModule.of_quotient_ring(mixed), budget)
    sd_ai = _sd(QuotientModule.of_quotient_ring(ideal_a), budget)
    sd_bj2 = _sd(QuotientModule.of_ideal(ideal_b.power(2)), budget)
    if None in (sd_mixed, sd_ai, sd_bj2):
        report.items.append(CheckItem("(1)", None, None, "<=", "unknown"))
    elif sd_mixed < sd_ai + sd_bj2:
        total2 = ia.add(ib).power(2)
        report.items.append(
            _item("(1) sdepth(R/(I+J)^2) <= sdepth_A(A/I)+sdepth_B(J^2)",
                  _sd(QuotientModule.of_quotient_ring(total2), budget), sd_ai + sd_bj2, "<=")
        )
    else:
        report.items.append(CheckItem("(1) hypothesis fails", sd_mixed, sd_ai + sd_bj2, "<=", "vacuous"))
    sd_ri2 = _sd(QuotientModule.of_quotient_ring(ia.power(2)), budget)
    sd_shell_a = _sd(QuotientModule(ideal_a, ideal_a.power(2)), budget)
    sd_j = _sd(QuotientModule.of_ideal(ideal_b), budget)
    if None in (sd_ri2, sd_shell_a, sd_j):
        report.items.append(CheckItem("(2)", None, None, "<=", "unknown"))
    elif sd_ri2 < sd_shell_a + sd_j:
        report.items.append(
            _item("(2a) sdepth(R/(I^2+IJ)) <= sdepth(R/I^2)", sd_mixed, sd_ri2, "<=")
        )
        sd_ai2 = _sd(QuotientModule.of_quotient_ring(ideal_a.power(2)), budget)
        report.items.append(
            _item("(2b) sdepth_A(A/I) <= sdepth_A(A/I^2)", sd_ai, sd_ai2, "<=")
        )
    else:
        report.items.append(CheckItem("(2) hypothesis fails", sd_ri2, sd_shell_a + sd_j, "<=", "vacuous"))
    return report


def check_thm_2_11(
    ideal_a: MonomialIdeal, ideal_b: MonomialIdeal, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Powers of I+J for a complete-intersection J: exact depth formula,
    sdepth bounds, and monotonicity of the three sdepth sequences."""
    _require_blocks(ideal_a, ideal_b)
    _require_ci(ideal_b)
    _, ia, ib = tensor_join(ideal_a, ideal_b)
    report = TheoremReport("thm_2_11", _dump_pair(ideal_a, ideal_b, n_max=n_max))
    total = ia.add(ib)
    dim_bj = krull_dim_quotient(ideal_b)
    r = ideal_a.context.arity
    depth_ai = [None] + [_depth_q(ideal_a.power(i)) for i in range(1, n_max + 1)]
    sd_ai = [None] + [
        _sd(QuotientModule.of_quotient_ring(ideal_a.power(i)), budget)
        for i in range(1, n_max + 1)
    ]
    sd_rq = {}
    sd_pow = {}
    sd_shell = {}
    for n in range(1, n_max + 1):
        p_n = total.power(n)
        sd_rq[n] = _sd(QuotientModule.of_quotient_ring(p_n), budget)
        sd_pow[n] = _sd(QuotientModule.of_ideal(p_n), budget)
        lhs = _depth_q(p_n)
        rhs_min = _min(depth_ai[1 : n + 1])
        rhs = None if rhs_min is None else rhs_min + dim_bj
        report.items.append(
            _item(f"(1) depth(R/(I+J)^{n}) == min_i depth(A/I^i)+dim(B/J)", lhs, rhs, "==")
        )
        sd_min = _min(sd_ai[1 : n + 1])
        report.items.append(
            _item(f"(2a) sdepth(R/(I+J)^{n}) <= r+dim(B/J)", sd_rq[n], r + dim_bj, "<=")
        )
        report.items.append(
            _item(f"(2b) sdepth(R/(I+J)^{n}) >= min_i sdepth(A/I^i)+dim(B/J)",
                  sd_rq[n], None if sd_min is None else sd_min + dim_bj, ">=")
        )
    for n in range(1, n_max):
        sd_shell[n] = _sd(QuotientModule(total.power(n), total.power(n + 1)), budget)
        sd_shell[n + 1] = _sd(QuotientModule(total.power(n + 1), total.power(n + 2)), budget)
        report.items.append(
            _item(f"(4) sdepth(R/(I+J)^{n + 1}) <= sdepth(R/(I+J)^{n})", sd_rq[n + 1], sd_rq[n], "<=")
        )
        report.items.append(
            _item(f"(4) sdepth((I+J)^{n + 1}) <= sdepth((I+J)^{n})", sd_pow[n + 1], sd_pow[n], "<=")
        )
        report.items.append(
            _item(f"(4) shell sdepth non-increasing at n={n}", sd_shell[n + 1], sd_shell[n], "<=")
        )
    return report


def check_thm_2_11_decomposition(
    ideal_a: MonomialIdeal, v: Monomial, n: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Box check of the stratification of R/(I,v)^n by the v-adic valuation:
    strata alpha = 0..n-1 with v^alpha | w, v^(alpha+1) ∤ w, w/v^alpha not in
    I^(n-alpha) cover the complement exactly once."""
    if ideal_a.is_zero or ideal_a.is_unit:
        raise HypothesisError("I must be nonzero and proper")
    principal = MonomialIdeal.from_gens(v.context, [v])
    _require_blocks(ideal_a, principal)
    ctx, ia, iv = tensor_join(ideal_a, principal)
    report = TheoremReport(
        "thm_2_11_decomposition", _dump_pair(ideal_a, principal, n=n)
    )
    total_n = ia.add(iv).power(n)
    v_ext = iv.gens[0]
    powers_a = [ia.power(i) for i in range(n + 1)]
    g = degree_bound_g(QuotientModule.of_quotient_ring(total_n))
    volume = 1
    for gj in g:
        volume *= gj + 2
    if volume > budget.cell_cap:
        report.items.append(CheckItem("stratum cover on box", None, None, "==", "unknown"))
        return report
    mismatches = 0
    for p in itertools.product(*(range(gj + 2) for gj in g)):
        w = Monomial(ctx, p)
        member = not total_n.contains(w)
        hits = 0
        for alpha in range(n):
            va = v_ext**alpha
            if not va.divides(w):
                continue
            if (v_ext ** (alpha + 1)).divides(w):
                continue
            u = w / va
            if not powers_a[n - alpha].contains(u):
                hits += 1
        if hits != (1 if member else 0):
            mismatches += 1
    report.items.append(_item("stratum cover mismatches", mismatches, 0, "=="))
    return report


def check_cor_2_12(
    ideal_b: MonomialIdeal, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """sdepth(B/J^n) = depth(B/J^n) = s - t for a complete intersection."""
    _require_ci(ideal_b)
    report = TheoremReport("cor_2_12", {"J": format_ideal(ideal_b), "n_max": str(n_max)})
    s = ideal_b.context.arity
    t = len(ideal_b.gens)
    for n in range(1, n_max + 1):
        p = ideal_b.power(n)
        report.items.append(
            _item(f"sdepth(B/J^{n}) == s-t",
                  _sd(QuotientModule.of_quotient_ring(p), budget), s - t, "==")
        )
        report.items.append(_item(f"depth(B/J^{n}) == s-t", _depth_q(p), s - t, "=="))
    return report


def check_cor_2_13(
    ideal: MonomialIdeal, v: Monomial, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Monotone growth of depth(R/L^n) when G(L) = {v_1..v_m, v} with
    gcd(v, v_i) = w constant in block A and v/w in block B."""
    ctx = ideal.context
    if ctx.split is None:
        raise HypothesisError("context must carry a block split")
    if v not in ideal.gens:
        raise HypothesisError("v must be a minimal generator of L")
    others = [u for u in ideal.gens if u != v]
    if not others:
        raise HypothesisError("L needs at least two generators")
    gcds = {v.gcd(u).exponents for u in others}
    if len(gcds) != 1:
        raise HypothesisError("gcd(v, v_i) must be the same monomial w for all i")
    w = Monomial(ctx, next(iter(gcds)))
    r = ctx.split
    if any(j >= r for j in w.support()):
        raise HypothesisError("w must lie in block A")
    if any(j < r for j in (v / w).support()):
        raise HypothesisError("v/w must lie in block B")
    report = TheoremReport(
        "cor_2_13", {"L": format_ideal(ideal), "v": str(v), "n_max": str(n_max)}
    )
    depths = [_depth_q(ideal.power(n)) for n in range(1, n_max + 2)]
    for n in range(1, n_max + 1):
        report.items.append(
            _item(f"depth(R/L^{n}) <= depth(R/L^{n + 1})", depths[n - 1], depths[n], "<=")
        )
    return report


def sdepth_ci_power_via_transfer(
    ideal_b: MonomialIdeal, k: int, budget: Budget = DEFAULT_BUDGET
) -> int | None:
    """sdepth(J^k) for a complete intersection, computed in t variables on
    the maximal-ideal side and moved along the verified lattice isomorphism."""
    _require_ci(ideal_b)
    t = len(ideal_b.gens)
    s = ideal_b.context.arity
    small = RingContext(tuple(f"_t{i + 1}" for i in range(t)))
    maximal = MonomialIdeal.from_gens(small, [small.variable(j) for j in range(t)])
    m_k = maximal.power(k)
    source_value = _sd(QuotientModule.of_ideal(m_k), budget)
    if source_value is None:
        return None
    j_k = ideal_b.power(k)
    phi = ci_power_atom_map(m_k, j_k, ideal_b.gens)
    return sdepth_transfer(
        source_value, t, s, build_lcm_lattice(m_k), build_lcm_lattice(j_k), phi
    )


def check_prop_2_14(
    ideal_b: MonomialIdeal, k_max: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Bounds s-t+1 <= sdepth(J^k) <= s-t+ceil(t/(k+1)) for a complete
    intersection, with equality from k = t-1 on; the direct value must agree
    with the lcm-lattice transfer from the maximal-ideal case."""
    _require_ci(ideal_b)
    report = TheoremReport("prop_2_14", {"J": format_ideal(ideal_b), "k_max": str(k_max)})
    s = ideal_b.context.arity
    t = len(ideal_b.gens)
    for k in range(1, k_max + 1):
        direct = _sd(QuotientModule.of_ideal(ideal_b.power(k)), budget)
        report.items.append(_item(f"sdepth(J^{k}) >= s-t+1", direct, s - t + 1, ">="))
        report.items.append(
            _item(f"sdepth(J^{k}) <= s-t+ceil(t/(k+1))", direct, s - t + math.ceil(t / (k + 1)), "<=")
        )
        if k >= t - 1:
            report.items.append(_item(f"sdepth(J^{k}) == s-t+1 (k >= t-1)", direct, s - t + 1, "=="))
        transferred = sdepth_ci_power_via_transfer(ideal_b, k, budget)
        report.items.append(
            _item(f"transfer agreement at k={k}", direct, transferred, "==")
        )
    return report


def check_thm_2_15(
    ideal_b: MonomialIdeal, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Asymptotics for a complete intersection: quotient and shell sdepth
    equal dim(B/J) at every power; sdepth(J^n) stabilizes at dim(B/J)+1 from
    n = t-1 on."""
    _require_ci(ideal_b)
    report = TheoremReport("thm_2_15", {"J": format_ideal(ideal_b), "n_max": str(n_max)})
    dim = krull_dim_quotient(ideal_b)
    t = len(ideal_b.gens)
    for n in range(n_max + 1):
        shell = QuotientModule(ideal_b.power(n), ideal_b.power(n + 1))
        report.items.append(
            _item(f"(1) sdepth(J^{n}/J^{n + 1}) == dim(B/J)", _sd(shell, budget), dim, "==")
        )
        if n >= 1:
            quotient = QuotientModule.of_quotient_ring(ideal_b.power(n))
            report.items.append(
                _item(f"(1) sdepth(B/J^{n}) == dim(B/J)", _sd(quotient, budget), dim, "==")
            )
        if n >= max(1, t - 1):
            power = QuotientModule.of_ideal(ideal_b.power(n))
            report.items.append(
                _item(f"(2) sdepth(J^{n}) == dim(B/J)+1", _sd(power, budget), dim + 1, "==")
            )
    return report


# --- sequences and conjecture reports ---------------------------------------


@dataclass(frozen=True)
class SequenceEntry:
    value: int | None
    status: str  # "exact" | "unknown" | "n/a"

    @classmethod
    def of(cls, value: int | None) -> "SequenceEntry":
        return cls(value, "exact" if value is not None else "unknown")

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f"?({self.status})"


@dataclass(frozen=True)
class SequenceRow:
    n: int
    ring_quotient: SequenceEntry
    ideal_power: SequenceEntry
    shell: SequenceEntry


def sdepth_sequence(
    ideal: MonomialIdeal, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> list[SequenceRow]:
    """Rows (n, sdepth(R/L^n), sdepth(L^n), sdepth(L^n/L^(n+1)))."""
    rows = []
    for n in range(1, n_max + 1):
        try:
            p, p1 = ideal.power(n), ideal.power(n + 1)
        except GeneratorCapError:
            na = SequenceEntry(None, "unknown")
            rows.append(SequenceRow(n, na, na, na))
            continue
        rows.append(
            SequenceRow(
                n,
                SequenceEntry.of(_sd(QuotientModule.of_quotient_ring(p), budget)),
                SequenceEntry.of(_sd(QuotientModule.of_ideal(p), budget)),
                SequenceEntry.of(_sd(QuotientModule(p, p1), budget)),
            )
        )
    return rows


def depth_sequence(
    ideal: MonomialIdeal, n_max: int, budget: Budget = DEFAULT_BUDGET
) -> list[SequenceRow]:
    """Rows (n, depth(R/L^n), depth(L^n), shell placeholder).

    The depth engine resolves cyclic quotients only, so the shell column is
    reported as n/a rather than approximated.
    """
    rows = []
    for n in range(1, n_max + 1):
        try:
            p = ideal.power(n)
        except GeneratorCapError:
            p = None
        dq = _depth_q(p) if p is not None else None
        di = _depth_i(p) if p is not None else None
        rows.append(
            SequenceRow(n, SequenceEntry.of(dq), SequenceEntry.of(di), SequenceEntry(None, "n/a"))
        )
    return rows


def stanley_inequality_report(
    ideal: MonomialIdeal, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Recorded (never asserted) comparison of sdepth and depth for an ideal
    and its quotient ring, including the two open conjectural inequalities."""
    if ideal.is_zero or ideal.is_unit:
        raise HypothesisError("needs a nonzero proper ideal")
    report = TheoremReport("stanley_inequality", {"I": format_ideal(ideal)})
    sd_i = _sd(QuotientModule.of_ideal(ideal), budget)
    sd_q = _sd(QuotientModule.of_quotient_ring(ideal), budget)
    d_i = _depth_i(ideal)
    d_q = _depth_q(ideal)
    report.items.append(_observed("sdepth(I) >= depth(I)", sd_i, d_i, ">="))
    report.items.append(_observed("sdepth(S/I) >= depth(S/I)", sd_q, d_q, ">="))
    report.items.append(
        _observed("conjecture: sdepth(S/I) >= depth(S/I)-1",
                  sd_q, None if d_q is None else d_q - 1, ">=")
    )
    report.items.append(
        _observed("conjecture: sdepth(I) >= sdepth(S/I)+1",
                  sd_i, None if sd_q is None else sd_q + 1, ">=")
    )
    report.notes.append(
        "observations only: no counterexample at this scale is not a proof"
    )
    return report


# --- random instances --------------------------------------------------------


def random_monomial(rng: random.Random, ctx: RingContext, max_exp: int) -> Monomial:
    while True:
        exps = tuple(rng.randint(0, max_exp) for _ in range(ctx.arity))
        if any(exps):
            return Monomial(ctx, exps)


def random_ideal(
    rng: random.Random,
    ctx: RingContext,
    max_gens: int = 3,
    max_exp: int = 2,
) -> MonomialIdeal:
    k = rng.randint(1, max_gens)
    return MonomialIdeal.from_gens(ctx, [random_monomial(rng, ctx, max_exp) for _ in range(k)])


def random_ci(
    rng: random.Random, ctx: RingContext, max_t: int = 3, max_exp: int = 2
) -> MonomialIdeal:
    """Random complete intersection: generators with disjoint supports."""
    s = ctx.arity
    t = rng.randint(1, min(max_t, s))
    vars_perm = list(range(s))
    rng.shuffle(vars_perm)
    gens = []
    pos = 0
    for i in range(t):
        remaining = s - pos - (t - i - 1)
        size = rng.randint(1, max(1, min(2, remaining)))
        exps = [0] * s
        for j in vars_perm[pos : pos + size]:
            exps[j] = rng.randint(1, max_exp)
        pos += size
        gens.append(Monomial(ctx, tuple(exps)))
    return MonomialIdeal.from_gens(ctx, gens)


def _block_contexts(rng: random.Random, max_vars: int = 3) -> tuple[RingContext, RingContext]:
    r = rng.randint(1, max_vars)
    s = rng.randint(1, max_vars)
    return (
        RingContext(tuple(f"x{i + 1}" for i in range(r))),
        RingContext(tuple(f"y{i + 1}" for i in range(s))),
    )


def random_pair(
    rng: random.Random, max_vars: int = 3, max_gens: int = 3, max_exp: int = 2
) -> tuple[MonomialIdeal, MonomialIdeal]:
    ctx_a, ctx_b = _block_contexts(rng, max_vars)
    return (
        random_ideal(rng, ctx_a, max_gens, max_exp),
        random_ideal(rng, ctx_b, max_gens, max_exp),
    )


def random_colon_shift_instance(
    rng: random.Random, max_vars: int = 2, max_exp: int = 2
) -> tuple[MonomialIdeal, Monomial]:
    """Instance for cor_2_13: L = (w*u_1, ..., w*u_m, w*vb) with u_i in block
    A and vb in block B."""
    while True:
        r = rng.randint(1, max_vars)
        s = rng.randint(1, max_vars)
        ctx = RingContext(
            tuple(f"x{i + 1}" for i in range(r)) + tuple(f"y{i + 1}" for i in range(s)),
            split=r,
        )
        w_exps = tuple(rng.randint(0, 1) for _ in range(r)) + (0,) * s
        w = Monomial(ctx, w_exps)
        m = rng.randint(1, 2)
        others = []
        for _ in range(m):
            exps = tuple(rng.randint(0, max_exp) for _ in range(r)) + (0,) * s
            if any(exps):
                others.append(w * Monomial(ctx, exps))
        vb_exps = (0,) * r + tuple(rng.randint(0, max_exp) for _ in range(s))
        if not any(vb_exps) or not others:
            continue
        v = w * Monomial(ctx, vb_exps)
        ideal = MonomialIdeal.from_gens(ctx, others + [v])
        if v not in ideal.gens or len(ideal.gens) < 2:
            continue
        gcds = {v.gcd(u).exponents for u in ideal.gens if u != v}
        if gcds != {w.exponents}:
            continue
        return ideal, v


# --- statement registry and random driver ------------------------------------

# statement -> (kind, callable); kinds describe the expected arguments
STATEMENTS: dict[str, tuple[str, object]] = {
    "lemma_2_1": ("pair", check_lemma_2_1),
    "prop_2_2": ("pair", check_prop_2_2),
    "prop_2_3": ("pair_n", check_prop_2_3),
    "prop_2_4": ("pair_n", check_prop_2_4),
    "prop_2_5": ("ci_n", check_prop_2_5),
    "prop_2_6": ("pair_n", check_prop_2_6),
    "prop_2_7": ("pair_n", check_prop_2_7),
    "obs_2_8": ("pair_n", check_obs_2_8),
    "prop_2_9": ("pair", check_prop_2_9),
    "thm_2_11": ("pair_ci_nmax", check_thm_2_11),
    "thm_2_11_decomposition": ("decomp", check_thm_2_11_decomposition),
    "cor_2_12": ("ci_n", check_cor_2_12),
    "cor_2_13": ("colon_shift", check_cor_2_13),
    "prop_2_14": ("ci_n", check_prop_2_14),
    "thm_2_15": ("ci_n", check_thm_2_15),
}


def run_random(
    statement: str, seed: int, n: int | None = None, budget: Budget = DEFAULT_BUDGET
) -> TheoremReport:
    """Check one statement on a reproducible random instance."""
    if statement not in STATEMENTS:
        raise ValueError(f"unknown statement {statement!r}")
    kind, fn = STATEMENTS[statement]
    rng = random.Random(f"{statement}:{seed}")
    if kind == "pair":
        ia, ib = random_pair(rng)
        return fn(ia, ib, budget=budget)
    if kind == "pair_n":
        max_vars = 2 if statement in ("prop_2_6", "obs_2_8") else 3
        ia, ib = random_pair(rng, max_vars=max_vars)
        nn = n if n is not None else rng.choice([1, 1, 2])
        return fn(ia, ib, nn, budget=budget)
    if kind == "ci_n":
        ctx = RingContext(tuple(f"y{i + 1}" for i in range(rng.randint(1, 4))))
        ideal_b = random_ci(rng, ctx)
        nn = n if n is not None else 2
        return fn(ideal_b, nn, budget=budget)
    if kind == "pair_ci_nmax":
        ctx_a, ctx_b = _block_contexts(rng, 2)
        ia = random_ideal(rng, ctx_a, max_gens=2, max_exp=2)
        ib = random_ci(rng, ctx_b, max_t=2)
        return fn(ia, ib, n if n is not None else 2, budget=budget)
    if kind == "colon_shift":
        ideal, v = random_colon_shift_instance(rng)
        return fn(ideal, v, n if n is not None else 2, budget=budget)
    if kind == "decomp":
        ctx_a, ctx_b = _block_contexts(rng, 2)
        ia = random_ideal(rng, ctx_a, max_gens=2, max_exp=2)
        v = random_monomial(rng, ctx_b, 2)
        return fn(ia, v, n if n is not None else 2, budget=budget)
    raise AssertionError(f"unhandled statement kind {kind}")
