import math

from hypothesis import given, settings, strategies as st

from sdepth.core import Monomial, MonomialIdeal, QuotientModule, make_context
from sdepth.poset import (
    Budget,
    build_poset,
    partition_to_decomposition,
    sdepth_decision,
    sdepth_exact,
    verify_decomposition,
)

BUDGET = Budget(time_limit=30.0)


@st.composite
def contexts(draw, max_vars=3):
    n = draw(st.integers(1, max_vars))
    return make_context(*[f"x{i + 1}" for i in range(n)])


@st.composite
def monomials(draw, ctx, max_exp=3):
    return Monomial(ctx, tuple(draw(st.integers(0, max_exp)) for _ in range(ctx.arity)))


@st.composite
def ideals(draw, ctx=None, max_gens=4, max_exp=3):
    if ctx is None:
        ctx = draw(contexts())
    gens = draw(st.lists(monomials(ctx, max_exp), min_size=1, max_size=max_gens))
    gens = [g for g in gens if not g.is_unit]
    return MonomialIdeal.from_gens(ctx, gens)


@st.composite
def small_modules(draw, max_volume=120):
    """Nonzero quotient modules with a small characteristic box."""
    ctx = draw(contexts(max_vars=3))
    max_exp = 2 if ctx.arity >= 3 else 3
    outer_gens = draw(st.lists(monomials(ctx, max_exp), min_size=1, max_size=3))
    outer_gens = [g for g in outer_gens if not g.is_unit]
    outer = MonomialIdeal.from_gens(ctx, outer_gens)
    if outer.is_zero:
        outer = MonomialIdeal.unit(ctx)
    style = draw(st.integers(0, 2))
    if style == 0:
        module = QuotientModule.of_ideal(outer)
    elif style == 1 and outer.is_proper:
        module = QuotientModule.of_quotient_ring(outer)
    else:
        mult = draw(monomials(ctx, 1))
        inner = outer.multiply(MonomialIdeal.from_gens(ctx, [mult])) if not mult.is_unit else outer.power(2)
        if inner == outer:
            module = QuotientModule.of_ideal(outer)
        else:
            module = QuotientModule(outer, inner)
    from sdepth.poset import degree_bound_g

    volume = math.prod(e + 1 for e in degree_bound_g(module))
    if volume > max_volume or module.outer.is_zero:
        module = QuotientModule.of_ideal(
            MonomialIdeal.from_gens(ctx, [ctx.variable(0)])
        )
    return module


@given(ideals())
@settings(max_examples=60, deadline=None)
def test_minimal_generators_are_incomparable(i):
    for a in i.gens:
        for b in i.gens:
            assert a == b or not a.divides(b)


@given(ideals())
@settings(max_examples=40, deadline=None)
def test_from_gens_idempotent(i):
    assert MonomialIdeal.from_gens(i.context, i.gens) == i


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_product_contained_in_intersection(data):
    ctx = data.draw(contexts())
    a = data.draw(ideals(ctx=ctx, max_gens=3, max_exp=2))
    b = data.draw(ideals(ctx=ctx, max_gens=3, max_exp=2))
    prod = a.multiply(b)
    meet = a.intersect(b)
    assert meet.contains_ideal(prod)


@given(st.data())
@settings(max_examples=30, deadline=None)
def test_power_additivity(data):
    ctx = data.draw(contexts(max_vars=2))
    i = data.draw(ideals(ctx=ctx, max_gens=3, max_exp=2))
    a = data.draw(st.integers(0, 3))
    b = data.draw(st.integers(0, 3))
    assert i.power(a).multiply(i.power(b)) == i.power(a + b)


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_colon_undoes_multiplication_by_a_monomial(data):
    ctx = data.draw(contexts())
    i = data.draw(ideals(ctx=ctx, max_gens=3, max_exp=2))
    m = data.draw(monomials(ctx, 2))
    if i.is_zero:
        return
    scaled = MonomialIdeal.from_gens(ctx, [g * m for g in i.gens])
    assert scaled.colon(m) == i


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_membership_matches_generator_divisibility(data):
    ctx = data.draw(contexts())
    i = data.draw(ideals(ctx=ctx))
    m = data.draw(monomials(ctx))
    assert i.contains(m) == any(g.divides(m) for g in i.gens)


@given(small_modules(), st.integers(0, 3))
@settings(max_examples=25, deadline=None)
def test_decision_is_monotone_in_k(module, k):
    poset = build_poset(module, budget=BUDGET)
    if k + 1 > poset.arity:
        return
    d1 = sdepth_decision(poset, k, budget=BUDGET)
    d2 = sdepth_decision(poset, k + 1, budget=BUDGET)
    if d1.status == "false":
        assert d2.status in ("false", "unknown")
    if d2.status == "true":
        assert d1.status in ("true", "unknown")


@given(small_modules())
@settings(max_examples=25, deadline=None)
def test_witness_always_verifies(module):
    res = sdepth_exact(module, budget=BUDGET)
    assert res.status == "exact"
    assert 0 <= res.value <= module.context.arity
    poset = build_poset(module, budget=BUDGET)
    decomposition = partition_to_decomposition(poset, res.witness)
    assert verify_decomposition(decomposition, module)
    assert decomposition.sdepth >= res.value
