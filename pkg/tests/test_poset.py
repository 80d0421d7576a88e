import random

import pytest

from sdepth.core import Monomial, MonomialIdeal, QuotientModule, make_context
from sdepth.poset import (
    Budget,
    ResourceCapError,
    build_poset,
    degree_bound_g,
    partition_to_decomposition,
    poset_to_dot,
    sdepth_decision,
    sdepth_exact,
    verify_decomposition,
    StanleyDecomposition,
)

from oracles import brute_sdepth

X1 = make_context("x1")
X2 = make_context("x1", "x2")
X3 = make_context("x1", "x2", "x3")


def ideal(ctx, *gens):
    return MonomialIdeal.from_gens(ctx, [Monomial(ctx, g) for g in gens])


class TestDegreeBound:
    def test_ideal_with_zero_inner(self):
        m = QuotientModule.of_ideal(ideal(X2, (2, 0), (0, 1)))
        assert degree_bound_g(m) == (2, 1)

    def test_quotient_ring(self):
        m = QuotientModule.of_quotient_ring(ideal(X2, (1, 1)))
        assert degree_bound_g(m) == (1, 1)

    def test_benchmark6_box(self):
        ctx = make_context(*[f"x{i}" for i in range(1, 7)])
        i = ideal(
            ctx,
            (6, 0, 0, 0, 0, 0), (5, 1, 0, 0, 0, 0), (1, 5, 0, 0, 0, 0),
            (0, 6, 0, 0, 0, 0), (4, 4, 1, 0, 0, 0), (4, 4, 0, 1, 0, 0),
            (4, 0, 0, 0, 2, 3), (0, 4, 0, 0, 3, 2),
        )
        assert degree_bound_g(QuotientModule.of_quotient_ring(i)) == (6, 6, 1, 1, 3, 3)


class TestBuildPoset:
    def test_quotient_by_variable(self):
        p = build_poset(QuotientModule.of_quotient_ring(ideal(X1, (1,))))
        assert p.cells == [(0,)]

    def test_principal_ideal(self):
        p = build_poset(QuotientModule.of_ideal(ideal(X1, (1,))))
        assert p.cells == [(1,)]

    def test_square_free_quotient(self):
        p = build_poset(QuotientModule.of_quotient_ring(ideal(X2, (1, 1))))
        assert sorted(p.cells) == [(0, 0), (0, 1), (1, 0)]

    def test_cell_cap(self):
        i = ideal(X3, (3, 3, 3))
        with pytest.raises(ResourceCapError):
            build_poset(QuotientModule.of_quotient_ring(i), budget=Budget(cell_cap=10))

    def test_g_must_dominate(self):
        with pytest.raises(ValueError):
            build_poset(QuotientModule.of_ideal(ideal(X2, (2, 0))), g=(1, 1))


class TestDecision:
    def test_square_free_two_vars(self):
        p = build_poset(QuotientModule.of_quotient_ring(ideal(X2, (1, 1))))
        d = sdepth_decision(p, 1)
        assert d.status == "true"
        assert d.partition.rho_min >= 1
        assert sdepth_decision(p, 2).status == "false"

    def test_k_zero_always_true(self):
        p = build_poset(QuotientModule.of_ideal(ideal(X2, (1, 1))))
        assert sdepth_decision(p, 0).status == "true"

    @pytest.mark.parametrize("n", [2, 3])
    def test_quotient_by_maximal_is_zero(self, n):
        ctx = make_context(*[f"x{i}" for i in range(n)])
        m = MonomialIdeal.from_gens(ctx, [ctx.variable(j) for j in range(n)])
        p = build_poset(QuotientModule.of_quotient_ring(m))
        assert sdepth_decision(p, 1).status == "false"

    def test_monotone_in_k(self):
        rng = random.Random(3)
        for _ in range(10):
            mod = _random_module(rng)
            p = build_poset(mod)
            statuses = [sdepth_decision(p, k).status for k in range(p.arity + 1)]
            assert "true" not in statuses[statuses.index("false"):] if "false" in statuses else True

    def test_budget_gives_unknown(self):
        ctx = make_context(*[f"x{i}" for i in range(5)])
        gens = [(2, 1, 0, 1, 0), (0, 2, 1, 0, 1), (1, 0, 2, 1, 0), (0, 1, 0, 2, 2)]
        i = MonomialIdeal.from_gens(ctx, [Monomial(ctx, g) for g in gens])
        p = build_poset(QuotientModule.of_quotient_ring(i))
        d = sdepth_decision(p, 3, Budget(time_limit=1e-4))
        assert d.status in ("unknown", "true", "false")  # never raises


class TestSdepthExact:
    def test_known_values(self):
        assert sdepth_exact(QuotientModule.of_quotient_ring(ideal(X2, (1, 1)))).value == 1
        maximal3 = MonomialIdeal.from_gens(X3, [X3.variable(j) for j in range(3)])
        assert sdepth_exact(QuotientModule.of_ideal(maximal3)).value == 2
        assert sdepth_exact(QuotientModule.of_quotient_ring(maximal3)).value == 0

    def test_free_module_full_depth(self):
        for ctx in (X1, X2, X3):
            m = QuotientModule.of_ideal(MonomialIdeal.unit(ctx))
            assert sdepth_exact(m).value == ctx.arity

    def test_zero_module_rejected(self):
        i = ideal(X2, (1, 1))
        with pytest.raises(ValueError):
            sdepth_exact(QuotientModule(i, i))

    def test_matches_brute_force(self):
        rng = random.Random(11)
        for _ in range(30):
            mod = _random_module(rng)
            p = build_poset(mod)
            assert sdepth_exact(mod).value == brute_sdepth(p)

    def test_g_independence(self):
        rng = random.Random(13)
        for _ in range(10):
            mod = _random_module(rng, max_vars=2)
            g = degree_bound_g(mod)
            base = sdepth_exact(mod).value
            bigger = tuple(gj + 1 for gj in g)
            assert sdepth_exact(mod, g=bigger).value == base


class TestCertificates:
    def test_interval_expansion_example(self):
        mod = QuotientModule.of_quotient_ring(ideal(X2, (1, 1)))
        res = sdepth_exact(mod)
        dec = partition_to_decomposition(build_poset(mod), res.witness)
        assert verify_decomposition(dec, mod)
        assert dec.sdepth == 1

    def test_full_ring_decomposition(self):
        mod = QuotientModule.of_ideal(MonomialIdeal.unit(X2))
        dec = StanleyDecomposition(X2, ((X2.one(), frozenset({0, 1})),))
        assert verify_decomposition(dec, mod)

    def test_missing_direction_fails(self):
        mod = QuotientModule.of_ideal(MonomialIdeal.unit(X2))
        dec = StanleyDecomposition(X2, ((X2.one(), frozenset({0})),))
        assert not verify_decomposition(dec, mod)

    def test_witnesses_always_verify(self):
        rng = random.Random(17)
        for _ in range(20):
            mod = _random_module(rng)
            p = build_poset(mod)
            res = sdepth_exact(mod)
            dec = partition_to_decomposition(p, res.witness)
            assert verify_decomposition(dec, mod)
            assert dec.sdepth >= res.value


class TestDotExport:
    def test_poset_dot_renders(self):
        mod = QuotientModule.of_quotient_ring(ideal(X2, (1, 1)))
        p = build_poset(mod)
        res = sdepth_exact(mod)
        dot = poset_to_dot(p, res.witness)
        assert dot.startswith("digraph")
        assert dot.count("->") == 2  # two covers below (0,0)


def _random_module(rng: random.Random, max_vars: int = 3) -> QuotientModule:
    """Small random I/J with a nonempty poset and modest box volume."""
    while True:
        n = rng.randint(1, max_vars)
        ctx = make_context(*[f"x{i}" for i in range(n)])
        gens = []
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(0, 2) for _ in range(n))
            if any(exps):
                gens.append(Monomial(ctx, exps))
        if not gens:
            continue
        outer = MonomialIdeal.from_gens(ctx, gens)
        style = rng.randint(0, 2)
        if style == 0:
            mod = QuotientModule.of_ideal(outer)
        elif style == 1:
            mod = QuotientModule.of_quotient_ring(outer)
        else:
            extra = Monomial(ctx, tuple(rng.randint(0, 1) for _ in range(n)))
            mod = QuotientModule(outer, outer.multiply(MonomialIdeal.from_gens(ctx, [extra])))
        g = degree_bound_g(mod)
        volume = 1
        for gj in g:
            volume *= gj + 1
        if volume > 200:
            continue
        if mod.is_zero:
            continue
        try:
            p = build_poset(mod)
        except ResourceCapError:
            continue
        if len(p) == 0:
            continue
        return mod
