from itertools import product

import pytest
from hypothesis import given, strategies as st

from cocart import kernels
from cocart.characterize import coproduct_idempotent, mediating_morphism
from cocart.concrete import (
    EMPTY,
    EggerMagmal,
    FinSetCategory,
    FinSetObj,
    Inl,
    Inr,
    Mid,
    SetMor,
    all_functions,
    carrier,
    check_diagram2_egger,
    compose,
    diagram2_map,
    egger_alpha,
    egger_coherence,
    egger_coherence_violations,
    egger_hypotheses_report,
    egger_lambda,
    egger_monoid_count,
    egger_monoid_law_violations,
    egger_rho,
    egger_sigma,
    egger_synthesize_coproduct,
    egger_tensor,
    egger_tensor_mor,
    identity,
    left_band_identity_magma,
    left_band_magma,
    monoid_semigroup_correspondence,
    mu_from_operation,
)
from cocart.core import is_coproduct, is_initial
from cocart.errors import CompositionError, InvariantViolated, SizeLimitExceeded
from oracles import semigroup_count

A2, B2 = carrier(2, "a"), carrier(2, "b")


def sets(max_size=3, prefix="x"):
    return st.integers(0, max_size).map(lambda n: carrier(n, prefix))


@st.composite
def functions(draw, max_size=3):
    a = draw(sets(max_size, "x"))
    b = draw(sets(max_size, "y"))
    if len(a) and not len(b):
        b = carrier(1, "y")
    images = draw(st.lists(st.sampled_from(b.elements), min_size=len(a), max_size=len(a))) if len(a) else []
    return SetMor(a, b, images)


@st.composite
def composable(draw):
    f = draw(functions())
    c = draw(sets(3, "z"))
    if len(f.cod) and not len(c):
        c = carrier(1, "z")
    images = draw(st.lists(st.sampled_from(c.elements), min_size=len(f.cod), max_size=len(f.cod))) if len(f.cod) else []
    return f, SetMor(f.cod, c, images)


class TestSets:
    def test_distinct_labels(self):
        with pytest.raises(ValueError):
            FinSetObj(("x", "x"))

    def test_function_checks(self):
        with pytest.raises(ValueError):
            SetMor(A2, B2, ("b0",))
        with pytest.raises(ValueError):
            SetMor(A2, B2, ("b0", "zz"))

    def test_compose_typing(self):
        with pytest.raises(CompositionError):
            compose(identity(A2), identity(B2))

    def test_hom_sizes(self):
        c = FinSetCategory(2)
        assert [len(c.hom(carrier(i), carrier(j))) for i in range(3) for j in range(3)] == [1, 1, 1, 0, 1, 2, 0, 1, 4]
        assert is_initial(c, EMPTY)

    def test_element_reprs(self):
        assert repr(Mid(Inl("a0"), Inr("b0"))) == "mid(inl(a0),inr(b0))"


class TestTensor:
    @pytest.mark.parametrize("n, m, size", [(2, 2, 8), (1, 1, 3), (0, 3, 3), (3, 0, 3), (3, 2, 11)])
    def test_sizes(self, n, m, size):
        assert len(egger_tensor(carrier(n, "a"), carrier(m, "b"))) == size

    def test_order(self):
        t = egger_tensor(carrier(1, "a"), carrier(2, "b"))
        assert [repr(x) for x in t] == ["inl(a0)", "mid(a0,b0)", "mid(a0,b1)", "inr(b0)", "inr(b1)"]

    def test_empty_left_is_right(self):
        assert list(egger_tensor(EMPTY, B2)) == [Inr("b0"), Inr("b1")]

    @given(sets(), sets())
    def test_identities(self, a, b):
        assert egger_tensor_mor(identity(a), identity(b)) == identity(egger_tensor(a, b))

    @given(composable(), composable())
    def test_interchange(self, fg1, fg2):
        (f, f2), (g, g2) = fg1, fg2
        lhs = egger_tensor_mor(compose(f2, f), compose(g2, g))
        rhs = compose(egger_tensor_mor(f2, g2), egger_tensor_mor(f, g))
        assert lhs == rhs

    def test_constant_collapses_first_coordinate(self):
        f = SetMor(A2, carrier(1, "c"), ("c0", "c0"))
        image = egger_tensor_mor(f, identity(B2))
        assert {image(Mid(x, y)) for x in A2 for y in B2} == {Mid("c0", "b0"), Mid("c0", "b1")}


class TestCoherence:
    def test_empty(self):
        k = egger_coherence(EMPTY, EMPTY, EMPTY)
        assert k.alpha.images == () and k.sigma.images == ()

    def test_braiding_on_singletons(self):
        a, b = carrier(1, "a"), carrier(1, "b")
        s = egger_coherence(a, b, a).sigma
        assert s.images == (Inr("a0"), Mid("b0", "a0"), Inl("b0"))

    def test_pentagon_on_singletons(self):
        one = carrier(1, "a")
        assert len(egger_tensor(egger_tensor(one, one), one)) == 7
        assert egger_coherence_violations((one,), 2) == []

    def test_mixed_carriers(self):
        assert egger_coherence_violations((carrier(2, "a"), carrier(1, "b"), EMPTY), 2) == []

    def test_unitors(self):
        assert egger_lambda(A2).images == (Inr("a0"), Inr("a1"))
        assert egger_rho(A2).images == (Inl("a0"), Inl("a1"))

    def test_braiding_is_involutive(self):
        a, b = carrier(2, "a"), carrier(3, "b")
        assert compose(egger_sigma(b, a), egger_sigma(a, b)) == identity(egger_tensor(a, b))

    def test_alpha_regroups(self):
        a, b, c = carrier(1, "a"), carrier(1, "b"), carrier(1, "c")
        alpha = egger_alpha(a, b, c)
        assert alpha(Mid(Mid("a0", "b0"), "c0")) == Mid("a0", Mid("b0", "c0"))
        assert alpha(Inl(Inr("b0"))) == Inr(Inl("b0"))
        assert alpha(Mid(Inl("a0"), "c0")) == Mid("a0", Inr("c0"))


class TestLeftBand:
    def test_singleton(self):
        _, mu = left_band_magma(carrier(1, "a"))
        assert set(mu.images) == {"a0"}

    def test_first_component(self):
        a = carrier(2, "a")
        _, mu = left_band_magma(a)
        assert mu(Mid("a0", "a1")) == "a0" and mu(Inr("a1")) == "a1"

    def test_swap_naturality(self):
        a = carrier(2, "a")
        swap = SetMor(a, a, ("a1", "a0"))
        _, mu = left_band_magma(a)
        assert compose(swap, mu) == compose(mu, egger_tensor_mor(swap, swap))

    def test_hypotheses_over_probes(self):
        report = egger_hypotheses_report((carrier(3, "a"), carrier(2, "b")), probe_bound=3)
        assert report.ok

    def test_right_band_also_natural(self):
        # the hypotheses do not pin the magma down: the right band is natural too
        from cocart.concrete import _Components
        from cocart.magmal import IdentityMagma, validate_identity_magma

        def right(a):
            return SetMor.from_function(
                egger_tensor(a, a), a, lambda e: e.right if isinstance(e, Mid) else e.value
            )

        g = IdentityMagma(_Components(lambda a: left_band_magma(a)[0]), _Components(right))
        assert validate_identity_magma(EggerMagmal(2), g).ok

    def test_constant_family_not_natural(self):
        from cocart.concrete import _Components
        from cocart.magmal import IdentityMagma, validate_identity_magma

        def first_label(a):
            return SetMor.from_function(
                egger_tensor(a, a), a, lambda e: e.value if not isinstance(e, Mid) else a.elements[0]
            )

        g = IdentityMagma(_Components(lambda a: left_band_magma(a)[0]), _Components(first_label))
        assert "mu-naturality" in validate_identity_magma(EggerMagmal(2), g).laws()


class TestDiagram2:
    @pytest.mark.parametrize("n, m", [(1, 1), (2, 2), (3, 2)])
    def test_witness(self, n, m):
        w = check_diagram2_egger(carrier(n, "a"), carrier(m, "b"))
        assert (w.element, w.image) == (Mid("a0", "b0"), Inl("a0"))

    @pytest.mark.parametrize("n, m", [(0, 2), (2, 0), (0, 0)])
    def test_no_witness(self, n, m):
        assert check_diagram2_egger(carrier(n, "a"), carrier(m, "b")) is None

    def test_trace(self):
        w = check_diagram2_egger(A2, B2)
        values = [v for _, v in w.trace]
        assert values == [Mid("a0", "b0"), Mid(Inl("a0"), Inr("b0")), Mid(Inl("a0"), Inr("b0")), Inl("a0")]

    @given(st.integers(0, 3), st.integers(0, 3))
    def test_every_mid_goes_left(self, n, m):
        a, b = carrier(n, "a"), carrier(m, "b")
        e = diagram2_map(a, b)
        for x in egger_tensor(a, b):
            expected = Inl(x.left) if isinstance(x, Mid) else x
            assert e(x) == expected

    @given(st.integers(0, 3), st.integers(0, 3))
    def test_generic_idempotent_agrees(self, n, m):
        a, b = carrier(n, "a"), carrier(m, "b")
        generic = coproduct_idempotent(EggerMagmal(2), left_band_identity_magma(), a, b).e
        assert generic == diagram2_map(a, b)

    def test_mediating_morphism_picks_first(self):
        x = carrier(3, "x")
        f = SetMor(A2, x, ("x0", "x1"))
        g = SetMor(B2, x, ("x2", "x2"))
        k = mediating_morphism(EggerMagmal(2), left_band_identity_magma(), f, g)
        assert k(Mid("a1", "b0")) == "x1" and k(Inr("b0")) == "x2"


class TestSynthesis:
    @pytest.mark.parametrize("n, m, size", [(2, 2, 4), (3, 1, 4), (0, 2, 2), (1, 1, 2)])
    def test_summand(self, n, m, size):
        out = egger_synthesize_coproduct(carrier(n, "a"), carrier(m, "b"))
        assert len(out.summand) == size and out.verified

    def test_empty_left(self):
        out = egger_synthesize_coproduct(EMPTY, B2)
        assert list(out.summand) == [Inr("b0"), Inr("b1")]

    def test_tensor_itself_is_not_a_coproduct(self):
        from cocart.characterize import weak_coprojections

        weak = weak_coprojections(EggerMagmal(2), left_band_identity_magma(), carrier(1, "a"), carrier(1, "b"))
        assert not is_coproduct(FinSetCategory(2), weak)


class TestMonoids:
    @pytest.mark.parametrize("n", [0, 1, 2, 3])
    def test_counts_match_independent_oracle(self, n):
        monoids, semigroups = monoid_semigroup_correspondence(n)
        assert monoids == semigroups == semigroup_count(n)

    def test_frozen_values(self):
        assert [semigroup_count(n) for n in range(4)] == [1, 1, 8, 113]

    def test_limit(self):
        with pytest.raises(SizeLimitExceeded):
            egger_monoid_count(4)
        with pytest.raises(SizeLimitExceeded):
            monoid_semigroup_correspondence(3, limit=100)

    @pytest.mark.parametrize("n", [1, 2])
    def test_mid_component_reduction_exhaustive(self, n):
        m = carrier(n, "m")
        eta = all_functions(EMPTY, m)[0]
        for table in product(range(n), repeat=n * n):
            laws = egger_monoid_law_violations(m, eta, mu_from_operation(m, table))
            assert (not laws) == kernels.is_associative_operation(list(table), n)

    @given(st.lists(st.integers(0, 2), min_size=9, max_size=9))
    def test_mid_component_reduction_sampled(self, table):
        m = carrier(3, "m")
        eta = all_functions(EMPTY, m)[0]
        laws = egger_monoid_law_violations(m, eta, mu_from_operation(m, table))
        assert (not laws) == kernels.is_associative_operation(table, 3)

    def test_left_band_is_a_monoid(self):
        m = carrier(3, "m")
        eta, mu = left_band_magma(m)
        assert egger_monoid_law_violations(m, eta, mu) == []

    def test_non_unital_mu_fails(self):
        m = carrier(2, "m")
        eta = all_functions(EMPTY, m)[0]
        mu = SetMor.from_function(egger_tensor(m, m), m, lambda e: "m0")
        assert {"left-unit", "right-unit"} <= set(egger_monoid_law_violations(m, eta, mu))


def test_coherence_rejects_on_failure(monkeypatch):
    import cocart.concrete as eg

    monkeypatch.setattr(eg, "egger_coherence_violations", lambda *a, **k: [("pentagon",)])
    with pytest.raises(InvariantViolated):
        eg.egger_coherence(A2, B2, A2)
