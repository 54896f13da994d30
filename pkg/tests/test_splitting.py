from itertools import product

import pytest

from cocart.characterize import check_condition_d
from cocart.core import (
    Cospan,
    Functor,
    discrete_category,
    is_coproduct,
    is_initial,
    terminal_category,
    validate_category,
    validate_functor,
)
from cocart.errors import InvariantViolated
from cocart.fixtures import FIXTURE_NAMES
from cocart.magmal import validate_identity_magma, validate_magmal
from cocart.splitting import (
    Idempotent,
    WeakAdjunctionData,
    WeakColimitData,
    all_idempotents_split,
    check_retraction_lemma,
    colimit_from_weak,
    comparison_is_bijective,
    idempotents,
    is_splitting,
    karoubi_envelope,
    split_idempotent,
    splitting_comparison,
    splittings,
    transport_magmal_to_karoubi,
    validate_weak_adjunction,
    validate_weak_colimit,
    weak_adjunction_idempotent,
    weak_coproduct_adjunction,
    weak_coproduct_colimit,
    weak_initial_adjunction,
    weak_initial_colimit,
)
from helpers import COCARTESIAN, bundle


def cat(name):
    return bundle(name).category


class TestRetractionLemma:
    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_every_idempotent(self, name):
        c = cat(name)
        for e in idempotents(c):
            assert check_retraction_lemma(e, c) == (e.e == c.identity(e.obj))

    def test_walking_idempotent(self):
        c = cat("walking-idempotent")
        assert check_retraction_lemma(Idempotent("*", "e"), c) is False
        assert check_retraction_lemma(Idempotent("*", "1"), c) is True

    def test_bogus_retraction_table_is_rejected(self):
        from cocart.core import FinCat

        c = cat("walking-idempotent")
        table = dict(c.compose_table)
        table[("e", "e")] = "1"
        table[("1", "e")] = "1"
        assert not validate_category(FinCat(c.objects, c.morphisms, c.identities, table)).ok


class TestSplit:
    def test_identity_splits_trivially(self):
        c = cat("join")
        sp = split_idempotent(Idempotent("1", "id1"), c)
        assert (sp.summand, sp.retraction, sp.section) == ("1", "id1", "id1")

    def test_walking_idempotent_does_not_split(self):
        assert split_idempotent(Idempotent("*", "e"), cat("walking-idempotent")) is None

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_first_splitting_is_first_of_all(self, name):
        c = cat(name)
        for e in idempotents(c):
            found = splittings(e, c)
            first = split_idempotent(e, c)
            assert (first is None) == (not found)
            if found:
                assert first == found[0]
                assert all(is_splitting(c, sp) for sp in found)

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_splittings_are_isomorphic(self, name):
        c, _ = karoubi_envelope(cat(name))
        for e in idempotents(c):
            found = splittings(e, c)
            for a, b in product(found, repeat=2):
                splitting_comparison(c, a, b)


class TestKaroubi:
    @pytest.mark.parametrize(
        "name, objects, morphisms",
        [("terminal", 1, 1), ("join", 2, 3), ("walking-idempotent", 2, 5), ("z2", 1, 2), ("double-unit", 2, 4)],
    )
    def test_sizes(self, name, objects, morphisms):
        kar, emb = karoubi_envelope(cat(name))
        assert (len(kar.objects), len(kar.morphisms)) == (objects, morphisms)
        assert validate_category(kar).ok

    def test_walking_idempotent_hom_counts(self):
        kar, _ = karoubi_envelope(cat("walking-idempotent"))
        one, e = "(*|1)", "(*|e)"
        counts = {(a, b): len(kar.hom(a, b)) for a in (one, e) for b in (one, e)}
        assert counts == {(one, one): 2, (one, e): 1, (e, one): 1, (e, e): 1}

    def test_image_of_e_splits(self):
        c = cat("walking-idempotent")
        kar, emb = karoubi_envelope(c)
        e = Idempotent(emb.ob("*"), emb("e"))
        sp = split_idempotent(e, kar)
        assert sp is not None and sp.summand == "(*|e)"

    @pytest.mark.parametrize("name", FIXTURE_NAMES)
    def test_every_idempotent_splits(self, name):
        kar, emb = karoubi_envelope(cat(name))
        assert all_idempotents_split(kar)
        assert validate_functor(emb).ok


class TestTransport:
    def test_join_is_unchanged_up_to_renaming(self):
        b = bundle("join")
        m, g, s = transport_magmal_to_karoubi(b.magmal, b.magma, b.symmetry)
        assert len(m.base.objects) == 2 and len(m.base.morphisms) == 3
        assert m.unit == "(0|id0)"
        assert g.eta["(1|id1)"] == "u:(0|id0)->(1|id1)"

    def test_terminal(self):
        b = bundle("terminal")
        m, g, s = transport_magmal_to_karoubi(b.magmal, b.magma, b.symmetry)
        assert len(m.base.morphisms) == 1

    def test_walking_idempotent_tensor(self):
        b = bundle("walking-idempotent-tensor")
        m, g, s = transport_magmal_to_karoubi(b.magmal, None, b.symmetry)
        assert validate_magmal(m).ok and g is None
        assert all_idempotents_split(m.base)

    @pytest.mark.parametrize("name", COCARTESIAN)
    def test_quasi_symmetry_survives_transport(self, name):
        # recorded per fixture: the transported magma still satisfies the quasi-symmetry equation
        b = bundle(name)
        m, g, s = transport_magmal_to_karoubi(b.magmal, b.magma, b.symmetry)
        assert validate_identity_magma(m, g).ok
        assert check_condition_d(m, g).holds


def _contrived_walking_idempotent_data():
    """Weak adjunction from the point into the walking idempotent whose chosen transpose is ``e``."""
    c = cat("walking-idempotent")
    one = terminal_category()
    J = Functor(one, one, {"*": "*"}, {"id*": "id*"})
    L = Functor(one, c, {"*": "*"}, {"id*": "1"})
    R = Functor(c, one, {"*": "*"}, {"1": "id*", "e": "id*"})
    return WeakAdjunctionData(J, L, R, {"*": "id*"}, {("*", "*"): {"id*": "e"}})


class TestWeakAdjunctions:
    def test_join_coproduct_data(self):
        b = bundle("join")
        w = weak_coproduct_adjunction(b.magmal, b.magma)
        assert validate_weak_adjunction(w).ok
        e = weak_adjunction_idempotent(w, ("0", "1"))
        assert (e.obj, e.e) == ("1", "id1")

    def test_contrived_data_gives_e(self):
        w = _contrived_walking_idempotent_data()
        assert validate_weak_adjunction(w).ok
        assert weak_adjunction_idempotent(w, "*").e == "e"
        assert not comparison_is_bijective(w)

    def test_broken_section(self):
        w = _contrived_walking_idempotent_data()
        w.flat[("*", "*")] = {}
        assert "flat-typing" in validate_weak_adjunction(w).laws()

    @pytest.mark.parametrize("name", COCARTESIAN)
    def test_identities_iff_bijective(self, name):
        b = bundle(name)
        for w in (weak_coproduct_adjunction(b.magmal, b.magma), weak_initial_adjunction(b.magmal, b.magma)):
            assert validate_weak_adjunction(w).ok
            C = w.L.target
            all_ids = all(
                weak_adjunction_idempotent(w, x).e == C.identity(w.L.ob(x)) for x in w.J.source.objects
            )
            assert all_ids == comparison_is_bijective(w) is True

    def test_not_idempotent_is_reported(self):
        c = cat("z2")
        one = terminal_category()
        w = WeakAdjunctionData(
            Functor(one, one, {"*": "*"}, {"id*": "id*"}),
            Functor(one, c, {"*": "*"}, {"id*": "1"}),
            Functor(c, one, {"*": "*"}, {"1": "id*", "g": "id*"}),
            {"*": "id*"},
            {("*", "*"): {"id*": "g"}},
        )
        with pytest.raises(InvariantViolated):
            weak_adjunction_idempotent(w, "*")


class TestWeakColimits:
    def test_join_binary(self):
        b = bundle("join")
        w = weak_coproduct_colimit(b.magmal, b.magma, "0", "1")
        assert validate_weak_colimit(w, b.category).ok
        summand, legs = colimit_from_weak(w, b.category)
        assert (summand, legs[0], legs[1]) == ("1", "u", "id1")
        assert is_coproduct(b.category, Cospan(summand, legs[0], legs[1]))

    def test_terminal(self):
        b = bundle("terminal")
        summand, legs = colimit_from_weak(weak_coproduct_colimit(b.magmal, b.magma, "*", "*"), b.category)
        assert (summand, legs) == ("*", {0: "1", 1: "1"})

    def test_empty_diagram_gives_initial(self):
        b = bundle("join")
        w = weak_initial_colimit(b.magmal, b.magma)
        assert validate_weak_colimit(w, b.category).ok
        summand, legs = colimit_from_weak(w, b.category)
        assert summand == "0" and legs == {} and is_initial(b.category, summand)

    def test_unsplittable(self):
        c = cat("walking-idempotent")
        shape = discrete_category([], name="0")
        diagram = Functor(shape, c, {}, {})
        w = WeakColimitData(diagram, "*", {}, {("*", ()): "e"})
        assert validate_weak_colimit(w, c).ok
        assert colimit_from_weak(w, c) is None
