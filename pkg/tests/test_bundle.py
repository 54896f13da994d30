import pytest
import yaml
from hypothesis import given, strategies as st

from cocart.bundle import Bundle, load_bundle, parse_bundle, serialize_bundle, validate_bundle
from cocart.cli import run_karoubi
from cocart.errors import LawError, ParseError, ResolveError
from cocart.fixtures import FIXTURE_NAMES, build_fixture, fixture_path
from helpers import bundle

JOIN_TEXT = fixture_path("join").read_text()


def edited(text, old, new):
    assert old in text
    return text.replace(old, new, 1)


def test_join_parses():
    b = parse_bundle(JOIN_TEXT)
    assert b.name == "join"
    assert list(b.category.objects) == ["0", "1"]
    assert b.magmal.unit == "0" and b.symmetry is not None and b.magma is not None


def test_non_composable_pair_is_a_law_error():
    text = edited(JOIN_TEXT, "  - [u, id0, u]\n", "  - [u, id0, u]\n  - [u, u, u]\n")
    with pytest.raises(LawError) as info:
        parse_bundle(text)
    assert not info.value.report.ok


def test_broken_identity_law():
    text = edited(JOIN_TEXT, "[u, id0, u]", "[u, id0, id0]")
    with pytest.raises(LawError) as info:
        parse_bundle(text)
    assert "right-identity" in info.value.report.laws()


def test_validate_false_skips_laws():
    text = edited(JOIN_TEXT, "[u, id0, u]", "[u, id0, id0]")
    b = parse_bundle(text, validate=False)
    assert not validate_bundle(b).ok


@pytest.mark.parametrize("cut", [40, 200, 433])
def test_truncated_text_has_position(cut):
    text = JOIN_TEXT[:cut] + "\n  - [unterminated\n"
    with pytest.raises(ParseError) as info:
        parse_bundle(text)
    assert info.value.line is not None and info.value.column is not None


def test_truncation_position_points_near_the_break():
    text = "category:\n  objects: [a, b\n"
    with pytest.raises(ParseError) as info:
        parse_bundle(text)
    assert info.value.line >= 2


def test_dangling_morphism():
    text = edited(JOIN_TEXT, "[id1, u, u]", "[id1, v, u]")
    with pytest.raises(ResolveError) as info:
        parse_bundle(text)
    assert "'v'" in str(info.value)
    assert info.value.line == JOIN_TEXT.splitlines().index("  - [id1, u, u]") + 1


def test_dangling_object():
    with pytest.raises(ResolveError):
        parse_bundle(edited(JOIN_TEXT, "unit: '0'", "unit: '2'"))


@pytest.mark.parametrize(
    "text",
    ["", "- 1\n- 2\n", "category: []\n", "meta: {}\n", "category:\n  objects: [a]\n"],
)
def test_structural_errors(text):
    with pytest.raises(ParseError):
        parse_bundle(text)


def test_unknown_section():
    with pytest.raises(ParseError) as info:
        parse_bundle(JOIN_TEXT + "extra: 1\n")
    assert "extra" in str(info.value)
    assert info.value.line == len(JOIN_TEXT.splitlines()) + 1


def test_symmetry_needs_magmal():
    doc = yaml.safe_load(JOIN_TEXT)
    del doc["magmal"], doc["magma"]
    with pytest.raises(ParseError):
        parse_bundle(yaml.safe_dump(doc))


def test_numeric_names_are_strings():
    doc = yaml.safe_load(JOIN_TEXT)
    text = yaml.safe_dump(doc).replace("'0'", "0").replace("'1'", "1")
    assert parse_bundle(text) == parse_bundle(JOIN_TEXT)


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_shipped_files_match_builders(name):
    assert load_bundle(fixture_path(name)) == build_fixture(name)
    assert fixture_path(name).read_text() == serialize_bundle(build_fixture(name))


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_parse_serialize_roundtrip(name):
    b = bundle(name)
    assert parse_bundle(serialize_bundle(b)) == b


@pytest.mark.parametrize("name", ["terminal", "join", "z2", "walking-idempotent", "double-unit"])
def test_karoubi_output_roundtrips(name):
    kar = run_karoubi(bundle(name))
    text = serialize_bundle(kar)
    assert serialize_bundle(parse_bundle(text)) == text


@given(st.sampled_from(FIXTURE_NAMES), st.randoms(use_true_random=False))
def test_serialize_is_canonical_under_reordering(name, rng):
    # reordering rows and keys in the text does not change the value or the canonical form
    doc = yaml.safe_load(serialize_bundle(bundle(name)))
    for section in doc.values():
        for key, value in section.items():
            if key != "morphisms" and isinstance(value, list) and value and isinstance(value[0], list):
                rng.shuffle(value)
    shuffled = dict(reversed(list(doc.items())))
    b = parse_bundle(yaml.safe_dump(shuffled, sort_keys=False))
    assert b == bundle(name)
    assert serialize_bundle(b) == serialize_bundle(bundle(name))


def test_equality_is_by_document():
    assert bundle("join") == build_fixture("join")
    assert bundle("join") != bundle("meet")
    assert (bundle("join") == 3) is False
    assert isinstance(bundle("join"), Bundle)
