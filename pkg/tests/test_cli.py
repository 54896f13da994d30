import io
import json
import subprocess
import sys

import pytest

from cocart.bundle import load_bundle, serialize_bundle
from cocart.cli import EXIT_INPUT, EXIT_LIMIT, EXIT_OK, NO_MAGMA_EXISTS, main, run_check, run_demo_egger, run_synthesize
from cocart.errors import MissingStructure
from cocart.fixtures import fixture_path
from cocart.splitting import all_idempotents_split
from oracles import semigroup_count
from helpers import COCARTESIAN, NOT_COCARTESIAN, bundle


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def machine(*argv):
    code, out, _ = cli("--report", "machine", *argv)
    return code, json.loads(out)


class TestValidate:
    def test_ok(self):
        code, out, _ = cli("validate", str(fixture_path("join")))
        assert code == EXIT_OK and "valid" in out

    def test_missing_file(self, tmp_path):
        code, _, err = cli("validate", str(tmp_path / "nope.yaml"))
        assert code == EXIT_INPUT and err

    def test_parse_error_position(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("category:\n  objects: [a, b\n")
        code, doc = machine("validate", str(path))
        assert code == EXIT_INPUT
        assert doc["error"] == "ParseError" and doc["line"] >= 2

    def test_law_error_lists_violations(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(fixture_path("join").read_text().replace("[u, id0, u]", "[u, id0, id0]"))
        code, doc = machine("validate", str(path))
        assert code == EXIT_INPUT
        assert any("right-identity" in str(v) for v in doc["violations"])

    def test_unknown_fixture(self):
        assert cli("validate", "fixture:nope")[0] == EXIT_INPUT


class TestCheck:
    @pytest.mark.parametrize("name", COCARTESIAN)
    def test_all_true(self, name):
        code, doc = machine("check", f"fixture:{name}")
        assert code == EXIT_OK
        assert [v["holds"] for v in doc["verdicts"]] == [True] * 5
        assert doc["agreement"] is True
        assert all(v["replayed"] for v in doc["verdicts"])

    @pytest.mark.parametrize("name", [n for n in NOT_COCARTESIAN if n != "walking-idempotent"])
    def test_negative_verdicts_still_exit_zero(self, name):
        code, doc = machine("check", f"fixture:{name}")
        assert code == EXIT_OK
        assert not any(v["holds"] for v in doc["verdicts"])
        assert all(v["reason"] for v in doc["verdicts"])

    def test_text_report(self):
        code, out, _ = cli("check", "fixture:join")
        assert code == EXIT_OK
        assert "conditions agree" in out and out.count("holds") == 5

    def test_single_condition(self):
        code, doc = machine("check", "fixture:z2", "--condition", "d")
        assert code == EXIT_OK and [v["condition"] for v in doc["verdicts"]] == ["d"]

    def test_b_without_symmetry(self):
        code, _, err = cli("check", "fixture:pointed-pair", "--condition", "b")
        assert code == EXIT_INPUT and "symmetry" in err

    def test_b_without_symmetry_library(self):
        with pytest.raises(MissingStructure):
            run_check(bundle("pointed-pair"), "b")

    def test_all_without_symmetry_skips(self):
        report = run_check(bundle("pointed-pair"), "all")
        assert set(report.skipped) == {"b", "c"}

    def test_no_tensor(self):
        assert cli("check", "fixture:walking-idempotent")[0] == EXIT_INPUT

    def test_limit(self):
        code, _, err = cli("check", "fixture:join", "--limit", "0")
        assert code == EXIT_LIMIT and "limit" in err

    def test_limit_machine(self):
        code, doc = machine("check", "fixture:join", "--limit", "0")
        assert code == EXIT_LIMIT and doc["error"] == "SizeLimitExceeded"


class TestSynthesize:
    def test_join(self):
        report, out = run_synthesize(bundle("join"))
        assert out.category.objects == bundle("join").category.objects
        assert report.findings["all_coproducts"] is True

    def test_meet_has_no_magma(self):
        code, out, _ = cli("synthesize", "fixture:meet")
        assert code == EXIT_OK and NO_MAGMA_EXISTS in out

    def test_karoubi_output(self, tmp_path):
        path = tmp_path / "kar.yaml"
        code, doc = machine("synthesize", "fixture:walking-idempotent-tensor", "--karoubi", "-o", str(path))
        assert code == EXIT_OK
        assert doc["findings"]["all_idempotents_split"] is True
        written = load_bundle(path)
        assert all_idempotents_split(written.category)
        assert len(written.category.objects) > len(bundle("walking-idempotent-tensor").category.objects)

    def test_needs_tensor(self):
        assert cli("synthesize", "fixture:walking-idempotent")[0] == EXIT_INPUT


class TestKaroubi:
    def test_walking_idempotent(self, tmp_path):
        path = tmp_path / "kar.yaml"
        code, _, _ = cli("karoubi", "fixture:walking-idempotent", "-o", str(path))
        assert code == EXIT_OK
        kar = load_bundle(path)
        assert (len(kar.category.objects), len(kar.category.morphisms)) == (2, 5)
        assert serialize_bundle(kar) == path.read_text()

    def test_output_required(self):
        with pytest.raises(SystemExit) as info:
            main(["karoubi", "fixture:join"], out=io.StringIO(), err=io.StringIO())
        assert info.value.code == 2


class TestDemo:
    def test_two_two(self):
        code, doc = machine("demo", "egger", "--size-a", "2", "--size-b", "2", "--probe-bound", "3")
        assert code == EXIT_OK
        f = doc["findings"]
        assert f["witness"]["element"] == "mid(a0,b0)" and f["witness"]["image"] == "inl(a0)"
        assert f["summand_size"] == 4 and f["coproduct_verified"] is True
        assert f["coherence_ok"] and f["hypotheses_ok"]

    def test_empty_left(self):
        report = run_demo_egger(0, 2, 3, monoid_sizes=(1,))
        assert report.findings["witness"] is None
        assert report.findings["summand_size"] == 2

    def test_singletons(self):
        code, out, _ = cli("demo", "egger", "--size-a", "1", "--size-b", "1", "--probe-bound", "2")
        assert code == EXIT_OK
        assert "inl(a0)" in out and "size 2" in out

    def test_monoid_counts(self):
        counts = run_demo_egger(1, 1, 2).findings["monoid_counts"]
        assert counts == {str(n): [semigroup_count(n)] * 2 for n in (1, 2, 3)}

    def test_negative_size(self):
        assert cli("demo", "egger", "--size-a", "-1", "--size-b", "1")[0] == EXIT_INPUT


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cocart", "check", "fixture:terminal"], capture_output=True, text=True
    )
    assert out.returncode == 0 and "conditions agree" in out.stdout
