import json
import pathlib

import jsonschema
import pytest

from sdepth.cli import EXIT_FAILS, EXIT_INPUT, EXIT_OK, EXIT_UNKNOWN, main
from sdepth.parsing import parse_ideal

ROOT = pathlib.Path(__file__).resolve().parent.parent
CI = str(ROOT / "ideals" / "ci.ideal")
PAIR = str(ROOT / "ideals" / "pair.ideal")
EXAMPLE = str(ROOT / "ideals" / "example210.ideal")
SCHEMA = json.loads((ROOT / "docs" / "report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    payloads = [json.loads(line) for line in out.splitlines() if line.strip()]
    for payload in payloads:
        jsonschema.validate(payload, SCHEMA)
    return code, payloads


class TestSdepthCommand:
    def test_quotient_of_ci_square(self, capsys):
        code, out, _ = run(capsys, "sdepth", CI, "--module", "S/J^2")
        assert code == EXIT_OK
        assert "= 1" in out

    def test_json_agrees_with_text(self, capsys):
        code, payloads = run_json(capsys, "sdepth", CI, "--module", "S/J^2")
        assert code == EXIT_OK
        assert payloads[0]["value"] == 1
        assert payloads[0]["status"] == "exact"
        assert payloads[0]["witness"]

    def test_default_module_is_ideal(self, capsys):
        code, payloads = run_json(capsys, "sdepth", CI)
        assert code == EXIT_OK
        assert payloads[0]["module"] == "I"
        assert payloads[0]["value"] == 2

    def test_budget_exhaustion_exits_unknown(self, capsys):
        code, _, err = run(capsys, "sdepth", EXAMPLE, "--module", "S/I", "--cell-cap", "10")
        assert code == EXIT_UNKNOWN

    def test_export_poset(self, capsys, tmp_path):
        dot = tmp_path / "poset.dot"
        code, _, _ = run(capsys, "sdepth", CI, "--module", "S/J", "--export-poset", str(dot))
        assert code == EXIT_OK
        assert dot.read_text().startswith("digraph")

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "sdepth", str(ROOT / "nope.ideal"))
        assert code == EXIT_INPUT
        assert "error" in err

    def test_bad_module_expression(self, capsys):
        code, _, err = run(capsys, "sdepth", CI, "--module", "Q^^2")
        assert code == EXIT_INPUT


class TestDepthCommand:
    def test_quotient(self, capsys):
        code, payloads = run_json(capsys, "depth", CI, "--module", "S/J")
        assert code == EXIT_OK
        assert payloads[0]["depth_quotient"] == 1
        assert payloads[0]["depth_ideal"] == 2

    def test_socle_shortcut_reported(self, capsys):
        code, payloads = run_json(capsys, "depth", EXAMPLE, "--module", "S/I")
        assert code == EXIT_OK
        assert payloads[0]["depth_quotient"] == 0
        assert payloads[0]["method"] == "socle-shortcut"

    def test_noncyclic_module_rejected(self, capsys):
        code, _, err = run(capsys, "depth", CI, "--module", "I/I^2")
        assert code == EXIT_INPUT


class TestDimCommand:
    def test_ci(self, capsys):
        code, payloads = run_json(capsys, "dim", CI)
        assert code == EXIT_OK
        assert payloads[0]["dim"] == 1

    def test_example_ideal(self, capsys):
        # V(I) is cut out by x1 = x2 = 0, so dim(A/I) = 6 - 2 = 4
        code, payloads = run_json(capsys, "dim", EXAMPLE)
        assert code == EXIT_OK
        assert payloads[0]["dim"] == 4


class TestPowerCommand:
    def test_round_trips_through_parser(self, capsys):
        code, payloads = run_json(capsys, "power", CI, "3")
        assert code == EXIT_OK
        reparsed = parse_ideal(payloads[0]["ideal"])
        direct = parse_ideal(pathlib.Path(CI).read_text()).power(3)
        assert reparsed == direct

    def test_gen_cap(self, capsys):
        code, _, err = run(capsys, "power", EXAMPLE, "4", "--gen-cap", "10")
        assert code == EXIT_UNKNOWN


class TestVerifyCommand:
    def test_thm_2_15_on_file(self, capsys):
        code, out, _ = run(capsys, "verify", "thm_2_15", "--ideal", CI, "--n-max", "2")
        assert code == EXIT_OK
        assert "thm_2_15: holds" in out

    def test_pair_statement_on_split_file(self, capsys):
        code, payloads = run_json(capsys, "verify", "lemma_2_1", "--ideal", PAIR)
        assert code == EXIT_OK
        assert payloads[0]["verdict"] == "holds"

    def test_pair_statement_needs_split(self, capsys):
        code, _, err = run(capsys, "verify", "lemma_2_1", "--ideal", CI)
        assert code == EXIT_INPUT

    def test_random_instances(self, capsys):
        code, payloads = run_json(
            capsys, "verify", "prop_2_2", "--random", "0", "--count", "3"
        )
        assert code == EXIT_OK
        assert len(payloads) == 3
        assert all(p["verdict"] == "holds" for p in payloads)

    def test_random_parallel_matches_serial(self, capsys):
        _, serial = run_json(capsys, "verify", "lemma_2_1", "--random", "1", "--count", "2")
        _, parallel = run_json(
            capsys, "verify", "lemma_2_1", "--random", "1", "--count", "2", "--jobs", "2"
        )
        assert serial == parallel

    def test_unknown_statement(self, capsys):
        code, _, err = run(capsys, "verify", "thm_9_9", "--random", "0")
        assert code == EXIT_INPUT
        assert "known:" in err

    def test_needs_ideal_or_seed(self, capsys):
        code, _, err = run(capsys, "verify", "lemma_2_1")
        assert code == EXIT_INPUT


class TestSequenceCommand:
    def test_sdepth_table(self, capsys):
        code, payloads = run_json(capsys, "sequence", CI, "2")
        assert code == EXIT_OK
        rows = payloads[0]["rows"]
        assert [r["n"] for r in rows] == [1, 2]
        assert all(r["ring_quotient"] == 1 and r["shell"] == 1 for r in rows)

    def test_depth_table(self, capsys):
        code, payloads = run_json(capsys, "sequence", CI, "2", "--depth")
        assert code == EXIT_OK
        assert all(r["ring_quotient"] == 1 for r in payloads[0]["rows"])
        assert all(r["shell"] is None for r in payloads[0]["rows"])


class TestExportCommand:
    def test_poset_to_stdout(self, capsys):
        code, out, _ = run(capsys, "export", "poset", CI, "--module", "S/J")
        assert code == EXIT_OK
        assert out.startswith("digraph")

    def test_lattice_to_file(self, capsys, tmp_path):
        target = tmp_path / "lat.dot"
        code, _, _ = run(capsys, "export", "lattice", CI, "-o", str(target))
        assert code == EXIT_OK
        assert target.read_text().startswith("digraph")


class TestEnvBudgets:
    def test_env_time_limit(self, capsys, monkeypatch):
        monkeypatch.setenv("SDEPTH_CELL_CAP", "10")
        code, _, _ = run(capsys, "sdepth", EXAMPLE, "--module", "S/I")
        assert code == EXIT_UNKNOWN

    def test_nonpositive_budget_rejected(self, capsys):
        code, _, err = run(capsys, "sdepth", CI, "--time-limit", "0")
        assert code == EXIT_INPUT
