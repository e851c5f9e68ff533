"""CLI contract: schemas, exit codes, determinism, and the published files."""

import json
import math
import os

import jsonschema
import numpy as np
import pytest

import twosheet as ts
from twosheet.cli import main
from twosheet.schemas import OUTPUT_SCHEMAS, all_schema_files

REPO_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def two_point_file(tmp_path):
    path = tmp_path / "two_point.json"
    ts.save_triple(ts.two_point_triple(2.0), path)
    return str(path)


@pytest.fixture
def scenario(tmp_path):
    def write(doc, name="scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return str(path)
    return write


class TestValidate:
    def test_two_point(self, capsys, two_point_file):
        code, doc = run_json(capsys, "validate", "--triple", two_point_file)
        assert code == 0
        assert doc["all_passed"] is True
        jsonschema.validate(doc, OUTPUT_SCHEMAS["validate"])

    def test_corrupted_triple_reports_failure(self, capsys, tmp_path):
        t = ts.two_point_triple(1.0)
        bad = ts.FiniteTriple(2, t.algebra_generators,
                              np.array([[0, 1], [2, 0]], dtype=complex))
        path = tmp_path / "bad.json"
        ts.save_triple(bad, path)
        code, doc = run_json(capsys, "validate", "--triple", str(path))
        assert code == 0  # failures are report entries, not errors
        assert doc["all_passed"] is False
        failed = {c["name"] for c in doc["checks"] if not c["passed"]}
        assert failed == {"dirac_hermitian"}


class TestDistance:
    def test_pure_states_m2(self, capsys, two_point_file):
        code, doc = run_json(capsys, "distance", "--triple", two_point_file,
                             "--state-a", "0", "--state-b", "1")
        assert code == 0
        assert doc["value"] == pytest.approx(0.5, abs=1e-9)
        jsonschema.validate(doc, OUTPUT_SCHEMAS["distance"])

    def test_weight_lists_and_oracle(self, capsys, two_point_file):
        code, doc = run_json(capsys, "distance", "--triple", two_point_file,
                             "--state-a", "[0.25, 0.75]", "--state-b", "[0.85, 0.15]",
                             "--oracle-step", "1e-3")
        assert code == 0
        assert doc["value"] == pytest.approx(0.6 / 2.0, abs=1e-9)
        assert doc["gap"] <= 2e-3
        jsonschema.validate(doc, OUTPUT_SCHEMAS["distance"])

    def test_infinite_distance_encoding(self, capsys, tmp_path):
        path = tmp_path / "degenerate.json"
        ts.save_triple(ts.two_point_triple(0.0), path)
        code, doc = run_json(capsys, "distance", "--triple", str(path),
                             "--state-a", "0", "--state-b", "1")
        assert code == 0
        assert doc["value"] == "inf"
        assert doc["maximizer"] is None
        jsonschema.validate(doc, OUTPUT_SCHEMAS["distance"])

    def test_unsupported_algebra_exit_1(self, capsys, tmp_path):
        path = tmp_path / "ew.json"
        ts.save_triple(ts.electroweak_triple(1.0), path)
        code, doc = run_json(capsys, "distance", "--triple", str(path),
                             "--state-a", "0", "--state-b", "1")
        assert code == 1
        assert doc["error"] == "UnsupportedAlgebra"


class TestCausal:
    def test_reflexive_same_sheet(self, capsys, scenario):
        doc = {"event_a": {"t": 0.0, "x": [0, 0, 0]},
               "event_b": {"t": 0.0, "x": [0, 0, 0]},
               "m": [1.0, 0.0], "sheets": [0, 0]}
        code, out = run_json(capsys, "causal", scenario(doc))
        assert code == 0
        assert out["related"] is True
        assert out["proper_time"] == 0.0
        jsonschema.validate(out, OUTPUT_SCHEMAS["causal"])

    def test_cross_sheet_threshold(self, capsys, scenario):
        doc = {"event_a": {"t": 0.0, "x": [0, 0, 0]},
               "event_b": {"t": math.pi / 2, "x": [0, 0, 0]},
               "m": [1.0, 0.0], "sheets": [0, 1]}
        code, out = run_json(capsys, "causal", scenario(doc))
        assert code == 0
        assert out["related"] is True
        assert out["threshold"] == pytest.approx(math.pi / 2)
        assert abs(out["L2m"]) < 1e-12

    def test_mixed_states(self, capsys, scenario):
        doc = {"event_a": {"t": 0.0, "x": [0, 0, 0]},
               "event_b": {"t": 2.0, "x": [0, 0, 0]},
               "m": [1.0, 0.0], "xis": [0.0, 1.0]}
        code, out = run_json(capsys, "causal", scenario(doc))
        assert code == 0
        assert out["related"] is True
        assert out["L2m"] is None
        assert out["threshold"] == pytest.approx(math.pi / 2)
        jsonschema.validate(out, OUTPUT_SCHEMAS["causal"])

    def test_degenerate_mass_infinite_threshold(self, capsys, scenario):
        doc = {"event_a": {"t": 0.0, "x": [0, 0, 0]},
               "event_b": {"t": 5.0, "x": [0, 0, 0]},
               "m": [0.0, 0.0], "sheets": [0, 1]}
        code, out = run_json(capsys, "causal", scenario(doc))
        assert code == 0
        assert out["related"] is False
        assert out["L2m"] == "inf"
        assert out["threshold"] == "inf"
        jsonschema.validate(out, OUTPUT_SCHEMAS["causal"])


class TestCone:
    def test_time_gradient(self, capsys, scenario):
        code, out = run_json(capsys, "cone", scenario({"k": [1.0, 0, 0, 0]}))
        assert code == 0
        assert out["causal"] is True
        assert out["worst_eigenvalue"] == pytest.approx(-1.0)
        jsonschema.validate(out, OUTPUT_SCHEMAS["cone"])

    def test_space_gradient(self, capsys, scenario):
        code, out = run_json(capsys, "cone", scenario({"k": [0.0, 1.0, 0, 0]}))
        assert code == 0
        assert out["causal"] is False
        assert out["worst_eigenvalue"] == pytest.approx(1.0)

    def test_two_sheet_element(self, capsys, scenario):
        doc = {"k0": [1.0, 0, 0, 0], "k1": [1.0, 0, 0, 0], "c0": 0.0, "c1": 0.0,
               "m": [1.0, 0.0],
               "box": {"t": [-1, 1], "x": [-1, 1], "y": [-1, 1], "z": [-1, 1], "n": 2}}
        code, out = run_json(capsys, "cone", scenario(doc))
        assert code == 0
        assert out["causal"] is True
        assert out["worst_eigenvalue"] == pytest.approx(-1.0)
        jsonschema.validate(out, OUTPUT_SCHEMAS["cone"])


class TestLightconeScan:
    def test_csv_boundary(self, capsys, scenario):
        doc = {"m": [1.0, 0.0], "t_min": 0.0, "t_max": 2.0, "t_steps": 5,
               "r_min": 0.0, "r_max": 1.0, "r_steps": 3}
        code, out = run(capsys, "lightcone-scan", scenario(doc))
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "t,r,sheet_crossing_allowed"
        assert len(lines) == 1 + 5 * 3
        rows = [line.split(",") for line in lines[1:]]
        # crossing from the origin needs proper time >= pi/2
        for t_str, r_str, flag in rows:
            t, r = float(t_str), float(r_str)
            expected = t >= r and t * t - r * r >= (math.pi / 2) ** 2 - 1e-12
            assert int(flag) == int(expected)


class TestClassify:
    def test_harmonic(self, capsys, scenario, tmp_path):
        path = tmp_path / "m4.json"
        ts.save_triple(ts.two_point_triple(4.0), path)
        doc = {"triple_file": str(path), "E": 5.0, "p": [3.0, 0.0, 0.0],
               "internal_index": 0}
        code, out = run_json(capsys, "classify", scenario(doc))
        assert code == 0
        assert out["class"] == "Harmonic"
        assert out["on_shell_E"] == pytest.approx(5.0)
        jsonschema.validate(out, OUTPUT_SCHEMAS["classify"])

    def test_internal_index_out_of_range_exit_1(self, capsys, scenario, two_point_file):
        doc = {"triple_file": two_point_file, "E": 1.0, "p": [0, 0, 0],
               "internal_index": 7}
        code, out = run_json(capsys, "classify", scenario(doc))
        assert code == 1
        assert out["error"] == "DomainError"


class TestFluctuate:
    def test_doublet_form(self, capsys, scenario):
        doc = {"m_e": [1.0, 0.0], "h1": [0.0, 0.0], "h2": [0.0, 0.0]}
        code, out = run_json(capsys, "fluctuate", scenario(doc))
        assert code == 0
        assert out["trace_phi_sq"] == pytest.approx(2.0)
        assert out["closed_form"] == pytest.approx(2.0)
        assert out["max_abs_diff"] <= 1e-10
        jsonschema.validate(out, OUTPUT_SCHEMAS["fluctuate"])

    def test_broken_form(self, capsys, scenario):
        doc = {"m_e": [2.0, 0.0], "v": 3.0, "h": 0.1}
        code, out = run_json(capsys, "fluctuate", scenario(doc))
        assert code == 0
        assert out["trace_phi_sq"] == pytest.approx(2 * 4 * 3.1**2)
        assert out["max_abs_diff"] <= 1e-10


class TestEWDispersion:
    def test_electron(self, capsys, scenario):
        doc = {"m_e": [1.0, 0.0], "v": 2.0, "h": 0.1, "p": [1.0, 0.0, 0.0],
               "state": "e_L"}
        code, out = run_json(capsys, "ew-dispersion", scenario(doc))
        assert code == 0
        assert out["E_on_shell"] == pytest.approx(math.sqrt(1 + 2.1**2))
        assert abs(out["residual"]) <= 1e-10
        jsonschema.validate(out, OUTPUT_SCHEMAS["ew-dispersion"])

    def test_neutrino(self, capsys, scenario):
        doc = {"m_e": [1.0, 0.0], "v": 2.0, "h": 0.1, "p": [1.0, 0.0, 0.0],
               "state": "nu_L"}
        code, out = run_json(capsys, "ew-dispersion", scenario(doc))
        assert code == 0
        assert out["E_on_shell"] == pytest.approx(1.0)
        assert abs(out["residual"]) <= 1e-10

    def test_unknown_state_exit_1(self, capsys, scenario):
        doc = {"m_e": [1.0, 0.0], "v": 2.0, "h": 0.1, "p": [1.0, 0.0, 0.0],
               "state": "tau_L"}
        code, out = run_json(capsys, "ew-dispersion", scenario(doc))
        assert code == 1
        assert out["error"] == "StateError"


class TestInputHandling:
    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        code, out = run_json(capsys, "causal", str(path))
        assert code == 2
        assert out["error"] == "MalformedInput"

    def test_unknown_field_rejected(self, capsys, scenario):
        doc = {"event_a": {"t": 0.0, "x": [0, 0, 0]},
               "event_b": {"t": 1.0, "x": [0, 0, 0]},
               "m": [1.0, 0.0], "sheets": [0, 0], "extra": 1}
        code, out = run_json(capsys, "causal", scenario(doc))
        assert code == 2
        assert out["error"] == "MalformedInput"

    def test_missing_file_exit_2(self, capsys):
        code, out = run_json(capsys, "causal", "/nonexistent/path.json")
        assert code == 2

    def test_bad_state_text_exit_2(self, capsys, two_point_file):
        code, out = run_json(capsys, "distance", "--triple", two_point_file,
                             "--state-a", "oops", "--state-b", "1")
        assert code == 2


class TestDeterminism:
    def test_byte_identical_across_runs(self, capsys, two_point_file):
        args = ("distance", "--triple", two_point_file, "--state-a", "0",
                "--state-b", "1", "--seed", "3")
        _, first = run(capsys, *args)
        _, second = run(capsys, *args)
        assert first == second

    def test_output_file(self, capsys, scenario, tmp_path):
        doc = {"k": [1.0, 0, 0, 0]}
        out_path = tmp_path / "result.json"
        code, out = run(capsys, "cone", "--output", str(out_path), scenario(doc))
        assert code == 0
        assert out == ""
        assert json.loads(out_path.read_text())["causal"] is True


def test_published_schemas_match_source():
    directory = os.path.join(REPO_ROOT, "schemas")
    files = all_schema_files()
    published = {f for f in os.listdir(directory) if f.endswith(".json")}
    assert published == set(files)
    for fname, schema in files.items():
        with open(os.path.join(directory, fname), encoding="utf-8") as fh:
            assert json.load(fh) == schema
