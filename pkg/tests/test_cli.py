"""Command line surface: output shape, determinism, exit codes, schema."""

import json
import subprocess
import sys

import pytest

from importlib.resources import files as resource_files

import jsonschema

from artinv.cli import _stage_of, main
from artinv.errors import (
    CapExceededError,
    InputError,
    InternalInvariantError,
    NotArtinianError,
)

CUBE = """
field = "F2"
vars  = ["x", "y", "z"]
ideal = ["x^2", "y^2", "z^2"]
"""

SIX = """
field = "Q"
vars  = ["x", "y", "z", "w"]
ideal = ["x^2", "y^2", "z^2", "w^2", "x*y", "z*w"]
"""

APOLAR = """
field = "Q"
vars  = ["u", "v", "x", "y", "z"]
ideal = [
  "z^2", "y*z", "x*z", "u*z", "y^2", "x*y", "2*u*y - v*z",
  "x^2", "v*x", "u*x - 2*v*y", "v^3", "u*v^2", "u^2*v", "u^3",
]

[ideals.a]
gens = ["x", "y", "z", "u*v", "u^2", "v^2"]
"""

TEN = """
field = "Q"
vars  = ["x1", "x2", "x3", "x4", "x5"]
ideal = [
  "x1*x3 + x2*x3", "x1*x4 + x2*x4", "x3^2 + x1*x5 - x2*x5",
  "x4^2 + x1*x5 - x2*x5", "x1^2", "x2^2", "x3*x4", "x3*x5",
  "x4*x5", "x5^2",
]
"""

CHAR_FAMILY = """
field = "Q"
vars  = ["x1", "x2", "x3", "x4"]
ideal = ["x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4", "x3*x4",
         "x4^2 - x1*x2*x3"]
"""

TAIL = """
field = "Q"
vars  = ["x1", "x2", "x3"]
ideal = ["x1*x2", "x2*x3", "x1^2", "x1*x3^2 - x2^4", "x3^3 - x2^4"]
"""

PLANAR = """
field = "Q"
vars  = ["x", "y"]
ideal = ["x^2", "x*y", "y^3"]
"""


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("presentations")
    paths = {}
    for name, text in [("cube", CUBE), ("six", SIX), ("apolar", APOLAR),
                       ("ten", TEN), ("charfam", CHAR_FAMILY), ("tail", TAIL),
                       ("planar", PLANAR)]:
        path = root / f"{name}.alg"
        path.write_text(text)
        paths[name] = str(path)
    return paths


@pytest.fixture(scope="module")
def schema():
    text = resource_files("artinv").joinpath(
        "data/report.schema.json").read_text()
    return json.loads(text)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


class TestReport:
    def test_flagship(self, files, capsys):
        code, out, _ = run(capsys, "report", files["cube"])
        assert code == 0
        for line in ("length: 8", "hilbert function: (1,3,3,1)",
                     "gorenstein: yes", "complete intersection: yes",
                     "rees number: 4 [exhaustive]",
                     "dilworth number: 3 [oracle over 46 ideals]",
                     "verdict: not exact", "dilworth: 3", "rees: 4"):
            assert line in out

    def test_apolar_exact_six(self, files, capsys):
        code, out, _ = run(capsys, "report", files["apolar"])
        assert code == 0
        for line in ("length: 12", "hilbert function: (1,5,5,1)",
                     "verdict: exact", "value: 6", "certificate: ideal witness"):
            assert line in out

    def test_six_quadrics_not_gorenstein(self, files, capsys):
        code, out, _ = run(capsys, "report", files["six"])
        assert code == 0
        assert "gorenstein: no" in out
        assert "verdict: not exact" in out
        assert "certificate: monomial criterion failure" in out

    def test_header_lines(self, files, capsys):
        _, out, _ = run(capsys, "report", files["cube"])
        lines = out.splitlines()
        assert lines[0].startswith("command: report ")
        assert lines[1].startswith("presentation: ")
        assert "F2[x,y,z] (3 relations)" in lines[1]
        assert lines[-1].startswith("time: ")


class TestInvariantCommands:
    def test_hilbert(self, files, capsys):
        code, out, _ = run(capsys, "hilbert", files["ten"])
        assert code == 0
        assert "hilbert function: (1,5,5,1)" in out
        assert "admissible: yes" in out
        assert "symmetric: yes" in out

    def test_rees_modes(self, files, capsys):
        code, out, _ = run(capsys, "rees", files["cube"], "--mode", "degree1")
        assert code == 0 and "rees number: 4" in out and "mode: degree1" in out
        code, out, _ = run(capsys, "rees", files["ten"], "--mode", "generic")
        assert code == 0 and "rees number: 5" in out

    def test_dilworth_oracle_and_bounds(self, files, capsys):
        code, out, _ = run(capsys, "dilworth", files["cube"])
        assert code == 0
        assert "dilworth number: 3" in out
        assert "ideals enumerated: 46" in out
        assert "maximizers: 2" in out
        code, out, _ = run(capsys, "dilworth", files["apolar"])
        assert code == 0
        assert "dilworth bounds: 6 <= D <= 6" in out

    def test_dilworth_mode_forces_bounds(self, files, capsys):
        code, out, _ = run(capsys, "dilworth", files["cube"], "--mode",
                           "degree1")
        assert code == 0
        assert "dilworth bounds: 3 <= D <= 4" in out

    def test_socle(self, files, capsys):
        code, out, _ = run(capsys, "socle", files["cube"])
        assert code == 0
        assert "socle dimension: 1" in out and "basis: x*y*z" in out

    def test_mu(self, files, capsys):
        code, out, _ = run(capsys, "mu", files["apolar"], "a")
        assert code == 0
        assert "minimal generators: 6" in out
        assert "ideal dimension: 9" in out

    def test_annihilator(self, files, capsys):
        code, out, _ = run(capsys, "annihilator", files["apolar"], "u")
        assert code == 0
        assert "dimension: 6" in out

    def test_lefschetz(self, files, capsys):
        code, out, _ = run(capsys, "lefschetz", files["ten"],
                           "x1 - x2 + x3 + x4 + x5")
        assert code == 0
        assert "weak lefschetz: yes" in out
        assert "degree 1: 5 -> 5, rank 5, maximal" in out
        code, out, _ = run(capsys, "lefschetz", files["ten"],
                           "x1 + x2 + x3 + x4 + x5")
        assert code == 0
        assert "weak lefschetz: no" in out

    def test_exactness(self, files, capsys):
        code, out, _ = run(capsys, "exactness", files["ten"])
        assert code == 0
        assert "verdict: exact" in out and "value: 5" in out
        code, out, _ = run(capsys, "exactness", files["tail"])
        assert code == 0
        assert "value: 3" in out
        assert "element: -2*x1 - 2*x2 - 2*x3" in out

    def test_quotient_length(self, files, capsys):
        code, out, _ = run(capsys, "quotient-length", files["planar"], "y")
        assert code == 0
        assert "quotient length: 2" in out
        code, out, _ = run(capsys, "quotient-length", files["planar"],
                           "x", "y")
        assert code == 0
        assert "quotient length: 1" in out


class TestMacaulay:
    def test_inadmissible(self, capsys):
        code, out, _ = run(capsys, "macaulay", "1,3,1,2")
        assert code == 0
        assert "admissible: no" in out
        assert "step 2: 1 -> 2, bound 1, violated" in out

    def test_admissible_batch(self, capsys):
        for seq in ("1,3,1,1", "1,3,2,1", "1,3,3,1", "1,4,1,1"):
            code, out, _ = run(capsys, "macaulay", seq)
            assert code == 0 and "admissible: yes" in out

    def test_shape_tags(self, capsys):
        _, out, _ = run(capsys, "macaulay", "1,4,1,1")
        assert "stretched" in out
        _, out, _ = run(capsys, "macaulay", "1,3,2,1")
        assert "almost_stretched" in out

    def test_invalid_shape(self, capsys):
        code, out, _ = run(capsys, "macaulay", "2,1")
        assert code == 0
        assert "valid shape: no" in out and "admissible: no" in out

    def test_unparseable(self, capsys):
        code, _, err = run(capsys, "macaulay", "a,b")
        assert code == 1
        assert "artinv: input:" in err


class TestCharCompare:
    def test_rees_differs(self, files, capsys):
        code, out, _ = run(capsys, "rees", files["charfam"],
                           "--char-compare", "2")
        assert code == 0
        assert "rees number: 4" in out
        assert "compare field: F2" in out
        assert "rees number: 5" in out
        assert "differs: yes" in out

    def test_hilbert_agrees(self, files, capsys):
        code, out, _ = run(capsys, "hilbert", files["charfam"],
                           "--char-compare", "2")
        assert code == 0
        assert "differs: no" in out

    def test_exactness_pair(self, files, capsys):
        code, doc, _ = run_json(capsys, "exactness", files["charfam"],
                                "--char-compare", "2")
        assert code == 0
        results = doc["results"]
        assert results["base"]["kind"] == "exact"
        assert results["base"]["value"] == 4
        assert results["compare"]["results"]["kind"] == "not_exact"
        assert results["compare"]["results"]["rees"] == 5
        assert results["differs"] is True

    def test_composite_modulus_rejected(self, files, capsys):
        code, _, err = run(capsys, "rees", files["charfam"],
                           "--char-compare", "4")
        assert code == 1
        assert "prime" in err


class TestJson:
    COMMANDS = [
        ("report", "cube", ()),
        ("hilbert", "ten", ()),
        ("rees", "cube", ()),
        ("dilworth", "cube", ()),
        ("dilworth", "apolar", ()),
        ("socle", "cube", ()),
        ("mu", "apolar", ("a",)),
        ("annihilator", "apolar", ("u",)),
        ("lefschetz", "ten", ("x1 - x2 + x3 + x4 + x5",)),
        ("exactness", "six", ()),
        ("exactness", "apolar", ()),
        ("quotient-length", "planar", ("y",)),
    ]

    @pytest.mark.parametrize("command, name, extra", COMMANDS)
    def test_validates_against_schema(self, files, schema, capsys,
                                      command, name, extra):
        code, doc, _ = run_json(capsys, command, files[name], *extra)
        assert code == 0
        jsonschema.validate(doc, schema)
        assert doc["command"] == command
        assert len(doc["digest"]) == 12

    def test_macaulay_and_fixtures_validate(self, schema, capsys):
        code, doc, _ = run_json(capsys, "macaulay", "1,3,1,2")
        assert code == 0
        jsonschema.validate(doc, schema)
        assert "digest" not in doc

    def test_compare_validates(self, files, schema, capsys):
        for command, extra in [("rees", ()), ("exactness", ()),
                               ("hilbert", ()), ("socle", ()),
                               ("quotient-length", ("x1",))]:
            code, doc, _ = run_json(capsys, command, files["charfam"], *extra,
                                    "--char-compare", "2")
            assert code == 0
            jsonschema.validate(doc, schema)

    def test_unknown_verdict_shape(self, files, capsys, schema):
        # apolar without its ideal block ends undecided
        import pathlib
        path = pathlib.Path(files["apolar"]).with_name("bare.alg")
        path.write_text(APOLAR.split("[ideals.a]")[0])
        code, doc, _ = run_json(capsys, "exactness", str(path))
        assert code == 0
        jsonschema.validate(doc, schema)
        assert doc["results"] == {"kind": "unknown", "lower": 5, "upper": 6}


class TestDeterminism:
    def drop_time(self, text):
        lines = text.splitlines()
        assert lines[-1].startswith("time: ")
        return "\n".join(lines[:-1])

    def test_text_reports_identical(self, files, capsys):
        _, first, _ = run(capsys, "report", files["apolar"])
        _, second, _ = run(capsys, "report", files["apolar"])
        assert self.drop_time(first) == self.drop_time(second)

    def test_json_reports_identical(self, files, capsys):
        _, first, _ = run_json(capsys, "exactness", files["ten"])
        _, second, _ = run_json(capsys, "exactness", files["ten"])
        del first["timing"], second["timing"]
        assert first == second

    def test_digest_stable_under_formatting(self, files, capsys, tmp_path):
        noisy = tmp_path / "noisy.alg"
        noisy.write_text(CUBE.replace('ideal = ["x^2", "y^2", "z^2"]',
                                      '# relations\nideal = [ "x^2",\n'
                                      ' "y^2", "z^2" ]'))
        _, doc1, _ = run_json(capsys, "hilbert", files["cube"])
        _, doc2, _ = run_json(capsys, "hilbert", str(noisy))
        assert doc1["digest"] == doc2["digest"]


class TestExitCodes:
    def test_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.alg"
        bad.write_text('field = "Q"\n')
        code, _, err = run(capsys, "report", str(bad))
        assert code == 1 and "artinv: parse:" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "report", "/nonexistent/nope.alg")
        assert code == 1 and "artinv: parse:" in err

    def test_not_artinian(self, tmp_path, capsys):
        bad = tmp_path / "poly.alg"
        bad.write_text('field = "Q"\nvars = ["x", "y"]\nideal = ["x^2"]\n')
        code, _, err = run(capsys, "report", str(bad))
        assert code == 1 and "artinv: not-artinian:" in err

    def test_cap_exceeded(self, files, capsys):
        code, _, err = run(capsys, "rees", files["cube"], "--cap", "4")
        assert code == 2 and "artinv: cap:" in err

    def test_unknown_ideal(self, files, capsys):
        code, _, err = run(capsys, "mu", files["apolar"], "bogus")
        assert code == 1 and "artinv: input:" in err

    def test_impossible_mode(self, files, capsys):
        code, _, err = run(capsys, "rees", files["cube"], "--mode", "generic")
        assert code == 1 and "artinv: input:" in err

    def test_bad_element(self, files, capsys):
        code, _, err = run(capsys, "annihilator", files["cube"], "q + 1")
        assert code == 1 and "artinv: input:" in err

    def test_usage_error(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 1 and "artinv: input: usage:" in err

    def test_stage_mapping(self):
        assert _stage_of(CapExceededError("x"), False) == ("cap", 2)
        assert _stage_of(InternalInvariantError("x"), False) == ("internal", 3)
        assert _stage_of(NotArtinianError("x"), True) == ("not-artinian", 1)
        assert _stage_of(InputError("x"), True) == ("parse", 1)
        assert _stage_of(InputError("x"), False) == ("input", 1)


class TestCapPlumbing:
    def test_env_cap(self, files, capsys, monkeypatch):
        monkeypatch.setenv("ARTINV_CAP", "8")
        code, doc, _ = run_json(capsys, "rees", files["cube"])
        assert code == 0
        assert doc["results"]["mode"] == "degree1"

    def test_explicit_cap_beats_env(self, files, capsys, monkeypatch):
        monkeypatch.setenv("ARTINV_CAP", "8")
        code, doc, _ = run_json(capsys, "rees", files["cube"], "--cap", "300")
        assert code == 0
        assert doc["results"]["mode"] == "exhaustive"


class TestFixturesCommand:
    def test_all_pass(self, capsys):
        code, out, _ = run(capsys, "fixtures")
        assert code == 0
        assert ", 0 failed" in out.splitlines()[-2]

    def test_json_form(self, schema, capsys):
        code, doc, _ = run_json(capsys, "fixtures")
        assert code == 0
        jsonschema.validate(doc, schema)
        assert doc["results"]["failed"] == 0
        assert doc["results"]["passed"] == len(doc["results"]["checks"])


class TestSubprocess:
    def test_module_entry_point(self, files):
        proc = subprocess.run(
            [sys.executable, "-m", "artinv", "report", files["cube"]],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "length: 8" in proc.stdout
