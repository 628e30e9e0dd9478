"""Command-line interface: exit codes, JSON documents, schema conformance.

Everything runs through subprocess so stream routing and exit codes are
observed exactly as a shell would see them.
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from endospec.cli import SCHEMA, parse_descriptor, serialize_model

EXAMPLE_DESCRIPTOR = {
    "kind": "abelian_en",
    "q": "6",
    "isogeny_matrix": [["1", "-5"], ["1", "1"]],
}

GRASSMANNIAN_DESCRIPTOR = {
    "kind": "grassmannian",
    "q": "4",
    "k": 2,
    "n": 4,
    "variant": "involution",
}

GENERIC_DESCRIPTOR = {
    "kind": "generic",
    "q": "4",
    "d": 1,
    "charpolys": [["1", "-1"], ["1", "-4", "4"], ["1", "-4"]],
    "hodge": [[1], [1, 1], [0, 1, 0]],
}

CORRUPTED_DESCRIPTOR = {
    "kind": "generic",
    "q": "6",
    "d": 1,
    "charpolys": [["1", "-1"], ["1", "-5", "4"], ["1", "-6"]],
}


def run_cli(*argv, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "endospec.cli", *argv],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def write_descriptor(tmp_path, doc, name="model.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


def validate(payload, def_name):
    jsonschema.validate(payload, {**SCHEMA, "oneOf": [{"$ref": f"#/$defs/{def_name}"}]})


def test_verify_pass(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    proc = run_cli("verify", path, "--primes", "2,3", "--json-only")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    validate(payload, "report")
    assert len(payload["checks"]) == 61
    assert payload["model"]["q"] == "6"
    assert proc.stderr == ""


def test_verify_notes_and_exit_on_failure(tmp_path):
    path = write_descriptor(tmp_path, CORRUPTED_DESCRIPTOR)
    proc = run_cli("verify", path, "--primes", "2")
    assert proc.returncode == 1
    payload = json.loads(proc.stdout)
    validate(payload, "report")
    assert "verdict: FAIL" in proc.stderr
    assert "FAIL functional_equation degree=1" in proc.stderr
    quiet = run_cli("verify", path, "--primes", "2", "--quiet")
    assert quiet.returncode == 1
    assert quiet.stderr == ""


def test_verify_out_file(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    out = tmp_path / "report.json"
    proc = run_cli("verify", path, "--primes", "2,3", "--out", str(out))
    assert proc.returncode == 0
    assert proc.stdout == ""
    assert "verdict: PASS" in proc.stderr
    direct = run_cli("verify", path, "--primes", "2,3", "--json-only")
    assert out.read_text() == direct.stdout


def test_verify_bad_inputs(tmp_path):
    good = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    missing = run_cli("verify", str(tmp_path / "nope.json"), "--primes", "2")
    assert missing.returncode == 2
    assert missing.stderr.startswith("endospec:")
    bad_json = tmp_path / "broken.json"
    bad_json.write_text("{not json")
    assert run_cli("verify", str(bad_json), "--primes", "2").returncode == 2
    unknown = write_descriptor(
        tmp_path, {**EXAMPLE_DESCRIPTOR, "surprise": 1}, "unknown.json"
    )
    proc = run_cli("verify", unknown, "--primes", "2")
    assert proc.returncode == 2
    assert "surprise" in proc.stderr
    assert run_cli("verify", good, "--primes", "4").returncode == 2
    assert run_cli("verify", good, "--primes", "").returncode == 2
    low = run_cli("verify", good, "--primes", "2", "--precision", "10")
    assert low.returncode == 2


def test_polygons_document(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    proc = run_cli("polygons", path, "--prime", "2", "--degree", "1", "--json-only")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    validate(payload, "polygonOutput")
    assert payload["newton"] == [[0, "0"], [4, "2"]]
    assert payload["hodge"] == [[0, "0"], [2, "0"], [4, "2"]]
    assert payload["comparison"]["status"] == "holds"
    assert payload["comparison"]["endpoint_equal"] is True
    assert payload["comparison"]["identical"] is False


def test_polygons_without_hodge(tmp_path):
    doc = {k: v for k, v in GENERIC_DESCRIPTOR.items() if k != "hodge"}
    path = write_descriptor(tmp_path, doc)
    proc = run_cli("polygons", path, "--prime", "2", "--degree", "1", "--json-only")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    validate(payload, "polygonOutput")
    assert payload["hodge"] is None
    assert payload["comparison"] is None


def test_polygons_svg_deterministic(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    svgs = []
    for name in ("a.svg", "b.svg"):
        target = tmp_path / name
        proc = run_cli(
            "polygons", path, "--prime", "3", "--degree", "2",
            "--svg", str(target), "--quiet",
        )
        assert proc.returncode == 0
        svgs.append(target.read_bytes())
    assert svgs[0] == svgs[1]
    assert svgs[0].startswith(b"<svg")


def test_polygons_degree_errors(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    proc = run_cli("polygons", path, "--prime", "2", "--degree", "9")
    assert proc.returncode == 2
    assert "out of range" in proc.stderr
    gpath = write_descriptor(tmp_path, GRASSMANNIAN_DESCRIPTOR, "g.json")
    odd = run_cli("polygons", gpath, "--prime", "2", "--degree", "1")
    assert odd.returncode == 2
    assert "no cohomology" in odd.stderr


def test_zeta_document(tmp_path):
    path = write_descriptor(tmp_path, EXAMPLE_DESCRIPTOR)
    proc = run_cli("zeta", path, "--order", "6", "--json-only")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    validate(payload, "zetaOutput")
    assert payload["chi"] == 0
    assert payload["functional_equation"]["holds"] is True
    assert payload["series_consistent"] is True
    assert payload["series_order"] == 6


def test_zeta_inapplicable_functional_equation(tmp_path):
    path = write_descriptor(tmp_path, CORRUPTED_DESCRIPTOR)
    proc = run_cli("zeta", path, "--json-only")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    validate(payload, "zetaOutput")
    assert payload["functional_equation"] is None
    assert payload["series_consistent"] is True


def test_schema_command_matches_docs(tmp_path):
    proc = run_cli("schema", "--json-only")
    assert proc.returncode == 0
    docs = Path(__file__).resolve().parent.parent / "docs" / "schema.json"
    assert proc.stdout == docs.read_text()
    jsonschema.Draft202012Validator.check_schema(json.loads(proc.stdout))


def test_no_subcommand_is_usage_error():
    proc = run_cli()
    assert proc.returncode == 2


@pytest.mark.parametrize(
    "doc",
    [
        EXAMPLE_DESCRIPTOR,
        GRASSMANNIAN_DESCRIPTOR,
        GENERIC_DESCRIPTOR,
        {
            "kind": "abelian",
            "q": "5",
            "d": 1,
            "matrix": [["2", "-1"], ["1", "2"]],
        },
    ],
)
def test_descriptor_round_trip(doc):
    validate(doc, "descriptor")
    model = parse_descriptor(doc)
    canon = serialize_model(model)
    validate(canon, "descriptor")
    again = serialize_model(parse_descriptor(canon))
    assert canon == again
    assert parse_descriptor(canon).betti_numbers == model.betti_numbers


def test_descriptor_accepts_plain_integers():
    doc = {"kind": "abelian_en", "q": 6, "isogeny_matrix": [[1, -5], [1, 1]]}
    model = parse_descriptor(doc)
    assert model.q == 6
    assert serialize_model(model) == EXAMPLE_DESCRIPTOR
