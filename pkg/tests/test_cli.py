import csv
import io
import json
import pathlib
import subprocess
import sys
from fractions import Fraction

import pytest

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "simplest_cubic", *args],
        capture_output=True,
        text=True,
    )


def test_analyze_outputs():
    out = run_cli("analyze", "286")
    assert out.returncode == 0
    assert "f=241" in out.stdout
    assert "D=58081" in out.stdout
    out = run_cli("analyze", "66")
    assert "f=13" in out.stdout
    out = run_cli("analyze", "3")
    assert out.returncode == 0
    assert "tame=false, no NIB" in out.stdout


def test_nib_golden_bytes():
    out = run_cli("nib", "286")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "nib286.md").read_text()
    out = run_cli("nib", "66")
    assert out.stdout == (GOLDEN / "nib66.md").read_text()


def test_nib_wild_exit_code():
    out = run_cli("nib", "9")
    assert out.returncode == 3
    assert "wild" in out.stderr


def test_gaussian_examples():
    out = run_cli("gaussian", "12", "--verify")
    assert out.returncode == 0
    assert "(1/9)(ρ^2-14ρ-5)" in out.stdout
    assert "X^3+X^2-2X-1" in out.stdout
    assert "verify=pass" in out.stdout
    out = run_cli("gaussian", "250")
    assert "X^3-X^2-3012X-32801" in out.stdout
    out = run_cli("gaussian", "0")
    assert out.returncode == 3


def test_table_golden_bytes():
    out = run_cli("table", "--from", "1", "--to", "500", "--filter", "mod27")
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "table2.md").read_text()
    out = run_cli("table", "--from", "1", "--to", "500", "--filter", "delta-ne-f")
    assert out.stdout == (GOLDEN / "table1_full.md").read_text()


def test_table_jobs_byte_stability():
    base = run_cli("table", "--from", "1", "--to", "200", "--filter", "mod27", "--jobs", "1")
    for jobs in ("2", "3"):
        other = run_cli("table", "--from", "1", "--to", "200", "--filter", "mod27", "--jobs", jobs)
        assert other.stdout == base.stdout


def test_table_empty_range_usage_error():
    out = run_cli("table", "--from", "5", "--to", "4")
    assert out.returncode == 2


def test_table_bad_flags():
    out = run_cli("table", "--from", "1", "--to", "10", "--filter", "bogus")
    assert out.returncode == 2


def test_json_schema_and_roundtrip():
    jsonschema = pytest.importorskip("jsonschema")
    import simplest_cubic

    schema_path = (
        pathlib.Path(simplest_cubic.__file__).parent / "schema" / "output_record.schema.json"
    )
    schema = json.loads(schema_path.read_text())
    out = run_cli("analyze", "286", "--format", "json")
    record = json.loads(out.stdout)
    jsonschema.validate(record, schema)
    out = run_cli("analyze", "3", "--format", "json")
    record = json.loads(out.stdout)
    jsonschema.validate(record, schema)
    assert record["generators"] is None and record["gaussian"] is None

    out = run_cli("nib", "66", "--format", "json")
    record = json.loads(out.stdout)
    jsonschema.validate(record, schema)
    # lossless round-trip of exact coordinates
    from simplest_cubic.nib import all_generators

    for got, g in zip(record["generators"], all_generators(66)):
        coords = tuple(Fraction(c) for c in got["coordinates"])
        assert coords == g.element.coeffs
        assert got["min_poly"]["coefficients"] == ["1"] + [
            str(int(c)) for c in (g.min_poly.p2, g.min_poly.p1, g.min_poly.p0)
        ]


def test_gaussian_json_with_verify():
    jsonschema = pytest.importorskip("jsonschema")
    import simplest_cubic

    schema_path = (
        pathlib.Path(simplest_cubic.__file__).parent / "schema" / "output_record.schema.json"
    )
    schema = json.loads(schema_path.read_text())
    out = run_cli("gaussian", "12", "--verify", "--format", "json")
    assert out.returncode == 0
    record = json.loads(out.stdout)
    jsonschema.validate(record, schema)
    assert record["gaussian"]["numeric_match"]["ok"] is True


def test_csv_format():
    out = run_cli("table", "--from", "1", "--to", "100", "--filter", "mod27", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out.stdout)))
    assert rows[0] == ["n", "delta", "conductor", "period", "min_poly"]
    assert rows[1][0] == "12"
    assert rows[1][3] == "(1/9)(ρ^2-14ρ-5)"
    out = run_cli("nib", "286", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out.stdout)))
    assert len(rows) == 7


def test_json_table():
    out = run_cli("table", "--from", "9", "--to", "14", "--filter", "tame", "--format", "json")
    records = json.loads(out.stdout)
    assert [r["n"] for r in records] == [10, 11, 12, 13, 14]  # 9 is wild


def test_verify_subcommand():
    out = run_cli("verify", "66")
    assert out.returncode == 0
    assert "pass" in out.stdout
    out = run_cli("verify", "9")
    assert out.returncode == 3
