import json
import subprocess
import sys
from fractions import Fraction

import jsonschema
import pytest

from conftest import BATTERY, GROUP_ORDER, random_descriptors
from jordanum import report_schema
from jordanum.arith import CycElt, sqrt_element
from jordanum.cli import FieldExpr, Indeterminate, NamedConst, Sqrt, Zeta, field_from_text, main, parse_field
from jordanum.errors import ParseError, SemanticError
from jordanum.fields import QQ, RR, Abelian, function_field, quadratic_field

SCHEMA = report_schema()


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


# -- parsing ---------------------------------------------------------------------


def test_parse_examples():
    assert field_from_text("QQ(sqrt(5), zeta(3))") == Abelian(15, (1, 4))
    assert field_from_text("QQ") == QQ
    assert field_from_text("  QQ ( i ,omega )") == field_from_text("QQ(zeta(12))")
    assert field_from_text("QQ(sqrt(-28/9))") == quadratic_field(-7)
    assert field_from_text("QQ(sqrt(5), t)") == function_field(quadratic_field(5))
    assert field_from_text("RR(t)") == function_field(RR)


def test_parse_ast():
    expr = parse_field("QQ(sqrt(1/2), zeta(8), i, t)")
    assert expr == FieldExpr("QQ", (Sqrt(1 / 2), Zeta(8), NamedConst("i"), Indeterminate()))


@pytest.mark.parametrize(
    "text, offset",
    [
        ("QQ(", 3),
        ("QQ(sqrt(5)", 10),
        ("QQ(sqrt(x))", 8),
        ("QX", 0),
        ("QQ(zeta(3)) extra", 12),
        ("QQ(sqrt(1/0))", 10),
        ("QQ(ω)", 3),
    ],
)
def test_parse_errors_carry_byte_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_field(text)
    assert info.value.offset == offset
    assert info.value.expected


def test_byte_offsets_count_utf8():
    with pytest.raises(ParseError) as info:
        parse_field("QQ(i, ω)")
    assert info.value.offset == len("QQ(i, ".encode())
    with pytest.raises(ParseError) as info:
        parse_field("QQ(i) é")
    assert info.value.offset == 6


@pytest.mark.parametrize("text", ["QQ(sqrt(0))", "RR(sqrt(-1))", "CC(i)", "QQ(t, t)", "QQ(zeta(0))"])
def test_semantic_errors(text):
    with pytest.raises((SemanticError, ParseError)):
        field_from_text(text)


def test_canonical_strings_round_trip(battery):
    fields = list(battery.values()) + random_descriptors(60, seed=99)
    fields += [function_field(K) for K in random_descriptors(10, seed=3)]
    for K in fields:
        assert field_from_text(str(K)) == K, K


# -- commands --------------------------------------------------------------------


@pytest.mark.parametrize("text", sorted(BATTERY))
def test_jordan_json_matches_schema_and_battery(capsys, text):
    code, rep = run_json(capsys, "jordan", text)
    assert code == 0
    jsonschema.validate(rep, SCHEMA)
    assert tuple(rep["jordan"][g]["value"] for g in GROUP_ORDER) == BATTERY[text]


@pytest.mark.parametrize("text", sorted(BATTERY))
def test_props_json_matches_schema(capsys, text):
    code, rep = run_json(capsys, "props", text)
    assert code == 0
    rep["jordan"] = {}
    jsonschema.validate(rep, SCHEMA)


def test_jordan_text(capsys):
    code, out, _ = run(capsys, "jordan", "CC", "--group", "pgl3")
    assert code == 0
    assert out.startswith("PGL3: 360")
    assert "PGL3:(i)" in out


def test_jordan_bad_group(capsys):
    code, _, err = run(capsys, "jordan", "QQ", "--group", "gl3")
    assert code == 1 and "error" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "jordan", "QQ(sqrt(5)")
    assert code == 1
    assert "byte 10" in err


def test_witness_json(capsys):
    code, rep = run_json(capsys, "witness", "QQ(sqrt(-7))", "--group", "pgl3")
    assert code == 0
    jsonschema.validate(rep, SCHEMA)
    assert len(rep["witness"]["generators"]) == 3


def test_witness_text(capsys):
    code, out, _ = run(capsys, "witness", "QQ", "--group", "pgl3")
    data = json.loads(out)
    assert code == 0 and data["expected_jordan"] == 6 and data["level"] == 1


def test_verify_qq_pgl3(capsys):
    code, out, _ = run(capsys, "verify", "QQ", "--group", "pgl3")
    assert code == 0
    assert "closure order 24" in out and "bruteforce J 6" in out and "matched" in out


def test_verify_json(capsys):
    code, rep = run_json(capsys, "verify", "QQ(i)")
    assert code == 0
    jsonschema.validate(rep, SCHEMA)
    for g in GROUP_ORDER:
        v = rep["verification"][g]
        assert v["matched"] == (v["bruteforce_jordan"] == rep["jordan"][g]["value"])


def test_verify_mismatch_exit_code(capsys):
    # no finite subgroup of SL2 over a real field has Jordan constant 2
    code, rep = run_json(capsys, "verify", "QQ", "--group", "sl2")
    assert code == 2
    v = rep["verification"]["sl2"]
    assert v["matched"] is False and v["witness"] is None


def test_verify_cap_too_small(capsys):
    code, _, err = run(capsys, "verify", "QQ(sqrt(-7))", "--group", "pgl3", "--cap", "50")
    assert code == 1 and "cap" in err


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("JORDANUM_CAP", "30")
    code, _, err = run(capsys, "verify", "QQ", "--group", "pgl3")
    assert code == 0
    code, _, err = run(capsys, "verify", "QQ(sqrt(5))", "--group", "pgl3")
    assert code == 1 and "cap 30" in err


def test_order_n(capsys):
    code, out, _ = run(capsys, "order-n", "QQ(sqrt(-7))", "--n", "7")
    assert code == 0 and out.startswith("true")
    code, rep = run_json(capsys, "order-n", "QQ(sqrt(-7))", "--n", "7")
    assert rep["exists"] and (rep["i"], rep["j"]) == (2, 4)
    lam = CycElt(rep["lambda"]["level"], [Fraction(n, d) for n, d in rep["lambda"]["coeffs"]])
    assert lam == (sqrt_element(-7) - 1) * Fraction(1, 2)
    code, out, _ = run(capsys, "order-n", "QQ", "--n", "5")
    assert code == 0 and out.strip() == "false"
    code, _, err = run(capsys, "order-n", "QQ", "--n", "9")
    assert code == 1


def test_table_preserves_order(capsys, tmp_path):
    listing = tmp_path / "fields.txt"
    names = ["QQ(i)", "CC", "# a comment", "", "QQ", "QQ(sqrt(-7))"]
    listing.write_text("\n".join(names) + "\n", encoding="utf-8")
    code, out, _ = run(capsys, "table", "--file", str(listing), "--json")
    assert code == 0
    reps = [json.loads(line) for line in out.strip().split("\n")]
    assert [r["jordan"]["pgl3"]["value"] for r in reps] == [24, 360, 6, 168]
    for r in reps:
        jsonschema.validate(r, SCHEMA)


def test_table_reports_bad_lines(capsys, tmp_path):
    listing = tmp_path / "fields.txt"
    listing.write_text("QQ\nQQ(\nCC\n", encoding="utf-8")
    code, out, _ = run(capsys, "table", "--file", str(listing))
    lines = out.strip().split("\n")
    assert code == 1 and len(lines) == 3
    assert "error" in lines[1] and lines[2].startswith("CC")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jordanum", "jordan", "RR", "--group", "pgl3"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("PGL3: 60")
