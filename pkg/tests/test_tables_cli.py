"""Table emitters and the command-line interface."""

import csv
import io
import json
from fractions import Fraction

import pytest
from click.testing import CliRunner

from braidchar import reference
from braidchar.cli import main
from braidchar.partitions import parse_partition
from braidchar.tables import FORMATS, TABLE_NAMES, emit_table


def run_cli(*args):
    return CliRunner().invoke(main, args)


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


# ---------------------------------------------------------------------------
# emitters


def test_measures_table_matches_reference():
    for n in (4, 5):
        header, rows = parse_csv(emit_table("measures", n, "csv"))
        expected = {
            lam: (size, zl, scaled)
            for lam, size, zl, scaled in reference.MEASURE_ROWS[n]
        }
        assert len(rows) == len(expected)
        for row in rows:
            lam = parse_partition(row[0])
            size, zl, scaled = expected[lam]
            assert int(row[1]) == size
            assert int(row[2]) == zl
            alphas = row[3:]
            assert len(alphas) == len(scaled)
            for text, s in zip(alphas, scaled):
                assert Fraction(text) == Fraction(s, zl)


def test_triangle_tables_match_reference():
    betti = json.loads(emit_table("betti", 9, "json"))
    for row in betti["rows"]:
        n = row["n"]
        assert row["values"] == list(reference.BETTI_TRIANGLE[n][:n])
    adims = json.loads(emit_table("a-dims", 9, "json"))
    for row in adims["rows"]:
        n = row["n"]
        assert row["values"] == list(reference.A_DIM_TRIANGLE[n][:n])


def test_decomp_tables_match_reference():
    h1 = json.loads(emit_table("h1-decomp", 9, "json"))
    for row in h1["rows"]:
        n = row["n"]
        got_h = {
            parse_partition(t["partition"]): t["multiplicity"]
            for t in row["h1"]["terms"]
        }
        got_a = {
            parse_partition(t["partition"]): t["multiplicity"]
            for t in row["a1"]["terms"]
        }
        assert got_h == reference.h1_decomposition(n)
        assert got_a == reference.a1_decomposition(n)
    a2 = json.loads(emit_table("a2-decomp", 9, "json"))
    for row in a2["rows"]:
        got = {
            parse_partition(t["partition"]): t["multiplicity"] for t in row["terms"]
        }
        assert got == reference.a2_decomposition(row["n"])


def test_all_emitters_render_all_formats():
    for name in TABLE_NAMES:
        for fmt in FORMATS:
            text = emit_table(name, None, fmt)
            assert text.endswith("\n")
            assert len(text) > 10


def test_emitter_range_errors():
    with pytest.raises(ValueError):
        emit_table("measures", 13)
    with pytest.raises(ValueError):
        emit_table("betti", 0)
    with pytest.raises(ValueError):
        emit_table("a2-decomp", 2)
    with pytest.raises(ValueError):
        emit_table("nonesuch", 4)
    with pytest.raises(ValueError):
        emit_table("betti", 5, "yaml")


def test_text_format_has_header_note():
    text = emit_table("measures", 4, "text")
    assert text.startswith("#")
    assert "reverse-lex" in text


# ---------------------------------------------------------------------------
# CLI


def test_cli_measure_json():
    res = run_cli("measure", "--n", "4", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["n"] == 4
    assert data["order"] == "reverse-lex"
    rows = {r["partition"]: r for r in data["rows"]}
    assert rows["1,1,1,1"]["alpha"] == ["1/24", "-5/24", "1/4", "0"]
    assert rows["2,1,1"]["class_size"] == 6
    assert rows["2,1,1"]["centralizer_order"] == 4


def test_cli_measure_evaluation():
    res = run_cli("measure", "--n", "5", "--z", "-1", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    values = {r["partition"]: r["value"] for r in data["rows"]}
    assert values["1,1,1,1,1"] == "1/2"
    assert values["2,1,1,1"] == "1/2"
    assert values["5"] == 0


def test_cli_measure_per_element():
    res = run_cli(
        "measure", "--n", "5", "--z", "-1", "--per-element", "--format", "json"
    )
    data = json.loads(res.output)
    values = {r["partition"]: r["value"] for r in data["rows"]}
    assert values["2,1,1,1"] == "1/20"


def test_cli_cycle_poly():
    res = run_cli("cycle-poly", "--lambda", "2,1,1", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["coefficients"] == ["0", "0", "1/4", "-1/2", "1/4"]
    assert data["degree"] == 4
    res = run_cli("cycle-poly", "--lambda", "2,1,1", "--z", "7")
    assert res.exit_code == 0
    assert "441" in res.output


def test_cli_hchar_csv():
    res = run_cli("hchar", "--n", "4", "--format", "csv")
    assert res.exit_code == 0
    header, rows = parse_csv(res.output)
    assert header == ["partition", "k=0", "k=1", "k=2", "k=3"]
    table = {row[0]: [int(v) for v in row[1:]] for row in rows}
    assert table["1,1,1,1"] == [1, 6, 11, 6]
    assert table["2,2"] == [1, 2, -1, -2]


def test_cli_achar_json_schema():
    res = run_cli("achar", "--n", "5", "--format", "json")
    data = json.loads(res.output)
    assert data["kind"] == "chi"
    assert data["n"] == 5
    assert data["ks"] == [0, 1, 2, 3, 4]
    identity = next(r for r in data["rows"] if r["partition"] == "1,1,1,1,1")
    assert identity["values"] == [1, 9, 26, 24, 0]


def test_cli_decompose_h():
    res = run_cli(
        "decompose", "--n", "4", "--k", "1", "--which", "h", "--format", "json"
    )
    data = json.loads(res.output)
    assert data == {
        "n": 4,
        "k": 1,
        "m": None,
        "which": "h",
        "terms": [
            {"partition": "4", "multiplicity": 1},
            {"partition": "3,1", "multiplicity": 1},
            {"partition": "2,2", "multiplicity": 1},
        ],
        "dimension": 6,
    }


def test_cli_decompose_b_variants():
    res = run_cli("decompose", "--n", "4", "--which", "b", "--m", "1", "--format", "json")
    data = json.loads(res.output)
    assert data["dimension"] == 12
    assert data["k"] is None and data["m"] == 1
    res = run_cli("decompose", "--n", "4", "--which", "b-diff", "--m", "1")
    assert res.exit_code == 0
    assert "[4] - [2,2] + [2,1,1]" in res.output


def test_cli_oracle_json():
    res = run_cli("oracle", "--p", "2", "--n", "3", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["ok"] is True
    assert data["total"] == 4
    assert data["expected_total"] == 4
    rows = {r["partition"]: r for r in data["rows"]}
    assert rows["3"]["count"] == 2 and rows["3"]["theory"] == 2
    assert rows["1,1,1"]["count"] == 0


def test_cli_table_matches_library():
    res = run_cli("table", "betti", "--max-n", "6", "--format", "csv")
    assert res.exit_code == 0
    assert res.output == emit_table("betti", 6, "csv")


def test_cli_verify_pass():
    res = run_cli("verify", "stability")
    assert res.exit_code == 0
    assert "PASS" in res.output
    assert "FAIL" not in res.output


def test_cli_verify_json():
    res = run_cli("verify", "support", "--max-n", "8", "--format", "json")
    assert res.exit_code == 0
    data = json.loads(res.output)
    assert data["suite"] == "support"
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])


@pytest.mark.parametrize(
    "args",
    [
        ("measure", "--n", "0"),
        ("measure", "--n", "4", "--z", "0"),
        ("measure", "--n", "4", "--z", "x"),
        ("cycle-poly", "--lambda", "1,2"),
        ("hchar", "--n", "4", "--k", "9"),
        ("achar", "--n", "4", "--k", "4"),
        ("decompose", "--n", "3", "--which", "h"),
        ("decompose", "--n", "3", "--which", "b"),
        ("decompose", "--n", "1", "--which", "b", "--m", "1"),
        ("oracle", "--p", "4", "--n", "2"),
        ("oracle", "--p", "2", "--n", "40"),
        ("table", "measures", "--n", "13"),
        ("table", "a2-decomp", "--max-n", "2"),
        ("verify", "tables", "--max-n", "0"),
    ],
)
def test_cli_usage_errors_exit_two(args):
    res = run_cli(*args)
    assert res.exit_code == 2, res.output
