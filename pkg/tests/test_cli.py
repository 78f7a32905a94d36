import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from narayana_cf.algebra import render
from narayana_cf.cli import main
from narayana_cf.expr import parse_value

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"
SCHEMA = json.loads((HERE / "output_schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_golden_table(capsys):
    code, out, _ = run(capsys, "table", "c_neg1", "5")
    assert code == 0
    assert out == (GOLDEN / "table_c_neg1_5.txt").read_text()


def test_golden_extract(capsys):
    code, out, _ = run(capsys, "extract", "--seq", "narayana", "--shift", "1", "--depth", "4")
    assert code == 0
    assert out == (GOLDEN / "extract_narayana_shift1_depth4.txt").read_text()


def test_golden_via_subprocess():
    proc = subprocess.run([sys.executable, "-m", "narayana_cf", "table", "c_neg1", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "table_c_neg1_5.txt").read_text()


def test_verify_json(capsys):
    code, doc = run_json(capsys, "verify", "--suite", "eq5,eq52,thm1", "--n", "10")
    assert code == 0
    assert [r["id"] for r in doc["results"]] == ["eq5", "eq52", "thm1"]
    assert {r["status"] for r in doc["results"]} == {"pass", "flagged"}


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2 and "nosuch" in err


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and "oracle-triangle" in out


def test_verify_human_summary(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eq5,c-odd-formula", "--n", "4")
    assert code == 0
    assert out.splitlines()[-1] == "1 passed, 1 flagged, 0 failed"


def test_table_errors(capsys):
    assert run(capsys, "table", "fibonacci", "3")[0] == 2
    assert run(capsys, "table", "catalan", "-1")[0] == 2


def test_expand_named_and_weights(capsys):
    code, out, _ = run(capsys, "expand", "--named", "example2", "-N", "4")
    assert code == 0 and out == "0: 1\n1: 2\n2: 5\n3: 14\n4: 42\n"
    code, out, _ = run(capsys, "expand", "--s", "(-1)^n*(1+t)", "--t", "-t", "-N", "3")
    assert code == 0 and out.splitlines() == ["0: 1", "1: 1 + t", "2: 1 + t + t^2", "3: 1 + 2*t + 2*t^2 + t^3"]


def test_expand_errors(capsys):
    assert run(capsys, "expand", "--s", "1 +", "--t", "1")[0] == 2
    assert run(capsys, "expand", "--named", "nope")[0] == 2
    assert run(capsys, "expand", "--s", "1")[0] == 2


def test_extract_singular(capsys):
    code, out, err = run(capsys, "extract", "--seq", "w_binomial", "--depth", "3")
    assert code == 1
    assert "SingularMoment at depth 1" in err
    assert out.startswith("s_0 = 1 + t")


def test_extract_named_interleaved(capsys):
    code, out, _ = run(capsys, "extract", "--seq", "catalan_neg1", "--interleave-zeros", "--depth", "5")
    assert code == 0
    assert out.splitlines()[5:] == ["t_0 = 1", "t_1 = 1", "t_2 = -1", "t_3 = -1"]


def test_extract_usage(capsys):
    assert run(capsys, "extract", "--depth", "2")[0] == 2
    assert run(capsys, "extract", "--seq", "nope", "--depth", "2")[0] == 2


def test_series(capsys):
    code, out, _ = run(capsys, "series", "W", "-N", "2")
    assert code == 0 and out == "0: 1\n1: 1 + t\n2: 1 + 4*t + t^2\n"
    assert run(capsys, "series", "nope")[0] == 2
    code, out, _ = run(capsys, "series", "gamma", "-N", "2")
    assert out == "0: 1\n1: 1 + t\n2: 0\n"


def test_json_round_trip(capsys):
    _, human, _ = run(capsys, "series", "c", "-N", "12")
    _, doc = run_json(capsys, "series", "c", "-N", "12")
    rerendered = "".join(f"{r['n']}: {render(parse_value(r['value']))}\n" for r in doc["results"])
    assert rerendered == human


def test_json_extract_schema(capsys):
    code, doc = run_json(capsys, "extract", "--named", "thm2", "--depth", "3")
    assert code == 0 and doc["results"][-1]["t"] is None


def test_csv(capsys):
    code, out, _ = run(capsys, "table", "narayana", "3", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and out.splitlines()[0] == "n,value"
    assert rows[3] == {"n": "3", "value": "1 + 3*t + t^2"}


def test_out_file(capsys, tmp_path):
    target = tmp_path / "o.txt"
    code, out, _ = run(capsys, "table", "catalan", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "0: 1\n1: 1\n2: 2\n3: 5\n"


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
