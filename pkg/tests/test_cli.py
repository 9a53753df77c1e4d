"""Command line interface: output lines, exit codes, JSON modes."""

import json
import pathlib
import subprocess
import sys

import pytest

from sl2super.catalog import superalgebra_s2
from sl2super.cli import main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------


def test_table_sl2(capsys):
    code, out, err = run(capsys, "table", "sl2")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert len(lines) == 6
    assert "[e,f] = h" in lines
    assert "[h,e] = -2e" in lines
    assert "[f,h] = -2f" in lines


def test_table_s2_contains_odd_products(capsys):
    code, out, _ = run(capsys, "table", "s2")
    assert code == 0
    assert "[x_0,x_0] = 2e" in out.splitlines()
    assert "[x_1,x_0] = h" in out.splitlines()


def test_table_of_module_skeleton_has_no_odd_products(capsys):
    code, out, _ = run(capsys, "table", "n1:0")
    assert code == 0
    for line in out.splitlines():
        assert not line.startswith("[x_")


def test_table_json_is_byte_identical_to_library_serialization(capsys):
    code, out, _ = run(capsys, "table", "s2", "--json")
    assert code == 0
    assert out == superalgebra_s2().to_json()
    assert out == (GOLDEN / "s2.json").read_text()


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("identifier", ["sl2", "s1", "s2", "n1:4", "m1:3",
                                        "m3:6:3"])
def test_verify_catalog_entries_pass(capsys, identifier):
    code, out, _ = run(capsys, "verify", identifier)
    assert code == 0
    assert out.strip() == "OK"


def test_verify_verbatim_chain_fails_with_examples(capsys):
    code, out, _ = run(capsys, "verify", "m3:4:2", "--verbatim-tables")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "45 violation(s); showing first 10:"
    assert len(lines) == 11
    assert all(line.startswith("  bimodule-") for line in lines[1:])


def test_verify_json_reports_status(capsys):
    code, out, _ = run(capsys, "verify", "m4:4:2", "--verbatim-tables",
                       "--json")
    assert code == 1
    data = json.loads(out)
    assert data["ok"] is False
    assert len(data["violations"]) == 10
    assert set(data["violations"][0]) == {"identity", "labels", "residual"}

    code, out, _ = run(capsys, "verify", "s2", "--json")
    assert code == 0
    assert json.loads(out)["ok"] is True


def test_verify_file_round_trip(tmp_path, capsys):
    path = tmp_path / "alg.json"
    path.write_text(superalgebra_s2().to_json())
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and out.strip() == "OK"


def test_verify_rejects_broken_file(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{\"brackets\": []}")
    code, out, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "error:" in err


def test_verify_rejects_unknown_id(capsys):
    code, out, err = run(capsys, "verify", "q5:3")
    assert code == 2
    assert "error:" in err


# ---------------------------------------------------------------------------
# annihilator
# ---------------------------------------------------------------------------


def test_annihilator_module_flags(capsys):
    code, out, _ = run(capsys, "annihilator", "m1:3")
    assert code == 0
    assert out.splitlines() == ["y_0", "y_1"]

    code, out, _ = run(capsys, "annihilator", "n1:2")
    assert out.strip() == "none"


def test_annihilator_algebra_basis(capsys):
    code, out, _ = run(capsys, "annihilator", "sl2")
    assert code == 0
    assert out.strip() == "none"

    code, out, _ = run(capsys, "annihilator", "m2:2", "--json")
    data = json.loads(out)
    assert data["flagged"] == ["x_0", "x_1", "x_2"]


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def test_classify_family_case_text(capsys):
    code, out, _ = run(capsys, "classify", "n1:1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "dimension 1; representatives: S1, S2"
    assert "representative S1:" in lines
    assert "representative S2:" in lines
    assert "  [x_0,x_0] = 2e" in lines
    assert lines[-1] == "family: S1,S2"


def test_classify_rigid_case_text(capsys):
    code, out, _ = run(capsys, "classify", "n1:3")
    assert code == 0
    assert out.strip() == "dimension 0; [L1,L1]=0"


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "n1:1", "--json")
    data = json.loads(out)
    assert data["dimension"] == 1
    assert data["names"] == ["S1", "S2"]
    assert data["vectors"] == [{"a_0_0": "2", "b_1_1": "2", "c_0_1": "1"}]


def test_classify_strict_flag(capsys):
    code, out, _ = run(capsys, "classify", "n1:1", "--strict-symmetry",
                       "--json")
    assert code == 0
    data = json.loads(out)
    assert data["strict"] is True and data["symmetry_emerged"] is True


def test_classify_grid_ranges(capsys):
    code, out, _ = run(capsys, "classify", "n1", "--grid", "2..4")
    assert code == 0
    assert out.splitlines() == [
        "n1:2: dimension 0; [L1,L1]=0",
        "n1:3: dimension 0; [L1,L1]=0",
        "n1:4: dimension 0; [L1,L1]=0",
    ]


def test_classify_grid_pairs(capsys):
    code, out, _ = run(capsys, "classify", "m3", "--grid", "4:2,6:3")
    assert code == 0
    assert out.splitlines() == [
        "m3:4:2: dimension 0; [L1,L1]=0",
        "m3:6:3: dimension 0; [L1,L1]=0",
    ]


def test_classify_grid_rejects_mismatched_shapes(capsys):
    code, _, err = run(capsys, "classify", "m3", "--grid", "2..4")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "classify", "n1", "--grid", "4:2")
    assert code == 2
    code, _, err = run(capsys, "classify", "s2", "--grid", "1..2")
    assert code == 2


def test_classify_rejects_plain_superalgebra(capsys):
    code, _, err = run(capsys, "classify", "s2")
    assert code == 2
    assert "not a bimodule id" in err


def test_classify_verbatim_module_exits_one(capsys):
    code, _, err = run(capsys, "classify", "m3:4:2", "--verbatim-tables")
    assert code == 1
    assert "violation:" in err


# ---------------------------------------------------------------------------
# errata
# ---------------------------------------------------------------------------


def test_errata_text_format(capsys):
    code, out, _ = run(capsys, "errata")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for line in lines if line.startswith("[")) == 11
    assert any(line == "[m2]" for line in lines)
    idx = lines.index("[m2]")
    assert lines[idx + 1].startswith("  printed:  ")
    assert lines[idx + 2].startswith("  repaired: ")
    assert lines[idx + 3].startswith("  reason:   ")


def test_errata_family_filter(capsys):
    code, out, _ = run(capsys, "errata", "m4")
    assert code == 0
    headers = [line for line in out.splitlines() if line.startswith("[")]
    assert headers == ["[m4]"] * 4


def test_errata_json(capsys):
    code, out, _ = run(capsys, "errata", "m3", "--json")
    data = json.loads(out)
    assert len(data) == 6
    assert all(e["family"] == "m3" for e in data)


def test_errata_unknown_family_is_empty(capsys):
    code, out, _ = run(capsys, "errata", "n1")
    assert code == 0 and out == ""


# ---------------------------------------------------------------------------
# process-level smoke test
# ---------------------------------------------------------------------------


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "sl2super", "verify", "s2"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "OK"


def test_usage_error_exit_code_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "sl2super", "table", "bogus:9"],
        capture_output=True, text=True)
    assert proc.returncode == 2
