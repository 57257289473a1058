import json
from fractions import Fraction

import pytest

from g2tab import cli
from g2tab.linalg import DEFAULT_MODULUS, SECOND_MODULUS


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch, tmp_path):
    for var in ("G2TAB_CACHE", "G2TAB_MODULUS", "G2TAB_THREADS"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_exit(capsys, *argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    out, err = capsys.readouterr()
    return exc.value.code, out, err


@pytest.mark.parametrize("a, b, d", [(1, 0, "7"), (0, 0, "1"), (0, 2, "77")])
def test_dim(capsys, a, b, d):
    assert run(capsys, "dim", "--a", str(a), "--b", str(b))[:2] == (0, d + "\n")


def test_dim_negative_is_usage_error(capsys):
    code, _, err = run_exit(capsys, "dim", "--a", "-1", "--b", "0")
    assert code == 2 and "nonnegative" in err


@pytest.mark.parametrize(
    "shape, flt, n", [("1,1", "g2", "14"), ("1,0", "all", "7"), ("2,1", "semistandard", "112")]
)
def test_enumerate_count(capsys, shape, flt, n):
    assert run(capsys, "enumerate", "--shape", shape, "--filter", flt, "--count")[:2] == (0, n + "\n")


def test_enumerate_bad_shape(capsys):
    assert run_exit(capsys, "enumerate", "--shape", "1,2", "--count")[0] == 2
    assert run_exit(capsys, "enumerate", "--shape", "x", "--count")[0] == 2


def test_enumerate_json_csv_and_table(capsys):
    code, out, _ = run(capsys, "enumerate", "--shape", "1,1", "--weight", "1,1")
    assert code == 0 and [json.loads(l) for l in out.splitlines()] == [{"shape": [1, 1], "rows": [["a+b"], ["0"]]}]
    code, out, _ = run(capsys, "enumerate", "--shape", "2,1", "--output", "csv")
    lines = out.splitlines()
    assert len(lines) == 64 and lines[0] == "2a+b,2a+b;a+b"
    code, out, _ = run(capsys, "enumerate", "--shape", "1,0", "--output", "table")
    assert "2a+b" in out and out.count("\n\n") == 7


@pytest.mark.parametrize("shape, dim", [("1,0", 7), ("2,0", 27)])
def test_quotient_row_shapes(capsys, shape, dim):
    code, out, _ = run(capsys, "quotient", "--shape", shape)
    obj = json.loads(out)
    assert code == 0 and obj["quotient_dim"] == dim and obj["spanning"] and obj["independent"]


def test_quotient_column_shape_literal(capsys):
    code, out, err = run(capsys, "quotient", "--shape", "1,1")
    obj = json.loads(out)
    assert (code, obj["quotient_dim"], obj["spanning"], obj["independent"]) == (0, 14, True, True)


def test_quotient_failure_exits_4_loudly(capsys):
    code, out, err = run(capsys, "quotient", "--shape", "2,1", "--no-cache")
    assert code == 4 and "CERTIFICATE FAILED" in err
    assert json.loads(out)["independent"] is False


def test_quotient_consistent_families(capsys):
    code, out, _ = run(capsys, "quotient", "--shape", "1,1", "--families", "consistent")
    obj = json.loads(out)
    assert (code, obj["quotient_dim"], obj["spanning"], obj["independent"]) == (0, 14, True, True)
    assert obj["relation_rank"] == 35


def test_quotient_box_bound(capsys):
    code, _, err = run(capsys, "quotient", "--shape", "3,3")
    assert code == 3 and "--max-boxes" in err
    assert run(capsys, "quotient", "--shape", "2,1", "--max-boxes", "2", "--families", "consistent")[0] == 3


def test_quotient_bad_family(capsys):
    assert run_exit(capsys, "quotient", "--shape", "1,1", "--families", "exchange,nope")[0] == 2


def test_cache_hit_is_byte_identical(capsys, tmp_path):
    cache = tmp_path / "cache"
    args = ("quotient", "--shape", "2,1", "--families", "consistent", "--cache-dir", str(cache))
    first = run(capsys, *args)
    files = list(cache.rglob("*.json"))
    assert len(files) == 1 and files[0].parent.name == "v1"
    second = run(capsys, *args)
    fresh = run(capsys, *args[:-2], "--no-cache")
    assert first == second == fresh


def test_exact_mode(capsys):
    code, out, _ = run(capsys, "quotient", "--shape", "2,1", "--families", "consistent", "--exact", "--no-cache")
    obj = json.loads(out)
    assert code == 0 and obj["modulus"] == "exact" and obj["quotient_dim"] == 64


def test_env_modulus_and_flag_precedence(capsys, monkeypatch):
    monkeypatch.setenv("G2TAB_MODULUS", str(SECOND_MODULUS))
    _, out, _ = run(capsys, "quotient", "--shape", "1,0", "--no-cache")
    assert json.loads(out)["modulus"] == SECOND_MODULUS
    _, out, _ = run(capsys, "quotient", "--shape", "1,0", "--no-cache", "--modulus", str(DEFAULT_MODULUS))
    assert json.loads(out)["modulus"] == DEFAULT_MODULUS
    monkeypatch.setenv("G2TAB_MODULUS", "exact")
    _, out, _ = run(capsys, "quotient", "--shape", "1,0", "--no-cache")
    assert json.loads(out)["modulus"] == "exact"


def test_env_cache_dir(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("G2TAB_CACHE", str(tmp_path / "envcache"))
    run(capsys, "quotient", "--shape", "1,0")
    assert list((tmp_path / "envcache").rglob("*.json"))
    run(capsys, "quotient", "--shape", "2,0", "--cache-dir", str(tmp_path / "flag"))
    assert list((tmp_path / "flag").rglob("*.json"))
    assert len(list((tmp_path / "envcache").rglob("*.json"))) == 1


@pytest.mark.parametrize("value", ["12", "2147483645", "nonsense"])
def test_bad_modulus_is_usage_error(capsys, monkeypatch, value):
    monkeypatch.setenv("G2TAB_MODULUS", value)
    assert run(capsys, "dim", "--a", "0", "--b", "0")[0] == 2


def test_bad_threads(capsys, monkeypatch):
    monkeypatch.setenv("G2TAB_THREADS", "0")
    assert run(capsys, "dim", "--a", "0", "--b", "0")[0] == 2


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--a", "1", "--b", "0")
    obj = json.loads(out)
    assert code == 0 and len(obj["entries"]) == 3 and all(m == 1 for _, _, m in obj["entries"])
    code, out, _ = run(capsys, "branch", "--a", "2", "--b", "0")
    assert len(json.loads(out)["entries"]) == 6


def test_branch_verify(capsys):
    code, out, _ = run(capsys, "branch", "--a", "0", "--b", "1", "--verify")
    assert code == 0 and json.loads(out) == {"formula_vs_tableaux": True, "dimension_sum": True}


def test_branch_verify_mismatch_exits_4(capsys):
    code, out, err = run(capsys, "branch", "--a", "2", "--b", "1", "--verify")
    assert code == 4 and json.loads(out) == {"formula_vs_tableaux": False, "dimension_sum": False}
    code, out, _ = run(capsys, "branch", "--a", "2", "--b", "1", "--verify", "--rule", "repaired")
    assert code == 0


def test_branch_table_output(capsys):
    code, out, _ = run(capsys, "branch", "--a", "1", "--b", "0", "--output", "csv")
    assert out.splitlines() == ["c,d,multiplicity", "0,0,1", "0,1,1", "1,0,1"]


def test_character(capsys):
    code, out, _ = run(capsys, "character", "--shape", "1,1")
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(rows) == 13
    assert {"weight": [0, 0], "g2_tableaux": 2, "freudenthal": 2} in rows


def test_matrices(capsys):
    code, out, _ = run(capsys, "matrices")
    obj = json.loads(out)
    assert code == 0 and set(obj) == {"e_alpha", "f_alpha", "e_beta", "f_beta", "h_alpha", "h_beta", "form"}
    assert Fraction(obj["h_alpha"][4][4]) == 2 and Fraction(obj["form"][0][5]) == 1


def test_verify_all_zero_boxes(capsys):
    assert run(capsys, "verify-all", "--max-boxes", "0")[0] == 2


def test_verify_all_literal(capsys):
    code, out, err = run(capsys, "verify-all", "--max-boxes", "3", "--output", "table")
    assert "[ 1]" in out and "[10]" in out
    assert code == 0, err


def test_verify_all_consistent_families_and_repaired_rule(capsys):
    code, out, _ = run(
        capsys, "verify-all", "--max-boxes", "3", "--families", "consistent", "--rule", "repaired", "--threads", "2"
    )
    rows = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and [r["criterion"] for r in rows] == list(range(1, 11))
    assert all(r["passed"] for r in rows)


def test_verify_all_only(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", "5,7", "--output", "table")
    assert code == 0 and out.count("PASS [") == 2
