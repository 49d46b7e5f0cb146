import json

import pytest

from shq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_compute_json(capsys):
    d = run_json(capsys, "compute", "--m", "1", "--n", "1")
    assert d["sh_rank"] == 1
    assert d["sh"]["text"] == "Lambda[w]/(w + t)"
    assert d["r_matrix"]["entries"] == [["t", "-1"], ["0", "0"]]
    assert all(x["pass"] for x in d["diagnostics"])


def test_compute_text(capsys):
    code, out, err = run(capsys, "compute", "--m", "5", "--n", "2",
                         "--format", "text")
    assert code == 0
    assert "SH* = Lambda[w]/(w^4 + 4*t)" in out
    assert "checks passed" in out


def test_compute_gf2(capsys):
    d = run_json(capsys, "compute", "--m", "4", "--n", "2", "--field", "gf2")
    assert d["sh"] == {
        "kind": "zero",
        "rank": 0,
        "reason": "the first Chern class of the line bundle is zero over "
        "GF(2) for even twist, hence nilpotent",
    }


def test_compute_partial_mode(capsys):
    d = run_json(capsys, "compute", "--m", "3", "--n", "3")
    assert d["sh"]["kind"] == "partial"
    assert d["sh_rank"] == "positive multiple of 1 (at most 3)"
    assert d["qh"]["complete"] is False


def test_compute_refused_band(capsys):
    code, out, err = run(capsys, "compute", "--m", "3", "--n", "5")
    assert code == 2
    assert "refusing (m, n) = (3, 5)" in err
    assert out == ""


def test_compute_invalid_m(capsys):
    code, out, err = run(capsys, "compute", "--m", "0", "--n", "1")
    assert code == 3
    assert "invalid arguments" in err


def test_missing_argument_exits_3(capsys):
    with pytest.raises(SystemExit) as e:
        main(["compute", "--m", "2"])
    assert e.value.code == 3


def test_unknown_command_exits_3(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 3


def test_rmatrix(capsys):
    d = run_json(capsys, "rmatrix", "--m", "3", "--n", "3")
    assert d["N"] == 1
    assert d["entries"][0][0] == "18*t"
    assert d["unknown"] == [
        {"row": 2, "col": 1, "t_power": 2},
        {"row": 3, "col": 1, "t_power": 3},
        {"row": 3, "col": 2, "t_power": 2},
    ]
    code, out, err = run(capsys, "rmatrix", "--m", "4", "--n", "7")
    assert code == 2


def test_tau(capsys):
    d = run_json(capsys, "tau", "--n", "3")
    assert d["coefficients"] == [2, 5, 2]
    assert d["sum"] == 9
    d = run_json(capsys, "tau", "--n", "3", "--field", "gf2")
    assert d["coefficients"] == [0, 1, 0]
    code, out, err = run(capsys, "tau", "--n", "0")
    assert code == 3


def test_localize(capsys):
    d = run_json(capsys, "localize", "--m", "2", "--n", "2", "--a", "0",
                 "--trials", "2")
    assert d["expected"] == 4
    assert d["match"] is True
    assert [s["value"] for s in d["samples"]] == [4, 4]
    code, out, err = run(capsys, "localize", "--m", "2", "--n", "2", "--a", "5")
    assert code == 3


def test_grr(capsys):
    d = run_json(capsys, "grr")
    assert (d["euler"], d["k_squared"], d["c1_dot_z"], d["z_squared"]) == \
        (6, 6, -4, 2)
    assert d["chi_z"] == 0
    assert d["chi_structure_sheaf"] == 1
    assert d["obstruction_degree"] == 1


def test_table(capsys):
    rows = run_json(capsys, "table", "--max-m", "1")
    assert [(r["m"], r["n"]) for r in rows] == [(1, 1), (1, 2), (1, 3)]


def test_output_is_deterministic(capsys):
    first = run(capsys, "compute", "--m", "6", "--n", "3")
    second = run(capsys, "compute", "--m", "6", "--n", "3")
    assert first == second
    third = run(capsys, "compute", "--m", "6", "--n", "3", "--seed", "11")
    assert json.loads(third[1])["sh_rank"] == 4
