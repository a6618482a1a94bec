import json

from verlinde_kit.cli import main
from verlinde_kit.formats import verobj_from_json
from verlinde_kit import VerObj


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fusion_table_text(capsys):
    code, out, _ = run_cli(capsys, "fusion-table", "--p", "5")
    assert code == 0
    assert "L1+L3" in out


def test_fusion_table_json_roundtrips(capsys):
    code, out, _ = run_cli(capsys, "fusion-table", "--p", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 5
    assert len(payload["entries"]) == 16
    entry = next(e for e in payload["entries"] if e["r"] == 2 and e["s"] == 2)
    assert verobj_from_json(entry["product"]) == VerObj(5, (1, 0, 1, 0))


def test_fusion_table_p2(capsys):
    code, out, _ = run_cli(capsys, "fusion-table", "--p", "2")
    assert code == 0
    assert "L1" in out


def test_fusion_table_bad_p(capsys):
    code, _, err = run_cli(capsys, "fusion-table", "--p", "9")
    assert code == 2
    assert "prime" in err


def test_sympow_table(capsys):
    code, out, _ = run_cli(capsys, "sympow", "--p", "5", "--m", "2")
    assert code == 0
    lines = [line for line in out.splitlines() if "i=" in line]
    assert len(lines) == 4  # rows i = 0 .. p - m
    assert "L1" in lines[0]
    assert "L2" in lines[1]
    assert "L3" in lines[2]
    assert "L4" in lines[3]


def test_sympow_json_schema(capsys):
    code, out, _ = run_cli(capsys, "sympow", "--p", "5", "--m", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 5 and payload["m"] == 2
    assert payload["rows"][0] == {
        "i": 0,
        "mults": [1, 0, 0, 0],
        "fpdim": {"offset": 0, "coeffs": [1]},
        "sfpdim": {"offset": 0, "coeffs": [1]},
        "invariants": 1,
    }
    assert payload["rows"][1]["mults"] == [0, 1, 0, 0]
    assert payload["rows"][2]["mults"] == [0, 0, 1, 0]


def test_extpow_json(capsys):
    code, out, _ = run_cli(capsys, "extpow", "--p", "5", "--r", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    rows = {row["i"]: row["mults"] for row in payload["rows"]}
    assert rows[0] == [1, 0, 0, 0]
    assert rows[1] == [0, 0, 1, 0]
    assert rows[2] == [0, 0, 1, 0]
    assert rows[3] == [1, 0, 0, 0]


def test_decompose_bracket_shorthand(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "[3]_z", "--sfpdim", "[3]_z")
    assert code == 0
    assert out.strip() == "L3"


def test_decompose_plain_and_negative(capsys):
    # leading-minus values need the --opt=value spelling to get past argparse
    code, out, _ = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "[2]_z", "--sfpdim=-[2]_z")
    assert code == 0
    assert out.strip() == "L2"
    code, out, _ = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "1", "--sfpdim", "1")
    assert code == 0
    assert out.strip() == "L1"


def test_decompose_json_input_and_explain(capsys):
    fp = json.dumps({"offset": -2, "coeffs": [1, 0, 1, 0, 1]})
    code, out, _ = run_cli(
        capsys, "decompose", "--p", "5", "--fpdim", fp, "--sfpdim", fp, "--format", "json", "--explain"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["mults"] == [0, 0, 1, 0]
    assert any(t["r"] == 3 and t["multiplicity"] == 1 for t in payload["terms"])


def test_decompose_explain_text(capsys):
    code, out, _ = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "[3]_z", "--sfpdim", "[3]_z", "--explain")
    assert code == 0
    assert "a_3" in out


def test_decompose_integrality_exit_code(capsys):
    code, _, err = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "1", "--sfpdim", "[2]_z")
    assert code == 3
    assert "integrality" in err


def test_decompose_parse_error_exit_code(capsys):
    code, _, err = run_cli(capsys, "decompose", "--p", "5", "--fpdim", "q+1", "--sfpdim", "1")
    assert code == 2


def test_decompose_virtual_flag(capsys):
    x = VerObj(5, (0, 1, 0, -1))
    from verlinde_kit import fpdim_rep, sfpdim_rep

    fp = f"--fpdim={fpdim_rep(x)}"
    sfp = f"--sfpdim={sfpdim_rep(x)}"
    code, out, _ = run_cli(capsys, "decompose", "--p", "5", fp, sfp, "--virtual", "--format", "json")
    assert code == 0
    assert json.loads(out)["mults"] == [0, 1, 0, -1]
    code, _, _ = run_cli(capsys, "decompose", "--p", "5", fp, sfp)
    assert code == 3


def test_weyl_command(capsys):
    code, out, _ = run_cli(capsys, "weyl", "--p", "7", "--m", "3", "--weight", "1,0")
    assert code == 0
    assert out.strip() == "L3"


def test_weyl_alcove_error(capsys):
    code, _, err = run_cli(capsys, "weyl", "--p", "5", "--m", "3", "--weight", "3,1")
    assert code == 2
    assert "alcove" in err


def test_padic_command(capsys):
    code, out, _ = run_cli(capsys, "padic", "--p", "5", "--mults", "0,0,1,0")
    assert code == 0
    assert out.splitlines()[0] == "Dim+=-2 Dim-=3"
    assert "identity=ok" in out


def test_padic_json(capsys):
    code, out, _ = run_cli(capsys, "padic", "--p", "5", "--mults", "0,0,1,0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["dim_plus"] == -2 and payload["dim_minus"] == 3
    assert payload["length_identity"] is True


def test_invariants_command(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--p", "7", "--m", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    # S^i of L2 is the simple L_{i+1}, so only i = 0 has a unit summand
    assert [row["invariant_dim"] for row in payload["rows"]] == [1, 0, 0, 0, 0, 0]
    assert [row["classical"] for row in payload["rows"]] == [1, 0, 0, 0, 0, 0]


def test_verify_small(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--p-list",
        "3,5",
        "--n-random",
        "10",
        "--n-roundtrip",
        "10",
        "--format",
        "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["summary"]["fail"] == 0
    assert {c["suite"] for c in payload["cells"]} == {
        "fusion",
        "sym",
        "ext",
        "roundtrip",
        "adams",
        "characters",
        "trace",
        "padic",
        "weyl",
        "invariants",
    }


def test_verify_text_pass_line(capsys):
    code, out, _ = run_cli(capsys, "verify", "--p-list", "3", "--n-random", "5", "--n-roundtrip", "5")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("PASS")


def test_verify_rejects_p2(capsys):
    code, _, err = run_cli(capsys, "verify", "--p-list", "2,3")
    assert code == 2


def test_output_is_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "sympow", "--p", "7", "--m", "3", "--format", "json")
    _, out2, _ = run_cli(capsys, "sympow", "--p", "7", "--m", "3", "--format", "json")
    assert out1 == out2


def test_csv_formats(capsys):
    code, out, _ = run_cli(capsys, "fusion-table", "--p", "3", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "r,s,product"
    code, out, _ = run_cli(capsys, "sympow", "--p", "5", "--m", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "i,object,fpdim,sfpdim,invariants"


def test_help_exits_zero(capsys):
    code, out, _ = run_cli(capsys, "--help")
    assert code == 0
    assert "fusion-table" in out


def test_missing_subcommand_is_usage_error(capsys):
    code, _, _ = run_cli(capsys)
    assert code == 2
