import json

from rigidlin import Integers, parse_matrix, in_row_span
from rigidlin.cli import main

Z = Integers()


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "ring-axioms", "--ring", "Z/6",
                           "--seed", "1", "--param", "samples=100")
    assert code == 0
    assert "pass" in out


def test_verify_json_output(capsys):
    code, out, _ = run_cli(capsys, "verify", "lemma-ke", "--n", "3",
                           "--trials", "2", "--count", "5", "--seed", "3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert payload["suite"] == "lemma-ke"
    assert payload["params"]["need"] == 5


def test_verify_unknown_suite_usage_error(capsys):
    code, _, _ = run_cli(capsys, "verify", "bogus")
    assert code == 2


def test_verify_unsupported_ring_exit_two(capsys):
    code, _, err = run_cli(capsys, "verify", "snf-oracle", "--ring", "Z/6")
    assert code == 2
    assert "error" in err


def test_kernel_emits_json(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--matrix", "2,3", "--count", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload == {
        "ring": "Z",
        "matrix": "2,3",
        "basis": ["3,-2"],
        "stream_sample": ["3,-2", "-3,2", "6,-4"],
    }


def test_kernel_over_modular(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--ring", "Z/4", "--matrix", "2", "--count", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["basis"] == ["2"] and payload["stream_sample"] == ["2"]


def test_kernel_unsupported_ring(capsys):
    code, _, err = run_cli(capsys, "kernel", "--ring", "Z[x]", "--matrix", "x,1")
    assert code == 2 and "error" in err


def test_snf_command_reverifies(capsys):
    code, out, _ = run_cli(capsys, "snf", "--matrix", "2,4;6,8")
    assert code == 0
    payload = json.loads(out)
    a = parse_matrix(Z, payload["matrix"])
    d = parse_matrix(Z, payload["d"])
    u = parse_matrix(Z, payload["u"])
    v = parse_matrix(Z, payload["v"])
    assert u @ a @ v == d
    assert payload["d"] == "2,0;0,4"


def test_witness_linear_group(capsys):
    code, out, _ = run_cli(capsys, "witness", "--group", "en", "--n", "3",
                           "--conjugators", "e(2,1,1)", "--count", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["u_vectors"] == ["1,0"]
    assert payload["witnesses"][0] == "1,0,1;0,1,0;0,0,1"
    basis = [tuple(int(t) for t in u.split(",")) for u in payload["u_vectors"]]
    assert in_row_span(Z, [(1, 0)], basis[0])


def test_witness_symplectic_block_family(capsys):
    code, out, _ = run_cli(capsys, "witness", "--group", "esp", "--n", "2",
                           "--conjugators", "rl(3,1)", "--count", "3")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["witnesses"]) == 3


def test_witness_word_split_on_pipe(capsys):
    code, out, _ = run_cli(capsys, "witness", "--group", "en", "--n", "4",
                           "--conjugators", "e(2,1,1)|e(3,1,2)", "--count", "2")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["conjugators"]) == 2


def test_eval_word(capsys):
    code, out, _ = run_cli(capsys, "eval-word", "--group", "en", "--n", "2",
                           "--word", "e(1,2,1);e(2,1,-1)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["matrix"] == "0,1;-1,1"
    assert payload["det"] == "1"


def test_eval_word_form_flag(capsys):
    code, out, _ = run_cli(capsys, "eval-word", "--group", "esp", "--n", "2",
                           "--word", "rl(1,2);rs(1,2,1)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["preserves_form"] is True


def test_eval_word_bad_token(capsys):
    code, _, err = run_cli(capsys, "eval-word", "--group", "en", "--n", "2",
                           "--word", "e(1,1,1)")
    assert code == 2 and "error" in err


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, "verify", "ring-axioms", "--ring", "Z",
                         "--param", "samples=50", "--out", str(target))
    assert code == 0
    payload = json.loads(target.read_text())
    assert payload["verdict"] == "pass"


def test_missing_subcommand_is_usage_error(capsys):
    assert main([]) == 2
