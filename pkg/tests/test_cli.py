import json

from finitary.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    assert "invocation" in doc and "payload" in doc
    return code, doc


# ---------------------------------------------------------------- ordinal

def test_ordinal_compare(capsys):
    code, out, _ = run(capsys, "ordinal", "compare", "[[[],[]]]", "[[[]],[[]]]")
    assert code == 0 and out.strip() == "GT"
    code, out, _ = run(capsys, "ordinal", "compare", "[]", "[[]]")
    assert code == 0 and out.strip() == "LT"
    code, out, _ = run(capsys, "ordinal", "compare", "[[]]", "[[]]")
    assert out.strip() == "EQ"


def test_ordinal_cnf(capsys):
    code, out, _ = run(capsys, "ordinal", "cnf", "[[[]],[[]]]")
    assert code == 0 and out.strip() == "ω·2"
    code, doc = run_json(capsys, "ordinal", "cnf", "[[[]],[[]]]")
    assert code == 0 and doc["payload"] == {"cnf": "ω·2"}


def test_ordinal_validate(capsys):
    code, out, _ = run(capsys, "ordinal", "validate", "[[],[[]]]")
    assert code == 1 and out.strip() == "invalid"
    code, out, _ = run(capsys, "ordinal", "validate", "[[[]],[]]")
    assert code == 0 and out.strip() == "ordinal"


def test_ordinal_height(capsys):
    code, out, _ = run(capsys, "ordinal", "height", "[[[],[]],[[]]]")
    assert code == 0 and out.strip() == "3"


def test_ordinal_parse_error(capsys):
    code, out, err = run(capsys, "ordinal", "validate", "[[,]]")
    assert code != 0 and "offset 2" in err


# -------------------------------------------------------------------- seq

def test_seq_monitor_descent(capsys):
    code, doc = run_json(capsys, "seq", "monitor",
                         "--program", "descent:3:[[[]]]", "--budget", "50")
    assert code == 0
    payload = doc["payload"]
    assert payload["certificate"] == "state-cycle"
    assert payload["violation"] is None
    assert payload["final_value"] == "[]"


def test_seq_monitor_violation_exit(capsys):
    code, out, _ = run(capsys, "seq", "monitor",
                       "--program", "list:[];[[]]", "--budget", "10")
    assert code == 2 and "violation=1" in out


def test_seq_bad_spec(capsys):
    code, out, err = run(capsys, "seq", "monitor", "--program", "bogus:1",
                         "--budget", "5")
    assert code == 1 and "program spec" in err


# ---------------------------------------------------------------- formula

def test_formula_parse(capsys):
    code, out, _ = run(capsys, "formula", "parse", "0 = 0")
    assert code == 0 and out.strip() == "(0=0)"


def test_formula_nnf(capsys):
    code, out, _ = run(capsys, "formula", "nnf", "!(0 = 0 | 0 > 0)")
    assert code == 0 and out.strip() == "(!(0=0)&!(0>0))"


def test_formula_eval_prime_instance(capsys):
    text = ("(SSSSSSS0 > S0) & forall x. forall y. "
            "(!(x*y = SSSSSSS0) | (x = S0) | (y = S0))")
    code, out, _ = run(capsys, "formula", "eval", text, "--bound", "8")
    assert code == 0 and out.strip() == "TRUE@8"


def test_formula_syntax_error(capsys):
    code, out, err = run(capsys, "formula", "parse", "forall x.")
    assert code == 1 and "offset" in err


# ------------------------------------------------------------------- game

def test_game_synth_no_reduction(capsys):
    code, out, _ = run(capsys, "game", "synth", "--bound", "1",
                       "--sentence", "0 = S0")
    assert code == 1 and out.strip() == "NO-REDUCTION"


def test_game_synth_reduction(capsys):
    code, doc = run_json(capsys, "game", "synth", "--bound", "3",
                         "--sentence", "forall x. (x = 0 | x > 0)")
    assert code == 0
    assert doc["payload"]["reduction"] is True
    assert doc["payload"]["lines"] == 4


def test_game_play_trace(capsys):
    code, doc = run_json(capsys, "game", "play", "--bound", "2",
                         "--sentence", "exists x. x + x = SS0")
    assert code == 0
    payload = doc["payload"]
    assert payload["outcome"] == "win"
    assert payload["boards"][0] == ["(exists x.((x+x)=SS0))"]
    assert payload["degrees"][0] == ["[[]]"]


def test_game_requires_sentence(capsys):
    code, out, err = run(capsys, "game", "synth")
    assert code == 1 and "--sentence" in err


# ------------------------------------------------------------------ proof

def test_proof_check_file(tmp_path, capsys):
    path = tmp_path / "refl.proof"
    text = "1. (x=x) ; logical eq_refl {x}\n2. (forall x.(x=x)) ; gen 1 x\n"
    path.write_text(text)
    code, out, _ = run(capsys, "proof", "check", str(path))
    assert code == 0 and "OK" in out and "(forall x.(x=x))" in out


def test_proof_check_bad_file(tmp_path, capsys):
    path = tmp_path / "bad.proof"
    path.write_text("1. (0=0) ; mp 1 1\n")
    code, out, _ = run(capsys, "proof", "check", str(path))
    assert code == 2 and "ERROR step=1" in out


def test_proof_search_small(capsys):
    code, out, _ = run(capsys, "proof", "search", "--max-length", "5")
    assert code == 0 and out.strip() == "CON-VERIFIED length<5"


def test_proof_search_with_injected_axiom(capsys):
    code, doc = run_json(capsys, "proof", "search", "--max-length", "17",
                         "--extra-axiom", "(0 = S0) & !(0 = S0)")
    assert code == 3
    assert doc["payload"]["found"] == ["1. ((0=S0)&!(0=S0)) ; pa 8"]


def test_proof_search_above_ceiling(capsys):
    code, out, err = run(capsys, "proof", "search", "--max-length", "99")
    assert code == 1 and "ceiling" in err
