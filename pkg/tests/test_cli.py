import io
import subprocess
import sys

import pytest

from syzygy import cli
from syzygy.conditions import ConditionReport


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_resolve_lambda_golden():
    code, text = run("resolve", "paper_lambda", "--injective", "--depth", "3")
    assert code == 0
    assert text == "0\t2:1,3:2,4:2\t10\n1\t2:3\t6\n2\t1:3\t3\nterminated\n"


def test_resolve_truncated_and_projective():
    code, text = run("resolve", "lambda:S1", "--projective", "--depth", "1")
    assert code == 0
    assert text.splitlines() == ["0\t1:1\t2", "truncated\t1"]
    code, text = run("resolve", "loop(2)", "--depth", "2")
    assert text == "0\t1:1\t2\nterminated\n"


def test_resolve_right_side():
    # over the opposite algebra I(1) and I(2) have dimensions 2 and 3
    _, right = run("resolve", "lambda", "--side", "right")
    assert right.splitlines()[0] == "0\t1:2,2:2\t10"


def test_check_outputs():
    code, text = run("check", "syzygy", "lambda:inj0", "--n", "1")
    assert code == 0
    assert text.splitlines()[0] == "syzygy [n=1]: NO"
    assert "failing_socle_types" in text
    _, text = run("check", "rn", "lambda:inj0", "--n", "1")
    assert text.splitlines()[0] == "rn [n=1]: true"
    _, text = run("check", "cogenerator", "lambda", "--n", "1")
    assert "witness_vertex: 1" in text
    _, text = run("check", "gorenstein", "loop(3)")
    assert text.splitlines()[0].endswith("true")
    _, text = run("check", "torsionfree", "lambda:P1", "--n", "2")
    assert text == "torsionfree [n=2]: true\n"


def test_check_gnk_sides():
    _, both = run("check", "gnk", "lambda", "--n", "3", "--k", "1")
    headers = [l for l in both.splitlines() if not l.startswith(" ")]
    assert headers == ["gnk [side=left n=3 k=1]: true", "gnk [side=right n=3 k=1]: false"]
    _, left = run("check", "gnk", "lambda", "--n", "3", "--k", "1", "--side", "left")
    assert left.splitlines()[0] == headers[0]


def test_module_file_round_trip(tmp_path):
    code, alg_text = run("export", "lambda")
    (tmp_path / "lam.alg").write_text(alg_text)
    code, mod_text = run("export", str(tmp_path / "lam.alg") + ":I2")
    assert code == 0
    mod = tmp_path / "i2.mod"
    mod.write_text(mod_text)
    _, direct = run("resolve", "lambda:I2", "--projective")
    _, via_file = run("resolve", str(mod), "--projective")
    assert direct == via_file
    _, again = run("export", str(mod))
    assert again == mod_text


def test_input_errors(tmp_path, capsys):
    bad = tmp_path / "bad.mod"
    bad.write_text("module over lambda\ndim 1 1\ndim 2 1\nmap a1\n1 1\n")
    assert run("resolve", str(bad))[0] == 2
    assert run("resolve", "no_such_algebra")[0] == 2
    assert run("resolve", "lambda:Q1")[0] == 2
    assert run("resolve", "lambda:S9")[0] == 2
    assert "error:" in capsys.readouterr().err
    with pytest.raises(SystemExit) as e:
        run("check", "rn", "lambda")
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        run("fuzz", "lemma21", "--trials", "0")
    assert e.value.code == 2


def test_fuzz_deterministic():
    a = run("fuzz", "resolving", "--trials", "30", "--seed", "7")
    b = run("fuzz", "resolving", "--trials", "30", "--seed", "7")
    c = run("fuzz", "resolving", "--trials", "30", "--seed", "7", "--jobs", "2")
    assert a == b == c
    assert a[0] == 0 and "violations\t0" in a[1]


def test_fuzz_seed_from_environment(monkeypatch):
    monkeypatch.setenv("SYZYGY_SEED", "11")
    _, text = run("fuzz", "prop22", "--trials", "5", "--algebra", "loop(2),linear_An(3)")
    assert "seed\t11" in text and "algebras\tloop(2),linear_An(3)" in text


def test_fuzz_reports_counterexample(monkeypatch):
    import syzygy.fuzz as fuzz

    monkeypatch.setattr(fuzz, "verify_lemma21",
                        lambda s, depth: ConditionReport("lemma21", {}, s.B.dim < 4, {}))
    code, text = run("fuzz", "lemma21", "--trials", "40", "--seed", "1")
    assert code == 1
    assert "counterexample\ttrial" in text and "module over" in text


def test_verify_command_fails_on_corrupted_fact(monkeypatch):
    import syzygy.acceptance as acc

    real = acc.corpus_entries

    def corrupted(p=2):
        entries = real(p)
        entries[0].facts["id_left"] = (3, "hand computation")
        return entries

    monkeypatch.setattr(acc, "corpus_entries", corrupted)
    # only the corpus criterion matters here; skip the slower ones
    all_criteria = acc.criteria
    monkeypatch.setattr(acc, "criteria", lambda entries=None: all_criteria(entries)[:1])
    code, text = run("verify-paper")
    assert code == 1
    assert text.startswith("[FAIL]") and "paper_lambda.id_left" in text


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "syzygy.cli", "resolve", "loop(2)"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.endswith("terminated\n")


def test_injective_input_resolves_in_one_step():
    code, text = run("resolve", "lambda:I2", "--injective")
    assert code == 0 and text == "0\t2:1\t2\nterminated\n"


def test_rn_zero_always_holds(tmp_path):
    _, mod_text = run("export", "lambda:inj0")
    mod = tmp_path / "I0_lambda.mod"
    mod.write_text(mod_text)
    code, text = run("check", "rn", str(mod), "--n", "0")
    assert code == 0 and text.splitlines()[0] == "rn [n=0]: true"
    code, text = run("check", "syzygy", str(mod), "--n", "1")
    assert code == 0
    assert text.splitlines()[:2] == ["syzygy [n=1]: NO", "  reason: not torsionless"]


def test_single_trial_summary_is_stable():
    assert run("fuzz", "lemma21", "--trials", "1", "--seed", "3") == \
        run("fuzz", "lemma21", "--trials", "1", "--seed", "3")
