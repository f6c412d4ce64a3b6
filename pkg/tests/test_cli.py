import json
import subprocess
import sys

import pytest

ALPHA = "n=9; blocks=(1,-3)(2,7)(3,4)(5,6)(8,-6)(9,-9)(-8,-7)(-5,-4)(-2,-1)"
BETA = "n=9; blocks=(1,2)(3,4)(5,6)(7,-7)(8,9)(-2,-1)(-5,-4)(-6,-3)(-9,-8)"


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "tlmonoid", *args],
        capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_nf_worked_example():
    code, out, _ = run_cli("nf", "--n", "9", "L5 L3 L2 R1 R4 R7")
    assert code == 0
    assert out == "x=(5,3,2) y=(7,4,1)\n"


def test_eq_equal_and_not():
    code, out, _ = run_cli("eq", "--n", "5", "E1 E2 E1", "E1")
    assert (code, out) == (0, "equal\n")
    code, out, _ = run_cli("eq", "--n", "5", "L1 L4", "L1")
    assert (code, out) == (0, "equal\n")
    code, out, _ = run_cli("eq", "--n", "5", "E1", "E2")
    assert code == 1
    assert out.startswith("not-equal\n")
    assert len(out.strip().splitlines()) == 3


def test_enumerate_count():
    code, out, _ = run_cli("enumerate", "4")
    assert code == 0
    assert len(out.strip().splitlines()) == 14


def test_eval_with_loops():
    code, out, _ = run_cli("eval", "--n", "5", "E4 E4")
    assert code == 0
    assert out.splitlines()[1] == "m=1"


def test_mul_dagger_factorize_files(tmp_path):
    fa = tmp_path / "a.tl"
    fb = tmp_path / "b.tl"
    fa.write_text(ALPHA + "\n")
    fb.write_text(BETA + "\n")
    code, out, _ = run_cli("mul", str(fa), str(fb))
    assert code == 0
    assert out.splitlines()[1] == "m=1"
    code, out, _ = run_cli("dagger", str(fa))
    assert code == 0
    assert out.strip().startswith("n=9; blocks=(1,2)(3,-1)")
    code, out, _ = run_cli("factorize", str(fa))
    assert (code, out) == (0, "x=(5,3,2) y=(7,4,1)\n")


def test_build_round_trip():
    code, out, _ = run_cli("build", "--n", "9", "(5,3,2)", "(7,4,1)")
    assert code == 0
    assert out.strip() == ALPHA


def test_cert_write_and_check(tmp_path):
    cert = tmp_path / "d.cert"
    code, out, _ = run_cli("nf", "--n", "5", "R2 L2", "--cert", str(cert))
    assert code == 0 and out == "x=(4) y=(4)\n"
    assert cert.read_text().startswith("n=5; family=Omega\n")
    code, out, _ = run_cli("check-cert", str(cert), "--n", "5", "R2 L2")
    assert code == 0 and out == "ok: end=L4 R4\n"
    # tampering must be caught
    lines = cert.read_text().splitlines()
    lines[1] = "0:RL2(2,1):fwd"
    cert.write_text("\n".join(lines) + "\n")
    code, out, err = run_cli("check-cert", str(cert), "--n", "5", "R2 L2")
    assert code == 3
    assert "rejected" in err


def test_xi_cert_for_hook_words(tmp_path):
    cert = tmp_path / "e.cert"
    code, out, _ = run_cli("nf", "--n", "5", "E1 E2 E1", "--cert", str(cert))
    assert code == 0 and out == "x=(1) y=(1)\n"
    assert cert.read_text().startswith("n=5; family=Xi\n")
    code, out, _ = run_cli("check-cert", str(cert), "--n", "5", "E1 E2 E1")
    assert code == 0


def test_alg_element_output():
    code, out, _ = run_cli("alg", "--n", "5", "E4 E4", "--delta", "2")
    assert code == 0
    assert out == ("delta=2; n=5;\n"
                   "2 * n=5; blocks=(1,-1)(2,-2)(3,-3)(4,5)(-5,-4)\n")


def test_doc_format_is_json():
    code, out, _ = run_cli("nf", "--n", "9", "L5 L3 L2 R1 R4 R7",
                           "--format", "doc")
    assert code == 0
    doc = json.loads(out)
    assert doc["x"] == [5, 3, 2] and doc["y"] == [7, 4, 1]
    code, out, _ = run_cli("eval", "--n", "5", "E4 E4", "--format", "doc")
    doc = json.loads(out)
    assert doc["m"] == 1 and doc["tangle"]["n"] == 5


def test_verify_exit_codes():
    code, out, _ = run_cli("verify", "3", "--fuzz", "25", "--seed", "1")
    assert code == 0
    assert "result: pass" in out


def test_render_smoke():
    code, out, _ = run_cli("render", ALPHA)
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == [str(i) for i in range(1, 10)]
    assert "strings: 1-3' 8-6' 9-9'" in out
    assert lines[-1].split() == [f"{i}'" for i in range(1, 10)]


def test_usage_errors_exit_two():
    code, _, err = run_cli("nf", "--n", "5", "L9 bogus")
    assert code == 2 and "bogus" in err
    code, _, err = run_cli("nf", "L1")
    assert code == 2
    code, _, _ = run_cli("frobnicate")
    assert code == 2


def test_determinism_of_nf_and_verify():
    args = ("verify", "4", "--fuzz", "40", "--seed", "11")
    outs = {run_cli(*args)[1] for _ in range(2)}
    assert len(outs) == 1
    outs = {run_cli("nf", "--n", "7", "R2 L3 E1 R5")[1] for _ in range(2)}
    assert len(outs) == 1
