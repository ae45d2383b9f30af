import json
import subprocess
import sys

import pytest

from slicegap.bredon import inject_fault
from slicegap.cli import main, run


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "slicegap", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_cell_lemma_instance():
    payload, code, _, _ = run(["cell-lemma", "--group", "8", "--k", "4", "--m", "-2"])
    assert code == 0 and payload["status"] == "ok" and payload["result"] is True


def test_classes_D():
    payload, code, _, _ = run(["classes", "D"])
    assert payload["result"] == "19*rho_8" and code == 0


def test_arf_hyperbolic():
    payload, code, _, _ = run(["arf", "--hyperbolic"])
    assert payload["result"]["arf"] == 0 and code == 0


@pytest.mark.parametrize("argv", [
    ["fgl", "mu-cn", "--e", "2", "--cutoff", "6"],
    ["fgl", "height", "--law", "multiplicative", "--cutoff", "8"],
    ["cohomology", "--group", "2", "--module", "sign"],
    ["detect", "--p", "5", "--exponents", "1,0,2"],
    ["kervaire-target", "--j", "5"],
    ["gset", "product", "--group", "8", "--a", "2", "--b", "4"],
    ["rep", "--group", "8", "--rep", "{a:1,b:1,c:[1,1,1]}", "--induce-to", "16"],
    ["bredon", "--group", "8", "--rep", "{a:1,b:1,c:[1,1,1]}", "--coeff", "constZ", "--variance", "homology"],
    ["bredon", "--group", "4", "--rep", "{c:[1]}", "--coeff", "burnside", "--oracle"],
    ["slice", "dim", "--group", "8", "--k", "2", "--m", "3"],
    ["slice", "smash", "--group", "4", "--k", "2", "--m", "1", "--k2", "2", "--m2", "1"],
    ["slice", "norm-wedge", "--group", "4", "--k", "2", "--degrees", "0,1,2,3"],
    ["slice", "census", "--group", "2", "--dmax", "8"],
    ["slice", "support", "--group", "8", "--s", "7", "--t", "8"],
    ["gap", "--group", "4", "--l", "3", "--tmax", "6"],
    ["classes", "omega", "--k", "4"],
    ["classes", "diffcheck", "--e", "3", "--k", "2"],
    ["classes", "deduce", "--j", "8"],
    ["classes", "adams", "--tmax", "20"],
    ["classes", "periodicity", "--ks", "4,2,1"],
])
def test_commands_succeed_and_are_deterministic(argv, capsys):
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert json.loads(first)["status"] == "ok"


def test_outputs_carry_no_floats(capsys):
    for argv in (["rep", "--group", "8", "--rep", "{a:1,b:1,c:[1,1,1]}"], ["slice", "census", "--group", "4", "--dmax", "8"]):
        main(argv)
        payload = json.loads(capsys.readouterr().out)

        def walk(x):
            assert not isinstance(x, float)
            if isinstance(x, dict):
                for v in x.values():
                    walk(v)
            elif isinstance(x, list):
                for v in x:
                    walk(v)
        walk(payload)


def test_predicates_answer_false_without_failing():
    payload, code, _, _ = run(["slice", "support", "--group", "8", "--s", "8", "--t", "9"])
    assert code == 0 and payload["result"]["support"] is False


def test_check_failed_exit_code():
    with inject_fault():
        payload, code, _, _ = run(["cell-lemma", "--group", "8", "--k", "4", "--m", "-2"])
    assert code == 1 and payload["status"] == "check-failed" and payload["result"] is False


def test_errors_exit_two():
    payload, code, _, _ = run(["cell-lemma", "--group", "8", "--k", "3", "--m", "-1"])
    assert code == 2 and payload["status"] == "error"
    code, out, err = _cli("bredon", "--nonsense")
    assert code == 2 and "usage" in err


def test_fault_injection_fails_the_cell_lemma_row():
    code, out, err = _cli("verify", "--only", "1", "--inject-fault")
    assert code == 1
    assert "[FAIL] 1." in err
    assert json.loads(out)["result"]["allPassed"] is False


def test_quick_profile_passes():
    code, out, err = _cli("verify", "--profile", "quick")
    assert code == 0, err
    assert err.count("[PASS]") == 9


def test_byte_identical_stdout_across_processes():
    a = _cli("slice", "census", "--group", "8", "--dmax", "12")
    b = _cli("slice", "census", "--group", "8", "--dmax", "12")
    assert a[0] == b[0] == 0 and a[1] == b[1]
