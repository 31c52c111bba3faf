import shutil
import subprocess
import sys
from importlib import resources

import pytest

from irrlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_overgroups_transitive(capsys):
    assert run(capsys, "overgroups", "--group", "G2", "--id", "2", "--p", "5", "--transitive") == (0, "#2 #4 #6 #0\n", "")


def test_restrict_embed(capsys):
    code, out, _ = run(capsys, "restrict", "--group", "G2", "--id", "6", "--embed", "(1,1)", "--module", "min", "--p", "3")
    assert (code, out) == (0, "2 / 2 / 0\n")


def test_restrict_embed_with_twists(capsys):
    code, out, _ = run(
        capsys, "restrict", "--group", "G2", "--id", "6", "--embed", "(1^{[r]},1^{[s]}) | rs=0; r!=s",
        "--twists", "r=1,s=0", "--module", "min", "--p", "3",
    )
    assert (code, out) == (0, "4 / 2\n")


def test_restrict_class(capsys):
    code, out, _ = run(capsys, "restrict", "--group", "G2", "--id", "2", "--module", "adj", "--p", "3")
    assert (code, out) == (0, "4 / 2 / 2 / 2 / 0\n")


def test_verify_adjoint(capsys):
    assert run(capsys, "verify", "--check", "adjoint-determines", "--group", "E6", "--p", "all")[:2] == (0, "OK (0 collisions)\n")


def test_verify_varstein(capsys):
    code, out, _ = run(capsys, "verify", "--check", "varstein", "--group", "G2")
    assert code == 0 and out.splitlines() == ["#1\tp=2\tfails", "#5\tp=3\tfails", "2 flagged"]


def test_verify_type_existence(capsys):
    code, out, _ = run(capsys, "verify", "--check", "type-existence", "--group", "E6", "--n", "3", "--p", "3")
    assert (code, out) == (0, "p=3\tA1^3\tyes #44\n")


def test_lookup(capsys):
    code, out, _ = run(capsys, "lookup", "--group", "E6", "--id", "31")
    assert code == 0
    assert out.splitlines()[:4] == ["E6 #31: A1bar A1^2", "exists: p!=2", "in: #27", "vm: (1,2,1)"]


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--group", "G2", "--family", "1", "--bound", "1", "--p", "5")
    assert (code, out) == (0, "#1^{0,1}\n#1^{1,0}\n")


def test_audit_exit_codes(capsys):
    assert run(capsys, "audit", "--group", "G2", "--family", "1", "--bound", "3", "--p", "5")[0] == 0
    code, out, _ = run(capsys, "audit", "--group", "E7", "--family", "60", "--bound", "1", "--p", "5")
    assert code == 1 and "injective: NO" in out


def test_export_dot_to_file(capsys, tmp_path):
    target = tmp_path / "g2.dot"
    assert run(capsys, "export-dot", "--group", "G2", "--p", "7", "-o", str(target))[0] == 0
    assert target.read_text().startswith('digraph "G2_p7" {')


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["overgroups", "--group", "G2", "--p", "2"], "--id"),
        (["lookup", "--group", "G2", "--id", "1", "--twists", "r=1,s=1", "--p", "5"], "twist condition"),
        (["lookup", "--group", "H4", "--id", "1"], "H4"),
        (["overgroups", "--group", "G2", "--id", "2", "--p", "all"], "--p"),
        (["verify", "--check", "nonsense", "--group", "G2"], "--check"),
        (["restrict", "--group", "G2", "--id", "5", "--module", "vm", "--p", "3"], "#5"),
        (["frobnicate"], "invalid choice"),
    ],
)
def test_usage_errors_exit_2(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2 and needle in err


def test_check_failure_exits_1(capsys, tmp_path):
    text = resources.files("irrlat.data").joinpath("g2.isl").read_text()
    text += '\nclass id=9 type="A2bar" in=0\nedge child=9 parent=0\nfactors id=9 min="10/01/00" adj="W(11)/10/01"\n'
    (tmp_path / "g2.isl").write_text(text)
    code, out, _ = run(capsys, "--data", str(tmp_path), "verify", "--check", "min-determines", "--group", "G2", "--p", "5", "--report")
    assert code == 1
    assert "min-determines\t5\t#4 #9\tcollision" in out


def test_output_is_byte_identical(capsys):
    argv = ["export-dot", "--group", "E6", "--p", "3"]
    first = run(capsys, *argv)
    assert run(capsys, *argv) == first


@pytest.mark.skipif(shutil.which("irrlat") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["irrlat", "overgroups", "--group", "G2", "--id", "2", "--p", "5", "--transitive"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "#2 #4 #6 #0\n"


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "irrlat.cli", "frobnicate"], capture_output=True, text=True)
    assert res.returncode == 2
