import io
import subprocess
import sys

import pytest

from knotoids import fixture_path
from knotoids.cli import main

FIG5 = str(fixture_path("fig5.pkd"))


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = main(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def test_genus_example():
    assert run("genus", "O1+ U1+") == (0, "0\n", "")
    assert run("genus", "O1+ O2+ U1+ U2+")[1] == "1\n"
    assert run("classical", "O1+ O2+ U1+ U2+")[1] == "false\n"


def test_closure_example():
    status, out, _ = run("closure", "--type", "under", FIG5)
    assert status == 0
    assert len(out.split()) == 8  # three crossings plus one added by the closing arc
    assert run("closure", "--type", "virtual", FIG5)[1] == "O1+ O2+ U3+ U1+ O3+ U2+\n"


def test_equiv_example():
    status, out, _ = run("equiv", "", "O1+ U1+", "--max-depth", "2")
    assert status == 0
    assert out.splitlines()[0] == "EQUIVALENT"
    assert out.splitlines()[1] == "R1+@0#0"


def test_equiv_distinct():
    status, out, _ = run("equiv", "", "O1+ U2+ U1+ O2+")
    assert status == 0
    assert out.splitlines() == ["DISTINCT", "f 1:0 -1:-10;1:-6;1:-4"]


def test_polynomials():
    assert run("bracket", "--cyclic", "O1+ U1+")[1] == "-1:3\n"
    assert run("bracket", "--cyclic", "--normalized", "O1+ U1+")[1] == "1:0\n"
    assert run("f", "--type", "under", FIG5)[1] == "-1:-16;1:-12;1:-4\n"
    assert run("f", "--type", "over", FIG5)[1] == "1:0\n"
    assert run("f", "")[1] == "1:0\n"


def test_canon_product_apply_moves():
    assert run("canon", "U7- O3+ O7- U3+")[1] == "U1- O2+ O1- U2+\n"
    assert run("product", "O1+ U1+", "U1- O1-")[1] == "O1+ U1+ U2- O2-\n"
    assert run("apply", "O1+ U1+", "R1-@0#0")[1] == "\n"
    out = run("moves", "O1+ U1+", "--max-crossings", "1")[1]
    assert out == "R1-@0#0\n"


def test_files(tmp_path):
    gko = tmp_path / "k.gko"
    gko.write_text("# kink\nU1+ O1+\n")
    assert run("validate", str(gko)) == (0, "valid\n", "")
    assert run("genus", FIG5)[1] == "0\n"


def test_min_genus_and_tabulate(tmp_path):
    out = run("min-genus", "O1+ O2+ U1+ U2+", "--max-crossings", "3", "--max-nodes", "500")[1]
    assert out == "1\tO1+ O2+ U1+ U2+\n"
    path = tmp_path / "t.tab"
    assert run("tabulate", "1", "--out", str(path), "--max-crossings", "2")[1] == "5\n"
    assert path.read_text().startswith("#knotoid-tab v1\n")


@pytest.mark.parametrize(
    "argv, reason",
    [
        (("validate", "O1+ U1-"), "validation"),
        (("validate", "O1+ X"), "syntax"),
        (("closure", "--type", "under", "O1+ O2+ U1+ U2+"), "not-classical"),
        (("bracket", "--cap", "1", "O1+ U2+ U1+ O2+"), "cap-exceeded"),
        (("closure", "--type", "under", "--route", "0", FIG5), "route-invalid"),
        (("apply", "O1+ U1+", "R1-@0#3"), "stale-site"),
    ],
)
def test_domain_errors(argv, reason):
    status, out, err = run(*argv)
    assert status == 1 and out == ""
    assert err.startswith(f"error:{reason}: ")
    assert err.count("\n") == 1


def test_usage_errors():
    assert run("tabulate", "1")[0] == 2
    assert run("genus", "", "--max-nodes", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        run("frobnicate")
    assert exc.value.code == 2


def test_console_script_exit_codes():
    ok = subprocess.run([sys.executable, "-m", "knotoids.cli", "genus", "O1+ U1+"], capture_output=True, text=True)
    assert (ok.returncode, ok.stdout) == (0, "0\n")
    bad = subprocess.run([sys.executable, "-m", "knotoids.cli", "genus", "O1+"], capture_output=True, text=True)
    assert bad.returncode == 1 and bad.stderr.startswith("error:validation:")
    usage = subprocess.run([sys.executable, "-m", "knotoids.cli", "genus"], capture_output=True, text=True)
    assert usage.returncode == 2
