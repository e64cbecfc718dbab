from pathlib import Path

import numpy as np
import pytest

from zxblocks.cli import main
from zxblocks.fmt import parse_diagram
from zxblocks.semantics import parse_matrix

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_dims(capsys):
    assert run(capsys, "dims", CORPUS / "bell.zx") == (0, "in=0 out=2\n", "")
    code, out, _ = run(capsys, "dims", CORPUS / "acdc" / "stack_assoc_rhs.zx")
    assert code == 0 and out == "in=(+ 3 k) out=(+ 5 m)\n"


def test_eval_prints_matrix(capsys, tmp_path):
    code, out, _ = run(capsys, "eval", CORPUS / "swap.zx")
    assert code == 0
    assert np.array_equal(parse_matrix(out), np.eye(4)[[0, 2, 1, 3]])
    target = tmp_path / "m.txt"
    assert run(capsys, "eval", CORPUS / "bell.zx", "--braket", "-o", target)[0] == 0
    assert parse_matrix(target.read_text()).shape == (4, 1)


def test_prop(capsys):
    code, out, _ = run(capsys, "prop", CORPUS / "hh.zx", CORPUS / "wire.zx")
    assert code == 0 and out.startswith("proportional c=")
    c = complex(out.split("=")[1].strip().replace("i", "j"))
    assert c == pytest.approx(1)
    code, out, _ = run(capsys, "prop", CORPUS / "swap.zx", CORPUS / "nwire2.zx")
    assert (code, out) == (1, "not-proportional\n")
    code, _, err = run(capsys, "prop", CORPUS / "swap.zx", CORPUS / "wire.zx")
    assert code == 2 and err.startswith("error: shape-mismatch:")


def test_rewrite(capsys, tmp_path):
    src = tmp_path / "in.zx"
    src.write_text("(stack wire (compose (Z 1 1 pi/4) (Z 1 1 pi/4)))")
    code, out, _ = run(
        capsys, "rewrite", src, "--rule", "absolute_fusion", "--path", "1",
        "--param", "n=1", "--param", "m=1", "--param", "alpha=pi/4", "--param", "beta=pi/4",
    )
    assert code == 0 and out == "(stack wire (Z 1 1 pi/2))\n"
    code, _, err = run(capsys, "rewrite", src, "--rule", "hopf", "--path", "1")
    assert code == 2 and err.startswith("error: no-match:")
    code, _, err = run(capsys, "rewrite", src, "--rule", "hopf", "--path", "7")
    assert code == 2 and err.startswith("error: path-invalid:")
    code, _, err = run(capsys, "rewrite", src, "--rule", "absolute_fusion", "--param", "q=1")
    assert code == 2 and err.startswith("error: rule:")


def test_rewrite_with_diagram_parameter(capsys, tmp_path):
    src = tmp_path / "in.zx"
    src.write_text("(compose (nwire 2) swap)")
    code, out, _ = run(capsys, "rewrite", src, "--rule", "compose_id_left", "--param", "a=swap")
    assert (code, out) == (0, "swap\n")


def test_ingest(capsys, tmp_path):
    target = tmp_path / "out.zx"
    code, out, _ = run(capsys, "ingest", CORPUS / "circuits" / "far_cnot.zxc", "--verify", "-o", target)
    assert code == 0 and out.startswith("verify: proportional")
    d = parse_diagram(target.read_text())
    assert d is not None
    code, out, err = run(capsys, "ingest", CORPUS / "circuits" / "bell.zxc", "--verify")
    assert code == 0 and parse_diagram(out) and "proportional" in err


def test_struct_eq(capsys):
    acdc = CORPUS / "acdc"
    code, out, _ = run(capsys, "struct-eq", acdc / "assoc_ex_lhs.zx", acdc / "assoc_ex_rhs.zx")
    assert code == 0 and out.startswith("Equal")
    code, out, _ = run(capsys, "struct-eq", acdc / "swap.zx", acdc / "nwire2.zx", "--refute")
    assert code == 1
    assert out.splitlines()[0].startswith("NotProved (saturated")
    assert out.splitlines()[1].startswith("refute: matrices differ")
    code, out, _ = run(capsys, "struct-eq", acdc / "yank_lhs.zx", acdc / "yank_rhs.zx", "--refute")
    assert code == 1 and "no counterexample" in out


def test_check_rules(capsys):
    code, out, _ = run(capsys, "check-rules", "--rule", "hopf", "--rule", "colorswap:bi_pi", "--samples", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 and all(line.startswith("PASS") for line in lines)


def test_check_rules_with_laws(capsys):
    code, out, _ = run(capsys, "check-rules", "--rule", "yanking", "--acdc", "--acdc-samples", "3")
    assert code == 0
    assert sum(line.startswith("PASS acdc:") for line in out.splitlines()) == 17


def test_render(capsys, tmp_path):
    target = tmp_path / "bell.svg"
    assert run(capsys, "render", CORPUS / "bell.zx", "-o", target)[0] == 0
    assert target.read_text().startswith("<svg")
    code, out, _ = run(capsys, "render", CORPUS / "acdc" / "assoc_ex_rhs.zx", "--ascii")
    assert code == 0 and "═n═" in out


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["dims", "missing.zx"], "usage"),
        (["frobnicate"], "usage"),
        (["dims"], "usage"),
        (["prop", "a.zx"], "usage"),
        (["eval", "--unknown", "x"], "usage"),
    ],
)
def test_usage_errors(capsys, argv, kind):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith(f"error: {kind}:") and err.count("\n") == 1


def test_parse_and_dim_errors(capsys, tmp_path):
    bad = tmp_path / "bad.zx"
    bad.write_text("(stack wire")
    code, _, err = run(capsys, "dims", bad)
    assert code == 2 and err.startswith("error: parse:")
    bad.write_text("(compose (Z 1 2 0) wire)")
    code, _, err = run(capsys, "eval", bad)
    assert code == 2 and err.startswith("error: compose-mismatch:")
    circ = tmp_path / "bad.zxc"
    circ.write_text("qubits 2\ncnot 1 1\n")
    code, _, err = run(capsys, "ingest", circ)
    assert code == 2 and err.startswith("error: qubit-index:")
