import subprocess
import sys
from pathlib import Path

import pytest

from fgtool import catalog, checks
from fgtool.cli import EXIT_CHECK_FAILED, EXIT_INPUT, EXIT_OK, main, run_command
from fgtool.combinatorics import complete_quiver
from fgtool.formats import parse_presentation, parse_structure

DATA = Path(__file__).resolve().parent.parent / "data"


def run(*argv):
    report, code, message = run_command([str(a) for a in argv])
    return report, code, message


def machine_section(report):
    return "".join(line + "\n" for line in report.text.splitlines() if not line.startswith("#"))


def test_hexagon_quiver_pi1():
    report, code, _ = run("quiver", "pi1", DATA / "hexagon.qv")
    assert code == EXIT_OK
    p, inv = parse_presentation(report.text)
    assert (len(p.generators), len(p.relators), inv.abelian_rank) == (1, 0, 1)
    assert report.text.splitlines()[0].startswith("# command: fgtool quiver pi1")
    assert report.summary == "infinite cyclic group (free of rank 1)"


def test_vankampen_diamond_is_trivial():
    report, code, _ = run("vankampen", DATA / "diamond.qv", DATA / "left.qv", DATA / "right.qv")
    assert code == EXIT_OK and report.summary == "trivial group"
    p, inv = parse_presentation(report.text)
    assert p.generators == () and inv.abelian_rank == 0


def test_structure_commands_emit_parsable_files():
    report, code, _ = run("quiver", "complete", DATA / "square.qv")
    assert code == EXIT_OK
    assert parse_structure(machine_section(report)) == complete_quiver(catalog.square_quiver())
    for argv in (
        ("complex", "pos", DATA / "triangle.sc"),
        ("complex", "barycentric", DATA / "triangle.sc"),
        ("poset", "sim", DATA / "hexagon.po"),
        ("poset", "hasse", DATA / "crown.po"),
        ("quiver", "order", DATA / "square.qv"),
    ):
        report, code, _ = run(*argv)
        assert code == EXIT_OK
        parse_structure(machine_section(report))


def test_homology_commands():
    report, _, _ = run("complex", "h1", DATA / "rp2.sc")
    assert "h1: rank 0\ntorsion: 2\n" in report.text
    report, _, _ = run("complex", "h1dim", DATA / "rp2.sc", "--char", "2")
    assert "h1dim: 1\n" in report.text
    report, _, _ = run("poset", "hh1", DATA / "hexagon.po", "--char", "3")
    assert "hh1: 1\n" in report.text


def test_torus_pi1_report():
    report, code, _ = run("complex", "pi1", DATA / "torus7.sc")
    _, inv = parse_presentation(report.text)
    assert code == EXIT_OK and (inv.abelian_rank, inv.torsion) == (2, ())


def test_check_command_passes_and_is_deterministic():
    first, code, _ = run("check", "theorem2", "--seed", "7", "--count", "25", "--max-size", "8")
    assert code == EXIT_OK and first.summary == "25/25 matches"
    second, _, _ = run("check", "theorem2", "--seed", "7", "--count", "25", "--max-size", "8")
    assert first.text == second.text


def test_failed_check_exits_2(monkeypatch):
    failing = lambda **kw: checks.CheckSummary("theorem2", (checks.CaseResult("x", False, "forced"),))  # noqa: E731
    monkeypatch.setitem(checks.CHECKS, "theorem2", failing)
    report, code, _ = run("check", "theorem2")
    assert code == EXIT_CHECK_FAILED and "FAIL x: forced" in report.text


@pytest.mark.parametrize(
    "argv",
    [
        ("quiver", "pi1", "/nonexistent.qv"),
        ("quiver", "frobnicate", "x"),
        ("poset", "pi1", str(DATA / "hexagon.qv")),
        ("complex", "h1dim", str(DATA / "rp2.sc"), "--char", "4"),
        ("vankampen", str(DATA / "diamond.qv"), str(DATA / "left.qv"), str(DATA / "left.qv")),
        (),
    ],
)
def test_input_errors_exit_1(argv):
    report, code, message = run_command(list(argv))
    assert report is None and code == EXIT_INPUT and message


def test_errors_name_file_and_line(tmp_path):
    bad = tmp_path / "loop.qv"
    bad.write_text("vertex a\narrow f a a\n")
    _, code, message = run("quiver", "pi1", bad)
    assert code == EXIT_INPUT and str(bad) in message and "line 2" in message


def test_main_writes_report(capsys):
    assert main(["quiver", "pi1", str(DATA / "hexagon.qv")]) == EXIT_OK
    assert "gens:" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fgtool", "quiver", "nope", "x"], capture_output=True, text=True
    )
    assert proc.returncode == EXIT_INPUT and "invalid choice" in proc.stderr
