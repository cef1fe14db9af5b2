"""End-to-end command-line checks against golden transcripts.

Every command is run in-process and compared byte-for-byte, so key order,
number formatting and trailing newlines are all part of the contract.
"""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from graphfp import variable_from_json
from graphfp.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def _d(name: str) -> str:
    return str(DATA / name)


GOLDEN_COMMANDS = {
    "paths.json": ["paths", "--graph", _d("h.json"), "--max-len", "2"],
    "reduce_ck.json": [
        "reduce", "--graph", _d("h.json"), "--word", "e1 e1*", "--mode", "ck",
    ],
    "reduce_toeplitz.json": [
        "reduce", "--graph", _d("h.json"), "--word", "e1 e1*", "--mode", "toeplitz",
    ],
    "reduce_zero.json": ["reduce", "--graph", _d("h.json"), "--word", "e1 e1"],
    "lattice.json": [
        "lattice", "--graph", _d("h.json"), "--word", "e1 e2 e2* e1*",
    ],
    "expect.json": ["expect", "--var", _d("mixed.json")],
    "moment.json": ["moment", "--var", _d("a_loop.json"), "-n", "4"],
    "moment_d.json": [
        "moment", "--var", _d("a_loop.json"), "-n", "2", "--d", _d("d_half.json"),
    ],
    "cumulant.json": [
        "cumulant", "--var", _d("a_loop.json"), "-n", "2", "--contributions",
    ],
    "free_pos.json": [
        "free", "--var", _d("e1_only.json"), "--var2", _d("e2_only.json"),
    ],
    "free_neg.json": [
        "free", "--var", _d("loop_only.json"), "--var2", _d("l2_only.json"),
    ],
    "classify.json": ["classify", "--var", _d("a_e1.json")],
    "compress_v1.json": [
        "compress", "--var", _d("compressvar.json"), "--vertices", "v1",
    ],
    "compress_diag.json": [
        "compress", "--var", _d("compressvar.json"), "--vertices", "v1,v2",
    ],
    "series_moment.json": [
        "series", "--var", _d("a_loop.json"), "--vertex", "v1", "--order", "4",
    ],
    "series_r.json": [
        "series", "--var", _d("a_loop.json"), "--vertex", "v1", "--order", "4",
        "--kind", "rtransform",
    ],
    "oracle.json": ["oracle", "--graph", _d("h.json"), "--trunc", "4"],
    "nc_debug.json": ["nc-debug", "-n", "4"],
    "expect_table.txt": [
        "expect", "--var", _d("mixed.json"), "--format", "table",
    ],
    "series_table.txt": [
        "series", "--var", _d("a_loop.json"), "--vertex", "v1", "--order", "4",
        "--format", "table",
    ],
}


@pytest.mark.parametrize("golden", sorted(GOLDEN_COMMANDS))
def test_golden_transcript(golden, capsys):
    argv = GOLDEN_COMMANDS[golden]
    assert main(argv) == 0
    out = capsys.readouterr().out
    expected = (GOLDEN / golden).read_text()
    assert out == expected


def test_output_is_run_to_run_stable(capsys):
    argv = GOLDEN_COMMANDS["cumulant.json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first


def test_json_outputs_are_parseable_and_compact(capsys):
    for golden, argv in GOLDEN_COMMANDS.items():
        if not golden.endswith(".json"):
            continue
        assert main(argv) == 0
        out = capsys.readouterr().out
        doc = json.loads(out)
        assert out == json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def test_compressed_variable_round_trips(capsys):
    assert main(GOLDEN_COMMANDS["compress_v1.json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    var = variable_from_json(doc)
    assert {str(w) for w, _s in var.terms} == {"v1", "e1 e2"}


# -- exit codes --------------------------------------------------------------------


def _run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_usage_errors_exit_one(capsys):
    for argv in ([], ["frobnicate"], ["paths", "--graph", _d("h.json")]):
        code, out, err = _run(argv, capsys)
        assert code == 1
        assert out == ""
        assert err


def test_format_errors_exit_two(tmp_path, capsys):
    mangled = tmp_path / "mangled.json"
    mangled.write_text("{not json")
    for argv in (
        ["paths", "--graph", str(mangled), "--max-len", "2"],
        ["paths", "--graph", str(tmp_path / "missing.json"), "--max-len", "2"],
        ["expect", "--var", _d("h.json")],
    ):
        code, out, err = _run(argv, capsys)
        assert code == 2
        assert out == ""
        assert err


def test_domain_errors_exit_three(capsys):
    for argv in (
        ["reduce", "--graph", _d("h.json"), "--word", "e9"],
        ["series", "--var", _d("a_loop.json"), "--vertex", "v9", "--order", "2"],
        ["moment", "--var", _d("a_loop.json"), "-n", "0"],
        ["cumulant", "--var", _d("a_loop.json"), "-n", "9"],
        ["nc-debug", "-n", "11"],
    ):
        code, out, err = _run(argv, capsys)
        assert code == 3
        assert out == ""
        assert err
