"""Command-line behavior: verdict exit codes, JSON output, input formats."""

from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from xorkron import graph6_decode, graph6_encode, new_graph, standard_graph, tensor_product
from xorkron.cli import main

MATCHING_G6 = graph6_encode(tensor_product(standard_graph("complete", 2), standard_graph("complete", 2)))
PRODUCT_33_G6 = graph6_encode(tensor_product(standard_graph("complete", 3), standard_graph("complete", 3)))


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_product_and_standard_tokens(capsys):
    code, out, _ = run(capsys, "product", "K2", "K2")
    assert code == 0 and out.strip() == MATCHING_G6


def test_xor_cancels(capsys):
    code, out, _ = run(capsys, "xor", MATCHING_G6, MATCHING_G6)
    assert code == 0
    assert graph6_decode(out.strip()) == standard_graph("edgeless", 4)


def test_xor_mismatch_is_an_input_error(capsys):
    code, _, err = run(capsys, "xor", "K2", "K3")
    assert code == 2 and "error" in err


def test_elementary_edge_list_output(capsys):
    code, out, _ = run(capsys, "elementary", "2", "3", "0", "1", "0", "2", "--edges")
    assert code == 0
    assert out == "6\n0 5\n2 3\n"


def test_member_verdict_and_json(capsys):
    code, out, _ = run(capsys, "member", "--p", "2", "--q", "2", MATCHING_G6)
    assert code == 0
    cert = json.loads(out)
    assert cert["verdict"] == "member"
    assert cert["summands"] == [[0, 1, 0, 1]]

    code, out, _ = run(capsys, "member", "--p", "2", "--q", "2", "P4")
    assert code == 1
    assert json.loads(out)["verdict"] == "non-member"


def test_member_bad_input_exits_2(capsys):
    code, _, err = run(capsys, "member", "--p", "2", "--q", "2", "K3")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "member", "--p", "2", "--q", "2", "not graph6 at all")
    assert code == 2


def test_member_verify_flag(capsys):
    code, out, _ = run(capsys, "member", "--p", "3", "--q", "3", PRODUCT_33_G6, "--verify")
    assert code == 0 and json.loads(out)["verdict"] == "member"


def test_recognize_verdicts(capsys):
    code, out, _ = run(capsys, "recognize", "--p", "2", "--q", "2", "C4", "--no-prefilter")
    assert code == 1
    assert json.loads(out)["witness"]["reason"] == "search-exhausted"

    code, out, _ = run(capsys, "recognize", "--p", "2", "--q", "2", "C4")
    assert code == 1
    assert json.loads(out)["witness"]["reason"] == "edge-bound-exceeded"


def test_recognize_scale_guard(capsys):
    code, _, err = run(capsys, "recognize", "--p", "4", "--q", "5", "E20")
    assert code == 2 and "--force" in err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--p", "3", "--q", "3", PRODUCT_33_G6)
    assert code == 0
    assert len(json.loads(out)["summands"]) == 9


def test_t2_with_oracle(capsys):
    code, out, _ = run(capsys, "t2", "--p", "3", "--q", "3", PRODUCT_33_G6, "--oracle", "--all-labelings")
    assert code == 0
    data = json.loads(out)
    assert data == {"t2": 1, "oracle": 1, "min_over_labelings": 1}

    code, out, _ = run(capsys, "t2", "--p", "2", "--q", "2", "P4")
    assert code == 1
    assert json.loads(out)["verdict"] == "non-member"


def test_ppt_check_and_dump(capsys):
    fixed_path = graph6_encode(new_graph(4, [(0, 2), (0, 3), (1, 2)]))
    code, out, _ = run(capsys, "ppt-check", "--p", "2", fixed_path)
    assert code == 0 and out.strip() == "fixed-point: yes"

    code, out, err = run(capsys, "ppt-check", "--p", "2", "P4", "--dump")
    assert code == 1
    assert out == "0101\n1000\n0001\n1010\n"
    assert "fixed-point: no" in err

    code, _, _ = run(capsys, "ppt-check", "--p", "3", "P4")
    assert code == 2


def test_build_ppt(capsys):
    code, out, err = run(capsys, "build-ppt", "P3", "--verify")
    assert code == 0
    first, rest = out.split("\n", 1)
    h = graph6_decode(first)
    assert h.n == 9 and h.edge_count == 4
    assert json.loads(rest)["verdict"] == "member"
    assert "2 K2" in err and "2 K1" in err and "verified" in err


def test_census_listing_and_stats(capsys):
    code, out, _ = run(capsys, "census", "--p", "2", "--q", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert graph6_decode(lines[0]) == standard_graph("edgeless", 4)
    assert graph6_decode(lines[1]) == graph6_decode(MATCHING_G6)

    code, out, _ = run(capsys, "census", "--p", "2", "--q", "3", "--stats")
    assert code == 0
    stats = json.loads(out)
    assert stats["count"] == 8
    assert stats["edge_bound"] == 6
    assert sum(stats["t2_counts"].values()) == 8
    assert len(stats["bound_attained"]) == 1


def test_census_scale_guard(capsys):
    code, _, err = run(capsys, "census", "--p", "4", "--q", "5")
    assert code == 2 and "--force" in err


def test_verify_command(tmp_path, capsys):
    code, out, _ = run(capsys, "member", "--p", "2", "--q", "2", MATCHING_G6)
    cert_path = tmp_path / "cert.json"
    cert_path.write_text(out)
    code, out, _ = run(capsys, "verify", str(cert_path))
    assert code == 0 and "certificate ok" in out

    tampered = json.loads(cert_path.read_text())
    tampered["summands"] = []
    cert_path.write_text(json.dumps(tampered))
    code, _, err = run(capsys, "verify", str(cert_path))
    assert code == 1 and "verify:" in err

    cert_path.write_text("{not json")
    code, _, err = run(capsys, "verify", str(cert_path))
    assert code == 2


def test_graph_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text("4\n0 3\n1 2\n")
    code, out, _ = run(capsys, "member", "--p", "2", "--q", "2", str(path))
    assert code == 0 and json.loads(out)["verdict"] == "member"

    monkeypatch.setattr(sys, "stdin", io.StringIO(MATCHING_G6 + "\n"))
    code, out, _ = run(capsys, "member", "--p", "2", "--q", "2", "-")
    assert code == 0 and json.loads(out)["verdict"] == "member"


def test_usage_errors_exit_2(capsys):
    assert main(["member", "--p", "2"]) == 2
    capsys.readouterr()
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_console_script_runs():
    proc = subprocess.run(
        ["xorkron", "member", "--p", "2", "--q", "2", MATCHING_G6],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "member"


def test_console_script_help():
    proc = subprocess.run(["xorkron", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "census" in proc.stdout
