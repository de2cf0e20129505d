import json
import subprocess
import sys

import pytest

from parityperm import acceptance
from parityperm.cli import main

K18_GI = "6 5 10 1 18 17 15 7 8 3 14 11 12 9 16 13 4 2"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_gi(capsys):
    code, out, _ = run(capsys, "enumerate", "gi", "4")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8 and lines[0] == "1 4 3 2"


def test_enumerate_co(capsys):
    code, out, _ = run(capsys, "enumerate", "co", "6")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 8 and lines[0] == "1 2 3 4 5 6"


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "enumerate", "gi", "2")
    assert code == 0
    assert json.loads(out) == {"family": "gi", "two_n": 2, "items": [[1, 2], [2, 1]]}


@pytest.mark.parametrize("argv", [
    ("enumerate", "gi", "3"),
    ("enumerate", "nope", "4"),
    ("count", "gi"),
    ("label", "--family", "gi"),
    ("label", "--family", "gi", "--region", "n=2;+"),
    ("map", "--name", "eta", "--perm", "1234"),
    ("map", "--name", "varphi", "--perm", "654312"),
    ("frobnicate",),
])
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


@pytest.mark.parametrize("argv", [
    ("enumerate", "gi", "12"),
    ("--max-n", "2", "count", "gi", "6"),
    ("regions", "5", "--count"),
])
def test_bound_exceeded(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3 and "exceeds" in err


def test_count(capsys):
    assert run(capsys, "count", "gi", "8")[1] == "608\n"
    assert run(capsys, "count", "gi", "6", "--refined")[1] == "3\t3\t8\t6\t28\t8\n"
    code, out, _ = run(capsys, "--output", "json", "count", "d3", "8")
    assert json.loads(out) == {"family": "d3", "two_n": 8, "count": 155}


def test_count_independent_of_jobs(capsys):
    one = run(capsys, "--jobs", "1", "count", "eperm", "8", "--refined")[1]
    two = run(capsys, "--jobs", "2", "count", "eperm", "8", "--refined")[1]
    assert one == two


def test_triangle(capsys):
    code, out, _ = run(capsys, "triangle", "10")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 10
    assert lines[6] == "7\t8\t14\t17\t17"
    assert lines[9] == "10\t608\t552\t448\t310\t155"
    code, out, _ = run(capsys, "--output", "json", "triangle", "3")
    assert json.loads(out) == {"rows": [[1], [1], [1, 1]]}


def test_regions(capsys):
    assert run(capsys, "regions", "2", "--count")[1] == "8\n"
    code, out, _ = run(capsys, "regions", "1")
    assert out.splitlines() == ["n=1;+", "n=1;-"]
    code, out, _ = run(capsys, "--output", "json", "regions", "1")
    assert json.loads(out) == {"n": 1, "items": ["n=1;+", "n=1;-"]}


def test_label_k18(capsys):
    code, out, _ = run(capsys, "label", "--family", "gi", "--region", "@example-k18")
    assert code == 0 and out.strip() == K18_GI
    # the same region given by its sign text
    text = out
    from parityperm.arrangement import example_k18, format_region

    code, out, _ = run(capsys, "label", "--family", "gi", "--region", format_region(example_k18()))
    assert out == text


def test_label_all(capsys):
    code, out, _ = run(capsys, "--output", "json", "label", "--all", "--region", "@example-k18")
    item = json.loads(out)["items"][0]
    assert " ".join(map(str, item["gi"])) == K18_GI
    assert " ".join(map(str, item["giv"])) == acceptance.K18_IMAGES["giv"]
    code, out, _ = run(capsys, "label", "--family", "giii", "--n", "2")
    assert code == 0 and len(out.splitlines()) == 8


@pytest.mark.parametrize("argv, expected", [
    (("--name", "psi", "--perm", "324165"), "5 6 2 1 4 3"),
    (("--name", "psi", "--perm", "562143", "--inv"), "3 2 4 1 6 5"),
    (("--name", "varphi", "--n", "3", "--k", "2", "--perm", "651432"), "4 1 6 5 3 2"),
    (("--name", "Phi", "--n", "3", "--k", "3", "--perm", "651432"), "1 3 6 4 2 5"),
    (("--name", "f", "--perm", "12", "--inv", "--n", "2"), "3 4 2 1"),
    (("--name", "vartheta", "--perm", "5 10 7 12 11 9 8 4 3 1 6 2", "--cycles"), "(5 9 11 12 8 7 10)(4)(3)(1 6 2)"),
    (("--name", "vartheta", "--inv", "--perm", "(5 9 11 12 8 7 10)(4)(3)(1 6 2)"), "5 10 7 12 11 9 8 4 3 1 6 2"),
    (("--name", "theta", "--perm", "123456"), "3 1 4 2"),
])
def test_map(capsys, argv, expected):
    code, out, _ = run(capsys, "map", *argv)
    assert code == 0 and out.strip() == expected


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "--region", "@example-k18")
    assert code == 0 and out.startswith("digraph region {") and out.count("->") > 0


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2")
    lines = out.splitlines()
    assert code == 0
    assert lines and all(line.startswith("PASS") for line in lines)


def test_verify_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "verify", "--max-n", "2", "--criteria-only")
    data = json.loads(out)
    assert code == 0 and data["ok"] and len(data["results"]) == 9


def test_verify_fails_on_corrupted_constant(capsys, monkeypatch):
    bad = list(acceptance.SEIDEL_ROWS)
    bad[6] = (8, 14, 18, 17)
    monkeypatch.setattr(acceptance, "SEIDEL_ROWS", tuple(bad))
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--criteria-only")
    assert code == 1
    assert "FAIL criterion 3" in out


def test_flags_after_subcommand(capsys):
    code, out, _ = run(capsys, "count", "gi", "4", "--output", "json")
    assert code == 0 and json.loads(out)["count"] == 8


def test_console_script():
    out = subprocess.run(
        [sys.executable, "-m", "parityperm.cli", "regions", "2", "--count"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "8\n"
