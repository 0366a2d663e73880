import json

import pytest

from crosspoly.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_coeffs(capsys):
    code, out, _ = call(capsys, "coeffs", "--d", "2", "--k", "2")
    assert code == 0
    assert json.loads(out)["coeffs"] == ["2", "4", "4"]
    code, out, _ = call(capsys, "coeffs", "--d", "2", "--k", "2", "--format", "text")
    assert out.strip() == "2 4 4"


def test_eval(capsys):
    code, out, _ = call(capsys, "eval", "--d", "3", "--k", "1", "--n", "1")
    assert json.loads(out) == {"d": 3, "k": 1, "n": 1, "P": "5", "scaled": "30"}


def test_bij_inverse_paper_example(capsys):
    code, out, _ = call(capsys, "bij", "inverse", "--word", "[8] o 5 1 7 [3] 4 o 2 6")
    assert code == 0
    assert json.loads(out) == {
        "permutation": "(4:b)(5 1 3:r)(7:b)(8:r)(9 2 6)",
        "labels": [4, 3, 3, 1],
        "word": "[8] o 5 1 7 [3] 4 o 2 6",
    }


def test_bij_forward(capsys):
    code, out, _ = call(
        capsys, "bij", "forward", "--perm", "(9 2 6)(4:b)(3 5 1:r)(7:b)(8:r)",
        "--k", "8", "--labels", "4,3,3,1", "--n", "4",
    )
    assert code == 0 and json.loads(out)["word"] == "[8] o 5 1 7 [3] 4 o 2 6"


def test_verify_alt_sums(capsys):
    code, out, _ = call(capsys, "verify", "alt-sums", "--d", "3", "--k", "3")
    report = json.loads(out)
    assert code == 0 and report["pass"] is True and report["lhs"] == "6"


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "endpoints", "--d", "4", "--k", "2"],
        ["verify", "cube", "--d", "6"],
        ["verify", "egf", "--d-max", "6", "--j-max", "6"],
        ["verify", "theorem", "--d", "3", "--k", "2"],
        ["verify", "remark45", "--d", "3", "--k", "1"],
        ["verify", "words-count", "--d", "3", "--k", "2", "--n", "2"],
        ["verify", "lattice", "--d", "3", "--k", "2", "--n", "3"],
    ],
)
def test_verify_subcommands_pass(capsys, argv):
    code, out, _ = call(capsys, *argv)
    assert code == 0 and json.loads(out)["pass"] is True


def test_verify_failure_exit_code(capsys, monkeypatch):
    from crosspoly import ehrhart
    from crosspoly.report import Report

    monkeypatch.setattr(ehrhart, "cube_identity_check", lambda d: Report("cube", {"d": d}, 1, 2))
    code, out, _ = call(capsys, "verify", "cube", "--d", "2")
    assert code == 2 and json.loads(out)["pass"] is False


def test_involutions(capsys):
    code, out, _ = call(capsys, "involution", "alt-k-eq-d", "--input", "(3 1 2)")
    assert json.loads(out)["image"] == "(2:mark)(3 1)"
    code, out, _ = call(
        capsys, "involution", "theorem", "--k", "12",
        "--input", "(6 4 3:b)(9 2:r)(11 7:r)(10 1:b)(13 5 8 12)",
    )
    assert json.loads(out)["image"] == "(6 4 3:b)(9 2:b)(10 1:b)(11 7:r)(13 5 8 12)"
    code, out, _ = call(
        capsys, "involution", "alt-small-k", "--k", "1", "--input", "(1:r)(3 2)"
    )
    assert json.loads(out)["image"] == "(1:r)(2)(3)"


def test_enumerate(capsys):
    code, out, _ = call(capsys, "enumerate", "C", "--d", "2", "--k", "2", "--j", "0", "--format", "text")
    assert out.split("\n")[:2] == ["(3 1 2)", "(3 2 1)"]
    code, out, _ = call(capsys, "enumerate", "W", "--d", "3", "--k", "1", "--n", "1")
    assert len(out.strip().split("\n")) == 30


def test_oracle(capsys):
    code, out, _ = call(capsys, "oracle", "lattice", "--d", "3", "--k", "1", "--n", "1")
    assert json.loads(out)["count"] == "5"


@pytest.mark.parametrize(
    "argv",
    [
        ["coeffs", "--d", "2", "--k", "5"],
        ["bij", "inverse", "--word", "1 1 o"],
        ["involution", "theorem", "--k", "1", "--input", "(1:r)(3 2)"],
        ["enumerate", "C", "--d", "9", "--k", "0", "--j", "1"],
        ["oracle", "lattice", "--d", "9", "--k", "0", "--n", "1"],
        ["coeffs", "--d", "x"],
    ],
)
def test_invalid_input_exits_one(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 1 and err


def test_deterministic_output(capsys):
    first = call(capsys, "enumerate", "W", "--d", "3", "--k", "2", "--n", "2")
    second = call(capsys, "enumerate", "W", "--d", "3", "--k", "2", "--n", "2")
    assert first == second
