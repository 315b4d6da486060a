import io
import json
from pathlib import Path

import pytest

from soficzeta.cli import dumps, run
from soficzeta.graph import parse_labelled_graph
from soficzeta.presentation import is_isomorphic

DATA = Path(__file__).parent / "data"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_json():
    code, out, _ = call("analyze", "--input", DATA / "even.json", "--max-n", 10, "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["zeta"] == {"numerator": [1, 1], "denominator": [1, -1, -1]}
    assert report["tables"]["F"][:5] == [2, 2, 5, 6, 12]
    assert report["p"] == 1
    assert report["spectral_gap"]["passed"] is True


def test_analyze_text_and_csv():
    code, out, _ = call("analyze", "--input", DATA / "period2.json", "--max-n", 8)
    assert code == 0
    assert "zeta: (1 + z) / (1 - 2z^2)" in out
    code, out, _ = call("analyze", "--input", DATA / "even.json", "--max-n", 3, "--format", "csv")
    lines = out.splitlines()
    assert lines[0] == "n,F,O,pi,log_mertens_product,mertens_sum"
    assert lines[1].startswith("1,2,2,2,")
    assert len(lines) == 4


def test_json_round_trip_and_determinism():
    args = ("analyze", "--input", DATA / "even.json", "--max-n", 12, "--format", "json")
    _, first, _ = call(*args)
    _, second, _ = call(*args)
    assert first == second
    assert dumps(json.loads(first)) == first


def test_verify():
    code, out, _ = call("verify", "--input", DATA / "even.json", "--max-n", 10)
    assert code == 0
    assert "n=1..10: agree" in out
    assert "rho(unsigned A_2) = 1 < lambda" in out
    code, out, _ = call("verify", "--input", DATA / "redundant_even.json", "--max-n", 12, "--format", "json")
    assert code == 0 and json.loads(out)["passed"]


def test_zeta_command():
    code, out, _ = call("zeta", "--input", DATA / "golden.json", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"numerator": [1], "denominator": [1, -1, -1]}
    code, out, _ = call("zeta", "--input", DATA / "even.json")
    assert out == "zeta(z) = (1 + z) / (1 - z - z^2)\n"


def test_minimize_command():
    code, out, _ = call("minimize", "--input", DATA / "redundant_even.json")
    assert code == 0
    m = parse_labelled_graph(out)
    assert is_isomorphic(m, parse_labelled_graph((DATA / "even.json").read_text()))


def test_counts_command():
    code, out, _ = call("counts", "--input", DATA / "golden.json", "--max-n", 5, "--format", "json")
    assert code == 0
    census = json.loads(out)
    assert census["F"] == [1, 3, 4, 7, 11]
    assert census["O"] == [1, 1, 1, 1, 2]
    assert census["pi"][-1] == 6


def test_extension_command():
    code, out, _ = call("extension", "--input", DATA / "even.json", "--group", DATA / "z2.json",
                        "--psi", DATA / "psi_even.json", "--oracle-n", 5, "--format", "json")
    assert code == 0
    classes = json.loads(out)["classes"]
    assert [c["pi"] for c in classes] == [2, 4]


def test_random_command_is_seeded():
    _, a, _ = call("random", "--seed", 3, "--vertices", 3)
    _, b, _ = call("random", "--seed", 3, "--vertices", 3)
    assert a == b
    parse_labelled_graph(a)


def test_exit_codes(tmp_path):
    code, _, err = call("analyze", "--input", DATA / "reducible.json")
    assert code == 2 and "strongly connected components" in err
    code, _, _ = call("analyze", "--input", tmp_path / "missing.json")
    assert code == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert call("zeta", "--input", bad)[0] == 1
    assert call("analyze", "--input", DATA / "even.json", "--max-vertices", 1)[0] == 4
    assert call("verify", "--input", DATA / "full2.json", "--max-n", 30, "--oracle-n", 30)[0] == 4
    assert call("extension", "--input", DATA / "even.json")[0] == 1
    assert call("zeta")[0] == 1


def test_no_minimize_keeps_presentation():
    code, out, _ = call("analyze", "--input", DATA / "redundant_even.json", "--no-minimize", "--format", "json")
    assert code == 2  # reducible presentation as given
    code, out, _ = call("zeta", "--input", DATA / "redundant_even.json", "--format", "json")
    assert json.loads(out) == {"numerator": [1, 1], "denominator": [1, -1, -1]}
