import json
import subprocess
import sys

import pytest

from birkhoff.cli import main, parse_zeros


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_facet_json(capsys):
    data = payload(capsys, "ehrhart", "--n", "3", "--zeros", "1,1", "--format", "json")
    assert data["schema"] == 1
    assert data["result"]["coefficients"] == ["1", "11/6", "1", "1/6"]
    assert data["zero_pattern"] == [[1, 1]]
    for key in ("n", "root", "dimension", "term_count", "elapsed_ms"):
        assert key in data


def test_count_oracle(capsys):
    assert payload(capsys, "count", "--n", "3", "--t", "2", "--method", "oracle")["result"] == 21


def test_count_formula(capsys):
    assert payload(capsys, "count", "--n", "3", "--t", "2")["result"] == 21
    facet = payload(capsys, "count", "--n", "4", "--t", "3", "--facet", "2,2")
    oracle = payload(capsys, "count", "--n", "4", "--t", "3", "--facet", "2,2", "--method", "oracle")
    assert facet["result"] == oracle["result"] == 927  # DP oracle value


def test_cry4_text(capsys):
    code, out, _ = run(capsys, "ehrhart", "--n", "4", "--cry", "--format", "text")
    assert code == 0
    assert out.splitlines()[0].endswith("+ 1/360*t^6")
    assert "leading coefficient = 1/360" in out
    assert "normalized volume = 2" in out


def test_volume(capsys):
    data = payload(capsys, "volume", "--n", "5", "--cry")
    assert data["result"]["normalized_volume"] == "10"
    assert data["dimension"] == 10
    oracle = payload(capsys, "volume", "--n", "3", "--method", "oracle")
    assert oracle["result"]["normalized_volume"] == "3"


def test_oracle_ehrhart_matches_formula(capsys):
    a = payload(capsys, "ehrhart", "--n", "3", "--facet", "2,1")
    b = payload(capsys, "ehrhart", "--n", "3", "--facet", "2,1", "--method", "oracle")
    assert a["result"] == b["result"]


def test_mgf_outputs(capsys):
    data = payload(capsys, "mgf", "--n", "2")
    assert data["result"] == [
        {"sign": 1, "vertex": [1, 2], "rays": [[-1, 1, 1, -1]]},
        {"sign": 1, "vertex": [2, 1], "rays": [[1, -1, -1, 1]]},
    ]
    code, out, _ = run(capsys, "mgf", "--n", "3", "--root", "3", "--format", "latex")
    assert code == 0
    assert out.count("\\frac{1}{1-") == 18 * 4
    code, _, _ = run(capsys, "mgf", "--n", "4", "--format", "latex")
    assert code == 2


def test_integrate(capsys, tmp_path):
    form = tmp_path / "form.json"
    form.write_text(json.dumps({"n": 3, "y": [["1", "1", "1"], ["0", "0", "0"], ["0", "0", "0"]]}))
    data = payload(capsys, "integrate", "--n", "3", "--form", str(form), "--power", "4")
    assert data["result"] == "3"
    form.write_text(json.dumps({"n": 3, "y": [["1", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]]}))
    assert payload(capsys, "integrate", "--n", "3", "--form", str(form), "--power", "1")["result"] == "1"


@pytest.mark.parametrize(
    "argv,code",
    [
        (["ehrhart", "--n", "3", "--zeros", "1,1;1,2;1,3"], 3),
        (["ehrhart", "--n", "3", "--zeros", "1;2"], 2),
        (["ehrhart", "--n", "3", "--zeros", "4,1"], 2),
        (["ehrhart", "--n", "1"], 2),
        (["ehrhart", "--n", "3", "--root", "5"], 2),
        (["ehrhart", "--n", "3", "--threads", "0"], 2),
        (["count", "--n", "6", "--t", "1", "--method", "oracle"], 4),
        (["count", "--n", "3", "--t", "-1"], 2),
        (["integrate", "--n", "3", "--form", "/nonexistent.json"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["ehrhart", "--n", "3", "--cry", "--facet", "1,1"])
    assert exc.value.code == 2


def test_parse_zeros():
    assert parse_zeros("1,1;2,3") == [(1, 1), (2, 3)]
    assert parse_zeros("") == []


def strip_elapsed(text):
    data = json.loads(text)
    data.pop("elapsed_ms")
    return json.dumps(data)


def test_determinism_across_threads(capsys):
    outs = set()
    for threads in ("1", "2", "8"):
        code, out, _ = run(capsys, "ehrhart", "--n", "4", "--threads", threads)
        assert code == 0
        outs.add(strip_elapsed(out))
    assert len(outs) == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--format", "text")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 8


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "birkhoff", "ehrhart", "--n", "2"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["result"]["coefficients"] == ["1", "1"]
