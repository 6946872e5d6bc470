import hashlib
import json

import pytest

from deligne.cli import SCHEMA_VERSION, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def report(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


@pytest.mark.parametrize("name,order,w0len", [("A3", 24, 6), ("D4", 192, 12)])
def test_verify_coxeter(name, order, w0len, capsys):
    code, rep = report(["verify", "coxeter", "--type", name], capsys)
    assert code == 0 and rep["passed"]
    assert rep["result"]["order"] == order
    assert rep["result"]["w0_length"] == w0len
    assert rep["schemaVersion"] == SCHEMA_VERSION
    assert rep["config"]["type"] == name


@pytest.mark.parametrize("bad", ["D9", "Q3", "D2"])
def test_verify_coxeter_bad_type(bad, capsys):
    assert main(["verify", "coxeter", "--type", bad]) == 2


@pytest.mark.parametrize("n", [3, 4])
def test_verify_iso(n, capsys):
    code, rep = report(["verify", "iso", "--n", str(n)], capsys)
    assert code == 0 and rep["result"]["failures"] == []


def test_verify_iso_out_of_range(capsys):
    assert main(["verify", "iso", "--n", "2"]) == 2


def test_enumerate_small(capsys):
    code, out = run(["enumerate", "ball", "--type", "D4", "--radius", "0"], capsys)
    assert code == 0 and len(out.splitlines()) == 1
    code, out = run(["enumerate", "ball", "--type", "A1", "--radius", "1"], capsys)
    assert len(out.splitlines()) == 3


def test_enumerate_deterministic(tmp_path):
    digests = []
    for name in ("a.jsonl", "b.jsonl"):
        path = tmp_path / name
        assert main(["enumerate", "ball", "--type", "D4", "--radius", "1", "--out", str(path)]) == 0
        digests.append(hashlib.sha256(path.read_bytes()).hexdigest())
    assert digests[0] == digests[1]


def test_enumerate_negative_radius():
    assert main(["enumerate", "ball", "--radius", "-1"]) == 2


def test_generate_requires_seed():
    assert main(["generate", "zigzag", "--type", "D4", "--samples", "3"]) == 2


def test_generate_and_search(tmp_path, capsys):
    path = tmp_path / "alt.jsonl"
    assert main(["generate", "alternating", "--type", "D4", "--seed", "7", "--samples", "5",
                 "--ball", "1", "--kmax", "1", "--out", str(path)]) == 0
    assert len(path.read_text().splitlines()) == 5
    code, rep = report(["search", "center", "--input", str(path), "--search", "4", "--ctype", "d2"], capsys)
    assert code == 0
    assert rep["result"]["found"] == 5 and rep["result"]["refuted"] == 0
    for case in rep["result"]["cases"]:
        assert case["center"]["type"] == "d2" and case["witnesses_valid"]
    code, rep = report(["search", "quasi-center", "--input", str(path), "--search", "3"], capsys)
    assert code == 0 and rep["result"]["found"] == 5


def test_search_identity_hexagon(tmp_path, capsys):
    path = tmp_path / "id.json"
    path.write_text(json.dumps({"type": "D4", "types": ["d1", "d3"] * 3, "words": [[]] * 6}))
    code, rep = report(["search", "center", "--input", str(path), "--search", "0"], capsys)
    assert code == 0
    case = rep["result"]["cases"][0]
    assert case["degenerate"] and case["center"] is not None


def test_search_not_closed(tmp_path, capsys):
    path = tmp_path / "bad.json"
    words = [[["d2", 1]], [["d1", 1]], [], [], [], []]
    path.write_text(json.dumps({"type": "D4", "types": ["d1", "d3"] * 3, "words": words}))
    assert main(["search", "center", "--input", str(path)]) == 2


def test_suite_ls(capsys):
    code, rep = report(["suite", "ls", "--maxlen", "3", "--exps", "2,3"], capsys)
    assert code == 0 and rep["result"]["violations"] == 0


def test_suite_zigzag_small(capsys):
    code, rep = report(["suite", "zigzag", "--type", "D4", "--samples", "5", "--seed", "7"], capsys)
    assert code == 0 and rep["result"]["refuted"] == 0
    assert rep["seed"] == 7


def test_suite_needs_seed():
    assert main(["suite", "zigzag", "--type", "D4", "--samples", "5"]) == 2


def test_suite_fourwheel_ball_one(capsys):
    code, rep = report(["suite", "fourwheel", "--type", "D4", "--ball", "1", "--search", "1"], capsys)
    assert code == 0 and rep["result"]["refuted"] == 0


def test_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("DELIGNE_CACHE_DIR", str(tmp_path))
    args = ["suite", "downward-flag", "--type", "D4", "--ball", "1", "--search", "1"]
    code, first = report(args, capsys)
    assert code == 0
    cached = tmp_path / "ball_D4_r1.jsonl"
    assert cached.exists()
    code, second = report(args, capsys)
    assert second["result"] == first["result"]


def test_out_file(tmp_path):
    path = tmp_path / "sub" / "ls.json"
    assert main(["suite", "ls", "--maxlen", "2", "--out", str(path)]) == 0
    assert json.loads(path.read_text())["passed"]


def test_argparse_errors():
    with pytest.raises(SystemExit) as info:
        main(["nonsense"])
    assert info.value.code == 2
