import json

import pytest

from curves import LINE, worked_curve
from tropzar.cli import main
from tropzar.formats import curve_to_json
from tropzar.trop_rational import example_line


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.fixture
def curve_file(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(curve_to_json(worked_curve())))
    return str(p)


def test_polytope(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"vertices": [[1, 0], [-1, 3], [0, 0]]}))
    rc, out, _ = run(capsys, "polytope", "--file", str(p), "--report")
    data = json.loads(out)
    assert rc == 0 and data["area2"] == 3 and data["interior"] == 1


def test_polytope_degenerate(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [2, 0]]}))
    assert run(capsys, "polytope", "--file", str(p))[0] == 3


def test_curve_commands(capsys, curve_file, tmp_path):
    rc, out, _ = run(capsys, "curve", "validate", "--file", curve_file)
    assert rc == 0 and json.loads(out)["valid"]
    rc, out, _ = run(capsys, "curve", "degree", "--file", curve_file)
    assert rc == 0 and json.loads(out)["degree"] == LINE.to_json()
    svg = tmp_path / "c.svg"
    rc, _, _ = run(capsys, "curve", "plot", "--file", curve_file, "--bbox=-2,-2,2,2", "--out", str(svg))
    assert rc == 0 and svg.read_text().startswith("<svg")


def test_invalid_curve_exit_code(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(curve_to_json(worked_curve(h_e=(0, -2)))))
    rc, out, _ = run(capsys, "curve", "validate", "--file", str(p))
    assert rc == 1 and not json.loads(out)["valid"]


def test_missing_and_malformed_files(capsys, tmp_path):
    rc, _, err = run(capsys, "curve", "validate", "--file", str(tmp_path / "nope.json"))
    assert rc == 3 and "nope.json" in err
    p = tmp_path / "x.json"
    p.write_text("{not json")
    assert run(capsys, "deform", "--file", str(p))[0] == 3


def test_deform_with_orientation(capsys, curve_file, tmp_path):
    o = tmp_path / "o.json"
    o.write_text(json.dumps({"0": ["vE", "vL"]}))
    rc, out, _ = run(capsys, "deform", "--file", curve_file, "--orient", str(o))
    assert rc == 0 and json.loads(out)["dim_E1"] == 3


def test_certify(capsys, curve_file, tmp_path):
    beta = tmp_path / "b.json"
    beta.write_text(json.dumps(["q2", "q3", "q4"]))
    rc, out, _ = run(capsys, "certify", "--file", curve_file, "--k", "1", "--beta", str(beta))
    assert rc == 0 and json.loads(out)["verdict"] == "CONSISTENT"
    bad = tmp_path / "a.json"
    bad.write_text(json.dumps(["q2"]))
    assert run(capsys, "certify", "--file", curve_file, "--k", "1", "--alpha", str(bad), "--beta", str(beta))[0] == 3


def test_enumerate(capsys, tmp_path, monkeypatch):
    d = tmp_path / "d.json"
    d.write_text(json.dumps({"degree": LINE.to_json()}))
    monkeypatch.setenv("TROPZAR_JOBS", "1")
    rc, out, _ = run(capsys, "enumerate", "--degree", str(d), "--genus", "0", "--ends", "4")
    assert rc == 0 and json.loads(out)["count"] == 1
    rc, _, err = run(capsys, "enumerate", "--degree", str(d), "--genus", "6", "--ends", "20")
    assert rc == 1 and "edge bound" in err


def test_tropicalize(capsys, tmp_path):
    m = tmp_path / "m.json"
    m.write_text(json.dumps(example_line().to_json()))
    svg = tmp_path / "t.svg"
    rc, out, _ = run(capsys, "tropicalize", "--file", str(m), "--plot", str(svg))
    data = json.loads(out)
    assert rc == 0 and len(data["finite"]) == 2 and svg.exists()


def test_charp(capsys):
    rc, out, _ = run(capsys, "charp", "thm41", "--p", "3", "--r", "1", "--pairs", "3")
    assert rc == 0 and json.loads(out)["ok"]
    rc, out, _ = run(capsys, "charp", "thm42", "--p", "2", "--r", "2")
    assert rc == 0 and json.loads(out)["expected_singular_count"] == 1
    rc, out, _ = run(capsys, "charp", "severi", "--d", "3", "--p", "3", "--r", "1", "--genus", "1", "--variant", "s")
    assert rc == 0 and json.loads(out)["reducible"]
    rc, _, _ = run(capsys, "charp", "severi", "--d", "2", "--p", "3", "--r", "1", "--genus", "1", "--variant", "s")
    assert rc == 1
    assert run(capsys, "charp", "thm41", "--p", "4", "--r", "1")[0] == 3
    assert run(capsys, "charp", "thm41", "--p", "2", "--r", "1")[0] == 3


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["charp", "severi", "--d", "2"])
    assert info.value.code == 2


def test_verify_subset_and_corrupted_golden(capsys, tmp_path):
    rc, out, err = run(capsys, "verify-paper", "--only", "thm41", "--p", "3", "--r", "2")
    rep = json.loads(out)
    assert rc == 0 and rep["ok"] and {c["group"] for c in rep["checks"]} == {"thm41"}
    assert all(c["name"].startswith("q=9") for c in rep["checks"])
    assert "PASS thm41" in err
    from tropzar.verify import load_golden

    gold = load_golden()
    gold["thm41"]["9"]["delta"] = 5
    bad = tmp_path / "g.json"
    bad.write_text(json.dumps(gold))
    rc, out, err = run(capsys, "verify-paper", "--only", "thm41", "--p", "3", "--r", "2", "--golden", str(bad))
    rep = json.loads(out)
    assert rc == 1 and "FAIL thm41" in err
    failed = [c for c in rep["checks"] if c["status"] == "FAIL"]
    assert failed and all("diff" in c for c in failed)
    assert run(capsys, "verify-paper", "--only", "nonsense")[0] == 3
