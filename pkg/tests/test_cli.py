import json

import pytest

from tracta import fixtures as F
from tracta import jsonio as J
from tracta import valuation as V
from tracta.cli import main


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


@pytest.fixture
def sval_file(tmp_path):
    P = V.tropicalize_matroid(F.hahn_plucker(), "sval")
    return write(tmp_path, "sval.json", J.encode_plucker(P))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_check(sval_file, capsys):
    code, out = run(capsys, "check", "--input", sval_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["weak"] and rep["strong"] and rep["failing_relation"] is None


def test_check_triangle(tmp_path, capsys):
    path = write(tmp_path, "tri.json", J.encode_plucker(F.triangle_plucker()))
    code, out = run(capsys, "check", "--strong", "--input", path)
    assert code == 0
    rep = json.loads(out)
    assert rep["weak"] and not rep["strong"]
    assert rep["failing_relation"] == {"I": [5, 6], "J": [1, 2, 3, 4]}


def test_check_zero_plucker_exits_1(tmp_path, capsys):
    path = write(tmp_path, "zero.json",
                 {"tract": {"kind": "krasner"}, "n": 3, "r": 2, "entries": []})
    code = main(["check", "--strong", "--input", path])
    assert code == 1


def test_circuits_roundtrip(sval_file, capsys):
    code, out = run(capsys, "circuits", "--input", sval_file)
    assert code == 0
    C = J.decode_circuits(json.loads(out))
    assert len(C) == 4


def test_dual(sval_file, capsys):
    code, out = run(capsys, "dual", "--input", sval_file)
    assert code == 0
    assert json.loads(out)["r"] == 2


def test_initial_with_infinity(sval_file, capsys):
    code, out = run(capsys, "initial", "--input", sval_file,
                    "--u", '["inf", 0, 0, 0]')
    assert code == 0
    rep = json.loads(out)
    assert rep["matroid"]["r"] == 2
    # coordinate 1 was contracted and re-added as a coloop: zero in the base
    assert all(v[0] == "0" for v in rep["circuits"]["vectors"])


def test_flag(tmp_path, capsys):
    from tracta import flags as FL

    Fs = FL.FlagSequence((
        V.tropicalize_matroid(F.rank1_plucker(), "sval"),
        V.tropicalize_matroid(F.hahn_plucker(), "sval")))
    path = write(tmp_path, "flag.json", J.encode_flag(Fs))
    code, out = run(capsys, "flag", "--input", path, "--u", "[1, 0, 0, 0]")
    assert code == 0
    rep = json.loads(out)
    assert rep["is_flag"] and rep["initial_is_flag"]


def test_positroid(tmp_path, capsys):
    path = write(tmp_path, "pos.json", J.encode_plucker(F.positroid_plucker()))
    code, out = run(capsys, "positroid", "--input", path,
                    "--ordering", '{"inherited": true}')
    assert code == 0 and json.loads(out)["positroid"] is True


def test_linspace(sval_file, capsys):
    code, out = run(capsys, "linspace", "--input", sval_file,
                    "--grid", '{"gammas": [0, "inf"]}')
    assert code == 0
    records = json.loads(out)
    assert records
    for rec in records:
        assert rec["charA"] and rec["charB"] and rec["charC"]
        assert rec["charD"] is True


def test_tropicalize(tmp_path, capsys):
    rows = [[[{"e": "0", "c": "1"}], [{"e": "0", "c": "2"}], [{"e": "1", "c": "1"}]],
            [[{"e": "0", "c": "1"}], [], [{"e": "0", "c": "3"}]]]
    path = write(tmp_path, "mat.json", rows)
    code, out = run(capsys, "tropicalize", "--input", path, "--kind", "sval")
    assert code == 0
    assert json.loads(out)["matroid"]["r"] == 2


def test_render(tmp_path, capsys):
    P = V.tropicalize_matroid(F.hahn_plucker(), "val")
    path = write(tmp_path, "val.json", J.encode_plucker(P))
    out_file = tmp_path / "space.svg"
    code = main(["render", "--input", path, "--grid",
                 '{"gammas": [-1, 0, 1]}', "--out", str(out_file)])
    assert code == 0
    svg = out_file.read_text()
    assert svg.startswith("<svg") and "circle" in svg


def test_guard_exit_code(sval_file, monkeypatch):
    monkeypatch.setenv("TRACTA_GUARD", "10")
    code = main(["linspace", "--input", sval_file,
                 "--grid", '{"gammas": [-1, 0, 1, "inf"]}'])
    assert code == 3


def test_demo_named(capsys):
    code, out = run(capsys, "demo", "hahn-plucker")
    assert code == 0 and "ok" in out


def test_demo_unknown(capsys):
    assert main(["demo", "nope"]) == 1
