import csv
import io
import json

import pytest

from deg8covers import cli, picard
from deg8covers.families import build_family


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "family,K2,pg,q,bpf,image_degree"
    assert lines[1] == "1,24,5,0,yes,3"
    assert len(lines) == 10


def test_csv_round_trip(capsys):
    _, out, _ = run(capsys, "table", "--n", "6", "--format", "csv")
    for row in csv.DictReader(io.StringIO(out)):
        r = build_family(int(row["family"]), 6)
        assert (int(row["K2"]), int(row["pg"]), int(row["q"])) == (r.K2, r.pg, r.q)
        assert row["bpf"] == ("yes" if r.bpf else "no")
        assert int(row["image_degree"]) == r.image_degree


@pytest.mark.parametrize("fam", range(1, 10))
def test_json_round_trip(capsys, fam):
    code, out, _ = run(capsys, "family", "--id", str(fam), "--n", "5", "--format", "json")
    assert code == 0
    assert json.loads(out) == build_family(fam, 5).to_dict()


def test_family_text(capsys):
    code, out, _ = run(capsys, "family", "--id", "4", "--n", "3")
    assert code == 0
    assert "nodes: 30" in out
    assert "L_010 = 3Delta0 + 6Gamma - 2E" in out
    assert "K2: 38" in out


def test_tower_json(capsys):
    code, out, _ = run(capsys, "tower", "--id", "5", "--n", "4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["nodes"] == 8 * 4 + 12
    assert d["fixed_part"] == "1/2 f*(Gamma)"


@pytest.mark.parametrize(
    "argv",
    [
        ["family", "--id", "9", "--n", "1"],
        ["family", "--id", "10", "--n", "3"],
        ["family", "--id", "1", "--n", "1000001"],
        ["table", "--n", "x"],
        ["verify", "--n-range", "5..3"],
        ["verify", "--n-range", "5"],
        ["search", "--max-mult", "-1"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--n-range", "2..3")
    assert code == 0
    assert "FAIL" not in out
    assert out.count("PASS") == 8


def test_verify_catches_injected_fault(capsys, monkeypatch):
    real = picard.SurfaceModel.intersect
    monkeypatch.setattr(picard.SurfaceModel, "intersect", lambda self, A, B: -real(self, A, B))
    code, out, _ = run(capsys, "verify", "--n-range", "2..2")
    assert code == 1
    assert "FAIL" in out


def test_search_json(capsys):
    code, out, _ = run(capsys, "search", "--base", "c1", "--n", "3", "--max-mult", "1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert rows and all(r["base"] == "c1" for r in rows)


def test_output_deterministic(capsys):
    _, a, _ = run(capsys, "table", "--n", "9", "--format", "json")
    _, b, _ = run(capsys, "table", "--n", "9", "--format", "json")
    assert a == b
