import json
import math
import subprocess
import sys

import pytest

from cheegerpoly.cli import EXIT_INVALID, EXIT_OK, EXIT_VIOLATION, main
from cheegerpoly.lab import SWEEP_COLUMNS


@pytest.fixture
def files(tmp_path):
    sq = tmp_path / "square.json"
    sq.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
    hexa = tmp_path / "hex.json"
    assert main(["ngon", "--n", "6", "--out", str(hexa)]) == EXIT_OK
    return tmp_path, sq, hexa


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_ngon(files):
    _, _, hexa = files
    data = json.loads(hexa.read_text())
    assert len(data["vertices"]) == 6


def test_compute(files, capsys):
    _, sq, _ = files
    code, out = run(["compute", "--in", str(sq)], capsys)
    assert code == EXIT_OK
    rep = json.loads(out.out)
    assert set(rep) == {"h", "radius", "cheeger_regular", "method", "residual", "cross_error"}
    assert rep["h"] == pytest.approx(2 + math.sqrt(math.pi), abs=1e-12)
    assert rep["method"] == "both"
    code, out = run(["compute", "--in", str(sq), "--method", "formula"], capsys)
    assert json.loads(out.out)["method"] == "formula"


def test_cheeger_set(files, capsys):
    tmp, sq, _ = files
    out = tmp / "c.json"
    assert main(["cheeger-set", "--in", str(sq), "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert set(data) == {"radius", "inner_vertices"}
    assert data["radius"] == pytest.approx(1 / (2 + math.sqrt(math.pi)))


@pytest.mark.parametrize("metric", ["hausdorff", "l1"])
def test_distance(files, capsys, metric):
    _, sq, hexa = files
    code, out = run(["distance", "--a", str(sq), "--b", str(sq), "--metric", metric, "--err-tol", "1e-8"], capsys)
    assert code == EXIT_OK
    data = json.loads(out.out)
    assert set(data) == {"estimate", "error_bound"}
    assert data["estimate"] == pytest.approx(0, abs=1e-12)


def test_align(files, capsys):
    _, sq, hexa = files
    code, out = run(["align", "--moving", str(sq), "--fixed", str(hexa), "--metric", "hausdorff"], capsys)
    assert code == EXIT_OK
    data = json.loads(out.out)
    assert set(data) == {"angle", "translation", "reflect", "distance"}
    assert len(data["translation"]) == 2


def test_deficit(files, capsys):
    _, sq, _ = files
    code, out = run(["deficit", "--in", str(sq)], capsys)
    data = json.loads(out.out)
    assert data["n"] == 4
    assert data["ratio_hd"] is None


def test_sweep_and_plot(tmp_path):
    csv_path, svg_path = tmp_path / "s.csv", tmp_path / "s.svg"
    assert main(["sweep", "--n", "6", "--eps", "0.04,0.02", "--out", str(csv_path)]) == EXIT_OK
    lines = csv_path.read_text().splitlines()
    assert lines[0].split(",") == list(SWEEP_COLUMNS)
    # 17 significant digits
    assert len(lines[1].split(",")[1].replace(".", "").lstrip("0")) >= 15
    pytest.importorskip("matplotlib")
    assert main(["plot", "--in", str(csv_path), "--out", str(svg_path)]) == EXIT_OK
    assert svg_path.read_text().lstrip().startswith("<?xml")


def test_tentacle(tmp_path, capsys):
    code, out = run(["tentacle", "--k", "10"], capsys)
    assert len(json.loads(out.out)["vertices"]) == 6
    path = tmp_path / "t.csv"
    assert main(["tentacle-series", "--ks", "5,10", "--out", str(path)]) == EXIT_OK
    assert len(path.read_text().splitlines()) == 3


def test_verify(tmp_path):
    out = tmp_path / "v.json"
    assert main(["verify", "--n", "5", "--samples", "40", "--seed", "2", "--no-distances", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["samples"] == 40 and not any(data["violations"].values())


def test_verify_violation_exit(tmp_path, monkeypatch):
    from cheegerpoly import cli, lab

    real = lab.verify_ensemble

    def broken(*args, **kwargs):
        rep = real(*args, **kwargs)
        rep.violations["regular_minimal"] = 1
        return rep

    monkeypatch.setattr(cli, "verify_ensemble", broken)
    assert main(["verify", "--n", "4", "--samples", "5", "--no-distances", "--out", str(tmp_path / "v.json")]) == EXIT_VIOLATION


@pytest.mark.parametrize(
    "content",
    [
        '{"vertices": [[0,0],[1,1],[1,0],[0,1]]}',
        '{"vertices": [[0,0],[1,0],[2,0],[1,1]]}',
        '{"vertices": [[0,0],[1,0]]}',
        '{"points": []}',
        "not json",
    ],
)
def test_invalid_input(tmp_path, capsys, content):
    bad = tmp_path / "bad.json"
    bad.write_text(content)
    code, out = run(["compute", "--in", str(bad)], capsys)
    assert code == EXIT_INVALID
    assert "error" in out.err


def test_nonconvex_compute_is_invalid(tmp_path, capsys):
    path = tmp_path / "t.json"
    assert main(["tentacle", "--k", "5", "--out", str(path)]) == EXIT_OK
    code, _ = run(["compute", "--in", str(path)], capsys)
    assert code == EXIT_INVALID


def test_missing_file(capsys):
    code, _ = run(["compute", "--in", "/nonexistent/p.json"], capsys)
    assert code == EXIT_INVALID


def test_module_entry_point(tmp_path):
    out = tmp_path / "h.json"
    res = subprocess.run([sys.executable, "-m", "cheegerpoly", "ngon", "--n", "5", "--out", str(out)], capture_output=True)
    assert res.returncode == 0
    assert len(json.loads(out.read_text())["vertices"]) == 5


def test_plot_without_matplotlib(tmp_path, monkeypatch, capsys):
    csv_path = tmp_path / "s.csv"
    assert main(["sweep", "--n", "6", "--eps", "0.04,0.02", "--out", str(csv_path)]) == EXIT_OK
    monkeypatch.setitem(sys.modules, "matplotlib", None)
    code, out = run(["plot", "--in", str(csv_path), "--out", str(tmp_path / "s.svg")], capsys)
    assert code == EXIT_INVALID
    assert "matplotlib" in out.err
