import json

import numpy as np
import pytest

from greenlab.cli import main
from greenlab.io import complex_to_json, graph_to_json

from conftest import icosahedron_graph


@pytest.fixture()
def k3_file(tmp_path):
    path = tmp_path / "k3.json"
    path.write_text('{"maximal": [[0, 1, 2]]}')
    return str(path)


def test_random_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["random", "--n", "8", "--p", "0.5", "--seed", "42", "--out", str(a)]) == 0
    assert main(["random", "--n", "8", "--p", "0.5", "--seed", "42", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_random_sizes(tmp_path):
    out = tmp_path / "c.json"
    main(["random", "--n", "4", "--p", "1.0", "--seed", "1", "--out", str(out)])
    assert len(json.loads(out.read_text())["faces"]) == 15
    main(["random", "--n", "0", "--p", "0.5", "--seed", "1", "--out", str(out)])
    assert json.loads(out.read_text())["faces"] == []


def test_refine_k2(tmp_path):
    src = tmp_path / "k2.json"
    src.write_text('{"maximal": [[0, 1]]}')
    out = tmp_path / "r.json"
    assert main(["refine", "--times", "1", "--input", str(src), "--out", str(out)]) == 0
    faces = [tuple(f) for f in json.loads(out.read_text())["faces"]]
    assert sum(1 for f in faces if len(f) == 1) == 3
    assert sum(1 for f in faces if len(f) == 2) == 2


def test_graph_command(k3_file, tmp_path):
    out = tmp_path / "g.json"
    assert main(["graph", "--kind", "connection", "--input", k3_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    A = np.array(doc["adjacency"])
    assert doc["n"] == 7
    assert np.array_equal(A, A.T)
    assert doc["degrees"] == A.sum(axis=1).tolist()


def test_green_command(k3_file, tmp_path):
    out = tmp_path / "green.json"
    csv = tmp_path / "green.csv"
    png = tmp_path / "green.png"
    code = main(["green", "--input", k3_file, "--out", str(out),
                 "--csv", str(csv), "--plot", str(png)])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["total_energy"] == 1
    assert doc["g"][6][6] == "1"  # triangle diagonal in canonical order
    assert csv.exists() and png.stat().st_size > 0


def test_verify_exit_codes(k3_file, tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--input", k3_file, "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["passed"] and len(report["identities"]) == 9
    printed = capsys.readouterr().out
    assert printed.count("pass") == 9

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--input", str(bad)]) == 2
    missing_subset = tmp_path / "open.json"
    missing_subset.write_text('{"faces": [[0, 1]]}')
    assert main(["verify", "--input", str(missing_subset)]) == 2


def test_verify_failure_exit_code(k3_file, monkeypatch):
    import greenlab.cli as cli

    def doctored(G, eig_tol=1e-8):
        return {"identities": [{"name": "x", "passed": False, "residual": 1.0, "tolerance": 0.0}],
                "passed": False}

    monkeypatch.setattr(cli, "suite_report", doctored)
    assert main(["verify", "--input", k3_file]) == 1


def test_verify_accepts_graph_file(tmp_path):
    path = tmp_path / "icosa.json"
    path.write_text(graph_to_json(icosahedron_graph()))
    out = tmp_path / "r.json"
    assert main(["verify", "--input", str(path), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["euler_characteristic"] == 2


def test_curvature_command(tmp_path):
    src = tmp_path / "icosa_graph.json"
    src.write_text(graph_to_json(icosahedron_graph()))
    csv = tmp_path / "curv.csv"
    assert main(["curvature", "--input", str(src), "--csv", str(csv)]) == 0
    lines = csv.read_text().strip().splitlines()
    assert lines[0] == "face,dim,k_minus,k_plus"
    assert len(lines) == 63
    vfile = tmp_path / "curv_vertices.csv"
    vlines = vfile.read_text().strip().splitlines()
    assert len(vlines) == 13
    assert vlines[1].split(",")[1] == "1/6"


def test_hodge_command(k3_file, tmp_path):
    out = tmp_path / "hodge.json"
    assert main(["hodge", "--input", k3_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["betti"] == [1, 0, 0]
    assert max(float(v) for v in doc["mckean_singer_residuals"].values()) < 1e-8


def test_minimize_command(k3_file, tmp_path):
    out = tmp_path / "min.json"
    assert main(["minimize", "--input", k3_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["interior"]["p"] == ["4/37", "4/37", "4/37", "6/37", "6/37", "6/37", "7/37"]
    assert doc["interior"]["U"] == "1/37"
    us = {tuple(c["support"]): c["U"] for c in doc["support_candidates"]}
    assert us[(6,)] == "1"


def test_zeta_command(k3_file, tmp_path):
    out = tmp_path / "zeta.json"
    assert main(["zeta", "--input", k3_file, "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["coefficients"][0] == "1"
    assert doc["coefficients"][1] == "0"
    assert doc["det_at_1"] == "-1"


def test_sweep_command_files_and_determinism(tmp_path):
    src = tmp_path / "k2.json"
    src.write_text('{"maximal": [[0, 1]]}')
    args = ["sweep", "--input", str(src), "--beta-from", "0", "--beta-to", "1",
            "--steps", "120", "--starts", "8", "--seed", "7"]
    out1, csv1 = tmp_path / "r1.json", tmp_path / "b1.csv"
    out2, csv2 = tmp_path / "r2.json", tmp_path / "b2.csv"
    assert main(args + ["--out", str(out1), "--csv", str(csv1)]) == 0
    assert main(args + ["--out", str(out2), "--csv", str(csv2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert csv1.read_bytes() == csv2.read_bytes()
    png = tmp_path / "b1.png"
    assert png.stat().st_size > 0
    doc = json.loads(out1.read_text())
    assert [e["event"] for e in doc["events"]] == ["pitchfork"]
    header = csv1.read_text().splitlines()[0]
    assert header == "beta,branch_id,kind,F,U,S,lambda,min_hessian_eig,p_0,p_1,p_2"


def test_sweep_plot_determinism(tmp_path):
    src = tmp_path / "k2.json"
    src.write_text('{"maximal": [[0, 1]]}')
    pngs = []
    for tag in ("x", "y"):
        csv = tmp_path / f"{tag}.csv"
        main(["sweep", "--input", str(src), "--beta-from", "0.1", "--beta-to", "0.5",
              "--steps", "20", "--starts", "4", "--seed", "3", "--csv", str(csv)])
        pngs.append((tmp_path / f"{tag}.png").read_bytes())
    assert pngs[0] == pngs[1]


def test_matrix_json_roundtrip(corpus):
    from greenlab.io import matrix_from_json, matrix_to_json

    g = corpus.green("K3", corpus.named["K3"]).g
    again = matrix_from_json(matrix_to_json(g))
    assert np.array_equal(again, g)
