import json

import pytest

from lorpoly import __version__, jsonio
from lorpoly.cli import main
from lorpoly.combinatorics import uniform_matroid
from lorpoly.lorentzian import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    report = json.loads(out) if out.strip() else None
    return code, report, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture()
def u24_file(tmp_path):
    return write(tmp_path, "u24.json",
                 {"kind": "uniform", "params": {"d": 2, "n": 4}})


def test_check_mconvex(tmp_path, capsys):
    points = {"n": 4, "d": 2,
              "points": [list(p) for p in uniform_matroid(2, 4).points]}
    code, report, err = run(capsys, "check-mconvex", "--set",
                            write(tmp_path, "pts.json", points))
    assert code == 0
    assert report["m_convex"] is True
    assert report["version"] == __version__
    assert "m_convex" in err

    bad = {"n": 4, "d": 2, "points": [[1, 1, 0, 0], [0, 0, 1, 1]]}
    code, report, _ = run(capsys, "check-mconvex", "--set",
                          write(tmp_path, "bad.json", bad))
    assert code == 1
    assert report["m_convex"] is False
    assert report["witness"]


def test_check_null(tmp_path, capsys):
    values = write(tmp_path, "vals.json", {"values": [3, 4, 5]})
    assert run(capsys, "check-null", "--values", values, "--q", "1")[0] == 0
    values = write(tmp_path, "vals2.json", {"values": [1, 1, 3]})
    code, report, _ = run(capsys, "check-null", "--values", values, "--q", "1")
    assert code == 1 and report["null"] is False
    assert run(capsys, "check-null", "--values", values, "--q", "inf")[0] == 0


def test_check_rep(tmp_path, capsys, u24_file):
    J = uniform_matroid(2, 4)
    rep = write(tmp_path, "rep.json",
                {"points": [list(p) for p in J.points],
                 "values": ["1"] * len(J)})
    code, report, _ = run(capsys, "check-rep", "--rep", rep,
                          "--matroid", u24_file, "--q", "1")
    assert code == 0 and report["representation"] is True
    code, report, _ = run(capsys, "check-rep", "--rep", rep,
                          "--matroid", u24_file, "--q", "2", "--strong")
    assert code == 0 and report["strength"] == "strong"


def test_check_lorentzian(tmp_path, capsys):
    pairs = {"n": 4, "d": 2, "convention": "normalized",
             "terms": [{"alpha": [1, 1, 0, 0], "coeff": 1},
                       {"alpha": [0, 0, 1, 1], "coeff": 1}]}
    code, report, _ = run(capsys, "check-lorentzian", "--poly",
                          write(tmp_path, "pairs.json", pairs))
    assert code == 1
    assert report["lorentzian"] is False
    assert report["reason"] == "support"

    good = jsonio.dump_polynomial(uniform_matroid(2, 4).generating_polynomial())
    code, report, _ = run(capsys, "check-lorentzian", "--poly",
                          write(tmp_path, "good.json", good))
    assert code == 0 and report["lorentzian"] is True
    code, report, _ = run(capsys, "check-lorentzian", "--strict", "--poly",
                          write(tmp_path, "good2.json", good))
    assert code == 1  # support is not the full simplex


def test_mode_flag_rejects_floats_in_exact_mode(tmp_path, capsys):
    f = {"n": 2, "d": 2, "convention": "normalized",
         "terms": [{"alpha": [2, 0], "coeff": 0.5},
                   {"alpha": [1, 1], "coeff": 1}]}
    path = write(tmp_path, "floaty.json", f)
    assert run(capsys, "check-lorentzian", "--poly", path)[0] in (0, 1)
    assert run(capsys, "check-lorentzian", "--mode", "exact",
               "--poly", path)[0] == 2


def test_tutte_rank(capsys, u24_file):
    code, report, _ = run(capsys, "tutte-rank", "--matroid", u24_file)
    assert code == 0
    assert report["tutte_rank"] == 5
    assert report["reduced_dim"] == 2


def test_dressian_rays(capsys, u24_file):
    code, report, _ = run(capsys, "dressian-rays", "--matroid", u24_file)
    assert code == 0
    assert report["count"] == 3
    assert report["complete"] is True
    assert report["fan_one_dimensional"] is True
    assert len(report["rays"]) == 3


def test_dressian_rays_resource_cap(tmp_path, capsys):
    u25 = write(tmp_path, "u25.json",
                {"kind": "uniform", "params": {"d": 2, "n": 5}})
    code, report, _ = run(capsys, "dressian-rays", "--matroid", u25,
                          "--max-dim", "1")
    assert code == 3 and report is None


def test_subdivide(tmp_path, capsys, u24_file):
    J = uniform_matroid(2, 4)
    nu = write(tmp_path, "nu.json",
               {"points": [list(p) for p in J.points],
                "values": [1, 0, 0, 0, 0, 1]})
    code, report, _ = run(capsys, "subdivide", "--matroid", u24_file,
                          "--rep", nu)
    assert code == 0
    assert report["count"] == 2
    assert all(len(cell) == 5 for cell in report["cells"])


def test_faces(capsys, u24_file):
    code, report, _ = run(capsys, "faces", "--matroid", u24_file)
    assert code == 0
    assert report["dim"] == 3
    assert report["f_vector"] == [6, 12, 8, 1]
    assert report["facets"] == 8


def test_euler(capsys, u24_file):
    code, report, _ = run(capsys, "euler", "--matroid", u24_file)
    assert code == 0
    assert report["chi"] == 1
    assert report["g"] == [0, 0, 3, 6]
    assert report["complete"] is True


def test_euler_with_fixture_rays(tmp_path, capsys, u24_file):
    from lorpoly.dressian import enumerate_rays
    rays, _ = enumerate_rays(uniform_matroid(2, 4))
    path = write(tmp_path, "rays.json", jsonio.dump_rays(rays))
    code, report, _ = run(capsys, "euler", "--matroid", u24_file,
                          "--rays", path)
    assert code == 0
    assert report["chi"] == 1
    assert report["complete"] is False


def test_stable_euler_requires_line(capsys, u24_file):
    code, report, _ = run(capsys, "stable-euler", "--matroid", u24_file)
    assert code == 2


def test_grassmann(tmp_path, capsys):
    path = write(tmp_path, "matrix.json", [[1, 0, 1], [0, 1, 1]])
    code, report, _ = run(capsys, "grassmann", "--matrix", path)
    assert code == 0
    assert report["n"] == 3 and report["d"] == 2
    assert len(report["terms"]) == 3
    degenerate = write(tmp_path, "flat.json", [[1, 2], [2, 4]])
    assert run(capsys, "grassmann", "--matrix", degenerate)[0] == 2


def test_betsy(capsys):
    code, report, _ = run(capsys, "betsy", "--t", "0")
    assert code == 0
    assert len(report["terms"]) == 140
    assert all(term["coeff"] == 1 for term in report["terms"])


def test_ball_coords(tmp_path, capsys):
    f = uniform_matroid(2, 4).generating_polynomial()
    from lorpoly.lorentzian import normalize
    path = write(tmp_path, "base.json", jsonio.dump_polynomial(normalize(f, 1)))
    code, report, _ = run(capsys, "ball-coords", "--poly", path)
    assert code == 0
    assert report["psi"] == 0.0
    assert report["norm"] == pytest.approx(0.0, abs=1e-9)


def test_simplify(tmp_path, capsys):
    f = Polynomial(3, 2, {(1, 0, 1): 1, (0, 1, 1): 1})
    path = write(tmp_path, "simp.json", jsonio.dump_polynomial(f))
    code, report, _ = run(capsys, "simplify", "--poly", path)
    assert code == 0
    assert report["lambdas"] == ["1/2", "1/2", 1]
    assert report["partition"] == [[0, 1], [2]]
    assert report["position"] == "interior"
    assert report["image"] == "real-image"


def test_input_errors(tmp_path, capsys):
    assert run(capsys, "faces", "--matroid",
               str(tmp_path / "missing.json"))[0] == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{")
    assert run(capsys, "faces", "--matroid", str(garbled))[0] == 2


def test_out_flag_writes_report(tmp_path, capsys, u24_file):
    out = tmp_path / "report.json"
    code, _, _ = run(capsys, "tutte-rank", "--matroid", u24_file,
                     "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text())["tutte_rank"] == 5


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert __version__ in capsys.readouterr().out
