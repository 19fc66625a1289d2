import json

from snorder.cli import main


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def sc(re, im="0"):
    return {"re": re, "im": im}


def test_majorize_strict_with_decomposition(tmp_path, capsys):
    x = write(tmp_path, "x.json", [sc("2"), sc("2")])
    y = write(tmp_path, "y.json", [sc("3"), sc("1")])
    code, out = run(capsys, ["majorize", x, y, "--decompose"])
    assert code == 0
    assert out["verdict"] == "strict"
    assert out["gds_valid"] is True
    assert out["all_beta_convex"] is True
    assert out["transforms"][0]["i"] == 1  # 1-based in files


def test_majorize_weak(tmp_path, capsys):
    x = write(tmp_path, "x.json", [sc("1"), sc("0")])
    y = write(tmp_path, "y.json", [sc("3"), sc("1")])
    code, out = run(capsys, ["majorize", x, y])
    assert code == 0
    assert out["verdict"] == "weak"


def test_exact_backend_rejects_float_literals(tmp_path, capsys):
    x = write(tmp_path, "x.json", [{"re": 0.5, "im": 0}])
    y = write(tmp_path, "y.json", [sc("1")])
    code, _ = run(capsys, ["majorize", x, y])
    assert code == 2


def test_float_backend_accepts_numbers(tmp_path, capsys):
    x = write(tmp_path, "x.json", [{"re": 0.5, "im": 0.0}, {"re": 0.5, "im": 0.0}])
    y = write(tmp_path, "y.json", [{"re": 1.0, "im": 0.0}, {"re": 0.0, "im": 0.0}])
    code, out = run(capsys, ["--backend", "float", "majorize", x, y])
    assert code == 0
    assert out["verdict"] == "strict"


def test_compare_and_repr(tmp_path, capsys):
    spec_x = {"blocks": [{"eigenvalue": sc("1"), "sizes": [2, 1]}]}
    spec_y = {"blocks": [{"eigenvalue": sc("1"), "sizes": [3]}]}
    x = write(tmp_path, "x.json", spec_x)
    y = write(tmp_path, "y.json", spec_y)
    code, out = run(capsys, ["compare", x, y])
    assert code == 0
    assert out["verdict"] == "strict_less"
    code, out = run(capsys, ["repr", "--spec", x])
    assert code == 0
    assert out["partitions"] == [[2, 1]]
    assert out["dimension"] == 3


def test_repr_from_matrix_path(tmp_path, capsys):
    m = {"rows": [[sc("1"), sc("1")], [sc("0"), sc("1")]]}
    ev = [sc("1")]
    code, out = run(capsys, [
        "repr",
        "--matrix", write(tmp_path, "m.json", m),
        "--eigenvalues", write(tmp_path, "ev.json", ev),
    ])
    assert code == 0
    assert out["partitions"] == [[2]]


def test_fmap_golden(tmp_path, capsys):
    f = {"polynomial": {"coefficients": [sc("0"), sc("0"), sc("1")]}}
    spec = {"blocks": [{"eigenvalue": sc("0"), "sizes": [4, 3, 2]}]}
    code, out = run(capsys, [
        "fmap", write(tmp_path, "f.json", f), write(tmp_path, "s.json", spec),
    ])
    assert code == 0
    assert out["repr"]["partitions"] == [[2, 2, 2, 1, 1, 1]]
    assert out["gdod"] == [[2, 3, 3, 2, 1, 0]]


def test_gdod_subcommand(tmp_path, capsys):
    p = write(tmp_path, "p.json", [3, 2])
    q = write(tmp_path, "q.json", [4, 2])
    code, out = run(capsys, ["gdod", p, q])
    assert code == 0
    assert out == {"dominated": True, "gdod": [1, 1]}
    code, out = run(capsys, ["gdod", q, p])
    assert code == 0
    assert out == {"dominated": False}


def test_schur_subcommand(capsys):
    code, out = run(capsys, ["schur", "--func", "neg_sum_sq", "--n", "2",
                             "--trials", "300", "--samples", "5"])
    assert code == 0
    assert out["criterion_passed"] is False
    assert out["counterexample"] is not None


def test_convexity_subcommand(tmp_path, capsys):
    f = {"polynomial": {"coefficients": [sc("0"), sc("0"), sc("1")]}}
    a = {"rows": [[sc("0"), sc("0")], [sc("0"), sc("2")]]}
    b = {"rows": [[sc("1"), sc("0")], [sc("0"), sc("1")]]}
    code, out = run(capsys, [
        "convexity", write(tmp_path, "f.json", f),
        write(tmp_path, "a.json", a), write(tmp_path, "b.json", b),
        "-t", "1/2",
    ])
    assert code == 0
    assert out["consistent"] is True


def test_monotone_subcommand(tmp_path, capsys):
    f = {"polynomial": {"coefficients": [sc("1"), sc("2")]}}
    x = {"blocks": [{"eigenvalue": sc("2"), "sizes": [1]},
                    {"eigenvalue": sc("2"), "sizes": [1]}]}
    y = {"blocks": [{"eigenvalue": sc("3"), "sizes": [1]},
                    {"eigenvalue": sc("1"), "sizes": [1]}]}
    code, out = run(capsys, [
        "monotone", write(tmp_path, "f.json", f),
        write(tmp_path, "x.json", x), write(tmp_path, "y.json", y),
    ])
    assert code == 0
    assert out["certificate"] == "A"
    assert out["confirmed"] is True


def test_malformed_json_is_input_error(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    code, _ = run(capsys, ["gdod", str(p), str(p)])
    assert code == 2


def test_schema_violation_is_input_error(tmp_path, capsys):
    x = write(tmp_path, "x.json", [{"re": "1", "im": "0", "extra": 1}])
    y = write(tmp_path, "y.json", [sc("1")])
    code, _ = run(capsys, ["majorize", x, y])
    assert code == 2


def test_analysis_error_exit_code(tmp_path, capsys):
    # incomparable 2x2 convexity input in exact mode -> analysis completes
    # with per-point errors (exit 0); a backend failure is exit 3
    f = {"polynomial": {"coefficients": [sc("0"), sc("1")]}}
    x = {"blocks": [{"eigenvalue": sc("1"), "sizes": [1]}]}
    y = {"blocks": [{"eigenvalue": sc("1"), "sizes": [1, 1]}]}  # dimension mismatch
    code, _ = run(capsys, [
        "monotone", write(tmp_path, "f.json", f),
        write(tmp_path, "x.json", x), write(tmp_path, "y.json", y),
    ])
    assert code == 3


def test_output_file(tmp_path, capsys):
    p = write(tmp_path, "p.json", [2])
    out_path = tmp_path / "report.json"
    code = main(["--output", str(out_path), "gdod", p, p])
    assert code == 0
    assert json.loads(out_path.read_text())["dominated"] is True
