import json
import subprocess
import sys


from lie2alg.cli import fixture_dir, run


def fx(name: str) -> str:
    return str(fixture_dir() / name)


def test_check_linfty_pass(capsys):
    code, rep = run(["check-linfty", fx("ghbar_so3_1.json")])
    assert code == 0
    assert rep.passed
    out = capsys.readouterr().out
    assert "PASS" in out


def test_check_linfty_broken_names_condition(capsys):
    code, rep = run(["check-linfty", fx("broken_abelian4.json")])
    assert code == 1
    bad = [c for r in rep.reports for c in r.checks if not c.passed]
    assert [c.name for c in bad] == ["i_jacobiator_coherence"]
    assert bad[0].first_violation[0] == (0, 1, 2, 3)


def test_ybe_exit_codes():
    assert run(["ybe", fx("abelian3.json")])[0] == 0
    assert run(["ybe", fx("so3.json")])[0] == 0
    assert run(["ybe", fx("broken_jacobi3.json")])[0] == 1


def test_parse_error_exit_two(tmp_path, capsys):
    missing = run(["check-linfty", str(tmp_path / "nope.json")])
    assert missing[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{\"dim0\": 3}")
    assert run(["check-linfty", str(bad)])[0] == 2
    err = capsys.readouterr().err
    assert "dim1" in err


def test_malformed_field_named(tmp_path, capsys):
    f = tmp_path / "broken.json"
    f.write_text(json.dumps({"dim0": 1, "dim1": 1, "d": [["1/0x"]],
                             "l2_00": [[["0"]]], "l2_01": [[["0"]]],
                             "l3": [[[["0"]]]]}))
    assert run(["check-linfty", str(f)])[0] == 2
    assert "'d'" in capsys.readouterr().err


def test_unknown_subcommand_exit_two():
    assert run(["frobnicate"])[0] == 2


def test_json_report_round_trips(capsys):
    code, rep = run(["--json", "check-lie2", fx("ghbar_so3_2.json")])
    assert code == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed == rep.to_json()
    assert parsed["passed"] is True
    assert parsed["passed"] == all(c["passed"] for c in parsed["checks"])


def test_check_lie2_agreement_on_broken(capsys):
    code, rep = run(["check-lie2", fx("broken_abelian4.json")])
    assert code == 1
    names = {c.name: c.passed for r in rep.reports for c in r.checks}
    assert names["octagon_matches_condition_i"] is True
    assert names["octagon"] is False


def test_check_dcm(capsys):
    assert run(["check-dcm", fx("dcm_so3_adjoint.json")])[0] == 0


def test_cohomology_command(capsys):
    code, rep = run(["cohomology", "--degree", "3", fx("so3.json")])
    assert code == 0
    assert rep.payload == {"degree": 3, "dimension": 1}


def test_is_cocycle_and_coboundary_commands(tmp_path, capsys):
    cochain = {"algebra": json.load(open(fx("so3.json"))),
               "degree": 1, "values": {"0": ["1"]}}
    f = tmp_path / "w.json"
    f.write_text(json.dumps(cochain))
    code, rep = run(["coboundary", str(f), "-o", str(tmp_path / "dw.json")])
    assert code == 0
    dw = json.load(open(tmp_path / "dw.json"))
    assert dw["degree"] == 2
    assert dw["values"] == {"1<2": ["-1"]}
    cochain3 = {"algebra": json.load(open(fx("so3.json"))),
                "degree": 3, "values": {"0<1<2": ["-2"]}}
    f3 = tmp_path / "w3.json"
    f3.write_text(json.dumps(cochain3))
    code, rep = run(["is-cocycle", str(f3)])
    assert code == 0
    assert rep.payload == {"is_cocycle": True, "is_coboundary": False}


def test_build_ghbar_and_check(tmp_path):
    out = tmp_path / "gh.json"
    code, rep = run(["build-ghbar", "--hbar=-1/2", fx("so3.json"), "-o", str(out)])
    assert code == 0
    built = json.load(open(out))
    shipped = json.load(open(fx("cross_product.json")))
    assert built == shipped
    assert run(["check-linfty", str(out)])[0] == 0


def test_killing_command(capsys):
    code, rep = run(["killing", fx("sl2.json")])
    assert code == 0
    assert rep.payload["killing"] == [["8", "0", "0"], ["0", "0", "4"], ["0", "4", "0"]]


def test_skeletalize_command(tmp_path):
    f = tmp_path / "cx.json"
    f.write_text(json.dumps({"dim0": 2, "dim1": 2,
                             "d": [["1", "0"], ["0", "0"]]}))
    code, rep = run(["skeletalize", str(f), "-o", str(tmp_path / "sk.json")])
    assert code == 0
    sk = json.load(open(tmp_path / "sk.json"))
    assert sk["skeletal"] == {"dim0": 1, "dim1": 1, "d": [["0"]]}


def test_classify_command(capsys):
    code, rep = run(["classify", fx("ghbar_so3_1.json")])
    assert code == 0
    assert rep.payload["cocycle"]["values"] == {"0<1<2": ["-2"]}


def test_fixtures_listing(capsys):
    code, rep = run(["fixtures"])
    assert code == 0
    names = rep.payload["fixtures"]
    for expected in ("abelian3.json", "so3.json", "sl2.json", "broken_jacobi3.json",
                     "ghbar_so3_0.json", "ghbar_so3_1.json", "ghbar_so3_2.json",
                     "cross_product.json", "broken_abelian4.json",
                     "dcm_so3_adjoint.json"):
        assert expected in names


def hom_json(rng):
    from lie2alg.exactlin import mat_to_json
    from lie2alg.linfty import linf_to_json
    from lie2alg.serialize import tensor_to_json
    from test_linfty import twist_hom
    f = twist_hom(rng)
    return f, {"source": linf_to_json(f.source), "target": linf_to_json(f.target),
               "phi0": mat_to_json(f.chain.phi0), "phi1": mat_to_json(f.chain.phi1),
               "phi2": tensor_to_json(f.phi2)}


def test_check_hom_command(tmp_path, rng):
    f, obj = hom_json(rng)
    p = tmp_path / "hom.json"
    p.write_text(json.dumps(obj))
    assert run(["check-hom", str(p)])[0] == 0
    obj["phi2"][0][1][0] = "1000"
    p.write_text(json.dumps(obj))
    assert run(["check-hom", str(p)])[0] == 1


def test_check_2hom_command(tmp_path, rng):
    f, obj = hom_json(rng)
    two = {"source": obj["source"], "target": obj["target"],
           "from": {"phi0": obj["phi0"], "phi1": obj["phi1"], "phi2": obj["phi2"]},
           "to": {"phi0": obj["phi0"], "phi1": obj["phi1"], "phi2": obj["phi2"]},
           "tau": [["0", "0", "0"]]}
    p = tmp_path / "twohom.json"
    p.write_text(json.dumps(two))
    assert run(["check-2hom", str(p)])[0] == 0
    two["tau"] = [["1", "0", "0"]]
    p.write_text(json.dumps(two))
    assert run(["check-2hom", str(p)])[0] == 1


def test_check_hom_bad_shapes_exit_two(tmp_path, rng, capsys):
    _, obj = hom_json(rng)
    obj["phi0"] = [["1", "0"]]  # wrong shape for a 3 -> 3 map
    p = tmp_path / "hom.json"
    p.write_text(json.dumps(obj))
    assert run(["check-hom", str(p)])[0] == 2
    assert "phi0" in capsys.readouterr().err


def test_cohomology_with_rep_file(tmp_path):
    from lie2alg.cohomology import adjoint_rep, rep_to_json, sl2_algebra
    rep_file = tmp_path / "adj.json"
    rep_file.write_text(json.dumps(rep_to_json(adjoint_rep(sl2_algebra()))))
    code, rep = run(["cohomology", "--degree", "3", fx("sl2.json"),
                     "--rep", str(rep_file)])
    assert code == 0
    assert rep.payload == {"degree": 3, "dimension": 0}


def test_tetrahedron_broken_names_condition_i(capsys):
    code, rep = run(["tetrahedron", fx("broken_abelian4.json")])
    assert code == 1
    names = {c.name: c for r in rep.reports for c in r.checks}
    assert not names["component_equality"].passed
    assert names["agreement"].passed
    assert any("(0, 1, 2, 3)" in note for note in rep.notes)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lie2alg.cli", "killing", fx("so3.json")],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "killing form rows" in proc.stdout
