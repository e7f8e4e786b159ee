import json
import os

import pytest

from twocat import io as tio
from twocat import pgm
from twocat.cli import main
from twocat.core import TwoFunctor, identity_functor
from twocat.fixtures import fix_c2, fix_g2, fix_i, fix_prod
from twocat.homology import constant_system


@pytest.fixture
def run(capsys):
    def go(argv):
        code = main([str(a) for a in argv])
        return code, capsys.readouterr().out
    return go


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(tio.dumps(obj))
    return str(p)


def g2_file(tmp_path):
    return write(tmp_path, "FIX_G2.json", tio.two_category_to_dict(fix_g2()))


def discrete_to_interval(tmp_path):
    C, I = fix_c2(), fix_i()
    P = TwoFunctor(C, I, {"0": "0", "1": "1"},
                   {"id_0": "id_0", "id_1": "id_1"},
                   {"ii_0": "ii_id_0", "ii_1": "ii_id_1"})
    return write(tmp_path, "discrete-to-interval.json",
                 tio.two_functor_to_dict(P))


# --- the three contract invocations -------------------------------------------

def test_validate_fixture_exits_zero(run, tmp_path):
    code, out = run(["validate", g2_file(tmp_path)])
    assert code == 0
    rep = json.loads(out)
    assert rep["report"] == {"kind": "two-category", "valid": True,
                             "objects": 1, "one_cells": 1, "two_cells": 2}


def test_opfib_negative_fixture_exits_two(run, tmp_path):
    code, out = run(["opfib", "--functor", discrete_to_interval(tmp_path)])
    assert code == 2
    rep = json.loads(out)
    assert rep["counterexample"]["clause"] == "opcartesian-lift-missing"
    assert rep["counterexample"]["detail"] == ["0", "a01"]


def test_gc_check_m2(run, tmp_path):
    p = write(tmp_path, "FIX_M2.json", tio.pgm_to_dict(pgm.fix_m2_pgm()))
    code, out = run(["gc-check", "--pgm", p, "--max-deg", 1, "--trunc", 3])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["degrees"]["0"]["localized"] == "Z"
    assert rep["degrees"]["0"]["target"] == "Z"
    assert rep["degrees"]["0"]["iso"] is True
    assert rep["all_iso"] is True


# --- exit codes and manifest ----------------------------------------------------

def test_malformed_input_exits_one(run, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"nonsense": 1}')
    code, out = run(["validate", str(p)])
    assert code == 1
    assert "error" in json.loads(out)


def test_unreadable_json_exits_one(run, tmp_path):
    p = tmp_path / "garbled.json"
    p.write_text("{{{")
    assert run(["validate", str(p)])[0] == 1


def test_missing_file_exits_one(run, tmp_path):
    assert run(["validate", str(tmp_path / "absent.json")])[0] == 1


def test_bad_flags_exit_one(run, tmp_path):
    code, out = run(["no-such-subcommand"])
    assert code == 1
    assert "error" in json.loads(out)


def test_axiom_failure_exits_two(run, tmp_path):
    d = tio.two_category_to_dict(fix_g2())
    d["comp1"] = []
    code, out = run(["validate", write(tmp_path, "broken.json", d)])
    assert code == 2
    assert json.loads(out)["counterexample"]["clause"] == "axiom-failure"


def test_manifest_embedded_everywhere(run, tmp_path):
    p = g2_file(tmp_path)
    for argv in (["validate", p], ["nerve", "--input", p, "--max-dim", 2],
                 ["dualize", p]):
        code, out = run(argv)
        assert code == 0
        m = json.loads(out)["manifest"]
        assert set(m) == {"subcommand", "inputs", "bounds", "determinism",
                          "tool_version"}
        assert p in m["inputs"] and len(m["inputs"][p]) == 64


def test_reports_are_byte_identical(run, tmp_path):
    p = g2_file(tmp_path)
    outs = {run(["nerve", "--input", p, "--max-dim", 3])[1]
            for _ in range(3)}
    assert len(outs) == 1


def test_pretty_flag(run, tmp_path):
    p = g2_file(tmp_path)
    _, compact = run(["validate", p])
    _, pretty = run(["validate", p, "--pretty"])
    assert json.loads(compact) == json.loads(pretty)
    assert "\n  " in pretty and "\n  " not in compact


# --- validate kinds ---------------------------------------------------------------

def test_validate_all_kinds(run, tmp_path):
    cases = [
        ("f.json", tio.two_functor_to_dict(identity_functor(fix_g2())),
         "two-functor"),
        ("p.json", tio.pgm_to_dict(pgm.fix_c2_pgm()), "pgm"),
        ("a.json", tio.action_to_dict(pgm.self_action(pgm.fix_c2_pgm())),
         "action"),
    ]
    for name, obj, kind in cases:
        code, out = run(["validate", write(tmp_path, name, obj)])
        assert code == 0
        assert json.loads(out)["report"]["kind"] == kind


# --- constructions ------------------------------------------------------------------

def test_cospan_constructions(run, tmp_path):
    write(tmp_path, "id.json",
          tio.two_functor_to_dict(identity_functor(fix_g2())))
    cospan = write(tmp_path, "cospan.json",
                   {"left": "id.json", "right": "id.json"})
    for name, twos in (("laco", 8), ("oplaco", 8), ("pullback", 2)):
        code, out = run([name, cospan])
        assert code == 0
        rep = json.loads(out)["report"]
        assert rep["construction"] == name
        assert rep["two_cells"] == twos
        assert set(rep["inputs"]) == {"left", "right"}
        # the emitted category is valid interchange data
        tio.two_category_from_dict(rep["category"])


def test_fiber(run, tmp_path):
    _prod, _pr1, pr2 = fix_prod(fix_g2(), fix_c2())
    p = write(tmp_path, "pr2.json", tio.two_functor_to_dict(pr2))
    code, out = run(["fiber", "--functor", p, "--object", "0"])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["objects"] == 1 and rep["two_cells"] == 2
    assert run(["fiber", "--functor", p, "--object", "zz"])[0] == 1


# --- nerve, cache, homology ----------------------------------------------------------

def test_nerve_counts_and_homology_roundtrip(run, tmp_path):
    p = g2_file(tmp_path)
    out_file = str(tmp_path / "nerve.json")
    code, out = run(["nerve", "--input", p, "--max-dim", 3,
                     "--out", out_file])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["levels"] == [1, 1, 2, 8]
    code, out = run(["homology", "--nerve", out_file, "--deg", 1])
    assert code == 0
    assert json.loads(out)["report"]["group"] == "0"
    code, out = run(["homology", "--nerve", out_file, "--deg", 0])
    assert json.loads(out)["report"]["group"] == "Z"
    # degree out of the trusted range is a usage error
    assert run(["homology", "--nerve", out_file, "--deg", 3])[0] == 1


def test_homology_with_constant_coefficients(run, tmp_path):
    p = g2_file(tmp_path)
    out_file = str(tmp_path / "nerve.json")
    run(["nerve", "--input", p, "--max-dim", 3, "--out", out_file])
    X = tio.trunc_sset_from_dict(json.loads(open(out_file).read()))
    coeffs = write(tmp_path, "const.json",
                   tio.coeff_system_to_dict(constant_system(X)))
    code, out = run(["homology", "--nerve", out_file, "--deg", 2,
                     "--coeffs", coeffs])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["coefficients"] == "local" and rep["group"] == "Z/2"


def test_nerve_cache(run, tmp_path, monkeypatch):
    p = g2_file(tmp_path)
    cache = tmp_path / "cache"
    _, cold = run(["nerve", "--input", p, "--max-dim", 3])
    monkeypatch.setenv("TWOCAT_CACHE_DIR", str(cache))
    _, miss = run(["nerve", "--input", p, "--max-dim", 3])
    files = os.listdir(cache)
    assert len(files) == 1 and files[0].endswith("-3.json")
    _, hit = run(["nerve", "--input", p, "--max-dim", 3])
    assert cold == miss == hit


# --- opfibration and the spectral sequence ------------------------------------------

def test_opfib_certificate_emitted(run, tmp_path):
    p = write(tmp_path, "id.json",
              tio.two_functor_to_dict(identity_functor(fix_g2())))
    cert_file = str(tmp_path / "cert.json")
    code, out = run(["opfib", "--functor", p, "--emit-cert", cert_file])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["certified"] is True
    assert json.loads(open(cert_file).read()) == rep["certificate"]
    assert ["*", "i", "i"] in rep["certificate"]["opcartesian_lifts"]


def test_ss_reports_trusted_range(run, tmp_path):
    _prod, _pr1, pr2 = fix_prod(fix_g2(), fix_c2())
    p = write(tmp_path, "pr2.json", tio.two_functor_to_dict(pr2))
    code, out = run(["ss", "--functor", p, "--pmax", 2, "--qmax", 2,
                     "--fiber-coeffs", 0])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["trusted"] == {"pmax": 1, "qmax": 1}
    assert [0, 0, "Z + Z"] in rep["E2"]
    assert all(flag for _p, _q, flag in rep["e2_vs_local"])


# --- completion subcommands -----------------------------------------------------------

def test_sinv_variants(run, tmp_path):
    p = write(tmp_path, "c2.json", tio.pgm_to_dict(pgm.fix_c2_pgm()))
    code, out = run(["sinv", "--pgm", p])
    assert code == 0
    assert json.loads(out)["report"]["objects"] == 4
    code, out = run(["sinv", "--pgm", p, "--point"])
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["construction"] == "sinv-point" and rep["objects"] == 2
    act = write(tmp_path, "act.json",
                tio.action_to_dict(pgm.self_action(pgm.fix_c2_pgm())))
    code, out = run(["sinv", "--pgm", p, "--action", act])
    assert code == 0
    assert json.loads(out)["report"]["objects"] == 4
    assert run(["sinv", "--pgm", p, "--action", act, "--point"])[0] == 1


def test_gc_check_untrusted_degree_exits_one(run, tmp_path):
    p = write(tmp_path, "c2.json", tio.pgm_to_dict(pgm.fix_c2_pgm()))
    assert run(["gc-check", "--pgm", p, "--max-deg", 2, "--trunc", 2])[0] == 1


def test_gc_check_hypothesis_failure_exits_two(run, tmp_path):
    from twocat.fixtures import fix_g2sat
    P = pgm.fix_c2_pgm()
    p = write(tmp_path, "c2.json", tio.pgm_to_dict(P))
    act = write(tmp_path, "triv.json",
                tio.action_to_dict(pgm.trivial_action(P, fix_g2sat())))
    code, out = run(["gc-check", "--pgm", p, "--action", act,
                     "--max-deg", 0, "--trunc", 1])
    assert code == 2
    assert json.loads(out)["counterexample"]["clause"] == "axiom-failure"


# --- dualize ---------------------------------------------------------------------------

def test_dualize_involution(run, tmp_path):
    p = write(tmp_path, "i.json", tio.two_category_to_dict(fix_i()))
    code, out = run(["dualize", p, "--which", "op"])
    assert code == 0
    once = json.loads(out)["report"]["category"]
    q = write(tmp_path, "i_op.json", once)
    code, out = run(["dualize", q, "--which", "op"])
    assert json.loads(out)["report"]["category"] == \
        tio.two_category_to_dict(fix_i())
