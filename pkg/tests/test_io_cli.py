import json
from fractions import Fraction

import pytest

from fiberface import io, presets
from fiberface.cli import main
from fiberface.dilatation import Segment
from fiberface.groupring import parse_poly

UT = ("u", "t")
THETA_ARG = f"u,t: {presets.THETA_EXAMPLE1}"


def test_parse_poly_terms():
    text = '{"vars":["u","t"],"terms":[{"c":1,"e":[1,0]},{"c":-2,"e":[0,0]}]}'
    assert io.parse_poly_file(text) == parse_poly("u-2", UT)


def test_parse_poly_expression():
    text = '{"vars":["x","y","z"],"expr":"x*y*z^-1 - x - y - x*z^-1 - y*z^-1 + 1"}'
    assert io.parse_poly_file(text) == presets.magic_poly()


def test_parse_matrix_penner():
    text = json.dumps({"vars": ["t"], "rows": presets.INTERSECTION_62})
    assert io.parse_matrix(text) == presets.intersection_62()


def test_json_syntax_error_position():
    with pytest.raises(io.FormatError) as info:
        io.parse_poly_file('{"vars": ["u"],\n "terms": [}')
    assert info.value.line == 2


def test_expression_syntax_error():
    with pytest.raises(io.FormatError, match="column"):
        io.parse_poly_file('{"vars": ["u"], "expr": "u + + 1"}')


def test_exponent_length_mismatch():
    with pytest.raises(io.FormatError, match="length"):
        io.parse_poly_file('{"vars": ["u","t"], "terms": [{"c": "1", "e": [1]}]}')


def test_ragged_matrix():
    with pytest.raises(io.FormatError):
        io.parse_matrix('{"vars": ["t"], "rows": [["1", "t"], ["1"]]}')


def test_poly_round_trip():
    p = presets.phi_62_expected()
    assert io.parse_poly_file(io.serialize_poly(p)) == p


def test_matrix_round_trip():
    m = presets.transition_matrix()
    assert io.parse_matrix(io.serialize_matrix(m)) == m


def test_penner_round_trip(spec62):
    assert io.parse_penner(io.serialize_penner(spec62)) == spec62


def test_slice_round_trip():
    seg = Segment((Fraction(1, 4), Fraction(1, 4)), (Fraction(1, 3), Fraction(-1, 2)), (3, 1))
    assert io.parse_slice(io.serialize_slice(seg)) == seg


def test_certificate_round_trip(cert1):
    back = io.parse_certificate(io.serialize_certificate(cert1))
    assert io.certificate_to_obj(back) == io.certificate_to_obj(cert1)
    assert back.recheck()


def test_certificate_schema(cert1):
    obj = io.certificate_to_obj(cert1)
    for key in ("system", "eliminant", "D", "c", "B", "enclosure", "excluded", "verdict", "hypotheses"):
        assert key in obj
    assert all(isinstance(v, str) for v in obj["enclosure"])


@pytest.mark.parametrize("x", [Fraction(1, 8), Fraction(-3, 5), Fraction(7), Fraction(1, 3)])
def test_rational_round_trip(x):
    assert io.parse_rational(io.format_rational(x)) == x


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr()


def test_cli_charpoly(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"vars": ["t"], "rows": presets.TRANSITION_5X5}))
    status, out = run(capsys, "charpoly", str(f))
    assert status == 0
    p = io.poly_from_obj(json.loads(out.out)["poly"])
    assert p.normalize_unit() == presets.theta_example1().normalize_unit()


def test_cli_teich_with_switches(tmp_path, capsys):
    pe, pv = tmp_path / "pe.json", tmp_path / "pv.json"
    pe.write_text('{"vars": ["t"], "rows": [["t", "0"], ["0", "1"]]}')
    pv.write_text('{"vars": ["t"], "rows": [["1"]]}')
    status, out = run(capsys, "teich", str(pe), "--pv", str(pv))
    assert status == 0 and json.loads(out.out)["text"] in ("u - t", "-t + u")


def test_cli_penner_phi(tmp_path, capsys, spec62):
    f = tmp_path / "spec.json"
    f.write_text(io.serialize_penner(spec62))
    status, out = run(capsys, "penner-phi", str(f))
    obj = json.loads(out.out)
    assert status == 0 and not obj["symmetric"]
    assert io.poly_from_obj(obj["poly"]) == presets.phi_62_expected()


def test_cli_cone(capsys):
    status, out = run(capsys, "cone", THETA_ARG, "--ref", "1,0")
    assert status == 0
    assert sorted(json.loads(out.out)["walls"]) == [[1, -1], [1, 1]]


def test_cli_norm(capsys):
    status, out = run(capsys, "norm", THETA_ARG, "--alpha", "1,0")
    assert json.loads(out.out)["norm"] == "5"


def test_cli_slice(capsys):
    status, out = run(capsys, "slice", "--x", "2,0", "--c", "1,1", "--mode", "drill",
                      "--poly", THETA_ARG, "--ref", "1,0")
    obj = json.loads(out.out)
    assert obj["w"] == [3, 1]
    assert sorted([obj["segment"]["start"], obj["segment"]["end"]]) == [["0.25", "0.25"], ["0.5", "-0.5"]]


def test_cli_lambda(capsys):
    status, out = run(capsys, "lambda", "u: u - 2", "--alpha", "1", "--prec", "30")
    assert json.loads(out.out)["lambda"].startswith("2.0")


def test_cli_minimize(capsys):
    status, out = run(capsys, "minimize", THETA_ARG, "--ref", "1,0", "--w", "3,1", "--prec", "30")
    obj = json.loads(out.out)
    assert status == 0
    assert obj["coordinates"][0].startswith("0.36500242871")
    assert obj["pairing"].startswith("1.0")


def test_cli_certify_magic(tmp_path, capsys):
    out_file = tmp_path / "cert.json"
    status, _ = run(capsys, "certify", "x,y,z: " + presets.MAGIC_POLY, "--ref", "7/2,1,0",
                    "--start", "2,0,-2", "--end", "5,2,2", "--out", str(out_file))
    cert = io.parse_certificate(out_file.read_text())
    assert status == 0 and cert.verdict == "irrational" and cert.recheck()


def test_cli_census(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text('{"vars": ["t"], "rows": [["t"]]}')
    status, out = run(capsys, "census", str(f), "--max-power", "3")
    assert json.loads(out.out)[-1] == {"m": 3, "t_class": [-3], "multiplicity": 1, "cell": 0}


def test_cli_reproduce_text(capsys):
    status, out = run(capsys, "reproduce", "magic72", "--format", "text")
    assert status == 0
    assert "FAIL" not in out.out and out.out.strip().endswith("OK")


def test_cli_reports_errors(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"vars": ["t"],\n "rows": [["t +"]]}')
    status, out = run(capsys, "census", str(f))
    assert status == 1 and "error" in out.err


def test_cli_missing_segment(capsys):
    with pytest.raises(SystemExit):
        main(["minimize", THETA_ARG])


def test_reproduce_deterministic():
    assert presets.reproduce("magic72", 40).to_obj() == presets.reproduce("magic72", 40).to_obj()


def test_reproduce_unknown_preset():
    with pytest.raises(ValueError, match="unknown preset"):
        presets.reproduce("nope")


def test_reproduce_names_failing_stage(monkeypatch):
    def broken(*args, **kwargs):
        raise ValueError("boom")
    monkeypatch.setattr(presets, "minimize_on_slice", broken)
    rep = presets.reproduce("magic72")
    assert not rep.ok and rep.failed_stage.startswith("minimum")
