import json

import pytest

from bcwitt.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, f"stderr: {err}"
    return json.loads(out)


def test_class_points(capsys):
    data = run_json(capsys, "class", "points", "--class", '{"T":[2,1]}', "--m", "5")
    assert data == {"count": "7"}


def test_qz_sigma(capsys):
    data = run_json(capsys, "qz", "sigma", "--n", "2",
                    "--elem", '{"terms":[{"r":"1/3","c":1}]}')
    assert data == {"terms": [{"r": "2/3", "c": 1}]}


def test_qz_rho_and_mul(capsys):
    data = run_json(capsys, "qz", "rho", "--n", "2",
                    "--elem", '{"terms":[{"r":"1/3","c":1}]}')
    assert data == {"terms": [{"r": "2/3", "c": 1}, {"r": "1/6", "c": 1}]}
    data = run_json(capsys, "qz", "mul",
                    "--a", '{"terms":[{"r":"1/2","c":1}]}',
                    "--b", '{"terms":[{"r":"1/2","c":1}]}')
    assert data == {"terms": [{"r": "0", "c": 1}]}


def test_qz_split(capsys):
    data = run_json(capsys, "qz", "split", "--primes", "2",
                    "--elem", '{"terms":[{"r":"5/12","c":1}]}')
    assert data == {"F": [2], "terms": [{"r_smooth": "3/4", "r_coprime": "2/3", "c": 1}]}


def test_zeta_lefschetz_closed(capsys):
    data = run_json(capsys, "zeta", "lefschetz",
                    "--matrix", '{"rows":[[0,-1],[1,0]]}', "--closed")
    assert data == {"exponents": {"1": 2, "2": 1, "4": -1}}


def test_zeta_lefschetz_series(capsys):
    data = run_json(capsys, "zeta", "lefschetz",
                    "--matrix", '{"rows":[[0,-1],[1,0]]}', "--series", "--trunc", "4")
    assert data["ghost"] == ["2", "4", "2", "0"]


def test_zeta_f1(capsys):
    data = run_json(capsys, "zeta", "f1", "--class", '{"T":[2,1]}', "--trunc", "3")
    assert data["ghost"] == ["3", "4", "5"]


def test_zeta_hw(capsys):
    data = run_json(capsys, "zeta", "hw", "--class", '{"T":[0,1]}', "--q", "3",
                    "--trunc", "3")
    assert data["rational"] == {"num": [1, -1], "den": [1, -3]}
    assert data["ghost"] == ["2", "8", "26"]


def test_zeta_hw_symbolic(capsys):
    data = run_json(capsys, "zeta", "hw", "--class", '{"T":[0,1]}', "--q", "q",
                    "--trunc", "2")
    assert data["ghost"] == [[-1, 1], [-1, 0, 1]]
    assert "rational" not in data


def test_zeta_quotient_check(capsys):
    data = run_json(capsys, "zeta", "quotient-check", "--k", "1", "--q", "3",
                    "--trunc", "3")
    assert data == {"ghost": ["1", "4", "13"]}


def test_witt_roundtrip(capsys):
    a = run_json(capsys, "witt", "add",
                 "--a", '{"trunc":3,"coeffs":["2","4","8"]}',
                 "--b", '{"trunc":3,"coeffs":["3","9","27"]}')
    assert a == {"trunc": 3, "coeffs": ["5", "19", "65"]}
    back = run_json(capsys, "witt", "ghost", "--witt", json.dumps(a))
    assert back["ghost"] == ["5", "13", "35"]
    mul = run_json(capsys, "witt", "mul",
                   "--a", '{"trunc":3,"coeffs":["2","4","8"]}',
                   "--b", '{"trunc":3,"coeffs":["3","9","27"]}')
    assert mul == {"trunc": 3, "coeffs": ["6", "36", "216"]}
    frob = run_json(capsys, "witt", "frobenius", "--n", "2",
                    "--witt", '{"trunc":6,"coeffs":["3","9","27","81","243","729"]}')
    assert frob == {"trunc": 3, "coeffs": ["9", "81", "729"]}
    ver = run_json(capsys, "witt", "verschiebung", "--n", "2",
                   "--witt", '{"trunc":2,"coeffs":["1","1"]}')
    assert ver == {"trunc": 2, "coeffs": ["0", "1"]}


def test_class_convert_both_ways(capsys):
    as_l = run_json(capsys, "class", "convert", "--class", '{"T":[2,1]}')
    assert as_l == {"L": {"0": 1, "1": 1}}
    back = run_json(capsys, "class", "convert", "--class", json.dumps(as_l))
    assert back == {"T": [2, 1]}


def test_class_bb_and_virtual(capsys):
    data = run_json(capsys, "class", "bb",
                    "--pieces", '[{"class":{"T":[1]},"d":0},{"class":{"T":[1]},"d":1}]')
    assert data == {"T": [2, 1]}
    virt = run_json(capsys, "class", "virtual", "--class", '{"L":{"0":1,"1":1}}',
                    "--dim", "1")
    assert virt == {"L": {"-1/2": 1, "1/2": 1}}


def test_endo_commands(capsys):
    lm = run_json(capsys, "endo", "lmap", "--matrix", '{"matrix":["5"]}')
    assert lm == {"num": [1], "den": [1, -5]}
    fr = run_json(capsys, "endo", "frobenius", "--n", "2", "--matrix", '{"matrix":["3"]}')
    assert fr == {"matrix": ["9"]}
    ver = run_json(capsys, "endo", "verschiebung", "--n", "2", "--matrix", '{"matrix":["3"]}')
    assert ver == {"matrix": ["0", "3", "1", "0"]}
    dl = run_json(capsys, "endo", "delta",
                  "--plus", '{"matrix":["2"]}', "--minus", '{"matrix":["3"]}')
    assert dl == {"num": [1, -3], "den": [1, -2]}
    pm = run_json(capsys, "endo", "phimu", "--rational", '{"num":[1,-1],"den":[1,-3]}')
    assert pm == {"plus": {"matrix": ["3"]}, "minus": {"matrix": ["1"]}}


def test_euler_spectral(capsys):
    data = run_json(capsys, "euler", "spectral", "--matrix", '{"rows":[[0,-1],[1,0]]}')
    assert data == {"terms": [{"r": "1/4", "c": 1}, {"r": "3/4", "c": 1}]}


def test_equivariant_commands(capsys):
    act = '{"level":6,"perm":[1,2,3,4,5,0]}'
    shifted = run_json(capsys, "equivariant", "sigma", "--n", "2", "--action", act)
    assert shifted == {"level": 6, "perm": [2, 3, 4, 5, 0, 1]}
    spread = run_json(capsys, "equivariant", "rho", "--n", "2",
                      "--action", '{"level":1,"perm":[0]}')
    assert spread == {"level": 2, "perm": [1, 0]}
    pp = run_json(capsys, "equivariant", "periodic", "--action", act, "--k", "6")
    assert pp == {"points": [0, 1, 2, 3, 4, 5]}
    eu = run_json(capsys, "equivariant", "euler", "--action", '{"level":3,"perm":[1,2,0]}')
    assert eu == {"terms": [{"r": "0", "c": 1}, {"r": "1/3", "c": 1}, {"r": "2/3", "c": 1}]}
    chk = run_json(capsys, "equivariant", "check", "--action", act, "--n", "3",
                   "--kmax", "12")
    assert chk["ok"] is True


def test_equivariant_relative(capsys):
    rel = json.dumps({"total": {"level": 3, "perm": [1, 2, 0]},
                      "base": {"level": 3, "perm": [0]},
                      "map": [0, 0, 0]})
    out = run_json(capsys, "equivariant", "rho", "--n", "2", "--action", rel)
    assert out["total"]["level"] == 6
    assert len(out["total"]["perm"]) == 6
    assert out["map"] == [0, 0, 0, 1, 1, 1]


def test_domain_error_exit_code(capsys):
    code, out, err = run_cli(capsys, "zeta", "lefschetz",
                             "--matrix", '{"rows":[[2]]}', "--closed")
    assert code == 1
    data = json.loads(out)
    assert data["error"]["kind"] == "NotQuasiUnipotent"

    code, out, err = run_cli(capsys, "zeta", "artin-mazur",
                             "--matrix", '{"rows":[[-1]]}', "--trunc", "4")
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "DegenerateIterate"

    code, out, err = run_cli(capsys, "class", "convert", "--class", '{"L":{"0":-2,"1":1}}')
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "NotEffectivelyTorified"

    code, out, err = run_cli(capsys, "endo", "phimu",
                             "--rational", '{"num":[1],"den":[1,1,1]}')
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "NotSplit"

    code, out, err = run_cli(capsys, "witt", "frobenius", "--n", "9",
                             "--witt", '{"trunc":3,"coeffs":["1","1","1"]}')
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "TruncationTooSmall"

    code, out, err = run_cli(capsys, "class", "convert", "--class", '{"L":{"1/2":1}}')
    assert code == 1
    assert json.loads(out)["error"]["kind"] == "HalfTwistPresent"


def test_usage_errors(capsys):
    code, out, err = run_cli(capsys, "class", "points", "--class", "not json", "--m", "1")
    assert code == 2
    assert "invalid JSON" in err
    code, out, err = run_cli(capsys, "qz", "sigma", "--n", "2")
    assert code == 2  # missing payload
    with pytest.raises(SystemExit) as exc:
        main(["qz", "sigma", "--n", "2", "--elem", "{}", "--bogus"])
    assert exc.value.code == 2


def test_input_file(tmp_path, capsys):
    payload = tmp_path / "in.json"
    payload.write_text(json.dumps({"class": {"T": [2, 1]}}))
    data = run_json(capsys, "class", "points", "--input", str(payload), "--m", "5")
    assert data == {"count": "7"}
    direct = tmp_path / "elem.json"
    direct.write_text('{"terms":[{"r":"1/3","c":1}]}')
    data = run_json(capsys, "qz", "sigma", "--n", "2", "--elem", f"@{direct}")
    assert data == {"terms": [{"r": "2/3", "c": 1}]}


def test_trunc_env_override(capsys, monkeypatch):
    monkeypatch.setenv("BCWITT_TRUNC", "3")
    data = run_json(capsys, "zeta", "f1", "--class", '{"T":[1]}')
    assert data["ghost"] == ["1", "1", "1"]
    monkeypatch.setenv("BCWITT_TRUNC", "zero")
    code, out, err = run_cli(capsys, "zeta", "f1", "--class", '{"T":[1]}')
    assert code == 2


def test_output_is_byte_stable(capsys):
    first = run_cli(capsys, "qz", "rho", "--n", "3", "--elem", '{"terms":[{"r":"0","c":1}]}')
    second = run_cli(capsys, "qz", "rho", "--n", "3", "--elem", '{"terms":[{"r":"0","c":1}]}')
    assert first == second
    assert first[1] == '{"terms":[{"r":"0","c":1},{"r":"1/3","c":1},{"r":"2/3","c":1}]}\n'
