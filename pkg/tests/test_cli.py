import json

import pytest

from qfe import QQ, quantum_integer
from qfe.cli import (DEMO_NAMES, SEEDS_257, builtin_sequence, main,
                     parse_ring_flag)
from tests.conftest import SEED_COEFFS_257


def write_spec(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def spec_p2(tmp_path):
    return write_spec(tmp_path, "p2.json", {
        "ring": {"kind": "rational"},
        "primes": [2],
        "seeds": {"2": ["1", "1"]},
    })


@pytest.fixture
def spec_257(tmp_path):
    return write_spec(tmp_path, "p257.json", {
        "ring": {"kind": "rational"},
        "primes": [2, 5, 7],
        "seeds": {str(p): [str(c) for c in cs]
                  for p, cs in SEED_COEFFS_257.items()},
    })


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_quantum_seed_table(capsys, spec_p2):
    code, out, _ = run(capsys, "construct", spec_p2, "--upto", "8")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1\ttrue\t0\t1"
    assert lines[1] == "2\ttrue\t1\t1 + q"
    assert lines[2] == "3\tfalse\t-\t0"
    assert lines[3] == "4\ttrue\t3\t1 + q + q^2 + q^3"
    assert lines[7] == "8\ttrue\t7\t" + quantum_integer(8).pretty()
    assert len(lines) == 8


def test_construct_row_ten_of_the_257_spec(capsys, spec_257):
    code, out, _ = run(capsys, "construct", spec_257, "--upto", "10")
    assert code == 0
    row = out.splitlines()[9].split("\t")
    expected = quantum_integer(10).dilate(3).exact_div(quantum_integer(10))
    assert row == ["10", "true", "18", expected.pretty()]


def test_construct_writes_out_file(capsys, spec_p2, tmp_path):
    out_path = tmp_path / "table.tsv"
    code, out, _ = run(capsys, "construct", spec_p2, "--upto", "4",
                       "--out", str(out_path))
    assert code == 0
    assert out == ""
    assert out_path.read_text().splitlines()[3] == "4\ttrue\t3\t1 + q + q^2 + q^3"


def test_construct_is_deterministic(capsys, spec_257):
    first = run(capsys, "construct", spec_257, "--upto", "30")
    second = run(capsys, "construct", spec_257, "--upto", "30")
    assert first == second


def test_malformed_inputs_exit_2(capsys, tmp_path):
    code, _, err = run(capsys, "construct", str(tmp_path / "absent.json"))
    assert code == 2 and "error:" in err

    bad_json = tmp_path / "bad.json"
    bad_json.write_text("{not json")
    code, _, err = run(capsys, "construct", str(bad_json))
    assert code == 2 and "error:" in err

    for broken in (
        {"ring": {"kind": "rational"}, "primes": [2]},
        {"ring": {"kind": "nope"}, "primes": [2], "seeds": {"2": ["1"]}},
        {"ring": {"kind": "rational"}, "primes": [2], "seeds": {"3": ["1"]}},
        {"ring": {"kind": "rational"}, "primes": [2], "seeds": {"2": []}},
        {"ring": {"kind": "rational"}, "primes": [2], "seeds": {"2": ["1", "0"]}},
        {"ring": {"kind": "rational"}, "primes": "all", "seeds": {}},
        {"ring": {"kind": "rational"}, "primes": [4], "seeds": {"4": ["1"]}},
    ):
        path = write_spec(tmp_path, "broken.json", broken)
        code, _, err = run(capsys, "construct", path)
        assert code == 2, broken
        assert "error:" in err


def test_noncommuting_seeds_exit_3(capsys, tmp_path):
    path = write_spec(tmp_path, "noncomm.json", {
        "ring": {"kind": "rational"},
        "primes": [2, 3],
        "seeds": {"2": ["1", "1"], "3": ["1", "1", "2"]},
    })
    code, _, err = run(capsys, "construct", path)
    assert code == 3
    assert "do not commute" in err
    assert "1 + q + q^2 + q^3 + 2q^4 + 2q^5" in err
    assert "1 + q + 2q^2 + q^3 + q^4 + 2q^5" in err


def test_verify_builtin_quantum(capsys):
    code, out, _ = run(capsys, "verify", "quantum", "--upto", "64")
    assert code == 0
    assert "fe_ok: true" in out
    assert "first_failure: none" in out


def test_verify_constant2_fails_at_one_one(capsys):
    code, out, _ = run(capsys, "verify", "constant2", "--upto", "4")
    assert code == 1
    assert "fe_ok: false" in out
    assert "commutativity_ok: true" in out
    assert "first_failure: m=1 n=1 lhs=2 rhs=4" in out


def test_verify_seed_file_up_to_100(capsys, spec_257):
    code, out, _ = run(capsys, "verify", spec_257, "--upto", "100")
    assert code == 0
    assert "fe_ok: true" in out


def test_verify_json_output(capsys):
    code, out, _ = run(capsys, "verify", "quantum", "--upto", "16", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["fe_ok"] and obj["commutativity_ok"] and obj["support_ok"]
    assert obj["first_failure"] is None
    assert list(obj) == sorted(obj)

    code, out, _ = run(capsys, "verify", "constant2", "--upto", "4", "--json")
    assert code == 1
    obj = json.loads(out)
    assert obj["first_failure"] == {"m": 1, "n": 1, "lhs": "2", "rhs": "4"}


def test_decompose_builtins(capsys):
    code, out, _ = run(capsys, "decompose", "monomial", "--upto", "12")
    assert code == 0
    lines = out.splitlines()
    assert "t: 1" in lines
    assert "5\t4\t1\t1" in lines

    code, out, _ = run(capsys, "decompose", "power7-third", "--upto", "400")
    assert code == 0
    assert "t: 1/3" in out

    code, out, _ = run(capsys, "decompose", "quantum", "--upto", "12")
    assert code == 0
    assert "t: 0" in out


def test_decompose_json(capsys):
    code, out, _ = run(capsys, "decompose", "power7-third", "--upto", "350",
                       "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["t"] == "1/3"
    assert obj["delta"] == {"1": 0, "7": 2, "49": 16, "343": 114}
    assert obj["lambda"]["49"] == "1"
    assert obj["g"]["343"] == "1"


def test_decompose_refuses_non_solutions(capsys):
    code, out, _ = run(capsys, "decompose", "constant2", "--upto", "8")
    assert code == 1
    assert "fe_ok: false" in out


def test_oracle_unique_families(capsys):
    code, out, _ = run(capsys, "oracle", "--upto", "12")
    assert code == 0
    assert "families: 1" in out
    assert "a = 1" in out
    assert f"f_12 = {quantum_integer(12).pretty()}" in out
    assert "unique: the all-ones family" in out

    code, out, _ = run(capsys, "oracle", "--upto", "3")
    assert code == 0
    assert "f_3 = 1 + q + q^2" in out

    code, out, _ = run(capsys, "oracle", "--upto", "5")
    assert code == 0
    assert "f_5 = 1 + q + q^2 + q^3 + q^4" in out


def test_oracle_range_guard(capsys):
    code, _, err = run(capsys, "oracle", "--upto", "26")
    assert code == 2 and "error:" in err
    code, _, err = run(capsys, "oracle", "--upto", "2")
    assert code == 2


def test_upto_caps(capsys, spec_p2):
    code, _, err = run(capsys, "construct", spec_p2, "--upto", "100000")
    assert code == 2 and "--upto" in err


@pytest.mark.parametrize("name", DEMO_NAMES)
def test_demos_pass(capsys, name):
    code, out, _ = run(capsys, "demo", name)
    assert code == 0, out
    assert "FAIL" not in out


def test_unknown_demo_and_builtin(capsys):
    code, _, err = run(capsys, "demo", "nonesuch")
    assert code == 2 and "unknown demo" in err
    code, _, err = run(capsys, "verify", "nonesuch-builtin")
    assert code == 2


def test_ring_flag_parsing():
    assert parse_ring_flag("rational") is QQ
    assert parse_ring_flag("gfp:5").p == 5
    assert parse_ring_flag("cyclotomic:12").d == 12
    with pytest.raises(Exception):
        parse_ring_flag("float")


def test_verify_builtin_over_prime_field(capsys):
    code, out, _ = run(capsys, "verify", "quantum", "--upto", "16",
                       "--ring", "gfp:2")
    assert code == 0
    assert "fe_ok: true" in out


def test_builtin_seeds_match_ratio_definition():
    for p, h in SEEDS_257.items():
        assert h == quantum_integer(p).dilate(3).exact_div(quantum_integer(p))
    assert builtin_sequence("quantum").eval(3) == quantum_integer(3)
