import dataclasses
import io
import json
import subprocess
import sys

import pytest

from quintic_nearmiss.cli import (
    CSV_FIELDS,
    OutputRecord,
    _sign_error_bases,
    cmd_gen,
    cmd_identity,
    cmd_verify,
    main,
    parse_records,
)
from quintic_nearmiss.rings import GaussianInt
from quintic_nearmiss.solutions import solutions, verify_quintic


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    finally:
        sys.stdout, sys.stderr = old
    return code, out.getvalue(), err.getvalue()


def test_gen_json_two():
    code, out, _ = run(["gen", "--count", "2", "--format", "json"])
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    rec = json.loads(lines[1])
    assert rec == {
        "n": 1,
        "a": "3",
        "b_re": "-2",
        "b_im": "3",
        "c_re": "2",
        "c_im": "3",
        "sign": -1,
        "verified": True,
    }


def test_gen_csv_one():
    code, out, _ = run(["gen", "-n", "1", "-f", "csv"])
    assert code == 0
    assert out.splitlines() == [",".join(CSV_FIELDS), "0,1,0,1,0,1,1,true"]


@pytest.mark.parametrize("count", ["0", "-3", "x"])
def test_gen_bad_count(count):
    code, _, err = run(["gen", "--count", count])
    assert code != 0
    assert "usage" in err


def test_gen_default_count():
    code, out, _ = run(["gen"])
    assert code == 0
    assert len(out.splitlines()) == 10


def test_gen_reports_tampered_record():
    good = list(solutions(3))
    bad = [good[0], dataclasses.replace(good[1], a=GaussianInt(4)), good[2]]
    out, err = io.StringIO(), io.StringIO()
    assert cmd_gen(3, "json", out, err, records=bad) == 1
    assert "n=1" in err.getvalue()
    flags = [r.verified for r in parse_records(out.getvalue(), "json")]
    assert flags == [True, False, True]


@pytest.mark.parametrize("fmt", ["json", "csv"])
def test_output_reparses_and_verifies(fmt):
    code, out, _ = run(["gen", "-n", "60", "-f", fmt])
    assert code == 0
    recs = parse_records(out, fmt)
    assert [r.n for r in recs] == list(range(60))
    for orec in recs:
        assert orec.verified
        assert verify_quintic(orec.to_solution())
    # large components are plain decimal strings
    assert all(s.lstrip("-").isdigit() for s in (recs[-1].a, recs[-1].b_re, recs[-1].c_im))
    assert len(recs[-1].a) > 30


def test_output_record_round_trip():
    rec = list(solutions(5))[4]
    orec = OutputRecord.from_solution(rec, True)
    assert OutputRecord.from_json(orec.to_json()) == orec
    assert orec.to_solution() == rec


def test_verify_small():
    code, out, _ = run(["verify", "-n", "4"])
    assert code == 0
    assert "known examples matched for n=1,2,3" in out
    assert "OK:" in out


def test_verify_trivial():
    code, out, _ = run(["verify", "--count", "1"])
    assert code == 0
    assert "quintic: 1/1 passed" in out


def test_verify_names_first_failure():
    checks = [("always", lambda n: True), ("breaks_at_2", lambda n: n != 2)]
    out, err = io.StringIO(), io.StringIO()
    assert cmd_verify(5, out, err, checks=checks) == 1
    assert "breaks_at_2 at n=2" in err.getvalue()
    assert "breaks_at_2: 4/5 passed" in out.getvalue()


def test_identity_succeeds():
    code, out, _ = run(["identity"])
    assert code == 0
    assert "odd-in-x part: 0 monomials" in out
    assert "g: 6 monomials" in out


def test_identity_catches_sign_error():
    out, err = io.StringIO(), io.StringIO()
    assert cmd_identity(out, err, bases=_sign_error_bases()) == 1
    code, _, _ = run(["identity", "--inject-sign-error"])
    assert code == 1


def test_identity_deterministic():
    assert run(["identity"]) == run(["identity"])


def test_gf_examples():
    assert run(["gf", "-w", "a", "-n", "4"])[1].splitlines() == ["0 1", "1 3", "2 13", "3 47"]
    assert run(["gf", "--which", "c", "--count", "2"])[1].splitlines() == ["0 i", "1 2+3i"]
    assert run(["gf", "-w", "a_raw", "-n", "3"])[1].splitlines() == ["0 1", "1 6", "2 52"]


def test_gf_formats():
    _, out, _ = run(["gf", "-w", "b", "-n", "2", "-f", "json"])
    assert [json.loads(s) for s in out.splitlines()] == [
        {"n": 0, "re": "0", "im": "1"},
        {"n": 1, "re": "-2", "im": "3"},
    ]
    _, out, _ = run(["gf", "-w", "b", "-n", "2", "-f", "csv"])
    assert out.splitlines() == ["n,re,im", "0,0,1", "1,-2,3"]


def test_gf_unknown_which():
    code, _, err = run(["gf", "-w", "d"])
    assert code == 2
    assert "invalid choice" in err


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "quintic_nearmiss", "gen", "-n", "30"]
    first = subprocess.run(cmd, capture_output=True, check=True)
    second = subprocess.run(cmd, capture_output=True, check=True)
    assert first.stdout == second.stdout
    assert first.stdout.count(b"\n") == 30
