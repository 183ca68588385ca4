import json
import os

import pytest

from carlitz_vmf import serialize as ser
from carlitz_vmf.cli import main, parse_prime
from carlitz_vmf.context import Context
from carlitz_vmf.forms import gen_g
from conftest import shared_context


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_prime():
    ctx = Context(3)
    assert parse_prime(ctx, "theta") == (0, 1)
    assert parse_prime(ctx, "theta+1") == (1, 1)
    assert parse_prime(ctx, "theta^2+theta+2") == (2, 1, 1)
    with pytest.raises(ValueError):
        parse_prime(ctx, "2*theta")  # not monic


def test_compute_matches_library(tmp_path, capsys):
    out = tmp_path / "g.json"
    code, _, _ = run(["compute", "--q", "3", "--trunc", "10", "--form", "g",
                      "--out", str(out), "--cache-dir", str(tmp_path / "c")],
                     capsys)
    assert code == 0
    env = json.loads(out.read_text())
    assert env["schema"] == "carlitz-vmf/1"
    assert env["kind"] == "classical"
    ctx = Context(3)
    back = ser.classical_from_json(ctx, env["payload"])
    assert back.series.eq_to_prec(gen_g(ctx, 10).series)


def test_compute_cache_bit_identical(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    args = ["compute", "--q", "2", "--trunc", "12", "--form", "E1",
            "--cache-dir", cache]
    code, out1, _ = run(args, capsys)
    assert code == 0
    files = os.listdir(cache)
    assert len(files) == 1
    code, out2, _ = run(args, capsys)
    assert code == 0
    assert out1 == out2
    assert os.listdir(cache) == files


def test_compute_d2_small(tmp_path, capsys):
    code, out, _ = run(["compute", "--q", "2", "--trunc", "8", "--form", "d2",
                        "--no-cache"], capsys)
    assert code == 0
    env = json.loads(out)
    assert env["kind"] == "series"
    # constant term 1, next displayed coefficient theta + t
    coeffs = dict((n, s) for n, s in env["payload"]["coeffs"])
    assert 0 in coeffs and 1 in coeffs


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(["compute", "--q", "3", "--trunc", "10",
                        "--form", "nonsense", "--no-cache"], capsys)
    assert code == 2
    code, _, err = run(["compute", "--q", "3", "--trunc", "3", "--form", "E1",
                        "--no-cache"], capsys)
    assert code == 2 and "q+2" in err
    code, _, err = run(["compute", "--q", "6", "--trunc", "10", "--form", "g",
                        "--no-cache"], capsys)
    assert code == 2
    code, _, err = run(["verify", "--q", "2", "--suite", "no-such-suite"],
                       capsys)
    assert code == 2
    code, _, err = run(["compute", "--trunc", "10", "--form", "g"], capsys)
    assert code == 2


def test_verify_suite_pass(capsys):
    code, out, _ = run(["verify", "--q", "3", "--suite", "generators",
                        "--trunc", "40"], capsys)
    assert code == 0
    assert "[PASS] generators" in out


def test_verify_report_file(tmp_path, capsys):
    rep = tmp_path / "report.json"
    code, _, _ = run(["verify", "--q", "2", "--suite", "det", "--trunc", "20",
                      "--report", str(rep)], capsys)
    assert code == 0
    data = json.loads(rep.read_text())
    assert data[0]["suite"] == "det"
    assert data[0]["ok"] is True


def test_verify_experimental_is_report_only(capsys):
    code, out, _ = run(["verify", "--q", "2", "--suite",
                        "weight-q2-experimental", "--trunc", "16"], capsys)
    assert code == 0
    assert "[REPORT]" in out
    assert "verdict" in out
