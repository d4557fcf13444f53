import io
import json
import subprocess
import sys

import pytest

from weylcoh.cli import RunConfig, main, parse_config, run


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    try:
        cfg = parse_config(list(argv))
    except SystemExit as exc:
        return exc.code, "", ""
    code = run(cfg, out, err)
    return code, out.getvalue(), err.getvalue()


def test_series_g2_json():
    code, out, _ = invoke("series", "--group", "g2", "--m", "2", "--output", "json")
    assert code == 0
    d = json.loads(out)
    assert d["series"][:15] == [1, 0, 1, 2, 1, 2, 1, 0, 0, 0, 1, 2, 0, 2, 3]


def test_series_su3_m1():
    code, out, _ = invoke("series", "--group", "su3", "--m", "1", "--max-degree", "8", "--output", "json")
    assert json.loads(out)["series"] == [1, 0, 0, 1, 0, 1, 0, 0, 1]


def test_series_sp2_trailing_zeros():
    code, out, _ = invoke("series", "--group", "sp2", "--m", "2", "--max-degree", "12", "--output", "json")
    assert json.loads(out)["series"][11:] == [0, 0]


def test_text_and_json_agree():
    _, text, _ = invoke("series", "--group", "sp2")
    _, js, _ = invoke("series", "--group", "sp2", "--output", "json")
    coeffs = [int(t) for t in text.splitlines()[-1].split(":")[1].split()]
    assert coeffs == json.loads(js)["series"]


def test_verify_stated_fails_with_named_checks():
    code, out, err = invoke("verify", "--group", "su3")
    assert code == 1
    assert "verdict: false" in out
    assert out.count("[PASS] relation") == 6 and out.count("[FAIL] relation") == 1
    assert "[PASS] cube" in out
    assert "relation a1^1*a2^2 + a1^2*a2^1" in err


def test_verify_completed_json():
    code, out, _ = invoke("verify", "--group", "sp2", "--relations", "completed", "--output", "json")
    assert code == 0
    d = json.loads(out)
    assert d["verdict"] is True
    assert d["group"] == "Sp2" and d["m"] == 2
    assert all(len(row) == 4 for row in d["dimension_table"])


def test_verify_json_is_stable():
    a = invoke("verify", "--group", "g2", "--output", "json")[1]
    b = invoke("verify", "--group", "g2", "--output", "json")[1]
    assert a == b


def test_verify_requires_m2():
    code, _, err = invoke("verify", "--group", "g2", "--m", "3")
    assert code == 2
    assert "verification requires m=2" in err


@pytest.mark.parametrize("argv", [
    ("series", "--group", "e8"),
    ("series", "--group", "g2", "--m", "0"),
    ("invariants", "--group", "g2"),
    ("invariants", "--group", "g2", "--degree", "-1"),
    ("bogus",),
])
def test_bad_flags_exit_2(argv):
    assert main(list(argv)) == 2


def test_invariants_examples():
    code, out, _ = invoke("invariants", "--group", "su3", "--degree", "2", "--output", "json")
    d = json.loads(out)
    assert code == 0 and d["dimension"] == 1
    assert d["basis"] == ["y2^1 | y2^2 + 1/2*y2^1 | y1^2 + 1/2*y1^1 | y2^2 + y1^1 | y1^2"]
    assert json.loads(invoke("invariants", "--group", "g2", "--degree", "1", "--output", "json")[1])["basis"] == []
    assert json.loads(invoke("invariants", "--group", "sp2", "--degree", "10", "--output", "json")[1])["dimension"] == 3


def test_invariant_su3_deg2_proportional_to_b1():
    from weylcoh.algebra import make_context
    from weylcoh.presentation import build_generators
    ctx = make_context("SU3", 2)
    _, out, _ = invoke("invariants", "--group", "su3", "--degree", "2", "--output", "json")
    v = ctx.parse(json.loads(out)["basis"][0])
    b1 = build_generators(ctx).b(1)
    assert v == b1 / 2


def test_out_file(tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = invoke("series", "--group", "su3", "--output", "json", "--out", str(path))
    assert code == 0 and out == ""
    assert json.loads(path.read_text())["group"] == "SU3"


def test_config_round_trip():
    cfg = parse_config(["verify", "--group", "g2", "--max-degree", "20", "--seed", "5",
                        "--relations", "completed", "--output", "json"])
    assert parse_config(cfg.to_argv()) == cfg
    assert RunConfig.from_dict(cfg.to_dict()) == cfg
    cfg = parse_config(["invariants", "--group", "sp2", "--degree", "3"])
    assert parse_config(cfg.to_argv()) == cfg


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "weylcoh", "series", "--group", "su3", "--m", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert "1 + t^3 + t^5 + t^8" in r.stdout
