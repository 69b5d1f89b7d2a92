import io
import json
import re

import pytest

from calibfree.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_invariants_json():
    code, out, err = call("invariants", "M1(11) # 2*K3", "--json")
    assert code == 0 and err == ""
    doc = json.loads(out)
    inv = doc["invariants"]
    assert inv["chi"] == 0 and inv["tau"] == -32 and inv["spin"] is True
    assert type(inv["chi"]) is int and type(inv["tau"]) is int
    assert set(doc) >= {"input", "invariants", "gauss_classes", "intersections", "verdicts",
                        "certificates"}


def test_invariants_text():
    code, out, _ = call("invariants", "M1(11) # 2*K3")
    assert code == 0
    assert "chi=0 tau=-32 spin=true" in out


def test_verdicts_t4():
    code, out, _ = call("verdicts", "T4", "--json")
    v = json.loads(out)["verdicts"]
    assert v == {"coassociative_free_immersion": "yes", "cayley_free_embedding": "yes",
                 "chi_vanishing_g2_target": "yes", "parallelizable": "yes",
                 "gauss_map": "contractible"}


def test_gauss_k3():
    code, out, _ = call("gauss", "K3", "--json")
    doc = json.loads(out)
    g = doc["gauss_classes"]["g37"]
    assert (g["cp2"]["num"], g["cp2"]["den"]) == (36, 1)
    assert (g["cp2bar"]["num"], g["cp2bar"]["den"]) == (12, 1)
    assert doc["intersections"]["ass"]["num"] == 36
    assert doc["intersections"]["ass_tilde"]["num"] == 12
    _, text, _ = call("gauss", "K3")
    assert "(36, 12)" in text and "ASS=36" in text and "ASS~=12" in text


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj


def test_rationals_exact():
    doc = json.loads(call("certificate", "CP2", "--json")[1])
    g48 = doc["gauss_classes"]["g48"]
    assert g48["g45"] == {"num": 3, "den": 2, "str": "3/2", "decimal": "1.5"}
    assert not any(isinstance(v, float) for v in _leaves(doc))


@pytest.mark.parametrize("expr", ["K3 #", "RP4", "M1", "0*K3", "K3 $ S4"])
def test_parse_errors_exit_2(expr):
    code, out, err = call("invariants", expr, "--json")
    assert code == 2
    assert out == ""
    assert err.startswith("calibfree: ") and err.count("\n") == 1


def test_invalid_manifold_exit_1():
    code, out, err = call("invariants", "M1(0)")
    assert code == 1 and out == "" and "invalid manifold" in err


def test_usage_errors():
    assert call()[0] == 2
    assert call("frobnicate", "K3")[0] == 2
    assert call("invariants")[0] == 2


def test_certificate_flags_family_discrepancy():
    doc = json.loads(call("certificate", "M4(9) # K3", "--json")[1])
    assert doc["invariants"]["chi"] == 4
    assert doc["flags"] and "claimed chi = 0" in doc["flags"][0]
    doc = json.loads(call("certificate", "M1(11) # 2*K3", "--json")[1])
    assert doc["flags"] == []


def test_certificate_contents():
    doc = json.loads(call("certificate", "K3", "--json")[1])
    led = doc["certificates"]["gauss_map"]
    assert led["conclusion"] == "blocked-at-o4"
    assert led["stages"]["o4"]["values"]["cp2"]["num"] == 36
    assert led["hurewicz"]["witness_prime"] == 3
    reasons = doc["certificates"]["parallelizable"]["reasons"]
    assert reasons[-1]["values"]["p1"] == -48


def _numbers(obj, skip=("input", "label", "command")):
    if isinstance(obj, dict):
        if set(obj) == {"num", "den", "str", "decimal"}:
            yield obj["str"]
            return
        for k, v in obj.items():
            if k not in skip:
                yield from _numbers(v, skip)
    elif isinstance(obj, list):
        for v in obj:
            yield from _numbers(v, skip)
    elif isinstance(obj, int) and not isinstance(obj, bool):
        yield str(obj)


@pytest.mark.parametrize("cmd", ["invariants", "gauss", "verdicts", "certificate"])
@pytest.mark.parametrize("expr", ["K3", "CP2 # 3*CP2bar", "M1(11) # 2*K3", "T4"])
def test_text_and_json_carry_same_numbers(cmd, expr):
    doc = json.loads(call(cmd, expr, "--json")[1])
    text = call(cmd, expr)[1]
    text_numbers = set(re.findall(r"-?\d+(?:/\d+)?", text))
    assert set(_numbers(doc)) <= text_numbers


def test_batch_order(tmp_path):
    f = tmp_path / "batch.txt"
    f.write_text("# header\nK3\nT4\n\nM1(11) # 2*K3\nS4\n")
    code, out, err = call("batch", str(f))
    assert code == 0 and err == ""
    docs = [json.loads(line) for line in out.splitlines()]
    assert [d["input"] for d in docs] == ["K3", "T4", "M1(11) # 2*K3", "S4"]
    assert docs[2]["invariants"]["tau"] == -32


def test_batch_errors_inline(tmp_path):
    f = tmp_path / "batch.txt"
    f.write_text("K3\nK3 #\nM1(0)\nT4\n")
    code, out, err = call("batch", str(f))
    docs = [json.loads(line) for line in out.splitlines()]
    assert [d["input"] for d in docs] == ["K3", "K3 #", "M1(0)", "T4"]
    assert docs[1]["error"]["code"] == 2 and docs[2]["error"]["code"] == 1
    assert code == 2
    assert ":2:" in err and ":3:" in err


def test_batch_missing_file(tmp_path):
    code, out, err = call("batch", str(tmp_path / "nope"))
    assert code == 2 and out == ""


def test_catalog_flag(tmp_path):
    a = tmp_path / "a.cat"
    b = tmp_path / "b.cat"
    a.write_text("manifold Enriques chi=12 tau=-8 spin=false\n")
    b.write_text("# more\nmanifold Fake chi=0 tau=0 spin=true\n")
    code, out, _ = call("invariants", "enriques # fake", "--catalog", str(a),
                        "--catalog", str(b), "--json")
    assert code == 0
    assert json.loads(out)["invariants"]["chi"] == 10
    b.write_text("manifold Fake chi=0 tau=0 spin=true\nmanifold FAKE chi=2 tau=0 spin=true\n")
    code, out, err = call("invariants", "K3", "--catalog", str(b))
    assert code == 2 and out == "" and "duplicate" in err


def test_lax(tmp_path):
    c = tmp_path / "x.cat"
    c.write_text("manifold Odd chi=10 tau=8 spin=true\n")
    code, out, err = call("invariants", "Odd", "--catalog", str(c))
    assert code == 1 and out == "" and "Rokhlin" in err
    code, out, err = call("invariants", "Odd", "--catalog", str(c), "--lax", "--json")
    assert code == 0
    assert json.loads(out)["invariants"]["tau"] == 8
    assert "warning" in err and "Rokhlin" in err


def test_families_command():
    code, out, _ = call("families", "--json")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    flagged = {r["family"] for r in recs if r["flag"]}
    assert "nonpar-1" not in flagged and "par-1" not in flagged
    assert {"nonpar-3", "par-3", "nonpar-2-M2", "par-2-M5"} <= flagged


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "calibfree", "invariants", "K3 # K3", "--json"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["invariants"]["chi"] == 46
