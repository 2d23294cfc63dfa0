import json

try:
    import badweave as bw
except ImportError:
    import _badweave as bw


def test_derive_params_desk():
    prm = json.loads(bw.derive_params("{}"))
    assert prm["R"] == 16
    assert prm["c1"] == "1/16384"
    assert prm["pairs"][0] == {"pair": "1/2,1/2", "c1t": "1/16384", "c": "1/4194304"}


def test_derive_params_rejects_rational_theta():
    try:
        bw.derive_params('{"theta": "1/2"}')
    except ValueError as e:
        assert "rational theta" in str(e)
    else:
        assert False, "rational theta accepted"


def test_continued_fraction():
    cf = bw.continued_fraction("sqrt(2)")
    assert cf["period"] == [2] and cf["a_max"] == 2
    assert bw.continued_fraction("sqrt(3)")["period"] == [1, 2]


def test_construct_depth1():
    run = bw.construct('{"depth": 1}')
    assert run["first_empty"] == -1
    cert = json.loads(run["cert_json"])
    assert cert["R"] == 16 and cert["depth"] == 1
    first = json.loads(run["tree_jsonl"].splitlines()[0])
    assert first["n"] == 0 and first["parent"] == -1
    assert run["removals_csv"].startswith("line,level,count")


def test_check_dual_and_simultaneous():
    assert bw.check_dual("sqrt(2)", "1/2", "1/2,1/2", "1/20", "1") is None
    w = json.loads(bw.check_dual("1/3", "sqrt(2)", "1/2,1/2", "1/100", "100"))
    assert (w["A"], w["B"]) == ("3", "0")
    assert bw.check_simultaneous("sqrt(2)", "sqrt(3)", "1/2,1/2", "1/1000000", 50) is None
    w = json.loads(bw.check_simultaneous("1/7", "1/7", "1/2,1/2", "1/100", 100))
    assert int(w["q"]) <= 7


def test_transference_round_trip():
    dual = json.loads(bw.dual_from_simultaneous(7, "1/10", "1/2,1/2", "3/7", "2/7"))
    assert dual["kind"] == "dual"
    # ||u1*x + u2*y|| = 0 exactly when 3*u1 + 2*u2 = 0 (mod 7)
    assert (int(dual["A"]) * 3 + int(dual["B"]) * 2) % 7 == 0
    sim = json.loads(bw.simultaneous_from_dual(2, 1, "1/100", "1/2,1/2", "2/7", "3/7"))
    assert sim["kind"] == "simultaneous"
    assert int(sim["q"]) >= 1
