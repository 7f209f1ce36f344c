import json
import math

import pytest

import ufourier as uf


def test_fejer_table_and_resonance():
    q = uf.fejer_coeffs(5, 3)
    exact = dict((k, re) for k, re, im in q.exact_terms())
    assert exact[4] == "1/2" and exact[-8] == "-1/6"
    assert len(q) == 12
    assert uf.fejer_resonance(5, 3) == "11/6"
    assert abs(uf.partial_sum(q, 5, 0.0) - 11 / 6) < 1e-15
    assert uf.exact_coeff_total_variation(q) == "4"
    assert isinstance(uf.fejer_resonance(100000, 600), float)


def test_eval_matches_product_form():
    q = uf.fejer_coeffs(12, 7)
    t = 0.7
    want = 2 * math.sin(12 * t) * sum(math.sin(k * t) / k for k in range(1, 8))
    assert abs(q(t) - want) < 1e-12
    assert uf.sup_norm_estimate(q, 1024) <= 3.704


def test_build_and_checkpoints():
    s = uf.build({"kind": "single_point", "points": [0.5], "truncation": 3, "relaxed_orders": [3]})
    assert s.kind == "single_point"
    for n, expected in s.checkpoints():
        assert abs(s.partial_sum(n, 0.5) - expected[0]) < 1e-10
    assert s.coeff(-3) == 0
    manifest = json.loads(s.manifest())
    assert manifest["schedule"][0]["lo"] >= 1


def test_usearch_and_errors():
    s = uf.build({"kind": "finite", "points": [0, math.pi], "truncation": 6, "relaxed_orders": [3]})
    hit = uf.usearch_finite(s, [0, 0], 0.5)
    assert hit["success"] and hit["max_error"] < 0.5
    with pytest.raises(uf.NoHit):
        uf.usearch_finite(s, [40, 40], 0.01)
    with pytest.raises(uf.InvalidArgument):
        uf.fejer_coeffs(3, 3)


def test_divergence_and_cantor():
    partial, tail = uf.premeasure(1.0, math.exp(-1), 1.0, 1, 20)
    assert abs(tail - 1.1640) < 1e-3 and partial < tail
    r = uf.condition15_profile("quarters", 1.0, 1.0, math.exp(-1), 20)
    assert abs(r[0] - math.e / 16) < 1e-12
    rep = uf.property20_sweep("2", "5", 15, 500)
    assert rep["misses"] == 0
    c = uf.property21_construct([0] * 6, "1", "4", 12)
    assert c["t_n"] == "1/9"
    assert uf.interval_hits_cantor("2/15", "1/3", 2)
    assert not uf.in_cantor("1/2")
    with pytest.raises(uf.PrefixTooShort):
        uf.property21_construct([0], "1", "4", 500)


def test_cli_in_process():
    code, out, err = uf.run_cli(["fejer", "--N", "5", "--n", "3"])
    assert code == 0
    assert json.loads(out)["resonance"] == "11/6"
    code, _, _ = uf.run_cli(["eval", "--series", "no_such_file.json"])
    assert code == 1
