import math

import pytest

from oracles import naive_clique_number, naive_independence_number
from ramsey_abbott.abbott import abbott_power
from ramsey_abbott.construct import (
    MAX_C,
    ConstructionParams,
    choose_c,
    construct_ramsey,
    exponent_constant,
    guaranteed_bound,
    integer_root_ceil,
    provenance,
    select_params,
    target_bound,
    verify_construction,
)
from ramsey_abbott.errors import CapacityError, ParameterError
from ramsey_abbott.extremal import max_clique, max_independent_set


def test_choose_c_matches_linear_scan():
    for eps in (2.0, 1.0, 0.75, 0.5, 0.3, 0.1, 0.05, 0.01):
        c = 2
        while not (math.log2(c) + 2) / (2 * c) < eps:
            c += 1
        assert choose_c(eps) == c


def test_select_params_eps_half():
    p = select_params(2**16, 0.5)
    assert (p.c, p.l, p.k) == (5, 1, 2**16)
    assert exponent_constant(4) == 0.5 and exponent_constant(5) < 0.5
    assert p.base_bound == 48 and p.final_bound == 48


def test_select_params_eps_small():
    # the stated rule gives 84: (log2 84 + 2)/168 < 0.05 <= (log2 83 + 2)/166
    p = select_params(2**16, 0.05)
    assert p.c == 84 and p.l == 1
    assert exponent_constant(84) < 0.05 <= exponent_constant(83)


def test_select_params_splits_into_power():
    p = select_params(2**16, 1.0)
    assert (p.c, p.l, p.k) == (2, 2, 256)
    p = select_params(256, 1.0)
    assert (p.k, p.l, p.base_bound, p.final_bound) == (16, 2, 12, 144)
    assert p.k**p.l >= p.n


def test_select_params_errors():
    with pytest.raises(ValueError):
        select_params(15, 0.5)
    with pytest.raises(ValueError):
        select_params(256, 0)
    with pytest.raises(ParameterError):
        select_params(256, exponent_constant(MAX_C) / 2)
    with pytest.raises(ValueError):
        select_params(256, 0.5, k=3, l=2)


def test_select_params_overrides_recorded():
    p = select_params(256, 0.5, k=16, l=2)
    assert p.overrides == ("l", "k")
    assert p.to_dict()["product_order"] == 256


def test_integer_root_ceil():
    for n in range(1, 3000, 7):
        for l in (1, 2, 3, 4):
            k = integer_root_ceil(n, l)
            assert k**l >= n and (k == 1 or (k - 1) ** l < n)


def test_target_bound_n256():
    # ceil(2^(0.5 * sqrt(8) * 3))
    assert target_bound(256, 0.5) == math.ceil(2 ** (1.5 * math.sqrt(8))) == 19


def test_guaranteed_bound_examples():
    r = guaranteed_bound(select_params(256, 0.5, k=16, l=2))
    assert (r.guaranteed, r.target, r.implies_target) == (144, 19, False)
    assert r.status == "asymptotic guarantee not yet binding"
    r = guaranteed_bound(ConstructionParams(32, 1.0, 2, 32, 1, 15, 15, 100))
    assert r.guaranteed == 15 and r.status == "guarantee implies target"


def test_pipeline_n25_smoke():
    res = construct_ramsey(25, 1.0, k=5, l=2, base_bound=3)
    g = res.graph
    assert g.order == 25 and res.params.max_omega == 4
    base = res.outcome.graph
    assert naive_clique_number(base) < 3 and naive_independence_number(base) < 3
    rep = verify_construction(res, "exact")
    assert rep.passed and rep.omega <= 4 and rep.alpha <= 4
    assert rep.omega == naive_clique_number(base) ** 2


def test_pipeline_n256_multiplicative():
    res = construct_ramsey(256, 0.5, k=16, l=2)
    g, base = res.graph, res.outcome.graph
    w, a = max_clique(base).size, max_independent_set(base).size
    rep = verify_construction(res, "exact")
    assert (rep.omega, rep.alpha) == (w * w, a * a) == (16, 36)
    assert rep.passed and rep.omega <= 121


def test_truncation_is_monotone():
    full = construct_ramsey(256, 0.5, k=16, l=2).graph
    for n in (200, 100, 37):
        part = construct_ramsey(n, 0.5, k=16, l=2).graph
        assert part.order == n
        assert part == full.induced_subgraph(range(n))
        assert max_clique(part).size <= max_clique(full).size
        assert max_independent_set(part).size <= max_independent_set(full).size


def test_construction_is_deterministic():
    a = construct_ramsey(200, 0.5, k=16, l=2)
    b = construct_ramsey(200, 0.5, k=16, l=2)
    assert a.graph == b.graph
    assert provenance(a, "bits") == provenance(b, "bits")


def test_output_is_power_of_base():
    res = construct_ramsey(256, 0.5, k=16, l=2)
    assert res.graph == abbott_power(res.outcome.graph, 2)


def test_capacity_guard():
    with pytest.raises(CapacityError):
        construct_ramsey(256, 0.5, k=16, l=2, max_bits=255 * 255)


def test_other_methods_in_pipeline():
    res = construct_ramsey(256, 0.5, k=16, l=2, method="conditional-expectations")
    assert res.outcome.method == "conditional-expectations"
    assert verify_construction(res, "exact").passed


def test_provenance_fields():
    res = construct_ramsey(25, 1.0, k=5, l=2, base_bound=3)
    doc = provenance(res, "dimacs", verify_construction(res, "decision"), "decision")
    assert set(doc) == {"tool", "version", "n", "format", "params", "bounds", "base_graph",
                        "verify_mode", "verification"}
    assert doc["params"]["overrides"] == ["l", "k", "base_bound"]
    assert doc["base_graph"]["seed"] == "04a"
    assert doc["verification"]["exact"] is False
