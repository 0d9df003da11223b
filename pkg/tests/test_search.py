from fractions import Fraction
from itertools import combinations, product

import pytest

from oracles import naive_clique_number, naive_independence_number
from ramsey_abbott.errors import ParameterError, SearchExhausted
from ramsey_abbott.extremal import verify_bounds
from ramsey_abbott.graph import pair_count
from ramsey_abbott.sample_space import Seed, make_spec, relaxed_spec
from ramsey_abbott.search import (
    conditional_expectations_base_graph,
    default_bound,
    estimator_value,
    find_base_graph,
    graph_from_seed,
    initial_estimator,
    prng_base_graph,
    search_base_graph,
)


def _mono_count(k, bound, bits):
    """Monochromatic bound-subsets of the graph whose lexicographic edge string is bits."""
    slot = {p: i for i, p in enumerate(combinations(range(k), 2))}
    count = 0
    for s in combinations(range(k), bound):
        vals = {bits[slot[p]] for p in combinations(s, 2)}
        count += len(vals) == 1
    return count


def test_default_bound():
    assert default_bound(16) == 12
    assert default_bound(32) == 15
    assert default_bound(5) == 9


@pytest.mark.parametrize(
    "k, bound, tried, seed",
    [(16, 12, 515, "00202"), (32, 15, 2051, "000802"), (5, 3, 75, "04a")],
)
def test_enumeration_golden(k, bound, tried, seed):
    out = search_base_graph(k, bound)
    assert out.seeds_tried == tried
    assert out.seed.hex() == seed
    assert out.report.passed and out.derandomized
    assert out.method == "enumeration"


def test_enumeration_result_is_sound_under_exact_check():
    for k, bound in ((16, 12), (5, 3), (10, 5)):
        out = search_base_graph(k, bound)
        g = out.graph
        exact = verify_bounds(g, bound, "exact")
        assert exact.passed
        if k <= 10:
            assert naive_clique_number(g) < bound and naive_independence_number(g) < bound


def test_enumeration_first_hit_is_lexicographic_minimum():
    out = search_base_graph(5, 3, spec=make_spec(10, 2, 1, r=6))
    spec = out.spec
    assert out.seeds_tried == out.seed.value + 1 > 1
    for v in range(out.seed.value):
        g = graph_from_seed(5, spec, Seed(v, spec.seed_bits))
        assert naive_clique_number(g) >= 3 or naive_independence_number(g) >= 3
    # R(3,3) = 6, so no 6-vertex graph passes bound 3 and the whole space is tried
    with pytest.raises(SearchExhausted) as info:
        search_base_graph(6, 3, spec=make_spec(15, 2, 1, r=4))
    assert info.value.seeds_tried == 256


def test_exhausted_and_cap():
    with pytest.raises(SearchExhausted) as info:
        search_base_graph(8, 2)
    assert info.value.seeds_tried == 1 << relaxed_spec(8).seed_bits
    with pytest.raises(SearchExhausted) as info:
        search_base_graph(16, 12, cap=0)
    assert info.value.seeds_tried == 0
    with pytest.raises(SearchExhausted):
        search_base_graph(16, 12, cap=514)
    assert search_base_graph(16, 12, cap=515).seeds_tried == 515


def test_spec_length_must_match():
    with pytest.raises(ValueError):
        search_base_graph(16, 12, spec=relaxed_spec(15))
    with pytest.raises(ValueError):
        search_base_graph(16, 1)


def test_enumeration_is_deterministic():
    a = search_base_graph(32, 15)
    b = search_base_graph(32, 15)
    assert a.graph == b.graph and a.to_dict() == b.to_dict()


def test_parallel_matches_serial():
    serial = search_base_graph(32, 15)
    parallel = search_base_graph(32, 15, workers=2)
    assert parallel.seed == serial.seed
    assert parallel.seeds_tried == serial.seeds_tried
    assert parallel.graph == serial.graph


def test_conditional_expectations_k16():
    out = conditional_expectations_base_graph(16, 12)
    assert out.report.passed and out.seeds_tried == 0 and out.derandomized
    assert (out.report.omega, out.report.alpha) == (4, 11)
    assert len(out.estimator_trace) == 121
    trace = out.estimator_trace
    assert all(b <= a for a, b in zip(trace, trace[1:]))
    assert estimator_value(trace[0], 12) == initial_estimator(16, 12) < 1
    assert trace[-1] == 0
    assert verify_bounds(out.graph, 12, "exact").passed


@pytest.mark.parametrize("k, bound", [(5, 4), (6, 4), (6, 5)])
def test_estimator_matches_completion_average(k, bound):
    out = conditional_expectations_base_graph(k, bound)
    bits = out.graph.edge_string()
    m = pair_count(k)
    for p in range(m + 1):
        total = sum(
            _mono_count(k, bound, bits[:p] + "".join(rest))
            for rest in product("01", repeat=m - p)
        )
        assert estimator_value(out.estimator_trace[p], bound) == Fraction(total, 2 ** (m - p))


def test_conditional_expectations_errors():
    with pytest.raises(ParameterError) as info:
        conditional_expectations_base_graph(6, 3)
    assert info.value.estimator == 5
    with pytest.raises(ParameterError):
        conditional_expectations_base_graph(6, 2)


def test_prng_fallback_is_labelled():
    out = prng_base_graph(16, 12, seed=1)
    assert out.method == "prng-fallback" and not out.derandomized
    assert out.to_dict()["derandomized"] is False
    assert out.report.passed
    assert prng_base_graph(16, 12, seed=1).graph == out.graph
    with pytest.raises(SearchExhausted):
        prng_base_graph(6, 3, cap=50)


def test_find_base_graph_dispatch():
    assert find_base_graph(16, 12).method == "enumeration"
    assert find_base_graph(16, 12, "conditional-expectations").method == "conditional-expectations"
    assert find_base_graph(16, 12, "prng-fallback").method == "prng-fallback"
    with pytest.raises(ValueError):
        find_base_graph(16, 12, "annealing")


def test_outcome_dict_shape():
    d = search_base_graph(16, 12).to_dict()
    assert d["seed"] == "00202" and d["seed_bits"] == 18
    assert d["spec"]["r"] == 9
    assert d["verification"]["passed"] is True
    d = conditional_expectations_base_graph(16, 12).to_dict()
    assert d["seed"] is None and d["estimator_end"] == "0"


def test_k16_succeeds_within_a_thousand_seeds():
    out = search_base_graph(16, 12, spec=relaxed_spec(16), cap=1000)
    assert out.seeds_tried <= 1000
    assert verify_bounds(out.graph, 12, "exact").passed
