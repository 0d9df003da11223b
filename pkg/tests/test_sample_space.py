import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from oracles import powering_string
from ramsey_abbott.errors import CapacityError
from ramsey_abbott.sample_space import (
    SPACE_EXPONENT_CONSTANT,
    UNION_BOUND_MIN_K,
    SampleSpaceSpec,
    Seed,
    all_subset_biases,
    derive_spec,
    enumerate_seeds,
    make_spec,
    measure_bias,
    relaxed_spec,
    required_r,
    sample_string,
    uniform_spec,
    union_bound,
)

GOLDEN_RELAXED_16 = (
    "100000000100000001100000010100000111100001000100011001100101010101111111"
    "110000000010000000110000001010000011110000100010"
)
GOLDEN_FAITHFUL_16 = (
    "100111110101000000110000000000001001111101010000001100000000000010011111"
    "010100000011000000000000100111110101000000110000"
)


def test_derive_spec_k16():
    s = derive_spec(16)
    assert (s.m, s.t, s.delta_log2) == (120, 80, 80)
    assert s.delta == 2.0**-80


def test_derive_spec_k4():
    s = derive_spec(4)
    assert (s.m, s.t, s.delta_log2) == (6, 20, 20)


def test_derive_spec_rejects_small_k():
    with pytest.raises(ValueError):
        derive_spec(3)


def test_field_degree_meets_closeness_target():
    # 2^(t/2) * eps <= delta, and r is the least degree that does it
    for k in (4, 5, 9, 16, 17, 32, 100):
        s = derive_spec(k)
        assert Fraction(2) ** s.t * s.epsilon**2 <= Fraction(1, 4**s.delta_log2)
        looser = Fraction(s.m - 1, 2 ** (s.r - 1))
        assert Fraction(2) ** s.t * looser**2 > Fraction(1, 4**s.delta_log2)
    assert required_r(1, 4, 3) == 1


def test_space_cardinality_constant():
    # 2^seed_bits <= k^(C log2 k), compared in log space with exact integers where possible
    for k in range(4, 1025):
        s = derive_spec(k)
        assert s.seed_bits <= SPACE_EXPONENT_CONSTANT * math.log2(k) ** 2, k
    assert derive_spec(5).seed_bits > (SPACE_EXPONENT_CONSTANT - 1) * math.log2(5) ** 2


def test_union_bound_below_one():
    for k in list(range(UNION_BOUND_MIN_K, 300)) + [512, 1024, 4096]:
        assert union_bound(k) < 1, k
    # k = 16: C(16, 12) * 2 * (2^-65 + 2^-80)
    assert union_bound(16) == 1820 * 2 * (Fraction(2, 2**66) + Fraction(1, 2**80))


def test_golden_all_zero_seed():
    s = relaxed_spec(16)
    assert sample_string(s, Seed(0, s.seed_bits)) == "0" * 120
    f = derive_spec(16)
    assert sample_string(f, Seed(0, f.seed_bits)) == "0" * 120


def test_golden_vectors():
    s = relaxed_spec(16)
    assert s.r == 9 and s.modulus == 0x203
    assert sample_string(s, Seed(0x00202, 18)) == GOLDEN_RELAXED_16
    f = derive_spec(16)
    assert f.r == 127 and f.modulus == (1 << 127) | 0b11
    seed = Seed((0x1234567 << 127) | 3, 254)
    assert sample_string(f, seed) == GOLDEN_FAITHFUL_16


def test_generator_matches_list_arithmetic():
    rng = random.Random(71)
    for spec in (relaxed_spec(16), relaxed_spec(7), make_spec(40, 6, 3), derive_spec(8)):
        for _ in range(10):
            seed = Seed(rng.getrandbits(spec.seed_bits), spec.seed_bits)
            y, x = seed.value >> spec.r, seed.value & ((1 << spec.r) - 1)
            assert sample_string(spec, seed) == powering_string(spec.r, spec.modulus, x, y, spec.m)


def test_distinct_seeds_give_distinct_strings():
    s = relaxed_spec(16)
    rng = random.Random(73)
    pairs = [(rng.getrandbits(18), rng.getrandbits(18)) for _ in range(10)]
    assert any(
        sample_string(s, Seed(a, 18)) != sample_string(s, Seed(b, 18)) for a, b in pairs if a != b
    )


def test_length_one_string():
    s = make_spec(1, 2, 1)
    for v in range(1 << s.seed_bits):
        seed = Seed(v, s.seed_bits)
        out = sample_string(s, seed)
        assert len(out) == 1
        assert out == sample_string(make_spec(4, 2, 1, r=s.r), seed)[0]


def test_seed_length_mismatch():
    s = relaxed_spec(16)
    with pytest.raises(ValueError):
        sample_string(s, Seed(0, 17))


def test_enumerate_small():
    s = uniform_spec(2)
    assert [seed.bits for seed in enumerate_seeds(s)] == ["00", "01", "10", "11"]


def test_enumerate_capped_and_deterministic():
    s = make_spec(50, 4, 1, r=10)
    assert s.seed_bits == 20
    first = list(enumerate_seeds(s, cap=5))
    assert [x.bits for x in first] == [format(i, "020b") for i in range(5)]
    assert first == list(enumerate_seeds(s, cap=5))
    assert list(enumerate_seeds(s, cap=0)) == []
    values = [x.value for x in enumerate_seeds(make_spec(6, 2, 1, r=3))]
    assert values == sorted(values) == list(range(64))


def test_seed_hex_round_trip():
    seed = Seed(0xABC, 18)
    assert seed.hex() == "00abc"
    assert Seed.from_hex("00abc", 18) == seed
    assert Seed.from_bits(seed.bits) == seed
    with pytest.raises(ValueError):
        Seed(4, 2)


def test_uniform_baseline_has_zero_bias():
    s = uniform_spec(6)
    assert s.seed_bits == 6 and s.epsilon == 0
    for size in (1, 2, 6):
        for sub in combinations(range(6), size):
            assert measure_bias(s, sub) == 0.0
    # identity generator: the output is the seed bit string
    assert sample_string(s, Seed.from_bits("101100")) == "101100"


def test_singleton_and_full_subset_bias():
    for m, r in ((6, 4), (10, 6), (8, 8)):
        s = make_spec(m, 2, 1, r=r)
        eps = float(s.epsilon)
        assert measure_bias(s, [0]) <= eps
        assert measure_bias(s, range(m)) <= eps


def test_bias_direct_matches_transform():
    s = make_spec(8, 2, 1, r=5)
    table = all_subset_biases(s)
    for mask in range(1, 1 << 8):
        sub = [i for i in range(8) if mask >> i & 1]
        assert measure_bias(s, sub) == table[mask]


def test_epsilon_bias_exhaustive_tiny():
    for m in range(2, 11):
        for r in range(3, 9):
            s = make_spec(m, 2, 1, r=r)
            assert s.seed_bits <= 16
            biases = all_subset_biases(s)
            assert max(biases[1:]) <= s.epsilon, (m, r)


def test_measure_bias_errors():
    s = make_spec(6, 2, 1, r=4)
    with pytest.raises(ValueError):
        measure_bias(s, [])
    with pytest.raises(IndexError):
        measure_bias(s, [6])
    with pytest.raises(CapacityError):
        measure_bias(make_spec(6, 2, 1, r=13), [0])


def test_spec_json_round_trip():
    for s in (derive_spec(16), relaxed_spec(32), uniform_spec(5)):
        assert SampleSpaceSpec.from_dict(s.to_dict()) == s
    bad = derive_spec(16).to_dict()
    bad["modulus"] = "3"
    with pytest.raises(ValueError):
        SampleSpaceSpec.from_dict(bad)
