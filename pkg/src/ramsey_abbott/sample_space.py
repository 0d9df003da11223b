"""Small-bias sample space for edge strings.

The generator is the powering construction over GF(2^r): a seed is a pair
(x, y) of field elements and output bit i is the inner product <x^i, y> over
GF(2). For any nonempty set S of positions the parity of S equals
<p_S(x), y> with p_S = sum of x^i over i in S, a nonzero polynomial of degree
below m, so it vanishes for at most m-1 of the 2^r choices of x. The bias is
therefore at most eps = (m-1)/2^r.

An eps-biased space is delta-close to t-wise independent with
delta <= 2^(t/2) * eps, so taking r >= t/2 + log2(1/delta) + log2(m) gives
the requested (t, delta).

Seeds are laid out as y in the high r bits and x in the low r bits, and are
enumerated in increasing numeric (= lexicographic bit-string) order. With y
high, the degenerate seeds (y = 0 gives the zero string) come first but only
2^r of them, and the scan reaches varied x quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import CapacityError
from .gf2 import field

# exhaustive enumeration over seeds is only attempted up to this many seed bits
ENUMERATION_LIMIT = 24

# 2**seed_bits <= k**(SPACE_EXPONENT_CONSTANT * log2 k) for every k in 4..1024
# under derive_spec; worst case is k = 5
SPACE_EXPONENT_CONSTANT = 27

# the union bound in union_bound() is < 1 for every k >= this
UNION_BOUND_MIN_K = 4


def ceil_log2(k: int) -> int:
    return (k - 1).bit_length()


@dataclass(frozen=True, order=True)
class Seed:
    value: int
    nbits: int

    def __post_init__(self):
        if self.nbits < 1:
            raise ValueError("seed width must be positive")
        if not 0 <= self.value < (1 << self.nbits):
            raise ValueError(f"seed value does not fit in {self.nbits} bits")

    @property
    def bits(self) -> str:
        return format(self.value, f"0{self.nbits}b")

    def hex(self) -> str:
        return format(self.value, f"0{(self.nbits + 3) // 4}x")

    @classmethod
    def from_hex(cls, text: str, nbits: int) -> "Seed":
        return cls(int(text, 16), nbits)

    @classmethod
    def from_bits(cls, bits: str) -> "Seed":
        return cls(int(bits, 2), len(bits))


@dataclass(frozen=True)
class SampleSpaceSpec:
    """Edge-string distribution parameters.

    ``t`` and ``delta_log2`` (delta = 2**-delta_log2) are the independence
    targets; ``r`` is the field degree chosen to meet them. A ``uniform``
    spec is the full space {0,1}^m with the identity generator.
    """

    m: int
    t: int
    delta_log2: int
    r: int
    construction: str = "powering"
    k: Optional[int] = None
    relaxed: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("string length m must be positive")
        if self.construction not in ("powering", "uniform"):
            raise ValueError(f"unknown construction {self.construction!r}")
        if self.construction == "powering" and self.r < 1:
            raise ValueError("field degree r must be positive")

    @property
    def seed_bits(self) -> int:
        return self.m if self.construction == "uniform" else 2 * self.r

    @property
    def modulus(self) -> Optional[int]:
        return field(self.r).modulus if self.construction == "powering" else None

    @property
    def epsilon(self) -> Fraction:
        """Guaranteed bias bound of the construction."""
        if self.construction == "uniform":
            return Fraction(0)
        return Fraction(self.m - 1, 1 << self.r)

    @property
    def delta(self) -> float:
        return 2.0 ** -self.delta_log2

    def to_dict(self) -> dict:
        return {
            "construction": self.construction,
            "k": self.k,
            "m": self.m,
            "t": self.t,
            "delta_log2": self.delta_log2,
            "r": self.r,
            "seed_bits": self.seed_bits,
            "modulus": None if self.modulus is None else format(self.modulus, "x"),
            "epsilon": str(self.epsilon),
            "relaxed": self.relaxed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SampleSpaceSpec":
        spec = cls(
            m=d["m"],
            t=d["t"],
            delta_log2=d["delta_log2"],
            r=d["r"],
            construction=d.get("construction", "powering"),
            k=d.get("k"),
            relaxed=d.get("relaxed", False),
        )
        if d.get("modulus") is not None and int(d["modulus"], 16) != spec.modulus:
            raise ValueError("spec modulus does not match the frozen polynomial table")
        return spec


def required_r(m: int, t: int, delta_log2: int) -> int:
    """Smallest r with 2^(t/2) * (m-1)/2^r <= 2^-delta_log2."""
    if m <= 1:
        # a single position is never biased
        return 1
    # squared to stay in integers when t is odd
    need = (m - 1) ** 2 << (t + 2 * delta_log2)
    r = 1
    while 4**r < need:
        r += 1
    return r


def make_spec(m: int, t: int, delta_log2: int, *, k: Optional[int] = None,
              r: Optional[int] = None, relaxed: bool = False) -> SampleSpaceSpec:
    if t < 1:
        raise ValueError("independence order t must be positive")
    if delta_log2 < 1:
        raise ValueError("delta must lie in (0, 1): delta_log2 >= 1")
    if r is None:
        r = required_r(m, t, delta_log2)
    return SampleSpaceSpec(m=m, t=t, delta_log2=delta_log2, r=r, k=k, relaxed=relaxed)


def derive_spec(k: int) -> SampleSpaceSpec:
    """Faithful parameters for a k-vertex base graph.

    m = C(k, 2), t = 5 L^2 and delta = 2^(-5 L^2) with L = ceil(log2 k).
    """
    if k < 4:
        raise ValueError(f"derive_spec needs k >= 4, got {k}")
    L = ceil_log2(k)
    return make_spec(math.comb(k, 2), 5 * L * L, 5 * L * L, k=k)


def relaxed_spec(k: int, t: int = 2, delta_log2: int = 1) -> SampleSpaceSpec:
    """Cheap parameters so that capped seed enumeration is practical."""
    if k < 2:
        raise ValueError("k must be >= 2")
    return make_spec(math.comb(k, 2), t, delta_log2, k=k, relaxed=True)


def uniform_spec(m: int) -> SampleSpaceSpec:
    return SampleSpaceSpec(m=m, t=m, delta_log2=m, r=0, construction="uniform")


def union_bound(k: int) -> Fraction:
    """Upper bound on the chance that a draw from derive_spec(k) has a
    monochromatic set of s = 3 ceil(log2 k) vertices.

    Each fixed s-set spans e = C(s, 2) <= t edge slots, so it is all-ones or
    all-zeros with probability at most 2 * 2^-e + delta; the union over the
    C(k, s) sets, doubled for slack, gives the bound.
    """
    spec = derive_spec(k)
    s = 3 * ceil_log2(k)
    e = math.comb(s, 2)
    assert e <= spec.t
    return math.comb(k, s) * 2 * (Fraction(2, 1 << e) + Fraction(1, 1 << spec.delta_log2))


def space_log2_cardinality(spec: SampleSpaceSpec) -> int:
    return spec.seed_bits


def _check_seed(spec: SampleSpaceSpec, seed: Seed) -> None:
    if seed.nbits != spec.seed_bits:
        raise ValueError(f"seed has {seed.nbits} bits, spec needs {spec.seed_bits}")


def expand(spec: SampleSpaceSpec, seed: Seed) -> int:
    """Output string packed as an int: bit i is output position i."""
    _check_seed(spec, seed)
    if spec.construction == "uniform":
        v = seed.value
        m = spec.m
        return int(format(v, f"0{m}b")[::-1], 2)
    r = spec.r
    y, x = seed.value >> r, seed.value & ((1 << r) - 1)
    out = 0
    for i, xi in enumerate(field(r).powers(x, spec.m)):
        if (xi & y).bit_count() & 1:
            out |= 1 << i
    return out


def sample_string(spec: SampleSpaceSpec, seed: Seed) -> str:
    """The m-character '0'/'1' string for ``seed``."""
    return format(expand(spec, seed), f"0{spec.m}b")[::-1]


def enumerate_seeds(spec: SampleSpaceSpec, cap: Optional[int] = None,
                    start: int = 0) -> Iterator[Seed]:
    nbits = spec.seed_bits
    stop = 1 << nbits
    if cap is not None:
        stop = min(stop, start + max(cap, 0))
    for v in range(start, stop):
        yield Seed(v, nbits)


def _all_outputs(spec: SampleSpaceSpec) -> list[int]:
    if spec.seed_bits > ENUMERATION_LIMIT:
        raise CapacityError(
            f"{spec.seed_bits} seed bits exceeds the enumeration limit of {ENUMERATION_LIMIT}"
        )
    return [expand(spec, s) for s in enumerate_seeds(spec)]


def measure_bias(spec: SampleSpaceSpec, subset) -> float:
    """|Pr[parity of ``subset`` = 1] - 1/2| over every seed of the space."""
    positions = set(subset)
    if not positions:
        raise ValueError("subset must be nonempty")
    if min(positions) < 0 or max(positions) >= spec.m:
        raise IndexError(f"subset positions must lie in 0..{spec.m - 1}")
    mask = sum(1 << i for i in positions)
    outs = _all_outputs(spec)
    ones = sum((o & mask).bit_count() & 1 for o in outs)
    return abs(ones / len(outs) - 0.5)


def all_subset_biases(spec: SampleSpaceSpec) -> list[float]:
    """Bias of every subset, indexed by position bitmask (index 0 is unused).

    Uses a Walsh-Hadamard transform of the output histogram, so it costs
    O(2^m * m) after enumerating the seeds.
    """
    if spec.m > 20:
        raise CapacityError("all-subset bias needs m <= 20")
    outs = _all_outputs(spec)
    size = 1 << spec.m
    hist = [0] * size
    for o in outs:
        hist[o] += 1
    h = 1
    while h < size:
        for i in range(0, size, 2 * h):
            for j in range(i, i + h):
                a, b = hist[j], hist[j + h]
                hist[j], hist[j + h] = a + b, a - b
        h *= 2
    n = len(outs)
    # hist[S] = sum over seeds of (-1)^parity_S; bias = |hist[S]| / (2n)
    return [abs(w) / (2 * n) for w in hist]
