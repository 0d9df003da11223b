"""Finding a k-vertex base graph with ω, α < bound.

Three routes:

* ``enumeration`` walks the small-bias seed space in lexicographic order and
  returns the first seed whose graph passes the decision check.
* ``conditional-expectations`` fixes the C(k,2) edge bits one by one, each time
  choosing the value that does not increase the expected number of
  monochromatic ``bound``-subsets.
* ``prng-fallback`` draws edge strings from a seeded PRNG. It is *not*
  derandomized and is labelled as such in the outcome.
"""

from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .errors import CapacityError, ParameterError, SearchExhausted
from .extremal import VerificationReport, verify_bounds
from .graph import Graph, pair_count, pair_index
from .sample_space import SampleSpaceSpec, Seed, relaxed_spec, sample_string

log = logging.getLogger(__name__)

METHODS = ("enumeration", "conditional-expectations", "prng-fallback")

# seeds handed to one worker at a time when searching in parallel
CHUNK = 256

# subset/slot incidences the conditional-expectations estimator may hold
MAX_INCIDENCES = 20_000_000


def default_bound(k: int) -> int:
    return 3 * (k - 1).bit_length()


@dataclass
class SearchOutcome:
    graph: Graph
    report: VerificationReport
    method: str
    seeds_tried: int
    seed: Optional[Seed] = None
    spec: Optional[SampleSpaceSpec] = None
    # conditional expectations: scaled estimator after each fixed bit
    estimator_trace: list[int] = field(default_factory=list, repr=False)

    @property
    def derandomized(self) -> bool:
        return self.method != "prng-fallback"

    def to_dict(self) -> dict:
        d = {
            "method": self.method,
            "derandomized": self.derandomized,
            "k": self.graph.order,
            "bound": self.report.bound,
            "seed": None if self.seed is None else self.seed.hex(),
            "seed_bits": None if self.seed is None else self.seed.nbits,
            "seeds_tried": self.seeds_tried,
            "spec": None if self.spec is None else self.spec.to_dict(),
            "verification": self.report.to_dict(),
        }
        if self.estimator_trace:
            d["estimator_start"] = str(estimator_value(self.estimator_trace[0], self.report.bound))
            d["estimator_end"] = str(estimator_value(self.estimator_trace[-1], self.report.bound))
        return d


def graph_from_seed(k: int, spec: SampleSpaceSpec, seed: Seed) -> Graph:
    return Graph.from_edge_string(k, sample_string(spec, seed))


def _scan(k: int, bound: int, spec: SampleSpaceSpec, start: int, stop: int):
    """First passing seed value in [start, stop), or None."""
    nbits = spec.seed_bits
    for v in range(start, stop):
        seed = Seed(v, nbits)
        g = graph_from_seed(k, spec, seed)
        if verify_bounds(g, bound, "decision").passed:
            return v
    return None


def search_base_graph(k: int, bound: Optional[int] = None, spec: Optional[SampleSpaceSpec] = None,
                      cap: Optional[int] = None, workers: int = 1) -> SearchOutcome:
    """Lexicographically first seed whose graph has ω, α < bound.

    ``seeds_tried`` is the rank of the winning seed (1-based), which does not
    depend on ``workers``.
    """
    if bound is None:
        bound = default_bound(k)
    if bound < 2:
        raise ValueError("bound must be >= 2")
    if spec is None:
        spec = relaxed_spec(k)
    if spec.m != pair_count(k):
        raise ValueError(f"spec has m={spec.m}, a {k}-vertex graph needs {pair_count(k)}")
    total = 1 << spec.seed_bits
    end = total if cap is None else min(total, max(cap, 0))

    found = None
    if workers <= 1 or end <= CHUNK:
        found = _scan(k, bound, spec, 0, end)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            lo = 0
            while lo < end and found is None:
                starts = range(lo, min(end, lo + workers * CHUNK), CHUNK)
                futures = [pool.submit(_scan, k, bound, spec, s, min(s + CHUNK, end))
                           for s in starts]
                # the lowest chunk with a hit holds the lexicographic minimum
                for fut in futures:
                    hit = fut.result()
                    if hit is not None and found is None:
                        found = hit
                lo = starts[-1] + CHUNK
    if found is None:
        raise SearchExhausted(
            f"no seed among the first {end} gives ω, α < {bound} on {k} vertices", end
        )
    seed = Seed(found, spec.seed_bits)
    g = graph_from_seed(k, spec, seed)
    report = verify_bounds(g, bound, "decision")
    log.debug("seed %s passed after %d tries", seed.hex(), found + 1)
    return SearchOutcome(g, report, "enumeration", found + 1, seed=seed, spec=spec)


def estimator_value(scaled: int, bound: int) -> Fraction:
    """Expected monochromatic ``bound``-subsets given the scaled estimator."""
    return Fraction(scaled, 1 << math.comb(bound, 2))


def _weight(ones: int, zeros: int) -> int:
    # Pr[subset monochromatic | its fixed slots], in units of 2^-C(bound,2)
    if ones and zeros:
        return 0
    if ones:
        return 1 << ones
    if zeros:
        return 1 << zeros
    return 2


def initial_estimator(k: int, bound: int) -> Fraction:
    """C(k, bound) * 2^(1 - C(bound, 2)): expected monochromatic subsets in G(k, 1/2)."""
    return Fraction(math.comb(k, bound) * 2, 1 << math.comb(bound, 2))


def conditional_expectations_base_graph(k: int, bound: Optional[int] = None,
                                        max_incidences: int = MAX_INCIDENCES) -> SearchOutcome:
    if bound is None:
        bound = default_bound(k)
    if bound < 3:
        raise ParameterError(f"conditional expectations needs bound >= 3, got {bound}")
    start = initial_estimator(k, bound)
    if start >= 1:
        raise ParameterError(
            f"initial estimator C({k},{bound})*2^(1-C({bound},2)) = {start} >= 1; "
            f"no graph is certified for k={k}, bound={bound}",
            estimator=start,
        )
    e = math.comb(bound, 2)
    if math.comb(k, bound) * e > max_incidences:
        raise CapacityError(
            f"C({k},{bound}) subsets x {e} slots exceeds {max_incidences} incidences"
        )

    m = pair_count(k)
    subsets = list(combinations(range(k), bound))
    by_slot: list[list[int]] = [[] for _ in range(m)]
    for si, s in enumerate(subsets):
        for a, b in combinations(s, 2):
            by_slot[pair_index(a, b, k)].append(si)
    ones = [0] * len(subsets)
    zeros = [0] * len(subsets)

    scaled = 2 * len(subsets)
    trace = [scaled]
    bits = []
    for p in range(m):
        d1 = d0 = 0
        for si in by_slot[p]:
            o, z = ones[si], zeros[si]
            w = _weight(o, z)
            d1 += _weight(o + 1, z) - w
            d0 += _weight(o, z + 1) - w
        # the two children average to the parent, so the smaller never exceeds it
        bit = 1 if d1 < d0 else 0
        if bit:
            for si in by_slot[p]:
                ones[si] += 1
            scaled += d1
        else:
            for si in by_slot[p]:
                zeros[si] += 1
            scaled += d0
        if scaled > trace[-1]:
            raise AssertionError(f"estimator rose at slot {p}: {trace[-1]} -> {scaled}")
        trace.append(scaled)
        bits.append("1" if bit else "0")

    # every slot fixed: each subset weighs 0 or 2^e, and the total stayed below 2^e
    assert scaled == 0, scaled
    g = Graph.from_edge_string(k, "".join(bits))
    report = verify_bounds(g, bound, "decision")
    return SearchOutcome(g, report, "conditional-expectations", 0, estimator_trace=trace)


def prng_base_graph(k: int, bound: Optional[int] = None, seed: int = 0,
                    cap: Optional[int] = 10_000) -> SearchOutcome:
    """Seeded pseudorandom edge strings; quick, but not derandomized."""
    if bound is None:
        bound = default_bound(k)
    if bound < 2:
        raise ValueError("bound must be >= 2")
    rng = random.Random(seed)
    m = pair_count(k)
    tries = 0
    while cap is None or tries < cap:
        tries += 1
        bits = format(rng.getrandbits(m), f"0{m}b") if m else ""
        g = Graph.from_edge_string(k, bits)
        report = verify_bounds(g, bound, "decision")
        if report.passed:
            return SearchOutcome(g, report, "prng-fallback", tries)
    raise SearchExhausted(f"no PRNG draw among {tries} passed bound {bound}", tries)


def find_base_graph(k: int, bound: Optional[int] = None, method: str = "enumeration",
                    spec: Optional[SampleSpaceSpec] = None, cap: Optional[int] = None,
                    workers: int = 1, prng_seed: int = 0) -> SearchOutcome:
    if method == "enumeration":
        return search_base_graph(k, bound, spec, cap, workers)
    if method == "conditional-expectations":
        return conditional_expectations_base_graph(k, bound)
    if method == "prng-fallback":
        return prng_base_graph(k, bound, prng_seed, cap if cap is not None else 10_000)
    raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
