"""End-to-end construction: (n, epsilon) -> n-vertex graph with small ω and α.

Parameters follow k = 2^(c sqrt(log n)) and l = sqrt(log n) / c, made integral
by fixing l first (ceiling), taking the least k with k^l >= n, and cutting
the power down to its first n vertices. Induced subgraphs cannot raise ω or
α, so the truncation keeps the guarantee. Logs are base 2.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple, Optional, Union

from . import __version__
from .abbott import abbott_power
from .errors import ParameterError
from .extremal import VerificationReport, verify_bounds
from .graph import DEFAULT_MAX_BITS, Graph, check_capacity
from .sample_space import SampleSpaceSpec, ceil_log2, derive_spec, relaxed_spec
from .search import SearchOutcome, default_bound, find_base_graph

MIN_N = 16
MAX_C = 1 << 20


def exponent_constant(c: float) -> float:
    """(log2 c + 2) / (2c), the coefficient of log log n * sqrt(log n) in the final bound."""
    return (math.log2(c) + 2) / (2 * c)


def choose_c(epsilon: float) -> int:
    """Smallest integer c >= 2 with exponent_constant(c) < epsilon."""
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if exponent_constant(MAX_C) >= epsilon:
        raise ParameterError(f"epsilon={epsilon} would need c > {MAX_C}")
    # exponent_constant is decreasing for c >= 1
    lo, hi = 2, MAX_C
    while lo < hi:
        mid = (lo + hi) // 2
        if exponent_constant(mid) < epsilon:
            hi = mid
        else:
            lo = mid + 1
    return lo


def integer_root_ceil(n: int, l: int) -> int:
    """Least k with k**l >= n."""
    k = max(1, round(n ** (1.0 / l)))
    while k**l < n:
        k += 1
    while k > 1 and (k - 1) ** l >= n:
        k -= 1
    return k


def target_bound(n: int, epsilon: float) -> int:
    """ceil(2^(epsilon * sqrt(log n) * log log n))."""
    ln = math.log2(n)
    return math.ceil(2 ** (epsilon * math.sqrt(ln) * math.log2(ln)))


@dataclass(frozen=True)
class ConstructionParams:
    n: int
    epsilon: float
    c: int
    k: int
    l: int
    base_bound: int
    final_bound: int
    target_bound: int
    overrides: tuple[str, ...] = ()

    @property
    def product_order(self) -> int:
        return self.k**self.l

    @property
    def max_omega(self) -> int:
        """ω and α of the output are at most this."""
        return (self.base_bound - 1) ** self.l

    def to_dict(self) -> dict:
        d = asdict(self)
        d["overrides"] = list(self.overrides)
        d["product_order"] = self.product_order
        d["max_omega"] = self.max_omega
        return d


def select_params(n: int, epsilon: float, *, k: Optional[int] = None, l: Optional[int] = None,
                  base_bound: Optional[int] = None) -> ConstructionParams:
    if n < MIN_N:
        raise ValueError(f"n must be >= {MIN_N}, got {n}")
    c = choose_c(epsilon)
    overrides = []
    if l is None:
        l = max(1, math.ceil(math.sqrt(math.log2(n)) / c))
    else:
        if l < 1:
            raise ValueError("l must be >= 1")
        overrides.append("l")
    if k is None:
        k = max(4, integer_root_ceil(n, l))
    else:
        if k < 2:
            raise ValueError("k must be >= 2")
        if k**l < n:
            raise ValueError(f"k^l = {k}^{l} = {k**l} is smaller than n = {n}")
        overrides.append("k")
    if base_bound is None:
        base_bound = default_bound(k)
    else:
        if base_bound < 2:
            raise ValueError("base bound must be >= 2")
        overrides.append("base_bound")
    return ConstructionParams(
        n=n,
        epsilon=epsilon,
        c=c,
        k=k,
        l=l,
        base_bound=base_bound,
        final_bound=base_bound**l,
        target_bound=target_bound(n, epsilon),
        overrides=tuple(overrides),
    )


@dataclass(frozen=True)
class BoundReport:
    guaranteed: int
    target: int
    implies_target: bool

    @property
    def status(self) -> str:
        if self.implies_target:
            return "guarantee implies target"
        return "asymptotic guarantee not yet binding"

    def to_dict(self) -> dict:
        return {
            "guaranteed": self.guaranteed,
            "target": self.target,
            "implies_target": self.implies_target,
            "status": self.status,
        }


def guaranteed_bound(params: ConstructionParams) -> BoundReport:
    """Strict bound base_bound^l on ω and α, set against the asymptotic target.

    The target ceil(2^(eps sqrt(log n) log log n)) is only reached for n large
    relative to c, so at desk scale the guarantee usually exceeds it.
    """
    g = params.base_bound**params.l
    return BoundReport(guaranteed=g, target=params.target_bound,
                       implies_target=g <= params.target_bound)


class Construction(NamedTuple):
    graph: Graph
    params: ConstructionParams
    outcome: SearchOutcome


def resolve_spec(spec: Union[str, SampleSpaceSpec, None], k: int) -> SampleSpaceSpec:
    if spec is None or spec == "relaxed":
        return relaxed_spec(k)
    if spec == "faithful":
        return derive_spec(k)
    if isinstance(spec, SampleSpaceSpec):
        return spec
    raise ValueError(f"unknown sample-space spec {spec!r}")


def construct_ramsey(n: int, epsilon: float, *, k: Optional[int] = None, l: Optional[int] = None,
                     base_bound: Optional[int] = None, method: str = "enumeration",
                     spec: Union[str, SampleSpaceSpec, None] = "relaxed", cap: Optional[int] = None,
                     workers: int = 1, max_bits: int = DEFAULT_MAX_BITS) -> Construction:
    params = select_params(n, epsilon, k=k, l=l, base_bound=base_bound)
    check_capacity(params.product_order, max_bits)
    space = resolve_spec(spec, params.k) if method == "enumeration" else None
    outcome = find_base_graph(params.k, params.base_bound, method, space, cap, workers)
    h = abbott_power(outcome.graph, params.l, max_bits=max_bits)
    if h.order > n:
        h = h.induced_subgraph(range(n))
    return Construction(h, params, outcome)


def verify_construction(result: Construction, mode: str = "exact") -> VerificationReport:
    """Check the output against ω, α <= (base_bound - 1)^l."""
    return verify_bounds(result.graph, result.params.max_omega + 1, mode)


def provenance(result: Construction, fmt: str, verification: Optional[VerificationReport] = None,
               verify_mode: str = "none") -> dict:
    params = result.params
    return {
        "tool": "ramsey-abbott",
        "version": __version__,
        "n": result.graph.order,
        "format": fmt,
        "params": params.to_dict(),
        "bounds": guaranteed_bound(params).to_dict(),
        "base_graph": result.outcome.to_dict(),
        "verify_mode": verify_mode,
        "verification": None if verification is None else verification.to_dict(),
    }
