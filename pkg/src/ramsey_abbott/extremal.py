"""Exact clique and independence numbers, and the bounded decision check.

The exact solver first splits the graph by modular decomposition (components,
co-components, maximal strong modules), which is exact for ω and collapses
the block structure of Abbott products. What is left at each prime node goes
to a branch-and-bound over candidate bitsets in the style of Tomita's MCQ:
candidates are greedily coloured and a branch is cut once
``|current| + colours(candidates)`` cannot beat the incumbent. Vertices are
branched in descending-degree order, ties by index.

The decision check ``find_clique`` returns the lexicographically smallest
clique of the requested size. ``max_clique`` witnesses are deterministic for a
given graph but not lexicographically minimal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, is_clique
from .modular import bits, co_components, components, prime_modules


@dataclass(frozen=True)
class CliqueWitness:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise ValueError("witness vertices must be strictly increasing")
        object.__setattr__(self, "vertices", vs)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def validate(self, g: Graph) -> bool:
        """True iff every vertex is in range and every pair is adjacent in ``g``."""
        return all(0 <= v < g.order for v in self.vertices) and is_clique(g, self.vertices)

    def to_list(self) -> list[int]:
        return list(self.vertices)


@dataclass(frozen=True)
class VerificationReport:
    omega: int
    alpha: int
    omega_witness: CliqueWitness
    alpha_witness: CliqueWitness
    bound: int
    passed: bool
    mode: str = "exact"
    # in decision mode omega/alpha are only lower bounds
    exact: bool = True
    extra: dict = field(default_factory=dict, compare=False)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "exact": self.exact,
            "bound": self.bound,
            "passed": self.passed,
            "omega": self.omega,
            "alpha": self.alpha,
            "omega_witness": self.omega_witness.to_list(),
            "alpha_witness": self.alpha_witness.to_list(),
        }


def _color_classes(p: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the candidate bitset ``p``.

    Returns vertices and their colours, with colours non-decreasing.
    """
    order: list[int] = []
    colors: list[int] = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            q &= ~adj[v]
            q ^= low
            p ^= low
            order.append(v)
            colors.append(color)
    return order, colors


def _color_bound(p: int, adj: list[int], stop: int) -> int:
    """Number of greedy colour classes of ``p``, counting no further than ``stop``."""
    color = 0
    while p and color < stop:
        color += 1
        q = p
        while q:
            low = q & -q
            q &= ~adj[low.bit_length() - 1]
            q ^= low
            p ^= low
    return color


def _bnb(vertices: list[int], adj: list[int]) -> list[int]:
    """Maximum clique of the subgraph induced on ``vertices`` by colour-bounded B&B."""
    if len(vertices) == 1:
        return list(vertices)
    mask = sum(1 << v for v in vertices)
    order = sorted(vertices, key=lambda v: (-(adj[v] & mask).bit_count(), v))
    pos = {v: i for i, v in enumerate(order)}
    local = []
    for v in order:
        row = adj[v] & mask
        new = 0
        while row:
            low = row & -row
            new |= 1 << pos[low.bit_length() - 1]
            row ^= low
        local.append(new)

    best: list[int] = [0]
    path: list[int] = []

    def expand(p: int) -> None:
        nonlocal best
        verts, colors = _color_classes(p, local)
        size = len(path)
        for i in range(len(verts) - 1, -1, -1):
            if size + colors[i] <= len(best):
                return
            v = verts[i]
            path.append(v)
            newp = p & local[v]
            if newp:
                expand(newp)
            elif len(path) > len(best):
                best = path[:]
            path.pop()
            p &= ~(1 << v)

    expand((1 << len(order)) - 1)
    return sorted(order[i] for i in best)


def _weighted_bnb(adj: list[int], weight: list[int]) -> list[int]:
    """Maximum-weight clique; the bound sums the heaviest vertex of each colour class."""
    best: list[int] = []
    best_w = 0
    path: list[int] = []

    def expand(p: int, w: int) -> None:
        nonlocal best, best_w
        verts, colors = _color_classes(p, adj)
        ub = []
        done = 0
        cls_max = 0
        prev = 0
        for v, c in zip(verts, colors):
            if c != prev:
                done += cls_max
                cls_max = 0
                prev = c
            cls_max = max(cls_max, weight[v])
            ub.append(done + cls_max)
        for i in range(len(verts) - 1, -1, -1):
            if w + ub[i] <= best_w:
                return
            v = verts[i]
            path.append(v)
            nw = w + weight[v]
            if nw > best_w:
                best, best_w = path[:], nw
            newp = p & adj[v]
            if newp:
                expand(newp, nw)
            path.pop()
            p &= ~(1 << v)

    expand((1 << len(adj)) - 1, 0)
    return sorted(best)


def _solve(mask: int, adj: list[int]) -> list[int]:
    """Maximum clique of G[mask] via modular decomposition, B&B at prime nodes."""
    if mask & (mask - 1) == 0:
        return [mask.bit_length() - 1]
    comps = components(mask, adj)
    if len(comps) > 1:
        best: list[int] = []
        for c in comps:
            w = _solve(c, adj)
            if len(w) > len(best):
                best = w
        return best
    cocomps = co_components(mask, adj)
    if len(cocomps) > 1:
        return sorted(v for c in cocomps for v in _solve(c, adj))
    modules = prime_modules(mask, adj)
    if all(m & (m - 1) == 0 for m in modules):
        return _bnb(bits(mask), adj)
    reps = [(m & -m).bit_length() - 1 for m in modules]
    quotient = [sum(1 << j for j, r in enumerate(reps) if adj[v] >> r & 1) for v in reps]
    inner = [_solve(m, adj) for m in modules]
    chosen = _weighted_bnb(quotient, [len(w) for w in inner])
    return sorted(v for i in chosen for v in inner[i])


def max_clique_bnb(g: Graph) -> CliqueWitness:
    """Plain branch-and-bound on the whole graph, no decomposition."""
    return CliqueWitness(tuple(_bnb(list(range(g.order)), list(g.rows))))


def clique_number(g: Graph) -> int:
    return max_clique(g).size


def find_clique(g: Graph, t: int) -> Optional[CliqueWitness]:
    """Lexicographically smallest t-clique of ``g``, or None if there is none.

    Depth-first over increasing vertex sequences; a branch is dropped when the
    greedy colouring of its candidates shows fewer than the missing count.
    """
    if t < 1:
        raise ValueError("clique size must be >= 1")
    if t > g.order:
        return None
    adj = list(g.rows)
    path: list[int] = []

    def dfs(p: int) -> bool:
        need = t - len(path)
        if need == 0:
            return True
        while p:
            if p.bit_count() < need or _color_bound(p, adj, need) < need:
                return False
            low = p & -p
            v = low.bit_length() - 1
            p ^= low
            path.append(v)
            # p now holds only vertices above v
            if dfs(p & adj[v]):
                return True
            path.pop()
        return False

    if dfs((1 << g.order) - 1):
        return CliqueWitness(tuple(path))
    return None


def has_clique_of_size(g: Graph, t: int) -> tuple[bool, Optional[CliqueWitness]]:
    w = find_clique(g, t)
    return w is not None, w


def max_clique(g: Graph) -> CliqueWitness:
    """A maximum clique of ``g``; deterministic for a given graph."""
    return CliqueWitness(tuple(_solve((1 << g.order) - 1, list(g.rows))))


def max_independent_set(g: Graph) -> CliqueWitness:
    return max_clique(g.complement())


def greedy_clique(g: Graph) -> CliqueWitness:
    """A maximal clique grown by repeatedly taking the best-connected candidate."""
    adj = g.rows
    p = (1 << g.order) - 1
    chosen = []
    while p:
        best_v, best_deg = -1, -1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            d = (adj[v] & p).bit_count()
            if d > best_deg:
                best_v, best_deg = v, d
            q ^= low
        chosen.append(best_v)
        p &= adj[best_v]
    return CliqueWitness(tuple(sorted(chosen)))


def verify_bounds(g: Graph, bound: int, mode: str = "exact") -> VerificationReport:
    """Check ω(g) < bound and α(g) < bound.

    ``exact`` computes both numbers. ``decision`` only asks whether a
    ``bound``-clique exists in g or its complement; the reported omega/alpha are
    then the largest cliques seen (lower bounds) and ``exact`` is False.
    """
    if bound < 2:
        raise ValueError("bound must be >= 2")
    comp = g.complement()
    if mode == "exact":
        wo = max_clique(g)
        wa = max_clique(comp)
        return VerificationReport(
            omega=wo.size,
            alpha=wa.size,
            omega_witness=wo,
            alpha_witness=wa,
            bound=bound,
            passed=wo.size < bound and wa.size < bound,
        )
    if mode != "decision":
        raise ValueError(f"unknown verification mode {mode!r}")
    wo = find_clique(g, bound)
    # no need to look at the complement once g has failed
    wa = find_clique(comp, bound) if wo is None else None
    failed = wo is not None or wa is not None
    wo = wo or greedy_clique(g)
    wa = wa or greedy_clique(comp)
    return VerificationReport(
        omega=wo.size,
        alpha=wa.size,
        omega_witness=wo,
        alpha_witness=wa,
        bound=bound,
        passed=not failed,
        mode="decision",
        exact=False,
    )
