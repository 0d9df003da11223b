"""Brute-force reference implementations used as independent oracles.

Nothing here calls into the solver, product or generator code paths it is
used to check.
"""

import random
from itertools import combinations

from ramsey_abbott.graph import Graph


def random_graph(rng: random.Random, order: int, p: float = 0.5) -> Graph:
    edges = [(i, j) for i, j in combinations(range(order), 2) if rng.random() < p]
    return Graph.from_edges(order, edges)


def adjacency_sets(g: Graph) -> list[set]:
    return [set(g.neighbors(v)) for v in range(g.order)]


def naive_clique_number(g: Graph) -> int:
    """Largest s such that some s-subset is pairwise adjacent, by enumeration."""
    nbrs = adjacency_sets(g)
    best = 1
    for s in range(2, g.order + 1):
        if any(all(b in nbrs[a] for a, b in combinations(sub, 2))
               for sub in combinations(range(g.order), s)):
            best = s
        else:
            break
    return best


def naive_independence_number(g: Graph) -> int:
    nbrs = adjacency_sets(g)
    best = 1
    for s in range(2, g.order + 1):
        if any(all(b not in nbrs[a] for a, b in combinations(sub, 2))
               for sub in combinations(range(g.order), s)):
            best = s
        else:
            break
    return best


def naive_abbott_product(g: Graph, h: Graph) -> Graph:
    """Edge rule evaluated pair by pair on (u, v) tuples."""
    m = h.order
    verts = [(u, v) for u in range(g.order) for v in range(m)]
    edges = []
    for (a, (u, v)), (b, (u2, v2)) in combinations(enumerate(verts), 2):
        if g.has_edge(u, u2) or (u == u2 and h.has_edge(v, v2)):
            edges.append((a, b))
    return Graph.from_edges(len(verts), edges)


# GF(2) polynomials as coefficient lists, lowest degree first


def poly_from_int(a: int) -> list[int]:
    return [(a >> i) & 1 for i in range(max(a.bit_length(), 1))]


def poly_to_int(p: list[int]) -> int:
    return sum(c << i for i, c in enumerate(p))


def poly_mulmod(a: list[int], b: list[int], f: list[int]) -> list[int]:
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] ^= y
    df = len(f) - 1
    while df >= 0 and not f[df]:
        df -= 1
    for i in range(len(prod) - 1, df - 1, -1):
        if prod[i]:
            for j in range(df + 1):
                prod[i - df + j] ^= f[j]
    return prod[:df]


def powering_string(r: int, modulus: int, x: int, y: int, m: int) -> str:
    """Output i = <x^i, y> computed with list arithmetic."""
    f = poly_from_int(modulus)
    xp = poly_from_int(x)
    cur = [1]
    out = []
    for _ in range(m):
        cur_int = poly_to_int(cur)
        out.append(str(bin(cur_int & y).count("1") % 2))
        cur = poly_mulmod(cur, xp, f)
    return "".join(out)


def divides(d: int, f: int) -> bool:
    """Whether polynomial d divides f, by schoolbook long division on ints."""
    dd = d.bit_length() - 1
    while f.bit_length() - 1 >= dd and f:
        f ^= d << (f.bit_length() - 1 - dd)
    return f == 0


def irreducible_by_trial_division(f: int) -> bool:
    r = f.bit_length() - 1
    for d in range(2, 1 << (r // 2 + 1)):
        if 1 <= d.bit_length() - 1 <= r // 2 and divides(d, f):
            return False
    return r >= 1
