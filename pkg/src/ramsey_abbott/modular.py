"""Modular decomposition on bitset graphs.

A module is a vertex set M such that every vertex outside M sees either all
of M or none of it. Clique numbers decompose over modules: a disconnected
graph takes the max over its components, a disconnected complement takes the
sum over co-components, and otherwise (a prime node) the maximal strong
modules partition the vertices and ω is a weighted clique number of the
quotient, weighting each module by its own ω.

Everything here works on sub-bitsets ``mask`` of one adjacency list ``adj``.
"""

from __future__ import annotations


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def components(mask: int, adj: list[int]) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitsets."""
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            f = frontier & -frontier
            frontier ^= f
            new = adj[f.bit_length() - 1] & rest & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def co_components(mask: int, adj: list[int]) -> list[int]:
    """Components of the complement of the subgraph induced on ``mask``."""
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            f = frontier & -frontier
            frontier ^= f
            new = rest & ~adj[f.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        rest &= ~comp
    return out


def is_module(s: int, mask: int, adj: list[int]) -> bool:
    for x in bits(mask & ~s):
        a = adj[x] & s
        if a and a != s:
            return False
    return True


def module_closure(s: int, mask: int, adj: list[int]) -> int:
    """Smallest module of G[mask] containing ``s``."""
    while True:
        split = 0
        for x in bits(mask & ~s):
            a = adj[x] & s
            if a and a != s:
                split |= 1 << x
        if not split:
            return s
        s |= split
        if s == mask:
            return s


def maximal_modules_avoiding(v: int, mask: int, adj: list[int]) -> list[int]:
    """Partition of mask - {v} into the maximal modules of G[mask] that avoid v.

    Partition refinement: start from N(v) and its complement, then let every
    vertex split each part it sees partially, until nothing changes.
    """
    vb = 1 << v
    parts = [p for p in (adj[v] & mask, mask & ~adj[v] & ~vb) if p]
    changed = True
    while changed:
        changed = False
        for x in bits(mask):
            xb = 1 << x
            nx = adj[x]
            new_parts = []
            for p in parts:
                if p & xb:
                    new_parts.append(p)
                    continue
                a = p & nx
                if a and a != p:
                    new_parts.append(a)
                    new_parts.append(p ^ a)
                    changed = True
                else:
                    new_parts.append(p)
            parts = new_parts
    return parts


def prime_modules(mask: int, adj: list[int]) -> list[int]:
    """Maximal strong modules of G[mask] when both it and its complement are connected.

    They partition ``mask``; the first one returned contains the lowest vertex.
    """
    v = (mask & -mask).bit_length() - 1
    vb = 1 << v
    parts = maximal_modules_avoiding(v, mask, adj)
    # find a vertex w outside v's maximal module: {v, w} then generates everything
    outside = None
    for p in parts:
        w = (p & -p).bit_length() - 1
        if module_closure(vb | (1 << w), mask, adj) == mask:
            outside = w
            break
    assert outside is not None, "graph is not prime at this node"
    # v's maximal module is its part in the partition avoiding w
    home = next(p for p in maximal_modules_avoiding(outside, mask, adj) if p & vb)
    others = [p for p in parts if not p & home]
    return [home] + others
