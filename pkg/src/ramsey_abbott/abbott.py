"""Abbott (lexicographic) product and powers.

In ``g ⊗ h`` the vertex (u, v) gets index ``u * h.order + v`` and
(u, v) ~ (u', v') iff u ~ u' in g, or u == u' and v ~ v' in h. That is the
same as replacing each vertex of g by a copy of h and joining two copies
completely when their g-vertices are adjacent.

The vertex set is V_g × V_h. The source text writes "V_H × V_H", which
contradicts its own description and the order count, so it is read as a typo.
"""

from __future__ import annotations

from .graph import DEFAULT_MAX_BITS, Graph, check_capacity


def _blow_up(row: int, width: int) -> int:
    """Replace every set bit j of ``row`` by a run of ``width`` ones at j*width."""
    block = (1 << width) - 1
    out = 0
    while row:
        low = row & -row
        out |= block << ((low.bit_length() - 1) * width)
        row ^= low
    return out


def abbott_product(g: Graph, h: Graph, *, max_bits: int = DEFAULT_MAX_BITS) -> Graph:
    n = g.order * h.order
    check_capacity(n, max_bits)
    m = h.order
    rows = []
    for u in range(g.order):
        outer = _blow_up(g.rows[u], m)
        for v in range(m):
            rows.append(outer | (h.rows[v] << (u * m)))
    return Graph(n, rows, validate=False)


def abbott_power(g: Graph, l: int, *, max_bits: int = DEFAULT_MAX_BITS) -> Graph:
    """The l-fold product g ⊗ g ⊗ ... ⊗ g, folded from the left.

    Vertex index = the l-tuple written in base ``g.order``, first coordinate
    most significant. Two tuples are adjacent iff their first differing
    coordinates are adjacent in g, so each row is assembled level by level
    without materialising the intermediate powers.
    """
    if l < 1:
        raise ValueError(f"power must be >= 1, got {l}")
    k = g.order
    n = k**l
    check_capacity(n, max_bits)
    if l == 1:
        return g
    # level i (0 = most significant): a coordinate block spans k**(l-1-i) vertices
    spans = [k ** (l - 1 - i) for i in range(l)]
    blown = [[_blow_up(g.rows[u], span) for u in range(k)] for span in spans]
    rows = []
    for a in range(n):
        row = 0
        prefix = 0
        rest = a
        for i, span in enumerate(spans):
            u, rest = divmod(rest, span)
            # vertices sharing coordinates 0..i-1 with a start at prefix * k * span
            row |= blown[i][u] << (prefix * k * span)
            prefix = prefix * k + u
        rows.append(row)
    return Graph(n, rows, validate=False)


def abbott_power_folded(g: Graph, l: int, *, max_bits: int = DEFAULT_MAX_BITS) -> Graph:
    """Reference path: repeated materialised products."""
    if l < 1:
        raise ValueError(f"power must be >= 1, got {l}")
    check_capacity(g.order**l, max_bits)
    out = g
    for _ in range(l - 1):
        out = abbott_product(out, g, max_bits=max_bits)
    return out
