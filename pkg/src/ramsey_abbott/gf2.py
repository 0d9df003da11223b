"""Polynomials over GF(2) packed into Python ints, and the field GF(2^r).

Bit ``i`` of an int is the coefficient of ``x**i``.
"""

from __future__ import annotations

from functools import lru_cache


def degree(a: int) -> int:
    return a.bit_length() - 1


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2) polynomials."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    shift = 0
    while b:
        if b & 1:
            out ^= a << shift
        b >>= 1
        shift += 1
    return out


def square(a: int) -> int:
    # squaring in characteristic 2 just spreads the bits apart
    return int(bin(a)[2:].replace("", "0")[:-1] or "0", 2) if a else 0


def poly_mod(a: int, f: int) -> int:
    df = degree(f)
    if df < 0:
        raise ZeroDivisionError("polynomial modulus is zero")
    da = degree(a)
    while da >= df:
        a ^= f << (da - df)
        da = degree(a)
    return a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Ben-Or irreducibility test.

    ``f`` of degree ``r`` is irreducible iff gcd(x^(2^i) - x, f) = 1 for
    every i <= r/2.
    """
    r = degree(f)
    if r < 1:
        return False
    if r == 1:
        return True
    if not f & 1:
        return False
    power = 2  # x
    for _ in range(r // 2):
        power = poly_mod(square(power), f)
        if poly_gcd(f, power ^ 2) != 1:
            return False
    return True


def smallest_irreducible(r: int) -> int:
    """The numerically smallest irreducible polynomial of degree ``r``."""
    if r < 1:
        raise ValueError("degree must be positive")
    if r == 1:
        return 0b10
    f = (1 << r) | 1
    while not is_irreducible(f):
        f += 2
    return f


class GF2r:
    """The field GF(2^r) = GF(2)[x] / (modulus)."""

    def __init__(self, modulus: int):
        if not is_irreducible(modulus):
            raise ValueError(f"{modulus:#x} is not irreducible over GF(2)")
        self.modulus = modulus
        self.r = degree(modulus)

    def __repr__(self):
        return f"GF2r(r={self.r}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, GF2r) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    @property
    def size(self) -> int:
        return 1 << self.r

    def mul(self, a: int, b: int) -> int:
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def powers(self, a: int, count: int):
        """Yield a^0, a^1, ..., a^(count-1). Note 0^0 = 1."""
        cur = 1
        top = 1 << self.r
        mod = self.modulus
        for _ in range(count):
            yield cur
            # multiply by a one coefficient at a time, reducing as we go
            acc = 0
            b = a
            c = cur
            while b:
                if b & 1:
                    acc ^= c
                b >>= 1
                c <<= 1
                if c & top:
                    c ^= mod
            cur = acc


@lru_cache(maxsize=None)
def field(r: int) -> GF2r:
    """GF(2^r) built on the frozen table polynomial for degree ``r``."""
    from ._irreducible import IRREDUCIBLE

    try:
        return GF2r(IRREDUCIBLE[r])
    except KeyError:
        raise ValueError(
            f"no frozen irreducible polynomial for r={r} (max {max(IRREDUCIBLE)})"
        ) from None
