"""Constructors for the G, H and M families of (d,m)-edge equitable designs.

All three are recursive compositions over the hypercube dimension:

* G starts from the star 1 + sum(X_i) at m=1 and doubles/splits m;
* H replaces the m=1 start with hand-built m=2 and m=3 designs, which
  propagates smaller sizes up the same recursion;
* M tiles (c-1) copies of the smallest possible H block plus one wider
  H block over disjoint coordinate ranges, all sharing the origin vertex.

Closed-form size predictions are provided separately from the constructions
so tests can confront the two.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from .poly import DesignPoly, mono_from_vars

FAMILIES = ("G", "H", "M", "path")


@dataclass(frozen=True)
class LeafDecomposition:
    """Counts of the size-2 and size-3 base blocks in the recursive splitting of m."""

    p2: int
    p3: int
    kappa: int
    i_offset: int


@dataclass(frozen=True)
class SizePrediction:
    """Closed-form size c + alpha*d of an H design, kept as exact rationals."""

    value: int
    alpha: Fraction
    c_term: Fraction


def _check_dm(d: int, m: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if not 1 <= m <= 1 << (d - 1):
        raise ValueError(f"multiplicity must satisfy 1 <= m <= 2^(d-1) = {1 << (d - 1)}, got {m}")


def gen_path(d: int) -> DesignPoly:
    """Staircase OAT path: 1, X1, X1X2, ..., X1...Xd.  (d,1)-equitable, size d+1."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return DesignPoly.of(d, ((1 << k) - 1 for k in range(d + 1)))


def _double(inner: DesignPoly, d: int) -> DesignPoly:
    """(1 + X1 Xd) * inner, lifting inner from dimension d-1 to d."""
    lifted = DesignPoly(d, inner.terms)
    x1xd = mono_from_vars(1, d)
    return lifted.union_disjoint(lifted.mirror(x1xd))


def _split(lo: DesignPoly, hi: DesignPoly, d: int) -> DesignPoly:
    """lo + X1 Xd * hi, lifting both from dimension d-1 to d."""
    x1xd = mono_from_vars(1, d)
    return DesignPoly(d, lo.terms).union_disjoint(DesignPoly(d, hi.terms).mirror(x1xd))


@lru_cache(maxsize=None)
def gen_G(d: int, m: int) -> DesignPoly:
    """The basic recursive family: (d,m)-edge equitable for every 1 <= m <= 2^(d-1)."""
    _check_dm(d, m)
    if m == 1:
        return DesignPoly.of(d, [0] + [1 << i for i in range(d)])
    if m % 2 == 0:
        return _double(gen_G(d - 1, m // 2), d)
    return _split(gen_G(d - 1, (m - 1) // 2), gen_G(d - 1, (m + 1) // 2), d)


def predicted_size_G(d: int, m: int) -> int:
    """|G| = m(d - kappa) + 2^(kappa+1) - m with kappa = floor(log2 m)."""
    _check_dm(d, m)
    kappa = m.bit_length() - 1
    return m * (d - kappa) + (1 << (kappa + 1)) - m


@lru_cache(maxsize=None)
def _gen_H2(d: int) -> DesignPoly:
    if d == 2:
        return DesignPoly.of(2, [0b00, 0b01, 0b10, 0b11])
    if d % 2 == 0:
        prev = DesignPoly(d, _gen_H2(d - 2).terms)
        extra = DesignPoly.of(d, [mono_from_vars(d - 1), mono_from_vars(d),
                                  mono_from_vars(d - 1, d)])
    else:
        prev = DesignPoly(d, _gen_H2(d - 1).terms)
        extra = DesignPoly.of(d, [mono_from_vars(1, d), mono_from_vars(d - 1, d)])
    return prev.union_disjoint(extra)


def _gen_H3(d: int) -> DesignPoly:
    if d < 3:
        raise ValueError(f"the m=3 base design needs d >= 3, got {d}")
    terms = [0, mono_from_vars(1, d)]
    terms += [mono_from_vars(k) for k in range(1, d + 1)]
    terms += [mono_from_vars(j, j + 1) for j in range(1, d)]
    return DesignPoly.of(d, terms)


@lru_cache(maxsize=None)
def gen_H(d: int, m: int) -> DesignPoly:
    """The improved-initialisation family, defined for 2 <= m <= 2^(d-1)."""
    if m < 2:
        raise ValueError(f"H family starts at m=2, got m={m}")
    _check_dm(d, m)
    if m == 2:
        return _gen_H2(d)
    if m == 3:
        return _gen_H3(d)
    if m % 2 == 0:
        return _double(gen_H(d - 1, m // 2), d)
    return _split(gen_H(d - 1, (m - 1) // 2), gen_H(d - 1, (m + 1) // 2), d)


def leaf_counts(m: int) -> LeafDecomposition:
    """How many size-2 and size-3 base blocks the recursion for H (m >= 2) bottoms out in."""
    if m < 2:
        raise ValueError(f"leaf decomposition needs m >= 2, got {m}")
    kappa = m.bit_length() - 1
    i = m - (1 << kappa) - (1 << (kappa - 1))
    p2 = 2 * i if i >= 0 else -i
    p3 = (1 << (kappa - 1)) - abs(i)
    return LeafDecomposition(p2=p2, p3=p3, kappa=kappa, i_offset=i)


def alpha_h(m: int) -> Fraction:
    """Slope of the linear-in-d size of H designs."""
    lc = leaf_counts(m)
    if lc.i_offset >= 0:
        return Fraction(m - (1 << (lc.kappa - 1)))
    return Fraction(m + (1 << (lc.kappa - 1)), 2)


def predicted_size_H(d: int, m: int) -> SizePrediction:
    """Closed form |H| = c(m) + alpha(m) d; c depends on the parity of d - kappa."""
    if m < 2:
        raise ValueError(f"H family starts at m=2, got m={m}")
    _check_dm(d, m)
    lc = leaf_counts(m)
    kappa, i = lc.kappa, lc.i_offset
    eps = 1 if (d - kappa) % 2 == 0 else -1
    alpha = alpha_h(m)
    if i >= 0:
        c = -m * Fraction(eps + 1, 2) - m * kappa + Fraction(3 * eps + 2 * kappa + 9, 4) * (1 << kappa)
    else:
        c = -Fraction(m, 2) * (Fraction(eps - 1, 2) + kappa) - Fraction(-3 * eps + 2 * kappa - 9, 8) * (1 << kappa)
    value = c + alpha * d
    if value.denominator != 1:
        raise ValueError(
            f"size formula gives non-integer {value} at (d={d}, m={m}); outside its validity"
        )
    return SizePrediction(value=int(value), alpha=alpha, c_term=c)


def q_min(m: int) -> int:
    """Smallest q such that Q_q admits m edges per direction: ceil(log2 m) + 1."""
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    return (m - 1).bit_length() + 1


def _m_decomposition(d: int, m: int) -> Tuple[int, int, int]:
    """d = (c-1) q + t with q = q_min(m) and t in [q, 2q-1]; returns (q, c-1, t)."""
    q = q_min(m)
    if d < 2 * q:
        raise ValueError(f"M family requires d >= 2*q_min(m) = {2 * q}, got d={d}")
    blocks, rem = divmod(d, q)
    return q, blocks - 1, q + rem


def gen_M(d: int, m: int) -> DesignPoly:
    """Factored family: shifted H blocks over disjoint coordinate ranges sharing the origin."""
    if m < 1:
        raise ValueError(f"multiplicity must be >= 1, got {m}")
    q, copies, t = _m_decomposition(d, m)
    if m == 1:
        block, tail = gen_path(q), gen_path(t)
    else:
        block, tail = gen_H(q, m), gen_H(t, m)
    design = DesignPoly.of(d, [0])
    for j in range(copies):
        design = design.merge_shared_origin(block.shift(j * q, d))
    return design.merge_shared_origin(tail.shift(copies * q, d))


def predicted_size_M(d: int, m: int) -> int:
    """Shared-origin size accounting: 1 + (c-1)(|block|-1) + (|tail|-1)."""
    q, copies, t = _m_decomposition(d, m)
    if m == 1:
        block_size, tail_size = q + 1, t + 1
    else:
        block_size = predicted_size_H(q, m).value
        tail_size = predicted_size_H(t, m).value
    return 1 + copies * (block_size - 1) + (tail_size - 1)


def economy(design: DesignPoly, m: Optional[int] = None) -> Fraction:
    return design.economy(m)


def economy_limits(m: int):
    """Large-d economy limits: (G limit, (H limit, H bounds), M bounds)."""
    limit_g = Fraction(1)
    if m < 2:
        return limit_g, None, None
    limit_h = Fraction(m) / alpha_h(m)
    h_bounds = (Fraction(4, 3), Fraction(3, 2))
    m_bounds = (Fraction(m * m, 2 * m - 1), Fraction(m * m, m - 1))
    return limit_g, (limit_h, h_bounds), m_bounds


ORACLE_MAX_DIM = 4


def min_size_oracle(d: int, m: int) -> Tuple[int, DesignPoly]:
    """Exhaustive search for the smallest (d,m)-edge equitable subgraph of Q_d.

    Enumerates vertex subsets in increasing size, so the first hit is minimal.
    Only feasible for tiny d; hard-capped at d <= 4 (at most 2^16 subsets).
    """
    _check_dm(d, m)
    if d > ORACLE_MAX_DIM:
        raise ValueError(f"exhaustive oracle is capped at d <= {ORACLE_MAX_DIM}, got {d}")
    vertices = range(1 << d)
    for size in range(1, (1 << d) + 1):
        for subset in itertools.combinations(vertices, size):
            chosen = set(subset)
            ok = True
            for i in range(d):
                bit = 1 << i
                count = sum(1 for v in subset if not v & bit and v | bit in chosen)
                if count != m:
                    ok = False
                    break
            if ok:
                return size, DesignPoly.of(d, subset)
    raise AssertionError("unreachable: the full hypercube is always equitable")


def generate(family: str, d: int, m: int) -> DesignPoly:
    """Dispatch on family name; 'path' ignores m (always 1)."""
    if family == "G":
        return gen_G(d, m)
    if family == "H":
        return gen_H(d, m)
    if family == "M":
        return gen_M(d, m)
    if family == "path":
        if m != 1:
            raise ValueError("the path family is only defined for m=1")
        return gen_path(d)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def predicted_size(family: str, d: int, m: int) -> int:
    if family == "G":
        return predicted_size_G(d, m)
    if family == "H":
        return predicted_size_H(d, m).value
    if family == "M":
        return predicted_size_M(d, m)
    if family == "path":
        return d + 1
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
