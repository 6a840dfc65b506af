"""Shared brute-force oracles and hypothesis strategies for the test suite."""
import itertools

from hypothesis import strategies as st

from eqdesign.poly import DesignPoly


def brute_edge_profile(design):
    """Count direction-i edges by scanning all unordered vertex pairs."""
    counts = [0] * design.dim
    terms = sorted(design.terms)
    for a, b in itertools.combinations(terms, 2):
        diff = a ^ b
        if diff.bit_count() == 1:
            counts[diff.bit_length() - 1] += 1
    return tuple(counts)


def brute_direction_pairs(vertices, direction):
    """Unordered direction-i vertex pairs, found by adjacency scan of the list."""
    bit = 1 << (direction - 1)
    vs = set(vertices)
    return {(v, v | bit) for v in vs if not v & bit and v | bit in vs}


@st.composite
def design_polys(draw, min_dim=1, max_dim=8, min_size=0):
    d = draw(st.integers(min_dim, max_dim))
    terms = draw(st.sets(st.integers(0, (1 << d) - 1), min_size=min_size,
                         max_size=min(1 << d, 40)))
    return DesignPoly.of(d, terms)


@st.composite
def monomials_in(draw, dim):
    return draw(st.integers(0, (1 << dim) - 1))


@st.composite
def permutations_of(draw, dim):
    return tuple(p + 1 for p in draw(st.permutations(range(dim))))
