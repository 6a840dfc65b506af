"""0/1 polynomials modulo X_i^2 = 1, representing subgraphs of the hypercube Q_d.

A vertex of Q_d is a monomial, stored as an integer bitmask (bit i set means
variable X_{i+1} is present).  A subgraph is the formal sum of its vertex
monomials with coefficients in {0,1}, stored as a set of bitmasks.  Products
of monomials are XORs of bitmasks, and the scalar product making the monomial
basis orthonormal turns several graph quantities (size, per-direction edge
counts) into one-line computations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

MAX_DIM = 62

# complement() materialises all 2^d vertices; refuse dimensions where that
# would allocate hundreds of millions of ints
MAX_ENUM_DIM = 26


class DimensionMismatch(ValueError):
    """Operands live in different ambient dimensions."""


def check_dim(dim: int) -> None:
    if not isinstance(dim, int) or not 1 <= dim <= MAX_DIM:
        raise ValueError(f"ambient dimension must be in [1, {MAX_DIM}], got {dim!r}")


def check_monomial(mono: int, dim: int) -> None:
    if mono < 0 or mono >> dim:
        raise ValueError(f"monomial {mono:#x} uses variables beyond dimension {dim}")


def mono_mul(a: int, b: int, dim: Optional[int] = None) -> int:
    """Product of two monomials: symmetric difference of their exponent sets."""
    if dim is not None:
        check_monomial(a, dim)
        check_monomial(b, dim)
    return a ^ b


def mono_from_vars(*indices: int) -> int:
    """Monomial with the given 1-based variable indices, e.g. mono_from_vars(1, 3) = X1*X3."""
    mono = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"variable indices are 1-based, got {i}")
        mono |= 1 << (i - 1)
    return mono


def mono_str(mono: int, dim: int) -> str:
    """Binary-word form, leftmost character = exponent of X_1."""
    check_monomial(mono, dim)
    return "".join("1" if (mono >> i) & 1 else "0" for i in range(dim))


def mono_parse(word: str) -> int:
    if not word or any(c not in "01" for c in word):
        raise ValueError(f"not a binary word: {word!r}")
    return sum(1 << i for i, c in enumerate(word) if c == "1")


def mono_name(mono: int) -> str:
    """Human-readable form, e.g. 'X1X3'; the constant monomial is '1'."""
    if mono == 0:
        return "1"
    return "".join(f"X{i + 1}" for i in range(mono.bit_length()) if (mono >> i) & 1)


def grlex_key(mono: int):
    """Graded-lexicographic sort key: total degree, then bit pattern as integer."""
    return (mono.bit_count(), mono)


@dataclass(frozen=True)
class DesignPoly:
    """A set of distinct monomials in ambient dimension `dim` (a subgraph of Q_dim)."""

    dim: int
    terms: frozenset

    def __post_init__(self):
        check_dim(self.dim)
        object.__setattr__(self, "terms", frozenset(self.terms))
        for t in self.terms:
            check_monomial(t, self.dim)

    @classmethod
    def of(cls, dim: int, terms: Iterable[int]) -> "DesignPoly":
        return cls(dim, frozenset(terms))

    @classmethod
    def zero(cls, dim: int) -> "DesignPoly":
        return cls(dim, frozenset())

    @classmethod
    def full(cls, dim: int) -> "DesignPoly":
        if dim > MAX_ENUM_DIM:
            raise ValueError(f"refusing to enumerate 2^{dim} vertices")
        return cls(dim, frozenset(range(1 << dim)))

    def __len__(self) -> int:
        return len(self.terms)

    def __contains__(self, mono: int) -> bool:
        return mono in self.terms

    @cached_property
    def ordered_terms(self) -> tuple:
        """Terms in canonical graded-lex order (degree, then integer value)."""
        return tuple(sorted(self.terms, key=grlex_key))

    def _require_same_dim(self, other: "DesignPoly") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions differ: {self.dim} vs {other.dim}")

    # -- algebra ----------------------------------------------------------

    def mirror(self, s: int) -> "DesignPoly":
        """Multiply by monomial s: reflect along every direction present in s."""
        check_monomial(s, self.dim)
        return DesignPoly(self.dim, frozenset(t ^ s for t in self.terms))

    def scalar(self, other: "DesignPoly") -> int:
        """Scalar product = size of the intersection of the two vertex sets."""
        self._require_same_dim(other)
        return len(self.terms & other.terms)

    def union_disjoint(self, other: "DesignPoly") -> "DesignPoly":
        """Sum in 0/1 semantics; overlapping terms would leave K_d, so they are an error."""
        self._require_same_dim(other)
        overlap = self.terms & other.terms
        if overlap:
            raise ValueError(
                f"designs overlap on {len(overlap)} term(s), e.g. "
                f"{mono_name(next(iter(overlap)))}"
            )
        return DesignPoly(self.dim, self.terms | other.terms)

    def merge_shared_origin(self, other: "DesignPoly") -> "DesignPoly":
        """Union permitting overlap only on the constant monomial (shared origin vertex)."""
        self._require_same_dim(other)
        overlap = self.terms & other.terms
        if overlap - {0}:
            bad = next(iter(overlap - {0}))
            raise ValueError(f"blocks overlap beyond the origin, e.g. on {mono_name(bad)}")
        return DesignPoly(self.dim, self.terms | other.terms)

    # -- graph quantities --------------------------------------------------

    def edge_profile(self) -> tuple:
        """Per-direction edge counts: <P, X_i P> = 2 m_i."""
        counts = []
        for i in range(self.dim):
            twice = self.scalar(self.mirror(1 << i))
            assert twice % 2 == 0
            counts.append(twice // 2)
        return tuple(counts)

    def is_equitable(self) -> Optional[int]:
        """The common edge multiplicity m if all directions agree, else None."""
        profile = self.edge_profile()
        first = profile[0]
        return first if all(c == first for c in profile) else None

    def complement(self) -> "DesignPoly":
        """All monomials of Q_dim not in this design."""
        if self.dim > MAX_ENUM_DIM:
            raise ValueError(f"refusing to enumerate 2^{self.dim} vertices")
        return DesignPoly(self.dim, frozenset(range(1 << self.dim)) - self.terms)

    def permute(self, perm: Sequence[int]) -> "DesignPoly":
        """Relabel directions: bit i moves to position perm[i]-1 (perm is 1-based)."""
        if sorted(perm) != list(range(1, self.dim + 1)):
            raise ValueError(f"not a permutation of 1..{self.dim}: {list(perm)!r}")
        table = [p - 1 for p in perm]

        def apply(t: int) -> int:
            out = 0
            for i in range(self.dim):
                if (t >> i) & 1:
                    out |= 1 << table[i]
            return out

        return DesignPoly(self.dim, frozenset(apply(t) for t in self.terms))

    def shift(self, k: int, new_dim: int) -> "DesignPoly":
        """Rename every variable index i to i+k, in ambient dimension new_dim."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        check_dim(new_dim)
        top = max((t.bit_length() for t in self.terms), default=0)
        if top + k > new_dim:
            raise ValueError(
                f"shift by {k} pushes variable X{top} beyond dimension {new_dim}"
            )
        return DesignPoly(new_dim, frozenset(t << k for t in self.terms))

    def edges(self):
        """All (lower, upper, direction) edges, direction 1-based; lower has bit unset."""
        out = []
        for t in self.ordered_terms:
            for i in range(self.dim):
                if not (t >> i) & 1 and t | (1 << i) in self.terms:
                    out.append((t, t | (1 << i), i + 1))
        return out

    def economy(self, m: Optional[int] = None) -> Fraction:
        """Elementary effects per function evaluation, Gamma = m*d/|S|."""
        if m is None:
            m = self.is_equitable()
            if m is None:
                raise ValueError(f"design is not equitable: profile {self.edge_profile()}")
        if not self.terms:
            raise ValueError("economy is undefined for the empty design")
        return Fraction(m * self.dim, len(self.terms))


# -- serialization ----------------------------------------------------------

def design_to_dict(design: DesignPoly, family: Optional[str] = None,
                   m: object = "auto") -> dict:
    """Canonical JSON object for a design; terms in graded-lex order."""
    if m == "auto":
        m = design.is_equitable()
    return {
        "d": design.dim,
        "m": m,
        "family": family,
        "terms": [mono_str(t, design.dim) for t in design.ordered_terms],
    }


def design_from_dict(obj: dict) -> DesignPoly:
    try:
        d = obj["d"]
        words = obj["terms"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed design object: missing {exc}") from exc
    terms = []
    for w in words:
        if len(w) != d:
            raise ValueError(f"term {w!r} has length {len(w)}, expected {d}")
        terms.append(mono_parse(w) if "1" in w else 0)
    return DesignPoly.of(d, terms)


def dumps_design(design: DesignPoly, family: Optional[str] = None,
                 m: object = "auto") -> str:
    return json.dumps(design_to_dict(design, family=family, m=m), indent=2) + "\n"


def loads_design(text: str) -> tuple:
    """Returns (design, metadata dict as stored)."""
    obj = json.loads(text)
    return design_from_dict(obj), obj


def to_dot(design: DesignPoly, name: str = "design") -> str:
    """Graphviz form: nodes labelled by binary word, edges tagged with their direction."""
    lines = [f"graph {name} {{"]
    for t in design.ordered_terms:
        lines.append(f'  "{mono_str(t, design.dim)}";')
    for lo, hi, direction in design.edges():
        lines.append(
            f'  "{mono_str(lo, design.dim)}" -- "{mono_str(hi, design.dim)}" '
            f'[dir={direction}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
