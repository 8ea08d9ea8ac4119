"""Uniform hypergraphs with exact rational densities.

Vertices are 0-based integers.  Edges are stored canonically: each edge is a
sorted tuple of distinct vertices, and the edge list is sorted
lexicographically.  Instances are immutable and hashable, so they can be
shared freely between threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

Edge = tuple[int, ...]


def canonical_edges(edges: Iterable[Sequence[int]]) -> tuple[Edge, ...]:
    """Sort each edge ascending, drop duplicates, sort the edge list."""
    return tuple(sorted({tuple(sorted(e)) for e in edges}))


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertex set {0, ..., n-1}."""

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        if self.r < 1:
            raise ValueError(f"uniformity must be >= 1, got {self.r}")
        prev = None
        for e in self.edges:
            if len(e) != self.r:
                raise ValueError(f"edge {e} does not have {self.r} vertices")
            if len(set(e)) != self.r:
                raise ValueError(f"edge {e} has repeated vertices")
            if tuple(sorted(e)) != tuple(e):
                raise ValueError(f"edge {e} is not sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edges not in canonical order or duplicated")
            prev = e

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Sequence[int]]) -> "Hypergraph":
        return cls(n, r, canonical_edges(edges))

    @classmethod
    def empty(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, ())

    @classmethod
    def complete(cls, n: int, r: int) -> "Hypergraph":
        return cls(n, r, tuple(combinations(range(n), r)))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Edges as vertex bitmasks, in edge order."""
        return tuple(sum(1 << v for v in e) for e in self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    # -- densities ---------------------------------------------------------

    def edge_density(self) -> Fraction:
        """|H| / C(n, r), exact."""
        if self.n < self.r:
            raise ValueError(f"edge density undefined for n={self.n} < r={self.r}")
        return Fraction(self.m, comb(self.n, self.r))

    def shadow_density(self) -> Fraction:
        """|shadow(H)| / C(n, r-1), exact."""
        if self.n < self.r - 1:
            raise ValueError(f"shadow density undefined for n={self.n} < r-1")
        return Fraction(self.shadow().m, comb(self.n, self.r - 1))

    # -- shadows -----------------------------------------------------------

    def shadow(self, i: int = 1) -> "Hypergraph":
        """The i-th shadow, an (r-i)-graph on the same vertex set.

        For i >= 1 this is the family of (r-i)-subsets contained in an edge,
        for i = 0 the hypergraph itself, and for i <= -1 the family of
        (r-i)-sets whose induced subgraph is complete.
        """
        if i >= self.r:
            raise ValueError(f"shadow uniformity r-i={self.r - i} must be >= 1")
        k = self.r - i
        if k > self.n:
            raise ValueError(f"shadow uniformity {k} exceeds n={self.n}")
        if i == 0:
            return self
        if i >= 1:
            subs: set[Edge] = set()
            for e in self.edges:
                subs.update(combinations(e, k))
            return Hypergraph(self.n, k, tuple(sorted(subs)))
        # i <= -1: (r-i)-sets inducing a complete r-graph
        edge_set = self.edge_set
        found = [
            a
            for a in combinations(range(self.n), k)
            if all(s in edge_set for s in combinations(a, self.r))
        ]
        return Hypergraph(self.n, k, tuple(found))

    # -- local structure ---------------------------------------------------

    def link(self, v: int) -> "Hypergraph":
        """The link of v: an (r-1)-graph on the same vertex set."""
        self._check_vertex(v)
        if self.r < 2:
            raise ValueError("link requires uniformity >= 2")
        out = [tuple(u for u in e if u != v) for e in self.edges if v in e]
        return Hypergraph(self.n, self.r - 1, tuple(sorted(out)))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def pair_degree(self, u: int, v: int) -> int:
        """Number of edges containing both u and v."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError("pair degree requires two distinct vertices")
        pair = (1 << u) | (1 << v)
        return sum(1 for mask in self.masks if mask & pair == pair)

    def sigma(self, vertices: Iterable[int]) -> int:
        """Sum of vertex degrees over the given set."""
        vs = set(vertices)
        for v in vs:
            self._check_vertex(v)
        return sum(self.degree(v) for v in vs)

    def induced(self, vertices: Iterable[int]) -> "Hypergraph":
        """Induced subgraph, relabelled order-preservingly to 0..|S|-1."""
        vs = sorted(set(vertices))
        for v in vs:
            self._check_vertex(v)
        relabel = {v: i for i, v in enumerate(vs)}
        keep = set(vs)
        out = [
            tuple(relabel[u] for u in e) for e in self.edges if keep.issuperset(e)
        ]
        return Hypergraph(len(vs), self.r, tuple(sorted(out)))

    def add_isolated(self, count: int) -> "Hypergraph":
        if count < 0:
            raise ValueError("cannot remove vertices")
        return Hypergraph(self.n + count, self.r, self.edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Hypergraph":
        return cls.from_edges(int(data["n"]), int(data["r"]), data["edges"])

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        return cls.from_json_dict(json.loads(text))

    def to_text(self) -> str:
        """Compact text format: 'n r' header, one edge per line."""
        lines = [f"{self.n} {self.r}"]
        lines.extend(" ".join(str(v) for v in e) for e in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Hypergraph":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty hypergraph file")
        n, r = (int(tok) for tok in lines[0].split())
        edges = [tuple(int(tok) for tok in ln.split()) for ln in lines[1:]]
        return cls.from_edges(n, r, edges)


@dataclass(frozen=True)
class DensityPoint:
    """A (shadow density, edge density) pair with provenance.

    n = 0 marks an analytic or limit point.
    """

    x: Fraction | float
    y: Fraction | float
    n: int
    source: str

    def __post_init__(self) -> None:
        if not (0 <= self.x <= 1 and 0 <= self.y <= 1):
            raise ValueError(f"density point ({self.x}, {self.y}) outside [0,1]^2")

    @classmethod
    def of(cls, hg: Hypergraph, source: str) -> "DensityPoint":
        return cls(hg.shadow_density(), hg.edge_density(), hg.n, source)

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


def density_point_json(p: DensityPoint) -> dict:
    def enc(v):
        if isinstance(v, Fraction):
            return {"frac": f"{v.numerator}/{v.denominator}", "float": float(v)}
        return {"frac": None, "float": float(v)}

    return {"x": enc(p.x), "y": enc(p.y), "n": p.n, "source": p.source}
