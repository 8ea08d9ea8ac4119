"""Generators for the extremal constructions used to realize boundary points.

All generators are deterministic: parts are laid out contiguously in vertex
order and fractional part sizes are resolved by largest-remainder
apportionment.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .hypergraph import Hypergraph

FANO_EDGES = (
    (0, 1, 2),
    (2, 3, 4),
    (4, 5, 0),
    (0, 6, 3),
    (1, 6, 4),
    (2, 6, 5),
    (1, 3, 5),
)


def fano_plane() -> Hypergraph:
    """The Fano plane on 7 vertices."""
    return Hypergraph.from_edges(7, 3, FANO_EDGES)


def complete(n: int, r: int) -> Hypergraph:
    return Hypergraph.complete(n, r)


def star(n: int, r: int) -> Hypergraph:
    """All r-sets through vertex 0; C(n-1, r-1) edges."""
    if not 2 <= r <= n:
        raise ValueError(f"star requires n >= r >= 2, got n={n}, r={r}")
    edges = [(0,) + rest for rest in combinations(range(1, n), r - 1)]
    return Hypergraph(n, r, tuple(edges))


def balanced_part_sizes(n: int, parts: int) -> list[int]:
    """Sizes differing by at most one, larger parts first."""
    q, rem = divmod(n, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def _contiguous_parts(sizes: Sequence[int]) -> list[range]:
    out = []
    start = 0
    for s in sizes:
        out.append(range(start, start + s))
        start += s
    return out


def turan(n: int, r: int, ell: int) -> Hypergraph:
    """Generalized Turan hypergraph T_r(n, ell).

    Vertices are split into ell near-equal contiguous parts and the edges are
    all r-sets meeting each part at most once.
    """
    if not ell >= r >= 2:
        raise ValueError(f"turan requires ell >= r >= 2, got r={r}, ell={ell}")
    if n < 0:
        raise ValueError("n must be non-negative")
    parts = _contiguous_parts(balanced_part_sizes(n, ell))
    edges = []
    for chosen in combinations(parts, r):
        for combo in product(*chosen):
            edges.append(tuple(sorted(combo)))
    return Hypergraph.from_edges(n, r, edges)


def turan_edge_count(n: int, r: int, ell: int) -> int:
    """t_r(n, ell), computed directly from the part sizes."""
    sizes = balanced_part_sizes(n, ell)
    total = 0
    for chosen in combinations(sizes, r):
        p = 1
        for s in chosen:
            p *= s
        total += p
    return total


def apportion(weights: Sequence[Fraction], total: int) -> list[int]:
    """Largest-remainder apportionment of `total` into len(weights) parts."""
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    scale = sum(weights)
    if scale == 0:
        raise ValueError("weights sum to zero")
    targets = [Fraction(w) * total / scale for w in weights]
    floors = [int(t) for t in targets]
    leftover = total - sum(floors)
    order = sorted(range(len(weights)), key=lambda i: (floors[i] - targets[i], i))
    for i in order[:leftover]:
        floors[i] += 1
    return floors


def blow_up(base: Hypergraph, sizes: Sequence[int]) -> Hypergraph:
    """Replace vertex i of the base by a class of sizes[i] fresh vertices.

    Edges are all transversals of the classes of the original edges; classes
    are laid out contiguously in base vertex order.
    """
    if len(sizes) != base.n:
        raise ValueError(f"need {base.n} class sizes, got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise ValueError("class sizes must be non-negative")
    classes = _contiguous_parts(sizes)
    edges = []
    for e in base.edges:
        for combo in product(*(classes[v] for v in e)):
            edges.append(tuple(sorted(combo)))
    return Hypergraph.from_edges(sum(sizes), base.r, edges)


def clique_plus_isolated(n: int, r: int, alpha: float | Fraction) -> Hypergraph:
    """Complete r-graph on round(alpha*n) vertices plus isolated remainder."""
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0,1], got {alpha}")
    k = int(Fraction(alpha) * n + Fraction(1, 2))
    return Hypergraph.complete(k, r).add_isolated(n - k)


def turan_plus_isolated(n: int, r: int, ell: int, alpha: float | Fraction) -> Hypergraph:
    """T_r(round(alpha*n), ell) plus isolated vertices up to n total."""
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0,1], got {alpha}")
    k = int(Fraction(alpha) * n + Fraction(1, 2))
    return turan(k, r, ell).add_isolated(n - k)


def _admissible_sts_order(k: int) -> bool:
    return k >= 3 and k % 6 in (1, 3)


def steiner_triple_system(k: int) -> Hypergraph:
    """A Steiner triple system on k vertices; every pair in exactly one edge.

    Uses the Bose construction for k = 3 (mod 6) and the Skolem construction
    for k = 1 (mod 6).
    """
    if not _admissible_sts_order(k):
        raise ValueError(f"an STS on {k} vertices does not exist (need k = 1 or 3 mod 6)")
    if k % 6 == 3:
        return _bose(k)
    return _skolem(k)


def _bose(k: int) -> Hypergraph:
    # k = 6t+3; points are Z_{2t+1} x {0,1,2}, point (i, j) -> 3*i + j.
    m = k // 3  # 2t+1, odd
    half = (m + 1) // 2  # inverse of 2 mod m
    edges = []
    for i in range(m):
        edges.append((3 * i, 3 * i + 1, 3 * i + 2))
    for i in range(m):
        for j in range(i + 1, m):
            mid = (i + j) * half % m
            for lvl in range(3):
                edges.append(
                    tuple(sorted((3 * i + lvl, 3 * j + lvl, 3 * mid + (lvl + 1) % 3)))
                )
    return Hypergraph.from_edges(k, 3, edges)


def _skolem(k: int) -> Hypergraph:
    # k = 6t+1; points are {inf} u (Z_{2t} x {0,1,2}) with a half-idempotent
    # commutative quasigroup on Z_{2t}: x*y = sigma(x+y) where sigma relabels
    # 2i -> i and 2i+1 -> t+i.
    t = k // 6
    if t == 0:  # k = 1: a single vertex, no triples
        return Hypergraph.empty(1, 3)
    q = 2 * t
    sigma = [0] * q
    for i in range(t):
        sigma[2 * i] = i
        sigma[(2 * i + 1) % q] = t + i

    def op(x: int, y: int) -> int:
        return sigma[(x + y) % q]

    inf = 3 * q  # vertex index k-1
    def pt(i: int, lvl: int) -> int:
        return 3 * i + lvl

    edges = []
    for i in range(t):
        edges.append((pt(i, 0), pt(i, 1), pt(i, 2)))
    for i in range(t, q):
        for lvl in range(3):
            edges.append(tuple(sorted((inf, pt(i, lvl), pt(i - t, (lvl + 1) % 3)))))
    for x in range(q):
        for y in range(x + 1, q):
            z = op(x, y)
            for lvl in range(3):
                edges.append(tuple(sorted((pt(x, lvl), pt(y, lvl), pt(z, (lvl + 1) % 3)))))
    return Hypergraph.from_edges(k, 3, edges)


def sts_blowup(n: int, k: int) -> Hypergraph:
    """Balanced blow-up of an STS on k vertices to n vertices total."""
    base = steiner_triple_system(k)
    return blow_up(base, balanced_part_sizes(n, k))


FANO_ALPHA_MIN = Fraction(1, 7)
FANO_ALPHA_MAX = Fraction(1, 3)


def fano_blowup(n: int, alpha: float | Fraction) -> Hypergraph:
    """Blow-up of the Fano plane with one fat line.

    The three vertices of the line {0,1,2} get weight alpha each, the other
    four get weight beta = (1-3*alpha)/4; class sizes sum exactly to n.
    """
    a = Fraction(alpha)
    if not FANO_ALPHA_MIN <= a <= FANO_ALPHA_MAX:
        raise ValueError(f"alpha must lie in [1/7, 1/3], got {alpha}")
    beta = (1 - 3 * a) / 4
    sizes = apportion([a, a, a, beta, beta, beta, beta], n)
    return blow_up(fano_plane(), sizes)


# -- construction spec strings --------------------------------------------


def _parse_alpha(tok: str) -> Fraction:
    if "/" in tok:
        num, den = tok.split("/")
        return Fraction(int(num), int(den))
    return Fraction(tok)


def parse_construction(spec: str) -> Hypergraph:
    """Build a hypergraph from a compact spec string.

    Formats: turan:n:r:l | star:n:r | sts:k | sts-blowup:n:k |
    fano-blowup:n:alpha | clique+iso:n:r:alpha | turan+iso:n:r:l:alpha
    """
    parts = spec.split(":")
    kind, args = parts[0], parts[1:]
    try:
        if kind == "turan" and len(args) == 3:
            return turan(int(args[0]), int(args[1]), int(args[2]))
        if kind == "star" and len(args) == 2:
            return star(int(args[0]), int(args[1]))
        if kind == "sts" and len(args) == 1:
            return steiner_triple_system(int(args[0]))
        if kind == "sts-blowup" and len(args) == 2:
            return sts_blowup(int(args[0]), int(args[1]))
        if kind == "fano-blowup" and len(args) == 2:
            return fano_blowup(int(args[0]), _parse_alpha(args[1]))
        if kind == "clique+iso" and len(args) == 3:
            return clique_plus_isolated(int(args[0]), int(args[1]), _parse_alpha(args[2]))
        if kind == "turan+iso" and len(args) == 4:
            return turan_plus_isolated(
                int(args[0]), int(args[1]), int(args[2]), _parse_alpha(args[3])
            )
    except ValueError as exc:
        raise ValueError(f"bad construction spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown construction spec {spec!r}")
