"""Forbidden-family detectors with replayable witnesses.

Containment here always means subgraph containment, never induced.  Every
detector that reports containment returns a witness that can be re-verified
against the host hypergraph independently of the search that found it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .hypergraph import Edge, Hypergraph

_KINDS = ("empty", "cancellative", "covering-clique", "expansion", "D", "Dr")


@dataclass(frozen=True)
class ForbiddenFamily:
    """A forbidden family descriptor.

    kind: one of 'empty', 'cancellative', 'covering-clique', 'expansion',
    'D', 'Dr'.  `ell` is the clique parameter for the covering-clique and
    expansion families (the core has ell+1 vertices).
    """

    kind: str
    r: int = 0
    ell: int = 0

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == "cancellative" and self.r < 2:
            raise ValueError("cancellative family requires r >= 2")
        if self.kind in ("covering-clique", "expansion") and not self.ell >= self.r >= 2:
            raise ValueError(f"{self.kind} family requires ell >= r >= 2")
        if self.kind == "Dr" and self.r < 3:
            raise ValueError("Dr family requires r >= 3")

    def __str__(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "cancellative":
            return f"T:{self.r}"
        if self.kind == "covering-clique":
            return f"K:{self.r}:{self.ell + 1}"
        if self.kind == "expansion":
            return f"H:{self.r}:{self.ell + 1}"
        if self.kind == "D":
            return "D"
        return f"Dr:{self.r}"

    @classmethod
    def parse(cls, text: str) -> "ForbiddenFamily":
        """Parse 'empty', 'T:r', 'K:r:l+1', 'H:r:l+1', 'D', 'Dr:r'."""
        parts = text.split(":")
        try:
            if parts[0] == "empty" and len(parts) == 1:
                return cls("empty")
            if parts[0] == "T" and len(parts) == 2:
                return cls("cancellative", r=int(parts[1]))
            if parts[0] == "K" and len(parts) == 3:
                return cls("covering-clique", r=int(parts[1]), ell=int(parts[2]) - 1)
            if parts[0] == "H" and len(parts) == 3:
                return cls("expansion", r=int(parts[1]), ell=int(parts[2]) - 1)
            if parts[0] == "D" and len(parts) == 1:
                return cls("D", r=3)
            if parts[0] == "Dr" and len(parts) == 2:
                return cls("Dr", r=int(parts[1]))
        except ValueError as exc:
            raise ValueError(f"bad family string {text!r}: {exc}") from exc
        raise ValueError(f"bad family string {text!r}")

    def check_compatible(self, hg: Hypergraph) -> None:
        if self.kind == "empty":
            return
        if self.kind == "D":
            if hg.r != 3:
                raise ValueError(f"family D applies to 3-graphs, got r={hg.r}")
            return
        if hg.r != self.r:
            raise ValueError(f"family {self} applies to {self.r}-graphs, got r={hg.r}")


@dataclass(frozen=True)
class Witness:
    """Evidence of containment: a core vertex set plus certifying edges."""

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }


# -- cancellative ----------------------------------------------------------


def is_cancellative(hg: Hypergraph) -> tuple[bool, Optional[Witness]]:
    """True iff no three distinct edges A, B, C satisfy (A xor B) subset C.

    Any member of the cancellative forbidden family spans at most 2r-1
    vertices, but no size check is needed here: A xor B inside C already
    forces |A u B u C| <= |A u B| <= 2r-1.
    """
    if hg.r < 2:
        raise ValueError("cancellative detection requires r >= 2")
    if hg.r == 3 and hg.m > 200:
        hit = _cancellative_violation_indexed(hg)
    else:
        hit = _cancellative_violation_bruteforce(hg)
    if hit is None:
        return True, None
    a, b, c = hit
    return False, Witness(
        "cancellative",
        tuple(sorted(set(a) | set(b) | set(c))),
        (a, b, c),
    )


def _cancellative_violation_bruteforce(hg):
    masks, edges, r = hg.masks, hg.edges, hg.r
    m = len(masks)
    for i in range(m):
        for j in range(i + 1, m):
            d = masks[i] ^ masks[j]
            if d.bit_count() > r:
                continue
            for k in range(m):
                if k != i and k != j and d & ~masks[k] == 0:
                    return edges[i], edges[j], edges[k]
    return None


def _cancellative_violation_indexed(hg):
    # r = 3 only: a violating pair (A, B) must share 2 vertices, so it lives
    # in the edge list of some covered pair; the difference A xor B is again
    # a pair and any edge covering it can serve as C.
    masks, edges = hg.masks, hg.edges
    by_pair: dict[int, list[int]] = {}
    for idx, e in enumerate(hg.edges):
        for u, v in combinations(e, 2):
            by_pair.setdefault((1 << u) | (1 << v), []).append(idx)
    for pair_mask in sorted(by_pair):
        group = by_pair[pair_mask]
        for ai in range(len(group)):
            for bi in range(ai + 1, len(group)):
                i, j = group[ai], group[bi]
                d = masks[i] ^ masks[j]
                covers = by_pair.get(d)
                if covers:
                    # any cover of d differs from both A and B
                    return edges[i], edges[j], edges[covers[0]]
    return None


def verify_cancellative_witness(hg: Hypergraph, w: Witness) -> bool:
    if len(w.edges) != 3:
        return False
    a, b, c = w.edges
    if len({a, b, c}) != 3 or any(e not in hg.edge_set for e in (a, b, c)):
        return False
    return (set(a) ^ set(b)) <= set(c)


# -- covering cliques ------------------------------------------------------


def _pair_adjacency(hg: Hypergraph) -> list[int]:
    """Adjacency bitmasks of the pair-coverage graph (the (r-2)-th shadow)."""
    adj = [0] * hg.n
    for e in hg.edges:
        for u, v in combinations(e, 2):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _find_clique_lex(adj: list[int], n: int, k: int) -> Optional[tuple[int, ...]]:
    """Lexicographically smallest k-clique of the graph, or None."""
    if k == 0:
        return ()

    def extend(chosen: list[int], cand: int) -> Optional[tuple[int, ...]]:
        if len(chosen) == k:
            return tuple(chosen)
        if len(chosen) + cand.bit_count() < k:
            return None
        c = cand
        while c:
            v = (c & -c).bit_length() - 1
            c &= c - 1
            chosen.append(v)
            got = extend(chosen, cand & adj[v] & ~((1 << (v + 1)) - 1))
            if got is not None:
                return got
            chosen.pop()
        return None

    return extend([], (1 << n) - 1)


def contains_covering_clique(hg: Hypergraph, ell: int) -> tuple[bool, Optional[Witness]]:
    """True iff some (ell+1)-set has every pair covered by an edge of hg."""
    if not ell >= hg.r >= 2:
        raise ValueError(f"need ell >= r >= 2, got ell={ell}, r={hg.r}")
    if hg.n < ell + 1:
        return False, None
    core = _find_clique_lex(_pair_adjacency(hg), hg.n, ell + 1)
    if core is None:
        return False, None
    cover = []
    for u, v in combinations(core, 2):
        pair = (1 << u) | (1 << v)
        idx = next(i for i, mk in enumerate(hg.masks) if mk & pair == pair)
        cover.append(hg.edges[idx])
    return True, Witness("covering-clique", core, tuple(dict.fromkeys(cover)))


def verify_covering_clique_witness(hg: Hypergraph, w: Witness, ell: int) -> bool:
    if len(w.vertices) != ell + 1:
        return False
    if any(e not in hg.edge_set for e in w.edges):
        return False
    return all(
        any(u in e and v in e for e in w.edges)
        for u, v in combinations(w.vertices, 2)
    )


# -- expansions ------------------------------------------------------------


def contains_expansion(hg: Hypergraph, ell: int) -> tuple[bool, Optional[Witness]]:
    """Containment of the clique expansion with an (ell+1)-vertex core.

    Each pair of the core needs its own edge whose r-2 extra vertices avoid
    the core and all other chosen edges' extras.
    """
    if not ell >= hg.r >= 3:
        raise ValueError(f"need ell >= r >= 3, got ell={ell}, r={hg.r}")
    if hg.n < ell + 1:
        return False, None
    adj = _pair_adjacency(hg)
    for core in combinations(range(hg.n), ell + 1):
        if not all(adj[u] >> v & 1 for u, v in combinations(core, 2)):
            continue
        core_mask = sum(1 << v for v in core)
        pairs = list(combinations(core, 2))
        cands = []
        ok = True
        for u, v in pairs:
            pair_mask = (1 << u) | (1 << v)
            lst = [
                i
                for i, mk in enumerate(hg.masks)
                if mk & pair_mask == pair_mask and mk & core_mask == pair_mask
            ]
            if not lst:
                ok = False
                break
            cands.append(lst)
        if not ok:
            continue
        chosen = _disjoint_assignment(hg, pairs, cands, core_mask)
        if chosen is not None:
            return True, Witness(
                "expansion", core, tuple(hg.edges[i] for i in chosen)
            )
    return False, None


def _disjoint_assignment(hg, pairs, cands, core_mask):
    masks = hg.masks
    order = sorted(range(len(pairs)), key=lambda i: len(cands[i]))
    chosen: list[int] = [-1] * len(pairs)

    def rec(pos: int, used: int):
        if pos == len(order):
            return True
        slot = order[pos]
        for i in cands[slot]:
            extra = masks[i] & ~core_mask
            if extra & used:
                continue
            chosen[slot] = i
            if rec(pos + 1, used | extra):
                return True
            chosen[slot] = -1
        return False

    if rec(0, 0):
        return chosen
    return None


def verify_expansion_witness(hg: Hypergraph, w: Witness, ell: int) -> bool:
    core = w.vertices
    if len(core) != ell + 1 or len(w.edges) != len(list(combinations(core, 2))):
        return False
    if any(e not in hg.edge_set for e in w.edges):
        return False
    core_set = set(core)
    seen_extras: set[int] = set()
    for (u, v), e in zip(combinations(core, 2), w.edges):
        es = set(e)
        if es & core_set != {u, v}:
            return False
        extras = es - core_set
        if len(extras) != hg.r - 2 or extras & seen_extras:
            return False
        seen_extras |= extras
    return True


# -- the discontinuity families D and D^r ---------------------------------


def _non_star_selection(cand_masks: list[list[int]], full: int):
    """Pick one candidate per slot so the overall intersection is empty.

    Returns indices per slot, or None.  Memoized on (slot, intersection):
    after the first choice the intersection is a subset of one edge, so the
    state space stays tiny.
    """
    memo: dict[tuple[int, int], Optional[tuple[int, ...]]] = {}

    def rec(pos: int, inter: int) -> Optional[tuple[int, ...]]:
        if inter == 0:
            return tuple(0 for _ in range(len(cand_masks) - pos))
        if pos == len(cand_masks):
            return None
        key = (pos, inter)
        if key in memo:
            return memo[key]
        out = None
        for idx, mk in enumerate(cand_masks[pos]):
            rest = rec(pos + 1, inter & mk)
            if rest is not None:
                out = (idx,) + rest
                break
        memo[key] = out
        return out

    return rec(0, full)


def _contains_non_star_core(hg: Hypergraph, core_size: int):
    """Search for a fully pair-covered core whose covering edges can be
    chosen with empty common intersection (i.e. a member not inside a star).
    """
    adj = _pair_adjacency(hg)
    full = (1 << hg.n) - 1
    for core in combinations(range(hg.n), core_size):
        if not all(adj[u] >> v & 1 for u, v in combinations(core, 2)):
            continue
        pairs = list(combinations(core, 2))
        cand_idx = []
        for u, v in pairs:
            pair_mask = (1 << u) | (1 << v)
            cand_idx.append(
                [i for i, mk in enumerate(hg.masks) if mk & pair_mask == pair_mask]
            )
        cand_masks = [[hg.masks[i] for i in lst] for lst in cand_idx]
        sel = _non_star_selection(cand_masks, full)
        if sel is not None:
            edges = tuple(
                dict.fromkeys(hg.edges[cand_idx[slot][i]] for slot, i in enumerate(sel))
            )
            return core, edges
    return None


def contains_D_member(hg: Hypergraph) -> tuple[bool, Optional[Witness]]:
    """Member of the 3-graph discontinuity family: a 4-set with all pairs
    covered by edges that do not all pass through one vertex."""
    if hg.r != 3:
        raise ValueError(f"family D applies to 3-graphs, got r={hg.r}")
    hit = _contains_non_star_core(hg, 4)
    if hit is None:
        return False, None
    core, edges = hit
    return True, Witness("D", core, edges)


def contains_Dr_member(hg: Hypergraph, r: int) -> tuple[bool, Optional[Witness]]:
    """r-uniform analogue of the D family with an (r+1)-vertex core."""
    if r < 3:
        raise ValueError("Dr requires r >= 3")
    if hg.r != r:
        raise ValueError(f"uniformity mismatch: family r={r}, hypergraph r={hg.r}")
    hit = _contains_non_star_core(hg, r + 1)
    if hit is None:
        return False, None
    core, edges = hit
    return True, Witness("Dr", core, edges)


def verify_non_star_witness(hg: Hypergraph, w: Witness, core_size: int) -> bool:
    if len(w.vertices) != core_size:
        return False
    if any(e not in hg.edge_set for e in w.edges):
        return False
    if not all(
        any(u in e and v in e for e in w.edges)
        for u, v in combinations(w.vertices, 2)
    ):
        return False
    common = set(w.edges[0])
    for e in w.edges[1:]:
        common &= set(e)
    return not common


# -- dispatch --------------------------------------------------------------


def is_free(hg: Hypergraph, fam: ForbiddenFamily) -> tuple[bool, Optional[Witness]]:
    """True iff hg contains no member of the family; witness on containment."""
    fam.check_compatible(hg)
    if fam.kind == "empty":
        return True, None
    if fam.kind == "cancellative":
        return is_cancellative(hg)
    if fam.kind == "covering-clique":
        hit, w = contains_covering_clique(hg, fam.ell)
    elif fam.kind == "expansion":
        hit, w = contains_expansion(hg, fam.ell)
    elif fam.kind == "D":
        hit, w = contains_D_member(hg)
    else:
        hit, w = contains_Dr_member(hg, fam.r)
    return not hit, w


def verify_witness(hg: Hypergraph, fam: ForbiddenFamily, w: Witness) -> bool:
    """Independent replay of a containment witness."""
    if fam.kind == "cancellative":
        return verify_cancellative_witness(hg, w)
    if fam.kind == "covering-clique":
        return verify_covering_clique_witness(hg, w, fam.ell)
    if fam.kind == "expansion":
        return verify_expansion_witness(hg, w, fam.ell)
    if fam.kind == "D":
        return verify_non_star_witness(hg, w, 4)
    if fam.kind == "Dr":
        return verify_non_star_witness(hg, w, fam.r + 1)
    raise ValueError(f"no witness semantics for family {fam}")
