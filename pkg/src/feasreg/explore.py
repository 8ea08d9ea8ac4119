"""Exact and stochastic exploration of the finite-n feasible region.

The exact engine does depth-first extension over candidate edges in
colexicographic bitmask order, pruning any branch whose partial hypergraph
already contains a forbidden member (sound because containment is monotone
under edge addition).  Branch-and-bound answers the max-edges-for-fixed-
shadow question, pruned against the Kruskal-Katona bound.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Optional

from .bounds import kruskal_katona_max_edges
from .families import (
    ForbiddenFamily,
    contains_expansion,
    is_free,
)
from .hypergraph import DensityPoint, Hypergraph

MODES = ("exact-enumerate", "branch-bound", "random-maximal", "anneal")


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "exact-enumerate"
    iso_reduction: bool = False
    seed: int = 0
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    threads: int = 1
    split_depth: int = 2
    samples: int = 100
    anneal_steps: int = 100_000
    anneal_t0: float = 1.0
    anneal_ratio: float = 0.999

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown search mode {self.mode!r}")


@dataclass
class ExploreReport:
    family: ForbiddenFamily
    n: int
    r: int
    points: list[DensityPoint] = field(default_factory=list)
    extremal: dict[int, tuple[int, Hypergraph]] = field(default_factory=dict)
    stats: dict = field(default_factory=dict)


# -- incremental membership checkers --------------------------------------


class _EmptyChecker:
    def would_create(self, mask: int) -> bool:
        return False

    def add(self, mask: int) -> None:
        pass

    def remove(self, mask: int) -> None:
        pass


class _CancellativeChecker:
    """Generic cancellative checker; O(m^2) per query with popcount filter."""

    def __init__(self, r: int):
        self.r = r
        self.masks: list[int] = []

    def would_create(self, mask: int) -> bool:
        r, ms = self.r, self.masks
        for i, a in enumerate(ms):
            d = a ^ mask
            if d.bit_count() <= r:
                # C = some existing edge, A = new, B = a
                for c in ms:
                    if c != a and d & ~c == 0:
                        return True
            for b in ms[i + 1 :]:
                if (a ^ b).bit_count() <= r and (a ^ b) & ~mask == 0:
                    return True  # C = new edge
        return False

    def add(self, mask: int) -> None:
        self.masks.append(mask)

    def remove(self, mask: int) -> None:
        assert self.masks.pop() == mask


class _Cancellative3Checker:
    """Cancellative checker for 3-graphs with pair indexes; O(degree) query.

    A violating triple with the new edge E is either
      (i) C = E: two edges D+u, D+v with the pair {u,v} inside E, or
      (ii) A = E: an edge B sharing a pair with E whose difference pair is
           covered by some edge.
    """

    def __init__(self) -> None:
        self.cov: dict[int, int] = {}
        self.by_pair: dict[int, list[int]] = {}
        self.link: dict[int, set[int]] = {}

    @staticmethod
    def _pairs(mask: int) -> list[tuple[int, int, int]]:
        vs = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            vs.append(v)
            m &= m - 1
        a, b, c = vs
        return [(a, b, c), (a, c, b), (b, c, a)]

    def would_create(self, mask: int) -> bool:
        for u, v, w in self._pairs(mask):
            lu = self.link.get(u)
            lv = self.link.get(v)
            if lu and lv and not lu.isdisjoint(lv):
                return True  # case (i)
            pair = (1 << u) | (1 << v)
            for b in self.by_pair.get(pair, ()):  # case (ii)
                d = b ^ mask
                if self.cov.get(d, 0) >= 1:
                    return True
        return False

    def add(self, mask: int) -> None:
        for u, v, w in self._pairs(mask):
            pair = (1 << u) | (1 << v)
            self.cov[pair] = self.cov.get(pair, 0) + 1
            self.by_pair.setdefault(pair, []).append(mask)
            self.link.setdefault(w, set()).add(pair)

    def remove(self, mask: int) -> None:
        for u, v, w in self._pairs(mask):
            pair = (1 << u) | (1 << v)
            self.cov[pair] -= 1
            self.by_pair[pair].remove(mask)
            self.link[w].discard(pair)


class _CoveringCliqueChecker:
    """Tracks covered pairs as a bitmask and tests precomputed core masks."""

    def __init__(self, n: int, r: int, ell: int):
        self.n, self.r, self.ell = n, r, ell
        self.pair_index = {
            p: i for i, p in enumerate(combinations(range(n), 2))
        }
        self.core_pmasks = []
        for core in combinations(range(n), ell + 1):
            pm = 0
            for p in combinations(core, 2):
                pm |= 1 << self.pair_index[p]
            self.core_pmasks.append(pm)
        self.cov = [0] * len(self.pair_index)
        self.covered = 0

    def _edge_pmask(self, mask: int) -> int:
        vs = _mask_vertices(mask)
        pm = 0
        for p in combinations(vs, 2):
            pm |= 1 << self.pair_index[p]
        return pm

    def would_create(self, mask: int) -> bool:
        new_cov = self.covered | self._edge_pmask(mask)
        return any(new_cov & pm == pm for pm in self.core_pmasks)

    def add(self, mask: int) -> None:
        for p in combinations(_mask_vertices(mask), 2):
            i = self.pair_index[p]
            self.cov[i] += 1
            self.covered |= 1 << i
        self._recover = None

    def remove(self, mask: int) -> None:
        for p in combinations(_mask_vertices(mask), 2):
            i = self.pair_index[p]
            self.cov[i] -= 1
            if self.cov[i] == 0:
                self.covered &= ~(1 << i)


class _NonStarChecker(_CoveringCliqueChecker):
    """Checker for the discontinuity families: a fully pair-covered core
    whose covering edges admit a selection with empty common intersection."""

    def __init__(self, n: int, r: int, core_size: int):
        super().__init__(n, r, core_size - 1)
        self.cores = list(combinations(range(n), core_size))
        self.core_vmasks = [sum(1 << v for v in c) for c in self.cores]
        self.edges: list[int] = []

    def would_create(self, mask: int) -> bool:
        new_cov = self.covered | self._edge_pmask(mask)
        all_edges = self.edges + [mask]
        full = (1 << self.n) - 1
        for core, vm, pm in zip(self.cores, self.core_vmasks, self.core_pmasks):
            if (mask & vm).bit_count() < 2:
                continue  # a new member must use the new edge
            if new_cov & pm != pm:
                continue
            cands = []
            ok = True
            for u, v in combinations(core, 2):
                pmask = (1 << u) | (1 << v)
                lst = [e for e in all_edges if e & pmask == pmask]
                if not lst:
                    ok = False
                    break
                cands.append(lst)
            if ok and _empty_intersection_possible(cands, full):
                return True
        return False

    def add(self, mask: int) -> None:
        super().add(mask)
        self.edges.append(mask)

    def remove(self, mask: int) -> None:
        super().remove(mask)
        assert self.edges.pop() == mask


def _empty_intersection_possible(cand_masks: list[list[int]], full: int) -> bool:
    memo: dict[tuple[int, int], bool] = {}

    def rec(pos: int, inter: int) -> bool:
        if inter == 0:
            return True
        if pos == len(cand_masks):
            return False
        key = (pos, inter)
        if key not in memo:
            memo[key] = any(rec(pos + 1, inter & mk) for mk in cand_masks[pos])
        return memo[key]

    return rec(0, full)


class _ExpansionChecker:
    """Falls back to the full detector; fine at enumeration scale."""

    def __init__(self, n: int, r: int, ell: int):
        self.n, self.r, self.ell = n, r, ell
        self.edges: list[int] = []

    def would_create(self, mask: int) -> bool:
        hg = Hypergraph.from_edges(
            self.n, self.r, [_mask_vertices(m) for m in self.edges + [mask]]
        )
        hit, _ = contains_expansion(hg, self.ell)
        return hit

    def add(self, mask: int) -> None:
        self.edges.append(mask)

    def remove(self, mask: int) -> None:
        assert self.edges.pop() == mask


def _mask_vertices(mask: int) -> tuple[int, ...]:
    vs = []
    while mask:
        vs.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(vs)


def make_checker(n: int, r: int, fam: ForbiddenFamily):
    if fam.kind == "empty":
        return _EmptyChecker()
    if fam.kind == "cancellative":
        return _Cancellative3Checker() if r == 3 else _CancellativeChecker(r)
    if fam.kind == "covering-clique":
        return _CoveringCliqueChecker(n, r, fam.ell)
    if fam.kind == "expansion":
        return _ExpansionChecker(n, r, fam.ell)
    if fam.kind == "D":
        return _NonStarChecker(n, r, 4)
    if fam.kind == "Dr":
        return _NonStarChecker(n, r, fam.r + 1)
    raise ValueError(f"no checker for family {fam}")


# -- shared edge-universe helpers ------------------------------------------


def edge_universe(n: int, r: int) -> tuple[list[tuple[int, ...]], list[int]]:
    """All possible edges ordered colexicographically by bitmask."""
    if n > 64:
        raise ValueError("search engine supports n <= 64")
    edges = sorted(
        combinations(range(n), r), key=lambda e: sum(1 << v for v in e)
    )
    masks = [sum(1 << v for v in e) for e in edges]
    return edges, masks


class _ShadowCounter:
    """Incremental |shadow| under stack-discipline edge addition."""

    def __init__(self, n: int, r: int, edges: list[tuple[int, ...]]):
        sub_index: dict[tuple[int, ...], int] = {}
        self.edge_subs: list[list[int]] = []
        for e in edges:
            ids = []
            for s in combinations(e, r - 1):
                if s not in sub_index:
                    sub_index[s] = len(sub_index)
                ids.append(sub_index[s])
            self.edge_subs.append(ids)
        self.cov = [0] * len(sub_index)
        self.size = 0

    def added_count(self, edge_idx: int) -> int:
        """How many new shadow sets adding this edge would create."""
        return sum(1 for i in self.edge_subs[edge_idx] if self.cov[i] == 0)

    def add(self, edge_idx: int) -> None:
        for i in self.edge_subs[edge_idx]:
            if self.cov[i] == 0:
                self.size += 1
            self.cov[i] += 1

    def remove(self, edge_idx: int) -> None:
        for i in self.edge_subs[edge_idx]:
            self.cov[i] -= 1
            if self.cov[i] == 0:
                self.size -= 1


def canonical_form(hg: Hypergraph) -> tuple[int, ...]:
    """Minimal sorted edge-bitmask tuple over all vertex relabelings.

    Brute force over all n! permutations; intended for n <= 8.
    """
    if hg.n > 8:
        raise ValueError("canonical form supported for n <= 8 only")
    best = None
    for perm in permutations(range(hg.n)):
        image = tuple(sorted(sum(1 << perm[v] for v in e) for e in hg.edges))
        if best is None or image < best:
            best = image
    return best if best is not None else ()


# -- exact enumeration -----------------------------------------------------


@dataclass
class _TaskResult:
    pairs: set
    extremal: dict
    nodes: int = 0
    pruned: int = 0
    partial: bool = False

    def merge(self, other: "_TaskResult") -> None:
        self.pairs |= other.pairs
        for s, (m, wit) in other.extremal.items():
            if s not in self.extremal or m > self.extremal[s][0]:
                self.extremal[s] = (m, wit)
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.partial = self.partial or other.partial


def _dfs_enumerate(
    n: int,
    r: int,
    fam: ForbiddenFamily,
    prefix: tuple[int, ...],
    edges: list[tuple[int, ...]],
    masks: list[int],
    node_budget: Optional[int],
    deadline: Optional[float],
) -> _TaskResult:
    """Enumerate all free supersets of `prefix` using edges of larger index."""
    checker = make_checker(n, r, fam)
    shadow = _ShadowCounter(n, r, edges)
    for idx in prefix:
        checker.add(masks[idx])
        shadow.add(idx)
    res = _TaskResult(set(), {})
    chosen = list(prefix)
    total = len(edges)

    def record() -> None:
        key = (shadow.size, len(chosen))
        res.pairs.add(key)
        cur = res.extremal.get(shadow.size)
        if cur is None or len(chosen) > cur[0]:
            res.extremal[shadow.size] = (len(chosen), tuple(chosen))

    def rec(start: int) -> None:
        res.nodes += 1
        record()
        if node_budget is not None and res.nodes >= node_budget:
            res.partial = True
            return
        if deadline is not None and res.nodes % 4096 == 0 and time.monotonic() > deadline:
            res.partial = True
            return
        for idx in range(start, total):
            if res.partial:
                return
            if checker.would_create(masks[idx]):
                res.pruned += 1
                continue
            checker.add(masks[idx])
            shadow.add(idx)
            chosen.append(idx)
            rec(idx + 1)
            chosen.pop()
            shadow.remove(idx)
            checker.remove(masks[idx])

    start = prefix[-1] + 1 if prefix else 0
    rec(start)
    return res


def _free_prefixes(n, r, fam, masks, depth) -> tuple[list[tuple[int, ...]], _TaskResult]:
    """Free edge-index prefixes of exactly `depth` edges (the task roots)
    plus recorded results for the shallower nodes."""
    checker = make_checker(n, r, fam)
    shadow = _ShadowCounter(
        n, r, [_mask_vertices(m) for m in masks]
    )
    shallow = _TaskResult(set(), {})
    roots: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def rec(start: int) -> None:
        if len(chosen) == depth:
            roots.append(tuple(chosen))
            return
        shallow.nodes += 1
        key = (shadow.size, len(chosen))
        shallow.pairs.add(key)
        cur = shallow.extremal.get(shadow.size)
        if cur is None or len(chosen) > cur[0]:
            shallow.extremal[shadow.size] = (len(chosen), tuple(chosen))
        for idx in range(start, len(masks)):
            if checker.would_create(masks[idx]):
                shallow.pruned += 1
                continue
            checker.add(masks[idx])
            shadow.add(idx)
            chosen.append(idx)
            rec(idx + 1)
            chosen.pop()
            shadow.remove(idx)
            checker.remove(masks[idx])

    rec(0)
    return roots, shallow


def enumerate_free(
    n: int, r: int, fam: ForbiddenFamily, cfg: SearchConfig = SearchConfig()
) -> ExploreReport:
    """Visit every family-free r-graph on n labeled vertices.

    Records all attained (shadow size, edge count) pairs and, per shadow
    size, the maximum edge count with a witness.  With iso_reduction, one
    representative per isomorphism class is expanded instead (breadth-first
    with canonical-form deduplication; n <= 8).
    """
    t0 = time.monotonic()
    edges, masks = edge_universe(n, r)
    if cfg.iso_reduction:
        result = _enumerate_classes(n, r, fam, edges, masks, cfg)
    else:
        deadline = t0 + cfg.time_budget if cfg.time_budget else None
        depth = min(cfg.split_depth, len(edges))
        roots, result = _free_prefixes(n, r, fam, masks, depth)
        budget = None
        if cfg.node_budget is not None:
            budget = max(1, (cfg.node_budget - result.nodes) // max(1, len(roots)))

        def run(prefix):
            return _dfs_enumerate(n, r, fam, prefix, edges, masks, budget, deadline)

        if cfg.threads > 1 and roots:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                for sub in pool.map(run, roots):
                    result.merge(sub)
        else:
            for prefix in roots:
                result.merge(run(prefix))

    report = ExploreReport(family=fam, n=n, r=r)
    report.stats = {
        "mode": "exact-enumerate",
        "nodes": result.nodes,
        "pruned": result.pruned,
        "partial": result.partial,
        "wall_secs": time.monotonic() - t0,
    }
    cr = math.comb(n, r) if n >= r else 0
    cs = math.comb(n, r - 1) if n >= r - 1 else 0
    for s, mm in sorted(result.pairs):
        if cr and cs:
            report.points.append(
                DensityPoint(Fraction(s, cs), Fraction(mm, cr), n, "exact-enum")
            )
    for s in sorted(result.extremal):
        mm, chosen = result.extremal[s]
        if isinstance(chosen, Hypergraph):
            wit = chosen
        else:
            wit = Hypergraph.from_edges(n, r, [edges[i] for i in chosen])
        report.extremal[s] = (mm, wit)
    return report


def _enumerate_classes(n, r, fam, edges, masks, cfg) -> _TaskResult:
    """Breadth-first enumeration of isomorphism classes with canonical
    deduplication.  Sound and complete because freeness is preserved under
    edge deletion, so every class of size k+1 extends some class of size k."""
    if n > 8:
        raise ValueError("iso_reduction supported for n <= 8 only")
    res = _TaskResult(set(), {})
    empty = Hypergraph.empty(n, r)
    level = {canonical_form(empty): empty}
    while level:
        nxt: dict[tuple[int, ...], Hypergraph] = {}
        for form in sorted(level):
            hg = level[form]
            res.nodes += 1
            s = hg.shadow().m if hg.m else 0
            res.pairs.add((s, hg.m))
            cur = res.extremal.get(s)
            if cur is None or hg.m > cur[0]:
                res.extremal[s] = (hg.m, hg)
            present = set(hg.edges)
            for e in edges:
                if e in present:
                    continue
                cand = Hypergraph.from_edges(n, r, list(hg.edges) + [e])
                cf = canonical_form(cand)
                if cf in nxt:
                    continue
                free, _ = is_free(cand, fam)
                if free:
                    nxt[cf] = cand
                else:
                    res.pruned += 1
        level = nxt
    return res


# -- branch and bound: max edges for fixed shadow --------------------------


@dataclass
class MaxEdgesResult:
    max_edges: Optional[int]  # None means the shadow size is not attainable
    witness: Optional[Hypergraph]
    feasible: bool
    complete: bool  # False when a budget stopped the search early
    nodes: int = 0


def max_edges_given_shadow(
    n: int,
    r: int,
    fam: ForbiddenFamily,
    s: int,
    cfg: SearchConfig = SearchConfig(),
) -> MaxEdgesResult:
    """Maximum edge count over family-free r-graphs with |shadow| exactly s."""
    if not 0 <= s <= math.comb(n, r - 1):
        raise ValueError(f"shadow size {s} outside [0, C({n},{r - 1})]")
    edges, masks = edge_universe(n, r)
    checker = make_checker(n, r, fam)
    shadow = _ShadowCounter(n, r, edges)
    kk_cap = math.floor(kruskal_katona_max_edges(s, r, n) + 1e-9)
    t0 = time.monotonic()
    deadline = t0 + cfg.time_budget if cfg.time_budget else None

    best = -1
    best_edges: Optional[tuple[int, ...]] = None
    chosen: list[int] = []
    nodes = 0
    partial = False
    total = len(edges)

    def rec(start: int) -> None:
        nonlocal best, best_edges, nodes, partial
        nodes += 1
        if cfg.node_budget is not None and nodes > cfg.node_budget:
            partial = True
            return
        if deadline is not None and nodes % 4096 == 0 and time.monotonic() > deadline:
            partial = True
            return
        if shadow.size == s and len(chosen) > best:
            best = len(chosen)
            best_edges = tuple(chosen)
        budget_left = s - shadow.size
        addable = sum(
            1 for idx in range(start, total) if shadow.added_count(idx) <= budget_left
        )
        if min(len(chosen) + addable, kk_cap) <= best:
            return
        for idx in range(start, total):
            if partial:
                return
            if shadow.added_count(idx) > budget_left:
                continue
            if checker.would_create(masks[idx]):
                continue
            checker.add(masks[idx])
            shadow.add(idx)
            chosen.append(idx)
            rec(idx + 1)
            chosen.pop()
            shadow.remove(idx)
            checker.remove(masks[idx])

    rec(0)
    if best < 0:
        return MaxEdgesResult(None, None, False, not partial, nodes)
    wit = Hypergraph.from_edges(n, r, [edges[i] for i in best_edges])
    return MaxEdgesResult(best, wit, True, not partial, nodes)


# -- stochastic modes ------------------------------------------------------


def _sample_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"{seed}:{index}")


def random_maximal_free(
    n: int, r: int, fam: ForbiddenFamily, cfg: SearchConfig = SearchConfig(mode="random-maximal")
) -> list[DensityPoint]:
    """Random maximal family-free hypergraphs, one density point per sample.

    Sample i uses its own derived RNG, so results are reproducible given the
    seed and independent of how samples are scheduled across workers.
    """
    edges, masks = edge_universe(n, r)

    def one(i: int) -> DensityPoint:
        rng = _sample_rng(cfg.seed, i)
        order = list(range(len(edges)))
        rng.shuffle(order)
        checker = make_checker(n, r, fam)
        picked: list[int] = []
        for idx in order:
            if not checker.would_create(masks[idx]):
                checker.add(masks[idx])
                picked.append(idx)
        hg = Hypergraph.from_edges(n, r, [edges[i] for i in picked])
        return DensityPoint.of(hg, f"random-maximal:{i}")

    indices = range(cfg.samples)
    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            return list(pool.map(one, indices))
    return [one(i) for i in indices]


def anneal_towards(
    n: int,
    r: int,
    fam: ForbiddenFamily,
    target: tuple[float, float],
    cfg: SearchConfig = SearchConfig(mode="anneal"),
) -> list[DensityPoint]:
    """Simulated annealing on free hypergraphs, minimizing squared distance
    of the density pair to the target.  Best-effort sampler; geometric
    cooling schedule."""
    edges, masks = edge_universe(n, r)
    shadow = _ShadowCounter(n, r, edges)
    checker = make_checker(n, r, fam)
    rng = _sample_rng(cfg.seed, -1)
    cr, cs = math.comb(n, r), math.comb(n, r - 1)
    tx, ty = target

    present: list[bool] = [False] * len(edges)
    stack: list[int] = []  # membership order for checker stack discipline

    def objective(sh: int, m: int) -> float:
        return (sh / cs - tx) ** 2 + (m / cr - ty) ** 2

    cur_m = 0
    cur_obj = objective(0, 0)
    best_state: list[int] = []
    best_obj = cur_obj
    temp = cfg.anneal_t0
    seen: set[tuple[int, int]] = {(0, 0)}
    for _ in range(cfg.anneal_steps):
        idx = rng.randrange(len(edges))
        if present[idx]:
            # removal always keeps freeness; rebuild checker stack lazily
            stack.remove(idx)
            _rebuild(checker, stack, masks)
            shadow.remove(idx)
            present[idx] = False
            cand_m = cur_m - 1
        else:
            if checker.would_create(masks[idx]):
                temp *= cfg.anneal_ratio
                continue
            checker.add(masks[idx])
            stack.append(idx)
            shadow.add(idx)
            present[idx] = True
            cand_m = cur_m + 1
        cand_obj = objective(shadow.size, cand_m)
        delta = cand_obj - cur_obj
        if delta <= 0 or rng.random() < math.exp(-delta / max(temp, 1e-12)):
            cur_m = cand_m
            cur_obj = cand_obj
            seen.add((shadow.size, cur_m))
            if cur_obj < best_obj:
                best_obj = cur_obj
                best_state = [i for i, p in enumerate(present) if p]
        else:  # revert the flip
            if present[idx]:
                stack.remove(idx)
                _rebuild(checker, stack, masks)
                shadow.remove(idx)
                present[idx] = False
            else:
                checker.add(masks[idx])
                stack.append(idx)
                shadow.add(idx)
                present[idx] = True
        temp *= cfg.anneal_ratio
    points = [
        DensityPoint(Fraction(sh, cs), Fraction(m, cr), n, "anneal")
        for sh, m in sorted(seen)
    ]
    return points


def _rebuild(checker, stack: list[int], masks: list[int]) -> None:
    # checkers assume stack discipline; after an arbitrary removal the
    # cheapest correct fix at desk scale is a rebuild
    fresh = make_checker_like(checker)
    for idx in stack:
        fresh.add(masks[idx])
    checker.__dict__.update(fresh.__dict__)


def make_checker_like(checker):
    import copy

    fresh = copy.copy(checker)
    cls = type(checker)
    if cls is _EmptyChecker:
        return _EmptyChecker()
    if cls is _CancellativeChecker:
        return _CancellativeChecker(checker.r)
    if cls is _Cancellative3Checker:
        return _Cancellative3Checker()
    if cls is _CoveringCliqueChecker:
        return _CoveringCliqueChecker(checker.n, checker.r, checker.ell)
    if cls is _NonStarChecker:
        return _NonStarChecker(checker.n, checker.r, checker.ell + 1)
    if cls is _ExpansionChecker:
        return _ExpansionChecker(checker.n, checker.r, checker.ell)
    raise TypeError(f"unknown checker {cls}")


# -- point clouds ----------------------------------------------------------


def point_cloud(
    n: int, r: int, fam: ForbiddenFamily, cfg: SearchConfig = SearchConfig()
) -> ExploreReport:
    """Deduplicated density point cloud with Pareto-maximal witnesses.

    Exact enumeration for exact modes; sampling otherwise.  Witnesses are
    kept only for points attaining the maximum edge count at their shadow
    size.
    """
    t0 = time.monotonic()
    if cfg.mode in ("exact-enumerate", "branch-bound"):
        report = enumerate_free(n, r, fam, cfg)
        report.stats["mode"] = cfg.mode
        return report
    report = ExploreReport(family=fam, n=n, r=r)
    if cfg.mode == "random-maximal":
        pts = random_maximal_free(n, r, fam, cfg)
    else:
        pts = anneal_towards(n, r, fam, (1.0, 1.0), cfg)
    seen = set()
    for p in pts:
        key = (p.x, p.y)
        if key not in seen:
            seen.add(key)
            report.points.append(p)
    report.points.sort(key=lambda p: (p.x, p.y))
    report.stats = {
        "mode": cfg.mode,
        "nodes": len(pts),
        "pruned": 0,
        "partial": False,
        "wall_secs": time.monotonic() - t0,
    }
    return report


# -- Algorithm 1: density reduction preserving the shadow ------------------


def algorithm1_reduce(hg: Hypergraph, d: float | Fraction) -> tuple[Hypergraph, dict]:
    """Remove shadow-preserving edges until the edge density lands in
    (d - 1/C(n,r), d].

    Guards: if the density is already <= d, or the graph has at most
    C(n, r-1) edges, the input is returned unchanged.  Each removed edge has
    all its (r-1)-subsets covered by another edge, so the shadow never
    changes; among removable edges the canonically smallest is taken.
    """
    dd = Fraction(d)
    if not 0 <= dd <= 1:
        raise ValueError(f"threshold must lie in [0,1], got {d}")
    info = {"guard": "none", "removed": 0, "stalled": False}
    n, r = hg.n, hg.r
    if n < r:
        info["guard"] = "size"
        return hg, info
    total = math.comb(n, r)
    if Fraction(hg.m, total) <= dd:
        info["guard"] = "density"
        return hg, info
    if hg.m <= math.comb(n, r - 1):
        info["guard"] = "size"
        return hg, info

    import heapq

    edges = list(hg.edges)
    alive = [True] * len(edges)
    subs = [list(combinations(e, r - 1)) for e in edges]
    cov: dict[tuple[int, ...], int] = {}
    for ss in subs:
        for sub in ss:
            cov[sub] = cov.get(sub, 0) + 1

    def removable(i: int) -> bool:
        return all(cov[sub] >= 2 for sub in subs[i])

    heap = [i for i in range(len(edges)) if removable(i)]
    heapq.heapify(heap)
    m = len(edges)
    # coverage only decreases, so edges never become removable later and a
    # lazily validated heap is exact
    while Fraction(m, total) > dd:
        found = None
        while heap:
            i = heapq.heappop(heap)
            if alive[i] and removable(i):
                found = i
                break
        if found is None:
            info["stalled"] = True
            break
        alive[found] = False
        for sub in subs[found]:
            cov[sub] -= 1
        m -= 1
        info["removed"] += 1
    out = Hypergraph(n, r, tuple(e for i, e in enumerate(edges) if alive[i]))
    return out, info
