import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from feasreg import (
    ForbiddenFamily,
    Hypergraph,
    SearchConfig,
    algorithm1_reduce,
    anneal_towards,
    canonical_form,
    enumerate_free,
    is_free,
    max_edges_given_shadow,
    point_cloud,
    random_maximal_free,
    turan,
)

T3 = ForbiddenFamily.parse("T:3")
EMPTY = ForbiddenFamily.parse("empty")


def max_edges(report) -> int:
    return max(m for m, _ in report.extremal.values())


# -- Algorithm 1 -----------------------------------------------------------


def test_reduce_complete_graph():
    h = Hypergraph.complete(6, 3)
    out, info = algorithm1_reduce(h, Fraction(1, 2))
    assert out.m == 10
    assert out.shadow().edges == h.shadow().edges
    assert info["guard"] == "none" and not info["stalled"]


def test_reduce_density_guard():
    h = turan(6, 3, 3)  # density 2/5
    out, info = algorithm1_reduce(h, 0.5)
    assert out == h
    assert info["guard"] == "density"


def test_reduce_size_guard():
    h = Hypergraph.from_edges(6, 3, [(0, 1, 2), (3, 4, 5)])
    out, info = algorithm1_reduce(h, Fraction(1, 100))
    assert out == h
    assert info["guard"] == "size"


def test_reduce_threshold_validation():
    with pytest.raises(ValueError):
        algorithm1_reduce(Hypergraph.complete(5, 3), 1.5)


def test_reduce_contract_on_random_corpus():
    rng = random.Random(6)
    for _ in range(25):
        n = rng.randint(5, 12)
        edges = [e for e in combinations(range(n), 3) if rng.random() < 0.7]
        h = Hypergraph.from_edges(n, 3, edges)
        shadow_before = h.shadow().edges
        for dk in (2, 5, 8):
            d = Fraction(dk, 10)
            out, info = algorithm1_reduce(h, d)
            assert out.shadow().edges == shadow_before
            total = math.comb(n, 3)
            if info["guard"] == "none" and not info["stalled"]:
                dens = Fraction(out.m, total)
                assert d - Fraction(1, total) < dens <= d
            if info["stalled"]:
                # a removable edge always exists above this size
                assert out.m <= math.comb(n, 2)


# -- exact enumeration -----------------------------------------------------


def test_enumerate_empty_n4_visits_all_subsets():
    rep = enumerate_free(4, 3, EMPTY)
    assert rep.stats["nodes"] == 16
    assert max_edges(rep) == 4


def test_enumerate_cancellative_n5():
    rep = enumerate_free(5, 3, T3)
    assert max_edges(rep) == turan(5, 3, 3).m == 4


def test_enumerate_records_extremal_witnesses():
    rep = enumerate_free(5, 3, T3)
    for s, (m, wit) in rep.extremal.items():
        assert wit.m == m
        assert (wit.shadow().m if wit.m else 0) == s
        assert is_free(wit, T3)[0]


def test_enumerate_matches_across_thread_counts():
    one = enumerate_free(5, 3, T3, SearchConfig(threads=1))
    four = enumerate_free(5, 3, T3, SearchConfig(threads=4))
    assert one.points == four.points
    assert one.stats["nodes"] == four.stats["nodes"]
    assert {s: m for s, (m, _) in one.extremal.items()} == {
        s: m for s, (m, _) in four.extremal.items()
    }


def test_enumerate_node_budget_flags_partial():
    rep = enumerate_free(5, 3, EMPTY, SearchConfig(node_budget=10))
    assert rep.stats["partial"]


def test_iso_reduction_agrees_with_labeled_enumeration():
    for fam in (EMPTY, T3):
        labeled = enumerate_free(4, 3, fam)
        reduced = enumerate_free(4, 3, fam, SearchConfig(iso_reduction=True))
        assert set((p.x, p.y) for p in labeled.points) == set(
            (p.x, p.y) for p in reduced.points
        )
        assert reduced.stats["nodes"] <= labeled.stats["nodes"]


def test_visited_maxima_are_actually_free():
    # spot audit: replay the detector on every extremal witness
    rep = enumerate_free(5, 3, ForbiddenFamily.parse("K:3:4"))
    for _, wit in rep.extremal.values():
        assert is_free(wit, ForbiddenFamily.parse("K:3:4"))[0]


# -- canonical forms -------------------------------------------------------


def test_canonical_form_invariant_under_relabeling():
    h = turan(6, 3, 3)
    perm = [3, 0, 5, 1, 4, 2]
    relabeled = Hypergraph.from_edges(
        6, 3, [tuple(perm[v] for v in e) for e in h.edges]
    )
    assert canonical_form(h) == canonical_form(relabeled)
    other = Hypergraph.from_edges(6, 3, list(h.edges[:-1]))
    assert canonical_form(h) != canonical_form(other)


def test_canonical_form_size_limit():
    with pytest.raises(ValueError):
        canonical_form(Hypergraph.empty(9, 3))


# -- branch and bound ------------------------------------------------------


def test_bnb_cancellative_s12():
    res = max_edges_given_shadow(6, 3, T3, 12)
    assert res.max_edges == 8
    assert canonical_form(res.witness) == canonical_form(turan(6, 3, 3))


def test_bnb_empty_shadow():
    res = max_edges_given_shadow(5, 3, T3, 0)
    assert res.max_edges == 0 and res.witness.m == 0


def test_bnb_kk_tight_cases():
    for m in (3, 4, 5):
        res = max_edges_given_shadow(6, 3, EMPTY, math.comb(m, 2))
        assert res.max_edges == math.comb(m, 3)


def test_bnb_infeasible_marker():
    res = max_edges_given_shadow(6, 3, EMPTY, 1)
    assert not res.feasible and res.complete
    assert res.max_edges is None


def test_bnb_budget_exhaustion_distinct_from_infeasible():
    res = max_edges_given_shadow(6, 3, EMPTY, 15, SearchConfig(node_budget=3))
    assert not res.complete
    # an infeasible-but-complete search is reported differently
    full = max_edges_given_shadow(6, 3, EMPTY, 1)
    assert not full.feasible and full.complete


def test_bnb_input_validation():
    with pytest.raises(ValueError):
        max_edges_given_shadow(6, 3, EMPTY, 16)


def test_bnb_agrees_with_enumeration_oracle():
    for fam_text in ("empty", "T:3", "K:3:4", "D"):
        fam = ForbiddenFamily.parse(fam_text)
        for n in (4, 5):
            rep = enumerate_free(n, 3, fam)
            oracle = {s: m for s, (m, _) in rep.extremal.items()}
            for s in range(math.comb(n, 2) + 1):
                res = max_edges_given_shadow(n, 3, fam, s)
                if s in oracle:
                    assert res.max_edges == oracle[s], (fam_text, n, s)
                else:
                    assert not res.feasible, (fam_text, n, s)


# -- stochastic modes ------------------------------------------------------


def test_random_maximal_reproducible():
    cfg = SearchConfig(mode="random-maximal", seed=5, samples=10)
    a = random_maximal_free(10, 3, T3, cfg)
    b = random_maximal_free(10, 3, T3, cfg)
    assert a == b
    c = random_maximal_free(10, 3, T3, SearchConfig(mode="random-maximal", seed=6, samples=10))
    assert a != c


def test_random_maximal_thread_invariant():
    base = SearchConfig(mode="random-maximal", seed=5, samples=12)
    threaded = SearchConfig(mode="random-maximal", seed=5, samples=12, threads=4)
    assert random_maximal_free(8, 3, T3, base) == random_maximal_free(8, 3, T3, threaded)


def test_random_maximal_empty_family_gives_complete_graph():
    pts = random_maximal_free(6, 3, EMPTY, SearchConfig(mode="random-maximal", seed=1, samples=3))
    assert all(p.as_floats() == (1.0, 1.0) for p in pts)


def test_random_maximal_cancellative_bound():
    n = 30
    pts = random_maximal_free(
        n, 3, T3, SearchConfig(mode="random-maximal", seed=2, samples=25)
    )
    for p in pts:
        x, y = p.as_floats()
        assert y <= x * (1 - x) + 18 / n


def test_random_maximal_expansion_reaches_high_x():
    fam = ForbiddenFamily.parse("H:3:4")
    pts = random_maximal_free(
        12, 3, fam, SearchConfig(mode="random-maximal", seed=3, samples=10)
    )
    assert max(float(p.x) for p in pts) > 0.9


def test_anneal_reaches_target_region():
    pts = anneal_towards(
        5,
        3,
        EMPTY,
        (1.0, 1.0),
        SearchConfig(mode="anneal", seed=4, anneal_steps=5000),
    )
    assert any(p.as_floats() == (1.0, 1.0) for p in pts)


# -- point clouds ----------------------------------------------------------


def test_point_cloud_exact_contains_turan_point():
    rep = point_cloud(6, 3, T3, SearchConfig())
    pairs = {(p.x, p.y) for p in rep.points}
    assert (Fraction(4, 5), Fraction(2, 5)) in pairs


def test_point_cloud_respects_kk_bound():
    rep = point_cloud(5, 3, EMPTY, SearchConfig())
    for p in rep.points:
        s = p.x * math.comb(5, 2)
        m = p.y * math.comb(5, 3)
        assert s.denominator == 1 and m.denominator == 1
        from feasreg import kruskal_katona_max_edges

        assert float(m) <= kruskal_katona_max_edges(int(s), 3, 5) + 1e-9


def test_point_cloud_sampling_mode():
    rep = point_cloud(
        8, 3, T3, SearchConfig(mode="random-maximal", seed=1, samples=20)
    )
    assert rep.points == sorted(rep.points, key=lambda p: (p.x, p.y))
    assert len({(p.x, p.y) for p in rep.points}) == len(rep.points)


def test_projection_of_D_extends_past_two_thirds():
    rep = point_cloud(6, 3, ForbiddenFamily.parse("D"), SearchConfig())
    assert max(float(p.x) for p in rep.points) > 2 / 3


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(mode="nonsense")
