from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

from feasreg import (
    ForbiddenFamily,
    Hypergraph,
    blow_up,
    fano_blowup,
    fano_plane,
    is_free,
    parse_construction,
    star,
    steiner_triple_system,
    sts_blowup,
    turan,
    turan_edge_count,
)
from feasreg.constructions import apportion, balanced_part_sizes


def test_fano_plane_basics():
    f = fano_plane()
    assert f.n == 7 and f.m == 7
    # every pair covered exactly once: a projective plane is a triple system
    for u, v in combinations(range(7), 2):
        assert f.pair_degree(u, v) == 1


def test_star_counts():
    s = star(7, 3)
    assert s.m == comb(6, 2)
    assert all(0 in e for e in s.edges)
    with pytest.raises(ValueError):
        star(2, 3)


def test_balanced_part_sizes():
    assert balanced_part_sizes(7, 3) == [3, 2, 2]
    assert balanced_part_sizes(6, 3) == [2, 2, 2]


def test_turan_counts_match_formula():
    for n in range(3, 13):
        for ell in (3, 4):
            t = turan(n, 3, ell)
            assert t.m == turan_edge_count(n, 3, ell)


def test_turan_partite_structure():
    t = turan(6, 3, 3)
    assert t.m == 8
    # no edge inside a part
    parts = [{0, 1}, {2, 3}, {4, 5}]
    for e in t.edges:
        assert all(len(set(e) & p) <= 1 for p in parts)


def test_turan_is_free_of_its_families():
    for n in range(4, 13):
        t = turan(n, 3, 3)
        assert is_free(t, ForbiddenFamily.parse("K:3:4"))[0]
        assert is_free(t, ForbiddenFamily.parse("H:3:4"))[0]


def test_turan_validation():
    with pytest.raises(ValueError):
        turan(6, 3, 2)


def test_apportion():
    w = [Fraction(1, 7)] * 3 + [Fraction(1, 7)] * 4
    sizes = apportion(w, 10)
    assert sum(sizes) == 10
    assert max(sizes) - min(sizes) <= 1
    with pytest.raises(ValueError):
        apportion([Fraction(0)], 5)


def test_blow_up_of_single_edge_is_turan():
    base = Hypergraph.from_edges(3, 3, [(0, 1, 2)])
    b = blow_up(base, [2, 2, 2])
    assert b == turan(6, 3, 3)


def test_blow_up_identity():
    f = fano_plane()
    assert blow_up(f, [1] * 7) == f


def test_sts_orders():
    with pytest.raises(ValueError):
        steiner_triple_system(6)
    for k in (3, 7, 9, 13, 15, 19, 21):
        s = steiner_triple_system(k)
        assert s.n == k
        assert s.m == k * (k - 1) // 6
        for u, v in combinations(range(k), 2):
            assert s.pair_degree(u, v) == 1


def test_sts_blowup_densities():
    h = sts_blowup(21, 7)
    assert h.shadow_density() == Fraction(9, 10)
    assert h.edge_density() == Fraction(27, 190)


def test_fano_blowup():
    h = fano_blowup(14, Fraction(1, 7))
    assert h.n == 14
    with pytest.raises(ValueError):
        fano_blowup(14, Fraction(1, 2))
    # alpha = 1/7 gives the balanced blow-up: all classes equal
    balanced = blow_up(fano_plane(), [2] * 7)
    assert h == balanced


def test_parse_construction():
    assert parse_construction("turan:6:3:3") == turan(6, 3, 3)
    assert parse_construction("star:3:3").m == 1
    assert parse_construction("sts:7").m == 7
    assert parse_construction("fano-blowup:14:1/7") == fano_blowup(14, Fraction(1, 7))
    assert parse_construction("clique+iso:10:3:1/2").m == comb(5, 3)
    assert parse_construction("turan+iso:12:3:3:1/2").m == turan_edge_count(6, 3, 3)
    with pytest.raises(ValueError):
        parse_construction("nonsense:1:2")
    with pytest.raises(ValueError):
        parse_construction("turan:6:3")
