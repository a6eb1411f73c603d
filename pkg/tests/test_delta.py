"""Combinatorial layer: monotone maps, factorizations, shuffles, products."""

import itertools
from math import comb

from zilber.delta import (MonotoneMap, Shuffle, coface, codegeneracy,
                          enumerate_injections, enumerate_monotone,
                          enumerate_surjections, epi_mono_factorize,
                          factor_into_cofaces, factor_into_codegeneracies,
                          identity_map, monotone_count, product_nondegenerate,
                          product_points, shuffle_sign_by_inversions,
                          shuffle_sign_by_products, shuffles)


def test_monotone_enumeration_counts():
    for m in range(4):
        for n in range(4):
            maps = enumerate_monotone(m, n)
            assert len(maps) == comb(m + n + 1, m + 1) == monotone_count(m, n)
            assert len(set(f.values for f in maps)) == len(maps)


def test_monotone_composition_matches_pointwise():
    for f in enumerate_monotone(2, 1):
        for g in enumerate_monotone(1, 3):
            h = g.compose(f)
            assert all(h(i) == g(f(i)) for i in range(3))


def test_simplicial_cofaces_satisfy_cosimplicial_identity():
    # δ_j δ_i = δ_i δ_{j-1} for i < j
    n = 3
    for i in range(n + 1):
        for j in range(i + 1, n + 2):
            lhs = coface(n + 1, j).compose(coface(n, i))
            rhs = coface(n + 1, i).compose(coface(n, j - 1))
            assert lhs == rhs


def test_epi_mono_factorization_unique_and_correct():
    for f in enumerate_monotone(3, 2):
        epi, mono = epi_mono_factorize(f)
        assert epi.is_surjective and mono.is_injective
        assert mono.compose(epi) == f


def test_factor_words_recompose():
    for f in enumerate_surjections(4, 2):
        word = factor_into_codegeneracies(f)
        cur = identity_map(2)
        for j in reversed(word):
            cur = cur.compose(codegeneracy(cur.domain_top, j))
        assert cur == f
    for f in enumerate_injections(1, 4):
        word = factor_into_cofaces(f)
        cur = identity_map(1)
        for i in reversed(word):
            cur = coface(cur.codomain_top + 1, i).compose(cur)
        assert cur == f


def test_surjection_and_injection_counts():
    # surjections [m] ->> [n] count C(m, n); injections C(n+1, m+1)
    for m in range(5):
        for n in range(m + 1):
            assert len(enumerate_surjections(m, n)) == comb(m, n)
    for m in range(4):
        for n in range(m, 5):
            assert len(enumerate_injections(m, n)) == comb(n + 1, m + 1)


def test_shuffle_count_and_signs_agree():
    for p in range(4):
        for q in range(4):
            shs = shuffles(p, q)
            assert len(shs) == comb(p + q, p)
            for s in shs:
                assert s.sign == shuffle_sign_by_products(p, q, s.interleaving)


def test_shuffle_components_are_jointly_strict_chains():
    for s in shuffles(2, 2):
        a, b = s.components()
        chain = s.to_chain()
        assert chain.degree == 4
        assert a.is_surjective and b.is_surjective


def test_product_nondegenerate_counts_square():
    # nondegenerate simplices of the square: 4 vertices, 5 edges, 2 triangles
    assert [len(product_nondegenerate([1, 1], k)) for k in range(4)] \
        == [4, 5, 2, 0]
    assert len(product_points([2, 1])) == 6


def test_top_nondegenerate_count_is_shuffle_count():
    for a, b in [(1, 1), (2, 1), (2, 2)]:
        assert len(product_nondegenerate([a, b], a + b)) == comb(a + b, a)
