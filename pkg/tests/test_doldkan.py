"""Normalization and its inverse: Moore complexes, round-trips, disks."""

import random

from zilber import _random as zrandom
from zilber import intlinalg as la
from zilber.chains import homology
from zilber.doldkan import (disk, gamma, gamma_normalize_comparison,
                            homotopy_groups, interval_object, is_chain_iso,
                            is_levelwise_unimodular,
                            normalized_gamma_comparison, normalize,
                            unnormalized_chains)
from zilber.simplicial import circle, free_abelian, product, standard_simplex


def test_unnormalized_chains_of_triangle():
    A = free_abelian(standard_simplex(2, 3))
    C = unnormalized_chains(A)
    assert C.ranks == [3, 6, 10, 15]


def test_normalized_ranks_are_nondegenerate_counts():
    for X in (standard_simplex(2, 3), circle(3),
              product(circle(2), circle(2))):
        A = free_abelian(X)
        N = normalize(A).normalized
        assert tuple(N.ranks) == X.nondegenerate_counts()


def test_projection_section_identity():
    A = free_abelian(circle(3))
    res = normalize(A)
    comp = res.projection.compose(res.section)
    for n in range(4):
        assert la.mat_eq(comp.mat(n), la.identity(res.normalized.rank(n)))


def test_both_moore_conventions_give_same_invariants():
    rng = random.Random(2)
    for _ in range(5):
        A = zrandom.rand_simplicial(rng, dim_bound=2)
        hu = homology(normalize(A, moore="upper").normalized)
        hl = homology(normalize(A, moore="lower").normalized)
        assert [(x.free_rank, x.torsion) for x in hu] \
            == [(x.free_rank, x.torsion) for x in hl]


def test_homotopy_groups_of_circle_and_torus():
    assert [str(x) for x in homotopy_groups(free_abelian(circle(2)))] \
        == ["Z", "Z", "0"]
    T = free_abelian(product(circle(2), circle(2)))
    assert [str(x) for x in homotopy_groups(T)] == ["Z", "Z^2", "Z"]


def test_gamma_of_disk_is_interval_object():
    # Γ(D^n) levelwise rank: surjections [m] ->> [n] plus those onto [n-1]
    A = interval_object(1, 3)
    assert A.ranks == [1, 2, 3, 4]
    A._validate()


def test_gamma_output_is_always_valid():
    rng = random.Random(6)
    for _ in range(10):
        C = zrandom.rand_complex(rng, top_degree=3)
        gamma(C, 3)._validate()


def test_normalize_gamma_roundtrip_isomorphism():
    rng = random.Random(7)
    for _ in range(20):
        C = zrandom.rand_complex(rng, top_degree=3)
        f = normalized_gamma_comparison(C, 3)
        assert is_chain_iso(f)


def test_gamma_normalize_roundtrip_unimodular():
    rng = random.Random(8)
    for _ in range(10):
        A = zrandom.rand_simplicial(rng, dim_bound=3)
        comp = gamma_normalize_comparison(A)
        assert is_levelwise_unimodular(comp, A.ranks)


def test_disk_chain_complexes():
    assert disk(0).to_chain_complex().ranks == [1]
    D = disk(2).to_chain_complex()
    assert D.ranks == [0, 1, 1]
    assert all(inv.is_trivial or n == 0
               for n, inv in enumerate(homology(D)))
