"""Shuffle product and Alexander-Whitney map on normalized complexes."""

import itertools

import pytest

from zilber import intlinalg as la
from zilber.chains import homology, is_homology_isomorphism
from zilber.ez import (alexander_whitney, associativity_check,
                       aw_nabla_identity_check, shuffle_product,
                       symmetry_check, unitality_check)
from zilber.simplicial import circle, free_abelian, product, standard_simplex

SPACES = {
    "pt": lambda D: standard_simplex(0, D),
    "d1": lambda D: standard_simplex(1, D),
    "s1": lambda D: circle(D),
}


def sab(name, D=2):
    return free_abelian(SPACES[name](D))


def test_shuffle_map_is_a_chain_map():
    # construction validates commutation with d; a failure raises
    for a, b in itertools.product(SPACES, repeat=2):
        shuffle_product(sab(a), sab(b))


def test_aw_composed_with_shuffle_is_identity():
    for a, b in itertools.product(SPACES, repeat=2):
        assert aw_nabla_identity_check(sab(a), sab(b)).ok


def test_unitality_on_edge_bidegrees():
    for a, b in itertools.product(SPACES, repeat=2):
        assert unitality_check(sab(a), sab(b)).ok


def test_symmetry_up_to_koszul_sign():
    for a, b in itertools.product(SPACES, repeat=2):
        assert symmetry_check(sab(a), sab(b)).ok


def test_associativity_on_small_triples():
    for a, b, c in [("d1", "d1", "d1"), ("d1", "s1", "d1"),
                    ("s1", "s1", "pt")]:
        assert associativity_check(sab(a), sab(b), sab(c)).ok


def test_shuffle_against_point_is_rank_preserving():
    from zilber.doldkan import is_levelwise_unimodular
    A = sab("s1")
    sp = shuffle_product(A, sab("pt"))
    assert sp.source.ranks == sp.target.ranks
    mats = [sp.map.mat(n) for n in range(3)]
    assert is_levelwise_unimodular(mats, sp.source.ranks)


def test_torus_kunneth_isomorphism():
    A = free_abelian(circle(2))
    sp = shuffle_product(A, A)
    left = homology(sp.source)
    right = homology(sp.target)
    assert [str(x) for x in left] == ["Z", "Z^2", "Z"]
    assert [str(x) for x in right] == ["Z", "Z^2", "Z"]
    assert is_homology_isomorphism(sp.map)


def test_moore_conventions_agree_on_induced_homology():
    A, B = sab("s1"), sab("d1")
    up = shuffle_product(A, B, moore="upper")
    lo = shuffle_product(A, B, moore="lower")
    assert is_homology_isomorphism(up.map) == is_homology_isomorphism(lo.map)
    assert [x.free_rank for x in homology(up.target)] \
        == [x.free_rank for x in homology(lo.target)]
