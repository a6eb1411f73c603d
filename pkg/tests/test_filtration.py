"""Filtered chain complexes: skeletal filtrations, graded pieces, Day
convolution, filtered pairings."""

import json
import random

import pytest

from zilber import _random as zrandom
from zilber import intlinalg as la
from zilber.chains import homology
from zilber.filtration import (FilteredChainComplex, constant_filtration,
                               convolution_associativity_check,
                               convolution_symmetry_check, day_convolution,
                               filtered_ez, filtrations_stagewise_equal,
                               graded_pieces, skeletal_filtration,
                               unit_filtration)
from zilber.simplicial import circle, free_abelian, standard_simplex


def stage_rank(F, p, n):
    return len(la.image_basis(F.stage(p, n)))


def test_skeletal_filtration_of_interval():
    A = free_abelian(standard_simplex(1, 1))
    F = skeletal_filtration(A)
    # normalized ranks (2, 1): stage 0 sees the vertices only
    assert [stage_rank(F, 0, n) for n in range(2)] == [2, 0]
    assert [stage_rank(F, 1, n) for n in range(2)] == [2, 1]


def test_skeletal_stages_are_nested_and_exhaustive():
    A = free_abelian(circle(3))
    F = skeletal_filtration(A)  # constructor validates
    assert F.p_max == 3
    for n in range(4):
        assert stage_rank(F, F.p_max, n) == F.ambient.rank(n)


def test_graded_pieces_of_triangle_concentrated_in_stage_degree():
    A = free_abelian(standard_simplex(2, 2))
    F = skeletal_filtration(A)
    pieces = graded_pieces(F)
    for p, (C, lifts) in enumerate(pieces):
        h = homology(C)
        for n, inv in enumerate(h):
            if n == p:
                assert not inv.torsion
            else:
                assert inv.is_trivial
    # nondegenerate counts 3, 3, 1 appear as the graded homology ranks
    assert [homology(pieces[p][0])[p].free_rank for p in range(3)] \
        == [3, 3, 1]


def test_day_convolution_with_unit_is_identity():
    rng = random.Random(21)
    unit = unit_filtration()
    for _ in range(5):
        F = zrandom.rand_filtration(rng)
        conv = day_convolution(F, unit)
        assert filtrations_stagewise_equal(conv, F)


def test_day_convolution_p_max_is_additive():
    rng = random.Random(22)
    F = zrandom.rand_filtration(rng, p_max=2, top_degree=1)
    G = zrandom.rand_filtration(rng, p_max=3, top_degree=1)
    assert day_convolution(F, G).p_max == 5


def test_convolution_symmetry_and_associativity():
    rng = random.Random(23)
    for _ in range(3):
        F = zrandom.rand_filtration(rng, p_max=2, top_degree=1,
                                    max_total_rank=3)
        G = zrandom.rand_filtration(rng, p_max=2, top_degree=1,
                                    max_total_rank=3)
        H = zrandom.rand_filtration(rng, p_max=2, top_degree=1,
                                    max_total_rank=3)
        assert convolution_symmetry_check(F, G).ok
        assert convolution_associativity_check(F, G, H).ok


def test_filtered_ez_containment_and_unit_stage():
    A = free_abelian(standard_simplex(1, 2))
    B = free_abelian(circle(2))
    P = filtered_ez(A, B)
    assert P.containment_certificate().ok
    assert P.filtration_zero_certificate().ok


def test_filtration_validation_rejects_non_closed_stage():
    from zilber.chains import ChainComplex
    C = ChainComplex([1, 1], {1: [[1]]})
    # stage 0 contains the generator in degree 1 but not its boundary
    stages = [{0: [[]], 1: [[1]]},
              {0: [[1]], 1: [[1]]}]
    with pytest.raises(ValueError):
        FilteredChainComplex(C, stages, 1)


def test_filtration_payload_roundtrip():
    rng = random.Random(24)
    F = zrandom.rand_filtration(rng)
    payload = json.loads(json.dumps(F.to_payload()))
    G = FilteredChainComplex.from_payload(payload)
    assert filtrations_stagewise_equal(F, G)


def test_constant_filtration_is_everything_at_stage_zero():
    rng = random.Random(25)
    C = zrandom.rand_complex(rng)
    F = constant_filtration(C)
    for n in range(C.top_degree + 1):
        assert stage_rank(F, 0, n) == C.rank(n)
