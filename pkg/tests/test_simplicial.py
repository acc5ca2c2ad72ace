import itertools
import random

import networkx as nx
import numpy as np
import pytest

from monlc import RelativePair, SimplicialComplex
from monlc._bits import labels_of, popcount
from monlc.simplicial import (RelativeChainComplex, cohomology_dims, from_squarefree_ideal,
                              intersection, is_cone_with_apex, is_matroid, is_pure, link,
                              relative_cohomology_dims, restrict, star, stanley_reisner_ideal, union)

from conftest import C5_COMPLEX, MATROID_SUITE, NONMATROID_SUITE, random_complex, uniform

# six-vertex projective plane: torsion in H^2 separates characteristic 2 from 3
RP2 = SimplicialComplex.from_faces(6, [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)])


def reduced_euler(faces):
    return sum((-1) ** (popcount(f) - 1) for f in faces)


def test_void_versus_empty():
    V, E = SimplicialComplex.void(3), SimplicialComplex.empty(3)
    assert V.is_void() and not V.is_empty() and V.dim is None and V.f_vector() == []
    assert E.is_empty() and E.dim == -1 and E.f_vector() == [1]
    assert cohomology_dims(V) == {}
    assert cohomology_dims(E) == {-1: 1}


def test_facet_validation():
    with pytest.raises(ValueError):
        SimplicialComplex.from_faces(3, [(1, 4)])


def test_f_vector_and_faces():
    D = SimplicialComplex.from_faces(4, [(1, 2, 3), (3, 4)])
    assert D.f_vector() == [1, 4, 4, 1]
    assert (1, 3) in D and (1, 4) not in D
    assert D.facet_sets() == [(3, 4), (1, 2, 3)]


def test_cycle_and_sphere_cohomology():
    assert cohomology_dims(C5_COMPLEX) == {-1: 0, 0: 0, 1: 1}
    boundary = SimplicialComplex(4, [m for m in range(16) if popcount(m) == 3])
    assert cohomology_dims(boundary)[2] == 1
    assert sum(cohomology_dims(boundary).values()) == 1


def test_characteristic_dependence():
    assert cohomology_dims(RP2, 2) == {-1: 0, 0: 0, 1: 1, 2: 1}
    assert cohomology_dims(RP2, 3) == {-1: 0, 0: 0, 1: 0, 2: 0}
    with pytest.raises(ValueError):
        cohomology_dims(RP2, 4)


def test_relative_pair_validation():
    big = SimplicialComplex.from_faces(3, [(1, 2)])
    small = SimplicialComplex.from_faces(3, [(3,)])
    with pytest.raises(ValueError):
        RelativePair(big, small)


def test_relative_example():
    # interval rel its two endpoints is a circle, reduced H^1 = 1
    big = SimplicialComplex.from_faces(2, [(1, 2)])
    small = SimplicialComplex.from_faces(2, [(1,), (2,)])
    assert relative_cohomology_dims(RelativePair(big, small)) == {-1: 0, 0: 0, 1: 1}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_boundary_squares_to_zero(p):
    rng = random.Random(p)
    for _ in range(25):
        D = random_complex(rng, 6, pmax=4)
        C = RelativeChainComplex(D.faces, p)
        for t in range(0, (C.top or 0) + 1):
            prod = C.boundary(t) @ C.boundary(t + 1) if C.rank_of(t + 1) and C.rank_of(t - 1) else None
            if prod is not None:
                assert not (prod % p).any()


def test_euler_poincare_relative():
    rng = random.Random(11)
    for _ in range(40):
        big = random_complex(rng, 6, pmax=4)
        small = restrict(big, rng.sample(range(1, 7), rng.randint(0, 4)))
        pair = RelativePair(big, small)
        dims = relative_cohomology_dims(pair, 3)
        assert sum((-1) ** j * h for j, h in dims.items()) == reduced_euler(pair.relative_faces)


def test_long_exact_sequence_totals():
    # H~(small) -> H~(big) -> H~(big, small): alternating dimension sums agree and
    # total ranks obey the sub-additivity the long exact sequence forces
    rng = random.Random(12)
    for _ in range(40):
        big = random_complex(rng, 6, pmax=4)
        small = restrict(big, rng.sample(range(1, 7), rng.randint(1, 5)))
        if small.is_void():
            continue
        rel = relative_cohomology_dims(RelativePair(big, small))
        hb, hs = cohomology_dims(big), cohomology_dims(small)
        chi = lambda d: sum((-1) ** j * h for j, h in d.items())
        assert chi(hb) == chi(rel) + chi(hs)
        for j in range(-1, big.dim + 1):
            assert hb.get(j, 0) <= rel.get(j, 0) + hs.get(j, 0)
            assert rel.get(j, 0) <= hb.get(j, 0) + hs.get(j - 1, 0)


def test_graphs_match_networkx():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(2, 7)
        es = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.4]
        D = SimplicialComplex.from_faces(n, [(v,) for v in range(1, n + 1)] + es)
        g = nx.Graph()
        g.add_nodes_from(range(1, n + 1))
        g.add_edges_from(es)
        comps = nx.number_connected_components(g)
        dims = cohomology_dims(D)
        assert dims[0] == comps - 1
        assert dims.get(1, 0) == len(es) - n + comps


def test_link_star_restrict():
    D = SimplicialComplex.from_faces(4, [(1, 2, 3), (3, 4)])
    assert link(D, (3,)) == SimplicialComplex.from_faces(4, [(1, 2), (4,)])
    assert link(D, ()) == D
    assert star(D, (4,)) == SimplicialComplex.from_faces(4, [(3, 4)])
    assert restrict(C5_COMPLEX, [1, 2, 3, 4]) == SimplicialComplex.from_faces(5, [(1, 3), (1, 4), (2, 4)])
    with pytest.raises(ValueError):
        link(D, (1, 4))
    with pytest.raises(ValueError):
        star(D, (1, 4))


def test_link_matches_definition():
    rng = random.Random(14)
    for _ in range(30):
        D = random_complex(rng, 6, pmax=4)
        for F in D.faces:
            L = link(D, F)
            expect = {G for G in range(1 << 6) if not G & F and G | F in D.faces}
            assert L.faces == frozenset(expect)


def test_union_intersection():
    A = SimplicialComplex.from_faces(3, [(1, 2)])
    B = SimplicialComplex.from_faces(3, [(2, 3)])
    assert union(A, B).faces == A.faces | B.faces
    assert intersection(A, B) == SimplicialComplex.from_faces(3, [(2,)])


def test_cones_are_acyclic():
    rng = random.Random(15)
    for _ in range(20):
        D = random_complex(rng, 5, pmax=3)
        cone = SimplicialComplex(6, [f | (1 << 5) for f in D.facets])
        assert is_cone_with_apex(cone, 6)
        assert all(h == 0 for h in cohomology_dims(cone, 3).values())


def test_stanley_reisner_round_trip():
    rng = random.Random(16)
    for _ in range(30):
        D = random_complex(rng, 5)
        I = stanley_reisner_ideal(D)
        assert I.is_squarefree()
        assert from_squarefree_ideal(I) == D
    I = stanley_reisner_ideal(C5_COMPLEX)
    assert sorted(tuple(labels_of(sum(1 << i for i, e in enumerate(g) if e))) for g in I.gens) == \
        [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]


def test_matroid_recognition():
    for name, D in MATROID_SUITE.items():
        assert is_matroid(D), name
        assert is_pure(D)
    for name, D in NONMATROID_SUITE.items():
        assert not is_matroid(D), name
    assert not is_matroid(SimplicialComplex.void(3))
    assert is_matroid(SimplicialComplex.empty(3))
    assert not is_pure(NONMATROID_SUITE["nonpure"])
    assert is_matroid(uniform(3, 6))


def test_chain_basis_is_lexicographic():
    C = RelativeChainComplex(SimplicialComplex.simplex(3).faces, 2)
    assert [labels_of(f) for f in C.bases[1]] == [(1, 2), (1, 3), (2, 3)]
    assert np.array_equal(C.boundary(0), np.ones((1, 3), dtype=np.int64))
