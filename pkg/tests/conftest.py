import itertools
import random

import networkx as nx
import pytest

from monlc import Graph, MonomialIdeal, RingContext, SimplicialComplex
from monlc.graphs import odd_cycle_census
from monlc.simplicial import stanley_reisner_ideal

DATA = __import__("pathlib").Path(__file__).parent / "data"


# ---------------------------------------------------------------- ideals

def random_ideal(rng, n, ngens=None, max_exp=3, squarefree=False):
    ring = RingContext.standard(n)
    k = ngens or rng.randint(1, 4)
    gens = []
    for _ in range(k):
        if squarefree:
            e = tuple(int(rng.random() < 0.5) for _ in range(n))
        else:
            e = tuple(rng.randint(0, max_exp) for _ in range(n))
        if any(e):
            gens.append(e)
    if not gens:
        gens = [tuple(1 if i == 0 else 0 for i in range(n))]
    return MonomialIdeal(ring, gens)


def random_pair(rng, n, squarefree=False, max_exp=2):
    """J ⊆ I, both proper and nonzero, J != I."""
    while True:
        I = random_ideal(rng, n, max_exp=max_exp, squarefree=squarefree)
        K = random_ideal(rng, n, max_exp=max_exp, squarefree=squarefree)
        J = I & K
        if J != I and not J.is_zero():
            return J, I


def monomials_upto(n, deg):
    for e in itertools.product(range(deg + 1), repeat=n):
        if sum(e) <= deg:
            yield e


def random_complex(rng, n, k=None, pmax=3):
    k = k or rng.randint(1, 4)
    faces = []
    for _ in range(k):
        size = rng.randint(1, pmax)
        faces.append(tuple(sorted(rng.sample(range(1, n + 1), min(size, n)))))
    return SimplicialComplex.from_faces(n, faces)


# ---------------------------------------------------------------- complexes

def uniform(r, n):
    return SimplicialComplex.from_faces(n, itertools.combinations(range(1, n + 1), r))


def graphic(n_vertices, edges):
    """Bases of the cycle matroid: maximal spanning forests, ground set = edges."""
    m = len(edges)
    best = []
    for k in range(m, 0, -1):
        for S in itertools.combinations(range(m), k):
            g = nx.Graph()
            g.add_nodes_from(range(n_vertices))
            g.add_edges_from(edges[i] for i in S)
            if nx.is_forest(g):
                best.append([i + 1 for i in S])
        if best:
            break
    return SimplicialComplex.from_faces(m, best)


def partition(blocks):
    n = sum(len(b) for b in blocks)
    return SimplicialComplex.from_faces(n, itertools.product(*blocks))


def cycle_complex(k):
    return SimplicialComplex.from_faces(k, [(i, i % k + 1) for i in range(1, k + 1)])


# Stanley–Reisner complex of I(C5) is again a 5-cycle, on the "skip one" edges
C5_COMPLEX = SimplicialComplex.from_faces(5, [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)])

MATROID_SUITE = {
    "U24": uniform(2, 4),
    "U25": uniform(2, 5),
    "U35": uniform(3, 5),
    "graphic_K4": graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "graphic_diamond": graphic(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    "partition_222": partition([[1, 2], [3, 4], [5, 6]]),
    "partition_32": partition([[1, 2, 3], [4, 5]]),
}
NONMATROID_SUITE = {
    "cycle5": C5_COMPLEX,
    "path4": SimplicialComplex.from_faces(4, [(1, 2), (2, 3), (3, 4)]),
    "two_triangles": SimplicialComplex.from_faces(6, [(1, 2, 3), (4, 5, 6)]),
    "nonpure": SimplicialComplex.from_faces(5, [(1, 2, 3), (4, 5)]),
    "cycle6": cycle_complex(6),
    "cone_cycle5": SimplicialComplex.from_faces(6, [(1, 3, 6), (1, 4, 6), (2, 4, 6), (2, 5, 6),
                                                    (3, 5, 6)]),
}
COMPLEX_SUITE = {**MATROID_SUITE, **NONMATROID_SUITE}


# ---------------------------------------------------------------- graphs

TRIANGLE_PENDANT = Graph(4, [(1, 2), (1, 3), (2, 3), (1, 4)])
TRIANGLE_PENDANT_PATH = Graph(5, [(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)])
TRIANGLE_THREE_PENDANTS = Graph(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
# 5-cycle w1..w5, then x1..x4 as vertices 6..9 (two-value example with r = 2)
TWO_VALUES = Graph(9, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 6), (1, 7), (6, 7),
                       (7, 8), (7, 9)])
# triangle, a path 3-4-5 and two leaves at 5
TRIANGLE_TAIL_FORK = Graph(7, [(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7)])


def random_connected_graph(rng, n, p, nonbipartite=False):
    while True:
        es = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
        G = Graph(n, es)
        if not G.is_connected() or not G.edges:
            continue
        if nonbipartite and odd_cycle_census(G).is_bipartite:
            continue
        return G


def canonical(G):
    """Isomorphism-invariant key, for deduplicating random graphs."""
    return nx.weisfeiler_lehman_graph_hash(nx.Graph(G.edges)), G.n


def nonbipartite_graph_suite(count=15, seed=7):
    rng = random.Random(seed)
    curated = [Graph.cycle(5), Graph.cycle(7), TRIANGLE_PENDANT, TRIANGLE_PENDANT_PATH]
    out, seen = [], set()
    for G in curated:
        out.append(G)
        seen.add(canonical(G))
    while len(out) < count:
        G = random_connected_graph(rng, rng.choice([4, 5, 5, 6, 6, 7]),
                                   rng.choice([0.35, 0.5, 0.65]), nonbipartite=True)
        key = canonical(G)
        if key not in seen:
            seen.add(key)
            out.append(G)
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sr_c5():
    return stanley_reisner_ideal(C5_COMPLEX)


# ---------------------------------------------------------------- acceptance reporting

@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(verdicts, key=lambda k: (int(str(k).rstrip("abcde")), str(k))):
        terminalreporter.write_line(verdicts[key])
