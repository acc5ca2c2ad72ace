"""Simple graphs on [n], edge ideals and induced-cycle bookkeeping."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from ._bits import full_mask, labels_of, mask_of, popcount
from .ring import MonomialIdeal, RingContext


class Graph:
    """Simple undirected graph on the vertices 1..n."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges=()):
        self.n = int(n)
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        es = set()
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {u}-{v} leaves the vertex set [1..{self.n}]")
            es.add((min(u, v), max(u, v)))
        self.edges = tuple(sorted(es))
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self.adj = tuple(adj)

    @classmethod
    def cycle(cls, k):
        return cls(k, [(i, i % k + 1) for i in range(1, k + 1)])

    @classmethod
    def path(cls, k):
        return cls(k, [(i, i + 1) for i in range(1, k)])

    @classmethod
    def complete(cls, k):
        return cls(k, itertools.combinations(range(1, k + 1), 2))

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        body = ", ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(n={self.n}, edges=[{body}])"

    # -- neighbourhoods (vertex sets are masks or iterables of labels)
    def _m(self, vs):
        return vs if isinstance(vs, int) else mask_of(vs)

    def neighbors(self, v):
        return frozenset(labels_of(self.adj[v - 1]))

    def open_mask(self, vs):
        """N(F): vertices adjacent to some vertex of F."""
        out = 0
        for v in labels_of(self._m(vs)):
            out |= self.adj[v - 1]
        return out

    def closed_mask(self, vs):
        return self._m(vs) | self.open_mask(vs)

    def open_nbhd(self, vs):
        return frozenset(labels_of(self.open_mask(vs)))

    def closed_nbhd(self, vs):
        return frozenset(labels_of(self.closed_mask(vs)))

    def degree(self, v):
        return popcount(self.adj[v - 1])

    def is_independent(self, vs):
        m = self._m(vs)
        return all(not (self.adj[v - 1] & m) for v in labels_of(m))

    def is_connected(self):
        if self.n == 0:
            return True
        return self._component(1, full_mask(self.n)) == full_mask(self.n)

    def _component(self, v, within):
        seen = 1 << (v - 1)
        frontier = seen
        while frontier:
            nxt = 0
            for u in labels_of(frontier):
                nxt |= self.adj[u - 1] & within
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def components(self, within=None):
        left = full_mask(self.n) if within is None else within
        out = []
        while left:
            v = (left & -left).bit_length()
            comp = self._component(v, left)
            out.append(comp)
            left &= ~comp
        return out

    def induced_is_connected(self, mask):
        return mask == 0 or self._component((mask & -mask).bit_length(), mask) == mask

    def alpha(self, within=None):
        """Independence number of the induced subgraph on `within` (0 on the empty set)."""
        return _alpha(self.adj, full_mask(self.n) if within is None else self._m(within))

    def independent_sets(self, nonempty=True):
        """All independent vertex sets as masks, by size then lexicographically."""
        out = []
        for k in range(1 if nonempty else 0, self.n + 1):
            for combo in itertools.combinations(range(1, self.n + 1), k):
                m = mask_of(combo)
                if self.is_independent(m):
                    out.append(m)
        return out

    def induced(self, vs):
        """Induced subgraph G[W], relabelled 1..|W| in increasing order; also the label map."""
        labels = labels_of(self._m(vs))
        pos = {v: k + 1 for k, v in enumerate(labels)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(labels), es), labels

    def delete(self, vs):
        """G - W with the remaining vertices relabelled."""
        return self.induced(full_mask(self.n) & ~self._m(vs))

    def complement(self):
        es = [e for e in itertools.combinations(range(1, self.n + 1), 2)
              if not self.adj[e[0] - 1] >> (e[1] - 1) & 1]
        return Graph(self.n, es)


def _alpha(adj, within):
    best = 0

    def rec(cand, size):
        nonlocal best
        if size + popcount(cand) <= best:
            return
        if not cand:
            best = size
            return
        v = (cand & -cand).bit_length()
        nb = adj[v - 1]
        rec(cand & ~(1 << (v - 1)) & ~nb, size + 1)
        if nb & cand:
            rec(cand & ~(1 << (v - 1)), size)

    rec(within, 0)
    return best


def edge_ideal(G, ring=None):
    ring = ring or RingContext.standard(max(G.n, 1))
    if ring.n != max(G.n, 1):
        raise ValueError("ring size does not match the graph")
    if not G.edges:
        warnings.warn("graph has no edges; its edge ideal is zero", RuntimeWarning, stacklevel=2)
    return MonomialIdeal.from_supports(ring, G.edges)


# ---------------------------------------------------------------- induced cycles

def induced_cycles(G, min_len=3):
    """All vertex sets inducing a cycle (each set is a mask), by size then lexicographically."""
    out = []
    for k in range(max(3, min_len), G.n + 1):
        for combo in itertools.combinations(range(1, G.n + 1), k):
            m = mask_of(combo)
            if all(popcount(G.adj[v - 1] & m) == 2 for v in combo) and G.induced_is_connected(m):
                out.append(m)
    return out


def cycle_order(G, mask):
    """Vertices of an induced cycle in cyclic order, starting at the smallest label."""
    verts = labels_of(mask)
    order = [verts[0]]
    prev = None
    while len(order) < len(verts):
        cur = order[-1]
        nxt = [u for u in labels_of(G.adj[cur - 1] & mask) if u != prev]
        prev = cur
        order.append(min(nxt) if len(order) == 1 else nxt[0])
    return tuple(order)


def is_bipartite(G):
    colour = {}
    for comp in G.components():
        start = (comp & -comp).bit_length()
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in labels_of(G.adj[v - 1]):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def has_odd_hole(G):
    return any(popcount(m) % 2 == 1 for m in induced_cycles(G, min_len=5))


@dataclass(frozen=True)
class CycleCensus:
    odd_cycles: tuple          # cyclically ordered vertex tuples
    c: int                     # longest induced odd cycle has length 2c + 1
    is_bipartite: bool
    is_perfect: bool
    is_unicyclic: bool

    def as_dict(self):
        return {
            "odd_cycles": [list(c) for c in self.odd_cycles],
            "c": self.c,
            "is_bipartite": self.is_bipartite,
            "is_perfect": self.is_perfect,
            "is_unicyclic": self.is_unicyclic,
        }


def odd_cycle_census(G):
    cycles = induced_cycles(G)
    odd = tuple(cycle_order(G, m) for m in cycles if popcount(m) % 2 == 1)
    c = max(((len(o) - 1) // 2 for o in odd), default=0)
    # cycle rank |E| - |V| + #components equals the number of independent cycles
    rank = len(G.edges) - G.n + len(G.components())
    perfect = not has_odd_hole(G) and not has_odd_hole(G.complement())
    return CycleCensus(odd, c, not odd, perfect, rank == 1)


def minimum_odd_cycle(G):
    census = odd_cycle_census(G)
    if not census.odd_cycles:
        return None
    return min(census.odd_cycles, key=lambda c: (len(c), sorted(c)))
