"""Simplicial complexes, relative pairs and reduced relative cohomology over F_p.

Complexes live on the vertex set [n] = {1, ..., n}; faces are int bitmasks with
vertex v stored in bit v-1.  Two degenerate complexes are kept apart on
purpose: the void complex has no faces at all, while the empty complex {∅} has
exactly the empty face.  Their reduced cohomology differs (H̃^{-1}({∅}) = k).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _fp
from ._bits import (full_mask, labels_of, mask_of, maximal_sets, minimal_sets,
                    minimal_transversals, popcount, submasks)
from .ring import MonomialIdeal, RingContext, support_masks


def _as_mask(face):
    if isinstance(face, (int, np.integer)):
        return int(face)
    return mask_of(face)


def face_key(mask):
    """Lexicographic order of faces of equal dimension (by sorted labels)."""
    return labels_of(mask)


class SimplicialComplex:
    __slots__ = ("n", "facets", "_faces")

    def __init__(self, n, facets=()):
        self.n = int(n)
        masks = [_as_mask(f) for f in facets]
        top = full_mask(self.n)
        for m in masks:
            if m & ~top:
                raise ValueError(f"face {labels_of(m)} is not a subset of [{self.n}]")
        self.facets = tuple(sorted(maximal_sets(masks), key=lambda m: (popcount(m), face_key(m))))
        self._faces = None

    @classmethod
    def from_faces(cls, n, faces):
        """Complex generated by the given faces (iterables of 1-based labels)."""
        return cls(n, [mask_of(f) for f in faces])

    @classmethod
    def void(cls, n):
        return cls(n, ())

    @classmethod
    def empty(cls, n):
        """The complex {∅}."""
        return cls(n, (0,))

    @classmethod
    def simplex(cls, n, vertices=None):
        m = full_mask(n) if vertices is None else mask_of(vertices)
        return cls(n, (m,))

    @property
    def faces(self):
        if self._faces is None:
            out = set()
            for f in self.facets:
                if f not in out:
                    out.update(submasks(f))
            self._faces = frozenset(out)
        return self._faces

    def is_void(self):
        return not self.facets

    def is_empty(self):
        return self.facets == (0,)

    @property
    def dim(self):
        """max |F| - 1; -1 for {∅}; None for the void complex."""
        if not self.facets:
            return None
        return max(popcount(f) for f in self.facets) - 1

    @property
    def vertices(self):
        v = 0
        for f in self.facets:
            v |= f
        return v

    def facet_sets(self):
        return [labels_of(f) for f in self.facets]

    def f_vector(self):
        """Face counts by dimension, starting at dimension -1."""
        if self.is_void():
            return []
        counts = [0] * (self.dim + 2)
        for f in self.faces:
            counts[popcount(f)] += 1
        return counts

    def __contains__(self, face):
        return _as_mask(face) in self.faces

    def __le__(self, other):
        return self.n == other.n and all(f in other.faces for f in self.facets)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self):
        return hash((self.n, self.facets))

    def __repr__(self):
        if self.is_void():
            return f"SimplicialComplex(n={self.n}, VOID)"
        if self.is_empty():
            return f"SimplicialComplex(n={self.n}, {{∅}})"
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.facet_sets())
        return f"SimplicialComplex(n={self.n}, facets=[{body}])"


@dataclass(frozen=True)
class RelativePair:
    """A pair (big, small) with small a subcomplex of big."""

    big: SimplicialComplex
    small: SimplicialComplex

    def __post_init__(self):
        if self.big.n != self.small.n:
            raise ValueError("pair complexes live on different vertex sets")
        if not self.small <= self.big:
            raise ValueError("small complex is not a subcomplex of big")

    @property
    def relative_faces(self):
        return self.big.faces - self.small.faces

    @property
    def dim(self):
        rel = self.relative_faces
        return max(popcount(f) for f in rel) - 1 if rel else None


def link(D, face):
    F = _as_mask(face)
    if F not in D.faces:
        raise ValueError(f"{labels_of(F)} is not a face")
    return SimplicialComplex(D.n, [H & ~F for H in D.facets if H & F == F])


def star(D, face):
    F = _as_mask(face)
    if F not in D.faces:
        raise ValueError(f"{labels_of(F)} is not a face")
    return SimplicialComplex(D.n, [H for H in D.facets if H & F == F])


def restrict(D, vertices):
    W = _as_mask(vertices)
    if D.is_void():
        return D
    return SimplicialComplex(D.n, [H & W for H in D.facets])


def union(D, E):
    if D.n != E.n:
        raise ValueError("complexes live on different vertex sets")
    return SimplicialComplex(D.n, D.facets + E.facets)


def intersection(D, E):
    if D.n != E.n:
        raise ValueError("complexes live on different vertex sets")
    return SimplicialComplex(D.n, [a & b for a in D.facets for b in E.facets])


def from_squarefree_ideal(I):
    """Stanley–Reisner complex: faces are the supports containing no generator support."""
    if not I.is_squarefree():
        raise ValueError("Stanley–Reisner correspondence needs a squarefree ideal")
    n = I.n
    if I.is_unit():
        return SimplicialComplex.void(n)
    # facets are complements of minimal vertex covers of the generator supports
    covers = minimal_transversals(support_masks(I))
    return SimplicialComplex(n, [full_mask(n) & ~c for c in covers])


def stanley_reisner_ideal(D, ring=None):
    ring = ring or RingContext.standard(D.n)
    if ring.n != D.n:
        raise ValueError("ring and complex disagree on the number of vertices")
    if D.is_void():
        return MonomialIdeal.unit(ring)
    faces = D.faces
    nonfaces = set()
    for F in faces:
        for v in range(D.n):
            b = 1 << v
            if not F & b and (F | b) not in faces:
                nonfaces.add(F | b)
    gens = [ring.squarefree(labels_of(m)) for m in minimal_sets(nonfaces)]
    return MonomialIdeal(ring, gens)


def is_pure(D):
    return len({popcount(f) for f in D.facets}) <= 1


def is_matroid(D):
    """Pure with facets obeying basis exchange.  The void complex is not a matroid."""
    if D.is_void() or not is_pure(D):
        return False
    facets = set(D.facets)
    for F in facets:
        for G in facets:
            if F == G:
                continue
            only_f, only_g = F & ~G, G & ~F
            for u in labels_of(only_f):
                base = F & ~(1 << (u - 1))
                if not any(base | (1 << (v - 1)) in facets for v in labels_of(only_g)):
                    return False
    return True


def is_cone_with_apex(D, v):
    b = 1 << (v - 1)
    faces = D.faces
    return all(H | b in faces for H in D.facets)


# ---------------------------------------------------------------- cohomology

class RelativeChainComplex:
    """Augmented oriented chain complex C(big)/C(small) with coefficients in F_p.

    Bases are the relative faces of each dimension in lexicographic order; the
    empty face sits in dimension -1 when it is relative.  Orientation follows
    the natural order of [n].
    """

    def __init__(self, relative_faces, p=2):
        self.characteristic = _fp.check_prime(p)
        by_dim = {}
        for f in relative_faces:
            by_dim.setdefault(popcount(f) - 1, []).append(f)
        self.bases = {d: sorted(fs, key=face_key) for d, fs in by_dim.items()}
        self._index = {d: {f: i for i, f in enumerate(fs)} for d, fs in self.bases.items()}

    @classmethod
    def of_pair(cls, pair, p=2):
        return cls(pair.relative_faces, p)

    @property
    def top(self):
        return max(self.bases) if self.bases else None

    def rank_of(self, d):
        return len(self.bases.get(d, ()))

    def boundary(self, t):
        """Matrix of ∂_t : C_t -> C_{t-1} (rows: (t-1)-faces, columns: t-faces)."""
        rows = self.bases.get(t - 1, [])
        cols = self.bases.get(t, [])
        M = np.zeros((len(rows), len(cols)), dtype=np.int64)
        if not rows or not cols:
            return M
        index = self._index[t - 1]
        p = self.characteristic
        for c, F in enumerate(cols):
            sign = 1
            rest = F
            while rest:
                low = rest & -rest
                r = index.get(F ^ low)
                if r is not None:
                    M[r, c] = sign % p
                sign = -sign
                rest ^= low
        return M

    def coboundary(self, j):
        """Matrix of δ^j : C^j -> C^{j+1}; the transpose of ∂_{j+1}."""
        return self.boundary(j + 1).T

    def cohomology_dims(self, jmax=None):
        if not self.bases:
            return {}
        top = self.top
        hi = top if jmax is None else min(top, jmax)
        p = self.characteristic
        ranks = {}
        for t in range(0, hi + 2):
            ranks[t] = _fp.rank(self.boundary(t), p)
        out = {}
        for j in range(-1, hi + 1):
            out[j] = self.rank_of(j) - ranks.get(j + 1, 0) - ranks.get(j, 0)
        return out

    def cohomology_basis(self, j):
        """Canonical representatives of a basis of H^j, plus a basis of B^j.

        Returns (boundaries, classes): rows are cochains on the j-faces.  The
        choice depends only on the relative faces, so restriction matrices built
        from it compose exactly.
        """
        p = self.characteristic
        size = self.rank_of(j)
        if size == 0:
            empty = np.zeros((0, 0), dtype=np.int64)
            return empty, empty
        prev = self.coboundary(j - 1)   # C^{j-1} -> C^j, shape (size, c_{j-1})
        if prev.size:
            B, _ = _fp.rref(prev.T, p)
        else:
            B = np.zeros((0, size), dtype=np.int64)
        Z = _fp.nullspace(self.coboundary(j), p) if self.rank_of(j + 1) else np.eye(size, dtype=np.int64)
        classes = []
        span = B
        r = len(B)
        for z in Z:
            trial = np.vstack([span, z[None, :]])
            if _fp.rank(trial, p) > r:
                span = trial
                r += 1
                classes.append(z)
        H = np.array(classes, dtype=np.int64).reshape(-1, size)
        return B, H

    def cohomology_coordinates(self, j, cocycles):
        """Coordinates of cocycles (rows) in the canonical basis of H^j."""
        B, H = self.cohomology_basis(j)
        cocycles = np.asarray(cocycles, dtype=np.int64).reshape(-1, self.rank_of(j))
        if len(H) == 0:
            return np.zeros((len(cocycles), 0), dtype=np.int64)
        full = _fp.solve_coordinates(np.vstack([B, H]), cocycles, self.characteristic)
        return full[:, len(B):]


@lru_cache(maxsize=200_000)
def _cached_dims(rel_faces, p, jmax):
    return RelativeChainComplex(rel_faces, p).cohomology_dims(jmax)


def cohomology_dims_of_faces(relative_faces, p=2, jmax=None):
    """dim H̃^j of the relative complex with the given relative faces."""
    return dict(_cached_dims(frozenset(relative_faces), int(p), jmax))


def relative_cohomology_dims(pair, p=2):
    """dim_{F_p} H̃^j(big, small) for j = -1 .. dim big (empty dict for a void big)."""
    _fp.check_prime(p)
    if pair.big.is_void():
        return {}
    dims = cohomology_dims_of_faces(pair.relative_faces, p)
    return {j: dims.get(j, 0) for j in range(-1, pair.big.dim + 1)}


def cohomology_dims(D, p=2):
    """Absolute reduced cohomology: the pair (D, void)."""
    return relative_cohomology_dims(RelativePair(D, SimplicialComplex.void(D.n)), p)
