"""Degree complexes Δ_a(I) of monomial ideals and the finite multidegree box.

For a ∈ Z^n with negative support G_a, a face F of Δ_a(I) avoids G_a and, for
every minimal generator x^b of I, leaves some index i ∉ F ∪ G_a with b_i > a_i
uncovered.  Equivalently the sets W_b = {i ∉ G_a : b_i > a_i} are the
non-faces, so Δ_a(I) is the complex on [n] \\ G_a whose facets are the
complements of the minimal transversals of {W_b}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._bits import full_mask, labels_of, minimal_transversals, popcount, submask_array
from .ring import MonomialIdeal, _divisible_by_any, support_masks
from .simplicial import RelativePair, SimplicialComplex, is_cone_with_apex, link

_CHUNK_ELEMS = 4_000_000


# ---------------------------------------------------------------- multidegrees

def neg_mask(a):
    m = 0
    for i, x in enumerate(a):
        if x < 0:
            m |= 1 << i
    return m


def g_set(a):
    """G_a = {i : a_i < 0} as 1-based labels."""
    return frozenset(i + 1 for i, x in enumerate(a) if x < 0)


def a_minus(a):
    return tuple(-x if x < 0 else 0 for x in a)


def a_plus(a):
    """a + a⁻: negative coordinates raised to zero."""
    return tuple(x if x > 0 else 0 for x in a)


def _check_degree(I, a):
    a = tuple(int(x) for x in a)
    if len(a) != I.n:
        raise ValueError(f"multidegree {a} has wrong length for {I.n} variables")
    return a


# ---------------------------------------------------------------- construction

def _nonface_masks(I, a, G):
    out = []
    for b in I.gens:
        w = 0
        for i, (bi, ai) in enumerate(zip(b, a)):
            if not G >> i & 1 and bi > ai:
                w |= 1 << i
        out.append(w)
    return out


def degree_complex(I, a):
    a = _check_degree(I, a)
    n = I.n
    G = neg_mask(a)
    V = full_mask(n) & ~G
    covers = minimal_transversals(_nonface_masks(I, a, G))
    return SimplicialComplex(n, [V & ~T for T in covers])


def radical_complex_contains(J, gset):
    """Is the face G a face of Δ(√J)?  (No generator support inside G.)"""
    G = gset if isinstance(gset, int) else sum(1 << (v - 1) for v in gset)
    return not any(s & G == s for s in support_masks(J))


@dataclass(frozen=True)
class DegreePair:
    a: tuple
    big: SimplicialComplex      # Δ_a(J)
    small: SimplicialComplex    # Δ_a(I)

    @property
    def g_set(self):
        return g_set(self.a)

    @property
    def pair(self):
        return RelativePair(self.big, self.small)


def ideal_contained(J, I):
    return bool(_divisible_by_any(I.arr, J.arr).all())


def relative_degree_pair(J, I, a):
    """(Δ_a(J), Δ_a(I)) for J ⊆ I; the inclusion small ⊆ big is verified."""
    if J.ring != I.ring:
        raise ValueError("mixed ring contexts")
    if not ideal_contained(J, I):
        raise ValueError("J is not contained in I")
    a = _check_degree(I, a)
    big, small = degree_complex(J, a), degree_complex(I, a)
    return DegreePair(a, big, small)


def link_reduction_check(I, a):
    """Δ_a(I) equals the link of G_a inside Δ_{a⁺}(I)."""
    a = _check_degree(I, a)
    lhs = degree_complex(I, a)
    ambient = degree_complex(I, a_plus(a))
    G = neg_mask(a)
    if G not in ambient.faces:
        return lhs.is_void()
    return lhs == link(ambient, G)


# ---------------------------------------------------------------- the box

@dataclass(frozen=True)
class EnumerationBox:
    """Finite set of multidegrees on which every local cohomology piece is decided.

    rho_i is the largest exponent of x_i among the generators of both ideals.
    A box element puts -1 on a chosen set G and 0 <= a_i < max(rho_i, 1)
    elsewhere.  Outside the box a piece either repeats a box piece (only the
    sign pattern of the negative coordinates matters) or vanishes because both
    complexes are cones over some i with a_i >= rho_i.
    """

    rho: tuple

    @property
    def n(self):
        return len(self.rho)

    @property
    def ranges(self):
        return tuple(max(r, 1) for r in self.rho)

    def __len__(self):
        out = 1
        for r in self.ranges:
            out *= r + 1
        return out

    def gsets(self, max_size=None):
        """Negative supports as masks, ordered by size then lexicographically."""
        n = self.n
        out = []
        top = n if max_size is None else min(max_size, n)
        for k in range(0, top + 1):
            for combo in itertools.combinations(range(n), k):
                out.append(sum(1 << i for i in combo))
        return out

    def points(self, G):
        """All box multidegrees with negative support G, in lexicographic order."""
        axes = [np.array([-1]) if G >> i & 1 else np.arange(r) for i, r in enumerate(self.ranges)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        return grid.reshape(-1, self.n).astype(np.int64)

    def __iter__(self):
        for G in self.gsets():
            for row in self.points(G):
                yield tuple(int(x) for x in row)

    def __contains__(self, a):
        return len(a) == self.n and all(
            x == -1 or 0 <= x < r for x, r in zip(a, self.ranges))

    def normalize(self, a):
        """Box representative of a, or None when a is certified to vanish."""
        return None if self.cone_apex(a) is not None else tuple(-1 if x < 0 else int(x) for x in a)

    def cone_apex(self, a):
        """First 1-based i outside G_a with a_i >= max(rho_i, 1), if any."""
        for i, (x, r) in enumerate(zip(a, self.ranges)):
            if x >= r:
                return i + 1
        return None


def enumeration_box(I, J):
    if I.ring != J.ring:
        raise ValueError("mixed ring contexts")
    rho = tuple(max(x, y) for x, y in zip(I.rho(), J.rho()))
    return EnumerationBox(rho)


def certify_outside(J, I, a, box=None):
    """Check the box-reduction argument at one multidegree a.

    Returns ("cone", i) after verifying both complexes are cones with apex i,
    or ("box", a') after verifying that the pair at a equals the pair at its
    box representative a'.  Raises AssertionError if the certificate fails.
    """
    box = box or enumeration_box(I, J)
    pair = relative_degree_pair(J, I, a)
    apex = box.cone_apex(a)
    if apex is not None:
        for D in (pair.big, pair.small):
            if not is_cone_with_apex(D, apex):
                raise AssertionError(f"degree complex at {tuple(a)} is not a cone over {apex}")
        return ("cone", apex)
    rep = box.normalize(a)
    other = relative_degree_pair(J, I, rep)
    if (other.big, other.small) != (pair.big, pair.small):
        raise AssertionError(f"pair at {tuple(a)} differs from its box representative {rep}")
    return ("box", rep)


# ---------------------------------------------------------------- vectorized scan

def _nonface_mask_array(gens, points, G):
    """(N, m) masks of {i ∉ G : b_i > a_i} for every point a and generator b."""
    N, n = points.shape
    m = len(gens)
    weights = np.array([0 if G >> i & 1 else 1 << i for i in range(n)], dtype=np.int64)
    out = np.empty((N, m), dtype=np.int64)
    if m == 0:
        return out
    step = max(1, _CHUNK_ELEMS // (m * n))
    for s in range(0, N, step):
        blk = points[s:s + step]
        out[s:s + step] = ((gens[None, :, :] > blk[:, None, :]) * weights).sum(axis=2)
    return out


def _face_indicator(W, n):
    """Row-wise face indicator over all 2^n masks given non-face masks W (N, m).

    A mask is a non-face iff it contains some W; the upward closure is a
    superset-sum transform over the n bits.
    """
    N = W.shape[0]
    size = 1 << n
    nonface = np.zeros((N, size), dtype=bool)
    if W.shape[1]:
        rows = np.repeat(np.arange(N), W.shape[1])
        nonface[rows, W.ravel()] = True
    idx = np.arange(size)
    for b in range(n):
        hi = idx[(idx >> b) & 1 == 1]
        nonface[:, hi] |= nonface[:, hi ^ (1 << b)]
    return ~nonface


def classify_pairs(J, I, box, G):
    """Group the box points with negative support G by their degree pair.

    Yields (points, big_faces, small_faces) per distinct pair, where the face
    collections are np arrays of masks and points keep box order.
    """
    n = I.n
    if n > 16:
        raise ValueError("box scans are limited to n <= 16 variables")
    P = box.points(G)
    V = full_mask(n) & ~G
    subs = submask_array(V)
    step = max(1, (1 << 22) // (1 << n))
    keys = []
    for s in range(0, len(P), step):
        blk = P[s:s + step]
        fJ = _face_indicator(_nonface_mask_array(J.arr, blk, G), n)[:, subs]
        fI = _face_indicator(_nonface_mask_array(I.arr, blk, G), n)[:, subs]
        keys.append(np.hstack([np.packbits(fJ, axis=1), np.packbits(fI, axis=1)]))
    keys = np.vstack(keys)
    uniq, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
    inverse = inverse.reshape(-1)
    width = len(subs)
    half = uniq.shape[1] // 2
    for u in np.argsort(first, kind="stable"):
        fJ = np.unpackbits(uniq[u, :half])[:width].astype(bool)
        fI = np.unpackbits(uniq[u, half:])[:width].astype(bool)
        yield P[inverse == u], subs[fJ], subs[fI]


def nonface_count(masks):
    return popcount(masks)


__all__ = [
    "DegreePair", "EnumerationBox", "a_minus", "a_plus", "certify_outside", "classify_pairs",
    "degree_complex", "enumeration_box", "g_set", "ideal_contained", "link_reduction_check",
    "neg_mask", "radical_complex_contains", "relative_degree_pair", "labels_of",
]
