"""Multigraded local cohomology of I/J (J ⊆ I monomial) through relative degree complexes.

    H^i_m(I/J)_a  =  H̃^{i-|G_a|-1}(Δ_a(J), Δ_a(I); F_p)

and the piece is zero outright when G_a is not a face of Δ(√J).  Everything
global (depth, CM, gCM, rigidity) is decided on the finite enumeration box;
see degree_complex.EnumerationBox for why that is enough.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _fp
from ._bits import popcount
from .degree_complex import (certify_outside, classify_pairs, degree_complex, enumeration_box,
                             g_set, ideal_contained, neg_mask, radical_complex_contains,
                             relative_degree_pair)
from .errors import TheoremViolation, check
from .ring import dim_from_masks
from .simplicial import (RelativePair, SimplicialComplex, cohomology_dims_of_faces,
                         RelativeChainComplex, link)

CERTIFY_SAMPLES = 12


def _require_pair(J, I):
    if J.ring != I.ring:
        raise ValueError("mixed ring contexts")
    if not ideal_contained(J, I):
        raise ValueError("J is not contained in I")


# ---------------------------------------------------------------- single pieces

def lc_piece(J, I, i, a, p=2):
    """dim_{F_p} H^i_m(I/J)_a."""
    _require_pair(J, I)
    _fp.check_prime(p)
    a = tuple(int(x) for x in a)
    G = neg_mask(a)
    if not radical_complex_contains(J, G):
        return 0
    j = i - popcount(G) - 1
    if j < -1:
        return 0
    pair = relative_degree_pair(J, I, a)
    rel = pair.pair.relative_faces
    if not rel:
        return 0
    return cohomology_dims_of_faces(rel, p, j).get(j, 0)


def takayama_piece(K, i, a, p=2):
    """dim H^i_m(S/K)_a = dim H̃^{i-|G_a|-1}(Δ_a(K))."""
    _fp.check_prime(p)
    a = tuple(int(x) for x in a)
    D = degree_complex(K, a)
    j = i - popcount(neg_mask(a)) - 1
    if D.is_void() or j < -1:
        return 0
    return cohomology_dims_of_faces(D.faces, p, j).get(j, 0)


def ses_consistency(J, I, i_range=None, a=None, p=2):
    """Alternating-sum check of the long exact sequence of 0 -> I/J -> S/J -> S/I -> 0 at a."""
    _require_pair(J, I)
    i_range = range(0, I.n + 1) if i_range is None else i_range
    total = 0
    for i in i_range:
        total += (-1) ** i * (lc_piece(J, I, i, a, p) - takayama_piece(J, i, a, p)
                              + takayama_piece(I, i, a, p))
    return total == 0


def dim_quotient_pair(J, I):
    """Krull dimension of I/J: max over x^a in G(I) \\ J of dim S/√(J : x^a); -1 if I = J."""
    _require_pair(J, I)
    n = I.n
    rows = I.arr
    if not J.is_zero():
        inside = (J.arr[None, :, :] <= rows[:, None, :]).all(axis=2).any(axis=1)
        rows = rows[~inside]
    if len(rows) == 0:
        return -1
    if J.is_zero():
        return n
    weights = np.int64(1) << np.arange(n, dtype=np.int64)
    best = -1
    for a in rows:
        # √(J : x^a) is generated by x_W with W = {i : g_i > a_i}
        masks = ((J.arr > a) * weights).sum(axis=1)
        best = max(best, dim_from_masks(n, sorted({int(m) for m in masks})))
        if best == n:
            break
    return best


# ---------------------------------------------------------------- box scan

@dataclass
class _ClassHit:
    g: int
    points: np.ndarray
    rel: frozenset
    dims: dict


def _scan_one(J, I, box, G, jmax, p):
    hits = []
    for pts, big, small in classify_pairs(J, I, box, G):
        rel = np.setdiff1d(big, small, assume_unique=True)
        if rel.size == 0:
            continue
        rel = frozenset(int(x) for x in rel)
        hits.append(_ClassHit(G, pts, rel, cohomology_dims_of_faces(rel, p, jmax)))
    return hits


def _scan_task(args):
    return _scan_one(*args)


def _scan(J, I, box, jobs, p, parallel=1):
    """jobs: list of (G, jmax).  Results come back in job order whatever `parallel` is."""
    tasks = [(J, I, box, G, jmax, p) for G, jmax in jobs]
    if parallel and parallel > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as ex:
            chunks = list(ex.map(_scan_task, tasks))
    else:
        chunks = [_scan_task(t) for t in tasks]
    return [h for c in chunks for h in c]


def default_parallel():
    try:
        return max(1, int(os.environ.get("MONLC_PARALLEL", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------- profiles

@dataclass
class CohomologyProfile:
    n: int
    p: int
    dim: int
    depth: int
    is_CM: bool
    is_gCM: bool
    rigidity_witness: tuple | None
    table: dict = field(default_factory=dict)   # (i, a) -> h
    zero_module: bool = False
    complete: bool = False                       # table holds every i, not only i < dim
    reisner_agrees: bool | None = None

    def nonzero(self):
        return sorted(self.table.items())

    def to_json(self):
        return {
            "dim": self.dim,
            "depth": self.depth,
            "is_CM": self.is_CM,
            "is_gCM": self.is_gCM,
            "rigidity_witness": list(self.rigidity_witness) if self.rigidity_witness else None,
            "zero_module": self.zero_module,
            "characteristic": self.p,
            "table_scope": "all" if self.complete else "below_dim",
            "table": [{"i": i, "a": list(a), "h": h} for (i, a), h in self.nonzero()],
        }


def _zero_profile(n, p):
    return CohomologyProfile(n, p, -1, -1, True, True, None, {}, zero_module=True,
                             complete=True, reisner_agrees=True)


def certify_box_samples(J, I, box, count=CERTIFY_SAMPLES, seed=0):
    """Run the outside-box certificates on a deterministic sample of multidegrees."""
    rng = np.random.default_rng(seed)
    ranges = np.array(box.ranges)
    for _ in range(count):
        a = rng.integers(0, ranges + 1)
        neg = rng.random(box.n) < 0.3
        a[neg] = -rng.integers(1, 4, size=int(neg.sum()))
        if box.cone_apex(a) is None:
            # push one free coordinate just past its bound
            free = np.flatnonzero(~neg)
            if free.size:
                k = int(rng.choice(free))
                a[k] = ranges[k] + int(rng.integers(0, 2))
        try:
            certify_outside(J, I, a, box)
        except AssertionError as exc:
            raise TheoremViolation(str(exc)) from None


def depth_and_cm(J, I, p=2, *, full=False, reisner=True, rigidity=True, certify=True,
                 parallel=None, seed=0):
    """Depth, dimension and Cohen-Macaulay type data of I/J over F_p.

    By default only the pieces that can matter for depth are computed (i < dim,
    hence |G_a| <= dim - 1); with full=True every piece in the box is tabulated.
    The independent link-based check runs unless reisner=False, and any
    disagreement raises TheoremViolation.
    """
    _require_pair(J, I)
    p = _fp.check_prime(p)
    n = I.n
    if I == J:
        return _zero_profile(n, p)
    parallel = default_parallel() if parallel is None else parallel
    d = dim_quotient_pair(J, I)
    box = enumeration_box(I, J)
    if certify:
        certify_box_samples(J, I, box, seed=seed)

    jobs = []
    for G in box.gsets():
        if not radical_complex_contains(J, G):
            continue
        k = popcount(G)
        if full:
            jmax = None
        else:
            jmax = d - k - 2            # i < d  <=>  j <= d - |G| - 2
            if rigidity:
                jmax = max(jmax, 0)
            if jmax < -1:
                continue
        jobs.append((G, jmax))
    hits = _scan(J, I, box, jobs, p, parallel)

    order = {G: k for k, G in enumerate(box.gsets())}
    table = {}
    witness = None
    witness_key = None
    h0_bound = n + 1
    for h in hits:
        k = popcount(h.g)
        nz = {j: v for j, v in h.dims.items() if v}
        if not nz:
            continue
        rel_dim = max(popcount(f) for f in h.rel) - 1
        check(rel_dim <= d - k - 1,
              f"relevance bound broken: relative dim {rel_dim} > {d - k - 1} at G={sorted(g_set_of(h.g))}")
        if 0 in nz:
            # H̃^0 at a gives H^{|G_a|+1} != 0; only G_a = ∅ pins depth <= 1
            h0_bound = min(h0_bound, k + 1)
            key = (order[h.g], tuple(int(x) for x in h.points[0]))
            if h.g == 0 and (witness_key is None or key < witness_key):
                witness_key = key
                witness = key[1]
        for j, v in nz.items():
            i = j + k + 1
            if not full and i >= d:
                continue
            for a in h.points:
                table[(i, tuple(int(x) for x in a))] = v

    low = [i for (i, _a) in table if i < d]
    if full:
        check(all(i <= d for (i, _a) in table),
              "nonzero local cohomology above the dimension")
        check(any(i == d for (i, _a) in table),
              f"top local cohomology H^{d} vanishes on the whole box")
    depth = min(low) if low else d
    is_cm = depth == d
    is_gcm = not any(i < d and a_has_negative(a) for (i, a) in table)
    if rigidity:
        check(depth <= h0_bound, f"H̃^0 class forces depth <= {h0_bound}, scan found {depth}")
        if d >= 2 and witness is not None:
            check(depth <= 1, f"H̃^0 witness at {witness} but depth {depth} > 1")

    prof = CohomologyProfile(n, p, d, depth, is_cm, is_gcm, witness, table,
                             complete=full)
    if reisner:
        ok = reisner_link_check(J, I, d, p, hits=hits if not full else None, box=box)
        prof.reisner_agrees = ok == is_cm
        check(ok == is_cm, f"link criterion says CM={ok}, direct scan says CM={is_cm}")
    return prof


def g_set_of(mask):
    return {b + 1 for b in range(mask.bit_length()) if mask >> b & 1}


def a_has_negative(a):
    return any(x < 0 for x in a)


def reisner_link_check(J, I, d, p=2, *, hits=None, box=None):
    """CM test through links: for each box class with |G_a| < d and each face F of
    Δ_a(J) with |G_a| + |F| < d, the pair of links at F has no cohomology below
    d - |G_a| - |F| - 1.

    The complexes are rebuilt from the transversal description at one
    representative per class, independently of the scanner's face sets.
    """
    box = box or enumeration_box(I, J)
    if hits is None:
        jobs = [(G, -1) for G in box.gsets(max_size=d - 1) if radical_complex_contains(J, G)]
        hits = _scan(J, I, box, jobs, p)
    for h in hits:
        k = popcount(h.g)
        if k >= d:
            continue
        a = tuple(int(x) for x in h.points[0])
        big, small = degree_complex(J, a), degree_complex(I, a)
        for F in sorted(big.faces):
            room = d - k - popcount(F) - 1      # need H̃^j = 0 for j < room
            if room <= -1:
                continue
            lk_big = link(big, F)
            lk_small = link(small, F) if F in small.faces else SimplicialComplex.void(big.n)
            rel = lk_big.faces - lk_small.faces
            if not rel:
                continue
            dims = cohomology_dims_of_faces(rel, p, room - 1)
            if any(v for j, v in dims.items() if j < room):
                return False
    return True


def rigidity_scan(J, I, p=2, parallel=None):
    """First box multidegree a with G_a = ∅ (lexicographic) and H̃^0 of the pair nonzero.

    Such an a gives H^1_m(I/J)_a ≠ 0, so depth <= 1.  An H̃^0 class with
    G_a ≠ ∅ only gives H^{|G_a|+1} ≠ 0, which can be the top piece of a CM
    module; those bound the depth by |G_a| + 1 and are not reported.
    """
    return depth_and_cm(J, I, p, reisner=False, parallel=parallel).rigidity_witness


def gcm_check(J, I, p=2, parallel=None):
    """Generalized CM test: no nonzero piece with G_a ≠ ∅ and i < dim.

    A nonzero piece at a with G_a ≠ ∅ repeats at every a' that only differs in
    how negative the G_a coordinates are, so H^i_m would not have finite length;
    conversely pieces with G_a = ∅ live in the finite box.  Hence this is the
    eventual-vanishing characterization made finite.
    """
    _require_pair(J, I)
    p = _fp.check_prime(p)
    if I == J:
        return True
    d = dim_quotient_pair(J, I)
    box = enumeration_box(I, J)
    jobs = []
    for G in box.gsets(max_size=d - 1):
        k = popcount(G)
        if G == 0 or not radical_complex_contains(J, G) or d - k - 2 < -1:
            continue
        jobs.append((G, d - k - 2))
    for h in _scan(J, I, box, jobs, p, default_parallel() if parallel is None else parallel):
        if any(h.dims.values()):
            return False
    return True


# ---------------------------------------------------------------- functoriality

@dataclass
class MultiplicationMap:
    source: tuple
    target: tuple
    i: int
    j: int
    cochain: np.ndarray     # target j-faces x source j-faces, 0/1
    matrix: np.ndarray      # target H̃^j basis x source H̃^j basis
    p: int

    @property
    def shape(self):
        return self.matrix.shape


def _rel_complex(J, I, a, p):
    pair = relative_degree_pair(J, I, a)
    return RelativeChainComplex(pair.pair.relative_faces, p)


def multiplication_map(J, I, i, a, b, p=2):
    """Multiplication by x^b : H^i_m(I/J)_a -> H^i_m(I/J)_{a+b}.

    It is the restriction of relative cochains along Δ_{a+b}(K) ⊆ Δ_a(K):
    a cochain on the source faces is read off on the target faces, which are a
    subset of the source faces or else lie in Δ_a(I) where relative cochains vanish.
    """
    _require_pair(J, I)
    p = _fp.check_prime(p)
    a = tuple(int(x) for x in a)
    b = tuple(int(x) for x in b)
    if any(x < 0 for x in b):
        raise ValueError("b must be a non-negative exponent vector")
    c = tuple(x + y for x, y in zip(a, b))
    if neg_mask(c) != neg_mask(a):
        raise ValueError("multiplication map needs G_{a+b} = G_a")
    j = i - popcount(neg_mask(a)) - 1
    src = _rel_complex(J, I, a, p)
    tgt = _rel_complex(J, I, c, p)
    sf = src.bases.get(j, [])
    tf = tgt.bases.get(j, [])
    pos = {f: k for k, f in enumerate(sf)}
    C = np.zeros((len(tf), len(sf)), dtype=np.int64)
    for r, f in enumerate(tf):
        k = pos.get(f)
        if k is not None:
            C[r, k] = 1
    _, Hs = src.cohomology_basis(j) if sf else (None, np.zeros((0, 0), dtype=np.int64))
    if tf:
        _, Ht = tgt.cohomology_basis(j)
    else:
        Ht = np.zeros((0, 0), dtype=np.int64)
    if len(Hs) == 0 or len(Ht) == 0:
        M = np.zeros((len(Ht), len(Hs)), dtype=np.int64)
    else:
        images = (Hs @ C.T) % p            # rows: restricted cocycles on target faces
        M = tgt.cohomology_coordinates(j, images).T % p
    return MultiplicationMap(a, c, i, j, C, M, p)
