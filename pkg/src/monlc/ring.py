"""Monomials and monomial ideals in a fixed polynomial ring k[x1, ..., xn].

A monomial is a plain tuple of non-negative exponents; position k belongs to the
(k+1)-th variable of the ring.  A MonomialIdeal always stores its minimal
generators, so two ideals are equal exactly when their generator tuples are.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ._bits import labels_of, min_transversal_size, minimal_transversals

DEFAULT_GENERATOR_CAP = 50_000
_CHUNK_ELEMS = 4_000_000


@dataclass(frozen=True)
class RingContext:
    names: tuple

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 1:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be distinct: {names}")

    @classmethod
    def standard(cls, n, prefix="x"):
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    @property
    def n(self):
        return len(self.names)

    def one(self):
        return (0,) * self.n

    def var(self, v):
        """The monomial x_v (1-based)."""
        e = [0] * self.n
        e[v - 1] = 1
        return tuple(e)

    def squarefree(self, vertices):
        e = [0] * self.n
        for v in vertices:
            e[v - 1] = 1
        return tuple(e)

    def format_monomial(self, m):
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _as_array(gens, n):
    arr = np.asarray(list(gens), dtype=np.int64)
    if arr.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    return arr.reshape(-1, n)


def _divisible_by_any(divisors, rows):
    """Boolean mask over `rows`: True where some row of `divisors` divides it."""
    out = np.zeros(len(rows), dtype=bool)
    if len(divisors) == 0 or len(rows) == 0:
        return out
    n = rows.shape[1]
    step = max(1, _CHUNK_ELEMS // max(1, len(divisors) * n))
    for s in range(0, len(rows), step):
        blk = rows[s:s + step]
        out[s:s + step] = (divisors[None, :, :] <= blk[:, None, :]).all(axis=2).any(axis=1)
    return out


def _minimal_rows(arr):
    """Minimal elements of a set of exponent vectors under divisibility."""
    if len(arr) <= 1:
        return arr
    arr = np.unique(arr, axis=0)
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    levels, starts = np.unique(deg, return_index=True)
    bounds = list(starts) + [len(arr)]
    kept = arr[:0]
    # distinct monomials of equal degree never divide each other
    for k in range(len(levels)):
        level = arr[bounds[k]:bounds[k + 1]]
        if len(kept):
            level = level[~_divisible_by_any(kept, level)]
        kept = np.vstack([kept, level])
    return kept


def _sorted_gens(arr):
    gens = [tuple(int(x) for x in row) for row in arr]
    gens.sort(key=lambda g: (sum(g), g))
    return tuple(gens)


class MonomialIdeal:
    """A monomial ideal given by its (automatically minimized) generators.

    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    __slots__ = ("ring", "gens", "_arr")

    def __init__(self, ring, gens=(), *, _minimal=False):
        if isinstance(ring, int):
            ring = RingContext.standard(ring)
        self.ring = ring
        arr = _as_array(gens, ring.n)
        if arr.shape[1] != ring.n:
            raise ValueError(f"exponent vectors must have length {ring.n}")
        if (arr < 0).any():
            raise ValueError("exponents must be non-negative")
        if not _minimal:
            arr = _minimal_rows(arr)
        self.gens = _sorted_gens(arr)
        self._arr = None

    @classmethod
    def zero(cls, ring):
        return cls(ring, (), _minimal=True)

    @classmethod
    def unit(cls, ring):
        ring = RingContext.standard(ring) if isinstance(ring, int) else ring
        return cls(ring, [ring.one()], _minimal=True)

    @classmethod
    def from_supports(cls, ring, supports):
        """Squarefree ideal generated by x_F for each vertex set F (1-based)."""
        ring = RingContext.standard(ring) if isinstance(ring, int) else ring
        return cls(ring, [ring.squarefree(F) for F in supports])

    @classmethod
    def prime(cls, ring, vertices):
        ring = RingContext.standard(ring) if isinstance(ring, int) else ring
        return cls(ring, [ring.var(v) for v in vertices])

    @property
    def n(self):
        return self.ring.n

    @property
    def arr(self):
        if self._arr is None:
            a = _as_array(self.gens, self.ring.n)
            a.setflags(write=False)
            self._arr = a
        return self._arr

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return len(self.gens) == 1 and not any(self.gens[0])

    def is_squarefree(self):
        return all(e <= 1 for g in self.gens for e in g)

    def rho(self):
        """Largest exponent of each variable over the minimal generators."""
        if self.is_zero():
            return (0,) * self.n
        return tuple(int(x) for x in self.arr.max(axis=0))

    def __contains__(self, m):
        return contains(self, m)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        return hash((self.ring, self.gens))

    def __len__(self):
        return len(self.gens)

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __pow__(self, t):
        return ideal_power(self, t)

    def __le__(self, other):
        """Ideal containment self ⊆ other."""
        _same_ring(self, other)
        return bool(_divisible_by_any(other.arr, self.arr).all())

    def __repr__(self):
        if self.is_zero():
            return "MonomialIdeal(0)"
        body = ", ".join(self.ring.format_monomial(g) for g in self.gens)
        return f"MonomialIdeal({body})"


def _same_ring(*ideals):
    ring = ideals[0].ring
    for J in ideals[1:]:
        if J.ring != ring:
            raise ValueError(f"mixed ring contexts: {ring.names} vs {J.ring.names}")
    return ring


def minimize(ring, gens):
    """Canonical minimal generating set of the ideal generated by `gens`."""
    if isinstance(ring, int):
        ring = RingContext.standard(ring)
    gens = list(gens)
    for g in gens:
        if len(g) != ring.n:
            raise ValueError(f"monomial {g} does not live in a ring with {ring.n} variables")
    return MonomialIdeal(ring, gens)


def contains(I, m):
    m = np.asarray(m, dtype=np.int64)
    if m.shape != (I.n,):
        raise ValueError(f"monomial {tuple(m)} does not live in a ring with {I.n} variables")
    if I.is_zero():
        return False
    return bool((I.arr <= m).all(axis=1).any())


def contains_many(I, rows):
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, I.n)
    return _divisible_by_any(I.arr, rows)


def ideal_sum(I, J):
    ring = _same_ring(I, J)
    return MonomialIdeal(ring, np.vstack([I.arr, J.arr]))


def ideal_product(I, J):
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(ring)
    prod = (I.arr[:, None, :] + J.arr[None, :, :]).reshape(-1, ring.n)
    return MonomialIdeal(ring, prod)


def ideal_power(I, t):
    if int(t) != t or t < 1:
        raise ValueError(f"power must be a positive integer, got {t}")
    out = I
    for _ in range(int(t) - 1):
        out = ideal_product(out, I)
    return out


def intersect(I, J, cap=None):
    """I ∩ J, generated by lcm(g, h) over generator pairs.

    Generators of one ideal that already lie in the other are kept as they are;
    only the remaining pairs need an lcm.
    """
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return MonomialIdeal.zero(ring)
    A, B = I.arr, J.arr
    a_in = _divisible_by_any(B, A)
    b_in = _divisible_by_any(A, B)
    A2, B2 = A[~a_in], B[~b_in]
    pieces = [A[a_in], B[b_in]]
    if len(A2) and len(B2):
        pieces.append(np.maximum(A2[:, None, :], B2[None, :, :]).reshape(-1, ring.n))
    cands = np.vstack(pieces)
    cap = DEFAULT_GENERATOR_CAP if cap is None else cap
    if len(cands) > cap:
        warnings.warn(f"intersection has {len(cands)} candidate generators (cap {cap})",
                      RuntimeWarning, stacklevel=2)
    return MonomialIdeal(ring, cands)


def intersect_all(ideals, cap=None):
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    ideals.sort(key=len)
    return reduce(lambda a, b: intersect(a, b, cap=cap), ideals)


def colon(I, m):
    """I : x^m, generated by g / gcd(g, x^m)."""
    m = np.asarray(m, dtype=np.int64)
    if m.shape != (I.n,):
        raise ValueError(f"monomial {tuple(m)} does not live in a ring with {I.n} variables")
    if (m < 0).any():
        raise ValueError("colon by a Laurent monomial is not defined")
    if I.is_zero():
        return I
    return MonomialIdeal(I.ring, np.maximum(I.arr - m, 0))


def colon_ideal(I, J, cap=None):
    """I : J = ∩ over generators h of J of (I : h)."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal is undefined")
    return intersect_all((colon(I, h) for h in J.gens), cap=cap)


def radical(I):
    if I.is_zero():
        return I
    return MonomialIdeal(I.ring, (I.arr > 0).astype(np.int64))


def support_masks(I):
    """Bitmasks of the supports of the generators of I."""
    weights = np.int64(1) << np.arange(I.n, dtype=np.int64)
    return [int(x) for x in ((I.arr > 0) * weights).sum(axis=1)]


def minimal_primes(I):
    """Variable sets P (1-based) with (x_i : i ∈ P) a minimal prime of I, sorted."""
    if I.is_unit():
        raise ValueError("the unit ideal has no minimal primes")
    covers = minimal_transversals(support_masks(I))
    return sorted((frozenset(labels_of(c)) for c in covers), key=lambda P: (len(P), sorted(P)))


def dim_quotient(I):
    """Krull dimension of S/I; -1 for the unit ideal, n for the zero ideal."""
    if I.is_unit():
        return -1
    return I.n - min_transversal_size(support_masks(I))


def dim_from_masks(n, masks):
    """dim S/√(x_W : W ∈ masks); -1 if some W is empty (unit ideal)."""
    size = min_transversal_size(masks)
    return -1 if size is None else n - size
