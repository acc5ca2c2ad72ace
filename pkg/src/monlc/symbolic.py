"""Symbolic powers of squarefree monomial ideals and the quotients built from them.

Two families are studied:

* symbolic quotients I^(t)/I^(t+1) of a Stanley–Reisner ideal, whose CM
  property is governed by the matroid property of the complex;
* discrepancy modules I^(t)/I^t of an edge ideal, whose dimension and CM
  property are governed by induced odd cycles and their neighbourhoods.

Every report re-derives the known structural identities on the computed
range and raises TheoremViolation when one of them fails.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from ._bits import labels_of, popcount
from .errors import TheoremViolation, check
from .graphs import Graph, edge_ideal, minimum_odd_cycle, odd_cycle_census
from .local_cohomology import depth_and_cm, dim_quotient_pair, gcm_check, lc_piece
from .ring import (DEFAULT_GENERATOR_CAP, MonomialIdeal, RingContext, colon, colon_ideal,
                   contains, dim_quotient, ideal_power, intersect_all, minimal_primes, radical)
from .simplicial import is_matroid, link, stanley_reisner_ideal

DEFAULT_MAX_T = 5


def generator_cap():
    try:
        return int(os.environ.get("MONLC_GEN_CAP", DEFAULT_GENERATOR_CAP))
    except ValueError:
        return DEFAULT_GENERATOR_CAP


def symbolic_power(I, t, cap=None):
    """I^(t) = ∩ P^t over the minimal primes P of a squarefree ideal I."""
    if int(t) != t or t < 1:
        raise ValueError(f"symbolic power needs t >= 1, got {t}")
    if not I.is_squarefree():
        raise ValueError("symbolic powers are implemented for squarefree ideals only")
    if I.is_zero() or I.is_unit() or t == 1:
        return I
    cap = generator_cap() if cap is None else cap
    primes = [MonomialIdeal.prime(I.ring, P) ** int(t) for P in minimal_primes(I)]
    return intersect_all(primes, cap=cap)


class _PowerCache:
    """Memoized ordinary and symbolic powers of one ideal."""

    def __init__(self, I):
        self.I = I
        self._pow = {1: I}
        self._sym = {1: I}

    def power(self, t):
        if t not in self._pow:
            self._pow[t] = self.power(t - 1) * self.I
        return self._pow[t]

    def symbolic(self, t):
        if t not in self._sym:
            self._sym[t] = symbolic_power(self.I, t)
        return self._sym[t]


# ---------------------------------------------------------------- matroid classification

def locally_matroidal(D):
    """Every link of a nonempty face is a matroid."""
    if D.is_void():
        return False
    return all(is_matroid(link(D, F)) for F in D.faces if F)


def nonmatroid_witness(D, t=2):
    """A multidegree exhibiting H̃^0 ≠ 0 of the symbolic pair (I^(t+1), I^(t)).

    Looks for faces F, G with F \\ G = {u}, G \\ F = {v, w} and neither F + v
    nor F + w a face, takes a facet U of link{u} ∩ link{v,w} containing F ∩ G
    and returns (u, (v, w), U, a) with a = t e_u + e_v + e_w - e_U.
    None when no such configuration exists (for instance when D is a matroid).
    """
    faces = D.faces
    n = D.n
    for F in sorted(faces, key=lambda m: (popcount(m), labels_of(m))):
        for G in sorted(faces, key=lambda m: (popcount(m), labels_of(m))):
            if popcount(F & ~G) != 1 or popcount(G & ~F) != 2:
                continue
            v, w = labels_of(G & ~F)
            if F | 1 << (v - 1) in faces or F | 1 << (w - 1) in faces:
                continue
            u = labels_of(F & ~G)[0]
            ub, vw = 1 << (u - 1), (1 << (v - 1)) | (1 << (w - 1))
            common = [H for H in faces
                      if not H & (ub | vw) and H | ub in faces and H | vw in faces]
            base = F & G
            U = max((H for H in common if H & base == base),
                    key=lambda m: (popcount(m), [-x for x in labels_of(m)]))
            # grow to a facet of the common link
            grown = True
            while grown:
                grown = False
                for H in common:
                    if H & U == U and H != U:
                        U, grown = H, True
                        break
            a = [0] * n
            a[u - 1] = t
            a[v - 1] += 1
            a[w - 1] += 1
            for x in labels_of(U):
                a[x - 1] = -1
            return u, (v, w), labels_of(U), tuple(a)
    return None


@dataclass
class SymbolicRow:
    t: int
    dim: int
    depth: int
    is_CM: bool
    is_gCM: bool
    colon_ok: bool
    rigidity_witness: tuple | None


@dataclass
class SymbolicQuotientReport:
    n: int
    facets: list
    is_matroid: bool
    locally_matroidal: bool
    is_pure: bool
    dim_ring: int
    rows: list = field(default_factory=list)

    def cm_at(self, t):
        return next(r.is_CM for r in self.rows if r.t == t)

    def to_json(self):
        return {
            "facets": self.facets,
            "is_matroid": self.is_matroid,
            "locally_matroidal": self.locally_matroidal,
            "is_pure": self.is_pure,
            "dim_S_mod_I": self.dim_ring,
            "quotients": [{"t": r.t, "dim": r.dim, "depth": r.depth, "is_CM": r.is_CM,
                           "is_gCM": r.is_gCM, "colon_ok": r.colon_ok,
                           "rigidity_witness": list(r.rigidity_witness) if r.rigidity_witness else None}
                          for r in self.rows],
        }


def symbolic_quotient_report(D, t_range=(1, 2, 3), p=2, *, parallel=None):
    """CM verdicts for I^(t)/I^(t+1), I the Stanley–Reisner ideal of D, with cross-checks.

    Asserted on the computed range: I^(t+1) : I^(t) = I, the quotient has the
    dimension of S/I, and matroid <=> CM at every t >= 2 <=> CM at some t >= 2.
    """
    from .simplicial import is_pure
    I = stanley_reisner_ideal(D)
    if I.is_zero():
        raise ValueError("the complex is a full simplex; its Stanley–Reisner ideal is zero")
    if I.is_unit():
        raise ValueError("the void complex has the unit ideal")
    cache = _PowerCache(I)
    dim_ring = dim_quotient(I)
    mat = is_matroid(D)
    rep = SymbolicQuotientReport(D.n, [list(f) for f in D.facet_sets()], mat,
                                 locally_matroidal(D), is_pure(D), dim_ring)
    for t in t_range:
        big, small = cache.symbolic(t + 1), cache.symbolic(t)
        colon_ok = colon_ideal(big, small) == I
        check(colon_ok, f"I^({t + 1}) : I^({t}) differs from I")
        prof = depth_and_cm(big, small, p, parallel=parallel)
        check(prof.dim == dim_ring,
              f"dim I^({t})/I^({t + 1}) = {prof.dim}, expected dim S/I = {dim_ring}")
        rep.rows.append(SymbolicRow(t, prof.dim, prof.depth, prof.is_CM, prof.is_gCM,
                                    colon_ok, prof.rigidity_witness))
    high = [r.is_CM for r in rep.rows if r.t >= 2]
    if high:
        check(all(high) == mat and any(high) == mat,
              f"matroid={mat} but CM verdicts for t>=2 are {high}")
    if mat:
        check(all(r.is_CM for r in rep.rows), "matroid complex with a non-CM symbolic quotient")
    return rep


# ---------------------------------------------------------------- Ratliff and discrepancies

def ratliff_check(I, T):
    """I^{t+1} : I = I^t for 1 <= t <= T."""
    if T < 1:
        raise ValueError("T must be at least 1")
    if I.is_zero():
        return True
    cache = _PowerCache(I)
    return all(colon_ideal(cache.power(t + 1), I) == cache.power(t) for t in range(1, T + 1))


@dataclass
class DiscrepancyRow:
    t: int
    dim: int
    zero: bool
    is_CM: bool | None
    depth: int | None


@dataclass
class DiscrepancyReport:
    graph: Graph
    t_max: int
    rows: list
    observed_t: int
    c: int
    bipartite: bool
    unicyclic: bool
    perfect: bool
    cm_edge_condition: bool | None
    ratliff: bool | None = None

    @property
    def dims(self):
        return tuple(r.dim for r in self.rows)

    def to_json(self):
        return {
            "n": self.graph.n,
            "edges": [list(e) for e in self.graph.edges],
            "t_max": self.t_max,
            "dims": list(self.dims),
            "zero": [r.zero for r in self.rows],
            "is_CM": [r.is_CM for r in self.rows],
            "depth": [r.depth for r in self.rows],
            "observed_stabilization": {"t": self.observed_t, "verified_up_to": self.t_max},
            "c": self.c,
            "bipartite": self.bipartite,
            "unicyclic": self.unicyclic,
            "perfect": self.perfect,
            "cm_edge_condition": self.cm_edge_condition,
            "ratliff": self.ratliff,
            "stability_probe": self.stability_probe(),
        }

    def stability_probe(self):
        """Does the observed stabilization point exceed c + 1?  Reported, never asserted."""
        if self.bipartite:
            return {"bound": None, "candidate_counterexample": False}
        # stabilization after T_max - 1 cannot be told apart from later growth
        return {"bound": self.c + 1,
                "candidate_counterexample": self.c + 1 < self.observed_t < self.t_max}


def _require_connected(G):
    if not G.is_connected():
        raise ValueError("graph must be connected")


def discrepancy_dims(G, T_max, cache=None):
    I = edge_ideal(G)
    cache = cache or _PowerCache(I)
    out = []
    for t in range(1, T_max + 1):
        sym, pw = cache.symbolic(t), cache.power(t)
        d = dim_quotient_pair(pw, sym)
        check((d == -1) == (sym == pw), f"t={t}: dimension {d} disagrees with I^(t) = I^t test")
        out.append(d)
    return out


def discrepancy_report(G, T_max=DEFAULT_MAX_T, p=2, *, cm=True, ratliff=False, parallel=None):
    """Dimensions (and optionally CM flags) of I^(t)/I^t for t = 1..T_max."""
    _require_connected(G)
    if T_max < 2:
        raise ValueError("T_max must be at least 2")
    I = edge_ideal(G)
    cache = _PowerCache(I)
    dims = discrepancy_dims(G, T_max, cache)
    for t in range(1, T_max):
        check(dims[t - 1] <= dims[t], f"dimension drops from t={t} to t={t + 1}: {dims}")
    census = odd_cycle_census(G)
    if census.is_bipartite:
        check(all(d == -1 for d in dims), "bipartite graph with I^(t) != I^t")
    rows = []
    for t, d in enumerate(dims, start=1):
        if cm:
            prof = depth_and_cm(cache.power(t), cache.symbolic(t), p, parallel=parallel)
            rows.append(DiscrepancyRow(t, d, d == -1, prof.is_CM, prof.depth))
        else:
            rows.append(DiscrepancyRow(t, d, d == -1, None, None))
    if cm:
        _check_cm_dimension_persistence(rows)
    observed = T_max
    while observed > 1 and dims[observed - 2] == dims[-1]:
        observed -= 1
    cond4 = None if census.is_bipartite else cm_edge_criterion(G)
    rep = DiscrepancyReport(G, T_max, rows, observed, census.c, census.is_bipartite,
                            census.is_unicyclic, census.is_perfect, cond4)
    if ratliff:
        rep.ratliff = ratliff_check(I, min(3, T_max))
    return rep


def _check_cm_dimension_persistence(rows):
    # a nonzero CM discrepancy at t pins the dimension of every nonzero earlier one
    for r in rows:
        if r.is_CM and not r.zero:
            for s in rows:
                if s.t <= r.t and not s.zero:
                    check(s.dim == r.dim,
                          f"I^(t)/I^t is CM of dim {r.dim} at t={r.t} but dim {s.dim} at t={s.t}")


def unicyclic_stable_dim(G):
    """α(G[V \\ N[C]]) for the unique odd cycle C of a unicyclic graph (α of no vertices is 0)."""
    census = odd_cycle_census(G)
    if not census.is_unicyclic or census.is_bipartite:
        raise ValueError("graph is not unicyclic with an odd cycle")
    C = census.odd_cycles[0]
    outside = ((1 << G.n) - 1) & ~G.closed_mask(C)
    return G.alpha(outside)


def unicyclic_check(G, T_max=None):
    """Closed form versus direct dimensions for t >= s + 1 (2s + 1 the cycle length)."""
    value = unicyclic_stable_dim(G)
    s = (len(odd_cycle_census(G).odd_cycles[0]) - 1) // 2
    T_max = T_max or s + 3
    dims = discrepancy_dims(G, T_max)
    direct = dims[s:]
    return {"formula": value, "from_t": s + 1, "direct": direct,
            "agrees": all(d == value for d in direct)}


def perfect_stable_check(G, T_max=4):
    census = odd_cycle_census(G)
    if not census.is_perfect:
        raise ValueError("graph is not perfect")
    dims = discrepancy_dims(G, T_max)
    return all(d == dims[1] for d in dims[1:])


# ---------------------------------------------------------------- CM discrepancy modules

def cm_edge_criterion(G):
    """Every induced odd cycle C has closed neighbourhood N[C] = [n]."""
    _require_connected(G)
    census = odd_cycle_census(G)
    if census.is_bipartite:
        raise ValueError("graph is bipartite")
    full = (1 << G.n) - 1
    return all(G.closed_mask(C) == full for C in census.odd_cycles)


@dataclass
class EdgeCMReport:
    condition4: bool
    dims: tuple
    cm: tuple
    all_cm: bool
    all_small: bool
    equivalent_on_range: bool
    t0_lower_bound: int
    condition2_checked: bool

    def to_json(self):
        return {
            "condition4": self.condition4,
            "dims": list(self.dims),
            "is_CM": list(self.cm),
            "all_computed_CM": self.all_cm,
            "all_computed_zero_or_dim0": self.all_small,
            "equivalent_on_range": self.equivalent_on_range,
            "t0_lower_bound": self.t0_lower_bound,
            "condition2_checked": self.condition2_checked,
        }


def cm_edge_report(G, T_max=4, p=2, *, parallel=None):
    """Conditions (1), (3), (4) of the CM classification of I^(t)/I^t on t <= T_max.

    Asserted: (4) => all computed quotients are zero or 0-dimensional => all are
    CM.  Whether the reverse directions are already visible on the computed
    range is reported as equivalent_on_range.  Condition (2) needs t >= t0 with
    t0 = max(t(G), c(G)) + 3; since t(G) is only observed, the check uses the
    observed value as a lower bound and runs only when T_max reaches it.
    """
    cond4 = cm_edge_criterion(G)
    rep = discrepancy_report(G, T_max, p, cm=True, parallel=parallel)
    dims = rep.dims
    cm = tuple(r.is_CM for r in rep.rows)
    small = all(d <= 0 for d in dims)
    all_cm = all(cm)
    if cond4:
        check(small, f"N[C] = [n] for all odd cycles yet dims are {dims}")
    if small:
        check(all_cm, f"all quotients have dim <= 0 but CM flags are {cm}")
    t0 = max(rep.observed_t, rep.c) + 3
    cond2_checked = T_max >= t0
    if cond2_checked and any(cm[t0 - 1:]):
        check(cond4, "CM at some t >= t0 but condition (4) fails")
    return EdgeCMReport(cond4, dims, cm, all_cm, small, cond4 == small == all_cm, t0, cond2_checked)


@dataclass
class ColonRadicalResult:
    cycle: tuple
    s: int
    y: int | None
    z: int | None
    checks: dict        # variant -> {"witness", "in_symbolic", "not_in_power", "radical_ok"}

    @property
    def ok(self):
        return all(v["in_symbolic"] and v["not_in_power"] and v["radical_ok"]
                   for v in self.checks.values())

    def to_json(self):
        return {"cycle": list(self.cycle), "s": self.s, "y": self.y, "z": self.z,
                "ok": self.ok, "checks": self.checks}


def _arrange_cycle(G, C, y):
    """Rotate/reflect the cycle so that its first vertex is adjacent to y."""
    k = len(C)
    if y is None:
        return tuple(C)
    for r in range(k):
        for seq in (C[r:] + C[:r], tuple(reversed(C[:r + 1])) + tuple(reversed(C[r + 1:]))):
            if y in G.neighbors(seq[0]):
                return tuple(seq)
    raise ValueError(f"vertex {y} is not adjacent to the cycle")


def colon_radical_identities(G, s, y=None, z=None, cycle=None):
    """Check the radical-of-colon identities attached to a minimum induced odd cycle.

    With C = (c1, ..., c_{2t'+1}) and T = t' + s, every variant checks that a
    witness monomial lies in I^(T) but not in I^T and computes √(I^T : witness):

      NC    x_C (x_{c1} x_{c2})^{s-1}                   ->  I + (N[C])
      NCy   x_C (x_{c1} x_{c2})^{s-2} x_{c1} y           ->  I + (N[C]) + (N(y)),      s >= 2
      NCyz  x_C (x_{c1} x_{c2})^{s-3} x_{c1} y · y z     ->  I + (N[C]) + (N(y, z)),   s >= 3

    y must lie in N[C] \\ C and z in N(y) \\ N[C].  When y (or z) is not given
    the smallest valid choice is used if one exists; variants whose
    hypotheses cannot be met are skipped.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    _require_connected(G)
    C = tuple(cycle) if cycle is not None else minimum_odd_cycle(G)
    if C is None:
        raise ValueError("graph has no induced odd cycle")
    cmask = sum(1 << (v - 1) for v in C)
    NC = G.closed_mask(C)
    ring_n = G.n
    if y is None:
        cands = labels_of(NC & ~cmask)
        y = next((v for v in cands if G.adj[v - 1] & ~NC), cands[0] if cands else None)
    elif not (NC >> (y - 1) & 1) or cmask >> (y - 1) & 1:
        raise ValueError(f"y = {y} is not in N[C] \\ C")
    if y is not None and z is None:
        zs = labels_of(G.adj[y - 1] & ~NC)
        z = zs[0] if zs else None
    elif z is not None and (y is None or not G.adj[y - 1] >> (z - 1) & 1 or NC >> (z - 1) & 1):
        raise ValueError(f"z = {z} is not in N(y) \\ N[C]")
    C = _arrange_cycle(G, C, y)
    tp = (len(C) - 1) // 2
    T = tp + s
    I = edge_ideal(G)
    cache = _PowerCache(I)
    ring = I.ring
    c1, c2 = C[0], C[1]

    def mono(counts):
        e = [0] * ring_n
        for v, k in counts:
            e[v - 1] += k
        return tuple(e)

    base = [(v, 1) for v in C]
    variants = {"NC": (mono(base + [(c1, s - 1), (c2, s - 1)]), NC)}
    if s >= 2 and y is not None:
        variants["NCy"] = (mono(base + [(c1, s - 2), (c2, s - 2), (c1, 1), (y, 1)]),
                           NC | G.adj[y - 1])
    if s >= 3 and y is not None and z is not None:
        variants["NCyz"] = (mono(base + [(c1, s - 3), (c2, s - 3), (c1, 1), (y, 2), (z, 1)]),
                            NC | G.open_mask([y, z]))
    checks = {}
    for name, (w, extra) in variants.items():
        expected = I + MonomialIdeal.prime(ring, labels_of(extra))
        got = radical(colon(cache.power(T), w))
        checks[name] = {
            "witness": list(w),
            "in_symbolic": contains(cache.symbolic(T), w),
            "not_in_power": not contains(cache.power(T), w),
            "radical_ok": got == expected,
        }
    return ColonRadicalResult(C, s, y, z, checks)


# ---------------------------------------------------------------- gCM discrepancy

@dataclass
class GcmDiscrepancyResult:
    t: int
    dim: int
    applicable: bool
    direct: bool                 # box scan: no nonzero piece with G_a ≠ ∅ below dim
    localized: bool | None       # depth bound on every localization (asserted equal to direct)
    single_power: bool | None    # only Q_t(G - N[F]) is CM for every F
    failing: list                # F whose localization breaks the depth bound

    @property
    def single_power_agrees(self):
        return self.single_power is None or self.single_power == self.direct

    def to_json(self):
        return {"t": self.t, "dim": self.dim, "applicable": self.applicable,
                "gcm": self.direct, "gcm_via_localizations": self.localized,
                "single_power_form": self.single_power,
                "single_power_form_agrees": self.single_power_agrees,
                "failing_sets": [list(labels_of(F)) for F in self.failing]}


def _discrepancy_depths(H, t, p):
    """(s, dim, depth) of every nonzero Q_s(H), s = 1..t."""
    if H.n == 0 or not H.edges:
        return []
    I = edge_ideal(H)
    cache = _PowerCache(I)
    out = []
    for s in range(1, t + 1):
        prof = depth_and_cm(cache.power(s), cache.symbolic(s), p, reisner=False, rigidity=False)
        if not prof.zero_module:
            out.append((s, prof.dim, prof.depth))
    return out


def local_discrepancy_cm(G, F, t, p=2):
    """Is Q_t(G - N[F]) CM?  Edgeless or empty remainders give the zero module."""
    H, _labels = G.delete(G.closed_mask(F))
    return all(dep == dim for s, dim, dep in _discrepancy_depths(H, t, p) if s == t)


def gcm_discrepancy_report(G, t, p=2):
    """Generalized CM test for Q_t(G) = I^(t)/I^t, directly and through localizations.

    Inverting x_F for an independent set F puts every x_j, j ∈ N(F), into the
    ideal, so the localization is a Laurent extension of
        ⊕_{s <= t}  Q_s(G - N[F])      (x_{N(F)} acting nilpotently).
    Pieces of H_m(Q_t(G)) with negative support exactly F are pieces of that
    sum shifted by |F|, hence Q_t(G) is gCM iff for every nonempty independent
    F each nonzero Q_s(G - N[F]), s <= t, has depth >= dim Q_t(G) - |F|.
    That localized test is asserted against the direct scan.  The weaker test
    using Q_t(G - N[F]) alone is reported as single_power.
    """
    I = edge_ideal(G)
    cache = _PowerCache(I)
    pw, sym = cache.power(t), cache.symbolic(t)
    d = dim_quotient_pair(pw, sym)
    direct = gcm_check(pw, sym, p)
    if d < 2:
        return GcmDiscrepancyResult(t, d, False, direct, None, None, [])
    failing = []
    single = True
    for F in G.independent_sets():
        H, _labels = G.delete(G.closed_mask(F))
        rows = _discrepancy_depths(H, t, p)
        if any(dep < d - popcount(F) for _s, _dim, dep in rows):
            failing.append(F)
        if any(s == t and dep != dim for s, dim, dep in rows):
            single = False
    localized = not failing
    check(localized == direct,
          f"localized gCM test says {localized}, direct scan says {direct} (t={t})")
    return GcmDiscrepancyResult(t, d, True, direct, localized, single, failing)


def gcm_discrepancy_check(G, t, p=2):
    """Boolean verdict of gcm_discrepancy_report; ValueError when dim Q_t(G) < 2."""
    res = gcm_discrepancy_report(G, t, p)
    if not res.applicable:
        raise ValueError(f"dim Q_{t}(G) = {res.dim} < 2; use gcm_check directly")
    return res.direct
