"""Vertex subsets of [n] encoded as int bitmasks (vertex v <-> bit v-1)."""

import numpy as np


def mask_of(labels):
    m = 0
    for v in labels:
        if v < 1:
            raise ValueError(f"vertex labels are 1-based, got {v}")
        m |= 1 << (v - 1)
    return m


def labels_of(mask):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask):
    return bin(mask).count("1")


def full_mask(n):
    return (1 << n) - 1


def submasks(mask):
    """All submasks of `mask`, ascending."""
    return sorted(_submasks_desc(mask))


def _submasks_desc(mask):
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def submask_array(mask):
    """np.int64 array of every submask of `mask` (index k <-> bits of k spread onto mask)."""
    bits = [b for b in range(mask.bit_length()) if mask >> b & 1]
    k = len(bits)
    idx = np.arange(1 << k, dtype=np.int64)
    out = np.zeros(1 << k, dtype=np.int64)
    for j, b in enumerate(bits):
        out |= ((idx >> j) & 1) << b
    return out


def minimal_sets(masks):
    """Inclusion-minimal members of a family of masks, sorted."""
    uniq = sorted(set(masks), key=lambda m: (popcount(m), m))
    kept = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept)


def maximal_sets(masks):
    uniq = sorted(set(masks), key=lambda m: (-popcount(m), m))
    kept = []
    for m in uniq:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return sorted(kept)


def minimal_transversals(edges):
    """All inclusion-minimal sets meeting every mask in `edges`.

    An empty edge admits no transversal, so the result is then empty; an empty
    family has the single transversal 0.
    """
    edges = minimal_sets(edges)
    if edges and edges[0] == 0:
        return []
    found = set()
    seen = set()

    def rec(chosen):
        if chosen in seen:
            return
        seen.add(chosen)
        for t in found:
            if t & chosen == t:
                return
        for e in edges:
            if not e & chosen:
                break
        else:
            found.add(chosen)
            return
        rest = e
        while rest:
            low = rest & -rest
            rec(chosen | low)
            rest ^= low

    rec(0)
    return minimal_sets(found)


def min_transversal_size(edges):
    """Size of a smallest transversal (branch and bound); None if an edge is empty."""
    edges = minimal_sets(edges)
    if not edges:
        return 0
    if edges[0] == 0:
        return None
    best = [popcount(_greedy_transversal(edges))]

    def rec(chosen, size):
        if size >= best[0]:
            return
        pick = None
        for e in edges:
            if not e & chosen:
                if pick is None or popcount(e) < popcount(pick):
                    pick = e
                    if popcount(e) == 1:
                        break
        if pick is None:
            best[0] = size
            return
        if size + 1 >= best[0]:
            return
        rest = pick
        while rest:
            low = rest & -rest
            rec(chosen | low, size + 1)
            rest ^= low

    rec(0, 0)
    return best[0]


def _greedy_transversal(edges):
    chosen = 0
    for e in edges:
        if not e & chosen:
            chosen |= e & -e
    return chosen
