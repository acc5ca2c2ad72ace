"""Dense Gaussian elimination over the prime field F_p."""

import numpy as np


def is_prime(p):
    if not isinstance(p, (int, np.integer)) or p < 2:
        return False
    p = int(p)
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_prime(p):
    if not is_prime(p):
        raise ValueError(f"characteristic must be a prime, got {p}")
    return int(p)


def rref(M, p):
    """Reduced row echelon form of M mod p: (nonzero rows, pivot columns)."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M, p):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    if p == 2:
        return _rank_gf2(M)
    return len(rref(M, p)[1])


def _rank_gf2(M):
    # rows packed into python ints; XOR elimination
    rows = []
    for row in (np.asarray(M) % 2).astype(bool):
        v = 0
        for j in np.flatnonzero(row):
            v |= 1 << int(j)
        if v:
            rows.append(v)
    basis = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def nullspace(M, p):
    """Basis (as rows) of {x : M x = 0} over F_p."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref(M, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, c in enumerate(piv):
            basis[k, c] = (-R[r, f]) % p
    return basis


def solve_coordinates(basis_rows, vectors, p):
    """Coordinates x with x @ basis_rows == v for each row v of `vectors`.

    `basis_rows` must be linearly independent and every vector must lie in their
    span; raises ValueError otherwise.
    """
    B = np.asarray(basis_rows, dtype=np.int64) % p
    V = np.asarray(vectors, dtype=np.int64) % p
    k = B.shape[0]
    if k == 0:
        if V.size and V.any():
            raise ValueError("vector outside the span of an empty basis")
        return np.zeros((V.shape[0], 0), dtype=np.int64)
    # [B^T | V^T] reduced; pivots must cover the first k columns
    aug = np.hstack([B.T, V.T])
    R, piv = rref(aug, p)
    if piv[:k] != list(range(k)) or any(c >= k for c in piv):
        raise ValueError("basis not independent or vector outside its span")
    return R[:k, k:].T.copy()
