"""Dense exact linear algebra over GF(p).

Matrices are numpy arrays of residues.  Elimination works on float64 copies
so that block updates can go through BLAS: every product of residues is
accumulated exactly as long as ``inner * (p - 1)**2 < 2**53``, which
:func:`_matmul_mod` enforces by splitting the inner dimension.

The reduced row echelon form is computed by a blocked Gauss-Jordan sweep:
each panel of columns is reduced recursively to find its pivots, then the
rest of the matrix is updated with two matrix products.  Tall matrices are
consumed in row chunks and merged into a running echelon basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 101
MAX_PRIME = 1 << 21
_EXACT = float(1 << 52)
_BASE_WIDTH = 16
_TOP_WIDTH = 256
_ROW_CHUNK = 1024


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def check_prime(p: int, degree: int = 0) -> int:
    """Validate a working modulus: prime, larger than the degree, BLAS-exact."""
    p = int(p)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p <= degree:
        raise ValueError(f"prime {p} must exceed the degree {degree}")
    if p >= MAX_PRIME:
        raise ValueError(f"prime {p} too large for exact float64 elimination")
    return p


def _mod(X: np.ndarray, p: int) -> np.ndarray:
    q = X / p
    np.floor(q, out=q)
    q *= p
    X -= q
    return X


def _matmul_mod(X: np.ndarray, Y: np.ndarray, p: int) -> np.ndarray:
    k = X.shape[1]
    step = max(1, int(_EXACT // ((p - 1) ** 2 + 1)))
    if k <= step:
        return _mod(X @ Y, p)
    out = np.zeros((X.shape[0], Y.shape[1]))
    for s in range(0, k, step):
        out += _mod(X[:, s : s + step] @ Y[s : s + step], p)
    return _mod(out, p)


def _inverse(B: np.ndarray, p: int) -> np.ndarray:
    k = B.shape[0]
    aug = np.hstack([B, np.eye(k)])
    r, piv, _ = _gauss_jordan_small(aug, p)
    if r != k or not np.array_equal(piv, np.arange(k)):
        raise ArithmeticError("pivot block is singular")
    return aug[:, k:].copy()


def _gauss_jordan_small(A: np.ndarray, p: int):
    """Unblocked in-place Gauss-Jordan on a narrow matrix."""
    m, n = A.shape
    perm = np.arange(m)
    cols = []
    r = 0
    for j in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, j])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
            perm[[r, i]] = perm[[i, r]]
        inv = pow(int(A[r, j]), -1, p)
        A[r, j:] = _mod(A[r, j:] * inv, p)
        others = np.flatnonzero(A[:, j])
        others = others[others != r]
        if others.size:
            A[others, j:] = _mod(A[others, j:] - np.outer(A[others, j], A[r, j:]), p)
        cols.append(j)
        r += 1
    return r, np.array(cols, dtype=np.int64), perm


def _gauss_jordan(A: np.ndarray, p: int, width: int):
    """In-place reduced row echelon form of a float64 residue matrix.

    Returns ``(rank, pivot_columns, perm)``; afterwards ``A[:rank]`` holds the
    nonzero rows of the RCF, ``A[rank:]`` is zero, and the pivot rows came
    from the original rows ``perm[:rank]``.
    """
    m, n = A.shape
    if width <= _BASE_WIDTH or n <= _BASE_WIDTH:
        return _gauss_jordan_small(A, p)
    perm = np.arange(m)
    pivots = []
    r = 0
    for c0 in range(0, n, width):
        if r == m:
            break
        panel = A[r:, c0 : c0 + width].copy()
        k, cols, sub = _gauss_jordan(panel, p, max(_BASE_WIDTH, width // 4))
        if k == 0:
            continue
        sel = sub[:k]
        rest = np.sort(sub[k:])
        B = A[r + sel][:, c0 + cols]
        W = _matmul_mod(_inverse(B, p), A[r + sel, c0:], p)
        order = np.concatenate([sel, rest])
        A[r:, c0:] = A[r:, c0:][order]
        perm[r:] = perm[r:][order]
        A[r : r + k, c0:] = W
        pc = c0 + cols
        if r:
            top = A[:r, c0:]
            top -= _matmul_mod(A[:r][:, pc], W, p)
            _mod(top, p)
        if r + k < m:
            low = A[r + k :, c0:]
            low -= _matmul_mod(A[r + k :][:, pc], W, p)
            _mod(low, p)
        pivots.extend(pc.tolist())
        r += k
    A[r:] = 0
    return r, np.array(pivots, dtype=np.int64), perm


@dataclass
class Echelon:
    """Nonzero rows of a reduced row echelon form and their pivot columns."""

    rows: np.ndarray
    pivots: np.ndarray
    p: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def cols(self) -> int:
        return self.rows.shape[1]


class RowSpace:
    """Incrementally maintained RCF basis of a growing row space.

    Rows are reduced against the basis as they arrive, so membership tests
    and rank updates never revisit the whole history.
    """

    def __init__(self, cols: int, p: int = DEFAULT_PRIME):
        self.p = p
        self.cols = cols
        self._rows = np.zeros((0, cols))
        self._pivots = np.zeros(0, dtype=np.int64)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> np.ndarray:
        return self._pivots.copy()

    def echelon(self) -> Echelon:
        return Echelon(self._rows.astype(np.int64), self._pivots.copy(), self.p)

    def copy(self) -> RowSpace:
        out = RowSpace(self.cols, self.p)
        out._rows = self._rows.copy()
        out._pivots = self._pivots.copy()
        return out

    def reduce(self, M) -> np.ndarray:
        """Residues of ``M`` after subtracting its projection on the basis pivots."""
        X = np.asarray(M, dtype=np.float64) % self.p
        X = X.reshape(-1, self.cols).copy()
        if self.rank:
            X -= _matmul_mod(X[:, self._pivots], self._rows, self.p)
            _mod(X, self.p)
        return X

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def add(self, M) -> int:
        """Add rows; return the increase in rank."""
        M = np.asarray(M)
        if M.ndim == 1:
            M = M[None, :]
        before = self.rank
        for s in range(0, M.shape[0], _ROW_CHUNK):
            self._merge(self.reduce(M[s : s + _ROW_CHUNK]))
        return self.rank - before

    def _merge(self, X: np.ndarray):
        X = X[X.any(axis=1)]
        if not X.shape[0]:
            return
        k, cols, _ = _gauss_jordan(X, self.p, _TOP_WIDTH)
        if k == 0:
            return
        new = X[:k]
        if self.rank:
            self._rows -= _matmul_mod(self._rows[:, cols], new, self.p)
            _mod(self._rows, self.p)
        rows = np.vstack([self._rows, new])
        pivots = np.concatenate([self._pivots, cols])
        order = np.argsort(pivots, kind="stable")
        self._rows = rows[order]
        self._pivots = pivots[order]


def echelon(M, p: int = DEFAULT_PRIME) -> Echelon:
    """RCF of ``M`` without zero rows."""
    M = np.asarray(M)
    space = RowSpace(M.shape[1], p)
    space.add(M)
    return space.echelon()


def echelon_of_blocks(blocks, cols: int, p: int = DEFAULT_PRIME) -> Echelon:
    """RCF of a matrix given as an iterable of row blocks (never fully materialized)."""
    space = RowSpace(cols, p)
    for block in blocks:
        space.add(block)
    return space.echelon()


def rcf(M, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Row canonical form with the original shape: nonzero rows first, then zero rows."""
    M = np.asarray(M)
    E = echelon(M, p)
    out = np.zeros(M.shape, dtype=np.int64)
    out[: E.rank] = E.rows
    return out


def rank(M, p: int = DEFAULT_PRIME) -> int:
    return echelon(M, p).rank


def nullspace_from_echelon(E: Echelon) -> np.ndarray:
    """Canonical nullspace basis: one vector per free column, pivots solved for."""
    n = E.cols
    free = np.setdiff1d(np.arange(n), E.pivots)
    N = np.zeros((len(free), n), dtype=np.int64)
    N[np.arange(len(free)), free] = 1
    if E.rank:
        N[:, E.pivots] = (-E.rows[:, free].T) % E.p
    return N


def nullspace_canonical_basis(M, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Rows are the canonical nullspace basis vectors of ``M`` (``M @ v = 0``)."""
    return nullspace_from_echelon(echelon(M, p))


def symmetric_rep(x, p: int):
    """Lift residues into ``[-(p-1)/2, (p-1)/2]``."""
    x = np.asarray(x, dtype=np.int64) % p
    out = np.where(x > p // 2, x - p, x)
    return int(out) if out.ndim == 0 else out


def sort_by_length(vectors, p: int = DEFAULT_PRIME) -> list[int]:
    """Stable order of vectors by squared Euclidean length of symmetric lifts.

    Returns the permutation of positions, shortest first.
    """
    vectors = list(vectors)
    if not vectors:
        return []
    lengths = [int(np.sum(symmetric_rep(v, p).astype(object) ** 2)) for v in vectors]
    return sorted(range(len(vectors)), key=lambda i: lengths[i])


# -- snapshot format --------------------------------------------------------------------


def write_snapshot(M, p: int, path) -> None:
    """Write ``rows cols p`` then the row-major residues."""
    M = np.asarray(M, dtype=np.int64) % p
    with open(path, "w") as fh:
        fh.write(f"{M.shape[0]} {M.shape[1]} {p}\n")
        for row in M:
            fh.write(" ".join(map(str, row.tolist())) + "\n")


def read_snapshot(path) -> tuple[np.ndarray, int]:
    with open(path) as fh:
        header = fh.readline().split()
        rows, cols, p = (int(x) for x in header)
        data = np.array(fh.read().split(), dtype=np.int64)
    if data.size != rows * cols:
        raise ValueError(f"snapshot holds {data.size} entries, header says {rows}x{cols}")
    return data.reshape(rows, cols), p
