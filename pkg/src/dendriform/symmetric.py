"""Symmetric group combinatorics and representation matrices.

Permutations are tuples in one-line notation with values ``1..n``; composition
follows ``(p * q)(i) = p(q(i))``.  Partitions are weakly decreasing tuples and
standard tableaux are tuples of row tuples.

The natural representation of ``S_n`` for a partition is computed from the
combinatorial matrices ``A(pi)`` indexed by pairs of standard tableaux, with
``R(pi) = A(id)^-1 A(pi)``.  Those matrices have integer entries, so they are
kept over the integers and reduced modulo a prime only when needed.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cache, lru_cache
from math import factorial, prod

import numpy as np


class Permutation(tuple):
    """A permutation of ``1..n`` in one-line notation."""

    def __new__(cls, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(other) != len(self):
            raise ValueError("cannot compose permutations of different degree")
        return Permutation(self[j - 1] for j in other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, j in enumerate(self, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def sign(self) -> int:
        return permutation_sign(self)

    def __repr__(self) -> str:
        return f"Permutation({tuple(self)})"


def permutation_sign(word) -> int:
    """Sign of a sequence of distinct integers, by counting cycles."""
    word = list(word)
    order = sorted(word)
    pos = {v: i for i, v in enumerate(order)}
    seen = [False] * len(word)
    parity = 0
    for start in range(len(word)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = pos[word[i]]
            length += 1
        parity += length - 1
    return -1 if parity % 2 else 1


class SymmetricGroup:
    """Lexicographically ordered ``S_n`` with vectorized index arithmetic.

    ``perms[k]`` is the ``k``-th permutation in lex order of its one-line
    word, so ``index`` is the lexicographic rank used by the monomial bases.
    """

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.order = factorial(n)
        self.perms = np.array(list(itertools.permutations(range(1, n + 1))), dtype=np.int64)
        self._weights = (n + 1) ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._codes = self.perms @ self._weights

    def index(self, words) -> np.ndarray | int:
        """Lex rank of one word or of each row of a 2-d array of words."""
        arr = np.asarray(words, dtype=np.int64)
        ranks = np.searchsorted(self._codes, arr @ self._weights)
        return int(ranks) if arr.ndim == 1 else ranks

    def permutation(self, k: int) -> Permutation:
        return Permutation(self.perms[k])

    @lru_cache(maxsize=None)
    def right_multiply(self, k: int) -> np.ndarray:
        """``out[s] = index(perms[s] * perms[k])`` for every ``s``."""
        return self.index(self.perms[:, self.perms[k] - 1])

    @lru_cache(maxsize=None)
    def left_multiply(self, k: int) -> np.ndarray:
        """``out[s] = index(perms[k] * perms[s])`` for every ``s``."""
        return self.index(self.perms[k][self.perms - 1])

    @property
    @cache
    def inverse_index(self) -> np.ndarray:
        inv = np.empty_like(self.perms)
        rows = np.arange(self.order)[:, None]
        inv[rows, self.perms - 1] = np.arange(1, self.n + 1)
        return self.index(inv)

    @property
    @cache
    def signs(self) -> np.ndarray:
        return np.array([permutation_sign(w) for w in self.perms], dtype=np.int64)

    def multiplication_table(self) -> np.ndarray:
        """Full table ``T[a, b] = index(perms[a] * perms[b])``; use only for small n."""
        return np.stack([self.right_multiply(b) for b in range(self.order)], axis=1)


@cache
def symmetric_group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


# -- partitions and tableaux -------------------------------------------------


@cache
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of ``n`` in reverse lexicographic order, from ``(n,)`` to ``(1,)*n``."""
    if n < 1:
        raise ValueError("n must be positive")

    def gen(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def check_partition(shape) -> tuple[int, ...]:
    shape = tuple(int(x) for x in shape)
    if not shape or any(x < 1 for x in shape) or any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"not a partition: {shape}")
    return shape


def parse_partition(text: str) -> tuple[int, ...]:
    """Read a partition written as in the tables, e.g. ``"31111"`` or ``"3,1,1,1,1"``."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    return check_partition(int(x) for x in parts)


def format_partition(shape) -> str:
    return "".join(str(x) for x in shape) if max(shape) < 10 else ",".join(map(str, shape))


def hook_length_dimension(shape) -> int:
    shape = check_partition(shape)
    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])]
    hooks = prod(shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i]))
    return factorial(n) // hooks


@cache
def standard_tableaux(shape) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Standard tableaux of a shape, sorted lexicographically by row-reading word."""
    shape = check_partition(shape)
    n = sum(shape)
    found = []

    def fill(rows, k):
        if k > n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, length in enumerate(shape):
            if len(rows[i]) < length and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(rows, k + 1)
                rows[i].pop()

    fill([[] for _ in shape], 1)
    return tuple(sorted(found, key=lambda t: tuple(itertools.chain.from_iterable(t))))


def apply_to_tableau(perm, tableau):
    """Replace every entry ``k`` of the tableau by ``perm(k)``."""
    return tuple(tuple(perm[e - 1] for e in row) for row in tableau)


def _positions(tableau):
    where = {}
    for r, row in enumerate(tableau):
        for c, e in enumerate(row):
            where[e] = (r, c)
    return where


def _clifton_entry(target, moved) -> int:
    """Coefficient of the tabloid of ``target`` in the polytabloid of ``moved``."""
    target_row = {e: r for e, (r, _) in _positions(target).items()}
    columns: dict[int, list[int]] = {}
    for r, row in enumerate(moved):
        for c, e in enumerate(row):
            columns.setdefault(c, []).append(target_row[e])
    sign = 1
    for rows in columns.values():
        if sorted(rows) != list(range(len(rows))):
            return 0
        sign *= permutation_sign(rows)
    return sign


def clifton_matrix(shape, perm) -> np.ndarray:
    """Integer matrix ``A(perm)`` over the standard tableaux of ``shape``.

    Entry ``(i, j)`` is zero when two entries in one row of ``T_i`` share a
    column of ``perm . T_j``; otherwise it is the sign of the column
    permutation of ``perm . T_j`` that makes its rows agree with ``T_i``.
    """
    tabs = standard_tableaux(shape)
    perm = tuple(perm)
    if len(perm) != sum(shape):
        raise ValueError("permutation degree does not match the partition")
    moved = [apply_to_tableau(perm, t) for t in tabs]
    d = len(tabs)
    A = np.zeros((d, d), dtype=np.int64)
    for i, ti in enumerate(tabs):
        for j, mj in enumerate(moved):
            A[i, j] = _clifton_entry(ti, mj)
    return A


def _integer_inverse(A: np.ndarray) -> np.ndarray:
    d = A.shape[0]
    M = [[Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(d)] for i, row in enumerate(A)]
    for c in range(d):
        piv = next(r for r in range(c, d) if M[r][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(d):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    out = np.zeros((d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            x = M[i][d + j]
            if x.denominator != 1:
                raise ArithmeticError("A(id) has no integral inverse")
            out[i, j] = x.numerator
    return out


@cache
def _identity_inverse(shape) -> np.ndarray:
    n = sum(shape)
    return _integer_inverse(clifton_matrix(shape, range(1, n + 1)))


def natural_rep(shape, perm, p: int | None = None) -> np.ndarray:
    """Young's natural representation matrix ``A(id)^-1 A(perm)``.

    Integer valued; reduced to ``0..p-1`` when a prime is given.  The map is a
    homomorphism: ``natural_rep(s, a * b) == natural_rep(s, a) @ natural_rep(s, b)``.
    """
    shape = check_partition(shape)
    R = _identity_inverse(shape) @ clifton_matrix(shape, perm)
    return R % p if p else R


@cache
def representation_table(shape) -> np.ndarray:
    """``natural_rep`` of every permutation in lex order, shape ``(n!, d, d)``.

    Built from the adjacent transpositions by breadth-first products, which
    is valid because the representation is multiplicative.
    """
    shape = check_partition(shape)
    n = sum(shape)
    G = symmetric_group(n)
    d = len(standard_tableaux(shape))
    table = np.zeros((G.order, d, d), dtype=np.int64)
    done = np.zeros(G.order, dtype=bool)
    ident = G.index(list(range(1, n + 1)))
    table[ident] = np.eye(d, dtype=np.int64)
    done[ident] = True
    gens = []
    for i in range(1, n):
        word = list(range(1, n + 1))
        word[i - 1], word[i] = word[i], word[i - 1]
        gens.append((G.index(word), natural_rep(shape, word)))
    frontier = [ident]
    while frontier:
        nxt = []
        for k in frontier:
            for g, Rg in gens:
                j = G.right_multiply(g)[k]
                if not done[j]:
                    table[j] = table[k] @ Rg
                    done[j] = True
                    nxt.append(j)
        frontier = nxt
    return table


def has_identity_clifton_base(shape) -> bool:
    n = sum(shape)
    A = clifton_matrix(shape, range(1, n + 1))
    return bool(np.array_equal(A, np.eye(len(A), dtype=np.int64)))


# -- group algebra -----------------------------------------------------------


class GroupAlgebraElement:
    """Element of the group algebra ``GF(p) S_n``, stored densely in lex order."""

    def __init__(self, n: int, p: int, coeffs=None):
        self.n = n
        self.p = p
        self.group = symmetric_group(n)
        if coeffs is None:
            coeffs = np.zeros(self.group.order, dtype=np.int64)
        self.coeffs = np.asarray(coeffs, dtype=np.int64) % p

    @classmethod
    def from_terms(cls, terms: dict, n: int, p: int) -> GroupAlgebraElement:
        out = cls(n, p)
        for perm, c in terms.items():
            out.coeffs[out.group.index(list(perm))] += c
        out.coeffs %= p
        return out

    def terms(self) -> dict[Permutation, int]:
        return {self.group.permutation(k): int(self.coeffs[k]) for k in np.flatnonzero(self.coeffs)}

    def __len__(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    def _check(self, other):
        if (other.n, other.p) != (self.n, self.p):
            raise ValueError("group algebra elements over different S_n or primes")

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.n, self.p, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.n, self.p, self.coeffs - other.coeffs)

    def __neg__(self):
        return GroupAlgebraElement(self.n, self.p, -self.coeffs)

    def scale(self, c: int) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, self.p, self.coeffs * (c % self.p))

    def __rmul__(self, c: int):
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = np.zeros(self.group.order, dtype=np.int64)
        # (ab)(s t) += a(s) b(t): iterate over the sparser factor.
        if len(other) <= len(self):
            for t in np.flatnonzero(other.coeffs):
                out[self.group.right_multiply(int(t))] += self.coeffs * other.coeffs[t]
                out %= self.p
        else:
            for s in np.flatnonzero(self.coeffs):
                out[self.group.left_multiply(int(s))] += other.coeffs * self.coeffs[s]
                out %= self.p
        return GroupAlgebraElement(self.n, self.p, out)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return (self.n, self.p) == (other.n, other.p) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.n, self.p, self.coeffs.tobytes()))

    def represent(self, shape, dual: bool = False) -> np.ndarray:
        """Image under the natural representation, reduced mod p.

        With ``dual`` the representation ``pi -> R(pi^-1)^t`` is used; under
        it the elements of :func:`matrix_unit_element` map to elementary
        matrices.
        """
        table = representation_table(tuple(shape)) % self.p
        if dual:
            table = table[self.group.inverse_index].transpose(0, 2, 1)
        return np.tensordot(self.coeffs, table, axes=1) % self.p


def row_group(tableau) -> list[Permutation]:
    return _stabilizer(tableau)


def column_group(tableau) -> list[Permutation]:
    cols = [tuple(row[c] for row in tableau if c < len(row)) for c in range(len(tableau[0]))]
    return _stabilizer(cols)


def _stabilizer(blocks) -> list[Permutation]:
    n = sum(len(b) for b in blocks)
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        word = list(range(1, n + 1))
        for block, img in zip(blocks, images):
            for src, dst in zip(block, img):
                word[src - 1] = dst
        out.append(Permutation(word))
    return out


def tableau_transition(source, target) -> Permutation:
    """The permutation ``s`` with ``s . source == target`` entrywise."""
    word = [0] * sum(len(r) for r in source)
    for rs, rt in zip(source, target):
        for a, b in zip(rs, rt):
            word[a - 1] = b
    return Permutation(word)


def matrix_unit_element(shape, i: int, j: int, p: int) -> GroupAlgebraElement:
    """Group-algebra element ``D_ij`` (indices 1-based) for a partition.

    ``D_ii`` is ``d/n!`` times the row-symmetrized, column-antisymmetrized sum
    over the stabilizers of ``T_i``, and ``D_ij = D_ii s_ij^-1`` where
    ``s_ij T_i = T_j``.  Only partitions whose ``A(id)`` is the identity are
    accepted, since the matrix unit relations are not guaranteed otherwise.
    """
    shape = check_partition(shape)
    tabs = standard_tableaux(shape)
    d = len(tabs)
    if not (1 <= i <= d and 1 <= j <= d):
        raise IndexError(f"tableau indices must lie in 1..{d}")
    if not has_identity_clifton_base(shape):
        raise ValueError(f"A(id) is not the identity for {format_partition(shape)}")
    return _matrix_unit(shape, i, j, p)


@cache
def _diagonal_unit(shape, i: int, p: int) -> GroupAlgebraElement:
    tabs = standard_tableaux(shape)
    n = sum(shape)
    G = symmetric_group(n)
    T = tabs[i - 1]
    scale = len(tabs) * pow(factorial(n), -1, p) % p
    coeffs = np.zeros(G.order, dtype=np.int64)
    for sigma in row_group(T):
        for tau in column_group(T):
            coeffs[G.index(list(sigma * tau))] += tau.sign()
    return GroupAlgebraElement(n, p, coeffs * scale)


@cache
def _matrix_unit(shape, i: int, j: int, p: int) -> GroupAlgebraElement:
    tabs = standard_tableaux(shape)
    n = sum(shape)
    s_inv = tableau_transition(tabs[i - 1], tabs[j - 1]).inverse()
    return _diagonal_unit(shape, i, p) * GroupAlgebraElement.from_terms({s_inv: 1}, n, p)
