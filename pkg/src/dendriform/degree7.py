"""Degree-7 identities, one irreducible representation at a time.

A multilinear element of ``TT_7`` is a tuple ``(X_1, ..., X_96)`` of group
algebra elements, ``X_k`` acting on the TT-type ``k`` with the identity leaf
word; ``S_7`` acts by left multiplication.  The expansion map is right
multiplication by the element ``E_kj`` collecting the terms of type ``k``'s
expansion that have DD-type ``j``.  Applying a representation ``R`` of the
partition turns both into block matrices with ``d x d`` blocks:

* ``L``: one block row per lifted identity, block ``(g, k) = R(X_gk)``;
* ``X``: block ``(k, j) = R(E_kj)``.

The rows ``v`` with ``v X = 0`` are the identities in this component, so the
nullspace of ``X^t`` (``K``) is compared with the row space of ``L``.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache

import numpy as np

from .freealg import enumerate_dd_types, enumerate_tt_types, fill, leaves, shape_of, tt_basis
from .identities import Identity, lifted_identities
from .modlinalg import (
    DEFAULT_PRIME,
    RowSpace,
    check_prime,
    echelon,
    nullspace_from_echelon,
    symmetric_rep,
)
from .products import OperationKind, type_expansion
from .symmetric import (
    check_partition,
    format_partition,
    has_identity_clifton_base,
    hook_length_dimension,
    matrix_unit_element,
    partitions,
    representation_table,
    symmetric_group,
)

log = logging.getLogger(__name__)

DEGREE = 7
_CHUNK_TYPES = 16

# "clifton": R(pi) = A(id)^-1 A(pi).  "dual": R(pi^-1)^t, under which the
# Young-symmetrizer elements D_ij are represented by the elementary matrices.
CONVENTIONS = ("clifton", "dual")
DEFAULT_CONVENTION = "dual"


def _check_shape(shape) -> tuple[int, ...]:
    shape = check_partition(shape)
    if sum(shape) != DEGREE:
        raise ValueError(f"{format_partition(shape)} is not a partition of {DEGREE}")
    return shape


@cache
def _rep_table(shape, convention: str, p: int) -> np.ndarray:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    table = representation_table(shape) % p
    if convention == "dual":
        G = symmetric_group(sum(shape))
        table = np.ascontiguousarray(table[G.inverse_index].transpose(0, 2, 1))
    return table.astype(np.float64)


def _block_sums(rep, keys, perms, coeffs, nkeys: int, p: int) -> np.ndarray:
    """``out[key] = sum of coeff * rep[perm]`` over entries sharing ``key``."""
    d = rep.shape[1]
    out = np.zeros((nkeys, d, d))
    if len(keys) == 0:
        return out
    order = np.argsort(keys, kind="stable")
    keys, perms, coeffs = keys[order], perms[order], coeffs[order]
    starts = np.flatnonzero(np.r_[True, keys[1:] != keys[:-1]])
    terms = rep[perms] * (coeffs % p)[:, None, None]
    out[keys[starts]] = np.add.reduceat(terms, starts, axis=0) % p
    return out


def lifted_generators(op) -> list[Identity]:
    """All liftings to degree 7 of a generating set of the degree-5 identities."""
    return lifted_identities(DEGREE, op)


@cache
def _lifted_terms(op: OperationKind):
    """Flat arrays (generator, type, permutation index, coeff) of the lifted identities."""
    basis = tt_basis(DEGREE)
    gens, types, perms, coeffs = [], [], [], []
    for g, f in enumerate(lifted_generators(op)):
        for m, c in f.terms.items():
            gens.append(g)
            types.append(basis.type_rank[shape_of(m)])
            perms.append(basis.group.index(leaves(m)))
            coeffs.append(c)
    return tuple(np.array(a, dtype=np.int64) for a in (gens, types, perms, coeffs))


@cache
def _expansion_terms(op: OperationKind):
    """Flat arrays (TT-type, DD-type, permutation index, coeff) of the type expansions."""
    G = symmetric_group(DEGREE)
    tts, dds, perms, coeffs = [], [], [], []
    for k, terms in enumerate(type_expansion(DEGREE, op)):
        for j, word, c in terms:
            tts.append(k)
            dds.append(j)
            perms.append(G.index(word))
            coeffs.append(c)
    return tuple(np.array(a, dtype=np.int64) for a in (tts, dds, perms, coeffs))


def build_L_matrix(shape, op, p: int = DEFAULT_PRIME, convention: str = DEFAULT_CONVENTION) -> np.ndarray:
    """Lifted identities as a ``(G d) x (96 d)`` matrix of representation blocks."""
    shape = _check_shape(shape)
    op = OperationKind.parse(op)
    rep = _rep_table(shape, convention, p)
    d = rep.shape[1]
    ntt = len(enumerate_tt_types(DEGREE))
    g, k, perm, c = _lifted_terms(op)
    ngen = len(lifted_generators(op))
    blocks = _block_sums(rep, g * ntt + k, perm, c, ngen * ntt, p)
    return blocks.reshape(ngen, ntt, d, d).transpose(0, 2, 1, 3).reshape(ngen * d, ntt * d)


def x_transpose_blocks(shape, op, p: int = DEFAULT_PRIME, convention: str = DEFAULT_CONVENTION):
    """Yield ``X^t`` in row slabs, a few DD-types at a time."""
    shape = _check_shape(shape)
    op = OperationKind.parse(op)
    rep = _rep_table(shape, convention, p)
    d = rep.shape[1]
    ntt = len(enumerate_tt_types(DEGREE))
    ndd = len(enumerate_dd_types(DEGREE))
    k, j, perm, c = _expansion_terms(op)
    for j0 in range(0, ndd, _CHUNK_TYPES):
        j1 = min(ndd, j0 + _CHUNK_TYPES)
        sel = (j >= j0) & (j < j1)
        blocks = _block_sums(rep, (j[sel] - j0) * ntt + k[sel], perm[sel], c[sel], (j1 - j0) * ntt, p)
        # block (j, k) of X^t is R(E_kj)^t
        yield blocks.reshape(j1 - j0, ntt, d, d).transpose(0, 3, 1, 2).reshape((j1 - j0) * d, ntt * d)


def build_X_matrix(shape, op, p: int = DEFAULT_PRIME, convention: str = DEFAULT_CONVENTION) -> np.ndarray:
    """Expansion blocks as a ``(96 d) x (429 d)`` matrix (materialized in full)."""
    return np.vstack(list(x_transpose_blocks(shape, op, p, convention))).T


@dataclass
class PartitionReport:
    partition: tuple
    d: int
    lifrank: int
    exprank: int
    allrank: int
    new_count: int
    leading_column_diff: list[int]
    checks: dict = field(default_factory=dict)
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "partition": format_partition(self.partition),
            "d": self.d,
            "lifrank": self.lifrank,
            "exprank": self.exprank,
            "allrank": self.allrank,
            "new": self.new_count,
            "leading_column_diff": self.leading_column_diff,
            "checks": self.checks,
        }


@dataclass
class _Analysis:
    report: PartitionReport
    L: object
    K: object


def _analyze(shape, op, p, convention) -> _Analysis:
    t0 = time.perf_counter()
    shape = _check_shape(shape)
    op = OperationKind.parse(op)
    d = hook_length_dimension(shape)
    ntt = len(enumerate_tt_types(DEGREE))
    cols = ntt * d
    L = RowSpace(cols, p)
    L.add(build_L_matrix(shape, op, p, convention))
    X = RowSpace(cols, p)
    for slab in x_transpose_blocks(shape, op, p, convention):
        X.add(slab)
    exprank = X.rank
    K = RowSpace(cols, p)
    K.add(nullspace_from_echelon(X.echelon()))
    Ke, Le = K.echelon(), L.echelon()
    allrank = cols - exprank
    diff = sorted(set(Ke.pivots.tolist()) - set(Le.pivots.tolist()))
    contained = not K.reduce(Le.rows).any() if Le.rank else True
    checks = {
        "rank_plus_nullity": K.rank == allrank,
        "lifted_inside_identities": bool(contained),
        "leading_columns_nested": set(Le.pivots.tolist()) <= set(Ke.pivots.tolist()),
    }
    if allrank == L.rank:
        checks["rcf_equal"] = bool(np.array_equal(Ke.rows, Le.rows))
    report = PartitionReport(
        partition=shape,
        d=d,
        lifrank=L.rank,
        exprank=exprank,
        allrank=allrank,
        new_count=allrank - L.rank,
        leading_column_diff=[c + 1 for c in diff],
        checks=checks,
        seconds=round(time.perf_counter() - t0, 2),
    )
    return _Analysis(report, Le, Ke)


def partition_analysis(shape, op, p: int = DEFAULT_PRIME, convention: str = DEFAULT_CONVENTION) -> PartitionReport:
    """Ranks of the lifted and of all identities in the component of ``shape``."""
    p = check_prime(p, DEGREE)
    return _analyze(shape, op, p, convention).report


def _job(args):
    return partition_analysis(*args)


def analyze_all(op, shapes=None, p: int = DEFAULT_PRIME, jobs: int = 1, convention: str = DEFAULT_CONVENTION):
    """Reports for the given partitions (all of 7 by default), in partition order."""
    p = check_prime(p, DEGREE)
    shapes = [_check_shape(s) for s in (shapes or partitions(DEGREE))]
    op = OperationKind.parse(op)
    tasks = [(s, op, p, convention) for s in shapes]
    if jobs <= 1:
        return [_job(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1, len(tasks))) as pool:
        return list(pool.map(_job, tasks))


# -- explicit new identities ---------------------------------------------------------------


@dataclass
class GroupAlgebraIdentity:
    """Coefficients of ``D_{1,j}`` for each TT-type, from one row of ``RCF(K)``.

    ``row`` and ``leading_column`` are 1-based positions in ``RCF(K)``;
    ``raw`` holds the residues of that row and ``groups`` maps each 1-based
    TT-type to ``[(j, coeff), ...]`` after scaling and symmetric lifting.
    """

    partition: tuple
    op: str
    prime: int
    row: int
    leading_column: int
    scale: int
    raw: np.ndarray
    groups: dict

    def render(self) -> str:
        parts = []
        for k, terms in self.groups.items():
            inner = " ".join(
                f"{'-' if c < 0 else '+'} {'' if abs(c) == 1 else abs(c)}D_{{1,{j}}}" for j, c in terms
            )
            inner = inner[2:] if inner.startswith("+ ") else inner
            parts.append(f"[ {inner} ]_{k}")
        return " + ".join(parts)

    def raw_values(self) -> list[int]:
        return sorted(set(int(x) for x in self.raw if x))

    def to_json(self) -> dict:
        return {
            "partition": format_partition(self.partition),
            "op": self.op,
            "row": self.row,
            "leading_column": self.leading_column,
            "scale": self.scale,
            "raw_values": self.raw_values(),
            "groups": {str(k): [[j, c] for j, c in v] for k, v in self.groups.items()},
            "rendered": self.render(),
        }

    def group_algebra(self) -> list[np.ndarray]:
        """Per TT-type dense coefficient vectors over ``S_7`` (lex order), unscaled."""
        d = hook_length_dimension(self.partition)
        ntt = len(enumerate_tt_types(DEGREE))
        G = symmetric_group(DEGREE)
        out = []
        for k in range(ntt):
            vec = np.zeros(G.order, dtype=np.int64)
            for j in range(d):
                c = int(self.raw[k * d + j])
                if c:
                    vec += c * matrix_unit_element(self.partition, 1, j + 1, self.prime).coeffs
            out.append(vec % self.prime)
        return out


    def to_identity(self) -> Identity:
        """The same identity as a multilinear polynomial in ``TT_7`` with residue coefficients."""
        G = symmetric_group(DEGREE)
        types = enumerate_tt_types(DEGREE)
        terms = {}
        for k, vec in enumerate(self.group_algebra()):
            for s in np.flatnonzero(vec):
                terms[fill(types[k], G.perms[s].tolist())] = int(vec[s])
        return Identity(DEGREE, terms)


def expansion_residual(elements, op, p: int) -> int:
    """Number of nonzero coefficients in the expansion of ``sum_k [X_k]_k``.

    Uses ``[X]_k -> sum_j X * E_kj``; zero means the element is an identity.
    """
    op = OperationKind.parse(op)
    G = symmetric_group(DEGREE)
    ndd = len(enumerate_dd_types(DEGREE))
    out = np.zeros((ndd, G.order), dtype=np.int64)
    for k, terms in enumerate(type_expansion(DEGREE, op)):
        X = elements[k]
        if not X.any():
            continue
        for j, word, c in terms:
            # X * u sends the coefficient of s to s*u
            out[j, G.right_multiply(G.index(word))] += c * X
        out %= p
    return int(np.count_nonzero(out % p))


def extract_new_identities(
    shape, op, p: int = DEFAULT_PRIME, scale: int = 2, convention: str = DEFAULT_CONVENTION
) -> list[GroupAlgebraIdentity]:
    """Rows of ``RCF(K)`` whose leading column is absent from ``RCF(L)``."""
    shape = _check_shape(shape)
    if not has_identity_clifton_base(shape):
        raise ValueError(
            f"partition {format_partition(shape)}: A(id) is not the identity, "
            "so the D_ij need not be matrix units"
        )
    op = OperationKind.parse(op)
    p = check_prime(p, DEGREE)
    res = _analyze(shape, op, p, convention)
    d = res.report.d
    lead = res.K.pivots.tolist()
    out = []
    for col in res.report.leading_column_diff:
        r = lead.index(col - 1)
        raw = res.K.rows[r].copy()
        lifted = symmetric_rep(raw * scale, p)
        groups = {}
        for k in range(len(lifted) // d):
            terms = [(j + 1, int(lifted[k * d + j])) for j in range(d) if lifted[k * d + j]]
            if terms:
                groups[k + 1] = terms
        out.append(GroupAlgebraIdentity(shape, op.value, p, r + 1, col, scale, raw, groups))
    return out
