"""Trilinear operations in the free dendriform dialgebra and TT expansion.

An operation kind fixes the two trilinear maps that replace ``[x,y,z]_1``
and ``[x,y,z]_2``.  Each map is kept as a template: a combination of DD trees
over the placeholders 1, 2, 3.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from functools import cache

from .freealg import PREC, SUCC, dd_basis, enumerate_tt_types, fill, leaves, relabel, shape_of
from .rewrite import LinComb, product


class OperationKind(enum.Enum):
    PRE_LIE = "prelie"
    PRE_JORDAN = "prejordan"
    PRE_JORDAN_LR = "prejordan-lr"

    @classmethod
    def parse(cls, value) -> OperationKind:
        if isinstance(value, cls):
            return value
        key = str(value).lower().replace("_", "-")
        for kind in cls:
            if kind.value == key or kind.name.lower().replace("_", "-") == key:
                return kind
        raise ValueError(f"unknown operation {value!r}")


def _dot(kind: OperationKind, x: dict, y: dict) -> dict:
    """Raw (unnormalized) binary product on template combinations."""
    out = defaultdict(int)
    for a, ca in x.items():
        for b, cb in y.items():
            if kind is OperationKind.PRE_LIE:
                # a.b = a<b - b>a
                out[(PREC, a, b)] += ca * cb
                out[(SUCC, b, a)] -= ca * cb
            else:
                # a.b = a>b + b<a
                out[(SUCC, a, b)] += ca * cb
                out[(PREC, b, a)] += ca * cb
    return {m: c for m, c in out.items() if c}


def _plus(*parts):
    out = defaultdict(int)
    for sign, part in parts:
        for m, c in part.items():
            out[m] += sign * c
    return {m: c for m, c in out.items() if c}


@cache
def templates(kind) -> tuple[dict, dict]:
    """The pair of trilinear maps, as raw combinations of trees over 1, 2, 3."""
    kind = OperationKind.parse(kind)
    a, b, c = {1: 1}, {2: 1}, {3: 1}
    left = _dot(kind, _dot(kind, a, b), c)
    right = _dot(kind, a, _dot(kind, b, c))
    if kind is OperationKind.PRE_JORDAN_LR:
        first = _plus((1, left), (1, right), (-1, _dot(kind, _dot(kind, a, c), b)))
        second = _plus((1, left), (1, right), (-1, _dot(kind, b, _dot(kind, c, a))))
        return first, second
    return left, right


def _evaluate(tree, args):
    if isinstance(tree, int):
        return args[tree - 1]
    op, x, y = tree
    return product(op, _evaluate(x, args), _evaluate(y, args))


def expand_bracket(i: int, a: dict, b: dict, c: dict, kind) -> LinComb:
    """``mu_i(a, b, c)`` for normalized DD combinations, expanded and normalized."""
    out = LinComb()
    for tree, coeff in templates(kind)[i - 1].items():
        for m, k in _evaluate(tree, (a, b, c)).items():
            out.add(m, coeff * k)
    return out


def expand_tt_monomial(m, kind, normalize: bool = True) -> LinComb:
    """Image of a TT-monomial (or variable) under the expansion map.

    With ``normalize=False`` the brackets are only substituted, giving the raw
    expansion as a combination of arbitrary DD-monomials.
    """
    kind = OperationKind.parse(kind)
    if normalize:
        return LinComb(_expand_normal(m, kind))
    return LinComb(_expand_raw(m, kind))


@cache
def _expand_normal(m, kind) -> dict:
    if isinstance(m, int):
        return {m: 1}
    k, x, y, z = m
    return dict(expand_bracket(k, _expand_normal(x, kind), _expand_normal(y, kind), _expand_normal(z, kind), kind))


def _expand_raw(m, kind) -> dict:
    if isinstance(m, int):
        return {m: 1}
    k, *args = m
    parts = [_expand_raw(t, kind) for t in args]
    out = defaultdict(int)
    for tree, coeff in templates(kind)[k - 1].items():
        for t, c in _graft(tree, parts).items():
            out[t] += coeff * c
    return {m: c for m, c in out.items() if c}


def _graft(tree, parts) -> dict:
    """Replace placeholder ``i`` of a template tree by the combination ``parts[i-1]``."""
    if isinstance(tree, int):
        return parts[tree - 1]
    op, x, y = tree
    out = defaultdict(int)
    for a, ca in _graft(x, parts).items():
        for b, cb in _graft(y, parts).items():
            out[(op, a, b)] += ca * cb
    return out


@cache
def type_expansion(n: int, kind) -> tuple[tuple[tuple[int, tuple[int, ...], int], ...], ...]:
    """Normalized expansion of every TT-type of degree ``n`` at the identity word.

    Entry ``k`` lists ``(dd_type_rank, leaf_word, coeff)`` for TT-type ``k``;
    other multilinear monomials follow by relabeling the leaves.
    """
    kind = OperationKind.parse(kind)
    basis = dd_basis(n)
    out = []
    for t in enumerate_tt_types(n):
        m = fill(t, range(1, n + 1))
        terms = []
        for w, c in _expand_normal(m, kind).items():
            terms.append((basis.type_rank[shape_of(w)], tuple(leaves(w)), c))
        terms.sort()
        out.append(tuple(terms))
    return tuple(out)


def expand_multilinear(m, kind) -> LinComb:
    """Expansion of a multilinear TT-monomial through the cached type expansion."""
    n = len(leaves(m))
    word = leaves(m)
    k = enumerate_tt_types(n).index(shape_of(m))
    basis = dd_basis(n)
    out = LinComb()
    for j, w, c in type_expansion(n, kind)[k]:
        out.add(fill(basis.types[j], [word[i - 1] for i in w]), c)
    return out


def relabel_lincomb(c: dict, sigma) -> LinComb:
    return LinComb((relabel(m, tuple(sigma)), k) for m, k in c.items())
