"""Normal forms in the free dendriform dialgebra.

Four directed rules rewrite any monomial in ``<`` and ``>`` into a linear
combination of normal DD-monomials::

    (x>y)<z      ->  x>(y<z)
    (x<y)<z      ->  x<(y<z) + x<(y>z)
    (x<y)>z      ->  x>(y>z) - (x>y)>z
    ((x>y)>z)>v  ->  (x>y)>(z>v) - (x>(y<z))>v

Irreducible monomials are exactly the normal DD-monomials, and those are
linearly independent modulo the dendriform ideal, so the result does not
depend on where the rules are applied.  :func:`normalize` is the fast
memoized evaluator; :func:`rewrite_normal_form` applies the rules one step at
a time and exists to cross-check it.

Coefficients are integers throughout (the rules only produce ``+-1``), so a
normal form is valid in every characteristic; :class:`LinComb` reduces modulo
a prime on request.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .freealg import PREC, SUCC, render_polynomial

MAX_STEPS = 10**6


class RewriteLimitError(RuntimeError):
    """Raised when rewriting exceeds the step budget."""


class LinComb(dict):
    """Finite linear combination ``{monomial: coefficient}`` without zero entries.

    With ``p`` set, coefficients live in ``0..p-1``; otherwise they are integers.
    """

    def __init__(self, terms=(), p: int | None = None):
        super().__init__()
        self.p = p
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            self.add(m, c)

    def add(self, monomial, coeff: int):
        c = self.get(monomial, 0) + coeff
        if self.p:
            c %= self.p
        if c:
            self[monomial] = c
        else:
            self.pop(monomial, None)

    def scaled(self, factor: int) -> LinComb:
        return LinComb(((m, c * factor) for m, c in self.items()), self.p)

    def __add__(self, other: LinComb) -> LinComb:
        out = LinComb(self, self.p)
        for m, c in other.items():
            out.add(m, c)
        return out

    def __sub__(self, other: LinComb) -> LinComb:
        return self + other.scaled(-1)

    def __neg__(self) -> LinComb:
        return self.scaled(-1)

    def mod(self, p: int) -> LinComb:
        return LinComb(self, p)

    def __repr__(self) -> str:
        return f"LinComb({render_polynomial(self, self.p)})"


def is_normal_dd(m) -> bool:
    """``x | x<v | x>v | (x>u)>w`` with ``x`` a variable and the rest normal."""
    if isinstance(m, int):
        return True
    op, left, right = m
    if isinstance(left, int):
        return is_normal_dd(right)
    if op == SUCC and left[0] == SUCC and isinstance(left[1], int):
        return is_normal_dd(left[2]) and is_normal_dd(right)
    return False


# -- fast evaluator on normal forms --------------------------------------------------


def _acc(out, terms, coeff):
    for m, c in terms.items():
        out[m] += coeff * c


@lru_cache(maxsize=None)
def _product(op: str, left, right) -> dict:
    """Normal form of ``left op right`` for normal monomials ``left`` and ``right``."""
    if isinstance(left, int):
        return {(op, left, right): 1}
    lop, l1, l2 = left
    out = defaultdict(int)
    if op == PREC:
        if lop == SUCC:
            # (l1>l2)<r -> l1>(l2<r)
            for w, c in _product(PREC, l2, right).items():
                _acc(out, _product(SUCC, l1, w), c)
        else:
            # (l1<l2)<r -> l1<(l2<r) + l1<(l2>r)
            for inner in (_product(PREC, l2, right), _product(SUCC, l2, right)):
                for w, c in inner.items():
                    _acc(out, _product(PREC, l1, w), c)
    elif lop == PREC:
        # (l1<l2)>r -> l1>(l2>r) - (l1>l2)>r, and l1 is a variable here
        for w, c in _product(SUCC, l2, right).items():
            _acc(out, _product(SUCC, l1, w), c)
        out[(SUCC, (SUCC, l1, l2), right)] -= 1
    elif isinstance(l1, int):
        return {(SUCC, left, right): 1}
    else:
        # ((a>b)>l2)>r -> (a>b)>(l2>r) - (a>(b<l2))>r
        for w, c in _product(SUCC, l2, right).items():
            _acc(out, _product(SUCC, l1, w), c)
        _, a, b = l1
        for u, c in _product(PREC, b, l2).items():
            for w, c2 in _product(SUCC, a, u).items():
                _acc(out, _product(SUCC, w, right), -c * c2)
    return {m: c for m, c in out.items() if c}


def product(op: str, x: dict, y: dict) -> dict:
    """Bilinear product of two combinations of normal monomials, normalized."""
    out = defaultdict(int)
    for mx, cx in x.items():
        for my, cy in y.items():
            _acc(out, _product(op, mx, my), cx * cy)
    return {m: c for m, c in out.items() if c}


@lru_cache(maxsize=None)
def _normalize(m) -> dict:
    if isinstance(m, int):
        return {m: 1}
    op, left, right = m
    return product(op, _normalize(left), _normalize(right))


def normalize(m, p: int | None = None) -> LinComb:
    """Normal form of a DD-monomial as a combination of normal DD-monomials."""
    return LinComb(_normalize(m), p)


def normalize_lincomb(c: dict, p: int | None = None) -> LinComb:
    p = p if p is not None else getattr(c, "p", None)
    out = LinComb(p=p)
    for m, coeff in c.items():
        for w, k in _normalize(m).items():
            out.add(w, coeff * k)
    return out


def clear_caches():
    _product.cache_clear()
    _normalize.cache_clear()


# -- step-by-step rewriting ------------------------------------------------------------


def _rule(m):
    """Right-hand side of the rule whose left side matches ``m`` at the root, or None."""
    if isinstance(m, int):
        return None
    op, left, right = m
    if isinstance(left, int):
        return None
    lop, x, y = left
    if op == PREC and lop == SUCC:
        return [((SUCC, x, (PREC, y, right)), 1)]
    if op == PREC and lop == PREC:
        return [((PREC, x, (PREC, y, right)), 1), ((PREC, x, (SUCC, y, right)), 1)]
    if op == SUCC and lop == PREC:
        return [((SUCC, x, (SUCC, y, right)), 1), ((SUCC, (SUCC, x, y), right), -1)]
    if op == SUCC and lop == SUCC and not isinstance(x, int) and x[0] == SUCC:
        _, a, b = x
        return [((SUCC, x, (SUCC, y, right)), 1), ((SUCC, (SUCC, a, (PREC, b, y)), right), -1)]
    return None


def _rewrite_once(m, innermost: bool):
    """Rewrite the leftmost redex (innermost or outermost); None if ``m`` is normal."""
    if isinstance(m, int):
        return None
    if not innermost:
        rhs = _rule(m)
        if rhs is not None:
            return rhs
    op, left, right = m
    sub = _rewrite_once(left, innermost)
    if sub is not None:
        return [((op, t, right), c) for t, c in sub]
    sub = _rewrite_once(right, innermost)
    if sub is not None:
        return [((op, left, t), c) for t, c in sub]
    return _rule(m) if innermost else None


def rewrite_normal_form(m, strategy: str = "innermost", max_steps: int = MAX_STEPS) -> LinComb:
    """Normalize by single rule applications at the leftmost innermost/outermost redex."""
    if strategy not in ("innermost", "outermost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    innermost = strategy == "innermost"
    pending = defaultdict(int, {m: 1})
    done = LinComb()
    steps = 0
    while pending:
        term, coeff = pending.popitem()
        if coeff == 0:
            continue
        rhs = _rewrite_once(term, innermost)
        if rhs is None:
            done.add(term, coeff)
            continue
        steps += 1
        if steps > max_steps:
            raise RewriteLimitError(f"more than {max_steps} rewriting steps")
        for t, c in rhs:
            pending[t] += coeff * c
    return done
