"""Identities of degree 3 and 5: expansion matrices, liftings and module generators.

An identity is a combination of multilinear TT-monomials whose expansion
vanishes.  As a vector it lives in ``TT_n`` with the ordered basis of
:class:`dendriform.freealg.Basis`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from . import catalog
from .freealg import (
    PREC,
    SUCC,
    enumerate_tt_types,
    leaves,
    parse_monomial,
    parse_polynomial,
    relabel,
    render_polynomial,
    substitute,
    tt_basis,
    dd_basis,
)
from .modlinalg import (
    DEFAULT_PRIME,
    RowSpace,
    check_prime,
    echelon,
    nullspace_from_echelon,
    sort_by_length,
    symmetric_rep,
)
from .products import OperationKind, expand_multilinear, type_expansion
from .rewrite import LinComb

log = logging.getLogger(__name__)

E5_RANK_WARNING = (
    "the pre-Lie degree-5 expansion matrix has nullity 815, so its rank is 625; "
    "a rank of 815 for this matrix is incompatible with its 1440 columns"
)


@dataclass
class Identity:
    """A multilinear polynomial in ``TT_n`` with integer coefficients."""

    degree: int
    terms: dict = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> Identity:
        terms = parse_polynomial(text)
        if not terms:
            raise ValueError("empty polynomial")
        n = len(leaves(next(iter(terms))))
        return cls(n, terms)

    @classmethod
    def from_vector(cls, vector, n: int, p: int) -> Identity:
        """Read a residue vector back as an identity with symmetric coefficients."""
        basis = tt_basis(n)
        vec = symmetric_rep(vector, p)
        terms = {basis.monomial(int(i)): int(vec[i]) for i in np.flatnonzero(vec)}
        return cls(n, terms)

    @property
    def pretty(self) -> str:
        return render_polynomial(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def vector(self, p: int = DEFAULT_PRIME) -> np.ndarray:
        basis = tt_basis(self.degree)
        out = np.zeros(basis.dim, dtype=np.int64)
        for m, c in self.terms.items():
            out[basis.index(m)] += c
        return out % p

    def relabel(self, sigma) -> Identity:
        return Identity(self.degree, {relabel(m, tuple(sigma)): c for m, c in self.terms.items()})


# -- expansion matrices -----------------------------------------------------------------


def build_expansion_matrix(n: int, op, p: int = DEFAULT_PRIME) -> np.ndarray:
    """``dim DD_n x dim TT_n`` matrix of normalized expansions, residues mod ``p``.

    Column ``j`` holds the expansion of the ``j``-th TT-monomial.
    """
    if n not in (3, 5):
        raise ValueError(f"expansion matrices are built for degrees 3 and 5, not {n}")
    p = check_prime(p, n)
    op = OperationKind.parse(op)
    tt, dd = tt_basis(n), dd_basis(n)
    G = tt.group
    N = G.order
    E = np.zeros((dd.dim, tt.dim), dtype=np.int64)
    cols = np.arange(N)
    for k, terms in enumerate(type_expansion(n, op)):
        for j, word, c in terms:
            # monomial (k, w) expands to the DD-monomial with leaf word w o word
            rows = j * N + G.index(G.perms[:, np.array(word) - 1])
            E[rows, k * N + cols] += c
    return E % p


def permuted_vectors(vector, n: int) -> np.ndarray:
    """All ``n!`` images ``sigma . v`` of a TT vector, one per row, lex order of sigma."""
    G = tt_basis(n).group
    N = G.order
    v = np.asarray(vector).reshape(-1, N)
    table = G.multiplication_table()
    out = np.zeros((N, v.shape[0], N), dtype=np.int64)
    rows = np.arange(N)[:, None]
    for t in range(v.shape[0]):
        out[rows, t, table] = v[t][None, :]
    return out.reshape(N, -1)


# -- liftings ------------------------------------------------------------------------------


def liftings(f: Identity) -> list[Identity]:
    """The ``2(n+3)`` consequences of ``f`` in degree ``n+2``.

    For ``i = 1, 2``: each variable ``x_k`` replaced by ``[x_k, x_{n+1}, x_{n+2}]_i``,
    then ``f`` placed in each slot of ``[., x_{n+1}, x_{n+2}]_i``.
    """
    n = f.degree
    if n % 2 == 0:
        raise ValueError("identities of TT-monomials have odd degree")
    u, v = n + 1, n + 2
    out = []
    for i in (1, 2):
        for k in range(1, n + 1):
            terms = {substitute(m, {k: (i, k, u, v)}): c for m, c in f.terms.items()}
            out.append(Identity(n + 2, terms))
        for slot in range(3):
            terms = {}
            for m, c in f.terms.items():
                args = [u, v]
                args.insert(slot, m)
                terms[(i, *args)] = c
            out.append(Identity(n + 2, terms))
    return out


def symmetrized_span(gens, n: int, p: int = DEFAULT_PRIME, space: RowSpace | None = None) -> RowSpace:
    """Row space spanned by ``sigma . g`` for every generator and every ``sigma``."""
    if space is None:
        space = RowSpace(tt_basis(n).dim, p)
    for g in gens:
        vec = g.vector(p) if isinstance(g, Identity) else np.asarray(g)
        space.add(permuted_vectors(vec, n))
    return space


def symmetrized_span_rank(gens, n: int, p: int = DEFAULT_PRIME):
    """Rank and RCF rows of the span of all permutations of ``gens``."""
    space = symmetrized_span(gens, n, p)
    return space.rank, space.echelon()


# -- module generators -----------------------------------------------------------------


@dataclass
class GeneratorSearch:
    """Outcome of the greedy pass over sorted candidates.

    ``candidates`` are 0-based positions in the sorted list of the vectors that
    raised the rank; ``rank_trace`` starts with the rank of the old span and
    records the rank after each of them; ``generators`` are the positions kept
    after pruning and ``dependent`` the positions dropped.
    """

    candidates: list[int]
    rank_trace: list[int]
    generators: list[int]
    dependent: list[int]


def module_generators(nullbasis, old, n: int, p: int = DEFAULT_PRIME) -> GeneratorSearch:
    """Greedy ``S_n``-module generators of ``nullbasis`` modulo the span of ``old``.

    The span of all permutations is ``S_n``-stable, so a candidate raises the
    rank exactly when the candidate itself lies outside the current span.
    Afterwards each rank-raising candidate is tested, from last to first,
    against the span of ``old`` and the other candidates still kept.
    """
    base = symmetrized_span(old, n, p)
    space = base.copy()
    trace = [space.rank]
    found = []
    for pos, vec in enumerate(nullbasis):
        if space.contains(vec):
            continue
        space.add(permuted_vectors(vec, n))
        found.append(pos)
        trace.append(space.rank)
    kept = list(found)
    dependent = []
    for pos in reversed(found):
        others = [nullbasis[q] for q in kept if q != pos]
        span = symmetrized_span(others, n, p, base.copy())
        if span.contains(nullbasis[pos]):
            kept.remove(pos)
            dependent.append(pos)
    return GeneratorSearch(found, trace, kept, sorted(dependent))


def verify_identity(f: Identity, op, p: int | None = None) -> bool:
    """True iff the expansion of ``f`` normalizes to zero.

    Without ``p`` the check is exact over the integers; with ``p`` it is done
    modulo ``p`` on dense vectors, which is much faster for large identities.
    """
    op = OperationKind.parse(op)
    if p is not None:
        return not expansion_vector(f, op, p).any()
    out = LinComb()
    for m, c in f.terms.items():
        for w, k in expand_multilinear(m, op).items():
            out.add(w, c * k)
    return not out


def expansion_vector(f: Identity, op, p: int = DEFAULT_PRIME) -> np.ndarray:
    """Expansion of ``f`` as a residue vector over the normal DD basis."""
    op = OperationKind.parse(op)
    n = f.degree
    tt, dd = tt_basis(n), dd_basis(n)
    G = tt.group
    N = G.order
    by_type: dict = {}
    for m, c in f.terms.items():
        k, s = tt.locate(m)
        by_type.setdefault(k, ([], []))
        by_type[k][0].append(s)
        by_type[k][1].append(c)
    out = np.zeros(dd.dim, dtype=np.int64)
    for k, (perms, coeffs) in by_type.items():
        words = G.perms[np.array(perms)]
        coeffs = np.array(coeffs, dtype=np.int64) % p
        for j, w, e in type_expansion(n, op)[k]:
            rows = j * N + G.index(words[:, np.array(w) - 1])
            np.add.at(out, rows, coeffs * (e % p))
        out %= p
    return out


def expansion_term_counts(f: Identity, op) -> list[int]:
    """Normalized expansion size of each term of ``f``."""
    return [len(expand_multilinear(m, op)) for m in f.terms]


# -- analysis pipelines ---------------------------------------------------------------


def known_generators(n: int, op) -> list[Identity]:
    """Published module generators of the identities in degree ``n``."""
    op = OperationKind.parse(op)
    if op is OperationKind.PRE_LIE:
        table = {3: [catalog.TERNARY_RIGHT_SYMMETRIC], 5: list(catalog.PRE_LIE_DEGREE5)}
    elif op is OperationKind.PRE_JORDAN:
        table = {3: [], 5: list(catalog.PRE_JORDAN_DEGREE5)}
    else:
        table = {3: []}
    if n not in table:
        raise ValueError(f"no catalogued generators for {op.value} in degree {n}")
    return [Identity.parse(s) for s in table[n]]


def lifted_identities(n: int, op) -> list[Identity]:
    """Liftings of a generating set of all identities of degree ``n - 2``.

    That set is the lifted identities of degree ``n - 2`` together with the
    new generators found there.
    """
    if n <= 3:
        return []
    old = []
    for g in lifted_identities(n - 2, op) + known_generators(n - 2, op):
        old.extend(liftings(g))
    return old


@dataclass
class AnalysisReport:
    degree: int
    op: str
    prime: int
    dims: dict
    rank: int
    nullity: int
    lifted_rank: int
    rank_trace: list[int]
    candidates: list[int]
    dependent: list[int]
    generators: list[Identity]
    warnings: list[str]
    checks: dict

    def to_json(self) -> dict:
        basis = tt_basis(self.degree)
        return {
            "schema": 1,
            "degree": self.degree,
            "op": self.op,
            "prime": self.prime,
            "dims": self.dims,
            "rank": self.rank,
            "nullity": self.nullity,
            "lifted_rank": self.lifted_rank,
            "rank_trace": self.rank_trace,
            "candidates": [c + 1 for c in self.candidates],
            "dependent": [c + 1 for c in self.dependent],
            "generators": [
                {
                    "pretty": g.pretty,
                    "terms": sorted([basis.index(m) + 1, c] for m, c in g.terms.items()),
                }
                for g in self.generators
            ],
            "warnings": self.warnings,
            "checks": self.checks,
        }


def analyze(n: int, op, p: int = DEFAULT_PRIME) -> AnalysisReport:
    """Full pipeline: expansion matrix, nullspace, sorting, module generators."""
    op = OperationKind.parse(op)
    p = check_prime(p, n)
    E = build_expansion_matrix(n, op, p)
    ech = echelon(E, p)
    null = nullspace_from_echelon(ech)
    order = sort_by_length(null, p)
    null = null[order] if len(order) else null
    old = lifted_identities(n, op)
    search = module_generators(list(null), old, n, p)
    lifted_rank = search.rank_trace[0]
    gens = [Identity.from_vector(null[q], n, p) for q in search.generators]
    warnings = []
    if op is OperationKind.PRE_LIE and n == 5:
        log.warning(E5_RANK_WARNING)
        warnings.append(E5_RANK_WARNING)
    checks = {
        "rank_plus_nullity": ech.rank + len(null) == E.shape[1],
        "nullspace_annihilated": not ((E @ null.T) % p).any() if len(null) else True,
        "generators_verified": all(verify_identity(g, op) for g in gens),
        "trace_reaches_nullity": search.rank_trace[-1] == len(null),
    }
    return AnalysisReport(
        degree=n,
        op=op.value,
        prime=p,
        dims={"TT": E.shape[1], "DD": E.shape[0]},
        rank=ech.rank,
        nullity=len(null),
        lifted_rank=lifted_rank,
        rank_trace=search.rank_trace,
        candidates=search.candidates,
        dependent=search.dependent,
        generators=gens,
        warnings=warnings,
        checks=checks,
    )


# -- the degree-3 lattice in the free algebra with two binary operations -----------------

# o_1 is written "<" and o_2 ">" so BB_3 monomials reuse the DD tree encoding
_ASSOC = ("left", "right")
_OPS = ((PREC, PREC), (PREC, SUCC), (SUCC, PREC), (SUCC, SUCC))


def bb3_index(m) -> int:
    """Index in BB_3: association type, then operation pair, then lex permutation."""
    G = tt_basis(3).group
    op, x, y = m
    if isinstance(x, int):
        assoc, pair, word = 1, (op, y[0]), (x, y[1], y[2])
    else:
        assoc, pair, word = 0, (x[0], op), (x[1], x[2], y)
    return (assoc * 4 + _OPS.index(pair)) * G.order + G.index(word)


def bb3_vector(terms: dict, p: int = DEFAULT_PRIME) -> np.ndarray:
    out = np.zeros(48, dtype=np.int64)
    for m, c in terms.items():
        out[bb3_index(m)] += c
    return out % p


def _bb_product(op: str, x: dict, y: dict) -> dict:
    out: dict = {}
    for a, ca in x.items():
        for b, cb in y.items():
            key = (op, a, b)
            out[key] = out.get(key, 0) + ca * cb
    return out


def _bb_sum(*parts) -> dict:
    out: dict = {}
    for sign, part in parts:
        for m, c in part.items():
            out[m] = out.get(m, 0) + sign * c
    return {m: c for m, c in out.items() if c}


def _triple_products(dot) -> list[dict]:
    a, b, c = {1: 1}, {2: 1}, {3: 1}
    return [dot(dot(a, b), c), dot(a, dot(b, c))]


def _pre_lie_dot(x, y):
    return _bb_sum((1, _bb_product(PREC, x, y)), (-1, _bb_product(SUCC, y, x)))


def _pre_jordan_dot(x, y):
    return _bb_sum((1, _bb_product(SUCC, x, y)), (1, _bb_product(PREC, y, x)))


def _relations(text_pairs) -> list[dict]:
    out = []
    for parts in text_pairs:
        terms: dict = {}
        for sign, text in parts:
            m = parse_monomial(text)
            terms[m] = terms.get(m, 0) + sign
        out.append(terms)
    return out


# associative dialgebras with o_1 = left and o_2 = right operation
DIASSOCIATIVE_RELATIONS = _relations(
    [
        [(1, "(a<b)<c"), (-1, "a<(b<c)")],
        [(1, "a<(b<c)"), (-1, "a<(b>c)")],
        [(1, "(a>b)<c"), (-1, "a>(b<c)")],
        [(1, "(a<b)>c"), (-1, "a>(b>c)")],
        [(1, "(a>b)>c"), (-1, "a>(b>c)")],
    ]
)

DENDRIFORM_RELATIONS = _relations(
    [
        [(1, "(a<b)<c"), (-1, "a<(b<c)"), (-1, "a<(b>c)")],
        [(1, "(a>b)<c"), (-1, "a>(b<c)")],
        [(1, "(a<b)>c"), (1, "(a>b)>c"), (-1, "a>(b>c)")],
    ]
)


def _bb3_module(gens, p: int) -> RowSpace:
    G = tt_basis(3).group
    table = G.multiplication_table()
    space = RowSpace(48, p)
    for g in gens:
        v = bb3_vector(g, p).reshape(8, G.order)
        rows = np.zeros((G.order, 8, G.order), dtype=np.int64)
        for t in range(8):
            rows[np.arange(G.order)[:, None], t, table] = v[t][None, :]
        space.add(rows.reshape(G.order, 48))
    return space


@dataclass
class LatticeReport:
    dims: dict
    equalities: dict
    checks: dict

    def to_json(self) -> dict:
        return {"schema": 1, "dims": self.dims, "equalities": self.equalities, "checks": self.checks}


def _sum(*spaces: RowSpace) -> RowSpace:
    out = spaces[0].copy()
    for s in spaces[1:]:
        out.add(s.echelon().rows)
    return out


def _same(a: RowSpace, b: RowSpace) -> bool:
    ea, eb = a.echelon(), b.echelon()
    return ea.rank == eb.rank and np.array_equal(ea.rows, eb.rows)


def intersection(a: RowSpace, b: RowSpace) -> RowSpace:
    """Row space of ``a`` meet ``b``, from the relations ``x A + y B = 0``."""
    A, B = a.echelon().rows, b.echelon().rows
    out = RowSpace(a.cols, a.p)
    if not (len(A) and len(B)):
        return out
    rel = nullspace_from_echelon(echelon(np.vstack([A, B]).T, a.p))
    if len(rel):
        out.add((rel[:, : len(A)] @ A) % a.p)
    return out


def bb3_triple_products(op) -> list[dict]:
    """The two triple products of ``op`` as combinations of ``BB_3`` monomials."""
    op = OperationKind.parse(op)
    if op is OperationKind.PRE_LIE:
        return _triple_products(_pre_lie_dot)
    if op is OperationKind.PRE_JORDAN:
        return _triple_products(_pre_jordan_dot)
    raise ValueError(f"no binary product for {op.value}")


def degree3_modules(p: int = DEFAULT_PRIME) -> dict[str, RowSpace]:
    """The four ``S_3``-submodules of ``BB_3`` compared by :func:`degree3_lattice`."""
    p = check_prime(p, 3)
    return {
        "Dias": _bb3_module(DIASSOCIATIVE_RELATIONS, p),
        "Dend": _bb3_module(DENDRIFORM_RELATIONS, p),
        "TLie": _bb3_module(bb3_triple_products("prelie"), p),
        "TJor": _bb3_module(bb3_triple_products("prejordan"), p),
    }


def degree3_lattice(p: int = DEFAULT_PRIME) -> LatticeReport:
    """Dimensions of sums and intersections of the degree-3 submodules of ``BB_3``."""
    mods = degree3_modules(p)
    dims = {name: s.rank for name, s in mods.items()}
    checks = {}
    for a in ("Dias", "Dend"):
        for b in ("TLie", "TJor"):
            plus = _sum(mods[a], mods[b])
            meet = intersection(mods[a], mods[b])
            dims[f"{a}+{b}"] = plus.rank
            dims[f"{a}&{b}"] = meet.rank
            rows = meet.echelon().rows
            inside = not (len(rows) and (mods[a].reduce(rows).any() or mods[b].reduce(rows).any()))
            checks[f"{a}&{b} inside both"] = bool(inside)
            checks[f"{a},{b} dimension formula"] = plus.rank + meet.rank == dims[a] + dims[b]
    dias3 = _sum(mods["Dias"], mods["TLie"], mods["TJor"])
    dend3 = _sum(mods["Dend"], mods["TLie"], mods["TJor"])
    dims["Dias+TLie+TJor"] = dias3.rank
    dims["Dend+TLie+TJor"] = dend3.rank
    equalities = {
        "Dias+TLie+TJor == Dias+TJor": _same(dias3, _sum(mods["Dias"], mods["TJor"])),
        "Dend+TLie+TJor == Dend+TJor": _same(dend3, _sum(mods["Dend"], mods["TJor"])),
    }
    return LatticeReport(dims, equalities, checks)


LATTICE_ORDER = (
    "Dias",
    "Dend",
    "TLie",
    "Dias+TLie",
    "Dias&TLie",
    "Dend+TLie",
    "Dend&TLie",
    "TJor",
    "Dias+TJor",
    "Dias&TJor",
    "Dend+TJor",
    "Dend&TJor",
)
