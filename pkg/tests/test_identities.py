from __future__ import annotations

import random

import numpy as np
import pytest

from dendriform.freealg import apply_permutation, dd_basis, fill, parse_monomial, tt_basis
from dendriform.identities import (
    LATTICE_ORDER,
    Identity,
    analyze,
    bb3_vector,
    build_expansion_matrix,
    degree3_lattice,
    expansion_term_counts,
    known_generators,
    lifted_identities,
    liftings,
    module_generators,
    permuted_vectors,
    symmetrized_span_rank,
    verify_identity,
)
from dendriform.modlinalg import nullspace_canonical_basis, rank
from dendriform.products import expand_tt_monomial

P = 101
TRS = "[a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2"


@pytest.mark.parametrize("op", ["prelie", "prejordan"])
def test_expansion_matrix_columns(op):
    E = build_expansion_matrix(5, op, P)
    tt, dd = tt_basis(5), dd_basis(5)
    assert E.shape == (5040, 1440)
    for j in random.Random(0).sample(range(tt.dim), 25):
        col = np.zeros(dd.dim, dtype=np.int64)
        for m, c in expand_tt_monomial(tt.monomial(j), op).items():
            col[dd.index(m)] += c
        assert np.array_equal(E[:, j], col % P)


def test_expansion_matrix_degree_guard():
    with pytest.raises(ValueError):
        build_expansion_matrix(7, "prelie")


def test_identity_vector_roundtrip():
    f = Identity.parse(TRS)
    assert f.degree == 3 and len(f) == 4
    g = Identity.from_vector(f.vector(P), 3, P)
    assert g.terms == f.terms
    assert Identity.parse("-[a,b,c]_1").vector(P).tolist()[0] == P - 1


def test_permuted_vectors_match_relabeling():
    f = Identity.parse(TRS)
    G = tt_basis(3).group
    rows = permuted_vectors(f.vector(P), 3)
    for s in range(6):
        sigma = G.permutation(s)
        assert np.array_equal(rows[s], f.relabel(sigma).vector(P))
        assert all(apply_permutation(sigma, m) in f.relabel(sigma).terms for m in f.terms)


def test_trs_permutations_span_nullspace():
    E = build_expansion_matrix(3, "prelie", P)
    N = nullspace_canonical_basis(E, P)
    assert E.shape == (30, 12) and N.shape[0] == 3
    r, ech = symmetrized_span_rank([Identity.parse(TRS)], 3, P)
    assert r == 3
    assert rank(np.vstack([ech.rows, N]), P) == 3


def test_liftings():
    f = Identity.parse(TRS)
    lifts = liftings(f)
    assert len(lifts) == 2 * (3 + 3)
    assert all(g.degree == 5 for g in lifts)
    assert all(verify_identity(g, "prelie") for g in lifts)
    assert parse_monomial("[[a,d,e]_2,b,c]_1") in lifts[6].terms
    assert parse_monomial("[d,[a,b,c]_2,e]_2") in lifts[-2].terms
    with pytest.raises(ValueError):
        liftings(Identity(2, {}))


def test_lifted_sets():
    assert len(lifted_identities(5, "prelie")) == 12
    assert lifted_identities(5, "prejordan") == []
    assert len(lifted_identities(7, "prelie")) == (12 + 3) * 16
    assert len(lifted_identities(7, "prejordan")) == 5 * 16


def test_module_generators_toy():
    # in degree 3 the nullspace is one module; any nonzero vector generates it
    E = build_expansion_matrix(3, "prelie", P)
    N = nullspace_canonical_basis(E, P)
    search = module_generators(list(N), [], 3, P)
    assert search.rank_trace == [0, 3]
    assert search.candidates == [0] and search.generators == [0] and search.dependent == []
    # the old span already covers everything
    search = module_generators(list(N), [Identity.parse(TRS)], 3, P)
    assert search.rank_trace == [3] and search.generators == []


def test_verify_rejects_non_identity():
    assert not verify_identity(Identity.parse("[a,b,c]_1 - [a,b,c]_2"), "prelie")
    assert expansion_term_counts(Identity.parse("[a,b,c]_1"), "prelie") == [
        len(expand_tt_monomial(parse_monomial("[a,b,c]_1"), "prelie"))
    ]


@pytest.mark.parametrize("op", ["prelie", "prejordan"])
def test_catalogued_generators_are_identities(op):
    for f in known_generators(5, op):
        assert verify_identity(f, op)


def test_analyze_degree3_report():
    rep = analyze(3, "prelie", P)
    js = rep.to_json()
    assert (js["rank"], js["nullity"]) == (9, 3)
    assert js["candidates"] == [1]
    assert all(rep.checks.values())
    assert rep.warnings == []


def test_bb3_basis():
    v = bb3_vector({parse_monomial("(a<b)<c"): 1, fill(("<", 0, ("<", 0, 0)), [3, 2, 1]): 2})
    assert v.shape == (48,) and sorted(v[v != 0].tolist()) == [1, 2]


def test_lattice_report_shape():
    rep = degree3_lattice(P)
    assert set(LATTICE_ORDER) <= set(rep.dims)
    assert all(rep.checks.values())
    # modular law: dim(A+B) + dim(A&B) = dim A + dim B
    for a, b in [("Dias", "TLie"), ("Dias", "TJor"), ("Dend", "TLie"), ("Dend", "TJor")]:
        assert rep.dims[f"{a}+{b}"] + rep.dims[f"{a}&{b}"] == rep.dims[a] + rep.dims[b]
