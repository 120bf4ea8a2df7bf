"""End-to-end checks of the published results, one group of tests per criterion.

Run with ``pytest tests/test_acceptance.py -v``; a PASS/FAIL line per
criterion is printed in the terminal summary.  Also runnable as a script.
"""

from __future__ import annotations

import csv
import itertools
import logging
import random
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from dendriform import catalog
from dendriform.cli import table_rows
from dendriform.degree7 import analyze_all, extract_new_identities, lifted_generators
from dendriform.freealg import fill, relabel
from dendriform.identities import (
    Identity,
    analyze,
    bb3_triple_products,
    bb3_vector,
    build_expansion_matrix,
    degree3_lattice,
    degree3_modules,
    expansion_term_counts,
    lifted_identities,
    symmetrized_span,
    verify_identity,
)
from dendriform.modlinalg import echelon, nullspace_canonical_basis
from dendriform.rewrite import normalize, rewrite_normal_form
from dendriform.symmetric import (
    GroupAlgebraElement,
    Permutation,
    hook_length_dimension,
    matrix_unit_element,
    natural_rep,
    partitions,
)

from oracles import all_binary

P = 101
GOLDEN = Path(__file__).parent / "golden"

criterion = pytest.mark.criterion


def golden_table(name):
    with open(GOLDEN / name) as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    header = rows[0]
    return {r[0]: dict(zip(header, map(int, r))) for r in rows[1:]}


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


class LogCapture(logging.Handler):
    def __init__(self):
        super().__init__(logging.WARNING)
        self.messages = []

    def emit(self, record):
        self.messages.append(record.getMessage())


# -- shared computations -------------------------------------------------------------------


@pytest.fixture(scope="module")
def prelie5():
    handler = LogCapture()
    logger = logging.getLogger("dendriform.identities")
    logger.addHandler(handler)
    try:
        report, seconds = timed(analyze, 5, "prelie", P)
    finally:
        logger.removeHandler(handler)
    return report, seconds, handler.messages


@pytest.fixture(scope="module")
def prejordan5():
    return timed(analyze, 5, "prejordan", P)


@pytest.fixture(scope="module")
def prelie7():
    return timed(analyze_all, "prelie", None, P)


@pytest.fixture(scope="module")
def prejordan7():
    return timed(analyze_all, "prejordan", None, P)


@pytest.fixture(scope="module")
def table3():
    (ids, seconds) = timed(extract_new_identities, (3, 1, 1, 1, 1), "prejordan", P)
    return ids, seconds


# -- 1 ---------------------------------------------------------------------------------------


@criterion(1)
def test_degree3_pre_lie_nullspace_is_trs_orbit():
    t0 = time.perf_counter()
    E = build_expansion_matrix(3, "prelie", P)
    N = nullspace_canonical_basis(E, P)
    assert E.shape == (30, 12)
    assert N.shape[0] == 3
    trs = Identity.parse(catalog.TERNARY_RIGHT_SYMMETRIC)
    orbit = {}
    for sigma in itertools.permutations((1, 2, 3)):
        v = trs.relabel(sigma).vector(P)
        key = min(tuple(v), tuple((-v) % P))
        orbit[key] = v
    assert len(orbit) == 3
    span = echelon(np.array(list(orbit.values())), P)
    assert span.rank == 3
    assert np.array_equal(span.rows, echelon(N, P).rows)
    assert time.perf_counter() - t0 < 1.0


# -- 2 ---------------------------------------------------------------------------------------


@criterion(2)
def test_degree3_pre_jordan_full_rank():
    t0 = time.perf_counter()
    E = build_expansion_matrix(3, "prejordan-lr", P)
    assert E.shape == (30, 12)
    assert echelon(E, P).rank == 12
    assert nullspace_canonical_basis(E, P).shape[0] == 0
    # the submodule J spanned by the two operations and their permutations
    assert echelon(E.T, P).rank == 12
    assert time.perf_counter() - t0 < 1.0


# -- 3 ---------------------------------------------------------------------------------------

PUBLISHED_LATTICE = {
    "Dias": 30,
    "Dend": 18,
    "TLie": 12,
    "Dias+TLie": 39,
    "Dias&TLie": 3,
    "Dend+TLie": 30,
    "Dend&TLie": 0,
    "TJor": 12,
    "Dias+TJor": 42,
    "Dias&TJor": 0,
    "Dend+TJor": 30,
    "Dend&TJor": 0,
    "Dend+TLie+TJor": 36,
}


@criterion(3)
def test_lattice_reproducible_part():
    report, seconds = timed(degree3_lattice, P)
    dims = report.dims
    for key in ("Dias", "Dend", "TLie", "TJor", "Dend+TJor", "Dend&TJor"):
        assert dims[key] == PUBLISHED_LATTICE[key], key
    assert report.equalities["Dias+TLie+TJor == Dias+TJor"]
    assert all(report.checks.values())
    assert seconds < 1.0


@criterion(3)
@pytest.mark.xfail(
    strict=True,
    reason="the stated definitions give Dias+TLie=36, Dias&TLie=6, Dend+TLie=27, Dend&TLie=3, "
    "Dias+TJor=39, Dias&TJor=3, Dend+TLie+TJor=33; Dend&TLie>=3 is forced because the "
    "ternary right-symmetric combination lies in both submodules",
)
def test_lattice_published_values():
    dims = degree3_lattice(P).dims
    assert {k: dims[k] for k in PUBLISHED_LATTICE} == PUBLISHED_LATTICE


@criterion(3)
def test_trs_combination_lies_in_dend_and_tlie():
    # the obstruction behind the xfail above: a nonzero element of Dend & TLie
    mods = degree3_modules(P)
    mu1, mu2 = bb3_triple_products("prelie")
    swap = (1, 3, 2)
    trs = {}
    for sign, part, swapped in [(1, mu1, False), (-1, mu1, True), (-1, mu2, False), (1, mu2, True)]:
        for m, c in part.items():
            m = relabel(m, swap) if swapped else m
            trs[m] = trs.get(m, 0) + sign * c
    v = bb3_vector(trs, P)
    assert v.any()
    assert mods["Dend"].contains(v)
    assert mods["TLie"].contains(v)


# -- 4 ---------------------------------------------------------------------------------------


@criterion(4)
def test_degree5_pre_lie_ranks(prelie5):
    report, seconds, _ = prelie5
    assert report.lifted_rank == 630
    assert report.nullity == 815
    assert report.rank_trace == [630, 745, 770, 800, 815]
    assert seconds < 60


@criterion(4)
def test_degree5_pre_lie_generators(prelie5):
    report = prelie5[0]
    c = report.candidates
    assert len(c) == 4
    assert report.dependent == [c[2]]
    assert sorted(len(g) for g in report.generators) == [6, 8, 16]
    assert all(verify_identity(g, "prelie") for g in report.generators)


@criterion(4)
def test_degree5_pre_lie_published_identities(prelie5):
    published = [Identity.parse(s) for s in catalog.PRE_LIE_DEGREE5]
    assert [len(f) for f in published] == [6, 8, 16]
    assert all(verify_identity(f, "prelie") for f in published)
    assert expansion_term_counts(published[0], "prelie") == [33, 41, 32, 44, 27, 35]
    # published and computed generators span the same module over the liftings
    lifted = lifted_identities(5, "prelie")
    a = symmetrized_span(lifted + published, 5, P)
    b = symmetrized_span(lifted + prelie5[0].generators, 5, P)
    assert a.rank == b.rank == 815
    assert np.array_equal(a.echelon().rows, b.echelon().rows)


# -- 5 ---------------------------------------------------------------------------------------


@criterion(5)
def test_degree5_pre_jordan(prejordan5):
    report, seconds = prejordan5
    assert report.rank == 1105
    assert report.nullity == 335
    assert len(report.generators) == 5
    assert report.rank_trace[-1] == 335
    assert seconds < 60


@criterion(5)
def test_degree5_pre_jordan_published_identities(prejordan5):
    E = build_expansion_matrix(5, "prejordan", P)
    published = [Identity.parse(s) for s in catalog.PRE_JORDAN_DEGREE5]
    assert len(published) == 5
    for f in published:
        assert verify_identity(f, "prejordan")
        assert not ((E @ f.vector(P)) % P).any()
    a = symmetrized_span(published, 5, P)
    b = symmetrized_span(prejordan5[0].generators, 5, P)
    assert a.rank == b.rank == 335
    assert np.array_equal(a.echelon().rows, b.echelon().rows)


# -- 6 ---------------------------------------------------------------------------------------


@criterion(6)
def test_degree7_pre_lie_table(prelie7):
    reports, _ = prelie7
    golden = golden_table("prelie_degree7.tsv")
    assert [r.partition for r in reports] == list(partitions(7))
    for row in table_rows(reports, "prelie"):
        assert [int(x) for x in row] == list(golden[row[0]].values()), row[0]


@criterion(6)
def test_degree7_pre_lie_no_new_identities(prelie7):
    reports, _ = prelie7
    for r in reports:
        assert r.new_count == 0
        assert r.checks["rcf_equal"], r.partition
        assert all(r.checks.values()), r.partition


# -- 7 ---------------------------------------------------------------------------------------


@criterion(7)
def test_degree7_pre_jordan_table(prejordan7):
    reports, _ = prejordan7
    golden = golden_table("prejordan_degree7.tsv")
    for r in reports:
        g = golden["".join(map(str, r.partition))]
        d = hook_length_dimension(r.partition)
        assert (r.d, r.lifrank, r.allrank, r.new_count) == (g["d"], g["L_rank"], g["null"], g["new"])
        assert g["L_rows"] == len(lifted_generators("prejordan")) * d
        # the published rank column equals 429 d - null
        assert g["X_rank"] == 429 * d - r.allrank
        assert r.exprank == 96 * d - r.allrank
        assert all(r.checks.values())
    assert sum(r.new_count for r in reports) == 10


@criterion(7)
def test_degree7_pre_jordan_leading_columns(prejordan7):
    reports, _ = prejordan7
    for r in reports:
        assert len(r.leading_column_diff) == r.new_count
    by = {"".join(map(str, r.partition)): r for r in reports}
    assert by["31111"].leading_column_diff == [375]
    assert by["211111"].leading_column_diff == [149]


# -- 8 ---------------------------------------------------------------------------------------


def _groups_from_catalog():
    return {k: [tuple(t) for t in v] for k, v in catalog.PRE_JORDAN_31111.items()}


@criterion(8)
def test_table3_extraction(table3):
    ids, seconds = table3
    assert len(ids) == 1
    ident = ids[0]
    assert ident.leading_column == 375
    assert ident.scale == 2
    for k, want in [(25, [(15, 2)]), (35, [(9, -4), (14, -4)]), (96, [(5, -2), (12, 3), (15, -1)])]:
        assert ident.groups[k] == want, k
    assert ident.groups[77] == [(5, 8), (9, -4), (12, 4), (14, -4), (15, 6)]
    assert ident.groups == _groups_from_catalog()
    assert seconds < 600


@criterion(8)
def test_table3_identity_verified(table3):
    ident = table3[0][0]
    t0 = time.perf_counter()
    f = ident.to_identity()
    assert verify_identity(f, "prejordan", P)
    broken = Identity(7, dict(f.terms))
    first = next(iter(broken.terms))
    broken.terms[first] += 1
    assert not verify_identity(broken, "prejordan", P)
    assert time.perf_counter() - t0 < 600


# -- 9 ---------------------------------------------------------------------------------------


@criterion(9)
def test_property_confluence_degree4():
    count = 0
    for shape in all_binary(4):
        for word in itertools.permutations(range(1, 5)):
            m = fill(shape, word)
            fast = dict(normalize(m))
            assert dict(rewrite_normal_form(m, "innermost")) == fast
            assert dict(rewrite_normal_form(m, "outermost")) == fast
            count += 1
    assert count == 5 * 8 * 24


@criterion(9)
def test_property_homomorphism_degree7():
    rng = random.Random(2024)
    for shape in partitions(7):
        for _ in range(100):
            a = Permutation(rng.sample(range(1, 8), 7))
            b = Permutation(rng.sample(range(1, 8), 7))
            lhs = natural_rep(shape, a * b, P)
            rhs = natural_rep(shape, a, P) @ natural_rep(shape, b, P) % P
            assert np.array_equal(lhs, rhs), shape


@criterion(9)
def test_property_rank_plus_nullity(prelie5, prejordan5, prelie7, prejordan7):
    for op in ("prelie", "prejordan", "prejordan-lr"):
        E = build_expansion_matrix(3, op, P)
        assert echelon(E, P).rank + nullspace_canonical_basis(E, P).shape[0] == E.shape[1]
    for report in (prelie5[0], prejordan5[0]):
        assert report.checks["rank_plus_nullity"]
        assert report.rank + report.nullity == 1440
    for reports in (prelie7[0], prejordan7[0]):
        for r in reports:
            assert r.checks["rank_plus_nullity"]
            assert r.exprank + r.allrank == 96 * r.d


@criterion(9)
def test_property_matrix_units_31111():
    shape = (3, 1, 1, 1, 1)
    d = hook_length_dimension(shape)
    rng = random.Random(7)
    zero = GroupAlgebraElement(7, P)
    for n in range(20):
        i, j, k, l = (rng.randint(1, d) for _ in range(4))
        if n % 2 == 0:
            k = j
        lhs = matrix_unit_element(shape, i, j, P) * matrix_unit_element(shape, k, l, P)
        rhs = matrix_unit_element(shape, i, l, P) if j == k else zero
        assert lhs == rhs, (i, j, k, l)


# -- 10 --------------------------------------------------------------------------------------


@criterion(10)
def test_degree5_rank_warning(prelie5):
    report, _, logged = prelie5
    assert report.rank == 625
    assert report.nullity == 815
    assert report.rank + report.nullity == 1440
    assert len(report.warnings) == 1
    assert "815" in report.warnings[0] and "625" in report.warnings[0]
    assert report.warnings[0] in logged
    assert report.to_json()["warnings"] == report.warnings


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", "-p", "no:cacheprovider"]))
