"""
Degree 5: module generators beyond the liftings
===============================================

The degree-3 identity lifts to 12 identities of degree 5.  Their S_5-orbits
fill part of the kernel of the 5040 x 1440 expansion matrix; a greedy pass
over the kernel basis, shortest vectors first, finds what is missing.
"""

from __future__ import annotations

import logging

from dendriform import catalog
from dendriform.identities import Identity, analyze, expansion_term_counts, liftings, verify_identity

logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")

trs = Identity.parse(catalog.TERNARY_RIGHT_SYMMETRIC)
lifts = liftings(trs)
print(len(lifts), "liftings, e.g.", lifts[0].pretty)

# pre-Lie: a warning is logged about the rank/nullity of this matrix
report = analyze(5, "prelie")
print("rank", report.rank, "nullity", report.nullity)
print("rank trace", report.rank_trace)
print("rank-raising candidates", report.candidates, "dependent", report.dependent)
for g in report.generators:
    print(f"  {len(g):3d} terms, verified={verify_identity(g, 'prelie')}")

# the published generators, and how long each term gets after expansion
first = Identity.parse(catalog.PRE_LIE_DEGREE5[0])
print(first.pretty)
print("expanded sizes", expansion_term_counts(first, "prelie"))

# pre-Jordan: nothing to lift from degree 3, five generators
report = analyze(5, "prejordan")
print("pre-Jordan rank", report.rank, "nullity", report.nullity)
print("trace", report.rank_trace)
print("generator sizes", [len(g) for g in report.generators])
