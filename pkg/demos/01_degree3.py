"""
Degree 3: where the first identity comes from
=============================================

Expand both ternary brackets through the pre-Lie product a.b = a<b - b>a,
find the kernel of the expansion map, and look at the degree-3 submodules
of the free algebra with two binary operations.
"""

from __future__ import annotations

import numpy as np

from dendriform.freealg import dd_basis, render, tt_basis
from dendriform.identities import Identity, build_expansion_matrix, degree3_lattice
from dendriform.modlinalg import nullspace_canonical_basis, rank
from dendriform.products import expand_tt_monomial

p = 101

# 12 multilinear TT-monomials go to 30 normal dendriform monomials
tt, dd = tt_basis(3), dd_basis(3)
print(f"TT_3 has {tt.dim} monomials, DD_3 has {dd.dim}")

m = tt.monomial(0)
print(render(m), "->", expand_tt_monomial(m, "prelie"))

# the kernel is 3-dimensional
E = build_expansion_matrix(3, "prelie", p)
N = nullspace_canonical_basis(E, p)
print("rank", rank(E, p), "nullity", len(N))
for row in N:
    print("  ", Identity.from_vector(row, 3, p).pretty)

# one element generates it: the ternary right-symmetric identity
trs = Identity.parse("[a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2")
orbit = np.array([trs.relabel(s).vector(p) for s in [(1, 2, 3), (2, 1, 3), (3, 2, 1)]])
print("rank of three permutations:", rank(orbit, p))
print("rank together with the kernel:", rank(np.vstack([orbit, N]), p))

# the pre-Jordan operations have no identity in degree 3
E = build_expansion_matrix(3, "prejordan-lr", p)
print("pre-Jordan rank", rank(E, p), "of", E.shape[1])

# submodule lattice in degree 3
lat = degree3_lattice(p)
for key, value in lat.dims.items():
    print(f"  {key:16s} {value}")
print(lat.equalities)
