"""
Degree 7: one irreducible representation at a time
==================================================

The degree-7 spaces are far too large to handle directly (483840 TT-monomials),
but every S_7-module splits into isotypic components.  For each partition the
lifted identities and the expansion map become block matrices of size d x d,
and the ranks are compared component by component.
"""

from __future__ import annotations

import sys

from dendriform.cli import TSV_HEADER, table_rows
from dendriform.degree7 import analyze_all, expansion_residual, extract_new_identities
from dendriform.identities import verify_identity
from dendriform.symmetric import hook_length_dimension, partitions

op = sys.argv[1] if len(sys.argv) > 1 else "prejordan"
quick = [(7,), (6, 1), (3, 1, 1, 1, 1), (2, 1, 1, 1, 1, 1), (1,) * 7]

for shape in partitions(7):
    print("".join(map(str, shape)), "d =", hook_length_dimension(shape))

reports = analyze_all(op, quick)
print("\t".join(TSV_HEADER))
for row in table_rows(reports, op):
    print("\t".join(map(str, row)))

# for pre-Jordan the hook 31111 carries one identity that is not a consequence
# of degree 5; read it off the row of RCF(K) with a new leading column
if op == "prejordan":
    (ident,) = extract_new_identities((3, 1, 1, 1, 1), op)
    print("row", ident.row, "leading column", ident.leading_column)
    print("raw residues", ident.raw_values())
    print(ident.render()[:300], "...")
    print("residual after expansion:", expansion_residual(ident.group_algebra(), op, ident.prime))
    f = ident.to_identity()
    print(len(f), "multilinear terms, verified mod p:", verify_identity(f, op, ident.prime))
