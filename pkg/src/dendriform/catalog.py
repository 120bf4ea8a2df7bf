"""Published identities and coefficient tables, kept as text for parsing.

Polynomials use the bracket notation of :func:`dendriform.freealg.render`;
pre-Lie identities use the operations ``(a.b).c`` and ``a.(b.c)``, pre-Jordan
ones the plain pre-Jordan triple products.
"""

from __future__ import annotations

TERNARY_RIGHT_SYMMETRIC = "[a,b,c]_1 - [a,c,b]_1 - [a,b,c]_2 + [a,c,b]_2"

# generators of the degree-5 pre-Lie identities beyond the liftings of the above
PRE_LIE_DEGREE5 = (
    (
        "[[a,b,c]_1,d,e]_2 - [[a,d,e]_2,b,c]_1 + [a,[d,e,b]_1,c]_1 - [a,[b,d,e]_2,c]_1 + "
        "[a,b,[d,e,c]_1]_1 - [a,b,[c,d,e]_2]_1"
    ),
    (
        "[[a,b,c]_1,d,e]_1 - [[a,d,b]_1,c,e]_1 + [[a,d,c]_1,b,e]_1 - [[a,c,b]_1,d,e]_1 - "
        "[a,[b,c,d]_1,e]_1 + [a,[d,b,c]_1,e]_1 - [a,[d,c,b]_1,e]_1 + [a,[c,b,d]_1,e]_1"
    ),
    (
        "[[a,b,c]_1,d,e]_2 - [[a,d,e]_2,b,c]_1 + [[a,d,e]_2,b,c]_2 - [[a,b,c]_2,d,e]_2 + "
        "[a,[d,e,b]_1,c]_1 + [a,[d,e,c]_1,b]_1 - [a,[b,c,e]_1,d]_1 - [a,[d,e,c]_1,b]_2 + "
        "[a,[b,c,e]_1,d]_2 - [a,[b,d,e]_2,c]_1 - [a,[c,d,e]_2,b]_1 - [a,[d,b,c]_2,e]_2 + "
        "[a,[b,d,e]_2,c]_2 + [a,[c,d,e]_2,b]_2 + [a,d,[b,c,e]_1]_1 - [a,d,[e,b,c]_2]_2"
    ),
)

# degree-5 pre-Jordan module generators
PRE_JORDAN_DEGREE5 = (
    (
        "[[a,b,c]_1,d,e]_1 + [[b,a,c]_1,d,e]_1 + [[c,a,b]_2,d,e]_1 + [[c,b,a]_2,d,e]_1 - "
        "[a,[b,c,d]_1,e]_1 - [a,[c,b,d]_1,e]_1 - [b,[a,c,d]_1,e]_1 - [b,[c,a,d]_1,e]_1 - "
        "[c,[a,b,d]_1,e]_1 - [c,[b,a,d]_1,e]_1 + [a,[c,b,d]_2,e]_1 + [b,[c,a,d]_2,e]_1"
    ),
    (
        "[[b,d,a]_1,c,e]_2 + [[b,d,c]_1,a,e]_2 + [[a,b,d]_2,c,e]_2 + [[c,b,d]_2,a,e]_2 - "
        "[a,[b,d,c]_1,e]_2 - [c,[b,d,a]_1,e]_2 - [a,[c,b,d]_2,e]_2 - [c,[a,b,d]_2,e]_2 + "
        "[a,c,[b,d,e]_1]_1 - [b,d,[a,c,e]_1]_1 - [b,d,[c,a,e]_1]_1 + [c,a,[b,d,e]_1]_1"
    ),
    (
        "[[b,c,d]_1,a,e]_1 + [[d,b,c]_2,a,e]_1 + [a,[b,c,d]_1,e]_1 - [a,[b,c,d]_1,e]_2 - "
        "[d,[b,c,a]_1,e]_2 + [a,[d,b,c]_2,e]_1 - [a,[d,b,c]_2,e]_2 - [d,[a,b,c]_2,e]_2 - "
        "[b,c,[a,d,e]_1]_1 - [b,c,[d,a,e]_1]_1 + [d,a,[b,c,e]_1]_2 + [b,c,[a,d,e]_2]_1"
    ),
    (
        "[a,[b,c,d]_1,e]_2 + [a,[c,b,d]_1,e]_2 + [a,[d,b,c]_2,e]_2 + [a,[d,c,b]_2,e]_2 - "
        "[a,b,[c,d,e]_1]_2 - [a,b,[d,c,e]_1]_2 - [a,c,[b,d,e]_1]_2 - [a,c,[d,b,e]_1]_2 - "
        "[a,d,[b,c,e]_1]_2 - [a,d,[c,b,e]_1]_2 + [a,b,[d,c,e]_2]_2 + [a,c,[d,b,e]_2]_2"
    ),
    (
        "[[a,c,b]_1,d,e]_2 + [[a,c,d]_1,b,e]_2 + [[c,a,b]_1,d,e]_2 + [[c,a,d]_1,b,e]_2 + "
        "[[c,d,b]_1,a,e]_2 + [[d,a,b]_1,c,e]_2 + [[d,a,c]_1,b,e]_2 + [[d,b,a]_1,c,e]_2 + "
        "[[d,b,c]_1,a,e]_2 + [[d,c,b]_1,a,e]_2 + [[a,d,b]_2,c,e]_2 + [[b,a,c]_2,d,e]_2 + "
        "[[b,c,a]_2,d,e]_2 + [[b,c,d]_2,a,e]_2 + [[b,d,a]_2,c,e]_2 + [[b,d,c]_2,a,e]_2 + "
        "[[c,d,a]_2,b,e]_2 + [[c,d,b]_2,a,e]_2 + [[d,a,c]_2,b,e]_2 + [[d,c,a]_2,b,e]_2 - "
        "[a,[b,c,d]_1,e]_1 - [a,[b,d,c]_1,e]_1 - [a,[c,b,d]_1,e]_1 - [a,[c,d,b]_1,e]_1 - "
        "[a,[d,b,c]_1,e]_1 - [a,[d,c,b]_1,e]_1 - [b,[a,c,d]_1,e]_1 - [b,[a,d,c]_1,e]_1 - "
        "[b,[c,a,d]_1,e]_1 - [b,[c,d,a]_1,e]_1 - [b,[d,a,c]_1,e]_1 - [b,[d,c,a]_1,e]_1 - "
        "[c,[a,b,d]_1,e]_1 - [c,[a,d,b]_1,e]_1 - [c,[b,a,d]_1,e]_1 - [c,[b,d,a]_1,e]_1 - "
        "[c,[d,a,b]_1,e]_1 - [c,[d,b,a]_1,e]_1 - [d,[a,b,c]_1,e]_1 - [d,[a,c,b]_1,e]_1 - "
        "[d,[b,a,c]_1,e]_1 - [d,[b,c,a]_1,e]_1 - [d,[c,a,b]_1,e]_1 - [d,[c,b,a]_1,e]_1 - "
        "[a,[d,b,c]_1,e]_2 + [b,[a,d,c]_1,e]_2 + [c,[a,d,b]_1,e]_2 - [c,[d,b,a]_1,e]_2 - "
        "[a,[c,d,b]_2,e]_2 + [b,[c,a,d]_2,e]_2 - [c,[a,d,b]_2,e]_2 + [c,[b,a,d]_2,e]_2 + "
        "[a,b,[c,d,e]_1]_1 + [a,b,[d,c,e]_1]_1 + [a,c,[d,b,e]_1]_1 + [a,d,[b,c,e]_1]_1 + "
        "[a,d,[c,b,e]_1]_1 + [b,a,[c,d,e]_1]_1 + [b,a,[d,c,e]_1]_1 + [b,c,[d,a,e]_1]_1 + "
        "[b,d,[a,c,e]_1]_1 + [b,d,[c,a,e]_1]_1 + [c,a,[d,b,e]_1]_1 + [c,b,[d,a,e]_1]_1 - "
        "[b,a,[c,d,e]_1]_2 - [b,a,[d,c,e]_1]_2 - [b,c,[a,d,e]_1]_2 - [b,c,[d,a,e]_1]_2 - "
        "[b,d,[a,c,e]_1]_2 - [b,d,[c,a,e]_1]_2 - [c,a,[d,b,e]_2]_2 - [d,a,[c,b,e]_2]_2"
    ),
)

# new degree-7 pre-Jordan identity for the partition 31111:
# TT-type (1-based) -> ((j, coeff), ...) meaning coeff * D_{1,j}, after doubling
PRE_JORDAN_31111 = {
    25: ((15, 2),),
    26: ((14, 2), (15, -1),),
    28: ((12, -1), (15, -2),),
    30: ((14, 2), (15, 1),),
    32: ((12, 1), (15, -2),),
    35: ((9, -4), (14, -4),),
    36: ((9, 2), (15, -1),),
    37: ((15, -2),),
    39: ((5, -2), (9, 2), (12, 2), (14, 2),),
    40: ((5, 2), (9, -2), (15, 3),),
    43: ((5, 4),),
    44: ((15, -1),),
    45: ((15, 2),),
    48: ((15, -1),),
    49: ((12, 4),),
    50: ((5, 2), (9, 2), (14, 2), (15, -1),),
    51: ((5, -2), (15, -2),),
    52: ((9, -2),),
    53: ((5, -1), (9, -1), (14, -2), (15, 2),),
    54: ((5, 1), (9, -3), (14, -2),),
    55: ((5, 3), (12, -3),),
    56: ((9, -1),),
    58: ((12, 2), (15, 2),),
    62: ((12, 2), (14, -2),),
    63: ((12, 2), (14, 2), (15, -2),),
    64: ((12, -4), (15, 4),),
    66: ((9, 2), (12, -1), (14, 2),),
    68: ((9, 4), (12, -4), (14, 2), (15, -1),),
    70: ((5, -3), (9, 2), (12, -4), (15, -6),),
    71: ((5, 2), (9, -2), (12, 2), (14, -4), (15, 4),),
    72: ((5, -4), (12, -4), (14, 2), (15, -1),),
    75: ((15, -1),),
    76: ((5, -2), (15, 2),),
    77: ((5, 8), (9, -4), (12, 4), (14, -4), (15, 6),),
    78: ((5, -6), (9, 2), (12, -2), (14, 2), (15, 2),),
    79: ((5, -4), (9, 2), (12, -2), (14, 2), (15, -5),),
    80: ((5, 4), (15, -4),),
    83: ((5, -2), (9, 1), (15, -1),),
    84: ((9, -1), (14, -2), (15, 2),),
    85: ((5, -8), (9, 6), (12, -4), (14, 4), (15, -4),),
    86: ((5, 6), (9, 2), (12, 2), (14, -2), (15, 2),),
    87: ((5, 2), (9, -1), (12, 1), (14, -2), (15, 2),),
    88: ((9, -1), (12, 2), (15, 2),),
    89: ((5, 2), (9, -2), (12, -2), (14, -1), (15, 1),),
    90: ((14, 1), (15, 1),),
    91: ((5, 2), (12, 1), (14, -1), (15, -1),),
    92: ((5, -3), (12, 1), (14, 1), (15, -1),),
    93: ((5, -2), (9, -1), (12, -1), (14, 1),),
    94: ((5, 3), (9, -2), (12, 2), (14, -1),),
    95: ((12, 1), (15, 1),),
    96: ((5, -2), (12, 3), (15, -1),),
}
