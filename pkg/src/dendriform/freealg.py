"""Monomials and ordered multilinear bases for the TT and DD spaces.

Trees are plain nested tuples so they hash and compare structurally:

* a TT-monomial is a variable index ``int`` or ``(k, x, y, z)`` with
  ``k in (1, 2)`` standing for ``[x, y, z]_k``;
* a DD-monomial is a variable index or ``(op, x, y)`` with ``op`` one of
  ``"<"`` (the operation prec) and ``">"`` (succ).

Types are the same trees with every leaf replaced by ``0``.
"""

from __future__ import annotations

import re
from functools import cache

import numpy as np

from .symmetric import symmetric_group

PREC = "<"
SUCC = ">"
LETTERS = "abcdefghijklmnopqrstuvwxyz"


# -- type enumeration ----------------------------------------------------------


@cache
def enumerate_tt_types(n: int) -> tuple:
    """TT-types of odd degree ``n`` in the canonical recursive order."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"TT-types exist only in odd degree, got {n}")
    if n == 1:
        return (0,)
    out = []
    for i in range(1, n - 1, 2):
        for j in range(1, n - i, 2):
            for x in enumerate_tt_types(n - i - j):
                for y in enumerate_tt_types(j):
                    for z in enumerate_tt_types(i):
                        out.append((1, x, y, z))
                        out.append((2, x, y, z))
    return tuple(out)


@cache
def enumerate_dd_types(n: int) -> tuple:
    """Normal DD-types of degree ``n`` in the canonical recursive order."""
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return (0,)
    out = []
    for w in enumerate_dd_types(n - 1):
        out.append((PREC, 0, w))
        out.append((SUCC, 0, w))
    for i in range(1, n - 1):
        for v in enumerate_dd_types(i):
            for w in enumerate_dd_types(n - 1 - i):
                out.append((SUCC, (SUCC, 0, v), w))
    return tuple(out)


# -- tree helpers ----------------------------------------------------------------


def is_tt(tree) -> bool:
    return isinstance(tree, tuple) and tree[0] in (1, 2)


def leaves(tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    out = []
    for child in tree[1:]:
        out.extend(leaves(child))
    return out


def degree(tree) -> int:
    return len(leaves(tree))


def shape_of(tree):
    """The type of a monomial: its tree with leaves erased."""
    if isinstance(tree, int):
        return 0
    return (tree[0],) + tuple(shape_of(c) for c in tree[1:])


def fill(shape, word):
    """Place the variables of ``word`` on the leaves of a type, left to right."""
    it = iter(word)

    def go(t):
        if t == 0:
            return next(it)
        return (t[0],) + tuple(go(c) for c in t[1:])

    return go(shape)


def relabel(tree, mapping):
    """Replace each leaf ``i`` by ``mapping[i]`` (a dict or a 1-based sequence)."""
    if isinstance(tree, int):
        return mapping[tree] if isinstance(mapping, dict) else mapping[tree - 1]
    return (tree[0],) + tuple(relabel(c, mapping) for c in tree[1:])


def substitute(tree, mapping):
    """Replace leaves by arbitrary subtrees; unmapped leaves are kept."""
    if isinstance(tree, int):
        return mapping.get(tree, tree)
    return (tree[0],) + tuple(substitute(c, mapping) for c in tree[1:])


def apply_permutation(sigma, tree):
    """Act by ``sigma . x_i = x_sigma(i)`` on a multilinear monomial."""
    sigma = tuple(sigma)
    if sorted(leaves(tree)) != list(range(1, len(sigma) + 1)):
        raise ValueError("permutation degree does not match the monomial")
    return relabel(tree, sigma)


# -- ordered bases -----------------------------------------------------------------


class Basis:
    """Ordered multilinear basis: by type, then by lex rank of the leaf word.

    Indices are 0-based here: ``index = type_rank * n! + perm_rank``.
    """

    def __init__(self, space: str, n: int):
        if space == "TT":
            self.types = enumerate_tt_types(n)
        elif space == "DD":
            self.types = enumerate_dd_types(n)
        else:
            raise ValueError(f"unknown space {space!r}")
        self.space = space
        self.n = n
        self.group = symmetric_group(n)
        self.type_rank = {t: k for k, t in enumerate(self.types)}
        self.dim = len(self.types) * self.group.order

    def __len__(self) -> int:
        return self.dim

    def locate(self, monomial) -> tuple[int, int]:
        """``(type_rank, perm_rank)`` of a multilinear monomial."""
        word = leaves(monomial)
        if sorted(word) != list(range(1, self.n + 1)):
            raise ValueError(f"not a multilinear monomial of degree {self.n}")
        shape = shape_of(monomial)
        if shape not in self.type_rank:
            what = "normal DD-type" if self.space == "DD" else "TT-type"
            raise ValueError(f"{render(monomial)} does not have a {what}")
        return self.type_rank[shape], self.group.index(word)

    def index(self, monomial) -> int:
        t, k = self.locate(monomial)
        return t * self.group.order + k

    def monomial(self, index: int):
        if not 0 <= index < self.dim:
            raise IndexError(index)
        t, k = divmod(index, self.group.order)
        return fill(self.types[t], self.group.perms[k].tolist())

    def __iter__(self):
        return (self.monomial(i) for i in range(self.dim))

    def permutation_table(self) -> np.ndarray:
        """``table[s, i]``: basis index of ``perms[s] . monomial(i)``."""
        G = self.group
        ranks = np.stack([G.left_multiply(s) for s in range(G.order)])
        offsets = np.arange(len(self.types)) * G.order
        return (offsets[None, :, None] + ranks[:, None, :]).reshape(G.order, self.dim)


@cache
def tt_basis(n: int) -> Basis:
    return Basis("TT", n)


@cache
def dd_basis(n: int) -> Basis:
    return Basis("DD", n)


def monomial_to_index(monomial) -> tuple[str, int]:
    """Space tag and 0-based basis index of a multilinear monomial."""
    space = "TT" if is_tt(monomial) else "DD"
    basis = tt_basis(degree(monomial)) if space == "TT" else dd_basis(degree(monomial))
    return space, basis.index(monomial)


def index_to_monomial(space: str, n: int, index: int):
    return (tt_basis(n) if space == "TT" else dd_basis(n)).monomial(index)


# -- text form ---------------------------------------------------------------------


def variable_name(i: int) -> str:
    return LETTERS[i - 1] if 1 <= i <= len(LETTERS) else f"x{i}"


def render(tree) -> str:
    """``[a,b,c]_1`` for TT-monomials, ``a<(b>c)`` for DD-monomials."""
    if isinstance(tree, int):
        return variable_name(tree) if tree else "*"
    if is_tt(tree):
        return "[" + ",".join(render(c) for c in tree[1:]) + f"]_{tree[0]}"
    op, x, y = tree

    def side(t):
        return render(t) if isinstance(t, int) else f"({render(t)})"

    return f"{side(x)}{op}{side(y)}"


def render_polynomial(terms, p: int | None = None) -> str:
    """Render ``{monomial: coeff}`` as ``c1 m1 + c2 m2 ...`` with symmetric coefficients."""
    parts = []
    for mono, c in terms.items():
        if p:
            c = c % p
            c = c - p if c > p // 2 else c
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)} "
        parts.append(f"{sign} {mag}{render(mono)}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


class _Parser:
    def __init__(self, text: str):
        self.text = text.replace(" ", "")
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, s: str):
        if not self.text.startswith(s, self.pos):
            raise ValueError(f"expected {s!r} at {self.pos} in {self.text!r}")
        self.pos += len(s)

    def variable(self) -> int:
        ch = self.peek()
        if ch in LETTERS and ch:
            self.pos += 1
            return LETTERS.index(ch) + 1
        if ch == "x":
            m = re.match(r"x(\d+)", self.text[self.pos :])
            self.pos += m.end()
            return int(m.group(1))
        raise ValueError(f"unexpected {ch!r} at {self.pos} in {self.text!r}")

    def atom(self):
        ch = self.peek()
        if ch == "[":
            self.take("[")
            args = [self.expr()]
            for _ in range(2):
                self.take(",")
                args.append(self.expr())
            self.take("]_")
            k = int(self.text[self.pos])
            self.pos += 1
            return (k, *args)
        if ch == "(":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner
        return self.variable()

    def expr(self):
        left = self.atom()
        if self.peek() in (PREC, SUCC) and self.peek():
            op = self.peek()
            self.pos += 1
            right = self.atom()
            return (op, left, right)
        return left


def parse_monomial(text: str):
    """Inverse of :func:`render` (binary operations must be parenthesized)."""
    parser = _Parser(text)
    tree = parser.expr()
    if parser.pos != len(parser.text):
        raise ValueError(f"trailing input in {text!r}")
    return tree


def parse_polynomial(text: str) -> dict:
    """Parse ``"[a,b,c]_1 - 2 [a,c,b]_1 + ..."`` into ``{monomial: coeff}``."""
    terms: dict = {}
    chunks = re.split(r"(?<=[\]\)a-z0-9])\s*(?=[+-])", text.strip())
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:].strip()
        coeff = 1
        if chunk[0].isdigit():
            m = re.match(r"(\d+)\s*\*?\s*", chunk)
            coeff = int(m.group(1))
            chunk = chunk[m.end() :]
        mono = parse_monomial(chunk)
        terms[mono] = terms.get(mono, 0) + sign * coeff
    return {m: c for m, c in terms.items() if c}
