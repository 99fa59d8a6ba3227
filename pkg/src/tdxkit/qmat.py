"""Matrices over the free quantale: the semiring Mat(Q, P(B*)).

Everything here is pure value manipulation: multiplication, idempotent
union, Kleene star by block elimination, structural evaluation of a regex
in the matrix quantale (the language-indexed extension used by transducer
composition), the synchronous-product tensor, and generic block flattening.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .errors import FrameMismatch, InputError
from .lang import Alphabet, Concat, Empty, Epsilon, Letter, RegularLanguage, Star, Union, sigma


class LangMatrix:
    """A total finite matrix of RegularLanguages over one shared alphabet.

    Rows and columns are indexed by ordered state sets; states may be any
    hashable values (strings, or tuples built by product constructions).
    """

    __slots__ = ("rows", "cols", "alphabet", "entries")

    def __init__(self, rows: Sequence, cols: Sequence, alphabet: Alphabet,
                 entries: Mapping):
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.alphabet = alphabet
        if len(set(self.rows)) != len(self.rows) or len(set(self.cols)) != len(self.cols):
            raise InputError("duplicate states in matrix index")
        table = {}
        for r in self.rows:
            for c in self.cols:
                try:
                    lang = entries[(r, c)]
                except KeyError:
                    raise InputError("missing entry at (%r, %r)" % (r, c))
                if lang.alphabet != alphabet:
                    raise FrameMismatch("entry (%r, %r) over a different alphabet" % (r, c))
                table[(r, c)] = lang
        self.entries = table

    @classmethod
    def from_grid(cls, rows, cols, alphabet, grid) -> "LangMatrix":
        entries = {}
        for i, r in enumerate(rows):
            for j, c in enumerate(cols):
                entries[(r, c)] = grid[i][j]
        return cls(rows, cols, alphabet, entries)

    @classmethod
    def identity(cls, states, alphabet) -> "LangMatrix":
        eps = RegularLanguage.epsilon(alphabet)
        emp = RegularLanguage.empty(alphabet)
        return cls(states, states, alphabet,
                   {(r, c): (eps if r == c else emp) for r in states for c in states})

    @classmethod
    def zero(cls, rows, cols, alphabet) -> "LangMatrix":
        emp = RegularLanguage.empty(alphabet)
        return cls(rows, cols, alphabet, {(r, c): emp for r in rows for c in cols})

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, r, c) -> RegularLanguage:
        return self.entries[(r, c)]

    def grid(self):
        return [[self.entries[(r, c)] for c in self.cols] for r in self.rows]

    def mul(self, other: "LangMatrix") -> "LangMatrix":
        if self.cols != other.rows:
            raise FrameMismatch("inner dimensions differ: %r vs %r"
                                % (self.cols, other.rows))
        if self.alphabet != other.alphabet:
            raise FrameMismatch("matrix alphabets differ")
        entries = {}
        for r in self.rows:
            for c in other.cols:
                acc = RegularLanguage.empty(self.alphabet)
                for k in self.cols:
                    acc = acc.union(self.entries[(r, k)].concat(other.entries[(k, c)]))
                entries[(r, c)] = acc
        return LangMatrix(self.rows, other.cols, self.alphabet, entries)

    def union(self, other: "LangMatrix") -> "LangMatrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise FrameMismatch("matrix shapes differ")
        if self.alphabet != other.alphabet:
            raise FrameMismatch("matrix alphabets differ")
        return LangMatrix(self.rows, self.cols, self.alphabet,
                          {k: self.entries[k].union(other.entries[k])
                           for k in self.entries})

    def star(self) -> "LangMatrix":
        """Kleene star by the 2x2 block recursion, first state as pivot."""
        if not self.is_square:
            raise FrameMismatch("star needs a square matrix")
        n = len(self.rows)
        if n == 0:
            return self
        if n == 1:
            r = self.rows[0]
            return LangMatrix(self.rows, self.rows, self.alphabet,
                              {(r, r): self.entries[(r, r)].star()})
        head, rest = self.rows[0], self.rows[1:]
        a = self.entries[(head, head)]
        b = {c: self.entries[(head, c)] for c in rest}
        c = {r: self.entries[(r, head)] for r in rest}
        d = LangMatrix(rest, rest, self.alphabet,
                       {(r, cc): self.entries[(r, cc)] for r in rest for cc in rest})
        ds = d.star()
        # f = (a + b d* c)*
        acc = a
        for i in rest:
            for j in rest:
                acc = acc.union(b[i].concat(ds.entries[(i, j)]).concat(c[j]))
        f = acc.star()
        entries = {(head, head): f}
        for j in rest:
            # f b d*
            s = RegularLanguage.empty(self.alphabet)
            for k in rest:
                s = s.union(b[k].concat(ds.entries[(k, j)]))
            entries[(head, j)] = f.concat(s)
        for i in rest:
            # d* c f
            s = RegularLanguage.empty(self.alphabet)
            for k in rest:
                s = s.union(ds.entries[(i, k)].concat(c[k]))
            entries[(i, head)] = s.concat(f)
        for i in rest:
            for j in rest:
                entries[(i, j)] = ds.entries[(i, j)].union(
                    entries[(i, head)].concat(entries[(head, j)]))
        return LangMatrix(self.rows, self.rows, self.alphabet, entries)

    def equals(self, other: "LangMatrix") -> bool:
        if self.rows != other.rows or self.cols != other.cols:
            return False
        if self.alphabet != other.alphabet:
            return False
        return all(self.entries[k].equals(other.entries[k]) for k in self.entries)

    def relabel(self, row_map: Mapping, col_map: Mapping, new_rows, new_cols) -> "LangMatrix":
        """Transport along state bijections; new index order as given."""
        entries = {}
        for r in self.rows:
            for c in self.cols:
                entries[(row_map[r], col_map[c])] = self.entries[(r, c)]
        return LangMatrix(new_rows, new_cols, self.alphabet, entries)

    def map_entries(self, fn: Callable[[RegularLanguage], RegularLanguage],
                    alphabet: Alphabet) -> "LangMatrix":
        return LangMatrix(self.rows, self.cols, alphabet,
                          {k: fn(v) for k, v in self.entries.items()})

    def __repr__(self):
        body = "; ".join("%r->%r: %s" % (r, c, self.entries[(r, c)].text())
                         for r in self.rows for c in self.cols)
        return "LangMatrix[%s]" % body


def mat_mul(m: LangMatrix, n: LangMatrix) -> LangMatrix:
    return m.mul(n)


def mat_union(m: LangMatrix, n: LangMatrix) -> LangMatrix:
    return m.union(n)


def mat_identity(states, alphabet) -> LangMatrix:
    return LangMatrix.identity(states, alphabet)


def mat_zero(rows, cols, alphabet) -> LangMatrix:
    return LangMatrix.zero(rows, cols, alphabet)


def mat_star(m: LangMatrix) -> LangMatrix:
    return m.star()


def extend(r: RegularLanguage, assign: Mapping[str, LangMatrix]) -> LangMatrix:
    """Evaluate a regex structurally in the matrix quantale.

    ``assign`` sends each symbol of r's alphabet to a square matrix; all
    matrices must share their index set and alphabet.  Empty goes to the
    zero matrix, Epsilon to the identity, Union/Concat/Star to the matrix
    operations.  This is the language-indexed extension of a transducer,
    evaluated at a rational argument.
    """
    states = None
    out_alpha = None
    for sym in r.alphabet.symbols:
        if sym not in assign:
            raise InputError("extend: symbol %r unassigned" % sym)
        mat = assign[sym]
        if not mat.is_square:
            raise FrameMismatch("extend: matrix for %r is not square" % sym)
        if states is None:
            states, out_alpha = mat.rows, mat.alphabet
        elif mat.rows != states or mat.alphabet != out_alpha:
            raise FrameMismatch("extend: matrices disagree on states or alphabet")
    if states is None:
        raise InputError("extend needs a nonempty input alphabet; "
                         "pass the states explicitly via extend_with_states")
    return _eval_expr(r.expr, assign, states, out_alpha)


def extend_with_states(r: RegularLanguage, assign: Mapping[str, LangMatrix],
                       states, alphabet: Alphabet) -> LangMatrix:
    """Like extend, but usable when r's alphabet is empty."""
    return _eval_expr(r.expr, assign, tuple(states), alphabet)


def _eval_expr(expr, assign, states, alphabet) -> LangMatrix:
    if isinstance(expr, Empty):
        return LangMatrix.zero(states, states, alphabet)
    if isinstance(expr, Epsilon):
        return LangMatrix.identity(states, alphabet)
    if isinstance(expr, Letter):
        return assign[expr.symbol]
    if isinstance(expr, Union):
        return _eval_expr(expr.left, assign, states, alphabet).union(
            _eval_expr(expr.right, assign, states, alphabet))
    if isinstance(expr, Concat):
        return _eval_expr(expr.left, assign, states, alphabet).mul(
            _eval_expr(expr.right, assign, states, alphabet))
    if isinstance(expr, Star):
        return _eval_expr(expr.inner, assign, states, alphabet).star()
    raise TypeError("not a regex AST node: %r" % (expr,))


def sigma_tensor(m: LangMatrix, n: LangMatrix) -> LangMatrix:
    """Entrywise synchronous product; index set is the lexicographic product."""
    if not (m.is_square and n.is_square):
        raise FrameMismatch("sigma_tensor needs square matrices")
    states = tuple((p, q) for p in m.rows for q in n.rows)
    alphabet = m.alphabet.product(n.alphabet)
    entries = {}
    for p in m.rows:
        for q in n.rows:
            for p2 in m.rows:
                for q2 in n.rows:
                    entries[((p, q), (p2, q2))] = sigma(m.entries[(p, p2)],
                                                        n.entries[(q, q2)])
    return LangMatrix(states, states, alphabet, entries)


# ---------------------------------------------------------------------------
# block matrices and flattening


class BlockMatrix:
    """A p-by-p' outer grid of q-by-q' inner grids with opaque entries."""

    __slots__ = ("cells",)

    def __init__(self, cells):
        outer = tuple(tuple(row) for row in cells)
        if not outer or not outer[0]:
            raise InputError("block matrix needs at least one cell")
        widths = {len(row) for row in outer}
        if len(widths) != 1:
            raise InputError("ragged outer grid")
        norm = []
        inner_shape = None
        for row in outer:
            norm_row = []
            for cell in row:
                grid = tuple(tuple(r) for r in cell)
                shape = (len(grid), len(grid[0]) if grid else 0)
                if any(len(r) != shape[1] for r in grid):
                    raise InputError("ragged inner grid")
                if inner_shape is None:
                    inner_shape = shape
                elif shape != inner_shape:
                    raise InputError("inner grids of unequal shape")
                norm_row.append(grid)
            norm.append(tuple(norm_row))
        self.cells = tuple(norm)

    @property
    def outer_shape(self):
        return (len(self.cells), len(self.cells[0]))

    @property
    def inner_shape(self):
        first = self.cells[0][0]
        return (len(first), len(first[0]) if first else 0)

    def flatten(self):
        """Outer-row-major placement: block (i,j) row r lands at global
        row i*q + r, column j*q' + c."""
        p, p2 = self.outer_shape
        q, q2 = self.inner_shape
        out = [[None] * (p2 * q2) for _ in range(p * q)]
        for i in range(p):
            for j in range(p2):
                cell = self.cells[i][j]
                for r in range(q):
                    for c in range(q2):
                        out[i * q + r][j * q2 + c] = cell[r][c]
        return out

    @classmethod
    def unflatten(cls, grid, p, q):
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if rows % p or p <= 0:
            raise InputError("grid rows not divisible into %d blocks" % p)
        if cols % q or q <= 0:
            raise InputError("grid cols not divisible into %d blocks" % q)
        bh, bw = rows // p, cols // q
        cells = [[[[grid[i * bh + r][j * bw + c] for c in range(bw)]
                   for r in range(bh)]
                  for j in range(q)]
                 for i in range(p)]
        return cls(cells)


def flatten(block: BlockMatrix):
    return block.flatten()


def flatten_matrices(outer) -> LangMatrix:
    """Flatten a grid of LangMatrices into one LangMatrix on pair states."""
    mats = [list(row) for row in outer]
    first = mats[0][0]
    alphabet = first.alphabet
    for row in mats:
        for m in row:
            if m.alphabet != alphabet:
                raise FrameMismatch("blocks over different alphabets")
            if m.rows != first.rows or m.cols != first.cols:
                raise FrameMismatch("blocks of different shape")
    block = BlockMatrix([[m.grid() for m in row] for row in mats])
    grid = block.flatten()
    p, q = len(mats), len(mats[0])
    rows = tuple((i, r) for i in range(p) for r in first.rows)
    cols = tuple((j, c) for j in range(q) for c in first.cols)
    entries = {}
    for gi, r in enumerate(rows):
        for gj, c in enumerate(cols):
            entries[(r, c)] = grid[gi][gj]
    return LangMatrix(rows, cols, alphabet, entries)


def block_mul(a, b):
    """Multiply grids of LangMatrices with the semiring block formula."""
    rows_a, cols_a = len(a), len(a[0])
    rows_b, cols_b = len(b), len(b[0])
    if cols_a != rows_b:
        raise FrameMismatch("outer dimensions differ")
    out = []
    for i in range(rows_a):
        row = []
        for j in range(cols_b):
            acc = None
            for k in range(cols_a):
                term = a[i][k].mul(b[k][j])
                acc = term if acc is None else acc.union(term)
            row.append(acc)
        out.append(row)
    return out
