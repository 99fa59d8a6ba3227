"""The free quantale of regular languages over a finite alphabet.

A :class:`RegularLanguage` is an element of P(B*) presented by a regex AST
(Empty, Epsilon, Letter, Union, Concat, Star) together with a lazily built
nondeterministic automaton over the same alphabet.  All quantale operations
(union, concatenation, star) are AST-level and cheap; every question about
the denoted language (membership, emptiness, equality, inclusion, bounded
enumeration) is decided on automata.  Values are immutable; the automaton
is built at most once per value under a lock, so concurrent readers are safe.
"""

from __future__ import annotations

import re
import threading
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import AlphabetMismatch, InputError, NotReducedError, StateCapExceeded

Word = tuple  # tuple of symbol names; () is the empty word

#: hard default cap on subset-construction states; exceeded -> StateCapExceeded
DEFAULT_STATE_CAP = 1_000_000

_BARE_RE = re.compile(r"[A-Za-z0-9_]+")


class Alphabet:
    """An ordered finite set of distinct, nonempty symbol names.

    The order is part of the value: it fixes enumeration order, matrix
    index order and serialization order.  Symbols of product alphabets are
    rendered pairs like ``<x,y>`` (nesting allowed).
    """

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        for s in syms:
            if not isinstance(s, str) or s == "":
                raise InputError("alphabet symbols must be nonempty strings, got %r" % (s,))
        if len(set(syms)) != len(syms):
            raise InputError("duplicate symbols in alphabet: %r" % (syms,))
        self.symbols = syms
        self._index = {s: i for i, s in enumerate(syms)}

    def __contains__(self, sym) -> bool:
        return sym in self._index

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return "Alphabet(%r)" % (list(self.symbols),)

    def index(self, sym: str) -> int:
        try:
            return self._index[sym]
        except KeyError:
            raise InputError("symbol %r not in alphabet %r" % (sym, list(self.symbols)))

    def product(self, other: "Alphabet") -> "Alphabet":
        """Product alphabet with pair symbols ``<x,y>``, left factor outer."""
        return Alphabet(pair_symbol(x, y) for x in self.symbols for y in other.symbols)

    def tagged(self, prefix: str) -> "Alphabet":
        return Alphabet(prefix + s for s in self.symbols)

    @property
    def juxtaposable(self) -> bool:
        """True if every symbol renders bare as a single character.

        When this holds, concatenation prints without separating spaces
        (``xx`` instead of ``x x``) and re-parses unambiguously.
        """
        return all(len(s) == 1 and _BARE_RE.fullmatch(s) and s not in ("e", "0")
                   for s in self.symbols)


def pair_symbol(x: str, y: str) -> str:
    return "<%s,%s>" % (x, y)


def unpair_symbol(s: str) -> tuple:
    """Split a ``<x,y>`` pair symbol at its top-level comma."""
    if not (s.startswith("<") and s.endswith(">")):
        raise InputError("not a pair symbol: %r" % s)
    depth = 0
    for i, ch in enumerate(s[1:-1], start=1):
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
        elif ch == "," and depth == 0:
            return s[1:i], s[i + 1:-1]
    raise InputError("missing top-level comma in pair symbol: %r" % s)


def check_word(alphabet: Alphabet, word: Sequence) -> Word:
    w = tuple(word)
    for sym in w:
        if sym not in alphabet:
            raise InputError("word letter %r not in alphabet %r" % (sym, list(alphabet.symbols)))
    return w


# ---------------------------------------------------------------------------
# regex AST


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Epsilon:
    pass


@dataclass(frozen=True)
class Letter:
    symbol: str


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class Concat:
    left: object
    right: object


@dataclass(frozen=True)
class Star:
    inner: object


def union_expr(l, r):
    """Union with unit/idempotence shortcuts; preserves semantics only."""
    if isinstance(l, Empty):
        return r
    if isinstance(r, Empty):
        return l
    if l == r:
        return l
    return Union(l, r)


def concat_expr(l, r):
    if isinstance(l, Empty) or isinstance(r, Empty):
        return Empty()
    if isinstance(l, Epsilon):
        return r
    if isinstance(r, Epsilon):
        return l
    return Concat(l, r)


def star_expr(e):
    if isinstance(e, (Empty, Epsilon)):
        return Epsilon()
    if isinstance(e, Star):
        return e
    return Star(e)


def _expr_symbols(expr, out: set):
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Letter):
            out.add(node.symbol)
        elif isinstance(node, (Union, Concat)):
            stack.append(node.left)
            stack.append(node.right)
        elif isinstance(node, Star):
            stack.append(node.inner)
    return out


# ---------------------------------------------------------------------------
# automata (internal)


class _Nfa:
    """Thompson-style NFA: integer states, symbol edges and epsilon edges."""

    __slots__ = ("n", "edges", "eps", "initial", "accepting")

    def __init__(self, n, edges, eps, initial, accepting):
        self.n = n
        self.edges = edges          # dict state -> list[(symbol, state)]
        self.eps = eps              # dict state -> list[state]
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)

    def eps_closure(self, states: Iterable[int]) -> frozenset:
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.eps.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)


def _nfa_of_expr(expr) -> _Nfa:
    edges: dict = {}
    eps: dict = {}
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0] - 1

    def add_edge(s, sym, t):
        edges.setdefault(s, []).append((sym, t))

    def add_eps(s, t):
        eps.setdefault(s, []).append(t)

    def build(node):
        # returns (initial_state, accepting_states)
        if isinstance(node, Empty):
            return fresh(), frozenset()
        if isinstance(node, Epsilon):
            s = fresh()
            return s, frozenset([s])
        if isinstance(node, Letter):
            s, t = fresh(), fresh()
            add_edge(s, node.symbol, t)
            return s, frozenset([t])
        if isinstance(node, Union):
            li, la = build(node.left)
            ri, ra = build(node.right)
            s = fresh()
            add_eps(s, li)
            add_eps(s, ri)
            return s, la | ra
        if isinstance(node, Concat):
            li, la = build(node.left)
            ri, ra = build(node.right)
            for a in la:
                add_eps(a, ri)
            return li, ra
        if isinstance(node, Star):
            ii, ia = build(node.inner)
            s = fresh()
            add_eps(s, ii)
            for a in ia:
                add_eps(a, s)
            return s, frozenset([s])
        raise TypeError("not a regex AST node: %r" % (node,))

    init, acc = build(expr)
    return _Nfa(counter[0], edges, eps, [init], acc)


class _Dfa:
    """Complete DFA from subset construction; state 0 is the start."""

    __slots__ = ("symbols", "trans", "accepting", "n", "live")

    def __init__(self, symbols, trans, accepting):
        self.symbols = symbols      # tuple of symbols, fixed order
        self.trans = trans          # list[dict symbol -> state]
        self.accepting = accepting  # set[int]
        self.n = len(trans)
        self.live = self._coreachable()

    def _coreachable(self) -> set:
        rev: dict = {}
        for s, row in enumerate(self.trans):
            for t in row.values():
                rev.setdefault(t, set()).add(s)
        seen = set(self.accepting)
        queue = deque(seen)
        while queue:
            s = queue.popleft()
            for p in rev.get(s, ()):
                if p not in seen:
                    seen.add(p)
                    queue.append(p)
        return seen

    def accepts(self, word: Sequence) -> bool:
        s = 0
        for sym in word:
            s = self.trans[s][sym]
        return s in self.accepting


def _determinize(nfa: _Nfa, alphabet: Alphabet, cap: int) -> _Dfa:
    start = nfa.eps_closure(nfa.initial)
    ids = {start: 0}
    order = [start]
    trans = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = {}
        for sym in alphabet.symbols:
            targets = set()
            for s in subset:
                for esym, t in nfa.edges.get(s, ()):
                    if esym == sym:
                        targets.add(t)
            nxt = nfa.eps_closure(targets)
            if nxt not in ids:
                if len(ids) >= cap:
                    raise StateCapExceeded(
                        "subset construction exceeded %d states" % cap)
                ids[nxt] = len(ids)
                order.append(nxt)
                queue.append(nxt)
            row[sym] = ids[nxt]
        trans.append(row)
    accepting = {i for sub, i in ids.items() if sub & nfa.accepting}
    return _Dfa(alphabet.symbols, trans, accepting)


# ---------------------------------------------------------------------------
# the public value type


class RegularLanguage:
    """A regular language over a fixed alphabet, with decidable equality.

    Dual representation: the defining regex AST (never canonicalized; all
    equality is semantic) and a lazily built automaton used for decisions.
    """

    __slots__ = ("alphabet", "expr", "_nfa", "_dfa", "_lock")

    def __init__(self, alphabet: Alphabet, expr):
        bad = _expr_symbols(expr, set()) - set(alphabet.symbols)
        if bad:
            raise InputError("regex uses symbols %r outside alphabet %r"
                             % (sorted(bad), list(alphabet.symbols)))
        self.alphabet = alphabet
        self.expr = expr
        self._nfa = None
        self._dfa = None
        self._lock = threading.Lock()

    # -- constructors

    @classmethod
    def empty(cls, alphabet: Alphabet) -> "RegularLanguage":
        return cls(alphabet, Empty())

    @classmethod
    def epsilon(cls, alphabet: Alphabet) -> "RegularLanguage":
        return cls(alphabet, Epsilon())

    @classmethod
    def letter(cls, alphabet: Alphabet, sym: str) -> "RegularLanguage":
        if sym not in alphabet:
            raise InputError("letter %r not in alphabet" % sym)
        return cls(alphabet, Letter(sym))

    @classmethod
    def word(cls, alphabet: Alphabet, word: Sequence) -> "RegularLanguage":
        w = check_word(alphabet, word)
        expr = Epsilon()
        for sym in w:
            expr = concat_expr(expr, Letter(sym))
        return cls(alphabet, expr)

    @classmethod
    def finite(cls, alphabet: Alphabet, words: Iterable[Sequence]) -> "RegularLanguage":
        expr = Empty()
        for w in words:
            expr = union_expr(expr, cls.word(alphabet, w).expr)
        return cls(alphabet, expr)

    # -- automata, built once

    def nfa(self) -> _Nfa:
        if self._nfa is None:
            with self._lock:
                if self._nfa is None:
                    self._nfa = _nfa_of_expr(self.expr)
        return self._nfa

    def dfa(self, cap: int = DEFAULT_STATE_CAP) -> _Dfa:
        if self._dfa is None:
            nfa = self.nfa()
            with self._lock:
                if self._dfa is None:
                    self._dfa = _determinize(nfa, self.alphabet, cap)
        return self._dfa

    # -- decisions

    def member(self, word: Sequence) -> bool:
        w = check_word(self.alphabet, word)
        return self.dfa().accepts(w)

    def is_empty(self) -> bool:
        d = self.dfa()
        return 0 not in d.live

    def has_epsilon(self) -> bool:
        return 0 in self.dfa().accepting

    def equals(self, other: "RegularLanguage") -> bool:
        self._require_same_alphabet(other)
        return _product_search(self, other, lambda a, b: a != b) is None

    def includes(self, other: "RegularLanguage") -> bool:
        """True iff other is a subset of self."""
        self._require_same_alphabet(other)
        return _product_search(other, self, lambda a, b: a and not b) is None

    def enumerate_words(self, maxlen: int) -> list:
        """All members of length <= maxlen, in length-then-lex order."""
        if maxlen < 0:
            raise InputError("maxlen must be >= 0")
        d = self.dfa()
        out = []
        level = [((), 0)] if 0 in d.live else []
        if d.accepts(()):
            out.append(())
        for _ in range(maxlen):
            nxt = []
            for word, s in level:
                for sym in self.alphabet.symbols:
                    t = d.trans[s][sym]
                    if t in d.live:
                        w2 = word + (sym,)
                        nxt.append((w2, t))
                        if t in d.accepting:
                            out.append(w2)
            level = nxt
            if not level:
                break
        return out

    # -- quantale operations

    def union(self, other: "RegularLanguage") -> "RegularLanguage":
        self._require_same_alphabet(other)
        return RegularLanguage(self.alphabet, union_expr(self.expr, other.expr))

    def concat(self, other: "RegularLanguage") -> "RegularLanguage":
        self._require_same_alphabet(other)
        return RegularLanguage(self.alphabet, concat_expr(self.expr, other.expr))

    def star(self) -> "RegularLanguage":
        return RegularLanguage(self.alphabet, star_expr(self.expr))

    def restricted_star(self) -> "RegularLanguage":
        """Star on reduced languages only; raises if the empty word is present."""
        if self.has_epsilon():
            raise NotReducedError("restricted star needs a reduced language "
                                  "(empty word present)")
        return self.star()

    def homomorphic_image(self, h: Mapping[str, str], target: Alphabet) -> "RegularLanguage":
        """Letterwise image under a total symbol map into target."""
        for sym in self.alphabet.symbols:
            if sym not in h:
                raise InputError("symbol map is partial: %r has no image" % sym)
            if h[sym] not in target:
                raise InputError("image symbol %r not in target alphabet" % h[sym])

        def relabel(node):
            if isinstance(node, Letter):
                return Letter(h[node.symbol])
            if isinstance(node, Union):
                return Union(relabel(node.left), relabel(node.right))
            if isinstance(node, Concat):
                return Concat(relabel(node.left), relabel(node.right))
            if isinstance(node, Star):
                return Star(relabel(node.inner))
            return node

        return RegularLanguage(target, relabel(self.expr))

    def restrict_alphabet(self, target: Alphabet) -> "RegularLanguage":
        """Intersection with target*, for target a subalphabet; structural."""
        for sym in target.symbols:
            if sym not in self.alphabet:
                raise InputError("%r is not a subalphabet symbol" % sym)
        keep = set(target.symbols)

        def cut(node):
            if isinstance(node, Letter):
                return node if node.symbol in keep else Empty()
            if isinstance(node, Union):
                return union_expr(cut(node.left), cut(node.right))
            if isinstance(node, Concat):
                return concat_expr(cut(node.left), cut(node.right))
            if isinstance(node, Star):
                return star_expr(cut(node.inner))
            return node

        return RegularLanguage(target, cut(self.expr))

    # -- rendering

    def text(self) -> str:
        return render_expr(self.expr, self.alphabet)

    def __repr__(self) -> str:
        return "RegularLanguage(%r over %r)" % (self.text(), list(self.alphabet.symbols))

    def _require_same_alphabet(self, other: "RegularLanguage"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("alphabets differ: %r vs %r"
                                   % (list(self.alphabet.symbols),
                                      list(other.alphabet.symbols)))


# module-level names matching the operation vocabulary

def membership(lang: RegularLanguage, word: Sequence) -> bool:
    return lang.member(word)


def union(l: RegularLanguage, m: RegularLanguage) -> RegularLanguage:
    return l.union(m)


def concat(l: RegularLanguage, m: RegularLanguage) -> RegularLanguage:
    return l.concat(m)


def star(l: RegularLanguage) -> RegularLanguage:
    return l.star()


def restricted_star(l: RegularLanguage) -> RegularLanguage:
    return l.restricted_star()


def equals(l: RegularLanguage, m: RegularLanguage) -> bool:
    return l.equals(m)


def includes(l: RegularLanguage, m: RegularLanguage) -> bool:
    return l.includes(m)


def enumerate_words(l: RegularLanguage, maxlen: int) -> list:
    return l.enumerate_words(maxlen)


def homomorphic_image(l: RegularLanguage, h: Mapping[str, str],
                      target: Alphabet) -> RegularLanguage:
    return l.homomorphic_image(h, target)


def ast_member(lang: RegularLanguage, word: Sequence) -> bool:
    """Reference membership by direct recursion on the AST.

    Independent of the automaton route; the two must always agree.
    """
    w = check_word(lang.alphabet, word)
    memo: dict = {}

    def span(node, i, j):
        key = (id(node), i, j)
        if key in memo:
            return memo[key]
        if isinstance(node, Empty):
            res = False
        elif isinstance(node, Epsilon):
            res = i == j
        elif isinstance(node, Letter):
            res = j == i + 1 and w[i] == node.symbol
        elif isinstance(node, Union):
            res = span(node.left, i, j) or span(node.right, i, j)
        elif isinstance(node, Concat):
            res = any(span(node.left, i, k) and span(node.right, k, j)
                      for k in range(i, j + 1))
        elif isinstance(node, Star):
            if i == j:
                res = True
            else:
                res = any(span(node.inner, i, k) and span(node, k, j)
                          for k in range(i + 1, j + 1))
        else:
            raise TypeError("not a regex AST node: %r" % (node,))
        memo[key] = res
        return res

    return span(lang.expr, 0, len(w))


# ---------------------------------------------------------------------------
# product-automaton decisions


def _product_search(l: RegularLanguage, m: RegularLanguage,
                    bad: Callable[[bool, bool], bool]) -> Optional[Word]:
    """BFS the product DFA; return a shortest word whose acceptance pair
    satisfies ``bad``, or None if no reachable pair does."""
    dl, dm = l.dfa(), m.dfa()
    start = (0, 0)
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        a, b = pair
        if bad(a in dl.accepting, b in dm.accepting):
            word = []
            cur = pair
            while parent[cur] is not None:
                cur, sym = parent[cur]
                word.append(sym)
            return tuple(reversed(word))
        for sym in l.alphabet.symbols:
            nxt = (dl.trans[a][sym], dm.trans[b][sym])
            if nxt not in parent:
                parent[nxt] = (pair, sym)
                queue.append(nxt)
    return None


def difference_witness(l: RegularLanguage, m: RegularLanguage) -> Optional[Word]:
    """A shortest word in l but not in m, or None if l is included in m."""
    if l.alphabet != m.alphabet:
        raise AlphabetMismatch("alphabets differ")
    return _product_search(l, m, lambda a, b: a and not b)


# ---------------------------------------------------------------------------
# synchronous product (tensorial strength on languages)


def sigma(l: RegularLanguage, m: RegularLanguage) -> RegularLanguage:
    """Words over the product alphabet whose projections lie in l and m.

    Computed as a synchronous product of the two automata reading paired
    letters, converted back to a regex by state elimination.
    """
    prod = l.alphabet.product(m.alphabet)
    nl, nm = l.nfa(), m.nfa()

    def sid(p, q):
        return p * nm.n + q if nm.n else p

    edges = []
    for p in range(nl.n):
        for q in range(nm.n):
            for t in nl.eps.get(p, ()):
                edges.append((sid(p, q), Epsilon(), sid(t, q)))
            for t in nm.eps.get(q, ()):
                edges.append((sid(p, q), Epsilon(), sid(p, t)))
            for lsym, pt in nl.edges.get(p, ()):
                for msym, qt in nm.edges.get(q, ()):
                    edges.append((sid(p, q), Letter(pair_symbol(lsym, msym)),
                                  sid(pt, qt)))
    inits = [sid(p, q) for p in nl.initial for q in nm.initial]
    accs = [sid(p, q) for p in nl.accepting for q in nm.accepting]
    expr = nfa_edges_to_expr(nl.n * max(nm.n, 1), edges, inits, accs)
    return RegularLanguage(prod, expr)


def nfa_edges_to_expr(n_states: int, edges, inits, accs):
    """Kleene state elimination on a labeled transition system.

    ``edges`` is an iterable of (src, expr, dst); returns a regex AST for
    the language from the initial set to the accepting set.
    """
    start, end = n_states, n_states + 1
    label: dict = {}

    def add(i, j, e):
        if isinstance(e, Empty):
            return
        key = (i, j)
        label[key] = union_expr(label[key], e) if key in label else e

    for (i, e, j) in edges:
        add(i, j, e)
    for i in inits:
        add(start, i, Epsilon())
    for a in accs:
        add(a, end, Epsilon())

    for k in range(n_states):
        loop = label.pop((k, k), Empty())
        loop_star = star_expr(loop)
        ins = [(i, e) for (i, j), e in label.items() if j == k and i != k]
        outs = [(j, e) for (i, j), e in label.items() if i == k and j != k]
        for (i, _) in ins:
            label.pop((i, k))
        for (j, _) in outs:
            label.pop((k, j))
        for i, ei in ins:
            for j, ej in outs:
                add(i, j, concat_expr(concat_expr(ei, loop_star), ej))
    return label.get((start, end), Empty())


# ---------------------------------------------------------------------------
# regex text


def parse_regex(text: str, alphabet: Alphabet) -> RegularLanguage:
    """Parse the textual regex grammar over a declared alphabet.

    Grammar::

        expr   := term {'+' term}
        term   := factor {factor}
        factor := atom {'*'}
        atom   := '0' | 'e' | SYMBOL | '(' expr ')'
        SYMBOL := bare identifier run | 'quoted string' | '<' SYMBOL ',' SYMBOL '>'

    '0' is the empty language and 'e' the empty word.  Juxtaposition (with
    or without whitespace) is concatenation.  A bare identifier run is
    decomposed into alphabet symbols greedily, longest match first, so
    ``xx`` over alphabet {x} reads as two letters while a declared symbol
    ``ab`` is matched whole.  Symbols equal to ``e`` or ``0`` must be quoted.
    """
    tokens = _tokenize(text)
    pos = [0]

    def peek():
        return tokens[pos[0]] if pos[0] < len(tokens) else None

    def take():
        tok = peek()
        pos[0] += 1
        return tok

    def parse_expr():
        node = parse_term()
        while peek() == ("op", "+"):
            take()
            node = Union(node, parse_term())
        return node

    def parse_term():
        node = parse_factor()
        while peek() is not None and (peek()[0] in ("sym", "run") or peek() == ("op", "(")):
            node = Concat(node, parse_factor())
        return node

    def parse_factor():
        node = parse_atom()
        while peek() == ("op", "*"):
            take()
            node = Star(node)
        return node

    def parse_atom():
        tok = take()
        if tok is None:
            raise InputError("unexpected end of regex %r" % text)
        kind, val = tok
        if tok == ("op", "("):
            node = parse_expr()
            if take() != ("op", ")"):
                raise InputError("missing ')' in regex %r" % text)
            return node
        if kind == "run":
            if val == "0":
                return Empty()
            if val == "e":
                return Epsilon()
            node = None
            for sym in _split_run(val, alphabet, text):
                node = Letter(sym) if node is None else Concat(node, Letter(sym))
            return node
        if kind == "sym":
            if val not in alphabet:
                raise InputError("symbol %r not in alphabet %r"
                                 % (val, list(alphabet.symbols)))
            return Letter(val)
        raise InputError("unexpected token %r in regex %r" % (val, text))

    node = parse_expr()
    if peek() is not None:
        raise InputError("trailing input %r in regex %r" % (peek()[1], text))
    return RegularLanguage(alphabet, node)


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+*()":
            tokens.append(("op", ch))
            i += 1
        elif ch == "'":
            j = text.find("'", i + 1)
            if j < 0:
                raise InputError("unterminated quote in regex %r" % text)
            if j == i + 1:
                raise InputError("empty quoted symbol in regex %r" % text)
            tokens.append(("sym", text[i + 1:j]))
            i = j + 1
        elif ch == "<":
            j, depth = i, 0
            while j < n:
                if text[j] == "<":
                    depth += 1
                elif text[j] == ">":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            if depth != 0:
                raise InputError("unbalanced '<' in regex %r" % text)
            tokens.append(("sym", _canonical_pair(text[i:j + 1])))
            i = j + 1
        else:
            m = _BARE_RE.match(text, i)
            if not m:
                raise InputError("unexpected character %r in regex %r" % (ch, text))
            tokens.append(("run", m.group()))
            i = m.end()
    return tokens


def _canonical_pair(raw: str) -> str:
    inner = raw[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
        elif ch == "," and depth == 0:
            left, right = inner[:i], inner[i + 1:]
            return pair_symbol(_canonical_component(left), _canonical_component(right))
    raise InputError("missing comma in pair symbol %r" % raw)


def _canonical_component(raw: str) -> str:
    s = raw.strip()
    if s.startswith("<"):
        return _canonical_pair(s)
    if s.startswith("'") and s.endswith("'") and len(s) > 2:
        return s[1:-1]
    return s


def _split_run(run: str, alphabet: Alphabet, text: str):
    """Greedy longest-match decomposition of a bare identifier run."""
    by_len = sorted((s for s in alphabet.symbols if _BARE_RE.fullmatch(s)),
                    key=len, reverse=True)
    out = []
    i = 0
    while i < len(run):
        for s in by_len:
            if run.startswith(s, i):
                out.append(s)
                i += len(s)
                break
        else:
            raise InputError("cannot read %r at position %d as symbols of %r (regex %r)"
                             % (run, i, list(alphabet.symbols), text))
    return out


def render_symbol(sym: str, alphabet: Alphabet) -> str:
    if _BARE_RE.fullmatch(sym) and sym not in ("e", "0"):
        return sym
    if sym.startswith("<") and sym.endswith(">"):
        return sym
    return "'%s'" % sym


def render_expr(expr, alphabet: Alphabet) -> str:
    """Deterministic text for an AST; parses back to the same AST."""
    sep = "" if alphabet.juxtaposable else " "

    def rend(node, prec):
        # prec: 0 union context, 1 concat, 2 star
        if isinstance(node, Empty):
            return "0"
        if isinstance(node, Epsilon):
            return "e"
        if isinstance(node, Letter):
            return render_symbol(node.symbol, alphabet)
        if isinstance(node, Union):
            s = rend(node.left, 0) + "+" + rend(node.right, 0)
            return "(" + s + ")" if prec > 0 else s
        if isinstance(node, Concat):
            s = rend(node.left, 1) + sep + rend(node.right, 1)
            return "(" + s + ")" if prec > 1 else s
        if isinstance(node, Star):
            return rend(node.inner, 2) + "*"
        raise TypeError("not a regex AST node: %r" % (node,))

    return rend(expr, 0)
