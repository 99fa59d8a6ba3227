"""The posetal double category of 1-transducers.

A transducer A -|-> B is a finite state set Q together with one square
matrix of regular languages over B per input letter; evaluating a word
multiplies the letter matrices.  2-cells are state maps witnessing
entrywise language inclusion; double cells additionally reindex both
alphabets.  This module builds composition (via the language-indexed
matrix extension), the tensor, reindexing, companions and conjoints,
double-categorical (co)limits and the one-state reflection.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import AlphabetMismatch, FrameMismatch, InputError, NoCommonSection
from .lang import (
    Alphabet,
    RegularLanguage,
    check_word,
    difference_witness,
    pair_symbol,
    render_expr,
)
from .qmat import LangMatrix, extend_with_states, mat_identity, sigma_tensor


class Transducer:
    """A 1-cell (Q, t): input alphabet, output alphabet, states, and a
    generator matrix per input letter."""

    __slots__ = ("input", "output", "states", "gen_map")

    def __init__(self, input: Alphabet, output: Alphabet, states: Sequence,
                 gen_map: Mapping[str, LangMatrix]):
        self.input = input
        self.output = output
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise InputError("duplicate states")
        table = {}
        for a in input.symbols:
            if a not in gen_map:
                raise InputError("no generator matrix for input letter %r" % a)
            m = gen_map[a]
            if m.rows != self.states or m.cols != self.states:
                raise FrameMismatch("generator for %r not indexed by the states" % a)
            if m.alphabet != output:
                raise FrameMismatch("generator for %r over the wrong alphabet" % a)
            table[a] = m
        self.gen_map = table

    def gen(self, letter: str) -> LangMatrix:
        if letter not in self.gen_map:
            raise InputError("letter %r not in input alphabet" % letter)
        return self.gen_map[letter]

    def eval_word(self, word: Sequence) -> LangMatrix:
        w = check_word(self.input, word)
        acc = mat_identity(self.states, self.output)
        for a in w:
            acc = acc.mul(self.gen_map[a])
        return acc

    def entry(self, letter, r, c) -> RegularLanguage:
        return self.gen(letter).entry(r, c)

    def rename_states(self, mapping: Mapping, new_states: Sequence) -> "Transducer":
        gen = {a: m.relabel(mapping, mapping, tuple(new_states), tuple(new_states))
               for a, m in self.gen_map.items()}
        return Transducer(self.input, self.output, new_states, gen)

    def isomorphic_under(self, other: "Transducer", state_bij: Mapping) -> bool:
        """Entrywise equality after transporting self's states along a bijection."""
        if self.input != other.input or self.output != other.output:
            return False
        renamed = self.rename_states(state_bij, other.states)
        return all(renamed.gen_map[a].equals(other.gen_map[a])
                   for a in self.input.symbols)

    def __repr__(self):
        return "Transducer(%r -> %r, states=%r)" % (
            list(self.input.symbols), list(self.output.symbols), list(self.states))


def eval_word(t: Transducer, word: Sequence) -> LangMatrix:
    return t.eval_word(word)


def identity_transducer(alphabet: Alphabet) -> Transducer:
    """One state; each letter maps to the 1x1 matrix holding its singleton."""
    states = ("*",)
    gen = {a: LangMatrix(states, states, alphabet,
                         {("*", "*"): RegularLanguage.letter(alphabet, a)})
           for a in alphabet.symbols}
    return Transducer(alphabet, alphabet, states, gen)


def compose(s: Transducer, t: Transducer) -> Transducer:
    """Composite 1-cell of s: A -|-> B and t: B -|-> C on states P x Q.

    The entry at ((p,q),(p',q')) evaluates the language s(a)[p,p'] in the
    matrix quantale of t's generators and reads off the (q,q') component.
    """
    if s.output != t.input:
        raise AlphabetMismatch("middle alphabets differ: %r vs %r"
                               % (list(s.output.symbols), list(t.input.symbols)))
    states = tuple((p, q) for p in s.states for q in t.states)
    gen = {}
    for a in s.input.symbols:
        entries = {}
        for p in s.states:
            for p2 in s.states:
                mat = extend_with_states(s.gen_map[a].entry(p, p2), t.gen_map,
                                         t.states, t.output)
                for q in t.states:
                    for q2 in t.states:
                        entries[((p, q), (p2, q2))] = mat.entry(q, q2)
        gen[a] = LangMatrix(states, states, t.output, entries)
    return Transducer(s.input, t.output, states, gen)


def tensor(s: Transducer, t: Transducer) -> Transducer:
    """Parallel composition on the product alphabets and product states."""
    states = tuple((p, q) for p in s.states for q in t.states)
    inp = s.input.product(t.input)
    out = s.output.product(t.output)
    gen = {}
    for a in s.input.symbols:
        for c in t.input.symbols:
            gen[pair_symbol(a, c)] = sigma_tensor(s.gen_map[a], t.gen_map[c])
    tr = Transducer(inp, out, states, gen)
    return tr


def unit_transducer() -> Transducer:
    """The tensor unit: one state, one symbol, identity behaviour."""
    return identity_transducer(Alphabet(("i",)))


def reindex(t: Transducer, fmap: Mapping[str, str], new_input: Alphabet,
            gmap: Mapping[str, str], new_output: Alphabet) -> Transducer:
    """Precompose inputs along fmap and push outputs forward along gmap."""
    for c in new_input.symbols:
        if c not in fmap:
            raise InputError("input map is partial: %r has no image" % c)
        if fmap[c] not in t.input:
            raise InputError("input map sends %r outside the input alphabet" % c)
    gen = {}
    for c in new_input.symbols:
        gen[c] = t.gen_map[fmap[c]].map_entries(
            lambda l: l.homomorphic_image(gmap, new_output), new_output)
    return Transducer(new_input, new_output, t.states, gen)


def from_relation(rel, input: Alphabet, output: Alphabet) -> Transducer:
    """Embed a relation R between letters as a one-state transducer."""
    pairs = set(rel)
    for (a, b) in pairs:
        if a not in input or b not in output:
            raise InputError("relation pair (%r, %r) outside the alphabets" % (a, b))
    states = ("*",)
    gen = {}
    for a in input.symbols:
        acc = RegularLanguage.empty(output)
        for b in output.symbols:
            if (a, b) in pairs:
                acc = acc.union(RegularLanguage.letter(output, b))
        gen[a] = LangMatrix(states, states, output, {("*", "*"): acc})
    return Transducer(input, output, states, gen)


def collapse_states(t: Transducer) -> "tuple[Transducer, TwoCell]":
    """Union all entries into a single state; returns the reflection unit."""
    states = ("*",)
    gen = {}
    for a in t.input.symbols:
        acc = RegularLanguage.empty(t.output)
        for q in t.states:
            for q2 in t.states:
                acc = acc.union(t.gen_map[a].entry(q, q2))
        gen[a] = LangMatrix(states, states, t.output, {("*", "*"): acc})
    collapsed = Transducer(t.input, t.output, states, gen)
    unit = TwoCell(t, collapsed, {q: "*" for q in t.states})
    return collapsed, unit


def realized_relation(t: Transducer, initials, finals, u: Sequence, v: Sequence) -> bool:
    """Is output v reachable from input u between the chosen state sets?"""
    init = tuple(initials)
    fin = tuple(finals)
    for q in init + fin:
        if q not in t.states:
            raise InputError("unknown state %r" % (q,))
    w = check_word(t.output, v)
    mat = t.eval_word(u)
    return any(mat.entry(i, f).member(w) for i in init for f in fin)


def dynamics_graph(t: Transducer) -> str:
    """DOT text for the labeled transition graph of the generators."""
    lines = ["digraph dynamics {", "  rankdir=LR;"]
    for q in t.states:
        lines.append('  "%s";' % _state_name(q))
    for a in t.input.symbols:
        for q in t.states:
            for q2 in t.states:
                lang = t.gen_map[a].entry(q, q2)
                if not lang.is_empty():
                    lines.append('  "%s" -> "%s" [label="%s/%s"];'
                                 % (_state_name(q), _state_name(q2), a,
                                    render_expr(lang.expr, t.output)))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _state_name(q) -> str:
    if isinstance(q, str):
        return q
    if isinstance(q, tuple):
        return "(%s)" % ",".join(_state_name(c) for c in q)
    return str(q)


# ---------------------------------------------------------------------------
# 2-cells and double cells


@dataclass(frozen=True)
class TwoCell:
    """A state map between parallel transducers; valid when every source
    entry is included in the corresponding target entry."""

    source: Transducer
    target: Transducer
    mapping: Mapping

    def check_frames(self):
        if self.source.input != self.target.input or self.source.output != self.target.output:
            raise FrameMismatch("2-cell endpoints have different alphabets")
        for q in self.source.states:
            if q not in self.mapping or self.mapping[q] not in self.target.states:
                raise InputError("state map is not a total map into the target states")

    def is_valid(self) -> bool:
        self.check_frames()
        return self.witness() is None

    def witness(self):
        """None if valid, else (letter, p, p', word) violating the inclusion."""
        self.check_frames()
        for a in self.source.input.symbols:
            for p in self.source.states:
                for p2 in self.source.states:
                    src = self.source.gen_map[a].entry(p, p2)
                    tgt = self.target.gen_map[a].entry(self.mapping[p], self.mapping[p2])
                    w = difference_witness(src, tgt)
                    if w is not None:
                        return (a, p, p2, w)
        return None

    def audit(self, maxlen: int) -> bool:
        """Re-verify the inclusion on eval_word for all words up to maxlen.

        Letter-level validity already implies this; the audit is a cross
        check of the evaluation machinery, not part of the definition.
        """
        self.check_frames()
        for w in _words_upto(self.source.input, maxlen):
            src_m = self.source.eval_word(w)
            tgt_m = self.target.eval_word(w)
            for p in self.source.states:
                for p2 in self.source.states:
                    if not tgt_m.entry(self.mapping[p], self.mapping[p2]).includes(
                            src_m.entry(p, p2)):
                        return False
        return True


def check_two_cell(cell: TwoCell, audit_len: Optional[int] = None) -> bool:
    ok = cell.is_valid()
    if ok and audit_len is not None:
        ok = cell.audit(audit_len)
    return ok


def _words_upto(alphabet: Alphabet, maxlen: int):
    level = [()]
    yield ()
    for _ in range(maxlen):
        nxt = []
        for w in level:
            for a in alphabet.symbols:
                w2 = w + (a,)
                nxt.append(w2)
                yield w2
        level = nxt


@dataclass(frozen=True)
class DoubleCell:
    """A cell of the double category: tight symbol maps on both alphabets
    plus a state map, witnessing entrywise inclusion after relabeling."""

    source: Transducer
    target: Transducer
    fmap: Mapping            # source.input -> target.input
    gmap: Mapping            # source.output -> target.output
    umap: Mapping            # source.states -> target.states

    def check_frames(self):
        for a in self.source.input.symbols:
            if a not in self.fmap or self.fmap[a] not in self.target.input:
                raise FrameMismatch("input symbol map not total into target input")
        for b in self.source.output.symbols:
            if b not in self.gmap or self.gmap[b] not in self.target.output:
                raise FrameMismatch("output symbol map not total into target output")
        for q in self.source.states:
            if q not in self.umap or self.umap[q] not in self.target.states:
                raise FrameMismatch("state map not total into target states")

    def is_valid(self) -> bool:
        return self.witness() is None

    def witness(self):
        self.check_frames()
        for a in self.source.input.symbols:
            for q in self.source.states:
                for q2 in self.source.states:
                    img = self.source.gen_map[a].entry(q, q2).homomorphic_image(
                        self.gmap, self.target.output)
                    tgt = self.target.gen_map[self.fmap[a]].entry(
                        self.umap[q], self.umap[q2])
                    w = difference_witness(img, tgt)
                    if w is not None:
                        return (a, q, q2, w)
        return None


# ---------------------------------------------------------------------------
# companions and conjoints


def companion(f: Mapping[str, str], dom: Alphabet, cod: Alphabet) -> Transducer:
    """One-state transducer sending each letter a to the singleton {[f a]}."""
    _require_total(f, dom, cod)
    states = ("*",)
    gen = {a: LangMatrix(states, states, cod,
                         {("*", "*"): RegularLanguage.letter(cod, f[a])})
           for a in dom.symbols}
    return Transducer(dom, cod, states, gen)


def conjoint(f: Mapping[str, str], dom: Alphabet, cod: Alphabet) -> Transducer:
    """One-state transducer sending each letter b to the fiber of f over b."""
    _require_total(f, dom, cod)
    states = ("*",)
    gen = {}
    for b in cod.symbols:
        acc = RegularLanguage.empty(dom)
        for a in dom.symbols:
            if f[a] == b:
                acc = acc.union(RegularLanguage.letter(dom, a))
        gen[b] = LangMatrix(states, states, dom, {("*", "*"): acc})
    return Transducer(cod, dom, states, gen)


def companion_cells(f: Mapping[str, str], dom: Alphabet, cod: Alphabet):
    """The four unit/counit double cells of the companion/conjoint pair."""
    _require_total(f, dom, cod)
    comp = companion(f, dom, cod)
    conj = conjoint(f, dom, cod)
    ida = identity_transducer(dom)
    idb = identity_transducer(cod)
    id_a = {a: a for a in dom.symbols}
    id_b = {b: b for b in cod.symbols}
    u = {"*": "*"}
    eta_comp = DoubleCell(ida, comp, fmap=id_a, gmap=dict(f), umap=u)
    eps_comp = DoubleCell(comp, idb, fmap=dict(f), gmap=id_b, umap=u)
    eps_conj = DoubleCell(conj, idb, fmap=id_b, gmap=dict(f), umap=u)
    eta_conj = DoubleCell(ida, conj, fmap=dict(f), gmap=id_a, umap=u)
    return eta_comp, eps_comp, eta_conj, eps_conj


def check_companion_identities(f: Mapping[str, str], dom: Alphabet, cod: Alphabet) -> bool:
    """All four cells valid, plus the triangle equalities.

    In the posetal double category a cell is property, not structure, so
    the vertical identities reduce to validity of the stacked frames and
    the horizontal ones to the unitor isomorphisms on the loose composites.
    """
    eta_c, eps_c, eta_j, eps_j = companion_cells(f, dom, cod)
    if not all(c.is_valid() for c in (eta_c, eps_c, eta_j, eps_j)):
        return False
    comp = eta_c.target
    conj = eta_j.target
    ida = identity_transducer(dom)
    idb = identity_transducer(cod)
    # vertical triangle: the stacked cell has frame (id loose, f, f, id loose)
    vert_comp = DoubleCell(ida, idb, fmap=dict(f), gmap=dict(f), umap={"*": "*"})
    vert_conj = DoubleCell(ida, idb, fmap=dict(f), gmap=dict(f), umap={"*": "*"})
    if not (vert_comp.is_valid() and vert_conj.is_valid()):
        return False
    # horizontal triangles: loose unitors on either side of the (co)companion
    bij = {("*", "*"): "*"}
    checks = [
        compose(ida, comp).isomorphic_under(comp, bij),
        compose(comp, idb).isomorphic_under(comp, bij),
        compose(idb, conj).isomorphic_under(conj, bij),
        compose(conj, ida).isomorphic_under(conj, bij),
    ]
    return all(checks)


def _require_total(f: Mapping[str, str], dom: Alphabet, cod: Alphabet):
    for a in dom.symbols:
        if a not in f:
            raise InputError("symbol map is partial: %r has no image" % a)
        if f[a] not in cod:
            raise InputError("image %r of %r outside the codomain" % (f[a], a))


# ---------------------------------------------------------------------------
# double-categorical (co)limits


def double_product(s: Transducer, t: Transducer):
    """Binary double product; at the posetal level it shares the tensor's
    carrier.  Returns (product, projection cell to s, projection cell to t)."""
    prod = tensor(s, t)
    fmap1 = {pair_symbol(a, c): a for a in s.input.symbols for c in t.input.symbols}
    gmap1 = {pair_symbol(b, d): b for b in s.output.symbols for d in t.output.symbols}
    umap1 = {(p, q): p for p in s.states for q in t.states}
    proj1 = DoubleCell(prod, s, fmap=fmap1, gmap=gmap1, umap=umap1)
    fmap2 = {pair_symbol(a, c): c for a in s.input.symbols for c in t.input.symbols}
    gmap2 = {pair_symbol(b, d): d for b in s.output.symbols for d in t.output.symbols}
    umap2 = {(p, q): q for p in s.states for q in t.states}
    proj2 = DoubleCell(prod, t, fmap=fmap2, gmap=gmap2, umap=umap2)
    return prod, proj1, proj2


def pair_into_product(cell1: DoubleCell, cell2: DoubleCell):
    """The unique mediating cell into double_product(cell1.target, cell2.target)."""
    if cell1.source is not cell2.source and cell1.source != cell2.source:
        raise FrameMismatch("pairing needs a common source")
    r = cell1.source
    prod, _, _ = double_product(cell1.target, cell2.target)
    fmap = {a: pair_symbol(cell1.fmap[a], cell2.fmap[a]) for a in r.input.symbols}
    gmap = {b: pair_symbol(cell1.gmap[b], cell2.gmap[b]) for b in r.output.symbols}
    umap = {q: (cell1.umap[q], cell2.umap[q]) for q in r.states}
    return prod, DoubleCell(r, prod, fmap=fmap, gmap=gmap, umap=umap)


def double_coproduct(s: Transducer, t: Transducer):
    """Binary double coproduct on tagged alphabets and states.

    Left data is tagged 'l.', right data 'r.'; cross blocks are empty.
    Returns (coproduct, injection from s, injection from t).
    """
    inp = Alphabet(tuple("l." + a for a in s.input.symbols)
                   + tuple("r." + c for c in t.input.symbols))
    out = Alphabet(tuple("l." + b for b in s.output.symbols)
                   + tuple("r." + d for d in t.output.symbols))
    states = tuple(("l", p) for p in s.states) + tuple(("r", q) for q in t.states)
    lmap = {b: "l." + b for b in s.output.symbols}
    rmap = {d: "r." + d for d in t.output.symbols}
    gen = {}
    for a in s.input.symbols:
        entries = {(x, y): RegularLanguage.empty(out) for x in states for y in states}
        for p in s.states:
            for p2 in s.states:
                entries[(("l", p), ("l", p2))] = \
                    s.gen_map[a].entry(p, p2).homomorphic_image(lmap, out)
        gen["l." + a] = LangMatrix(states, states, out, entries)
    for c in t.input.symbols:
        entries = {(x, y): RegularLanguage.empty(out) for x in states for y in states}
        for q in t.states:
            for q2 in t.states:
                entries[(("r", q), ("r", q2))] = \
                    t.gen_map[c].entry(q, q2).homomorphic_image(rmap, out)
        gen["r." + c] = LangMatrix(states, states, out, entries)
    cop = Transducer(inp, out, states, gen)
    inj1 = DoubleCell(s, cop,
                      fmap={a: "l." + a for a in s.input.symbols},
                      gmap=lmap,
                      umap={p: ("l", p) for p in s.states})
    inj2 = DoubleCell(t, cop,
                      fmap={c: "r." + c for c in t.input.symbols},
                      gmap=rmap,
                      umap={q: ("r", q) for q in t.states})
    return cop, inj1, inj2


def copair_from_coproduct(cop: Transducer, cell1: DoubleCell, cell2: DoubleCell):
    """The unique mediating cell out of a coproduct built by double_coproduct."""
    if cell1.target is not cell2.target and cell1.target != cell2.target:
        raise FrameMismatch("copairing needs a common target")
    fmap = {}
    for a in cell1.source.input.symbols:
        fmap["l." + a] = cell1.fmap[a]
    for c in cell2.source.input.symbols:
        fmap["r." + c] = cell2.fmap[c]
    gmap = {}
    for b in cell1.source.output.symbols:
        gmap["l." + b] = cell1.gmap[b]
    for d in cell2.source.output.symbols:
        gmap["r." + d] = cell2.gmap[d]
    umap = {}
    for p in cell1.source.states:
        umap[("l", p)] = cell1.umap[p]
    for q in cell2.source.states:
        umap[("r", q)] = cell2.umap[q]
    return DoubleCell(cop, cell1.target, fmap=fmap, gmap=gmap, umap=umap)


def _common_frames(cell1: DoubleCell, cell2: DoubleCell):
    if cell1.source != cell2.source or cell1.target != cell2.target:
        raise FrameMismatch("parallel cells must share source and target")
    return cell1.source, cell1.target


def double_equalizer(cell1: DoubleCell, cell2: DoubleCell):
    """Equalizer of a parallel pair of double cells.

    Keeps the letters, output symbols and states on which the two cells
    agree; entries are restricted to words over the surviving output
    subalphabet.  Returns (equalizer, inclusion cell into the source).
    """
    s0, _ = _common_frames(cell1, cell2)
    a_eq = Alphabet(tuple(a for a in s0.input.symbols
                          if cell1.fmap[a] == cell2.fmap[a]))
    b_eq = Alphabet(tuple(b for b in s0.output.symbols
                          if cell1.gmap[b] == cell2.gmap[b]))
    q_eq = tuple(q for q in s0.states if cell1.umap[q] == cell2.umap[q])
    gen = {}
    for a in a_eq.symbols:
        entries = {}
        for q in q_eq:
            for q2 in q_eq:
                entries[(q, q2)] = s0.gen_map[a].entry(q, q2).restrict_alphabet(b_eq)
        gen[a] = LangMatrix(q_eq, q_eq, b_eq, entries)
    eq = Transducer(a_eq, b_eq, q_eq, gen)
    incl = DoubleCell(eq, s0,
                      fmap={a: a for a in a_eq.symbols},
                      gmap={b: b for b in b_eq.symbols},
                      umap={q: q for q in q_eq})
    return eq, incl


def double_coequalizer(cell1: DoubleCell, cell2: DoubleCell):
    """Reflexive coequalizer of a parallel pair of double cells.

    Quotients the target's letters, output symbols and states by the
    equivalences generated by the two cells; entries are unions of images
    over each class.  Requires a common section (checked); returns
    (quotient transducer, quotient cell from the target).
    """
    s0, s1 = _common_frames(cell1, cell2)
    _require_section(cell1.fmap, cell2.fmap, s0.input.symbols, s1.input.symbols,
                     "input alphabet")
    _require_section(cell1.gmap, cell2.gmap, s0.output.symbols, s1.output.symbols,
                     "output alphabet")
    _require_section(cell1.umap, cell2.umap, s0.states, s1.states, "state set")

    a_cls = _quotient(s1.input.symbols,
                      [(cell1.fmap[a], cell2.fmap[a]) for a in s0.input.symbols])
    b_cls = _quotient(s1.output.symbols,
                      [(cell1.gmap[b], cell2.gmap[b]) for b in s0.output.symbols])
    q_cls = _quotient(s1.states,
                      [(cell1.umap[q], cell2.umap[q]) for q in s0.states])
    a_bar = Alphabet(_class_reps(s1.input.symbols, a_cls))
    b_bar = Alphabet(_class_reps(s1.output.symbols, b_cls))
    q_bar = _class_reps(s1.states, q_cls)
    gen = {}
    for abar in a_bar.symbols:
        entries = {(x, y): RegularLanguage.empty(b_bar) for x in q_bar for y in q_bar}
        for a in s1.input.symbols:
            if a_cls[a] != abar:
                continue
            for q in s1.states:
                for q2 in s1.states:
                    img = s1.gen_map[a].entry(q, q2).homomorphic_image(b_cls, b_bar)
                    key = (q_cls[q], q_cls[q2])
                    entries[key] = entries[key].union(img)
        gen[abar] = LangMatrix(q_bar, q_bar, b_bar, entries)
    quot = Transducer(a_bar, b_bar, q_bar, gen)
    qcell = DoubleCell(s1, quot, fmap=a_cls, gmap=b_cls, umap=q_cls)
    return quot, qcell


def _require_section(f1, f2, dom_elems, cod_elems, what):
    for y in cod_elems:
        if not any(f1[x] == y and f2[x] == y for x in dom_elems):
            raise NoCommonSection("the parallel pair has no common section on the %s "
                                  "(element %r not hit diagonally)" % (what, y))


def _quotient(elems, pairs):
    """Union-find quotient; every element maps to the least representative."""
    elems = tuple(elems)
    pos = {x: i for i, x in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for (x, y) in pairs:
        ri, rj = find(pos[x]), find(pos[y])
        if ri != rj:
            if rj < ri:
                ri, rj = rj, ri
            parent[rj] = ri
    return {x: elems[find(pos[x])] for x in elems}


def _class_reps(elems, cls_map):
    reps = []
    for x in elems:
        r = cls_map[x]
        if r not in reps:
            reps.append(r)
    return tuple(reps)
