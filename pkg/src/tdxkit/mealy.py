"""Mealy machines over finite sets and their embedding into transducers.

A machine is a span X <- A x X -> B: a transition function d and an output
function s, both total, with arguments ordered (letter, state) throughout.
The cascade extension replays a word letter by letter; the embedding G
turns a machine into the transducer whose (x, x') entry for letter a is
the singleton output when x' is the successor of x and empty otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import AlphabetMismatch, FrameMismatch, InputError
from .lang import Alphabet, RegularLanguage, check_word
from .qmat import LangMatrix
from .tdx import Transducer


@dataclass(frozen=True)
class MealyMachine:
    input: Alphabet
    output: Alphabet
    states: tuple
    d: Mapping          # (letter, state) -> state
    s: Mapping          # (letter, state) -> output symbol

    def __post_init__(self):
        object.__setattr__(self, "states", tuple(self.states))
        for a in self.input.symbols:
            for x in self.states:
                if (a, x) not in self.d:
                    raise InputError("transition undefined at (%r, %r)" % (a, x))
                if self.d[(a, x)] not in self.states:
                    raise InputError("transition at (%r, %r) leaves the state set" % (a, x))
                if (a, x) not in self.s:
                    raise InputError("output undefined at (%r, %r)" % (a, x))
                if self.s[(a, x)] not in self.output:
                    raise InputError("output at (%r, %r) outside the alphabet" % (a, x))

    def step(self, a, x):
        return self.d[(a, x)], self.s[(a, x)]


def run(m: MealyMachine, x, word: Sequence):
    """Iterated transition d* from state x along word."""
    w = check_word(m.input, word)
    if x not in m.states:
        raise InputError("unknown state %r" % (x,))
    for a in w:
        x = m.d[(a, x)]
    return x


def cascade(m: MealyMachine, x, word: Sequence) -> tuple:
    """The cascade extension: output word produced letter by letter."""
    w = check_word(m.input, word)
    if x not in m.states:
        raise InputError("unknown state %r" % (x,))
    out = []
    for a in w:
        out.append(m.s[(a, x)])
        x = m.d[(a, x)]
    return tuple(out)


def identity_mealy(alphabet: Alphabet) -> MealyMachine:
    states = ("*",)
    return MealyMachine(alphabet, alphabet, states,
                        {(a, "*"): "*" for a in alphabet.symbols},
                        {(a, "*"): a for a in alphabet.symbols})


def compose_mealy(m: MealyMachine, n: MealyMachine) -> MealyMachine:
    """Series composition on the product state set X x Y."""
    if m.output != n.input:
        raise AlphabetMismatch("middle alphabets differ")
    states = tuple((x, y) for x in m.states for y in n.states)
    d = {}
    s = {}
    for a in m.input.symbols:
        for x in m.states:
            for y in n.states:
                b = m.s[(a, x)]
                d[(a, (x, y))] = (m.d[(a, x)], n.d[(b, y)])
                s[(a, (x, y))] = n.s[(b, y)]
    return MealyMachine(m.input, n.output, states, d, s)


def check_modification(f: Mapping, m: MealyMachine, n: MealyMachine) -> bool:
    """Does the state map f commute with both transition and output?"""
    if m.input != n.input or m.output != n.output:
        raise FrameMismatch("modification endpoints have different alphabets")
    for x in m.states:
        if x not in f or f[x] not in n.states:
            raise InputError("state map not total into the target states")
    for a in m.input.symbols:
        for x in m.states:
            if f[m.d[(a, x)]] != n.d[(a, f[x])]:
                return False
            if m.s[(a, x)] != n.s[(a, f[x])]:
                return False
    return True


def to_transducer(m: MealyMachine) -> Transducer:
    """The embedding G: one singleton entry per (letter, row), rest empty."""
    gen = {}
    for a in m.input.symbols:
        entries = {}
        for x in m.states:
            for x2 in m.states:
                if m.d[(a, x)] == x2:
                    entries[(x, x2)] = RegularLanguage.letter(m.output, m.s[(a, x)])
                else:
                    entries[(x, x2)] = RegularLanguage.empty(m.output)
        gen[a] = LangMatrix(m.states, m.states, m.output, entries)
    return Transducer(m.input, m.output, m.states, gen)
