"""Graded-monad axiom checker for endotransducers.

A presentation is an endotransducer candidate together with a unit state
and a binary state operation.  Nothing is assumed: the monoid axioms, the
unit law (each letter's singleton below the unit-state diagonal entry) and
the graded multiplication law (composition degrades along the operation)
are all decided, with concrete witnesses on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import InputError
from .lang import difference_witness
from .qmat import extend_with_states
from .tdx import Transducer, _words_upto


@dataclass(frozen=True)
class MonadPresentation:
    transducer: Transducer
    unit_state: object
    mult: Mapping            # (q, q') -> q''

    def __post_init__(self):
        t = self.transducer
        if self.unit_state not in t.states:
            raise InputError("unit state %r not a state" % (self.unit_state,))
        for x in t.states:
            for y in t.states:
                if (x, y) not in self.mult:
                    raise InputError("multiplication undefined at (%r, %r)" % (x, y))
                if self.mult[(x, y)] not in t.states:
                    raise InputError("multiplication leaves the state set at (%r, %r)"
                                     % (x, y))


@dataclass(frozen=True)
class MonadReport:
    monoid_ok: bool
    unit_ok: bool
    mult_ok: bool
    audit_ok: Optional[bool]
    witness: Optional[dict]

    @property
    def ok(self) -> bool:
        checks = [self.monoid_ok, self.unit_ok, self.mult_ok]
        if self.audit_ok is not None:
            checks.append(self.audit_ok)
        return all(checks)

    @property
    def first_failure(self) -> Optional[str]:
        if not self.monoid_ok:
            return "monoid"
        if not self.unit_ok:
            return "unit"
        if not self.mult_ok:
            return "mult"
        if self.audit_ok is False:
            return "audit"
        return None


def check_monoid(p: MonadPresentation) -> bool:
    return _monoid_witness(p) is None


def _monoid_witness(p: MonadPresentation):
    q0 = p.unit_state
    mult = p.mult
    for x in p.transducer.states:
        if mult[(q0, x)] != x or mult[(x, q0)] != x:
            return {"axiom": "monoid-unit", "state": x}
    for x in p.transducer.states:
        for y in p.transducer.states:
            for z in p.transducer.states:
                if mult[(mult[(x, y)], z)] != mult[(x, mult[(y, z)])]:
                    return {"axiom": "monoid-assoc", "states": (x, y, z)}
    return None


def check_unit(p: MonadPresentation) -> bool:
    return _unit_witness(p) is None


def _unit_witness(p: MonadPresentation):
    t = p.transducer
    q0 = p.unit_state
    for a in t.input.symbols:
        if a not in t.output:
            return {"axiom": "unit", "letter": a,
                    "reason": "input letter missing from the output alphabet"}
        if not t.gen_map[a].entry(q0, q0).member((a,)):
            return {"axiom": "unit", "letter": a, "word": (a,)}
    return None


def check_mult(p: MonadPresentation, audit_len: Optional[int] = None) -> bool:
    w = _mult_witness(p)
    if w is not None:
        return False
    if audit_len is not None:
        return _audit(p, audit_len) is None
    return True


def _mult_witness(p: MonadPresentation):
    t = p.transducer
    for b in t.output.symbols:
        if b not in t.input:
            return {"axiom": "mult", "letter": b,
                    "reason": "output letter missing from the input alphabet; "
                              "the composite square does not exist"}
    for a in t.input.symbols:
        for x in t.states:
            for y in t.states:
                ext = extend_with_states(t.gen_map[a].entry(x, y), t.gen_map,
                                         t.states, t.output)
                for x2 in t.states:
                    for y2 in t.states:
                        tgt = t.gen_map[a].entry(p.mult[(x, x2)], p.mult[(y, y2)])
                        w = difference_witness(ext.entry(x2, y2), tgt)
                        if w is not None:
                            return {"axiom": "mult", "letter": a,
                                    "states": (x, x2, y, y2), "word": w}
    return None


def _audit(p: MonadPresentation, audit_len: int):
    """Re-check the graded law on eval_word for all words up to audit_len.

    Letter-level validity implies this by monotonicity; the audit guards
    the evaluation machinery rather than the definition.
    """
    t = p.transducer
    for b in t.output.symbols:
        if b not in t.input:
            return {"axiom": "audit", "letter": b,
                    "reason": "output letter missing from the input alphabet"}
    for u in _words_upto(t.input, audit_len):
        mat = t.eval_word(u)
        for x in t.states:
            for y in t.states:
                ext = extend_with_states(mat.entry(x, y), t.gen_map,
                                         t.states, t.output)
                for x2 in t.states:
                    for y2 in t.states:
                        tgt = mat.entry(p.mult[(x, x2)], p.mult[(y, y2)])
                        w = difference_witness(ext.entry(x2, y2), tgt)
                        if w is not None:
                            return {"axiom": "audit", "input": u,
                                    "states": (x, x2, y, y2), "word": w}
    return None


def check_monad(p: MonadPresentation, audit_len: Optional[int] = None) -> MonadReport:
    """Decide every axiom; the witness is the first failure in the order
    monoid, unit, mult, audit (the monoid law is what lets letter-level
    multiplication stand for the word-level one)."""
    mw = _monoid_witness(p)
    uw = _unit_witness(p)
    xw = _mult_witness(p)
    aw = _audit(p, audit_len) if audit_len is not None else None
    witness = mw or uw or xw or aw
    return MonadReport(monoid_ok=mw is None,
                       unit_ok=uw is None,
                       mult_ok=xw is None,
                       audit_ok=None if audit_len is None else aw is None,
                       witness=witness)
