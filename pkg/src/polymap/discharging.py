"""Exact-rational discharging on maps.

Every vertex starts with charge 2*deg(v) - 6 and every face with
deg(face) - 6; the grand total is -6*chi, an Euler identity, and every
rule below moves charge without creating or destroying it.  Stage A
(rules A1 to A4) moves charge between vertices and small/huge faces by
amounts keyed only on degrees; stage B empties every major face
(degree >= 7) equally onto its vertex incidences.

All amounts are ``fractions.Fraction``; floats never appear here.  The
A rules commute (their amounts never read current charges), so they may
be applied in any order before rule B; the canonical pipeline in
:func:`run_discharge` runs A1, A2, A3, A4, B and asserts conservation
after every step.

Every transfer is recorded in a :class:`TransferLedger`; replaying the
ledger over the initial charges must land exactly on the final state,
which gives an end-to-end audit of the arithmetic.  The Lemma audit
compares after-A face charges and final vertex charges against the
bounds the counterexample analysis needs; on ordinary maps (ones with
light vertices) failed bounds are informational only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curvature_light import scan_theorem2
from .errors import StructureError
from .validity import check_polyhedral

__all__ = [
    "ChargeState",
    "LedgerEntry",
    "TransferLedger",
    "LemmaAudit",
    "initial_charges",
    "apply_rule_a1",
    "apply_rule_a2",
    "apply_rule_a3",
    "apply_rule_a4",
    "apply_rule_b",
    "run_discharge",
    "lemma1_bound",
]

# Face degree from which rule A4 fires (and above which the A3 tables
# switch to their last band).
HUGE = 2519

# Rule A1: vertex of degree >= 4 pays each incident face of degree 3/4/5.
_A1_AMOUNT = {3: Fraction(1), 4: Fraction(1, 2), 5: Fraction(1, 5)}

# Rule A3: amount sent by the major face across a weak / semi-weak edge,
# keyed by its degree band, then by the minor face's degree.
_A3_WEAK = (
    ((7, 8), {3: Fraction(1, 5), 4: Fraction(1, 5), 5: Fraction(1, 5)}),
    ((9, 12), {3: Fraction(1, 2), 4: Fraction(1, 2), 5: Fraction(1, 5)}),
    ((13, HUGE - 1), {3: Fraction(1), 4: Fraction(1, 2), 5: Fraction(1, 5)}),
    ((HUGE, None), {3: Fraction(19, 10), 4: Fraction(1), 5: Fraction(2, 5)}),
)
_A3_SEMI_WEAK = (
    ((7, 8), {3: Fraction(1, 10), 4: Fraction(1, 10), 5: Fraction(1, 10)}),
    ((9, 12), {3: Fraction(1, 4), 4: Fraction(1, 4), 5: Fraction(1, 10)}),
    ((13, HUGE - 1), {3: Fraction(1, 2), 4: Fraction(1, 4), 5: Fraction(1, 10)}),
    ((HUGE, None), {3: Fraction(1), 4: Fraction(1, 2), 5: Fraction(1, 5)}),
)

_A_RULES = ("A1", "A2", "A3", "A4")


@dataclass(frozen=True)
class ChargeState:
    """Charges on all vertices and faces plus which rules already ran."""

    vertex_charge: dict
    face_charge: dict
    applied: frozenset = frozenset()

    @property
    def stage(self):
        if "B" in self.applied:
            return "after_B"
        if set(_A_RULES) <= self.applied:
            return "after_A"
        if not self.applied:
            return "initial"
        return "stage_A"

    def total(self):
        return (sum(self.vertex_charge.values(), Fraction(0))
                + sum(self.face_charge.values(), Fraction(0)))

    def _advance(self, rule):
        if rule in self.applied:
            raise StructureError("rule %s already applied" % rule)
        if rule != "B" and "B" in self.applied:
            raise StructureError("stage A rule %s after rule B" % rule)
        if rule == "B" and not set(_A_RULES) <= self.applied:
            raise StructureError("rule B requires all of A1-A4 first")
        return ChargeState(
            vertex_charge=dict(self.vertex_charge),
            face_charge=dict(self.face_charge),
            applied=self.applied | {rule},
        )


@dataclass(frozen=True)
class LedgerEntry:
    rule: str
    source: tuple  # ("v", vertex id) or ("f", face index)
    target: tuple
    amount: Fraction
    note: str

    def line(self):
        return "%s\t%s\t%s\t%d/%d" % (
            self.rule, _element(self.source), _element(self.target),
            self.amount.numerator, self.amount.denominator)


def _element(ref):
    return "%s:%s" % ref


@dataclass
class TransferLedger:
    entries: list = field(default_factory=list)

    def record(self, rule, source, target, amount, note):
        self.entries.append(LedgerEntry(rule, source, target, amount, note))

    def to_text(self):
        return "".join(entry.line() + "\n" for entry in self.entries)

    def replay(self, state):
        """Re-apply every recorded transfer on top of ``state``.

        Replaying the full ledger over the initial charges must land on
        the final charges exactly; that is the audit this enables.  Only
        charges move -- a rule that transferred nothing leaves no trace
        here, so ``applied`` is carried over from ``state`` unchanged
        and comparisons should look at the charge maps.
        """
        vertex = dict(state.vertex_charge)
        face = dict(state.face_charge)
        charges = {"v": vertex, "f": face}
        for entry in self.entries:
            charges[entry.source[0]][entry.source[1]] -= entry.amount
            charges[entry.target[0]][entry.target[1]] += entry.amount
        return ChargeState(vertex_charge=vertex, face_charge=face,
                           applied=state.applied)


def initial_charges(top):
    """c(v) = 2 deg(v) - 6 and c(face) = deg(face) - 6, stage initial."""
    return ChargeState(
        vertex_charge={v: Fraction(2 * d - 6)
                       for v, d in top.vertex_degrees.items()},
        face_charge={f: Fraction(d - 6)
                     for f, d in enumerate(top.face_degrees)},
    )


def apply_rule_a1(state, top, ledger=None):
    """Vertices of degree >= 4 pay 1, 1/2, 1/5 per incident 3-, 4-, 5-face."""
    state = state._advance("A1")
    for v in top.rs.vertices:
        if top.vertex_degrees[v] < 4:
            continue
        for f in top.vertex_faces[v]:
            amount = _A1_AMOUNT.get(top.face_degrees[f])
            if amount is None:
                continue
            state.vertex_charge[v] -= amount
            state.face_charge[f] += amount
            if ledger is not None:
                ledger.record("A1", ("v", v), ("f", f), amount,
                              "deg(v)=%d deg(a)=%d"
                              % (top.vertex_degrees[v], top.face_degrees[f]))
    return state


def apply_rule_a2(state, top, ledger=None):
    """Extra 1/10 to each 3-face of a vertex (deg >= 4) that also touches
    at least two 6-faces."""
    state = state._advance("A2")
    for v in top.rs.vertices:
        if top.vertex_degrees[v] < 4:
            continue
        degs = [top.face_degrees[f] for f in top.vertex_faces[v]]
        if degs.count(6) < 2 or degs.count(3) < 1:
            continue
        for f in top.vertex_faces[v]:
            if top.face_degrees[f] != 3:
                continue
            amount = Fraction(1, 10)
            state.vertex_charge[v] -= amount
            state.face_charge[f] += amount
            if ledger is not None:
                ledger.record("A2", ("v", v), ("f", f), amount,
                              "deg(v)=%d three-face with two six-faces"
                              % top.vertex_degrees[v])
    return state


def _a3_amount(table, major_degree, minor_degree):
    for (lo, hi), row in table:
        if major_degree >= lo and (hi is None or major_degree <= hi):
            return row[minor_degree]
    raise AssertionError("unreachable band for degree %d" % major_degree)


def apply_rule_a3(state, top, ledger=None):
    """Across each weak or semi-weak edge with a minor face (deg <= 5) on
    one side and a major face (deg >= 7) on the other, the major face
    pays the tabulated amount."""
    state = state._advance("A3")
    for e in top.rs.edges:
        f1, f2 = top.edge_faces[e]
        if f1 == f2:
            raise StructureError(
                "edge %r has the same face on both sides; "
                "not a closed 2-cell embedding" % (e,))
        kind = top.classify_edge(e)
        if kind == "normal":
            continue
        d1, d2 = top.face_degrees[f1], top.face_degrees[f2]
        if d1 <= 5 and d2 >= 7:
            minor, major = f1, f2
        elif d2 <= 5 and d1 >= 7:
            minor, major = f2, f1
        else:
            continue
        table = _A3_WEAK if kind == "weak" else _A3_SEMI_WEAK
        amount = _a3_amount(
            table, top.face_degrees[major], top.face_degrees[minor])
        state.face_charge[major] -= amount
        state.face_charge[minor] += amount
        if ledger is not None:
            ledger.record("A3", ("f", major), ("f", minor), amount,
                          "%s edge %s deg(a)=%d deg(a')=%d"
                          % (kind, e, top.face_degrees[minor],
                             top.face_degrees[major]))
    return state


def apply_rule_a4(state, top, ledger=None):
    """Huge faces (degree >= 2519) refund 1/2 per incident (3,3,4,k)-vertex
    and 1/5 per incident (3,3,5,k)-vertex, k being the face's own degree."""
    state = state._advance("A4")
    for f, walk in enumerate(top.faces):
        k = top.face_degrees[f]
        if k < HUGE:
            continue
        for v in walk.vertex_sequence:
            vt = top.vertex_type(v)
            if vt == (3, 3, 4, k):
                amount = Fraction(1, 2)
            elif vt == (3, 3, 5, k):
                amount = Fraction(1, 5)
            else:
                continue
            state.face_charge[f] -= amount
            state.vertex_charge[v] += amount
            if ledger is not None:
                ledger.record("A4", ("f", f), ("v", v), amount,
                              "type %r with k=%d" % (vt, k))
    return state


def apply_rule_b(state, top, ledger=None):
    """Every major face splits its entire charge equally over its vertex
    incidences and ends at zero."""
    state = state._advance("B")
    for f, walk in enumerate(top.faces):
        if top.face_degrees[f] < 7:
            continue
        share = state.face_charge[f] / walk.degree
        if share == 0:
            continue
        for v in walk.vertex_sequence:
            state.face_charge[f] -= share
            state.vertex_charge[v] += share
            if ledger is not None:
                ledger.record("B", ("f", f), ("v", v), share,
                              "deg(a)=%d share of c*" % walk.degree)
    return state


def lemma1_bound(degree):
    """Lower bound the analysis needs on a face's after-A charge."""
    if degree <= 6:
        return Fraction(0)
    if degree <= 12:
        return (Fraction(2, 5), Fraction(6, 5), Fraction(1),
                Fraction(3, 2), Fraction(5, 2), Fraction(3))[degree - 7]
    return Fraction(degree, 21)


@dataclass(frozen=True)
class LemmaAudit:
    """Bound checks against the counterexample analysis.

    ``lemma1_violations``: (face, degree, charge, bound) where the
    after-A face charge is below the bound for its degree class.
    ``lemma2_violations``: (vertex, charge) with final charge < 1/21.
    ``light_count``: size of the light-vertex census; ``contradiction``
    is set when violations coexist with an empty census on a map that
    satisfies the large-map hypotheses, which the theory rules out.
    """

    lemma1_violations: tuple
    lemma2_violations: tuple
    light_count: int
    hypotheses_met: bool
    contradiction: bool


def _audit(top, after_a, final):
    scan = scan_theorem2(top, check_polyhedral(top))
    lemma1 = tuple(
        (f, top.face_degrees[f], after_a.face_charge[f], lemma1_bound(top.face_degrees[f]))
        for f in range(len(top.faces))
        if after_a.face_charge[f] < lemma1_bound(top.face_degrees[f]))
    lemma2 = tuple(
        (v, final.vertex_charge[v])
        for v in top.rs.vertices
        if final.vertex_charge[v] < Fraction(1, 21))
    violated = bool(lemma1 or lemma2)
    contradiction = (violated and not scan.light
                     and scan.hypotheses_met)
    return LemmaAudit(
        lemma1_violations=lemma1,
        lemma2_violations=lemma2,
        light_count=len(scan.light),
        hypotheses_met=scan.hypotheses_met,
        contradiction=contradiction,
    )


def run_discharge(top):
    """Full pipeline A1 -> A2 -> A3 -> A4 -> B with audits.

    Returns (final ChargeState, TransferLedger, LemmaAudit).
    Conservation of the total at -6*chi is asserted after every rule; a
    failure is a bug in this module, not bad input.
    """
    ledger = TransferLedger()
    state = initial_charges(top)
    expected = Fraction(-6 * top.euler_characteristic)
    _check_total(state, expected, "initial")
    for rule in (apply_rule_a1, apply_rule_a2, apply_rule_a3, apply_rule_a4):
        state = rule(state, top, ledger)
        _check_total(state, expected, state.applied)
    after_a = state
    state = apply_rule_b(state, top, ledger)
    _check_total(state, expected, "after_B")
    return state, ledger, _audit(top, after_a, state)


def _check_total(state, expected, where):
    if state.total() != expected:
        raise RuntimeError(
            "charge conservation broken at %s: total %s, expected %s"
            % (where, state.total(), expected))
