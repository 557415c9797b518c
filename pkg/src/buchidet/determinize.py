"""Determinization of an NBW into a DRW over doubly preordered state sets.

A macrostate carries the set of currently alive states, the linear preorder
induced by their acceptance histories (stored as rank-ordered classes), one
label per class from the pool {0..2n}, a second "cousin" preorder recording
which classes descend from each label's birth class, and the good/bad label
events that feed the Rabin condition.  Successors are defined declaratively
from these orders; no tree surgery is involved.
"""

from dataclasses import dataclass

from .automata import DRW, NBW, RabinCondition
from .explore import explore
from .orders import LinearPreorder, PartialOrderOnClasses


@dataclass(frozen=True)
class Macrostate:
    """Canonical, hashable macrostate.

    `classes` lists the preorder's equivalence classes smallest-first, each a
    sorted tuple of state ids; `labels` gives the class labels in the same
    order; `cousin` holds rank pairs (a, b) meaning class b descends from the
    birth class of class a's label.  Two macrostates are equal iff these
    canonical fields are equal.
    """

    classes: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]
    cousin: frozenset
    good: frozenset
    bad: frozenset

    @property
    def states(self) -> tuple[int, ...]:
        return tuple(sorted(q for group in self.classes for q in group))

    def rank_of(self, q: int) -> int:
        for i, group in enumerate(self.classes):
            if q in group:
                return i
        raise KeyError(q)

    def label_of(self, q: int) -> int:
        return self.labels[self.rank_of(q)]

    def preorder(self) -> LinearPreorder:
        ranks = {q: i for i, group in enumerate(self.classes) for q in group}
        return LinearPreorder(self.states, ranks)


def initial_macrostate(a: NBW) -> Macrostate:
    """All initial states in one class labeled 0, fully cousin-related."""
    if a.needs_normalization:
        raise ValueError("automaton must be normalized first")
    return Macrostate((tuple(sorted(a.initial)),), (0,),
                      frozenset({(0, 0)}), frozenset(), frozenset())


def restricted_step(a: NBW, m: Macrostate, symbol: str) -> dict:
    """Map each successor state to the class of its surviving predecessors.

    When a state has several incoming transitions from the macrostate, only
    those from the rank-maximal class survive; that class is unique.
    """
    sym = a.sym_id(symbol)
    rank = {q: i for i, group in enumerate(m.classes) for q in group}
    out = {}
    for q in sorted(rank):
        for q2 in a.succ(q, sym):
            best = max(rank[p] for p in a.pred(q2, sym) if p in rank)
            out[q2] = best
    return out


def _successor(a: NBW, m: Macrostate, sym: int) -> Macrostate:
    rank = {q: i for i, group in enumerate(m.classes) for q in group}
    succ = a._succ
    pred = a._pred
    acc = a._acc

    new_states = sorted({q2 for q in rank for q2 in succ[q][sym]})
    key = {}
    for q2 in new_states:
        parent = max(rank[p] for p in pred[q2][sym] if p in rank)
        key[q2] = (parent, 1 if q2 in acc else 0)
    order = sorted(set(key.values()))
    classes2 = tuple(tuple(q2 for q2 in new_states if key[q2] == kk) for kk in order)
    parent2 = [kk[0] for kk in order]
    f2 = [kk[1] for kk in order]
    k2 = len(classes2)

    # nephews: per old class, the minimal new class fed by any of its cousins
    k = len(m.classes)
    cousin = m.cousin
    neph = []
    for a_idx in range(k):
        cousins = {b for (x, b) in cousin if x == a_idx}
        best = None
        for j in range(k2):
            if parent2[j] in cousins:
                best = j
                break
        neph.append(best)
    uncles: list[list[int]] = [[] for _ in range(k2)]
    for a_idx, j in enumerate(neph):
        if j is not None:
            uncles[j].append(a_idx)

    # labels: inherit from the minimal uncle, else draw fresh ones in rank
    # order from the labels the current macrostate leaves free
    labels2: list = [None] * k2
    for j in range(k2):
        if uncles[j]:
            labels2[j] = m.labels[uncles[j][0]]
    free = sorted(set(range(2 * a.n + 1)) - set(m.labels))
    fresh = [j for j in range(k2) if not uncles[j]]
    if len(fresh) > len(free):
        raise AssertionError("free-label pool exhausted; state count is wrong")
    for pos, j in enumerate(fresh):
        labels2[j] = free[pos]

    pairs = {(j, j) for j in range(k2)}
    for j in range(k2):
        for j2 in range(k2):
            if j2 != j and any((u, parent2[j2]) in cousin for u in uncles[j]):
                pairs.add((j, j2))

    # label events: a surviving label is good when its class turned accepting
    # or moved off its old branch; a vanished label is bad
    at2 = {lab: j for j, lab in enumerate(labels2)}
    good = set()
    bad = set()
    for a_idx in range(k):
        lab = m.labels[a_idx]
        j = at2.get(lab)
        if j is None:
            bad.add(lab)
        elif parent2[j] != a_idx or f2[j] == 1:
            good.add(lab)
    return Macrostate(classes2, tuple(labels2), frozenset(pairs),
                      frozenset(good), frozenset(bad))


def sigma_successor(a: NBW, m: Macrostate, symbol: str) -> Macrostate:
    """The unique successor macrostate on `symbol`.

    When every run dies the result is the empty macrostate, whose bad set
    names all labels alive before; the empty macrostate loops on itself with
    no further events, acting as the rejecting sink.
    """
    return _successor(a, m, a.sym_id(symbol))


def determinize_profile(a: NBW, max_states: int = 10 ** 6) -> DRW:
    """Explore the full macrostate automaton and package it as a DRW.

    One Rabin pair per label in {0..2n} is generated; pairs whose G side is
    empty can never fire and are dropped.
    """
    if a.needs_normalization:
        raise ValueError("automaton must be normalized first")
    states, table = explore(initial_macrostate(a),
                            lambda m, s: _successor(a, m, s),
                            len(a.alphabet), max_states)
    pairs = []
    for lab in range(2 * a.n + 1):
        g = frozenset(i for i, st in enumerate(states) if lab in st.good)
        if g:
            b = frozenset(i for i, st in enumerate(states) if lab in st.bad)
            pairs.append((g, b))
    return DRW(a.alphabet, tuple(f"m{i}" for i in range(len(states))), 0,
               tuple(tuple(row) for row in table),
               RabinCondition(tuple(pairs)), tuple(states))


def validate_macrostate(a: NBW, m: Macrostate) -> list[str]:
    """Structural invariants of a macrostate; violations come back as messages."""
    out = []
    seen: set[int] = set()
    for j, group in enumerate(m.classes):
        if not group:
            out.append(f"class {j} is empty")
        if tuple(sorted(group)) != group:
            out.append(f"class {j} is not sorted")
        if seen & set(group):
            out.append(f"class {j} overlaps another class")
        seen |= set(group)
        for q in group:
            if not 0 <= q < a.n:
                out.append(f"state id {q} out of range")
    if len(m.labels) != len(m.classes):
        out.append("labels and classes differ in length")
    if len(set(m.labels)) != len(m.labels):
        out.append("labels are not distinct across classes")
    for lab in m.labels:
        if not 0 <= lab <= 2 * a.n:
            out.append(f"label {lab} outside the pool")
    k = len(m.classes)
    for x, y in m.cousin:
        if not (0 <= x < k and 0 <= y < k):
            out.append(f"cousin pair ({x},{y}) out of range")
        elif x > y:
            out.append(f"cousin pair ({x},{y}) contradicts the class order")
    po = PartialOrderOnClasses(tuple(range(k)),
                               frozenset((x, y) for x, y in m.cousin
                                         if 0 <= x < k and 0 <= y < k))
    out.extend(f"cousin relation: {v}" for v in po.violations())
    for lab in m.good | m.bad:
        if not 0 <= lab <= 2 * a.n:
            out.append(f"event label {lab} outside the pool")
    if m.good & m.bad:
        out.append("good and bad label sets overlap")
    return out
