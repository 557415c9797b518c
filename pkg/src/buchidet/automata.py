"""Nondeterministic Buchi and deterministic Rabin word automata.

State and symbol names are strings; internally every state gets a dense
integer id in declaration order, so all iteration is deterministic.  All
values are immutable after construction and every operation is pure.
"""

from dataclasses import dataclass
from typing import Iterable, Sequence


class ParseError(ValueError):
    """Malformed automaton document.  Carries the offending 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Lasso:
    """Ultimately periodic word ``prefix . period^w``.  The period is nonempty."""

    prefix: tuple[str, ...]
    period: tuple[str, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("lasso period must be nonempty")

    @classmethod
    def parse(cls, text: str) -> "Lasso":
        """Parse the ``"u;v"`` syntax, symbols separated by dots (``a;b``, ``;a.b``)."""
        if ";" not in text:
            raise ValueError(f"lasso {text!r} must contain ';' between prefix and period")
        u, _, v = text.partition(";")
        return cls(_symbols(u), _symbols(v))

    def unroll(self, length: int) -> tuple[str, ...]:
        """First `length` symbols of the denoted infinite word."""
        out = list(self.prefix)
        while len(out) < length:
            out.extend(self.period)
        return tuple(out[:length])

    def __str__(self):
        return f"{'.'.join(self.prefix)};{'.'.join(self.period)}"


def _symbols(part: str) -> tuple[str, ...]:
    part = part.strip()
    return tuple(part.split(".")) if part else ()


class NBW:
    """Nondeterministic Buchi word automaton.

    The transition relation may be partial: a state may have no successor
    on some symbol, in which case runs through it die.
    """

    __slots__ = ("alphabet", "states", "initial", "accepting", "edges",
                 "_sym_id", "_state_id", "_succ", "_pred", "_acc")

    def __init__(self, alphabet, states, initial, accepting, edges):
        self.alphabet: tuple[str, ...] = tuple(alphabet)
        self.states: tuple[str, ...] = tuple(states)
        self.initial: tuple[int, ...] = tuple(sorted(initial))
        self.accepting: tuple[int, ...] = tuple(sorted(accepting))
        self.edges: tuple[tuple[int, int, int], ...] = tuple(sorted(set(edges)))
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("duplicate alphabet symbol")
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state name")
        if not self.alphabet:
            raise ValueError("alphabet must be nonempty")
        if not self.initial:
            raise ValueError("initial set must be nonempty")
        n, k = len(self.states), len(self.alphabet)
        for q in self.initial + self.accepting:
            if not 0 <= q < n:
                raise ValueError(f"state id {q} out of range")
        for src, sym, dst in self.edges:
            if not (0 <= src < n and 0 <= dst < n and 0 <= sym < k):
                raise ValueError(f"transition ({src},{sym},{dst}) out of range")
        self._sym_id = {s: i for i, s in enumerate(self.alphabet)}
        self._state_id = {s: i for i, s in enumerate(self.states)}
        succ = [[[] for _ in range(k)] for _ in range(n)]
        pred = [[[] for _ in range(k)] for _ in range(n)]
        for src, sym, dst in self.edges:
            succ[src][sym].append(dst)
            pred[dst][sym].append(src)
        self._succ = tuple(tuple(tuple(row) for row in per) for per in succ)
        self._pred = tuple(tuple(tuple(row) for row in per) for per in pred)
        self._acc = frozenset(self.accepting)

    @classmethod
    def build(cls, alphabet: Sequence[str], states: Sequence[str],
              initial: Iterable[str], accepting: Iterable[str],
              transitions: Iterable[tuple[str, str, str]]) -> "NBW":
        """Construct from names; transitions are (src, symbol, dst) triples."""
        sid = {s: i for i, s in enumerate(states)}
        aid = {a: i for i, a in enumerate(alphabet)}

        def state(name):
            if name not in sid:
                raise ValueError(f"undeclared state {name!r}")
            return sid[name]

        edges = []
        for src, sym, dst in transitions:
            if sym not in aid:
                raise ValueError(f"undeclared symbol {sym!r}")
            edges.append((state(src), aid[sym], state(dst)))
        return cls(alphabet, states, [state(s) for s in initial],
                   [state(s) for s in accepting], edges)

    # -- queries ------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.states)

    def sym_id(self, symbol: str) -> int:
        try:
            return self._sym_id[symbol]
        except KeyError:
            raise ValueError(f"symbol {symbol!r} not in alphabet") from None

    def succ(self, q: int, sym: int) -> tuple[int, ...]:
        return self._succ[q][sym]

    def pred(self, q: int, sym: int) -> tuple[int, ...]:
        return self._pred[q][sym]

    def succ_set(self, qs: Iterable[int], sym: int) -> set[int]:
        out = set()
        for q in qs:
            out.update(self._succ[q][sym])
        return out

    def is_accepting(self, q: int) -> bool:
        return q in self._acc

    @property
    def needs_normalization(self) -> bool:
        return bool(set(self.initial) & self._acc)

    def __eq__(self, other):
        return (isinstance(other, NBW)
                and self.alphabet == other.alphabet and self.states == other.states
                and self.initial == other.initial and self.accepting == other.accepting
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.alphabet, self.states, self.initial, self.accepting, self.edges))

    def __repr__(self):
        return (f"NBW(states={len(self.states)}, alphabet={len(self.alphabet)}, "
                f"edges={len(self.edges)})")


def normalize(a: NBW) -> NBW:
    """Detach accepting states from the initial set, preserving the language.

    Every initial accepting state q is replaced in the initial set by a fresh
    non-accepting copy with the same outgoing transitions; q itself stays.
    Acceptance never depends on position 0, so the language is unchanged.
    Idempotent: an automaton with disjoint initial and accepting sets is
    returned as is.
    """
    clash = sorted(set(a.initial) & set(a.accepting))
    if not clash:
        return a
    states = list(a.states)
    copy_of = {}
    for q in clash:
        name = a.states[q] + "'"
        while name in states:
            name += "'"
        copy_of[q] = len(states)
        states.append(name)
    edges = list(a.edges)
    for q in clash:
        edges.extend((copy_of[q], sym, dst) for src, sym, dst in a.edges if src == q)
    initial = [q for q in a.initial if q not in copy_of] + [copy_of[q] for q in clash]
    return NBW(a.alphabet, states, initial, a.accepting, edges)


# -- lasso membership ---------------------------------------------------------


def nbw_member(a: NBW, w: Lasso) -> bool:
    """Decide whether the automaton accepts ``u . v^w``.

    Runs the prefix, then looks for a reachable cycle through an accepting
    node in the finite graph over (state, position mod |v|) pairs.  Cycle
    detection is exact, never a step-capped heuristic.
    """
    u = [a.sym_id(s) for s in w.prefix]
    v = [a.sym_id(s) for s in w.period]
    reach = set(a.initial)
    for s in u:
        reach = a.succ_set(reach, s)
        if not reach:
            return False
    lv = len(v)
    # product nodes encoded as q * lv + i, adjacency as bitmasks
    succ = a._succ
    adj: dict[int, int] = {}
    frontier = [q * lv for q in reach]
    seen = set(frontier)
    while frontier:
        node = frontier.pop()
        q, i = divmod(node, lv)
        mask = 0
        ni = (i + 1) % lv
        for q2 in succ[q][v[i]]:
            nxt = q2 * lv + ni
            mask |= 1 << nxt
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
        adj[node] = mask
    acc = a._acc
    for node in seen:
        if node // lv in acc:
            # does node reach itself through at least one step?
            target = 1 << node
            visited = 0
            layer = adj[node]
            while layer:
                if layer & target:
                    return True
                visited |= layer
                nxt = 0
                m = layer
                while m:
                    bit = m & -m
                    m ^= bit
                    nxt |= adj[bit.bit_length() - 1]
                layer = nxt & ~visited
    return False


# -- deterministic Rabin automata ---------------------------------------------


@dataclass(frozen=True)
class RabinCondition:
    """Ordered list of (G, B) pairs over state ids."""

    pairs: tuple[tuple[frozenset[int], frozenset[int]], ...]

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


@dataclass(frozen=True)
class DRW:
    """Deterministic Rabin word automaton with a total transition function.

    ``trans[q][sym]`` is the unique successor.  ``payloads`` optionally keeps
    the construction artifact (macrostate or Safra tree) behind each state.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    initial: int
    trans: tuple[tuple[int, ...], ...]
    acceptance: RabinCondition
    payloads: tuple | None = None

    def __post_init__(self):
        n, k = len(self.states), len(self.alphabet)
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        if len(self.trans) != n or any(len(row) != k for row in self.trans):
            raise ValueError("transition table must be total")
        for row in self.trans:
            for dst in row:
                if not 0 <= dst < n:
                    raise ValueError(f"transition target {dst} out of range")
        for g, b in self.acceptance:
            if any(not 0 <= q < n for q in g | b):
                raise ValueError("acceptance pair references unknown state")

    def sym_id(self, symbol: str) -> int:
        try:
            return self.alphabet.index(symbol)
        except ValueError:
            raise ValueError(f"symbol {symbol!r} not in alphabet") from None


def drw_run_eval(d: DRW, w: Lasso) -> bool:
    """Evaluate the unique run of a DRW on ``u . v^w``.

    Follows the prefix, then iterates the period until a (state, position)
    pair repeats; accepts iff some Rabin pair has G visited and B avoided on
    the detected cycle.
    """
    u = [d.sym_id(s) for s in w.prefix]
    v = [d.sym_id(s) for s in w.period]
    q = d.initial
    for s in u:
        q = d.trans[q][s]
    lv = len(v)
    seen_at: dict[tuple[int, int], int] = {}
    trace: list[int] = []
    pos = 0
    while (q, pos) not in seen_at:
        seen_at[(q, pos)] = len(trace)
        trace.append(q)
        q = d.trans[q][v[pos]]
        pos = (pos + 1) % lv
    cycle = set(trace[seen_at[(q, pos)]:])
    return any(cycle & g and not cycle & b for g, b in d.acceptance)


# -- native text format --------------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _parse_sections(text: str, kind: str):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty document")
    lineno, tokens = lines[0]
    if tokens != [kind]:
        raise ParseError(f"expected header {kind!r}", lineno)
    single = {"alphabet:": None, "states:": None, "initial:": None, "accepting:": None}
    trans: list[tuple[int, list[str]]] = []
    pairs: list[tuple[int, list[str]]] = []
    for lineno, tokens in lines[1:]:
        key, rest = tokens[0], tokens[1:]
        if key in single:
            if single[key] is not None:
                raise ParseError(f"duplicate {key[:-1]} section", lineno)
            single[key] = (lineno, rest)
        elif key == "trans:":
            trans.append((lineno, rest))
        elif key == "pair:":
            pairs.append((lineno, rest))
        else:
            raise ParseError(f"unknown directive {key!r}", lineno)
    return single, trans, pairs


def parse_nbw(text: str) -> NBW:
    """Parse the native NBW format.

    The result may still have initial accepting states; callers that need the
    disjointness guarantee run :func:`normalize`.
    """
    single, trans, pairs = _parse_sections(text, "nbw")
    if pairs:
        raise ParseError("pair: lines are not allowed in an nbw document", pairs[0][0])
    for key in ("alphabet:", "states:", "initial:"):
        if single[key] is None:
            raise ParseError(f"missing {key[:-1]} section")
    lineno, alphabet = single["alphabet:"]
    if not alphabet:
        raise ParseError("alphabet must list at least one symbol", lineno)
    lineno, states = single["states:"]
    if not states:
        raise ParseError("states must list at least one name", lineno)
    if len(set(states)) != len(states):
        raise ParseError("duplicate state name", lineno)
    if len(set(alphabet)) != len(alphabet):
        raise ParseError("duplicate alphabet symbol", single["alphabet:"][0])
    sid = {s: i for i, s in enumerate(states)}
    aid = {s: i for i, s in enumerate(alphabet)}

    def state(name, lineno):
        if name not in sid:
            raise ParseError(f"undeclared state {name!r}", lineno)
        return sid[name]

    lineno, init_names = single["initial:"]
    if not init_names:
        raise ParseError("initial set must be nonempty", lineno)
    initial = [state(s, lineno) for s in init_names]
    if single["accepting:"] is None:
        accepting = []
    else:
        lineno, acc_names = single["accepting:"]
        accepting = [state(s, lineno) for s in acc_names]
    edges = []
    for lineno, rest in trans:
        if len(rest) != 3:
            raise ParseError("trans expects exactly: source symbol target", lineno)
        src, sym, dst = rest
        if sym not in aid:
            raise ParseError(f"undeclared symbol {sym!r}", lineno)
        edges.append((state(src, lineno), aid[sym], state(dst, lineno)))
    return NBW(alphabet, states, initial, accepting, edges)


def format_nbw(a: NBW) -> str:
    lines = ["nbw",
             "alphabet: " + " ".join(a.alphabet),
             "states: " + " ".join(a.states),
             "initial: " + " ".join(a.states[q] for q in a.initial),
             ("accepting: " + " ".join(a.states[q] for q in a.accepting)).rstrip()]
    for src, sym, dst in a.edges:
        lines.append(f"trans: {a.states[src]} {a.alphabet[sym]} {a.states[dst]}")
    return "\n".join(lines) + "\n"


def parse_drw(text: str) -> DRW:
    """Parse the native DRW format (single initial state, total transitions)."""
    single, trans, pair_lines = _parse_sections(text, "drw")
    for key in ("alphabet:", "states:", "initial:"):
        if single[key] is None:
            raise ParseError(f"missing {key[:-1]} section")
    if single["accepting:"] is not None:
        raise ParseError("accepting: is not allowed in a drw document",
                         single["accepting:"][0])
    _, alphabet = single["alphabet:"]
    lineno, states = single["states:"]
    if not states or len(set(states)) != len(states):
        raise ParseError("states must list distinct names", lineno)
    sid = {s: i for i, s in enumerate(states)}
    aid = {s: i for i, s in enumerate(alphabet)}
    lineno, init_names = single["initial:"]
    if len(init_names) != 1:
        raise ParseError("drw requires exactly one initial state", lineno)
    if init_names[0] not in sid:
        raise ParseError(f"undeclared state {init_names[0]!r}", lineno)
    initial = sid[init_names[0]]
    table: list[list[int | None]] = [[None] * len(alphabet) for _ in states]
    for lineno, rest in trans:
        if len(rest) != 3:
            raise ParseError("trans expects exactly: source symbol target", lineno)
        src, sym, dst = rest
        if src not in sid or dst not in sid:
            raise ParseError(f"undeclared state in transition", lineno)
        if sym not in aid:
            raise ParseError(f"undeclared symbol {sym!r}", lineno)
        if table[sid[src]][aid[sym]] is not None:
            raise ParseError(f"duplicate transition for {src} {sym}", lineno)
        table[sid[src]][aid[sym]] = sid[dst]
    for qi, row in enumerate(table):
        for si, dst in enumerate(row):
            if dst is None:
                raise ParseError(
                    f"missing transition for {states[qi]} {alphabet[si]}")
    by_idx = {}
    for lineno, rest in pair_lines:
        if len(rest) < 3 or rest[1] != "G" or "|" not in rest:
            raise ParseError("pair expects: <idx> G <state>* | B <state>*", lineno)
        try:
            idx = int(rest[0])
        except ValueError:
            raise ParseError(f"pair index {rest[0]!r} is not an integer", lineno)
        if idx in by_idx:
            raise ParseError(f"duplicate pair index {idx}", lineno)
        bar = rest.index("|")
        if bar + 1 >= len(rest) or rest[bar + 1] != "B":
            raise ParseError("pair expects: <idx> G <state>* | B <state>*", lineno)
        g_names, b_names = rest[2:bar], rest[bar + 2:]
        for name in g_names + b_names:
            if name not in sid:
                raise ParseError(f"undeclared state {name!r}", lineno)
        by_idx[idx] = (frozenset(sid[s] for s in g_names),
                       frozenset(sid[s] for s in b_names))
    if set(by_idx) != set(range(len(by_idx))):
        raise ParseError("pair indices must be contiguous from 0")
    pairs = tuple(by_idx[i] for i in range(len(by_idx)))
    return DRW(tuple(alphabet), tuple(states), initial,
               tuple(tuple(row) for row in table), RabinCondition(pairs))


def format_drw(d: DRW) -> str:
    lines = ["drw",
             "alphabet: " + " ".join(d.alphabet),
             "states: " + " ".join(d.states),
             "initial: " + d.states[d.initial]]
    for qi, row in enumerate(d.trans):
        for si, dst in enumerate(row):
            lines.append(f"trans: {d.states[qi]} {d.alphabet[si]} {d.states[dst]}")
    for idx, (g, b) in enumerate(d.acceptance):
        tokens = ["pair:", str(idx), "G", *(d.states[q] for q in sorted(g)),
                  "|", "B", *(d.states[q] for q in sorted(b))]
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"
