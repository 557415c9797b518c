"""Brute-force reference implementations used only to check the real ones."""

import itertools

from buchidet import NBW, Lasso


def all_initial_paths(a: NBW, prefix) -> list[tuple[int, ...]]:
    """Every run of the automaton on the prefix, as a state tuple."""
    syms = [a.sym_id(s) for s in prefix]
    paths = [(q,) for q in a.initial]
    for s in syms:
        paths = [p + (q2,) for p in paths for q2 in a.succ(p[-1], s)]
    return paths


def path_profile(a: NBW, path) -> str:
    return "".join("1" if a.is_accepting(q) else "0" for q in path)


def node_profiles(a: NBW, prefix) -> list[dict]:
    """Per level, the lexicographically maximal acceptance history of each
    alive state, obtained by enumerating every initial path."""
    syms = list(prefix)
    out = []
    for i in range(len(syms) + 1):
        best: dict[int, str] = {}
        for path in all_initial_paths(a, syms[:i]):
            h = path_profile(a, path)
            q = path[-1]
            if q not in best or h > best[q]:
                best[q] = h
        out.append(best)
    return out


def brute_ranks(a: NBW, prefix) -> list[dict]:
    """Per level, state -> rank obtained by sorting the brute-force profiles."""
    out = []
    for best in node_profiles(a, prefix):
        order = {h: i for i, h in enumerate(sorted(set(best.values())))}
        out.append({q: order[h] for q, h in best.items()})
    return out


def brute_member(a: NBW, w: Lasso) -> bool:
    """Membership via a period-step matrix closure, independent of the
    product-graph search used by the library.

    One period maps state s to state t either plainly or through an
    accepting state; the closure of that annotated relation decides whether
    some reachable state returns to itself with an accepting visit.
    """
    u = [a.sym_id(s) for s in w.prefix]
    v = [a.sym_id(s) for s in w.period]
    reach = set(a.initial)
    for s in u:
        reach = a.succ_set(reach, s)
    # single-period relation with an "accepting visit inside" flag
    step: dict[int, dict[int, bool]] = {}
    for src in range(a.n):
        frontier = {src: False}
        for s in v:
            nxt: dict[int, bool] = {}
            for q, seen in frontier.items():
                for q2 in a.succ(q, s):
                    flag = seen or a.is_accepting(q2)
                    nxt[q2] = nxt.get(q2, False) or flag
            frontier = nxt
        step[src] = frontier
    # transitive closure over whole periods, keeping the best flag
    closure = {s: dict(step[s]) for s in range(a.n)}
    changed = True
    while changed:
        changed = False
        for s in range(a.n):
            for mid, flag1 in list(closure[s].items()):
                for t, flag2 in closure[mid].items():
                    flag = flag1 or flag2
                    if closure[s].get(t) is None or (flag and not closure[s][t]):
                        closure[s][t] = flag
                        changed = True
    anchors = set(reach)
    for s in reach:
        anchors |= set(closure[s])
    return any(closure[t].get(t) for t in anchors)


def all_lassos(alphabet, max_u, max_v):
    syms = tuple(alphabet)
    for lu in range(max_u + 1):
        for u in itertools.product(syms, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in itertools.product(syms, repeat=lv):
                    yield Lasso(u, v)
