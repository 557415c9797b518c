"""Finite linear preorders, class partitions, and order-preserving injections."""

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class LinearPreorder:
    """A linear preorder over a finite carrier, stored as a dense rank map.

    ``x <= y`` iff ``rank[x] <= rank[y]``; equal ranks mean equivalent
    elements.  Ranks must cover the contiguous range ``0..k-1``.
    """

    carrier: tuple
    rank: Mapping

    def __post_init__(self):
        if set(self.rank) != set(self.carrier):
            raise ValueError("rank map must cover exactly the carrier")
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        ranks = set(self.rank.values())
        if self.carrier and ranks != set(range(len(ranks))):
            raise ValueError("ranks must form a contiguous range starting at 0")

    @property
    def num_classes(self) -> int:
        return 1 + max(self.rank.values()) if self.carrier else 0

    def le(self, x, y) -> bool:
        return self.rank[x] <= self.rank[y]

    def equivalent(self, x, y) -> bool:
        return self.rank[x] == self.rank[y]


def classes(p: LinearPreorder) -> list[tuple]:
    """Equivalence classes of `p` in rank order; members keep carrier order."""
    out = [[] for _ in range(p.num_classes)]
    for x in p.carrier:
        out[p.rank[x]].append(x)
    return [tuple(c) for c in out]


def minjection(p: LinearPreorder, dst: Sequence) -> dict:
    """Map every element of the k-th class of `p` to the k-th smallest of `dst`.

    The map is constant on classes and injective across them.  Raises
    ``ValueError`` when `p` has more classes than `dst` has elements.
    """
    targets = sorted(dst)
    if p.num_classes > len(targets):
        raise ValueError(
            f"cannot minject {p.num_classes} classes into {len(targets)} elements"
        )
    return {x: targets[p.rank[x]] for x in p.carrier}


def min_class(p: LinearPreorder, subset: Iterable) -> set:
    """The minimal equivalence class within `subset`; empty for an empty subset."""
    members = list(subset)
    for x in members:
        if x not in p.rank:
            raise ValueError(f"{x!r} not in carrier")
    if not members:
        return set()
    lo = min(p.rank[x] for x in members)
    return {x for x in members if p.rank[x] == lo}


@dataclass(frozen=True)
class PartialOrderOnClasses:
    """A relation over class indices stored as an explicit pair set."""

    carrier: tuple[int, ...]
    pairs: frozenset[tuple[int, int]]

    def violations(self) -> list[str]:
        """Reflexivity, transitivity, and antisymmetry failures, as messages."""
        out = []
        cs = set(self.carrier)
        for a, b in self.pairs:
            if a not in cs or b not in cs:
                out.append(f"pair ({a},{b}) outside carrier")
        for a in self.carrier:
            if (a, a) not in self.pairs:
                out.append(f"missing reflexive pair ({a},{a})")
        for a, b in self.pairs:
            if (b, a) in self.pairs and a != b:
                out.append(f"antisymmetry violated on ({a},{b})")
        for a, b in self.pairs:
            for c, d in self.pairs:
                if b == c and (a, d) not in self.pairs:
                    out.append(f"transitivity violated: ({a},{b}),({b},{d})")
        return out

    def validate(self):
        probs = self.violations()
        if probs:
            raise ValueError("; ".join(probs))
