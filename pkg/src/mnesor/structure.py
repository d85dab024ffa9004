"""Stabilizers, annihilators, absorption witnesses and the prefix-order diagram."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import MnesorSpace, prefix_leq
from .lattice import FiniteLattice, Granular


@dataclass(frozen=True)
class Sublattice:
    parent: FiniteLattice
    members: frozenset[int]

    def __contains__(self, g: Granular | int) -> bool:
        i = g.id if isinstance(g, Granular) else g
        return i in self.members

    def __len__(self):
        return len(self.members)

    def granulars(self) -> list[Granular]:
        return [self.parent.g(i) for i in sorted(self.members)]

    def closure_violations(self) -> list[tuple[int, int]]:
        """Member pairs whose join or meet falls outside the set."""
        lat, ms = self.parent, sorted(self.members)
        bad = []
        for i, a in enumerate(ms):
            for b in ms[i:]:
                if lat.join_id(a, b) not in self.members or lat.meet_id(a, b) not in self.members:
                    bad.append((a, b))
        return bad

    def is_closed(self) -> bool:
        return not self.closure_violations()


def stabilizers(s: MnesorSpace, x) -> Sublattice:
    members = frozenset(g.id for g in s.lattice.granulars() if s.act(x, g) == x)
    return Sublattice(s.lattice, members)


def annihilators(s: MnesorSpace, x) -> Sublattice:
    zero = s.zero
    members = frozenset(g.id for g in s.lattice.granulars() if s.act(x, g) == zero)
    return Sublattice(s.lattice, members)


def absorption_witnesses(s: MnesorSpace, x, y) -> list[Granular]:
    """Every alpha with (x + y) * alpha = x, in lattice order."""
    total = s.add(x, y)
    return [g for g in s.lattice.granulars() if s.act(total, g) == x]


class NotAnOrder(ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


def prefix_relation(s: MnesorSpace, bound: int | None = None) -> tuple[list, set[tuple[int, int]]]:
    carrier = s.elements(bound)
    rel = {
        (i, j)
        for i, u in enumerate(carrier)
        for j, v in enumerate(carrier)
        if prefix_leq(s, u, v)
    }
    return carrier, rel


def hasse(s: MnesorSpace, bound: int | None = None) -> list[tuple]:
    """Covering pairs (lower, upper) of the prefix order over the enumerated carrier.

    Raises NotAnOrder when reflexivity, antisymmetry or transitivity fails on
    the enumerated elements.
    """
    carrier, rel = prefix_relation(s, bound)
    n = len(carrier)
    for i in range(n):
        if (i, i) not in rel:
            raise NotAnOrder(f"not reflexive at {s.render(carrier[i])}", (i, i))
    for i, j in rel:
        if i < j and (j, i) in rel:
            raise NotAnOrder(
                f"antisymmetry fails: {s.render(carrier[i])} and {s.render(carrier[j])}", (i, j)
            )
    up = {i: {j for (k, j) in rel if k == i and j != i} for i in range(n)}
    for i in range(n):
        for j in up[i]:
            if not up[j] <= up[i]:
                raise NotAnOrder(f"not transitive through {s.render(carrier[j])}", (i, j))
    edges = []
    for i in range(n):
        for j in sorted(up[i]):
            if not any(j in up[k] for k in up[i]):
                edges.append((carrier[i], carrier[j]))
    return edges


def to_dot(s: MnesorSpace, edges: list[tuple], bound: int | None = None, name: str = "prefix") -> str:
    """Graphviz source: one node per enumerated element, one edge per covering pair."""
    carrier = s.elements(bound)
    ids = {m: f"n{i}" for i, m in enumerate(carrier)}
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for m in carrier:
        label = s.render(m).replace('"', '\\"')
        lines.append(f'  {ids[m]} [label="{label}"];')
    for lo, hi in edges:
        lines.append(f"  {ids[lo]} -> {ids[hi]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
