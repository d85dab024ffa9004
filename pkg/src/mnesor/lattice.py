"""Finite bounded lattices given by explicit join/meet tables.

Elements are the integers ``0..n-1`` of one lattice instance; ``labels``
maps them to display strings.  Operations on :class:`Granular` values
check that both operands come from the same lattice instance.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence


class DomainMismatch(ValueError):
    """Operands belong to different lattices (or universes)."""


class NotALattice(ValueError):
    pass


class FiniteLattice:
    """Bounded lattice on ids ``0..n-1`` with explicit join/meet tables."""

    def __init__(self, name, labels, join_table, meet_table, top, bottom=None):
        self.name = name
        self.labels = tuple(labels)
        self.join_table = tuple(tuple(r) for r in join_table)
        self.meet_table = tuple(tuple(r) for r in meet_table)
        self.top = top
        self.bottom = bottom
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError(f"duplicate labels in lattice {name!r}")
        for table in (self.join_table, self.meet_table):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValueError("join/meet tables must be total n x n")
            if any(not 0 <= v < n for row in table for v in row):
                raise ValueError("table entry outside the carrier")
        self._check_bounds()

    def _check_bounds(self):
        if not 0 <= self.top < len(self):
            raise ValueError("top outside the carrier")
        if self.bottom is not None and not 0 <= self.bottom < len(self):
            raise ValueError("bottom outside the carrier")

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r}, size={len(self)})"

    def join_id(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_id(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    @property
    def elements(self) -> range:
        return range(len(self))

    def granulars(self) -> list[Granular]:
        return [Granular(self, i) for i in self.elements]

    def __getitem__(self, label: str) -> Granular:
        return Granular(self, self.index(label))

    def g(self, i: int) -> Granular:
        return Granular(self, i)

    @property
    def top_g(self) -> Granular:
        return Granular(self, self.top)

    @property
    def bottom_g(self) -> Granular | None:
        return None if self.bottom is None else Granular(self, self.bottom)

    def leq_ids(self, a: int, b: int) -> bool:
        return self.join_id(a, b) == b

    def to_json(self) -> dict:
        doc = {
            "kind": "table",
            "name": self.name,
            "elements": list(self.labels),
            "join": [list(r) for r in self.join_table],
            "meet": [list(r) for r in self.meet_table],
            "top": self.top,
        }
        if self.bottom is not None:
            doc["bottom"] = self.bottom
        return doc


class PowersetLattice(FiniteLattice):
    """Subsets of named atoms; the id of a subset is its bitmask (atom i is bit i).

    Join and meet are bit operations, so large universes never build tables;
    ``labels`` and the tables are materialized only on request.
    """

    def __init__(self, atoms: Sequence[str]):
        self.atoms = tuple(atoms)
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("powerset atoms must be distinct")
        self.name = f"powerset:{len(self.atoms)}"
        self._n = 1 << len(self.atoms)
        self.top = self._n - 1
        self.bottom = 0

    def __len__(self):
        return self._n

    def __getattr__(self, key):
        # lazily materialized views; only reached when the attribute is unset
        r = range(self._n)
        if key == "labels":
            value = tuple(self.label(m) for m in r)
        elif key == "join_table":
            value = tuple(tuple(a | b for b in r) for a in r)
        elif key == "meet_table":
            value = tuple(tuple(a & b for b in r) for a in r)
        else:
            raise AttributeError(key)
        object.__setattr__(self, key, value)
        return value

    def __getstate__(self):
        return {"atoms": self.atoms, "name": self.name, "_n": self._n, "top": self.top, "bottom": self.bottom}

    def __setstate__(self, state):
        for k, v in state.items():
            object.__setattr__(self, k, v)

    def join_id(self, a: int, b: int) -> int:
        return a | b

    def meet_id(self, a: int, b: int) -> int:
        return a & b

    def label(self, i: int) -> str:
        return _set_label(self.atoms, i)

    def index(self, label: str) -> int:
        body = label.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise KeyError(label)
        m = 0
        for name in body[1:-1].split():
            if name not in self.atoms:
                raise KeyError(label)
            m |= 1 << self.atoms.index(name)
        return m

    def mask(self, names: Iterable[str]) -> int:
        m = 0
        for name in names:
            m |= 1 << self.atoms.index(name)
        return m


@dataclass(frozen=True)
class Granular:
    lattice: FiniteLattice
    id: int

    def __post_init__(self):
        if not 0 <= self.id < len(self.lattice):
            raise ValueError(f"{self.id} is not an element of {self.lattice.name}")

    @property
    def label(self) -> str:
        return self.lattice.label(self.id)

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"Granular({self.lattice.name}:{self.label})"

    def __or__(self, other: Granular) -> Granular:
        return join(self, other)

    def __and__(self, other: Granular) -> Granular:
        return meet(self, other)


def _same(a: Granular, b: Granular) -> FiniteLattice:
    if a.lattice is not b.lattice:
        raise DomainMismatch(
            f"granulars from different lattices: {a.lattice.name} vs {b.lattice.name}"
        )
    return a.lattice


def join(a: Granular, b: Granular) -> Granular:
    lat = _same(a, b)
    return Granular(lat, lat.join_id(a.id, b.id))


def meet(a: Granular, b: Granular) -> Granular:
    lat = _same(a, b)
    return Granular(lat, lat.meet_id(a.id, b.id))


def leq(a: Granular, b: Granular) -> bool:
    lat = _same(a, b)
    return lat.join_id(a.id, b.id) == b.id


# ---------------------------------------------------------------------------
# validation


def validate(lat: FiniteLattice) -> list[str]:
    """Scan the tables and describe every broken lattice law.

    Each violation is a string naming the law and the witnessing elements.
    An empty list means the tables form a bounded lattice.
    """
    J, M, L = lat.join_table, lat.meet_table, lat.labels
    out = []
    els = lat.elements
    for name, T in (("join", J), ("meet", M)):
        for a in els:
            if T[a][a] != a:
                out.append(f"{name}-idempotent: {L[a]}")
        for a, b in itertools.combinations(els, 2):
            if T[a][b] != T[b][a]:
                out.append(f"{name}-commutative: {L[a]}, {L[b]}")
        for a, b, c in itertools.product(els, repeat=3):
            if T[T[a][b]][c] != T[a][T[b][c]]:
                out.append(f"{name}-associative: {L[a]}, {L[b]}, {L[c]}")
    for a, b in itertools.product(els, repeat=2):
        if J[a][M[a][b]] != a:
            out.append(f"absorption-join: {L[a]}, {L[b]}")
        if M[a][J[a][b]] != a:
            out.append(f"absorption-meet: {L[a]}, {L[b]}")
    t = lat.top
    for a in els:
        if J[a][t] != t:
            out.append(f"top-join: {L[a]}")
        if M[a][t] != a:
            out.append(f"top-meet: {L[a]}")
    if lat.bottom is not None:
        e = lat.bottom
        for a in els:
            if J[a][e] != a:
                out.append(f"bottom-join: {L[a]}")
            if M[a][e] != e:
                out.append(f"bottom-meet: {L[a]}")
    return out


def is_distributive(lat: FiniteLattice) -> bool | tuple[Granular, Granular, Granular]:
    """True, or the first triple (a, b, c) with a & (b | c) != (a & b) | (a & c)."""
    J, M = lat.join_table, lat.meet_table
    for a, b, c in itertools.product(lat.elements, repeat=3):
        if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
            return (lat.g(a), lat.g(b), lat.g(c))
    return True


# ---------------------------------------------------------------------------
# builders


def _from_leq(name: str, labels: Sequence[str], le) -> FiniteLattice:
    """Build tables from an order predicate ``le(i, j)`` on indices."""
    n = len(labels)
    els = range(n)

    def extremum(cands, better):
        best = [c for c in cands if all(better(c, d) for d in cands)]
        return best[0] if len(best) == 1 else None

    join_t, meet_t = [], []
    for a in els:
        jr, mr = [], []
        for b in els:
            ub = [c for c in els if le(a, c) and le(b, c)]
            lb = [c for c in els if le(c, a) and le(c, b)]
            j = extremum(ub, le)
            m = extremum(lb, lambda x, y: le(y, x))
            if j is None or m is None:
                raise NotALattice(f"{labels[a]} and {labels[b]} have no join or meet")
            jr.append(j)
            mr.append(m)
        join_t.append(tuple(jr))
        meet_t.append(tuple(mr))
    top = extremum(list(els), lambda x, y: le(y, x))
    bottom = extremum(list(els), le)
    if top is None:
        raise NotALattice("no top element")
    return FiniteLattice(name, tuple(labels), tuple(join_t), tuple(meet_t), top, bottom)


def _set_label(atoms: Sequence[str], mask: int) -> str:
    return "{" + " ".join(a for i, a in enumerate(atoms) if mask >> i & 1) + "}"


def powerset(atoms: Sequence[str] | int) -> PowersetLattice:
    """Subsets of ``atoms`` (or of ``a, b, c, ...`` when given a count)."""
    if isinstance(atoms, int):
        atoms = [chr(ord("a") + i) for i in range(atoms)]
    return PowersetLattice(atoms)


def chain(n: int) -> FiniteLattice:
    if n < 1:
        raise ValueError("chain needs at least one element")
    r = range(n)
    return FiniteLattice(
        f"chain:{n}",
        tuple(str(i) for i in r),
        tuple(tuple(max(a, b) for b in r) for a in r),
        tuple(tuple(min(a, b) for b in r) for a in r),
        top=n - 1,
        bottom=0,
    )


def two_point() -> FiniteLattice:
    lat = chain(2)
    return FiniteLattice("two_point", ("0", "1"), lat.join_table, lat.meet_table, 1, 0)


def product(l1: FiniteLattice, l2: FiniteLattice) -> FiniteLattice:
    """Componentwise product; pair (i, j) gets id ``i * len(l2) + j``."""
    n2 = len(l2)
    pairs = list(itertools.product(l1.elements, l2.elements))

    def idx(i, j):
        return i * n2 + j

    def table(t1, t2):
        return tuple(
            tuple(idx(t1[a][c], t2[b][d]) for c, d in pairs) for a, b in pairs
        )

    bottom = None
    if l1.bottom is not None and l2.bottom is not None:
        bottom = idx(l1.bottom, l2.bottom)
    return FiniteLattice(
        f"({l1.name})x({l2.name})",
        tuple(f"({l1.labels[i]},{l2.labels[j]})" for i, j in pairs),
        table(l1.join_table, l2.join_table),
        table(l1.meet_table, l2.meet_table),
        top=idx(l1.top, l2.top),
        bottom=bottom,
    )


def from_cover_relation(edges: Iterable[tuple[str, str]], name: str = "cover") -> FiniteLattice:
    """Lattice from Hasse edges ``(lower, upper)``; labels ordered by first appearance."""
    labels: list[str] = []
    for e in edges:
        for v in e:
            if v not in labels:
                labels.append(v)
    n = len(labels)
    le = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in edges:
        le[labels.index(lo)][labels.index(hi)] = True
    for k in range(n):  # Warshall closure
        for i in range(n):
            if le[i][k]:
                for j in range(n):
                    if le[k][j]:
                        le[i][j] = True
    for i, j in itertools.combinations(range(n), 2):
        if le[i][j] and le[j][i]:
            raise NotALattice(f"cycle through {labels[i]} and {labels[j]}")
    return _from_leq(name, labels, lambda a, b: le[a][b])


def diamond_m3() -> FiniteLattice:
    return from_cover_relation(
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")], "m3"
    )


def pentagon_n5() -> FiniteLattice:
    # 0 < a < b < 1 and 0 < c < 1; c is incomparable to a and b
    return from_cover_relation(
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")], "n5"
    )


def builtin_lattices() -> list[FiniteLattice]:
    """Every shipped instance: powersets 0..4 atoms, chains 1..6, M3, N5, a product."""
    out = [powerset(k) for k in range(5)]
    out += [chain(n) for n in range(1, 7)]
    out += [two_point(), diamond_m3(), pentagon_n5(), product(chain(2), chain(3))]
    return out


# ---------------------------------------------------------------------------
# fixtures and compact specifiers


def from_json(doc: dict, base: Path | None = None) -> FiniteLattice:
    kind = doc.get("kind")
    if kind == "powerset":
        return powerset(doc["atoms"])
    if kind == "chain":
        return chain(int(doc["n"]))
    if kind == "two_point":
        return two_point()
    if kind == "m3":
        return diamond_m3()
    if kind == "n5":
        return pentagon_n5()
    if kind == "product":
        return product(from_json(doc["left"], base), from_json(doc["right"], base))
    if kind == "cover":
        return from_cover_relation([tuple(e) for e in doc["edges"]], doc.get("name", "cover"))
    if kind == "table":
        lat = FiniteLattice(
            doc.get("name", "table"),
            tuple(doc["elements"]),
            tuple(tuple(r) for r in doc["join"]),
            tuple(tuple(r) for r in doc["meet"]),
            top=doc["top"],
            bottom=doc.get("bottom"),
        )
        problems = validate(lat)
        if problems:
            raise NotALattice("; ".join(problems[:5]))
        return lat
    raise ValueError(f"unknown lattice kind {kind!r}")


def load(path: str | Path) -> FiniteLattice:
    path = Path(path)
    with open(path) as f:
        return from_json(json.load(f), path.parent)


def parse_specifier(spec: str) -> FiniteLattice:
    """``chain:4``, ``powerset:3``, ``powerset:a,b``, ``two_point``, ``m3``, ``n5``, ``file:<path>``."""
    kind, _, arg = spec.partition(":")
    if kind == "chain":
        return chain(int(arg))
    if kind == "powerset":
        return powerset(int(arg) if arg.isdigit() else arg.split(","))
    if kind in ("two_point", "2"):
        return two_point()
    if kind == "m3":
        return diamond_m3()
    if kind == "n5":
        return pentagon_n5()
    if kind == "file":
        return load(arg)
    raise ValueError(f"bad lattice specifier {spec!r}")
