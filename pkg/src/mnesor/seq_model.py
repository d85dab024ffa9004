"""Column tuples: duplicate-free ordered tuples filtered by subsets.

Addition concatenates and drops later duplicates (keep-first); a granular
is a subset of the universe and acts by keeping the entries it contains,
in their original order.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterator, Sequence

from .algebra import MnesorSpace
from .lattice import DomainMismatch, FiniteLattice, Granular, powerset


@dataclass(frozen=True)
class Universe:
    atoms: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.atoms)) != len(self.atoms):
            raise ValueError("universe atoms must be distinct")

    def __len__(self):
        return len(self.atoms)

    def index(self, name: str) -> int:
        try:
            return self.atoms.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not in the universe") from None

    def tuple(self, *names: str) -> SeqMnesor:
        return SeqMnesor(self, tuple(self.index(n) for n in names))


@dataclass(frozen=True)
class SeqMnesor:
    universe: Universe
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("column tuple repeats an entry")
        if any(not 0 <= i < len(self.universe) for i in self.entries):
            raise ValueError("entry outside the universe")

    @property
    def names(self) -> list[str]:
        return [self.universe.atoms[i] for i in self.entries]

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "[" + " ".join(self.names) + "]"

    def __repr__(self):
        return f"SeqMnesor{self}"


def _check(u: Universe, v: Universe):
    if u is not v and u != v:
        raise DomainMismatch("column tuples over different universes")


def add(x: SeqMnesor, y: SeqMnesor) -> SeqMnesor:
    _check(x.universe, y.universe)
    seen = set(x.entries)
    return SeqMnesor(x.universe, x.entries + tuple(i for i in y.entries if i not in seen))


def act(x: SeqMnesor, mask: int) -> SeqMnesor:
    """Keep the entries of ``x`` whose bit is set in ``mask``."""
    return SeqMnesor(x.universe, tuple(i for i in x.entries if mask >> i & 1))


def support(x: SeqMnesor) -> int:
    """Bitmask of the atoms occurring in ``x``."""
    m = 0
    for i in x.entries:
        m |= 1 << i
    return m


def enumerate_tuples(u: Universe, max_len: int | None = None) -> Iterator[SeqMnesor]:
    """Every duplicate-free tuple of length <= max_len: by length, then lexicographic by atom index."""
    n = len(u)
    max_len = n if max_len is None else max_len
    if max_len > n:
        raise ValueError("max_len exceeds the universe size")
    for k in range(max_len + 1):
        for p in itertools.permutations(range(n), k):
            yield SeqMnesor(u, p)


class SeqSpace(MnesorSpace):
    """Column tuples over ``universe`` acted on by the powerset of the universe."""

    def __init__(self, universe: Universe | Sequence[str], named: dict[str, int] | None = None):
        if not isinstance(universe, Universe):
            universe = Universe(tuple(universe))
        self.universe = universe
        self.lattice: FiniteLattice = powerset(universe.atoms)
        self.named = dict(named or {})
        self.name = "seq"
        self._zero = SeqMnesor(universe, ())
        self._cache: dict[int, list[SeqMnesor]] = {}

    def __getstate__(self):
        state = dict(self.__dict__)
        state["_cache"] = {}
        return state

    @property
    def zero(self) -> SeqMnesor:
        return self._zero

    def add(self, x: SeqMnesor, y: SeqMnesor) -> SeqMnesor:
        _check(self.universe, x.universe)
        return add(x, y)

    def act(self, x: SeqMnesor, g: Granular) -> SeqMnesor:
        if g.lattice is not self.lattice:
            raise DomainMismatch("granular is not a subset of this universe")
        _check(self.universe, x.universe)
        return act(x, g.id)

    def support(self, x: SeqMnesor) -> Granular:
        return self.lattice.g(support(x))

    def subset(self, *names: str) -> Granular:
        m = 0
        for n in names:
            m |= 1 << self.universe.index(n)
        return self.lattice.g(m)

    def granular(self, name: str) -> Granular:
        """A named granular such as ``EU``; ``top``/``bot`` are always available."""
        if name == "top":
            return self.lattice.top_g
        if name == "bot":
            return self.lattice.bottom_g
        return self.lattice.g(self.named[name])

    def tuple(self, *names: str) -> SeqMnesor:
        return self.universe.tuple(*names)

    def elements(self, bound: int | None = None) -> list[SeqMnesor]:
        n = len(self.universe) if bound is None else min(bound, len(self.universe))
        if n not in self._cache:
            self._cache[n] = list(enumerate_tuples(self.universe, n))
        return self._cache[n]

    def is_total(self, bound: int | None) -> bool:
        return bound is None or bound >= len(self.universe)

    def size(self, x: SeqMnesor) -> int:
        return len(x)

    def render(self, x) -> str:
        return str(x)

    def render_granular(self, g: Granular) -> str:
        names = [k for k, v in sorted(self.named.items()) if v == g.id]
        return g.label + (f" ({', '.join(names)})" if names else "")

    def describe(self) -> str:
        return f"seq[{' '.join(self.universe.atoms)}]"

    def restrict(self, k: int) -> SeqSpace:
        """Same model over the first ``k`` atoms; named granulars are intersected."""
        sub = Universe(self.universe.atoms[:k])
        mask = (1 << k) - 1
        return SeqSpace(sub, {n: m & mask for n, m in self.named.items()})


# ---------------------------------------------------------------------------
# fixtures


def from_fixture(doc: dict) -> SeqSpace:
    u = Universe(tuple(doc["universe"]))
    named = {}
    for name, members in doc.get("granulars", {}).items():
        m = 0
        for atom in members:
            m |= 1 << u.index(atom)
        named[name] = m
    return SeqSpace(u, named)


def load_fixture(path: str | Path) -> SeqSpace:
    with open(path) as f:
        return from_fixture(json.load(f))


def geo() -> SeqSpace:
    """The shipped country fixture with EU, NATO, IOC and UN."""
    text = resources.files("mnesor").joinpath("data/geo.json").read_text()
    return from_fixture(json.loads(text))


def geo_path() -> Path:
    return Path(str(resources.files("mnesor").joinpath("data/geo.json")))
