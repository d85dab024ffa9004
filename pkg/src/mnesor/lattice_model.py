"""The lattice acting on itself: add = join, act = meet, zero = bottom."""
from __future__ import annotations

from .algebra import MnesorSpace
from .lattice import DomainMismatch, FiniteLattice, Granular


class MissingBottom(ValueError):
    pass


class SelfActionSpace(MnesorSpace):
    """Carrier elements are lattice ids; rendering uses the lattice labels."""

    def __init__(self, lattice: FiniteLattice):
        if lattice.bottom is None:
            raise MissingBottom(f"{lattice.name} has no bottom element to serve as zero")
        self.lattice = lattice
        self.name = "self"
        self._height = _heights(lattice)

    @property
    def zero(self) -> int:
        return self.lattice.bottom

    def add(self, x: int, y: int) -> int:
        return self.lattice.join_id(x, y)

    def act(self, x: int, g: Granular) -> int:
        if g.lattice is not self.lattice:
            raise DomainMismatch("granular from a different lattice")
        return self.lattice.meet_id(x, g.id)

    def elements(self, bound: int | None = None) -> list[int]:
        return list(self.lattice.elements)

    def is_total(self, bound: int | None) -> bool:
        return True

    def size(self, x: int) -> int:
        # length of the longest chain from bottom up to x
        return self._height[x]

    def render(self, x: int) -> str:
        return self.lattice.label(x)

    def describe(self) -> str:
        return f"self[{self.lattice.name}]"


def _heights(lat: FiniteLattice) -> list[int]:
    els = list(lat.elements)
    below = {
        b: [a for a in els if a != b and lat.leq_ids(a, b)] for b in els
    }
    h: dict[int, int] = {}

    def height(b):
        if b not in h:
            h[b] = max((height(a) + 1 for a in below[b]), default=0)
        return h[b]

    return [height(b) for b in els]


def make_self_action(lattice: FiniteLattice) -> SelfActionSpace:
    return SelfActionSpace(lattice)
