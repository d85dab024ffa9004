"""Mnesor spaces: idempotent monoids acted on by finite lattices."""
from .algebra import MnesorSpace, catalog, is_anagram, prefix_leq
from .checker import CheckBounds, check_all, check_law, minimize
from .lattice import FiniteLattice, Granular
from .lattice_model import SelfActionSpace, make_self_action
from .seq_model import SeqMnesor, SeqSpace, Universe, geo

__all__ = [
    "CheckBounds",
    "FiniteLattice",
    "Granular",
    "MnesorSpace",
    "SelfActionSpace",
    "SeqMnesor",
    "SeqSpace",
    "Universe",
    "catalog",
    "check_all",
    "check_law",
    "geo",
    "is_anagram",
    "make_self_action",
    "minimize",
    "prefix_leq",
]
