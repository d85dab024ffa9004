"""Mnesor-space contract and the law catalog.

A mnesor space is a monoid ``(M, +, 0)`` acted on (on the right) by a finite
bounded lattice.  Laws are plain data built from small term trees so the
checker can evaluate any of them against any model.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterator

from .lattice import FiniteLattice, Granular

MNESOR = "M"
GRANULAR = "G"


class MnesorSpace(ABC):
    """A carrier with zero, addition and a right action by ``lattice``.

    Subclasses enumerate their carrier up to a size bound so the checker can
    quantify over it.  Elements must be hashable and compare by value.
    """

    name: str
    lattice: FiniteLattice

    @property
    @abstractmethod
    def zero(self) -> Hashable: ...

    @abstractmethod
    def add(self, x, y): ...

    @abstractmethod
    def act(self, x, g: Granular): ...

    @abstractmethod
    def elements(self, bound: int | None = None) -> list:
        """Carrier elements of size <= ``bound`` (all of them for ``None``), in canonical order."""

    @abstractmethod
    def is_total(self, bound: int | None) -> bool:
        """Whether ``elements(bound)`` is the entire carrier."""

    @abstractmethod
    def size(self, x) -> int:
        """Size used to order counterexamples."""

    def render(self, x) -> str:
        return str(x)

    def describe(self) -> str:
        return self.name


def prefix_leq(s: MnesorSpace, x, y) -> bool:
    """x <= y in the prefix order, i.e. x + y = y."""
    return s.add(x, y) == y


def is_anagram(s: MnesorSpace, x, y) -> bool:
    """Each of x, y is a suffix of the other."""
    return s.add(x, y) == x and s.add(y, x) == y


# ---------------------------------------------------------------------------
# terms


class Term:
    sort: str

    def __add__(self, other: Term) -> Term:
        return Add(self, other)

    def __mul__(self, other: Term) -> Term:
        return Act(self, other)

    def __or__(self, other: Term) -> Term:
        return Join(self, other)

    def __and__(self, other: Term) -> Term:
        return Meet(self, other)


@dataclass(frozen=True)
class Var(Term):
    name: str
    sort: str


@dataclass(frozen=True)
class Zero(Term):
    sort = MNESOR


@dataclass(frozen=True)
class Top(Term):
    sort = GRANULAR


@dataclass(frozen=True)
class Bot(Term):
    sort = GRANULAR


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term
    sort = MNESOR


@dataclass(frozen=True)
class Act(Term):
    mnesor: Term
    granular: Term
    sort = MNESOR


@dataclass(frozen=True)
class Join(Term):
    left: Term
    right: Term
    sort = GRANULAR


@dataclass(frozen=True)
class Meet(Term):
    left: Term
    right: Term
    sort = GRANULAR


# formulas


@dataclass(frozen=True)
class Eq:
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class And:
    parts: tuple


@dataclass(frozen=True)
class Exists:
    var: Var
    body: Any


@dataclass(frozen=True)
class Forall:
    var: Var
    body: Any


def eq(lhs: Term, rhs: Term) -> Eq:
    return Eq(lhs, rhs)


def both(*parts) -> And:
    return And(tuple(parts))


@dataclass(frozen=True)
class Law:
    """Universally quantified ``hypothesis => conclusion`` (or just ``conclusion``)."""

    name: str
    tier: str
    mnesor_vars: tuple[Var, ...]
    granular_vars: tuple[Var, ...]
    conclusion: Any
    hypothesis: Any = None
    anchor: str = ""

    @property
    def sorts(self) -> tuple[int, int]:
        return len(self.mnesor_vars), len(self.granular_vars)

    @property
    def variables(self) -> tuple[Var, ...]:
        return self.mnesor_vars + self.granular_vars

    def uses_bottom(self) -> bool:
        return any(isinstance(t, Bot) for t in _walk(self.hypothesis)) or any(
            isinstance(t, Bot) for t in _walk(self.conclusion)
        )

    def text(self) -> str:
        body = show_formula(self.conclusion)
        if self.hypothesis is not None:
            body = f"{show_formula(self.hypothesis)} => {body}"
        return body

    def to_json(self) -> dict:
        doc = {
            "name": self.name,
            "tier": self.tier,
            "mnesor_vars": [v.name for v in self.mnesor_vars],
            "granular_vars": [v.name for v in self.granular_vars],
            "text": self.text(),
            "hypothesis": None if self.hypothesis is None else tree(self.hypothesis),
            "conclusion": tree(self.conclusion),
        }
        return doc


def _walk(node) -> Iterator:
    if node is None:
        return
    yield node
    if isinstance(node, (Add, Join, Meet)):
        yield from _walk(node.left)
        yield from _walk(node.right)
    elif isinstance(node, Act):
        yield from _walk(node.mnesor)
        yield from _walk(node.granular)
    elif isinstance(node, Eq):
        yield from _walk(node.lhs)
        yield from _walk(node.rhs)
    elif isinstance(node, And):
        for p in node.parts:
            yield from _walk(p)
    elif isinstance(node, (Exists, Forall)):
        yield node.var
        yield from _walk(node.body)


def well_sorted(node) -> bool:
    for t in _walk(node):
        if isinstance(t, Add) and not (t.left.sort == t.right.sort == MNESOR):
            return False
        if isinstance(t, (Join, Meet)) and not (t.left.sort == t.right.sort == GRANULAR):
            return False
        if isinstance(t, Act) and (t.mnesor.sort, t.granular.sort) != (MNESOR, GRANULAR):
            return False
        if isinstance(t, Eq) and t.lhs.sort != t.rhs.sort:
            return False
    return True


_TREE_TAGS = {Add: "add", Act: "act", Join: "join", Meet: "meet"}


def tree(node) -> list:
    """Nested-list rendering of a term or formula, for JSON export."""
    if isinstance(node, Var):
        return ["var", node.name, node.sort]
    if isinstance(node, Zero):
        return ["zero"]
    if isinstance(node, Top):
        return ["top"]
    if isinstance(node, Bot):
        return ["bot"]
    if isinstance(node, Act):
        return ["act", tree(node.mnesor), tree(node.granular)]
    if type(node) in _TREE_TAGS:
        return [_TREE_TAGS[type(node)], tree(node.left), tree(node.right)]
    if isinstance(node, Eq):
        return ["eq", tree(node.lhs), tree(node.rhs)]
    if isinstance(node, And):
        return ["and"] + [tree(p) for p in node.parts]
    if isinstance(node, Exists):
        return ["exists", node.var.name, node.var.sort, tree(node.body)]
    if isinstance(node, Forall):
        return ["forall", node.var.name, node.var.sort, tree(node.body)]
    raise TypeError(node)


def show_term(t: Term, ctx: str = "") -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Zero):
        return "0"
    if isinstance(t, Top):
        return "top"
    if isinstance(t, Bot):
        return "bot"
    if isinstance(t, Add):
        s = f"{show_term(t.left, '+')} + {show_term(t.right, '+r')}"
        return f"({s})" if ctx in ("*", "+r") else s
    if isinstance(t, Act):
        return f"{show_term(t.mnesor, '*')} * {show_term(t.granular, 'g')}"
    if isinstance(t, Join):
        s = f"{show_term(t.left, '|')} | {show_term(t.right, '|r')}"
        return f"({s})" if ctx in ("g", "&", "|r") else s
    if isinstance(t, Meet):
        s = f"{show_term(t.left, '&')} & {show_term(t.right, '&r')}"
        return f"({s})" if ctx in ("g", "&r") else s
    raise TypeError(t)


def show_formula(f) -> str:
    if isinstance(f, Eq):
        return f"{show_term(f.lhs)} = {show_term(f.rhs)}"
    if isinstance(f, And):
        return " and ".join(show_formula(p) for p in f.parts)
    if isinstance(f, Exists):
        return f"(exists {f.var.name}: {show_formula(f.body)})"
    if isinstance(f, Forall):
        return f"(forall {f.var.name}: {show_formula(f.body)})"
    raise TypeError(f)


# ---------------------------------------------------------------------------
# catalog

x, y, z, a, t, e = (Var(n, MNESOR) for n in "xyzate")
lam, mu, alpha = (Var(n, GRANULAR) for n in ("lam", "mu", "alpha"))
O, TOP, BOT = Zero(), Top(), Bot()

AXIOM, THEOREM = "axiom", "theorem"


def _law(name, tier, mvars, gvars, conclusion, hypothesis=None, anchor=""):
    return Law(name, tier, tuple(mvars), tuple(gvars), conclusion, hypothesis, anchor)


_CATALOG: tuple[Law, ...] = (
    _law("A-MON-ID", AXIOM, [x], [], both(eq(O + x, x), eq(x + O, x)), anchor="identity element 0"),
    _law("A-MON-ASSOC", AXIOM, [x, y, z], [], eq((x + y) + z, x + (y + z)), anchor="monoid (M, +)"),
    _law("A-UNITAL", AXIOM, [x], [], eq(x * TOP, x), anchor="unital property"),
    _law("A-MDIST", AXIOM, [x, y], [lam], eq((x + y) * lam, x * lam + y * lam), anchor="mnesor distributivity"),
    _law("A-ASSOC-ACT", AXIOM, [x], [lam, mu], eq((x * lam) * mu, x * (lam & mu)), anchor="associativity of the action"),
    _law("A-GDIST", AXIOM, [x], [lam, mu], eq(x * lam + x * mu, x * (lam | mu)), anchor="granular distributivity"),
    _law("A-ABSORB", AXIOM, [x, y], [], Exists(alpha, eq((x + y) * alpha, x)), anchor="absorption property"),
    _law("T-IDEM", THEOREM, [x], [], eq(x + x, x), anchor="idempotence"),
    _law("T-PRIORITY", THEOREM, [x, y], [], eq(x + y + x, x + y), anchor="priority"),
    _law("T-PFX-I-II", THEOREM, [x, y], [], Exists(lam, eq(x * lam, y)), Exists(z, eq(y + z, x)), anchor="prefix (i) => (ii)"),
    _law("T-PFX-II-III", THEOREM, [x, y], [], eq(y + x, x), Exists(lam, eq(x * lam, y)), anchor="prefix (ii) => (iii)"),
    _law("T-PFX-III-I", THEOREM, [x, y], [], Exists(z, eq(y + z, x)), eq(y + x, x), anchor="prefix (iii) => (i)"),
    _law("T-ORD-REFL", THEOREM, [x], [], eq(x + x, x), anchor="prefix order: reflexive"),
    _law("T-ORD-TRANS", THEOREM, [x, y, z], [], eq(x + z, z), both(eq(x + y, y), eq(y + z, z)), anchor="prefix order: transitive"),
    _law("T-ORD-ANTISYM", THEOREM, [x, y], [], eq(x, y), both(eq(x + y, y), eq(y + x, x)), anchor="prefix order: antisymmetric"),
    _law("T-COMPAT-ADD", THEOREM, [x, y, a], [], eq((x + a) + (y + a), y + a), eq(x + y, y), anchor="order compatible with addition"),
    _law("T-MONO-M", THEOREM, [x, y], [lam], eq(x * lam + y * lam, y * lam), eq(x + y, y), anchor="action monotone in the mnesor"),
    _law("T-MONO-G", THEOREM, [x], [lam, mu], eq(x * lam + x * mu, x * mu), eq(lam | mu, mu), anchor="action monotone in the granular"),
    _law("T-POS", THEOREM, [x], [], eq(O + x, x), anchor="positivity"),
    _law("T-ZSF", THEOREM, [x, y], [], both(eq(x, O), eq(y, O)), eq(x + y, O), anchor="zerosumfree"),
    _law("T-SFX-II-III", THEOREM, [a, y], [lam], eq(a + y, a), eq(a * lam + y, a), anchor="suffix (ii) => (iii)"),
    _law("T-SFX-III-II", THEOREM, [a, y], [], Exists(lam, eq(a * lam + y, a)), eq(a + y, a), anchor="suffix (iii) => (ii)"),
    _law("T-PFX-IS-SFX", THEOREM, [a, z], [], eq(a + z, a), Exists(lam, eq(a * lam, z)), anchor="prefix is suffix"),
    _law("T-ANAGRAM", THEOREM, [z, t], [], both(eq((z + t) + (t + z), z + t), eq((t + z) + (z + t), t + z)), anchor="anagrams"),
    _law("T-WIT-STAB", THEOREM, [x, y], [alpha], eq(x * alpha, x), eq((x + y) * alpha, x), anchor="absorption witnesses stabilize"),
    _law("T-STAB-CLOSE", THEOREM, [x], [lam, mu], both(eq(x * (lam | mu), x), eq(x * (lam & mu), x)), both(eq(x * lam, x), eq(x * mu, x)), anchor="stabilizer sublattice"),
    _law("T-EMPTY-FWD", THEOREM, [], [lam], eq(O * lam, O), anchor="empty mnesor (forward)"),
    _law("T-EMPTY-BWD", THEOREM, [e], [], eq(e, O), Forall(lam, eq(e * lam, e)), anchor="empty mnesor (backward)"),
    _law("T-BOT", THEOREM, [x], [], eq(x * BOT, O), anchor="bottom annihilates"),
    _law("T-ANNIH-CLOSE", THEOREM, [x], [lam, mu], both(eq(x * (lam | mu), O), eq(x * (lam & mu), O)), both(eq(x * lam, O), eq(x * mu, O)), anchor="annihilator sublattice"),
)


class LawCatalog:
    """Ordered, name-keyed, immutable collection of laws."""

    def __init__(self, laws: tuple[Law, ...]):
        self._laws = laws
        self._by_name = {law.name: law for law in laws}
        if len(self._by_name) != len(laws):
            raise ValueError("law names must be unique")

    def __len__(self):
        return len(self._laws)

    def __iter__(self):
        return iter(self._laws)

    def __getitem__(self, name: str) -> Law:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    @property
    def names(self) -> list[str]:
        return [law.name for law in self._laws]

    def to_json(self) -> dict:
        return {"laws": [law.to_json() for law in self._laws]}


_catalog = LawCatalog(_CATALOG)


def catalog() -> LawCatalog:
    return _catalog
