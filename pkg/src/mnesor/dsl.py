"""A small two-sorted expression language for mnesors and granulars.

Grammar::

    statement := [ name "=" ] ( expr | gexpr )
    expr      := term { "+" term }
    term      := atom { "*" gfactor }
    atom      := "[" name* "]" | "0" | name | "(" expr ")"
    gexpr     := gfactor { "|" gfactor }
    gfactor   := gatom { "&" gatom }
    gatom     := "{" name* "}" | "top" | "bot" | name | "(" gexpr ")"

``*`` binds tighter than ``+`` and ``&`` tighter than ``|``; all four are
left-associative.  The action keeps the granular on the right.  ``#``
starts a comment that runs to the end of the line.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

from .algebra import MnesorSpace
from .lattice import Granular
from .lattice_model import SelfActionSpace
from .seq_model import SeqSpace


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: frozenset[str] = frozenset()):
        self.offset = offset
        self.expected = frozenset(expected)
        self.message = message
        exp = ", ".join(sorted(self.expected))
        super().__init__(f"{message} at offset {offset}" + (f" (expected {exp})" if exp else ""))


class EvalError(ValueError):
    pass


# ---------------------------------------------------------------------------
# expression trees


@dataclass(frozen=True)
class Tuple:
    names: tuple[str, ...]


@dataclass(frozen=True)
class ZeroLit:
    pass


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Sum:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Action:
    mnesor: "Expr"
    granular: "GExpr"


@dataclass(frozen=True)
class SetLit:
    names: tuple[str, ...]


@dataclass(frozen=True)
class TopLit:
    pass


@dataclass(frozen=True)
class BotLit:
    pass


@dataclass(frozen=True)
class JoinG:
    left: "GExpr"
    right: "GExpr"


@dataclass(frozen=True)
class MeetG:
    left: "GExpr"
    right: "GExpr"


@dataclass(frozen=True)
class Assign:
    name: str
    value: "Expr | GExpr"


Expr = Union[Tuple, ZeroLit, Name, Sum, Action]
GExpr = Union[SetLit, TopLit, BotLit, Name, JoinG, MeetG]

# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(
    r"(?P<ws>\s+|\#[^\n]*)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<zero>0(?![0-9A-Za-z_]))"
    r"|(?P<sym>[\[\]{}()+*|&=])"
)
KEYWORDS = {"top", "bot"}
NAME = "name"
EOF = "end of input"
INVALID = "invalid"


@dataclass(frozen=True)
class Token:
    kind: str  # "name", "0", a symbol, "top", "bot", or EOF
    text: str
    offset: int  # byte offset


def tokenize(src: str) -> list[Token]:
    toks = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        boff = len(src[:pos].encode())
        if not m:
            # the parser reports it, together with what it expected here
            toks.append(Token(INVALID, src[pos], boff))
            pos += 1
            continue
        if m.lastgroup == "name":
            text = m.group()
            toks.append(Token(text if text in KEYWORDS else NAME, text, boff))
        elif m.lastgroup == "zero":
            toks.append(Token("0", "0", boff))
        elif m.lastgroup == "sym":
            toks.append(Token(m.group(), m.group(), boff))
        pos = m.end()
    toks.append(Token(EOF, "", len(src.encode())))
    return toks


# ---------------------------------------------------------------------------
# parser

_ATOM_START = frozenset({"[", "0", NAME, "("})
_GATOM_START = frozenset({"{", "top", "bot", NAME, "("})
_AFTER_EXPR = frozenset({"+", "*", EOF})
_AFTER_GEXPR = frozenset({"|", "&", EOF})


class _Parser:
    def __init__(self, src: str):
        self.toks = tokenize(src)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def take(self, kind: str) -> Token:
        if self.tok.kind != kind:
            self.fail({kind})
        t = self.tok
        self.i += 1
        return t

    def fail(self, expected, message=None):
        t = self.tok
        if t.kind == INVALID:
            message = f"unknown token {t.text!r}"
        found = "end of input" if t.kind == EOF else repr(t.text)
        raise ParseError(message or f"unexpected {found}", t.offset, frozenset(expected))

    def names_until(self, close: str) -> tuple[str, ...]:
        names = []
        while self.tok.kind == NAME:
            names.append(self.take(NAME).text)
        if self.tok.kind != close:
            self.fail({NAME, close})
        self.i += 1
        return tuple(names)

    # mnesor sort
    def expr(self) -> Expr:
        e = self.term()
        while self.tok.kind == "+":
            self.i += 1
            e = Sum(e, self.term())
        return e

    def term(self) -> Expr:
        e = self.atom()
        while self.tok.kind == "*":
            self.i += 1
            e = Action(e, self.gfactor())
        self.guard_mnesor_follow()
        return e

    def guard_mnesor_follow(self):
        if self.tok.kind in ("|", "&"):
            self.fail({"+", "*"}, f"sort error: {self.tok.text!r} needs granular operands, found a mnesor")

    def atom(self) -> Expr:
        k = self.tok.kind
        if k == "[":
            self.i += 1
            return Tuple(self.names_until("]"))
        if k == "0":
            self.i += 1
            return ZeroLit()
        if k == NAME:
            return Name(self.take(NAME).text)
        if k == "(":
            self.i += 1
            e = self.expr()
            if self.tok.kind != ")":
                self.fail({")", "+", "*"})
            self.i += 1
            return e
        if k in ("{", "top", "bot"):
            self.fail(_ATOM_START, "sort error: granular where a mnesor is expected")
        self.fail(_ATOM_START)

    # granular sort
    def gexpr(self) -> GExpr:
        g = self.gfactor()
        while self.tok.kind == "|":
            self.i += 1
            g = JoinG(g, self.gfactor())
        return g

    def gfactor(self) -> GExpr:
        g = self.gatom()
        while self.tok.kind == "&":
            self.i += 1
            g = MeetG(g, self.gatom())
        return g

    def gatom(self) -> GExpr:
        k = self.tok.kind
        if k == "{":
            self.i += 1
            return SetLit(self.names_until("}"))
        if k == "top":
            self.i += 1
            return TopLit()
        if k == "bot":
            self.i += 1
            return BotLit()
        if k == NAME:
            return Name(self.take(NAME).text)
        if k == "(":
            self.i += 1
            g = self.gexpr()
            if self.tok.kind != ")":
                self.fail({")", "|", "&"})
            self.i += 1
            return g
        if k in ("[", "0"):
            self.fail(_GATOM_START, "sort error: mnesor where a granular is expected")
        self.fail(_GATOM_START)

    def top_gexpr(self) -> GExpr:
        g = self.gexpr()
        if self.tok.kind in ("+", "*"):
            self.fail({"|", "&", EOF}, f"sort error: {self.tok.text!r} needs a mnesor on the left, found a granular")
        return g

    def end(self, expected):
        if self.tok.kind != EOF:
            self.fail(expected)


def _granular_start(p: _Parser) -> bool:
    """Decide the sort of a top-level expression from its leading tokens."""
    for k in range(p.i, len(p.toks)):
        t = p.toks[k]
        if t.kind == "(":
            continue
        if t.kind in ("{", "top", "bot"):
            return True
        if t.kind in ("[", "0"):
            return False
        if t.kind == NAME:
            return p.toks[k + 1].kind in ("|", "&")
        return False
    return False


def parse(src: str):
    """Parse one statement: an expression of either sort, or ``name = expression``."""
    p = _Parser(src)
    target = None
    if p.tok.kind == NAME and p.peek().kind == "=":
        target = p.take(NAME).text
        p.take("=")
    if p.tok.kind == EOF:
        p.fail(_ATOM_START | _GATOM_START)
    if _granular_start(p):
        e = p.top_gexpr()
        p.end(_AFTER_GEXPR)
    else:
        e = p.expr()
        p.end(_AFTER_EXPR)
    return Assign(target, e) if target else e


def parse_expr(src: str) -> Expr:
    """Parse a mnesor-sorted expression only."""
    p = _Parser(src)
    e = p.expr()
    p.end(_AFTER_EXPR)
    return e


def parse_gexpr(src: str) -> GExpr:
    p = _Parser(src)
    g = p.top_gexpr()
    p.end(_AFTER_GEXPR)
    return g


# ---------------------------------------------------------------------------
# printer

_GRANULAR_NODES = (SetLit, TopLit, BotLit, JoinG, MeetG)


def show(e) -> str:
    """Canonical text with the fewest parentheses the grammar allows."""
    if isinstance(e, Assign):
        return f"{e.name} = {show(e.value)}"
    if isinstance(e, Tuple):
        return "[" + " ".join(e.names) + "]"
    if isinstance(e, SetLit):
        return "{" + " ".join(e.names) + "}"
    if isinstance(e, ZeroLit):
        return "0"
    if isinstance(e, TopLit):
        return "top"
    if isinstance(e, BotLit):
        return "bot"
    if isinstance(e, Name):
        return e.id
    if isinstance(e, Sum):
        right = show(e.right)
        if isinstance(e.right, Sum):
            right = f"({right})"
        return f"{show(e.left)} + {right}"
    if isinstance(e, Action):
        left = show(e.mnesor)
        if isinstance(e.mnesor, Sum):
            left = f"({left})"
        right = show(e.granular)
        if isinstance(e.granular, JoinG):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(e, JoinG):
        right = show(e.right)
        if isinstance(e.right, JoinG):
            right = f"({right})"
        return f"{show(e.left)} | {right}"
    if isinstance(e, MeetG):
        left, right = show(e.left), show(e.right)
        if isinstance(e.left, JoinG):
            left = f"({left})"
        if isinstance(e.right, (JoinG, MeetG)):
            right = f"({right})"
        return f"{left} & {right}"
    raise TypeError(e)


# ---------------------------------------------------------------------------
# evaluation


@dataclass
class Environment:
    """Two namespaces (mnesors, granulars) over one backing model."""

    space: MnesorSpace
    mnesors: dict[str, object] = field(default_factory=dict)
    granulars: dict[str, Granular] = field(default_factory=dict)

    @classmethod
    def for_space(cls, space: MnesorSpace) -> Environment:
        env = cls(space)
        if isinstance(space, SeqSpace):
            for name in sorted(space.named):
                env.granulars[name] = space.granular(name)
        elif isinstance(space, SelfActionSpace):
            lat = space.lattice
            for i in lat.elements:
                label = lat.label(i)
                if label.isidentifier() and label not in KEYWORDS:
                    env.granulars[label] = lat.g(i)
                    env.mnesors[label] = i
        return env

    def bind(self, name: str, value):
        if isinstance(value, Granular):
            self.mnesors.pop(name, None)
            self.granulars[name] = value
        else:
            self.granulars.pop(name, None)
            self.mnesors[name] = value

    def tuple_literal(self, names):
        s = self.space
        try:
            if isinstance(s, SeqSpace):
                return s.tuple(*names)
            if isinstance(s, SelfActionSpace):
                v = s.zero
                for n in names:
                    v = s.add(v, s.lattice.index(n))
                return v
        except (KeyError, ValueError) as exc:
            raise EvalError(f"bad tuple literal [{' '.join(names)}]: {exc}") from None
        raise EvalError(f"tuple literals are not supported by model {s.describe()}")

    def set_literal(self, names) -> Granular:
        s = self.space
        try:
            if isinstance(s, SeqSpace):
                return s.subset(*names)
            lat = s.lattice
            v = lat.bottom_g
            if v is None:
                raise EvalError("set literals need a lattice with a bottom")
            for n in names:
                v = v | lat[n]
            return v
        except KeyError as exc:
            raise EvalError(f"unknown atom {exc} in {{{' '.join(names)}}}") from None


def _mnesor(e, env: Environment):
    s = env.space
    if isinstance(e, Tuple):
        return env.tuple_literal(e.names)
    if isinstance(e, ZeroLit):
        return s.zero
    if isinstance(e, Name):
        if e.id in env.mnesors:
            return env.mnesors[e.id]
        if e.id in env.granulars:
            raise EvalError(f"{e.id} is a granular, not a mnesor")
        raise EvalError(f"unbound name {e.id}")
    if isinstance(e, Sum):
        return s.add(_mnesor(e.left, env), _mnesor(e.right, env))
    if isinstance(e, Action):
        return s.act(_mnesor(e.mnesor, env), _granular(e.granular, env))
    raise EvalError(f"expected a mnesor expression, got {show(e)}")


def _granular(g, env: Environment) -> Granular:
    lat = env.space.lattice
    if isinstance(g, SetLit):
        return env.set_literal(g.names)
    if isinstance(g, TopLit):
        return lat.top_g
    if isinstance(g, BotLit):
        if lat.bottom is None:
            raise EvalError("bot used with a lattice that has no bottom")
        return lat.bottom_g
    if isinstance(g, Name):
        if g.id in env.granulars:
            return env.granulars[g.id]
        if g.id in env.mnesors:
            raise EvalError(f"{g.id} is a mnesor, not a granular")
        raise EvalError(f"unbound name {g.id}")
    if isinstance(g, JoinG):
        return _granular(g.left, env) | _granular(g.right, env)
    if isinstance(g, MeetG):
        return _granular(g.left, env) & _granular(g.right, env)
    raise EvalError(f"expected a granular expression, got {show(g)}")


def evaluate(e, env: Environment):
    """Value of an expression or statement; assignments also update ``env``."""
    if isinstance(e, Assign):
        v = evaluate(e.value, env)
        env.bind(e.name, v)
        return v
    if isinstance(e, Name):
        if e.id in env.mnesors:
            return env.mnesors[e.id]
        return _granular(e, env)
    if isinstance(e, _GRANULAR_NODES):
        return _granular(e, env)
    return _mnesor(e, env)


def render(value, env: Environment) -> str:
    if isinstance(value, Granular):
        return value.label
    return env.space.render(value)


def run(src: str, env: Environment) -> str:
    """Parse, evaluate and render one statement."""
    return render(evaluate(parse(src), env), env)


def run_script(text: str, env: Environment) -> list[str]:
    """One statement per line; blank lines and ``#`` comments are skipped."""
    out = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.split("#", 1)[0].strip():
            continue
        try:
            out.append(run(line, env))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.message}", exc.offset, exc.expected) from None
    return out


def repl(env: Environment, prompt: str = "mnesor> ", input=input, output=print):
    """Read-eval-print loop; ``:q`` or end of input leaves."""
    while True:
        try:
            line = input(prompt)
        except EOFError:
            break
        if line.strip() in (":q", ":quit"):
            break
        if not line.split("#", 1)[0].strip():
            continue
        try:
            output(run(line, env))
        except (ParseError, EvalError) as exc:
            output(f"error: {exc}")
