"""Exhaustive bounded evaluation of catalog laws against a model.

Universal variables range over the enumerated carrier (mnesors) and the
whole lattice (granulars).  A failing law reports its smallest violating
binding in shortlex order: first the summed ``size`` of the bound mnesors,
then the tuple of enumeration indices in the law's variable order
(mnesor variables first, then granular variables).
"""
from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from .algebra import (
    MNESOR,
    Act,
    Add,
    And,
    Bot,
    Eq,
    Exists,
    Forall,
    Join,
    Law,
    Meet,
    MnesorSpace,
    Top,
    Var,
    Zero,
    catalog,
)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


class UnknownLaw(KeyError):
    pass


class NotAViolation(ValueError):
    """minimize() was handed a binding that satisfies the law."""


@dataclass(frozen=True)
class CheckBounds:
    """``max_mnesor_enumeration`` caps the size of enumerated mnesors; None means the whole carrier."""

    max_mnesor_enumeration: int | None = None

    def __post_init__(self):
        m = self.max_mnesor_enumeration
        if m is not None and m < 1:
            raise ValueError("bounds must be positive")

    def to_json(self, s: MnesorSpace) -> dict:
        return {
            "max_mnesor_enumeration": self.max_mnesor_enumeration,
            "total": s.is_total(self.max_mnesor_enumeration),
        }


@dataclass(frozen=True)
class LawResult:
    law: str
    status: str
    instances: int = 0
    vacuous: int = 0
    counterexample: dict[str, Any] | None = None
    rendered: dict[str, str] | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        doc: dict[str, Any] = {
            "name": self.law,
            "status": self.status,
            "instances": self.instances,
            "vacuous": self.vacuous,
            "counterexample": self.rendered,
        }
        if self.reason:
            doc["reason"] = self.reason
        return doc


@dataclass(frozen=True)
class ComplianceReport:
    model: str
    lattice: str
    bounds: dict
    results: tuple[LawResult, ...] = field(default_factory=tuple)

    def __getitem__(self, name: str) -> LawResult:
        for r in self.results:
            if r.law == name:
                return r
        raise KeyError(name)

    def statuses(self) -> dict[str, str]:
        return {r.law: r.status for r in self.results}

    @property
    def failed(self) -> list[LawResult]:
        return [r for r in self.results if r.status == FAIL]

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "lattice": self.lattice,
            "bounds": self.bounds,
            "laws": [r.to_json() for r in self.results],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# evaluation


class _Evaluator:
    def __init__(self, s: MnesorSpace, carrier: list):
        self.s = s
        self.carrier = carrier
        self.granulars = s.lattice.granulars()
        self.top = s.lattice.top_g
        self.bot = s.lattice.bottom_g

    def term(self, t, env):
        tp = type(t)
        if tp is Var:
            return env[t.name]
        if tp is Add:
            return self.s.add(self.term(t.left, env), self.term(t.right, env))
        if tp is Act:
            return self.s.act(self.term(t.mnesor, env), self.term(t.granular, env))
        if tp is Join:
            return self.term(t.left, env) | self.term(t.right, env)
        if tp is Meet:
            return self.term(t.left, env) & self.term(t.right, env)
        if tp is Zero:
            return self.s.zero
        if tp is Top:
            return self.top
        if tp is Bot:
            if self.bot is None:
                raise ValueError("lattice has no bottom")
            return self.bot
        raise TypeError(t)

    def holds(self, f, env) -> bool:
        tp = type(f)
        if tp is Eq:
            return self.term(f.lhs, env) == self.term(f.rhs, env)
        if tp is And:
            return all(self.holds(p, env) for p in f.parts)
        if tp is Exists or tp is Forall:
            rng = self.carrier if f.var.sort == MNESOR else self.granulars
            test = any if tp is Exists else all
            name = f.var.name
            return test(self.holds(f.body, {**env, name: v}) for v in rng)
        raise TypeError(f)

    def verdict(self, law: Law, env) -> bool | None:
        """True/False for the law at ``env``; None when the hypothesis is not met."""
        if law.hypothesis is not None and not self.holds(law.hypothesis, env):
            return None
        return self.holds(law.conclusion, env)


def _lookup(law: Law | str) -> Law:
    if isinstance(law, Law):
        return law
    try:
        return catalog()[law]
    except KeyError:
        raise UnknownLaw(law) from None


def _key(s: MnesorSpace, law: Law, idx: tuple[int, ...], carrier: list) -> tuple:
    k = len(law.mnesor_vars)
    return (sum(s.size(carrier[i]) for i in idx[:k]), idx)


def _env(law: Law, idx, carrier, granulars) -> dict:
    k = len(law.mnesor_vars)
    env = {v.name: carrier[i] for v, i in zip(law.mnesor_vars, idx[:k])}
    env.update({v.name: granulars[i] for v, i in zip(law.granular_vars, idx[k:])})
    return env


def _scan(s: MnesorSpace, law: Law, bound: int | None):
    """Return (instances, vacuous, smallest violating index tuple or None)."""
    carrier = s.elements(bound)
    ev = _Evaluator(s, carrier)
    ranges = [range(len(carrier))] * len(law.mnesor_vars)
    ranges += [range(len(ev.granulars))] * len(law.granular_vars)
    instances = vacuous = 0
    best = best_key = None
    for idx in itertools.product(*ranges):
        instances += 1
        v = ev.verdict(law, _env(law, idx, carrier, ev.granulars))
        if v is None:
            vacuous += 1
        elif not v:
            key = _key(s, law, idx, carrier)
            if best_key is None or key < best_key:
                best, best_key = idx, key
    return instances, vacuous, best


def _binding(s, law, idx, bound) -> dict:
    return _env(law, idx, s.elements(bound), s.lattice.granulars())


def render_binding(s: MnesorSpace, law: Law, binding: dict) -> dict[str, str]:
    out = {}
    for v in law.variables:
        val = binding[v.name]
        out[v.name] = s.render(val) if v.sort == MNESOR else val.label
    return out


def violates(s: MnesorSpace, law: Law | str, binding: dict, b: CheckBounds = CheckBounds()) -> bool:
    law = _lookup(law)
    ev = _Evaluator(s, s.elements(b.max_mnesor_enumeration))
    return ev.verdict(law, binding) is False


def _result(s, law, b, scanned) -> LawResult:
    instances, vacuous, idx = scanned
    if idx is None:
        return LawResult(law.name, PASS, instances, vacuous)
    binding = _binding(s, law, idx, b.max_mnesor_enumeration)
    if not violates(s, law, binding, b):
        raise AssertionError(f"unsound counterexample for {law.name}: {binding}")
    return LawResult(
        law.name, FAIL, instances, vacuous, binding, render_binding(s, law, binding)
    )


def _skip_reason(s: MnesorSpace, law: Law) -> str | None:
    if law.uses_bottom() and s.lattice.bottom is None:
        return "lattice has no bottom"
    return None


def check_law(s: MnesorSpace, law: Law | str, b: CheckBounds = CheckBounds()) -> LawResult:
    law = _lookup(law)
    reason = _skip_reason(s, law)
    if reason:
        return LawResult(law.name, SKIPPED, reason=reason)
    return _result(s, law, b, _scan(s, law, b.max_mnesor_enumeration))


def _scan_by_name(args):
    s, name, bound = args
    return _scan(s, catalog()[name], bound)


def check_all(s: MnesorSpace, b: CheckBounds = CheckBounds(), jobs: int = 1) -> ComplianceReport:
    """One result per catalog law, in catalog order.  ``jobs > 1`` scans laws in worker processes."""
    laws = list(catalog())
    todo = [law for law in laws if not _skip_reason(s, law)]
    bound = b.max_mnesor_enumeration
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            scans = list(pool.map(_scan_by_name, [(s, law.name, bound) for law in todo]))
    else:
        scans = [_scan(s, law, bound) for law in todo]
    scanned = dict(zip((law.name for law in todo), scans))
    results = []
    for law in laws:
        if law.name in scanned:
            results.append(_result(s, law, b, scanned[law.name]))
        else:
            results.append(LawResult(law.name, SKIPPED, reason=_skip_reason(s, law)))
    return ComplianceReport(s.describe(), s.lattice.name, b.to_json(s), tuple(results))


def minimize(s: MnesorSpace, law: Law | str, binding: dict, b: CheckBounds = CheckBounds()) -> dict:
    """Smallest violating binding at or below ``binding`` in the counterexample order.

    Existential variables still range over the full bounded carrier; only the
    universally bound mnesors are restricted to sizes the order could prefer.
    """
    law = _lookup(law)
    bound = b.max_mnesor_enumeration
    carrier = s.elements(bound)
    ev = _Evaluator(s, carrier)
    if ev.verdict(law, binding) is not False:
        raise NotAViolation(f"binding does not violate {law.name}")
    index = {m: i for i, m in enumerate(carrier)}
    k = len(law.mnesor_vars)
    try:
        idx = tuple(index[binding[v.name]] for v in law.mnesor_vars)
    except KeyError:
        raise ValueError("binding uses mnesors outside the enumerated carrier") from None
    idx += tuple(binding[v.name].id for v in law.granular_vars)
    best, best_key = idx, _key(s, law, idx, carrier)
    budget = best_key[0]
    small = [i for i, m in enumerate(carrier) if s.size(m) <= budget]
    ranges = [small] * k + [range(len(ev.granulars))] * len(law.granular_vars)
    for cand in itertools.product(*ranges):
        key = _key(s, law, cand, carrier)
        if key >= best_key:
            continue
        if ev.verdict(law, _env(law, cand, carrier, ev.granulars)) is False:
            best, best_key = cand, key
    return _env(law, best, carrier, ev.granulars)


__all__ = [
    "CheckBounds",
    "ComplianceReport",
    "LawResult",
    "check_all",
    "check_law",
    "minimize",
    "violates",
    "render_binding",
]
