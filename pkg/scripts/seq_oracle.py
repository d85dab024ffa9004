#!/usr/bin/env python3
"""Brute-force compliance matrix for column tuples over {a, b, c}.

Independent of the ``mnesor`` package: mnesors are plain tuples of atom
names, granulars are frozensets, and every law is a hand-written nested
loop.  Writes the golden matrix the test-suite compares the checker with.

    python scripts/seq_oracle.py > tests/golden/seq_u3_matrix.json
"""
import json
import sys
from itertools import permutations

ATOMS = ("a", "b", "c")

# by length, then lexicographic by atom index
M = [p for k in range(len(ATOMS) + 1) for p in permutations(ATOMS, k)]
# by bitmask: atom i is bit i
G = [frozenset(a for i, a in enumerate(ATOMS) if m >> i & 1) for m in range(1 << len(ATOMS))]
TOP, BOT = G[-1], G[0]
Z = ()


def add(x, y):
    out = list(x)
    for v in y:
        if v not in out:
            out.append(v)
    return tuple(out)


def act(x, g):
    return tuple(v for v in x if v in g)


def some_g(pred):
    return any(pred(g) for g in G)


def some_m(pred):
    return any(pred(m) for m in M)


# name -> (mnesor var names, granular var names, fn(*values) -> None | bool)
# None means the hypothesis is not met.
def implies(h, c):
    return c() if h else None


LAWS = [
    ("A-MON-ID", "x", "", lambda x: add(Z, x) == x and add(x, Z) == x),
    ("A-MON-ASSOC", "xyz", "", lambda x, y, z: add(add(x, y), z) == add(x, add(y, z))),
    ("A-UNITAL", "x", "", lambda x: act(x, TOP) == x),
    ("A-MDIST", "xy", "l", lambda x, y, l: act(add(x, y), l) == add(act(x, l), act(y, l))),
    ("A-ASSOC-ACT", "x", "lm", lambda x, l, m: act(act(x, l), m) == act(x, l & m)),
    ("A-GDIST", "x", "lm", lambda x, l, m: add(act(x, l), act(x, m)) == act(x, l | m)),
    ("A-ABSORB", "xy", "", lambda x, y: some_g(lambda al: act(add(x, y), al) == x)),
    ("T-IDEM", "x", "", lambda x: add(x, x) == x),
    ("T-PRIORITY", "xy", "", lambda x, y: add(add(x, y), x) == add(x, y)),
    ("T-PFX-I-II", "xy", "", lambda x, y: implies(
        some_m(lambda z: add(y, z) == x), lambda: some_g(lambda l: act(x, l) == y))),
    ("T-PFX-II-III", "xy", "", lambda x, y: implies(
        some_g(lambda l: act(x, l) == y), lambda: add(y, x) == x)),
    ("T-PFX-III-I", "xy", "", lambda x, y: implies(
        add(y, x) == x, lambda: some_m(lambda z: add(y, z) == x))),
    ("T-ORD-REFL", "x", "", lambda x: add(x, x) == x),
    ("T-ORD-TRANS", "xyz", "", lambda x, y, z: implies(
        add(x, y) == y and add(y, z) == z, lambda: add(x, z) == z)),
    ("T-ORD-ANTISYM", "xy", "", lambda x, y: implies(
        add(x, y) == y and add(y, x) == x, lambda: x == y)),
    ("T-COMPAT-ADD", "xya", "", lambda x, y, a: implies(
        add(x, y) == y, lambda: add(add(x, a), add(y, a)) == add(y, a))),
    ("T-MONO-M", "xy", "l", lambda x, y, l: implies(
        add(x, y) == y, lambda: add(act(x, l), act(y, l)) == act(y, l))),
    ("T-MONO-G", "x", "lm", lambda x, l, m: implies(
        (l | m) == m, lambda: add(act(x, l), act(x, m)) == act(x, m))),
    ("T-POS", "x", "", lambda x: add(Z, x) == x),
    ("T-ZSF", "xy", "", lambda x, y: implies(add(x, y) == Z, lambda: x == Z and y == Z)),
    ("T-SFX-II-III", "ay", "l", lambda a, y, l: implies(
        add(act(a, l), y) == a, lambda: add(a, y) == a)),
    ("T-SFX-III-II", "ay", "", lambda a, y: implies(
        add(a, y) == a, lambda: some_g(lambda l: add(act(a, l), y) == a))),
    ("T-PFX-IS-SFX", "az", "", lambda a, z: implies(
        some_g(lambda l: act(a, l) == z), lambda: add(a, z) == a)),
    ("T-ANAGRAM", "zt", "", lambda z, t: add(add(z, t), add(t, z)) == add(z, t)
        and add(add(t, z), add(z, t)) == add(t, z)),
    ("T-WIT-STAB", "xy", "A", lambda x, y, al: implies(
        act(add(x, y), al) == x, lambda: act(x, al) == x)),
    ("T-STAB-CLOSE", "x", "lm", lambda x, l, m: implies(
        act(x, l) == x and act(x, m) == x, lambda: act(x, l | m) == x and act(x, l & m) == x)),
    ("T-EMPTY-FWD", "", "l", lambda l: act(Z, l) == Z),
    ("T-EMPTY-BWD", "e", "", lambda e: implies(
        all(act(e, l) == e for l in G), lambda: e == Z)),
    ("T-BOT", "x", "", lambda x: act(x, BOT) == Z),
    ("T-ANNIH-CLOSE", "x", "lm", lambda x, l, m: implies(
        act(x, l) == Z and act(x, m) == Z, lambda: act(x, l | m) == Z and act(x, l & m) == Z)),
]

VAR_NAMES = {"l": "lam", "m": "mu", "A": "alpha"}


def show_m(x):
    return "[" + " ".join(x) + "]"


def show_g(g):
    return "{" + " ".join(a for a in ATOMS if a in g) + "}"


def bindings(mvars, gvars):
    """All index tuples in lexicographic order, via explicit recursion."""
    ranges = [len(M)] * len(mvars) + [len(G)] * len(gvars)

    def rec(prefix):
        if len(prefix) == len(ranges):
            yield tuple(prefix)
            return
        for i in range(ranges[len(prefix)]):
            yield from rec(prefix + [i])

    yield from rec([])


def run():
    rows = []
    for name, mvars, gvars, fn in LAWS:
        instances = vacuous = 0
        best = None
        for idx in bindings(mvars, gvars):
            k = len(mvars)
            vals = [M[i] for i in idx[:k]] + [G[i] for i in idx[k:]]
            instances += 1
            v = fn(*vals)
            if v is None:
                vacuous += 1
            elif v is False:
                key = (sum(len(m) for m in vals[:k]), idx)
                if best is None or key < best[0]:
                    best = (key, vals)
        cex = None
        if best is not None:
            vals = best[1]
            names = [v for v in mvars] + [VAR_NAMES[v] for v in gvars]
            cex = {
                n: (show_m(val) if i < len(mvars) else show_g(val))
                for i, (n, val) in enumerate(zip(names, vals))
            }
        rows.append({
            "name": name,
            "status": "fail" if best else "pass",
            "instances": instances,
            "vacuous": vacuous,
            "counterexample": cex,
        })
    return {"universe": list(ATOMS), "mnesors": len(M), "granulars": len(G), "laws": rows}


if __name__ == "__main__":
    json.dump(run(), sys.stdout, indent=2)
    sys.stdout.write("\n")
