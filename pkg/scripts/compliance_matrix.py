#!/usr/bin/env python3
"""Print the compliance matrix of every shipped model side by side.

Columns are the column-tuple model at |U| = 1..3 and the self-action
model over each built-in lattice.  Cells are P (pass), F (fail) or
S (skipped).

    python scripts/compliance_matrix.py [--json]
"""
import argparse
import json

from mnesor import SeqSpace, catalog, check_all, make_self_action
from mnesor.lattice import builtin_lattices


def spaces():
    for n in range(1, 4):
        yield f"seq{n}", SeqSpace("abc"[:n])
    for lat in builtin_lattices():
        yield lat.name, make_self_action(lat)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    columns = {name: check_all(s).statuses() for name, s in spaces()}
    if args.json:
        print(json.dumps(columns, indent=2))
        return
    names = list(columns)
    width = max(len(n) for n in catalog().names)
    print(" " * width + "  " + " ".join(f"{n:>6}" for n in names))
    for law in catalog().names:
        cells = " ".join(f"{columns[n][law][0].upper():>6}" for n in names)
        print(f"{law:<{width}}  {cells}")


if __name__ == "__main__":
    main()
