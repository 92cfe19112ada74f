#!/usr/bin/env python3
"""Search for distinct objects sharing a t-vector under the same tilting object.

Whether t_M determines M is left open; this only reports what turns up on
small instances and never treats a collision as an error.
"""

import argparse
import json
from collections import defaultdict

from clusterwb.cli import load_quiver_arg
from clusterwb.dencheck import Workbench, tilting_words
from clusterwb.inventory import t_vector


def collisions(wb, tc):
    groups = defaultdict(list)
    for X in wb.inventory:
        if tc.index_of_tau(X) is None:
            groups[t_vector(wb.C, tc.T, X, check=False)].append(X.name())
    return {t: names for t, names in groups.items() if len(names) > 1}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("quivers", nargs="*", default=["a3cyclic", "d4", "a2tilde-q", "kronecker"])
    ap.add_argument("--tc-depth", type=int, default=3, help="tilting seeds within this depth (infinite type)")
    ap.add_argument("--inventory-depth", type=int, default=3)
    args = ap.parse_args()
    out = {}
    for name in args.quivers:
        wb = Workbench(load_quiver_arg(name), inventory_depth=args.inventory_depth)
        words = tilting_words(wb, None if wb.finite else args.tc_depth)
        found = []
        for w in words:
            tc = wb.tilting_choice(w)
            for t, names in sorted(collisions(wb, tc).items()):
                found.append({"tc_word": [k + 1 for k in w], "T": tc.describe(), "t": list(t), "objects": names})
        out[name] = {"tilting_choices": len(words), "objects": len(wb.inventory), "collisions": found}
        print(f"{name}: {len(words)} tilting choices, {len(wb.inventory)} objects, {len(found)} collisions")
    print(json.dumps(out, indent=1))


if __name__ == "__main__":
    main()
