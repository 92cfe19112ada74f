#!/usr/bin/env python3
"""Run both built-in examples and the finite-type exhaustive check; exit nonzero on any failure."""

import sys

from clusterwb.cli import main

RUNS = [
    ["example", "a3"],
    ["example", "a2tilde", "--emit-f"],
    ["verify", "main3", "-q", "a3cyclic"],
    ["verify", "main2", "-q", "a2tilde-gamma", "--depth", "4"],
]

if __name__ == "__main__":
    worst = 0
    for argv in RUNS:
        print("$ clusterwb " + " ".join(argv))
        worst = max(worst, main(argv))
        print()
    sys.exit(worst)
