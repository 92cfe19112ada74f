#!/usr/bin/env python3
"""Print the exceptional-object inventory of a quiver as JSON."""

import argparse

from clusterwb.cli import load_quiver_arg
from clusterwb.inventory import build_inventory

if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("quiver", help="quiver file or built-in name")
    ap.add_argument("--depth", type=int, default=3, help="transjective tau-steps in infinite type")
    args = ap.parse_args()
    print(build_inventory(load_quiver_arg(args.quiver), args.depth).dump_json())
