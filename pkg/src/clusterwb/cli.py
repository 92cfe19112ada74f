"""Command-line front end.

Vertices and mutation words are 1-indexed here, as in the quiver files.
Exit codes: 0 all results as expected, 1 mismatch, 2 input or resolution error.
Enumeration runs in a single thread; ``CLUSTER_WB_THREADS`` is not consulted.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import dencheck
from .exmatrix import ExchangeMatrix, QuiverFormatError, parse_quiver
from .inventory import ResolutionError, Unsupported
from .laurent import LaurentPoly, parse_laurent, reduced_form
from .seeds import BudgetExhausted, EngineInvariantError, Enumeration, Seed, enumerate_seeds, reroot

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2

ENUMERATE_DEPTH = 8
VERIFY_DEPTH = 5
EXAMPLE_A2TILDE_DEPTH = 4


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    quiver: str | None = None
    word: tuple[int, ...] = ()
    depth: int | None = None
    closure: bool = False
    tc_word: tuple[int, ...] | None = None
    fmt: str = "text"
    golden: str | None = None
    theorem: str | None = None
    example: str | None = None
    emit_f: bool = False

    def __post_init__(self):
        if self.depth is not None and self.depth < 0:
            raise InputError("depth must be non-negative")


def data_path(kind: str, name: str) -> Path:
    return Path(str(resources.files("clusterwb") / "data" / kind / name))


def load_quiver_arg(arg: str) -> ExchangeMatrix:
    """A quiver file path, or the name of a built-in quiver such as ``a3cyclic``."""
    path = Path(arg)
    if not path.exists():
        stem = path.name[: -len(".quiver")] if path.name.endswith(".quiver") else path.name
        path = data_path("quivers", stem + ".quiver")
        if not path.exists():
            raise InputError(f"no quiver file {arg!r}")
    return parse_quiver(path.read_text())


def parse_word(text: str | None, n: int | None = None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        word = tuple(int(p) - 1 for p in text.split(","))
    except ValueError:
        raise InputError(f"bad mutation word {text!r}") from None
    if any(k < 0 or (n is not None and k >= n) for k in word):
        raise InputError(f"mutation word {text!r} leaves the vertex range")
    return word


def read_golden(path: str | Path, n: int) -> list[LaurentPoly]:
    out = []
    for raw in Path(path).read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_laurent(line, n))
    return out


def compare_golden(enum: Enumeration, golden: Sequence[LaurentPoly]) -> tuple[bool, list[str], list[str]]:
    """Set equality when the enumeration closed, containment otherwise."""
    found = {r.poly for r in enum.variables}
    gold = set(golden)
    missing = sorted(x.fraction_str(enum.var) for x in gold - found)
    extra = sorted(x.fraction_str(enum.var) for x in found - gold) if enum.closed else []
    return not missing and not extra, missing, extra


# ---------------------------------------------------------------------------
# commands


def _emit(cfg: RunConfig, payload: dict, lines: list[str]) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def cmd_mutate(cfg: RunConfig) -> int:
    B = load_quiver_arg(cfg.quiver)
    seed = Seed.initial(B)
    for k in cfg.word:
        if k >= B.n:
            raise InputError(f"vertex {k + 1} out of range")
    s = seed.mutate_word(cfg.word)
    lines = [f"word: {','.join(str(k + 1) for k in s.word) or '(empty)'}"]
    lines += [f"y'{i + 1} = {x.fraction_str()}" for i, x in enumerate(s.cluster)]
    lines.append("matrix:")
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in s.matrix.b]
    _emit(cfg, s.to_json(), lines)
    return EXIT_OK


def _run_enumeration(cfg: RunConfig, B: ExchangeMatrix) -> Enumeration:
    root = Seed.initial(B)
    if cfg.closure:
        if cfg.word:
            return reroot(root, cfg.word, closure=True)
        return enumerate_seeds(root, closure=True)
    depth = ENUMERATE_DEPTH if cfg.depth is None else cfg.depth
    if cfg.word:
        return reroot(root, cfg.word, max_depth=depth)
    return enumerate_seeds(root, max_depth=depth)


def cmd_enumerate(cfg: RunConfig) -> int:
    B = load_quiver_arg(cfg.quiver)
    try:
        enum = _run_enumeration(cfg, B)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = enum.report()
    lines = [f"clusters: {len(enum.seeds)}", f"variables: {len(enum.variables)}"]
    lines.append("closed: yes" if enum.closed else f"closed: no (depth {enum.max_depth})")
    for r in enum.variables:
        d = ",".join(str(v) for v in r.dvec)
        w = ",".join(str(k + 1) for k in r.witness) or "-"
        lines.append(f"  {r.poly.fraction_str(enum.var)}    dvec=({d})  word={w}")
    code = EXIT_OK
    if cfg.golden:
        ok, missing, extra = compare_golden(enum, read_golden(cfg.golden, B.n))
        report["golden"] = {"pass": ok, "missing": missing, "extra": extra}
        lines.append("golden: PASS" if ok else "golden: FAIL")
        lines += [f"  missing {m}" for m in missing] + [f"  extra {e}" for e in extra]
        code = EXIT_OK if ok else EXIT_MISMATCH
    _emit(cfg, report, lines)
    return code


def _report_lines(report: dict) -> list[str]:
    lines = [f"theorem: {report['theorem']}", f"scope: {report['scope']}"]
    for k, v in report.get("instance", {}).items():
        lines.append(f"{k}: {v}")
    for k, v in report["verdicts"].items():
        lines.append(f"  {k}: {v}")
    for k, v in report.get("counts", {}).items():
        lines.append(f"  #{k}: {v}")
    for w in report["witnesses"]:
        lines.append("  witness: " + json.dumps(w, sort_keys=True))
    return lines


def cmd_verify(cfg: RunConfig) -> int:
    B = load_quiver_arg(cfg.quiver)
    wb = dencheck.Workbench(B)
    if cfg.theorem == "main3":
        report = dencheck.verify_main3_finite(wb)
    else:
        tc = wb.tilting_choice(cfg.tc_word)
        depth = None if wb.finite and cfg.depth is None else (VERIFY_DEPTH if cfg.depth is None else cfg.depth)
        fn = {
            "main2": dencheck.verify_main2,
            "t-all": dencheck.verify_t_all,
            "oldc3": dencheck.verify_oldc3,
            "lcm": dencheck.verify_lcm,
        }[cfg.theorem]
        report = fn(wb, tc, depth)
    ok = dencheck.report_passes(report)
    report["pass"] = ok
    _emit(cfg, report, _report_lines(report) + ["PASS" if ok else "FAIL"])
    return EXIT_OK if ok else EXIT_MISMATCH


def _example_a3(cfg: RunConfig) -> tuple[bool, dict, list[str]]:
    B = load_quiver_arg("a3cyclic")
    enum = enumerate_seeds(Seed.initial(B), closure=True)
    ok, missing, extra = compare_golden(enum, read_golden(data_path("golden", "a3cyclic.txt"), 3))
    ok = ok and len(enum.seeds) == 14
    lines = [f"clusters: {len(enum.seeds)}", f"variables: {len(enum.variables)}"]
    lines += [f"  {r.poly.fraction_str()}" for r in enum.variables]
    lines += [f"  missing {m}" for m in missing] + [f"  extra {e}" for e in extra]
    payload = {"clusters": len(enum.seeds), "variables": [r.poly.fraction_str() for r in enum.variables],
               "missing": missing, "extra": extra}
    return ok, payload, lines


def _example_a2tilde(cfg: RunConfig) -> tuple[bool, dict, list[str]]:
    gamma = load_quiver_arg("a2tilde-gamma")
    wb = dencheck.Workbench(load_quiver_arg("a2tilde-q"))
    tc = wb.tilting_choice((1,))
    if tc.quiver != gamma:
        raise EngineInvariantError("mutating a2tilde-q at vertex 2 does not give a2tilde-gamma")
    enum = wb.enumerate_tc(tc, EXAMPLE_A2TILDE_DEPTH)
    gold_ok, missing, _ = compare_golden(enum, read_golden(data_path("golden", "a2tilde.txt"), 3))
    M = tc.T[1]
    end_dim = wb.C.end_C(M)
    t_M = dencheck.t_vector(wb.C, tc.T, M)
    extra = [r for r in enum.variables if r.dvec == (1, 1, 2)]
    XM = parse_laurent("((y1 + y3)^2 + y2) / (y1*y2*y3)", 3)
    verdict = dencheck.check_T_denominator(wb.C, XM, wb.resolve(enum.variable(XM).companions[-1]), tc)
    ok = gold_ok and end_dim == 2 and t_M == (1, 2, 1) and len(extra) == 1 and not verdict.holds
    lines = [
        f"T = {tc.describe()}",
        f"golden variables found within depth {EXAMPLE_A2TILDE_DEPTH}: {'yes' if gold_ok else 'no'}",
        f"dim End_C(M) = {end_dim}",
        f"t_M = {t_M}",
        f"X_M = {XM.fraction_str()}: T-denominator {'holds' if verdict.holds else 'fails'}"
        f" (denominator {verdict.actual}, expected {verdict.expected})",
    ]
    lines += [f"  missing {m}" for m in missing]
    payload = {"T": tc.describe(), "golden_found": gold_ok, "missing": missing, "end_dim_M": end_dim,
               "t_M": list(t_M), "X_M": verdict.to_json(XM)}
    if extra:
        f, d = reduced_form(extra[0].poly)
        payload["dvec_112"] = extra[0].poly.fraction_str()
        if cfg.emit_f:
            lines.append(f"f = {f.to_str()}   (numerator over y1*y2*y3^2)")
            payload["f"] = f.to_str()
    return ok, payload, lines


def cmd_example(cfg: RunConfig) -> int:
    fn = {"a3": _example_a3, "a2tilde": _example_a2tilde}[cfg.example]
    ok, payload, lines = fn(cfg)
    payload["pass"] = ok
    _emit(cfg, payload, lines + ["PASS" if ok else "FAIL"])
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {"mutate": cmd_mutate, "enumerate": cmd_enumerate, "verify": cmd_verify, "example": cmd_example}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clusterwb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, word=True):
        sp.add_argument("-q", "--quiver", required=True, help="quiver file or built-in name")
        if word:
            sp.add_argument("-w", "--word", help="comma-separated mutation word, 1-indexed")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = sub.add_parser("mutate", help="mutate the initial seed along a word")
    common(sp)

    sp = sub.add_parser("enumerate", help="breadth-first enumeration of cluster variables")
    common(sp)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--closure", action="store_true", help="full exchange graph (finite type only)")
    sp.add_argument("--golden", help="file of expected variables")

    sp = sub.add_parser("verify", help="run a denominator verifier")
    sp.add_argument("theorem", choices=["main2", "main3", "t-all", "oldc3", "lcm"])
    common(sp, word=False)
    sp.add_argument("--depth", type=int)
    sp.add_argument("--tc-word", help="word from the acyclic root to the tilting seed")

    sp = sub.add_parser("example", help="reproduce a built-in example")
    sp.add_argument("name", choices=["a3", "a2tilde"])
    sp.add_argument("--emit-f", action="store_true", help="print the numerator over y1*y2*y3^2")
    sp.add_argument("--json", action="store_true")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    tc = getattr(ns, "tc_word", None)
    return RunConfig(
        command=ns.command,
        quiver=getattr(ns, "quiver", None),
        word=parse_word(getattr(ns, "word", None)),
        depth=getattr(ns, "depth", None),
        closure=getattr(ns, "closure", False),
        tc_word=parse_word(tc) if tc is not None else None,
        fmt="json" if ns.json else "text",
        golden=getattr(ns, "golden", None),
        theorem=getattr(ns, "theorem", None),
        example=getattr(ns, "name", None),
        emit_f=getattr(ns, "emit_f", False),
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (InputError, QuiverFormatError, ResolutionError, Unsupported, BudgetExhausted, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineInvariantError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
