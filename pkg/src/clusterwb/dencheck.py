"""Denominator checks for cluster variables relative to a cluster-tilting object.

A :class:`Workbench` fixes an acyclic root seed ``(x, Q)`` with its cluster
category and inventory.  A tilting choice is a seed reached from the root by
a mutation word; its cluster ``y`` gives ``tau T_i = alpha(y_i)``.  Variables
are enumerated around that seed with two lockstep views, one in ``y`` and
one in ``x``; objects are always resolved from the ``x`` view.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .category import ClusterCategory, IndecObject
from .exmatrix import ExchangeMatrix, classify_quiver, find_acyclic_word, is_acyclic
from .inventory import Inventory, ResolutionError, Unsupported, alpha, t_vector
from .laurent import LaurentPoly, denominator_vector, positivity_check
from .seeds import Edge, EngineInvariantError, Enumeration, Seed, enumerate_seeds, reroot


@dataclass(frozen=True)
class TiltingChoice:
    word: tuple[int, ...]
    T: tuple[IndecObject, ...]
    tauT: tuple[IndecObject, ...]
    quiver: ExchangeMatrix
    seed: Seed  # cluster y written in the root cluster x

    def index_of_tau(self, X: IndecObject) -> int | None:
        for i, t in enumerate(self.tauT):
            if t == X:
                return i
        return None

    def describe(self) -> str:
        return "+".join(t.name() for t in self.T)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    case: str  # "I" or "II"
    f: LaurentPoly
    positivity: bool
    expected: tuple[int, ...]
    actual: tuple[int, ...]
    obj: IndecObject
    index: int | None = None
    f_is_one: bool | None = None

    def mismatches(self) -> list[tuple[int, int, int]]:
        """``(position, actual, expected)`` where the denominators differ."""
        return [(i, a, e) for i, (a, e) in enumerate(zip(self.actual, self.expected)) if a != e]

    def to_json(self, x: LaurentPoly | None = None, var: str = "y") -> dict:
        out = {
            "holds": self.holds,
            "case": self.case,
            "object": self.obj.name(),
            "expected_denominator": list(self.expected),
            "actual_denominator": list(self.actual),
            "positivity": self.positivity,
            "f": self.f.to_str(var),
        }
        if x is not None:
            out["variable"] = x.fraction_str(var)
        if self.case == "II":
            out["f_is_one"] = self.f_is_one
        if not self.holds:
            out["mismatches"] = [
                {"position": i + 1, "actual": a, "expected": e} for i, a, e in self.mismatches()
            ]
        return out


@dataclass(frozen=True)
class ExchangeObjects:
    """Objects of an exchange edge: the pair ``(M, M*)`` and middle terms ``B``, ``B'``."""

    M: IndecObject
    Mstar: IndecObject
    B: tuple[tuple[IndecObject, int], ...]
    Bprime: tuple[tuple[IndecObject, int], ...]


@dataclass(frozen=True)
class Compatibility:
    compatible: bool
    boundary: bool
    r: int  # dim Hom_C(N, M*)
    s: int  # dim Hom_C(N, B)
    t: int  # dim Hom_C(N, M)
    u: int  # dim Hom_C(N, B')
    plus_one: bool | None = None  # boundary identity, when boundary

    def dims(self) -> dict:
        return {"r": self.r, "s": self.s, "t": self.t, "u": self.u}


@dataclass(frozen=True)
class LcmCheck:
    holds: bool
    t_M: tuple[int, ...]
    t_Mstar: tuple[int, ...]
    t_B: tuple[int, ...]
    t_Bprime: tuple[int, ...]
    boundary_index: int | None
    c: tuple[int, ...]  # exponent vector of the correction monomial

    @property
    def nontrivial(self) -> bool:
        return any(self.c)


def _sum_hom(C: ClusterCategory, N: IndecObject, terms: Iterable[tuple[IndecObject, int]]) -> int:
    return sum(m * C.hom_C(N, X) for X, m in terms)


class Workbench:
    """Root seed, category and inventory shared by all checks on one quiver.

    ``matrix`` may be cyclic; the root is then an acyclic seed in its
    mutation class and ``input_word`` leads from that root back to ``matrix``.
    """

    def __init__(self, matrix: ExchangeMatrix, inventory_depth: int = 6):
        self.input_matrix = matrix
        word = () if is_acyclic(matrix) else find_acyclic_word(matrix)
        if word is None:
            raise Unsupported("no acyclic seed found near the given quiver")
        Q = matrix
        for k in word:
            Q = Q.mutate(k)
        self.matrix = Q
        self.input_word = tuple(reversed(word))
        self.cls = classify_quiver(Q)
        self.inventory = Inventory(Q, inventory_depth)
        self.C = self.inventory.C
        self.root = Seed.initial(Q)
        self._resolved: dict[LaurentPoly, IndecObject] = {}

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def finite(self) -> bool:
        return self.cls.is_dynkin

    def resolve(self, x: LaurentPoly) -> IndecObject:
        """``alpha`` of a cluster variable written in the root cluster."""
        if x not in self._resolved:
            self._resolved[x] = alpha(self.inventory, denominator_vector(x))
        return self._resolved[x]

    def tilting_choice(self, word: Sequence[int] | None = None) -> TiltingChoice:
        word = self.input_word if word is None else tuple(word)
        seed = self.root.mutate_word(word)
        tauT = tuple(self.resolve(y) for y in seed.cluster)
        if not self.C.is_cluster_tilting(tauT):
            raise EngineInvariantError(f"alpha of the cluster at {list(word)} is not cluster-tilting")
        T = tuple(self.inventory.tau_inv(t) for t in tauT)
        return TiltingChoice(word, T, tauT, seed.matrix, seed)

    def enumerate_tc(self, tc: TiltingChoice, depth: int | None = None) -> Enumeration:
        """Variables around the tilting seed; closure in finite type when ``depth`` is None."""
        if depth is None:
            if not self.finite:
                raise ValueError("a depth is required outside finite type")
            return reroot(self.root, tc.word, closure=True)
        return reroot(self.root, tc.word, max_depth=depth)

    def root_enumeration(self, depth: int | None = None) -> Enumeration:
        if depth is None:
            return enumerate_seeds(self.root, closure=True, var="x")
        return enumerate_seeds(self.root, max_depth=depth, var="x")

    def edge_objects(self, enum: Enumeration, edge: Edge) -> ExchangeObjects:
        rec = edge.records[-1]
        cluster = enum.seeds[edge.source].views[-1].cluster
        return ExchangeObjects(
            self.resolve(rec.xM),
            self.resolve(rec.xMstar),
            tuple((self.resolve(cluster[i]), m) for i, m in rec.bplus),
            tuple((self.resolve(cluster[i]), m) for i, m in rec.bminus),
        )


# ---------------------------------------------------------------------------
# single checks


def check_T_denominator(C: ClusterCategory, x: LaurentPoly, obj: IndecObject, tc: TiltingChoice) -> Verdict:
    """Whether ``x`` (written in the tilting cluster ``y``) has a T-denominator.

    ``obj`` is ``alpha(x)``.  When ``obj = tau T_i`` the variable must be
    ``f * y_i``; otherwise ``x * t_obj`` must be a polynomial.  In both cases
    ``f`` has to satisfy the positivity condition.
    """
    n = x.n
    actual = denominator_vector(x)
    i = tc.index_of_tau(obj)
    if i is not None:
        expected = tuple(-int(j == i) for j in range(n))
        f = x.shift(tuple(-int(j == i) for j in range(n)))
        case = "II"
    else:
        expected = t_vector(C, tc.T, obj, check=False)
        f = x.shift(expected)
        case = "I"
    positivity = f.is_polynomial() and positivity_check(f)
    return Verdict(
        holds=positivity,
        case=case,
        f=f,
        positivity=positivity,
        expected=expected,
        actual=actual,
        obj=obj,
        index=i,
        f_is_one=(f == LaurentPoly.constant(1, n)) if case == "II" else None,
    )


def exchange_compatible(C: ClusterCategory, N: IndecObject, ex: ExchangeObjects) -> Compatibility:
    """Hom-dimension test of ``N`` against the exchange pair in ``ex``.

    Outside the boundary case ``M = tau N`` or ``M* = tau N``, compatibility
    means ``t + r = max(s, u)``.  The bounds ``s <= r + t`` and ``u <= r + t``
    come from the long exact Hom sequences and are asserted on every call.
    """
    r = C.hom_C(N, ex.Mstar)
    s = _sum_hom(C, N, ex.B)
    t = C.hom_C(N, ex.M)
    u = _sum_hom(C, N, ex.Bprime)
    if s > r + t or u > r + t:
        raise EngineInvariantError(f"Hom bound violated for {N.name()}: r={r} s={s} t={t} u={u}")
    tauN = C.tau(N)
    if tauN == ex.M or tauN == ex.Mstar:
        return Compatibility(True, True, r, s, t, u, plus_one=(r + t == max(s, u) + 1))
    return Compatibility(r + t == max(s, u), False, r, s, t, u)


def check_oldc3(C: ClusterCategory, N: IndecObject, ex: ExchangeObjects) -> bool:
    """The boundary identity ``t + r = max(s, u) + 1`` when ``tau N`` is ``M`` or ``M*``."""
    res = exchange_compatible(C, N, ex)
    if not res.boundary:
        raise ValueError(f"{N.name()} is not in the boundary case for this exchange pair")
    return bool(res.plus_one)


def check_lcm_identity(C: ClusterCategory, tc: TiltingChoice, ex: ExchangeObjects) -> LcmCheck:
    """Entrywise ``t_M + t_M* = max(t_B, t_B') (+ e_i)`` with ``i`` the boundary index."""
    n = len(tc.T)
    tM = t_vector(C, tc.T, ex.M, check=False)
    tMs = t_vector(C, tc.T, ex.Mstar, check=False)
    tB = tuple(_sum_hom(C, Ti, ex.B) for Ti in tc.T)
    tBp = tuple(_sum_hom(C, Ti, ex.Bprime) for Ti in tc.T)
    i = tc.index_of_tau(ex.M)
    if i is None:
        i = tc.index_of_tau(ex.Mstar)
    c = tuple(
        tM[j] + tMs[j] - max(tB[j], tBp[j]) - int(j == i) for j in range(n)
    )
    return LcmCheck(not any(c), tM, tMs, tB, tBp, i, c)


# ---------------------------------------------------------------------------
# suites


def _label(enum: Enumeration) -> str:
    return "exhaustive" if enum.closed else f"bounded at depth {enum.max_depth}"


def variable_verdicts(wb: Workbench, tc: TiltingChoice, enum: Enumeration) -> list[tuple[LaurentPoly, Verdict]]:
    out = []
    for rec in enum.variables:
        obj = wb.resolve(rec.companions[-1])
        out.append((rec.poly, check_T_denominator(wb.C, rec.poly, obj, tc)))
    return out


def _edge_witness(enum: Enumeration, edge: Edge, ex: ExchangeObjects) -> dict:
    return {
        "seed_word": [k + 1 for k in enum.seeds[edge.source].path],
        "mutation": edge.k + 1,
        "M": ex.M.name(),
        "M*": ex.Mstar.name(),
        "B": [(X.name(), m) for X, m in ex.B],
        "B'": [(X.name(), m) for X, m in ex.Bprime],
    }


def compatibility_failures(wb: Workbench, tc: TiltingChoice, enum: Enumeration, objects=None) -> tuple[list[dict], list[dict]]:
    """Incompatible (edge, N) pairs and boundary pairs where the +1 identity fails.

    ``objects`` defaults to the summands of ``T``.
    """
    objects = list(tc.T if objects is None else objects)
    bad, bad_boundary = [], []
    for edge in enum.edges:
        ex = wb.edge_objects(enum, edge)
        for N in objects:
            res = exchange_compatible(wb.C, N, ex)
            w = None
            if res.boundary and not res.plus_one:
                w = bad_boundary
            elif not res.compatible:
                w = bad
            if w is not None:
                w.append({**_edge_witness(enum, edge, ex), "N": N.name(), **res.dims()})
    return bad, bad_boundary


def verify_t_all(wb: Workbench, tc: TiltingChoice, depth: int | None = None) -> dict:
    """Exchange compatibility of every summand of T against T-denominators of every variable."""
    enum = wb.enumerate_tc(tc, depth)
    bad, bad_boundary = compatibility_failures(wb, tc, enum)
    if bad_boundary:
        raise EngineInvariantError(f"boundary identity fails: {bad_boundary[0]}")
    verdicts = variable_verdicts(wb, tc, enum)
    failing = [(x, v) for x, v in verdicts if not v.holds]
    compatible = not bad
    denominators = not failing
    return {
        "theorem": "t-all",
        "instance": {"tc_word": [k + 1 for k in tc.word], "T": tc.describe()},
        "depth": enum.max_depth,
        "scope": _label(enum),
        "verdicts": {
            "all_summands_compatible": compatible,
            "all_variables_have_T_denominator": denominators,
            "agree": compatible == denominators,
        },
        "counts": {"edges": len(enum.edges), "variables": len(verdicts), "clusters": len(enum.seeds)},
        "witnesses": ([{"side": "compatibility", **bad[0]}] if bad else [])
        + ([{"side": "denominator", **failing[0][1].to_json(failing[0][0])}] if failing else []),
    }


def verify_main2(wb: Workbench, tc: TiltingChoice, depth: int | None = None) -> dict:
    """Three conditions on ``T`` that should agree.

    (a) every enumerated variable has a T-denominator (bounded outside finite
    type); (b) no summand is regular of quasilength ``rank - 1``; (c) every
    summand has ``End_C(T_i)`` one-dimensional.
    """
    if wb.cls.kind not in ("dynkin", "affine-A", "rank2"):
        raise Unsupported(f"no tube data for {wb.cls}")
    inv = wb.inventory
    b_witness = [
        T.name() for T in tc.T if inv.is_regular(inv.get(T)) and inv.ql(inv.get(T)) == inv.tube_rank(inv.get(T)) - 1
    ]
    c_witness = [{"T": T.name(), "end_dim": wb.C.end_C(T)} for T in tc.T if wb.C.end_C(T) != 1]
    b, c = not b_witness, not c_witness
    if b != c:
        raise EngineInvariantError(f"quasilength and endomorphism criteria disagree: {b_witness} vs {c_witness}")
    enum = wb.enumerate_tc(tc, depth)
    verdicts = variable_verdicts(wb, tc, enum)
    failing = [(x, v) for x, v in verdicts if not v.holds]
    a = not failing
    witnesses = [{"condition": "b", "summand": name} for name in b_witness]
    witnesses += [{"condition": "c", **w} for w in c_witness]
    if failing:
        x, v = min(failing, key=lambda p: (len(enum.variable(p[0]).witness), p[0].raw_str()))
        witnesses.append({"condition": "a", **v.to_json(x)})
    return {
        "theorem": "main2",
        "instance": {"tc_word": [k + 1 for k in tc.word], "T": tc.describe(), "class": str(wb.cls)},
        "depth": enum.max_depth,
        "scope": _label(enum),
        "verdicts": {"a_bounded": a, "b": b, "c": c, "consistent": a == b == c},
        "counts": {"variables": len(verdicts), "clusters": len(enum.seeds)},
        "witnesses": witnesses,
    }


def tilting_words(wb: Workbench, depth: int | None = None) -> list[tuple[int, ...]]:
    """Words of the seeds reachable from the root (all of them in finite type)."""
    return [nd.path for nd in wb.root_enumeration(depth).seeds]


def verify_main3_finite(wb: Workbench) -> dict:
    """Every tilting choice against every cluster variable, exhaustively (finite type)."""
    if not wb.finite:
        raise Unsupported(f"exhaustive check needs finite type, got {wb.cls}")
    words = tilting_words(wb)
    total, failures, nvars = 0, [], set()
    for word in words:
        tc = wb.tilting_choice(word)
        enum = wb.enumerate_tc(tc)
        nvars.add(len(enum.variables))
        for x, v in variable_verdicts(wb, tc, enum):
            total += 1
            if not v.holds:
                failures.append({"tc_word": [k + 1 for k in word], **v.to_json(x)})
    if len(nvars) != 1:
        raise EngineInvariantError(f"variable counts differ between tilting seeds: {sorted(nvars)}")
    return {
        "theorem": "main3",
        "instance": {"class": str(wb.cls)},
        "depth": None,
        "scope": "exhaustive",
        "verdicts": {"all_hold": not failures, "count": total},
        "counts": {"tilting_choices": len(words), "variables": nvars.pop(), "verdicts": total},
        "witnesses": failures[:1],
    }


def verify_oldc3(wb: Workbench, tc: TiltingChoice, depth: int | None = None) -> dict:
    """The +1 identity for every inventory object in the boundary case of an enumerated edge."""
    enum = wb.enumerate_tc(tc, depth)
    checked, failures = 0, []
    for edge in enum.edges:
        ex = wb.edge_objects(enum, edge)
        for X in (ex.M, ex.Mstar):
            N = wb.inventory.tau_inv(X)
            res = exchange_compatible(wb.C, N, ex)
            checked += 1
            if not res.plus_one:
                failures.append({**_edge_witness(enum, edge, ex), "N": N.name(), **res.dims()})
    return {
        "theorem": "oldc3",
        "instance": {"tc_word": [k + 1 for k in tc.word]},
        "depth": enum.max_depth,
        "scope": _label(enum),
        "verdicts": {"all_hold": not failures},
        "counts": {"edges": len(enum.edges), "boundary_pairs": checked},
        "witnesses": failures[:1],
    }


def verify_lcm(wb: Workbench, tc: TiltingChoice, depth: int | None = None) -> dict:
    """lcm identity on edges where all summands are compatible; correction ``c`` elsewhere."""
    enum = wb.enumerate_tc(tc, depth)
    ok_edges, bad_identity, corrections = 0, [], []
    for edge in enum.edges:
        ex = wb.edge_objects(enum, edge)
        compat = all(exchange_compatible(wb.C, T, ex).compatible for T in tc.T)
        res = check_lcm_identity(wb.C, tc, ex)
        if compat:
            ok_edges += 1
            if not res.holds:
                bad_identity.append({**_edge_witness(enum, edge, ex), "c": list(res.c)})
        else:
            corrections.append({**_edge_witness(enum, edge, ex), "c": list(res.c), "nontrivial": res.nontrivial})
    trivial_c = [w for w in corrections if not w["nontrivial"]]
    return {
        "theorem": "lcm",
        "instance": {"tc_word": [k + 1 for k in tc.word], "T": tc.describe()},
        "depth": enum.max_depth,
        "scope": _label(enum),
        "verdicts": {
            "identity_on_compatible_edges": not bad_identity,
            "correction_nontrivial_elsewhere": not trivial_c,
        },
        "counts": {"compatible_edges": ok_edges, "incompatible_edges": len(corrections)},
        "witnesses": bad_identity[:1] + trivial_c[:1] + corrections[:1],
    }


def report_passes(report: dict) -> bool:
    """Whether a suite report matches what the theory predicts."""
    v = report["verdicts"]
    name = report["theorem"]
    if name == "main2":
        return v["consistent"]
    if name == "t-all":
        return v["agree"]
    if name == "lcm":
        return v["identity_on_compatible_edges"] and v["correction_nontrivial_elsewhere"]
    return v["all_hold"]
