"""Exceptional-object inventory, component coordinates, alpha and t-vectors.

Supported root classes are Dynkin, affine A and rank two.  Regular objects
only occur for affine A, where every exceptional regular module is thin and
supported on a proper arc of the cycle; the tube atlas is read off from those.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from . import linalg, reps
from .category import ClusterCategory, IndecObject
from .exmatrix import ExchangeMatrix, QuiverClass, classify_quiver, cycle_order


class Unsupported(ValueError):
    """The quiver class or object lies outside what the inventory handles."""


class ResolutionError(LookupError):
    """A denominator vector has no matching inventory object."""


def null_root(C: ClusterCategory) -> tuple[int, ...] | None:
    """Positive primitive generator of the radical of the symmetrized Euler form."""
    E = C.quiver.euler_matrix
    n = C.n
    sym = [[E[i][j] + E[j][i] for j in range(n)] for i in range(n)]
    basis = linalg.nullspace(sym, n)
    if len(basis) != 1:
        return None
    v = basis[0]
    den = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * den) for x in v]
    if all(x <= 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        return None
    g = gcd(*ints)
    return tuple(x // g for x in ints)


@dataclass(frozen=True)
class Tube:
    rank: int
    quasisimples: tuple[IndecObject, ...]  # E_s with E_{s+1} = tau^-1 E_s


@dataclass
class TubeAtlas:
    tubes: list[Tube]
    regular: dict[tuple[int, ...], IndecObject] = field(default_factory=dict)

    def quasisimple_dims(self) -> set[tuple[int, ...]]:
        return {q.dimvec for t in self.tubes for q in t.quasisimples}

    def wing_dims(self, tube: int, socle: int, ql: int) -> tuple[int, ...]:
        t = self.tubes[tube]
        out = [0] * len(t.quasisimples[0].dimvec)
        for j in range(ql):
            for v, d in enumerate(t.quasisimples[(socle + j) % t.rank].dimvec):
                out[v] += d
        return tuple(out)


def _arc_module(C: ClusterCategory, arc: Sequence[int]) -> reps.QuiverRep:
    support = set(arc)
    dims = [int(v in support) for v in range(C.n)]
    maps = []
    for s, t in C.quiver.arrows:
        maps.append([[1]] if s in support and t in support else [[0] * dims[s] for _ in range(dims[t])])
    return reps.QuiverRep.build(C.quiver, dims, maps)


def build_tube_atlas(C: ClusterCategory, cls: QuiverClass) -> TubeAtlas:
    """Exceptional tubes of an affine-A quiver from its thin defect-zero arc modules."""
    if cls.kind != "affine-A":
        return TubeAtlas([])
    order = cycle_order(C.matrix)
    n = C.n
    delta = (1,) * n
    regular: dict[tuple[int, ...], IndecObject] = {}
    for start in range(n):
        for length in range(1, n):
            arc = [order[(start + j) % n] for j in range(length)]
            rep = _arc_module(C, arc)
            if C.quiver.euler(delta, rep.dims) == 0:
                regular.setdefault(rep.dims, C.module(rep))
    dims_set = set(regular)
    simple_dims = []
    for d in sorted(dims_set):
        split = any(
            tuple(a - b for a, b in zip(d, e)) in dims_set for e in dims_set if e != d and all(x <= y for x, y in zip(e, d))
        )
        if not split:
            simple_dims.append(d)
    seen: set[tuple[int, ...]] = set()
    tubes = []
    for d in simple_dims:
        if d in seen:
            continue
        orbit = [regular[d]]
        while True:
            nxt = C.tau_inv(orbit[-1])
            if nxt.dimvec == d:
                break
            if nxt.dimvec not in simple_dims or len(orbit) > n:
                raise AssertionError(f"tau^-1 does not permute quasisimples: {nxt.dimvec}")
            orbit.append(regular[nxt.dimvec])
        seen.update(o.dimvec for o in orbit)
        tubes.append(Tube(len(orbit), tuple(orbit)))
    tubes.sort(key=lambda t: (t.rank, min(q.dimvec for q in t.quasisimples)))
    # every quasisimple orbit starts at its smallest dimension vector
    fixed = []
    for t in tubes:
        s0 = min(range(t.rank), key=lambda s: t.quasisimples[s].dimvec)
        fixed.append(Tube(t.rank, t.quasisimples[s0:] + t.quasisimples[:s0]))
    expected = sorted(r for r in cls.pq if r >= 2)
    if sorted(t.rank for t in fixed) != expected:
        raise AssertionError(f"tube ranks {[t.rank for t in fixed]} disagree with {cls}")
    return TubeAtlas(fixed, regular)


class Inventory:
    """Exceptional objects of the cluster category of an acyclic root quiver.

    ``depth`` bounds the transjective tau-orbits in infinite type; Dynkin
    inventories are always complete.
    """

    def __init__(self, matrix: ExchangeMatrix, depth: int = 6, category: ClusterCategory | None = None):
        self.cls = classify_quiver(matrix)
        if not (self.cls.is_dynkin or self.cls.kind in ("affine-A", "rank2")):
            raise Unsupported(f"inventory is not available for {self.cls}")
        if depth < 0:
            raise ValueError("depth must be non-negative")
        self.C = category or ClusterCategory(matrix)
        self.n = self.C.n
        self.delta = null_root(self.C) if not self.cls.is_dynkin else None
        self.atlas = build_tube_atlas(self.C, self.cls)
        self.depth = -1
        self.objects: list[IndecObject] = []
        self._by_key: dict[tuple, IndecObject] = {}
        self._preproj: list[list[IndecObject]] = [[] for _ in range(self.n)]
        self._preinj: list[list[IndecObject]] = [[] for _ in range(self.n)]
        for i in range(self.n):
            self._add(replace(self.C.shift(i), coords=("shift", i)))
        if self.cls.is_dynkin:
            self._build_dynkin()
        else:
            self._add_tubes()
            self.extend(depth)

    # -- construction -------------------------------------------------------

    def _add(self, X: IndecObject) -> IndecObject:
        if X.key in self._by_key:
            raise AssertionError(f"duplicate dimension vector {X.dimvec}")
        if X.is_module:
            if self.C.hom_H(X, X) != 1 or self.C.ext1_H(X, X) != 0:
                raise AssertionError(f"{X.name()} is not exceptional")
        self._by_key[X.key] = X
        self.objects.append(X)
        return X

    def _build_dynkin(self) -> None:
        for i in range(self.n):
            X = self.C.projective(i)
            step = 0
            while X.is_module:
                self._add(replace(X, coords=("finite", step, i)))
                X = self.C.tau_inv(X)
                step += 1
        self.depth = max((x.coords[1] for x in self.objects if x.is_module), default=0)

    def _add_tubes(self) -> None:
        for ti, tube in enumerate(self.atlas.tubes):
            for ql in range(1, tube.rank):
                for s in range(tube.rank):
                    d = self.atlas.wing_dims(ti, s, ql)
                    X = self.atlas.regular.get(d)
                    if X is None:
                        raise AssertionError(f"missing regular module with dims {d}")
                    self._add(replace(X, coords=("regular", ti, s, ql)))
        if len(self.regulars()) != len(self.atlas.regular):
            raise AssertionError("thin regular modules not covered by the tube atlas")

    def extend(self, depth: int) -> None:
        """Grow transjective orbits up to ``depth`` tau-steps (infinite type only)."""
        if self.cls.is_dynkin:
            return
        for i in range(self.n):
            for step in range(len(self._preproj[i]), depth + 1):
                prev = self._preproj[i][-1] if self._preproj[i] else None
                X = self.C.projective(i) if prev is None else self.C.tau_inv(prev)
                self._preproj[i].append(self._add(replace(X, coords=("preprojective", step, i))))
            for step in range(len(self._preinj[i]), depth + 1):
                prev = self._preinj[i][-1] if self._preinj[i] else None
                X = self.C.injective(i) if prev is None else self.C.tau(prev)
                self._preinj[i].append(self._add(replace(X, coords=("preinjective", step, i))))
        self.depth = max(self.depth, depth)

    # -- queries ----------------------------------------------------------

    def modules(self) -> list[IndecObject]:
        return [x for x in self.objects if x.is_module]

    def regulars(self) -> list[IndecObject]:
        return [x for x in self.objects if x.coords and x.coords[0] == "regular"]

    def __iter__(self):
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def get(self, X: IndecObject) -> IndecObject:
        """The stored copy of ``X`` (with coordinates)."""
        return self._by_key[X.key]

    def find(self, dims: Sequence[int], grow_to: int = 64) -> IndecObject:
        """Module with dimension vector ``dims``, growing transjective orbits if needed."""
        key = ("module", tuple(dims))
        target = sum(dims)
        while key not in self._by_key:
            if self.cls.is_dynkin or self.depth >= grow_to:
                raise ResolutionError(f"no exceptional object with dimension vector {list(dims)}")
            frontier = [orb[-1].dimvec for orb in self._preproj + self._preinj]
            if min(sum(d) for d in frontier) > target:
                raise ResolutionError(f"no exceptional object with dimension vector {list(dims)}")
            self.extend(self.depth + 1)
        return self._by_key[key]

    def lookup(self, X: IndecObject) -> IndecObject:
        if X.is_shift:
            return self._by_key[X.key]
        return self.find(X.dimvec)

    def tau(self, X: IndecObject) -> IndecObject:
        return self.lookup(self.C.tau(X))

    def tau_inv(self, X: IndecObject) -> IndecObject:
        return self.lookup(self.C.tau_inv(X))

    def defect(self, X: IndecObject) -> int | None:
        if self.delta is None:
            return None
        return self.C.quiver.euler(self.delta, X.dimvec)

    def ql(self, X: IndecObject) -> int | None:
        c = self.get(X).coords
        return c[3] if c[0] == "regular" else None

    def tube_rank(self, X: IndecObject) -> int | None:
        c = self.get(X).coords
        return self.atlas.tubes[c[1]].rank if c[0] == "regular" else None

    def is_regular(self, X: IndecObject) -> bool:
        return self.ql(X) is not None

    def dump(self) -> list[dict]:
        out = []
        for idx, x in enumerate(self.objects):
            out.append({"id": idx, "name": x.name(), "kind": x.kind, "dimvec": list(x.dimvec), "coords": list(x.coords)})
        return out

    def dump_json(self) -> str:
        return json.dumps(self.dump(), indent=1)


def build_inventory(matrix: ExchangeMatrix, depth: int = 6) -> Inventory:
    return Inventory(matrix, depth)


def classify(inv: Inventory, X: IndecObject, max_steps: int = 256) -> tuple:
    """Component coordinates of ``X``; computed directly when ``X`` is not stored."""
    if X.key in inv._by_key:
        return inv._by_key[X.key].coords
    if X.is_shift:
        return ("shift", X.vertex)
    C = inv.C
    if inv.cls.is_dynkin:
        raise ResolutionError(f"{X.name()} is not an indecomposable exceptional module")
    d = inv.defect(X)
    if d == 0:
        raise Unsupported(f"regular module {X.name()} outside the exceptional tubes")
    if d is None:
        # rank two without a null root: transjective direction by growth
        d = -1 if sum(C.tau(X).dimvec) < sum(X.dimvec) else 1
    Y, step = X, 0
    if d < 0:
        while (i := C.projective_vertex(Y)) is None:
            Y, step = C.tau(Y), step + 1
            if step > max_steps:
                raise Unsupported("tau-walk to a projective did not terminate")
        return ("preprojective", step, i)
    while (i := C.injective_vertex(Y)) is None:
        Y, step = C.tau_inv(Y), step + 1
        if step > max_steps:
            raise Unsupported("tau-walk to an injective did not terminate")
    return ("preinjective", step, i)


def alpha(inv: Inventory, dvec: Sequence[int]) -> IndecObject:
    """Object whose dimension vector is the denominator vector ``dvec`` w.r.t. the root."""
    dvec = tuple(dvec)
    neg = [i for i, d in enumerate(dvec) if d < 0]
    if neg:
        if len(neg) == 1 and dvec[neg[0]] == -1 and all(d == 0 for i, d in enumerate(dvec) if i != neg[0]):
            return inv._by_key[("shift", neg[0])]
        raise ResolutionError(f"denominator vector {list(dvec)} is neither positive nor -e_i")
    if not any(dvec):
        raise ResolutionError("zero denominator vector")
    return inv.find(dvec)


def t_vector(C: ClusterCategory, T: Sequence[IndecObject], M: IndecObject, check: bool = True) -> tuple[int, ...]:
    """``(dim Hom_C(T_i, M))_i``; ``T`` must be cluster-tilting."""
    if check and not C.is_cluster_tilting(T):
        raise ValueError("T is not a cluster-tilting object")
    return tuple(C.hom_C(t, M) for t in T)
