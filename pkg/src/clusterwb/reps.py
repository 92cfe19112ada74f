"""Representations of acyclic quivers over the rationals.

Arrows are indexed; a path is a tuple of arrow indices read from source to
target.  A representation stores one matrix per arrow of shape
``dims[target] x dims[source]`` acting on column vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .exmatrix import ExchangeMatrix, is_acyclic

Path = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...]
    _paths: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @classmethod
    def from_matrix(cls, B: ExchangeMatrix) -> "Quiver":
        if not is_acyclic(B):
            raise ValueError("representations are only set up for acyclic quivers")
        arrows = []
        for i, j, m in B.arrows():
            arrows += [(i, j)] * m
        return cls(B.n, tuple(arrows))

    def opposite(self) -> "Quiver":
        if "opp" not in self._paths:
            self._paths["opp"] = Quiver(self.n, tuple((t, s) for s, t in self.arrows))
        return self._paths["opp"]

    def paths(self, i: int, j: int) -> list[Path]:
        """All paths from ``i`` to ``j`` (the trivial path when ``i == j``)."""
        key = (i, j)
        if key not in self._paths:
            if i == j:
                out = [()]
            else:
                out = []
                for a, (s, t) in enumerate(self.arrows):
                    if s == i:
                        out += [(a,) + p for p in self.paths(t, j)]
            self._paths[key] = out
        return self._paths[key]

    def path_index(self, i: int, j: int) -> dict[Path, int]:
        key = ("idx", i, j)
        if key not in self._paths:
            self._paths[key] = {p: k for k, p in enumerate(self.paths(i, j))}
        return self._paths[key]

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a == (i, j))

    @cached_property
    def euler_matrix(self) -> tuple[tuple[int, ...], ...]:
        E = [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        for s, t in self.arrows:
            E[s][t] -= 1
        return tuple(map(tuple, E))

    def euler(self, d: Sequence[int], e: Sequence[int]) -> int:
        """Euler form ``<d, e> = sum d_i e_i - sum_{a: i->j} d_i e_j``."""
        val = sum(x * y for x, y in zip(d, e))
        for s, t in self.arrows:
            val -= d[s] * e[t]
        return val


def _zero(r: int, c: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * c for _ in range(r)]


@dataclass(frozen=True, eq=False)
class QuiverRep:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        if len(self.dims) != self.quiver.n or len(self.maps) != len(self.quiver.arrows):
            raise ValueError("dimension or map count does not match the quiver")
        for (s, t), m in zip(self.quiver.arrows, self.maps):
            if len(m) != self.dims[t] or any(len(row) != self.dims[s] for row in m):
                raise ValueError("map shape inconsistent with dimension vector")

    @classmethod
    def build(cls, quiver: Quiver, dims: Sequence[int], maps: Sequence[Sequence[Sequence]]) -> "QuiverRep":
        return cls(
            quiver,
            tuple(dims),
            tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in maps),
        )

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_map(self, path: Path, start: int) -> list[list[Fraction]]:
        """Matrix of the composite along ``path`` starting at vertex ``start``."""
        d = self.dims[start]
        M = [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]
        for a in path:
            M = linalg.matmul([list(r) for r in self.maps[a]], M, d)
        return M

    def __repr__(self) -> str:
        return f"QuiverRep(dims={self.dims})"


def dual(M: QuiverRep) -> QuiverRep:
    Q = M.quiver
    maps = []
    for (s, t), m in zip(Q.arrows, M.maps):
        # m is dims[t] x dims[s]; dual is dims[s] x dims[t]
        maps.append(tuple(tuple(m[i][j] for i in range(M.dims[t])) for j in range(M.dims[s])))
    return QuiverRep(Q.opposite(), M.dims, tuple(maps))


# ---------------------------------------------------------------------------
# standard modules


def projective(Q: Quiver, i: int) -> QuiverRep:
    """``P_i``: basis at ``v`` is the set of paths ``i -> v``; arrows append."""
    dims = [len(Q.paths(i, v)) for v in range(Q.n)]
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        m = _zero(dims[t], dims[s])
        idx = Q.path_index(i, t)
        for c, p in enumerate(Q.paths(i, s)):
            m[idx[p + (a,)]][c] = Fraction(1)
        maps.append(m)
    return QuiverRep.build(Q, dims, maps)


def injective(Q: Quiver, i: int) -> QuiverRep:
    """``I_i``: basis at ``v`` dual to paths ``v -> i``; an arrow strips itself off the front."""
    dims = [len(Q.paths(v, i)) for v in range(Q.n)]
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        m = _zero(dims[t], dims[s])
        idx = Q.path_index(t, i)
        for c, p in enumerate(Q.paths(s, i)):
            if p and p[0] == a:
                m[idx[p[1:]]][c] = Fraction(1)
        maps.append(m)
    return QuiverRep.build(Q, dims, maps)


def simple(Q: Quiver, i: int) -> QuiverRep:
    dims = [int(v == i) for v in range(Q.n)]
    return QuiverRep.build(Q, dims, [_zero(dims[t], dims[s]) for s, t in Q.arrows])


def zero_rep(Q: Quiver) -> QuiverRep:
    return QuiverRep.build(Q, [0] * Q.n, [[] for _ in Q.arrows])


# ---------------------------------------------------------------------------
# Hom and Ext


def hom_dim(X: QuiverRep, Y: QuiverRep) -> int:
    """Dimension of the space of intertwiners ``phi`` with ``phi_t X_a = Y_a phi_s``."""
    Q = X.quiver
    dx, dy = X.dims, Y.dims
    offs, total = [], 0
    for v in range(Q.n):
        offs.append(total)
        total += dy[v] * dx[v]
    if total == 0:
        return 0
    rows = []
    for a, (s, t) in enumerate(Q.arrows):
        Xa, Ya = X.maps[a], Y.maps[a]
        for r in range(dy[t]):
            for c in range(dx[s]):
                row: dict[int, Fraction] = {}
                # (phi_t X_a)[r][c]
                for j in range(dx[t]):
                    x = Xa[j][c]
                    if x:
                        k = offs[t] + r * dx[t] + j
                        row[k] = row.get(k, 0) + x
                # -(Y_a phi_s)[r][c]
                for j in range(dy[s]):
                    y = Ya[r][j]
                    if y:
                        k = offs[s] + j * dx[s] + c
                        row[k] = row.get(k, 0) - y
                row = {k: v for k, v in row.items() if v}
                if row:
                    rows.append(row)
    return total - linalg.rank_sparse(rows, total)


def ext1_dim(X: QuiverRep, Y: QuiverRep) -> int:
    """``dim Ext^1 = dim Hom - <dim X, dim Y>`` (no higher Ext over a path algebra)."""
    val = hom_dim(X, Y) - X.quiver.euler(X.dims, Y.dims)
    if val < 0:
        raise ArithmeticError(f"negative Ext dimension {val} for {X.dims}, {Y.dims}")
    return val


# ---------------------------------------------------------------------------
# subrepresentations and the Auslander-Reiten translate


def _restrict(Q: Quiver, ambient_maps, bases, dims_amb) -> QuiverRep:
    """Subrepresentation spanned at each vertex by ``bases[v]`` (lists of vectors)."""
    maps = []
    for a, (s, t) in enumerate(Q.arrows):
        images = [linalg.matvec(ambient_maps[a], b) for b in bases[s]]
        maps.append(linalg.coordinates(bases[t], images, dims_amb[t]))
    return QuiverRep.build(Q, [len(b) for b in bases], maps)


def top_generators(M: QuiverRep) -> list[tuple[int, list[Fraction]]]:
    """Vectors ``(v, m)`` spanning a complement of the radical at each vertex."""
    Q = M.quiver
    gens = []
    for v in range(Q.n):
        if M.dims[v] == 0:
            continue
        rad = []
        for a, (s, t) in enumerate(Q.arrows):
            if t == v and M.dims[s]:
                rad += [[M.maps[a][r][c] for r in range(M.dims[v])] for c in range(M.dims[s])]
        gens += [(v, g) for g in linalg.extend_to_complement(rad, M.dims[v])]
    return gens


def top_dims(M: QuiverRep) -> tuple[int, ...]:
    out = [0] * M.quiver.n
    for v, _ in top_generators(M):
        out[v] += 1
    return tuple(out)


def is_projective(M: QuiverRep) -> bool:
    """The projective cover ``P0 -> M`` is onto; ``M`` is projective iff dimensions agree."""
    Q = M.quiver
    t = top_dims(M)
    return sum(t[v] * len(Q.paths(v, w)) for v in range(Q.n) for w in range(Q.n)) == M.total_dim


def is_injective(M: QuiverRep) -> bool:
    return is_projective(dual(M))


class _FreeSum:
    """Direct sum of ``P_u`` (or ``I_u``) summands indexed by generator vertices."""

    def __init__(self, Q: Quiver, vertices: Sequence[int], injective: bool = False):
        self.Q, self.vertices, self.inj = Q, list(vertices), injective
        self.offsets = []  # offsets[w][g]
        self.dims = []
        for w in range(Q.n):
            offs, tot = [], 0
            for u in self.vertices:
                offs.append(tot)
                tot += len(self._basis(u, w))
            self.offsets.append(offs)
            self.dims.append(tot)

    def _basis(self, u: int, w: int) -> list[Path]:
        return self.Q.paths(w, u) if self.inj else self.Q.paths(u, w)

    def arrow_maps(self) -> list[list[list[Fraction]]]:
        Q = self.Q
        maps = []
        for a, (s, t) in enumerate(Q.arrows):
            m = _zero(self.dims[t], self.dims[s])
            for g, u in enumerate(self.vertices):
                if self.inj:
                    idx = Q.path_index(t, u)
                    for c, p in enumerate(Q.paths(s, u)):
                        if p and p[0] == a:
                            m[self.offsets[t][g] + idx[p[1:]]][self.offsets[s][g] + c] = Fraction(1)
                else:
                    idx = Q.path_index(u, t)
                    for c, p in enumerate(Q.paths(u, s)):
                        m[self.offsets[t][g] + idx[p + (a,)]][self.offsets[s][g] + c] = Fraction(1)
            maps.append(m)
        return maps


def tau(M: QuiverRep) -> QuiverRep:
    """Auslander-Reiten translate ``D Tr M`` of a representation.

    With ``0 -> P1 -f-> P0 -> M -> 0`` the minimal projective resolution,
    ``tau M`` is the kernel of the Nakayama image ``I(P1) -> I(P0)``.
    Projective summands are killed, so ``tau(P) = 0``.
    """
    Q = M.quiver
    gens0 = top_generators(M)
    P0 = _FreeSum(Q, [u for u, _ in gens0])
    # projective cover pi: P0 -> M
    pi = []
    for w in range(Q.n):
        cols = []
        for g, (u, m) in enumerate(gens0):
            for p in Q.paths(u, w):
                cols.append(linalg.matvec(M.path_map(p, u), m))
        pi.append(linalg.columns_to_matrix(cols, M.dims[w]))
    kern = [linalg.nullspace(pi[w], P0.dims[w]) for w in range(Q.n)]
    P0maps = P0.arrow_maps()
    K = _restrict(Q, P0maps, kern, P0.dims)
    gens1 = []
    for v, kc in top_generators(K):
        vec = [sum((c * b[i] for c, b in zip(kc, kern[v])), Fraction(0)) for i in range(P0.dims[v])]
        gens1.append((v, vec))
    if not gens1:
        return zero_rep(Q)
    I1 = _FreeSum(Q, [v for v, _ in gens1], injective=True)
    I0 = _FreeSum(Q, [u for u, _ in gens0], injective=True)
    nu_f = []
    for w in range(Q.n):
        m = _zero(I0.dims[w], I1.dims[w])
        for h, (v, vec) in enumerate(gens1):
            for g, (u, _) in enumerate(gens0):
                comp = [(p, vec[P0.offsets[v][g] + k]) for k, p in enumerate(Q.paths(u, v))]
                comp = [(p, c) for p, c in comp if c]
                if not comp:
                    continue
                sidx = Q.path_index(w, u)
                for ci, r in enumerate(Q.paths(w, v)):
                    for p, c in comp:
                        if len(p) <= len(r) and r[len(r) - len(p):] == p:
                            s = r[: len(r) - len(p)]
                            if s in sidx:
                                m[I0.offsets[w][g] + sidx[s]][I1.offsets[w][h] + ci] += c
        nu_f.append(m)
    kern1 = [linalg.nullspace(nu_f[w], I1.dims[w]) for w in range(Q.n)]
    return _restrict(Q, I1.arrow_maps(), kern1, I1.dims)


def tau_inv(M: QuiverRep) -> QuiverRep:
    """Inverse translate ``Tr D``, computed as ``D tau_{Q^op} D``."""
    out = dual(tau(dual(M)))
    return QuiverRep(M.quiver, out.dims, out.maps)


def coxeter(Q: Quiver, d: Sequence[int]) -> tuple[int, ...]:
    """Coxeter transformation ``-E^{-1} E^T d`` on dimension vectors."""
    E = [list(map(Fraction, r)) for r in Q.euler_matrix]
    Et = [[E[j][i] for j in range(Q.n)] for i in range(Q.n)]
    rhs = linalg.matvec(Et, d)
    # solve E x = -rhs (E is unitriangular up to a vertex ordering, hence invertible)
    aug = [E[i] + [-rhs[i]] for i in range(Q.n)]
    R, piv = linalg.rref(aug, Q.n + 1)
    x = [Fraction(0)] * Q.n
    for row, p in zip(R, piv):
        x[p] = row[Q.n]
    return tuple(int(v) for v in x)
