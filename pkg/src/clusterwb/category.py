"""Indecomposable objects of the cluster category and their Hom dimensions.

Objects are modules over the path algebra or shifted projectives ``P_i[1]``.
Modules are identified by dimension vector, which is sound for the
exceptional objects handled here (and for their translates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import reps
from .exmatrix import ExchangeMatrix
from .reps import Quiver, QuiverRep


@dataclass(frozen=True, eq=False)
class IndecObject:
    """A module (``rep`` set) or a shifted projective (``vertex`` set).

    ``coords`` is filled in by the inventory: ``("finite", step, base)``,
    ``("preprojective", step, base)``, ``("preinjective", step, base)``,
    ``("regular", tube, socle_index, quasilength)`` or ``("shift", i)``.
    """

    kind: str
    dimvec: tuple[int, ...]
    rep: QuiverRep | None = None
    vertex: int | None = None
    coords: tuple[Any, ...] | None = None
    label: str = ""

    @property
    def key(self) -> tuple:
        if self.kind == "shift":
            return ("shift", self.vertex)
        return ("module", self.dimvec)

    @property
    def is_module(self) -> bool:
        return self.kind == "module"

    @property
    def is_shift(self) -> bool:
        return self.kind == "shift"

    def __eq__(self, other) -> bool:
        return isinstance(other, IndecObject) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def name(self) -> str:
        if self.label:
            return self.label
        if self.kind == "shift":
            return f"P{self.vertex + 1}[1]"
        if sum(self.dimvec) == 1:
            return f"S{self.dimvec.index(1) + 1}"
        return "M" + "".join(str(d) for d in self.dimvec) if max(self.dimvec) < 10 else f"M{list(self.dimvec)}"

    def __repr__(self) -> str:
        return f"IndecObject({self.name()})"


class NormalizationError(AssertionError):
    pass


class ClusterCategory:
    """Cluster category of an acyclic quiver, with memoized Hom dimensions.

    Every module is handled through an explicit representation; translates
    are computed on matrices.  Caches are filled single-threaded and only
    read afterwards.
    """

    def __init__(self, matrix: ExchangeMatrix):
        self.matrix = matrix
        self.quiver = Quiver.from_matrix(matrix)
        self.n = matrix.n
        self._proj = [self.module(reps.projective(self.quiver, i), label=f"P{i + 1}") for i in range(self.n)]
        pdims = {p.dimvec: p for p in self._proj}
        self._inj = []
        for i in range(self.n):
            rep = reps.injective(self.quiver, i)
            self._inj.append(pdims.get(rep.dims) or self.module(rep, label=f"I{i + 1}"))
        self._proj_index = {p.dimvec: i for i, p in enumerate(self._proj)}
        self._inj_index = {p.dimvec: i for i, p in enumerate(self._inj)}
        self._tau: dict[tuple, IndecObject] = {}
        self._tau_inv: dict[tuple, IndecObject] = {}
        self._hom_h: dict[tuple, int] = {}
        self._hom_c: dict[tuple, int] = {}

    # -- objects ------------------------------------------------------------

    def module(self, rep: QuiverRep, **kw) -> IndecObject:
        return IndecObject("module", rep.dims, rep=rep, **kw)

    def projective(self, i: int) -> IndecObject:
        return self._proj[i]

    def injective(self, i: int) -> IndecObject:
        return self._inj[i]

    def simple(self, i: int) -> IndecObject:
        return self.module(reps.simple(self.quiver, i))

    def shift(self, i: int) -> IndecObject:
        return IndecObject("shift", tuple(-int(v == i) for v in range(self.n)), vertex=i)

    def projective_vertex(self, X: IndecObject) -> int | None:
        """``i`` with ``X = P_i``, else None."""
        if not X.is_module:
            return None
        return self._proj_index.get(X.dimvec)

    def injective_vertex(self, X: IndecObject) -> int | None:
        if not X.is_module:
            return None
        return self._inj_index.get(X.dimvec)

    # -- translate ------------------------------------------------------------

    def tau(self, X: IndecObject) -> IndecObject:
        """``tau P_i = P_i[1]``, ``tau P_i[1] = I_i``, otherwise ``D Tr``."""
        if X.key in self._tau:
            return self._tau[X.key]
        if X.is_shift:
            out = self._inj[X.vertex]
        else:
            i = self.projective_vertex(X)
            if i is not None:
                out = self.shift(i)
            else:
                out = self.module(reps.tau(X.rep))
                if out.rep.is_zero():
                    raise NormalizationError(f"tau of non-projective {X.name()} vanished")
        self._tau[X.key] = out
        self._tau_inv.setdefault(out.key, X)
        return out

    def tau_inv(self, X: IndecObject) -> IndecObject:
        """``tau^-1 P_i[1] = P_i``, ``tau^-1 I_i = P_i[1]``, otherwise ``Tr D``."""
        if X.key in self._tau_inv:
            return self._tau_inv[X.key]
        if X.is_shift:
            out = self._proj[X.vertex]
        else:
            i = self.injective_vertex(X)
            if i is not None:
                out = self.shift(i)
            else:
                out = self.module(reps.tau_inv(X.rep))
                if out.rep.is_zero():
                    raise NormalizationError(f"tau^-1 of non-injective {X.name()} vanished")
        self._tau_inv[X.key] = out
        self._tau.setdefault(out.key, X)
        return out

    # -- module category ----------------------------------------------------

    def euler(self, X: IndecObject, Y: IndecObject) -> int:
        return self.quiver.euler(X.dimvec, Y.dimvec)

    def hom_H(self, X: IndecObject, Y: IndecObject) -> int:
        if not (X.is_module and Y.is_module):
            raise ValueError("hom_H takes modules")
        key = (X.dimvec, Y.dimvec)
        if key not in self._hom_h:
            self._hom_h[key] = reps.hom_dim(X.rep, Y.rep)
        return self._hom_h[key]

    def ext1_H(self, X: IndecObject, Y: IndecObject) -> int:
        val = self.hom_H(X, Y) - self.euler(X, Y)
        if val < 0:
            raise ArithmeticError(f"negative Ext^1 between {X.name()} and {Y.name()}")
        return val

    # -- cluster category ---------------------------------------------------

    def hom_C(self, X: IndecObject, Y: IndecObject) -> int:
        """``dim Hom_C(X, Y) = dim Hom_D(X, Y) + dim Hom_D(X, F Y)``, ``F = tau^-1 [1]``.

        For modules the F-part is ``Ext^1_H(X, tau^-1 Y)``, and zero when ``Y``
        is injective.  Shifted projectives are moved to modules through
        ``Hom_C(X, Y) = Hom_C(tau^-1 X, tau^-1 Y)`` or ``(tau X, tau Y)``.
        """
        key = (X.key, Y.key)
        if key in self._hom_c:
            return self._hom_c[key]
        if X.is_module and Y.is_module:
            val = self.hom_H(X, Y)
            if self.injective_vertex(Y) is None:
                val += self.ext1_H(X, self.tau_inv(Y))
        elif X.is_shift and Y.is_shift:
            val = self.hom_C(self._proj[X.vertex], self._proj[Y.vertex])
        elif X.is_shift:
            # (P_i[1], Y) -> (P_i, tau^-1 Y); tau^-1 I_j = P_j[1] gives (P_i, P_j[1])
            val = self.hom_C(self._proj[X.vertex], self.tau_inv(Y))
        else:
            if self.projective_vertex(X) is not None:
                # Hom_D(P_i, P_j[1]) = Ext^1(P_i, P_j) = 0 and Hom_D(P_i, F P_j[1]) lives in degree 2
                val = 0
            else:
                val = self.hom_C(self.tau(X), self._inj[Y.vertex])
        if val < 0:
            raise NormalizationError("negative Hom dimension")
        self._hom_c[key] = val
        return val

    def ext1_C(self, X: IndecObject, Y: IndecObject) -> int:
        """``Ext^1_C(X, Y) = Hom_C(X, tau Y)``."""
        return self.hom_C(X, self.tau(Y))

    def end_C(self, X: IndecObject) -> int:
        return self.hom_C(X, X)

    def is_cluster_tilting(self, objs) -> bool:
        objs = list(objs)
        if len(set(objs)) != len(objs) or len(objs) != self.n:
            return False
        return all(self.ext1_C(a, b) == 0 for a in objs for b in objs)
