"""Seeds, seed mutation and breadth-first exchange-graph enumeration."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .exmatrix import ExchangeMatrix, classify_quiver, find_acyclic_word
from .laurent import LaurentPoly, denominator_vector, exact_div, variables


class EngineInvariantError(AssertionError):
    """An internal consistency check failed; results cannot be trusted."""


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPoly, ...]
    matrix: ExchangeMatrix
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.cluster) != self.matrix.n:
            raise ValueError("cluster size does not match the exchange matrix")
        if len(set(self.cluster)) != len(self.cluster):
            raise EngineInvariantError("cluster entries must be pairwise distinct")

    @classmethod
    def initial(cls, matrix: ExchangeMatrix) -> "Seed":
        return cls(variables(matrix.n), matrix, ())

    @property
    def n(self) -> int:
        return self.matrix.n

    def key(self) -> frozenset:
        return frozenset(self.cluster)

    def mutate(self, k: int) -> "Seed":
        return mutate_seed(self, k)

    def mutate_word(self, word: Sequence[int]) -> "Seed":
        s = self
        for k in word:
            s = mutate_seed(s, k)
        return s

    def to_json(self, var: str = "y") -> dict:
        return {
            "n": self.n,
            "word": [k + 1 for k in self.word],
            "cluster": [x.fraction_str(var) for x in self.cluster],
            "matrix": [list(row) for row in self.matrix.b],
        }


@dataclass(frozen=True)
class ExchangePairRecord:
    """Variable-level exchange data at position ``k`` of a seed.

    ``bplus``/``bminus`` list ``(position, multiplicity)``; ``bplus`` collects
    arrows into ``k`` and is the side labelled B.
    """

    k: int
    xM: LaurentPoly
    xMstar: LaurentPoly
    bplus: tuple[tuple[int, int], ...]
    bminus: tuple[tuple[int, int], ...]

    def monomials(self, cluster: Sequence[LaurentPoly]) -> tuple[LaurentPoly, LaurentPoly]:
        n = self.xM.n
        plus = LaurentPoly.constant(1, n)
        minus = LaurentPoly.constant(1, n)
        for i, m in self.bplus:
            plus = plus * cluster[i] ** m
        for i, m in self.bminus:
            minus = minus * cluster[i] ** m
        return plus, minus


def _exchange_monomials(s: Seed, k: int):
    n = s.n
    bplus = tuple((i, s.matrix.b[i][k]) for i in range(n) if s.matrix.b[i][k] > 0)
    bminus = tuple((i, -s.matrix.b[i][k]) for i in range(n) if s.matrix.b[i][k] < 0)
    return bplus, bminus


def _exchange_sum(s: Seed, k: int):
    bplus, bminus = _exchange_monomials(s, k)
    one = LaurentPoly.constant(1, s.cluster[0].n)
    plus, minus = one, one
    for i, m in bplus:
        plus = plus * s.cluster[i] ** m
    for i, m in bminus:
        minus = minus * s.cluster[i] ** m
    return bplus, bminus, plus + minus


def mutate_seed(s: Seed, k: int) -> Seed:
    if not 0 <= k < s.n:
        raise IndexError(f"mutation index {k} out of range for n={s.n}")
    _, _, rhs = _exchange_sum(s, k)
    new = exact_div(rhs, s.cluster[k])
    cluster = s.cluster[:k] + (new,) + s.cluster[k + 1:]
    return Seed(cluster, s.matrix.mutate(k), s.word + (k,))


def exchange_data(s: Seed, k: int, new: LaurentPoly | None = None) -> ExchangePairRecord:
    """Exchange record at ``k``; ``new`` is the mutated variable if already known.

    The exchange relation is re-checked by multiplication.
    """
    bplus, bminus, rhs = _exchange_sum(s, k)
    if new is None:
        new = exact_div(rhs, s.cluster[k])
    if s.cluster[k] * new != rhs:
        raise EngineInvariantError(f"exchange relation fails at position {k + 1}")
    return ExchangePairRecord(k, s.cluster[k], new, bplus, bminus)


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class SeedNode:
    index: int
    views: tuple[Seed, ...]
    depth: int
    path: tuple[int, ...]

    @property
    def seed(self) -> Seed:
        return self.views[0]


@dataclass(frozen=True)
class Edge:
    """Mutation of ``source`` at position ``k``, landing on ``target``.

    The new variable sits at ``target_pos`` in the stored target cluster,
    which may be a permutation of the mutated cluster.  ``records`` holds the
    exchange data in every view of the source seed.
    """

    source: int
    k: int
    target: int
    target_pos: int
    records: tuple[ExchangePairRecord, ...]


@dataclass(frozen=True)
class ClusterVariableRecord:
    poly: LaurentPoly
    dvec: tuple[int, ...]
    witness: tuple[int, ...]
    companions: tuple[LaurentPoly, ...] = ()


@dataclass
class Enumeration:
    seeds: list[SeedNode]
    variables: list[ClusterVariableRecord]
    edges: list[Edge]
    closed: bool
    max_depth: int | None
    var: str = "y"
    _by_poly: dict = field(default_factory=dict, repr=False)

    def variable(self, poly: LaurentPoly) -> ClusterVariableRecord:
        return self._by_poly[poly]

    def __contains__(self, poly: LaurentPoly) -> bool:
        return poly in self._by_poly

    def report(self) -> dict:
        return {
            "clusters": len(self.seeds),
            "variables": [
                {
                    "poly": r.poly.fraction_str(self.var),
                    "raw": r.poly.raw_str(self.var),
                    "dvec": list(r.dvec),
                    "witness": [k + 1 for k in r.witness],
                }
                for r in self.variables
            ],
            "closed": self.closed,
            "max_depth": self.max_depth,
        }


def mutation_class(matrix: ExchangeMatrix):
    """Classification of an acyclic representative of the mutation class, or None."""
    word = find_acyclic_word(matrix)
    if word is None:
        return None
    return classify_quiver(_mutate_matrix_word(matrix, word))


def _mutate_matrix_word(matrix: ExchangeMatrix, word: Sequence[int]) -> ExchangeMatrix:
    for k in word:
        matrix = matrix.mutate(k)
    return matrix


def _perm_between(new: Sequence[LaurentPoly], stored: Sequence[LaurentPoly]) -> list[int]:
    pos = {x: i for i, x in enumerate(stored)}
    return [pos[x] for x in new]


def enumerate_seeds(
    root: Seed | Sequence[Seed],
    max_depth: int | None = None,
    closure: bool = False,
    max_seeds: int = 200_000,
    var: str = "y",
) -> Enumeration:
    """Breadth-first closure of the exchange graph from ``root``.

    ``root`` may be a tuple of seeds sharing one exchange matrix; they are
    mutated in lockstep and the first one keys deduplication.  Exactly one
    of ``max_depth`` / ``closure`` must be given; closure is refused unless
    the mutation class is Dynkin.
    """
    views0 = (root,) if isinstance(root, Seed) else tuple(root)
    if (max_depth is None) == (not closure):
        raise ValueError("give exactly one of max_depth or closure=True")
    if closure:
        cls = mutation_class(views0[0].matrix)
        if cls is None or not cls.is_dynkin:
            raise ValueError(f"closure refused: mutation class is {cls or 'not acyclic-reachable'}, not Dynkin")
    if max_depth is not None and max_depth < 0:
        raise ValueError("depth must be non-negative")
    for v in views0[1:]:
        if v.matrix != views0[0].matrix:
            raise ValueError("lockstep views must share the exchange matrix")

    nodes = [SeedNode(0, views0, 0, ())]
    index = {views0[0].key(): 0}
    edges: dict[frozenset, Edge] = {}
    closed = True
    queue = deque([0])
    while queue:
        node = nodes[queue.popleft()]
        at_limit = max_depth is not None and node.depth >= max_depth
        for k in range(node.seed.n):
            mutated = tuple(mutate_seed(v, k) for v in node.views)
            key = mutated[0].key()
            target = index.get(key)
            if target is None:
                if at_limit:
                    closed = False
                    continue
                if len(nodes) >= max_seeds:
                    raise BudgetExhausted(f"more than {max_seeds} seeds")
                target = len(nodes)
                index[key] = target
                nodes.append(SeedNode(target, mutated, node.depth + 1, node.path + (k,)))
                queue.append(target)
                tpos = k
            else:
                stored = nodes[target].views
                for m, s in zip(mutated, stored):
                    perm = _perm_between(m.cluster, s.cluster)
                    if m.matrix.permuted(perm) != s.matrix:
                        raise EngineInvariantError("equal clusters carry different quivers")
                tpos = _perm_between(mutated[0].cluster, stored[0].cluster)[k]
            ekey = frozenset((node.index, target))
            if ekey not in edges:
                recs = tuple(exchange_data(v, k, m.cluster[k]) for v, m in zip(node.views, mutated))
                edges[ekey] = Edge(node.index, k, target, tpos, recs)

    return _finish(nodes, list(edges.values()), closed, max_depth, var)


def _finish(nodes, edges, closed, max_depth, var) -> Enumeration:
    order = sorted(
        nodes,
        key=lambda nd: (nd.depth, sorted(x.raw_str(var) for x in nd.seed.cluster)),
    )
    remap = {nd.index: i for i, nd in enumerate(order)}
    seeds = [SeedNode(i, nd.views, nd.depth, nd.path) for i, nd in enumerate(order)]
    new_edges = []
    for e in edges:
        new_edges.append(Edge(remap[e.source], e.k, remap[e.target], e.target_pos, e.records))
    new_edges.sort(key=lambda e: (e.source, e.k))

    best: dict[LaurentPoly, tuple] = {}
    for nd in seeds:
        for pos, x in enumerate(nd.seed.cluster):
            w = nd.path
            cand = (len(w), w)
            if x not in best or cand < best[x][0]:
                best[x] = (cand, tuple(v.cluster[pos] for v in nd.views[1:]))
    records = [
        ClusterVariableRecord(x, denominator_vector(x), c[1], comp)
        for x, (c, comp) in best.items()
    ]
    records.sort(key=lambda r: (len(r.witness), r.poly.raw_str(var)))
    out = Enumeration(seeds, records, new_edges, closed, max_depth, var)
    out._by_poly = {r.poly: r for r in records}
    return out


def reroot(
    root: Seed,
    word: Sequence[int],
    max_depth: int | None = None,
    closure: bool = False,
    var: str = "y",
) -> Enumeration:
    """Enumerate around the seed at ``word`` with its cluster replaced by fresh symbols.

    The primary view holds expressions in the new cluster ``y``; the single
    companion view holds the same variables expressed in the root cluster.
    """
    at = root.mutate_word(word)
    fresh = Seed(variables(at.n), at.matrix, ())
    companion = Seed(at.cluster, at.matrix, ())
    return enumerate_seeds((fresh, companion), max_depth=max_depth, closure=closure, var=var)
