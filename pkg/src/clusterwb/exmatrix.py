"""Exchange matrices of quivers without loops or 2-cycles.

Convention: ``b[i][j] > 0`` means ``b[i][j]`` arrows ``i -> j``.  Vertices are
0-indexed in code and 1-indexed in every text format.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

_INT_LIMIT = 2**63


class QuiverFormatError(ValueError):
    pass


@dataclass(frozen=True)
class ExchangeMatrix:
    b: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = tuple(tuple(int(x) for x in row) for row in self.b)
        object.__setattr__(self, "b", b)
        n = len(b)
        for i, row in enumerate(b):
            if len(row) != n:
                raise ValueError("exchange matrix must be square")
            if row[i] != 0:
                raise ValueError(f"nonzero diagonal entry at vertex {i + 1}")
            for j in range(n):
                if row[j] != -b[j][i]:
                    raise ValueError(f"matrix not skew-symmetric at ({i + 1},{j + 1})")
                if abs(row[j]) >= _INT_LIMIT:
                    raise OverflowError(f"arrow multiplicity {row[j]} exceeds machine width")

    @property
    def n(self) -> int:
        return len(self.b)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.b[i][j]

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int, int]]) -> "ExchangeMatrix":
        """Build from ``(i, j, m)`` triples meaning ``m`` arrows ``i -> j`` (0-indexed)."""
        b = [[0] * n for _ in range(n)]
        for i, j, m in arrows:
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"arrow {i + 1}->{j + 1} out of range for n={n}")
            if i == j:
                raise ValueError(f"loop at vertex {i + 1}")
            b[i][j] += m
            b[j][i] -= m
        return cls(tuple(map(tuple, b)))

    def arrows(self) -> list[tuple[int, int, int]]:
        """Positive entries as ``(source, target, multiplicity)``, row-major."""
        return [(i, j, m) for i, row in enumerate(self.b) for j, m in enumerate(row) if m > 0]

    def mutate(self, k: int) -> "ExchangeMatrix":
        return mutate_matrix(self, k)

    def permuted(self, perm: Sequence[int]) -> "ExchangeMatrix":
        """Matrix with vertex ``i`` relabelled as ``perm[i]``."""
        n = self.n
        b = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                b[perm[i]][perm[j]] = self.b[i][j]
        return ExchangeMatrix(tuple(map(tuple, b)))


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    n = B.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for n={n}")
    b = B.b
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-b[i][j])
            else:
                bik, bkj = b[i][k], b[k][j]
                row.append(b[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        out.append(tuple(row))
    return ExchangeMatrix(tuple(out))


def is_acyclic(B: ExchangeMatrix) -> bool:
    n = B.n
    indeg = [sum(1 for i in range(n) if B.b[i][j] > 0) for j in range(n)]
    queue = deque(j for j in range(n) if indeg[j] == 0)
    seen = 0
    while queue:
        i = queue.popleft()
        seen += 1
        for j in range(n):
            if B.b[i][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
    return seen == n


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class QuiverClass:
    """Result of :func:`classify_quiver`.

    ``kind`` is one of ``"dynkin"``, ``"rank2"``, ``"affine-A"``,
    ``"other-tame"`` or ``"wild"``.  ``label`` is a diagram name such as
    ``"A3"``, ``"D4"``, ``"E6"``, ``"Dt5"`` (affine D) or ``"K2"`` (Kronecker).
    For affine A, ``pq`` holds the arrow counts in the two directions around
    the cycle, larger first.
    """

    kind: str
    label: str
    pq: tuple[int, int] | None = None

    @property
    def is_dynkin(self) -> bool:
        return self.kind == "dynkin"

    @property
    def is_tame(self) -> bool:
        return self.kind in ("affine-A", "other-tame") or self.label == "K2"

    def __str__(self) -> str:
        if self.kind == "affine-A":
            return f"affine-A{self.pq}"
        return f"{self.kind}({self.label})"


def _components(n: int, adj: list[set[int]]) -> list[list[int]]:
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _arm_lengths(center: int, adj: list[set[int]]) -> list[int]:
    arms = []
    for start in sorted(adj[center]):
        length, prev, cur = 1, center, start
        while len(adj[cur]) == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
            length += 1
        arms.append(length)
    return sorted(arms)


def _classify_tree(vertices: list[int], adj: list[set[int]]) -> QuiverClass:
    n = len(vertices)
    degs = {v: len(adj[v]) for v in vertices}
    branch = [v for v in vertices if degs[v] >= 3]
    if not branch:
        return QuiverClass("dynkin", f"A{n}")
    if len(branch) == 1:
        c = branch[0]
        if degs[c] == 4:
            if n == 5:
                return QuiverClass("other-tame", "Dt4")
            return QuiverClass("wild", "tree")
        if degs[c] > 4:
            return QuiverClass("wild", "tree")
        p, q, r = (a + 1 for a in _arm_lengths(c, adj))
        s = Fraction(1, p) + Fraction(1, q) + Fraction(1, r)
        if s > 1:
            if (p, q) == (2, 2):
                return QuiverClass("dynkin", f"D{n}")
            return QuiverClass("dynkin", f"E{n}")
        if s == 1:
            return QuiverClass("other-tame", f"Et{n - 1}")
        return QuiverClass("wild", "tree")
    if len(branch) == 2 and all(degs[c] == 3 for c in branch):
        if all(_arm_lengths(c, adj)[:2] == [1, 1] for c in branch):
            return QuiverClass("other-tame", f"Dt{n - 1}")
    return QuiverClass("wild", "tree")


def classify_quiver(B: ExchangeMatrix) -> QuiverClass:
    """Classify an acyclic quiver by its underlying graph.

    Affine A is an undirected cycle; ``pq`` counts arrows running each way
    around it.  Two-vertex quivers with a multiple arrow are ``rank2``
    whatever the multiplicity.
    """
    n = B.n
    if not is_acyclic(B):
        raise ValueError("classification applies to acyclic quivers only")
    adj: list[set[int]] = [set() for _ in range(n)]
    mult = {}
    for i, j, m in B.arrows():
        adj[i].add(j)
        adj[j].add(i)
        mult[frozenset((i, j))] = m
    comps = _components(n, adj)
    if len(comps) > 1:
        subs = []
        for comp in comps:
            idx = {v: a for a, v in enumerate(comp)}
            arrows = [(idx[i], idx[j], m) for i, j, m in B.arrows() if i in idx]
            subs.append(classify_quiver(ExchangeMatrix.from_arrows(len(comp), arrows)))
        if all(c.is_dynkin for c in subs):
            return QuiverClass("dynkin", "+".join(c.label for c in subs))
        raise ValueError("disconnected quivers are classified only when every component is Dynkin")
    if n == 1:
        return QuiverClass("dynkin", "A1")
    if n == 2 and max(mult.values()) >= 2:
        return QuiverClass("rank2", f"K{max(mult.values())}")
    if max(mult.values()) >= 2:
        return QuiverClass("wild", "multi-edge")
    edges = len(mult)
    if edges == n - 1:
        return _classify_tree(list(range(n)), adj)
    if edges == n and all(len(a) == 2 for a in adj):
        fwd = bwd = 0
        prev, cur = 0, min(adj[0])
        order = [0]
        while cur != 0:
            order.append(cur)
            nxt = next(w for w in adj[cur] if w != prev)
            prev, cur = cur, nxt
        order.append(0)
        for a, c in zip(order, order[1:]):
            if B.b[a][c] > 0:
                fwd += 1
            else:
                bwd += 1
        return QuiverClass("affine-A", f"At{n - 1}", (max(fwd, bwd), min(fwd, bwd)))
    return QuiverClass("wild", "graph")


def cycle_order(B: ExchangeMatrix) -> list[int]:
    """Vertices of an undirected-cycle quiver in cyclic order starting at 0."""
    n = B.n
    adj: list[set[int]] = [set() for _ in range(n)]
    for i, j, _ in B.arrows():
        adj[i].add(j)
        adj[j].add(i)
    if n == 2:
        return [0, 1]
    order, prev, cur = [0], 0, min(adj[0])
    while cur != 0:
        order.append(cur)
        prev, cur = cur, next(w for w in adj[cur] if w != prev)
    return order


def find_acyclic_word(B: ExchangeMatrix, max_depth: int = 8) -> tuple[int, ...] | None:
    """Shortest mutation word taking ``B`` to an acyclic quiver, or None."""
    if is_acyclic(B):
        return ()
    seen = {B.b}
    frontier = [(B, ())]
    for _ in range(max_depth):
        nxt = []
        for mat, word in frontier:
            for k in range(mat.n):
                if word and word[-1] == k:
                    continue
                m2 = mat.mutate(k)
                if m2.b in seen:
                    continue
                seen.add(m2.b)
                w2 = word + (k,)
                if is_acyclic(m2):
                    return w2
                nxt.append((m2, w2))
        frontier = nxt
    return None


# ---------------------------------------------------------------------------
# text format


def parse_quiver(text: str) -> ExchangeMatrix:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise QuiverFormatError("empty quiver file")
    try:
        n = int(lines[0])
    except ValueError:
        raise QuiverFormatError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 1:
        raise QuiverFormatError("vertex count must be positive")
    arrows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise QuiverFormatError(f"expected 'i j m', got {line!r}")
        try:
            i, j, m = (int(p) for p in parts)
        except ValueError:
            raise QuiverFormatError(f"non-integer field in {line!r}") from None
        if m < 0:
            raise QuiverFormatError(f"negative multiplicity in {line!r}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise QuiverFormatError(f"vertex out of range in {line!r}")
        arrows.append((i - 1, j - 1, m))
    pairs = {(i, j) for i, j, m in arrows if m}
    for i, j in pairs:
        if (j, i) in pairs:
            raise QuiverFormatError(f"arrows in both directions between {i + 1} and {j + 1} (2-cycle)")
    try:
        return ExchangeMatrix.from_arrows(n, arrows)
    except ValueError as exc:
        raise QuiverFormatError(str(exc)) from None


def format_quiver(B: ExchangeMatrix) -> str:
    lines = [str(B.n)]
    lines += [f"{i + 1} {j + 1} {m}" for i, j, m in B.arrows()]
    return "\n".join(lines) + "\n"


def load_quiver(path: str | Path) -> ExchangeMatrix:
    return parse_quiver(Path(path).read_text())
