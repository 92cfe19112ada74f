"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``int`` or ``Fraction``.  Rank and reduced row
echelon form go through FLINT when it is importable; the pure-Python
Gauss-Jordan path is kept both as a fallback and as a cross-check in tests.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

try:
    import flint
except ImportError:  # pragma: no cover - exercised only without python-flint
    flint = None

Matrix = list[list[Fraction]]

DEFAULT_BACKEND = "flint" if flint is not None else "python"


def _as_int_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _rref_python(rows: Sequence[Sequence], ncols: int) -> tuple[Matrix, list[int]]:
    A = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def _rref_flint(rows: Sequence[Sequence], ncols: int) -> tuple[Matrix, list[int]]:
    entries = []
    for row in rows:
        for x in row:
            x = Fraction(x)
            entries.append(flint.fmpq(x.numerator, x.denominator))
    M = flint.fmpq_mat(len(rows), ncols, entries)
    R, rank = M.rref()
    out, pivots = [], []
    for i in range(rank):
        row = [Fraction(int(R[i, j].p), int(R[i, j].q)) for j in range(ncols)]
        pivots.append(next(j for j, x in enumerate(row) if x != 0))
        out.append(row)
    return out, pivots


def rref(rows: Sequence[Sequence], ncols: int, backend: str | None = None) -> tuple[Matrix, list[int]]:
    """Nonzero rows of the reduced row echelon form and the pivot columns."""
    if not rows or ncols == 0:
        return [], []
    if (backend or DEFAULT_BACKEND) == "flint":
        return _rref_flint(rows, ncols)
    return _rref_python(rows, ncols)


def rank(rows: Sequence[Sequence], ncols: int, backend: str | None = None) -> int:
    if not rows or ncols == 0:
        return 0
    if (backend or DEFAULT_BACKEND) == "flint":
        return flint.fmpz_mat(_as_int_rows(rows)).rank()
    return len(_rref_python(rows, ncols)[1])


def rank_sparse(rows: Sequence[dict], ncols: int, backend: str | None = None) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``."""
    if not rows or ncols == 0:
        return 0
    if (backend or DEFAULT_BACKEND) == "flint":
        M = flint.fmpz_mat(len(rows), ncols)
        for i, row in enumerate(rows):
            den = 1
            for x in row.values():
                if isinstance(x, Fraction) and x.denominator != 1:
                    den = lcm(den, x.denominator)
            for j, x in row.items():
                M[i, j] = int(x * den) if den != 1 else int(x)
        return M.rank()
    dense = []
    for row in rows:
        d = [0] * ncols
        for j, x in row.items():
            d[j] = x
        dense.append(d)
    return len(_rref_python(dense, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, backend: str | None = None) -> Matrix:
    """Basis of ``{v : A v = 0}`` as a list of vectors (one per free column)."""
    R, pivots = rref(rows, ncols, backend)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(A: Matrix, B: Matrix, cols: int) -> Matrix:
    """``A @ B`` where ``B`` has ``cols`` columns (needed when ``B`` has no rows)."""
    out = []
    for row in A:
        acc = [Fraction(0)] * cols
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def matvec(A: Matrix, v: Sequence) -> list[Fraction]:
    return [sum((a * x for a, x in zip(row, v) if a and x), Fraction(0)) for row in A]


def columns_to_matrix(cols: Sequence[Sequence], nrows: int) -> Matrix:
    return [[Fraction(c[i]) for c in cols] for i in range(nrows)]


def transpose(A: Matrix, ncols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def independent_subset(vectors: Sequence[Sequence], dim: int) -> list[int]:
    """Indices of a maximal linearly independent subset, chosen greedily in order."""
    if not vectors or dim == 0:
        return []
    # pivots of the transposed matrix pick the first independent columns
    rows = [[Fraction(v[i]) for v in vectors] for i in range(dim)]
    _, pivots = rref(rows, len(vectors))
    return pivots


def extend_to_complement(span: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Standard basis vectors completing ``span`` to a basis of the whole space."""
    unit = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    vecs = list(span) + unit
    chosen = independent_subset(vecs, dim)
    return [unit[i - len(span)] for i in chosen if i >= len(span)]


def coordinates(basis: Sequence[Sequence], vectors: Sequence[Sequence], dim: int) -> Matrix:
    """Coordinates of each vector in the given basis (columns of the result).

    Raises ``ValueError`` if a vector lies outside the span.
    """
    k = len(basis)
    if not vectors:
        return [[] for _ in range(k)]
    if k == 0:
        if any(any(x != 0 for x in v) for v in vectors):
            raise ValueError("vector outside the span of an empty basis")
        return []
    aug = [[Fraction(b[i]) for b in basis] + [Fraction(v[i]) for v in vectors] for i in range(dim)]
    R, pivots = rref(aug, k + len(vectors))
    if len(pivots) < k or any(p >= k for p in pivots):
        raise ValueError("vector outside the span of the basis")
    coords = [[Fraction(0)] * len(vectors) for _ in range(k)]
    for row, p in zip(R, pivots):
        for j in range(len(vectors)):
            coords[p][j] = row[k + j]
    return coords
