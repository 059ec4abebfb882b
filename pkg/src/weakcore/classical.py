"""Moore-Penrose, inner, {1,3}, group and Drazin inverses, and the index."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from weakcore.matrix import (
    DimensionError,
    Matrix,
    full_rank_factorization,
    inverse,
    power,
    rank,
)
from weakcore.verify import InverseKind, require_axioms


@dataclass(frozen=True)
class IndexResult:
    """Rank-stabilization index.

    ``drazin_index`` is 0 for invertible matrices; ``paper_index`` is the
    positive version ``max(drazin_index, 1)`` that every power formula uses.
    """

    drazin_index: int
    paper_index: int


@lru_cache(maxsize=4096)
def moore_penrose(a: Matrix) -> Matrix:
    """A† = G*(GG*)^-1 (F*F)^-1 F* for a full rank factorization A = FG."""
    if a.is_zero():
        return Matrix.zeros(a.cols, a.rows)
    f, g = full_rank_factorization(a)
    return g.T @ inverse(g @ g.T) @ inverse(f.T @ f) @ f.T


def one_three_inverse(a: Matrix, w: Matrix | None = None) -> Matrix:
    """The {1,3}-inverse A† + (I - A†A) W; W = 0 gives A† itself."""
    x = moore_penrose(a)
    if w is None:
        return x
    if w.shape != x.shape:
        raise DimensionError(f"W must have shape {x.shape}, got {w.shape}")
    return x + (Matrix.identity(a.cols) - x @ a) @ w


def inner_inverse(a: Matrix, w: Matrix | None = None) -> Matrix:
    """The {1}-inverse A† + W - A†A W AA†, which sweeps all of A{1} as W varies."""
    x = moore_penrose(a)
    if w is None:
        return x
    if w.shape != x.shape:
        raise DimensionError(f"W must have shape {x.shape}, got {w.shape}")
    return x + w - x @ a @ w @ a @ x


@lru_cache(maxsize=4096)
def drazin_index(a: Matrix) -> IndexResult:
    if not a.is_square:
        raise DimensionError("index is defined for square matrices")
    k = 0
    current = Matrix.identity(a.rows)
    r = a.rows
    while True:
        nxt = current @ a
        r_next = rank(nxt)
        if r_next == r:
            return IndexResult(k, max(k, 1))
        current, r, k = nxt, r_next, k + 1


@lru_cache(maxsize=4096)
def drazin(a: Matrix) -> Matrix:
    """Cline's formula A^l (A^(2l+1))† A^l with l the positive index."""
    idx = drazin_index(a)
    l = idx.paper_index
    al = power(a, l)
    x = al @ moore_penrose(power(a, 2 * l + 1)) @ al
    require_axioms(a, x, InverseKind.DRAZIN, l)
    return x


def group_inverse(a: Matrix) -> Matrix | None:
    if drazin_index(a).drazin_index > 1:
        return None
    return drazin(a)
