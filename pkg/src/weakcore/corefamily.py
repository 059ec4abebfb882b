"""Core, core-EP, weak group and weak core inverses, plus the identities
linking them.

In M_n(Q) every power of A has a {1,3}-inverse, so the weak core inverse
always exists and is computed as A^D A^k (A^k)†. The operations named after
identities return one side and raise :class:`IdentityViolation` if another
route disagrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from weakcore.classical import (
    drazin,
    drazin_index,
    group_inverse,
    inner_inverse,
    moore_penrose,
)
from weakcore.matrix import DimensionError, Matrix, power
from weakcore.verify import (
    IdentityViolation,
    InverseKind,
    check_axioms,
    require_axioms,
)


@dataclass(frozen=True)
class WeakCoreResult:
    inverse: Matrix
    index: int
    projector: Matrix


@dataclass(frozen=True)
class AdditiveResult:
    """Outcome of a sum law: ``value`` is None when a hypothesis fails."""

    value: Matrix | None
    failed: tuple[str, ...] = ()

    @property
    def applies(self) -> bool:
        return self.value is not None


def _square(a: Matrix) -> None:
    if not a.is_square:
        raise DimensionError(f"square matrix required, got {a.rows}x{a.cols}")


def _agree(name: str, left: Matrix, right: Matrix) -> None:
    if left != right:
        raise IdentityViolation(f"{name}: {left!r} != {right!r}")


def core_inverse(a: Matrix) -> Matrix | None:
    """A^# A A† when A has index at most one, otherwise None."""
    _square(a)
    g = group_inverse(a)
    if g is None:
        return None
    x = g @ a @ moore_penrose(a)
    require_axioms(a, x, InverseKind.CORE)
    return x


@lru_cache(maxsize=4096)
def core_ep(a: Matrix) -> Matrix:
    _square(a)
    k = drazin_index(a).paper_index
    ak = power(a, k)
    x = drazin(a) @ ak @ moore_penrose(ak)
    require_axioms(a, x, InverseKind.CORE_EP, k)
    return x


def weak_group(a: Matrix) -> Matrix:
    _square(a)
    k = drazin_index(a).paper_index
    c = core_ep(a)
    x = c @ c @ a
    require_axioms(a, x, InverseKind.WEAK_GROUP, k)
    return x


@lru_cache(maxsize=4096)
def weak_core(a: Matrix) -> WeakCoreResult:
    """Weak core inverse A^D A^k (A^k)† with its smallest valid index.

    The index is found by re-checking the three defining equations at
    k-1, k-2, ... until one fails; validity at k0 implies validity for all
    k >= k0, so the first failure bounds the minimum.
    """
    _square(a)
    k = drazin_index(a).paper_index
    ak = power(a, k)
    y = drazin(a) @ ak @ moore_penrose(ak)
    require_axioms(a, y, InverseKind.WEAK_CORE, k)
    while k > 1 and check_axioms(a, y, InverseKind.WEAK_CORE, k - 1).overall:
        k -= 1
    return WeakCoreResult(inverse=y, index=k, projector=a @ y)


def weak_core_double(a: Matrix) -> Matrix:
    """(A^⊞)^⊞ = A^2 A^⊞, also checking that a third application returns A^⊞."""
    y = weak_core(a).inverse
    expected = a @ a @ y
    twice = weak_core(y).inverse
    _agree("double weak core", twice, expected)
    _agree("triple weak core", weak_core(twice).inverse, y)
    return expected


def wc_via_core(a: Matrix) -> Matrix:
    """A^(k-1) (A^k)^⊕ with k the positive index; A^k always has index <= 1."""
    _square(a)
    k = drazin_index(a).paper_index
    core_k = core_inverse(power(a, k))
    if core_k is None:
        raise IdentityViolation(f"A^{k} is not core invertible")
    x = power(a, k - 1) @ core_k
    _agree("weak core via core inverse", x, weak_core(a).inverse)
    return x


def wc_power(a: Matrix, n: int) -> Matrix:
    """(A^n)^⊞, checked against (A^⊞)^n and A^⊞ = A^(n-1) (A^n)^⊞."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    y = weak_core(a).inverse
    yn = weak_core(power(a, n)).inverse
    _agree("power of weak core", power(y, n), yn)
    _agree("weak core from power", power(a, n - 1) @ yn, y)
    return yn


def wc_sum(a: Matrix, b: Matrix) -> AdditiveResult:
    if a.shape != b.shape:
        raise DimensionError("summands must have equal shape")
    zero = Matrix.zeros(a.rows)
    failed = tuple(
        name
        for name, value in (("ab = 0", a @ b), ("ba = 0", b @ a), ("a*b = 0", a.T @ b))
        if value != zero
    )
    if failed:
        return AdditiveResult(None, failed)
    s = weak_core(a).inverse + weak_core(b).inverse
    _agree("weak core sum law", weak_core(a + b).inverse, s)
    return AdditiveResult(s)


def idempotent_construction(a: Matrix, m: int, w: Matrix | None = None) -> Matrix:
    """A^m (A^(m+1))^(1) p with p = A A^⊞, for the {1}-inverse selected by W."""
    res = weak_core(a)
    if m < res.index:
        raise ValueError(f"m must be at least the weak core index {res.index}")
    am = power(a, m)
    g = inner_inverse(am @ a, w)
    y = am @ g @ res.projector
    _agree("idempotent construction", y, res.inverse)
    return y
