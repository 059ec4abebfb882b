"""Central Drazin and central weak core inverses in M_n(Q).

The center of M_n is the scalar matrices. A A^D and A A^⊕† are idempotent,
and the only scalar idempotents are 0 and I, so both central inverses exist
exactly when A is nilpotent or invertible. Non-existence is reported as a
value with the failed condition, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from weakcore.classical import (
    drazin,
    drazin_index,
    group_inverse,
    moore_penrose,
    one_three_inverse,
)
from weakcore.corefamily import AdditiveResult, core_ep, core_inverse
from weakcore.matrix import DimensionError, Matrix, power
from weakcore.verify import (
    IdentityViolation,
    InverseConsistencyError,
    InverseKind,
    check_axioms,
    is_central,
    require_axioms,
)

__all__ = [
    "CentralInverseResult",
    "central_double",
    "central_drazin",
    "central_drazin_sum",
    "central_via_13",
    "central_wc_sum",
    "central_weak_core",
    "is_central",
    "is_ep",
]


@dataclass(frozen=True)
class CentralInverseResult:
    inverse: Matrix | None
    exists: bool
    obstruction: str
    index: int
    drazin_index: int


def _smallest_k(a: Matrix, x: Matrix, kind: InverseKind, k: int) -> int:
    require_axioms(a, x, kind, k)
    while k > 1 and check_axioms(a, x, kind, k - 1).overall:
        k -= 1
    return k


def _agree(name: str, left: Matrix, right: Matrix) -> None:
    if left != right:
        raise IdentityViolation(f"{name}: {left!r} != {right!r}")


def central_drazin(a: Matrix) -> CentralInverseResult:
    idx = drazin_index(a)
    d = drazin(a)
    if not is_central(a @ d):
        return CentralInverseResult(None, False, "aa^D not central", 0, idx.drazin_index)
    k = _smallest_k(a, d, InverseKind.CENTRAL_DRAZIN, idx.paper_index)
    return CentralInverseResult(d, True, "", k, idx.drazin_index)


def central_weak_core(a: Matrix) -> CentralInverseResult:
    """A^⊟ = A^⊕† when A A^⊕† is central.

    When it exists the defining equations and the companion identities
    ax^2 = x, ax = xa, x^2 a = x, xa^2x = ax are all checked.
    """
    idx = drazin_index(a)
    x = core_ep(a)
    ax = a @ x
    if not is_central(ax):
        return CentralInverseResult(None, False, "aa^⊕† not central", 0, idx.drazin_index)
    k = _smallest_k(a, x, InverseKind.CENTRAL_WEAK_CORE, idx.paper_index)
    companions = {
        "ax^2 = x": ax @ x == x,
        "ax = xa": ax == x @ a,
        "x^2a = x": x @ x @ a == x,
        "xa^2x = ax": x @ a @ ax == ax,
    }
    bad = [name for name, ok in companions.items() if not ok]
    if bad:
        raise InverseConsistencyError(f"central weak core inverse violates {bad}")
    return CentralInverseResult(x, True, "", k, idx.drazin_index)


def _require(a: Matrix) -> Matrix:
    res = central_weak_core(a)
    if not res.exists:
        raise ValueError(f"no central weak core inverse: {res.obstruction}")
    return res.inverse


def central_double(a: Matrix, max_power: int = 3) -> Matrix:
    """(A^⊟)^⊟ = A^2 A^⊟, plus (A^n)^⊟ = (A^⊟)^n for n up to ``max_power``."""
    x = _require(a)
    y = a @ a @ x
    _agree("double central weak core", _require(x), y)
    for n in range(1, max_power + 1):
        _agree(f"central weak core of power {n}", _require(power(a, n)), power(x, n))
    return y


def central_via_13(a: Matrix, w: Matrix | None = None) -> Matrix:
    """A^ⓓ A^k (A^k)^(1,3) for the {1,3}-inverse selected by W."""
    x = _require(a)
    k = drazin_index(a).paper_index
    d = central_drazin(a)
    if not d.exists:
        raise IdentityViolation("central weak core exists but central Drazin does not")
    ak = power(a, k)
    g = one_three_inverse(ak, w)
    y = d.inverse @ ak @ g
    _agree("central weak core via {1,3}", y, x)
    _agree("central weak core projector", a @ y, ak @ g)
    return y


def central_drazin_sum(a: Matrix, b: Matrix) -> AdditiveResult:
    if a.shape != b.shape:
        raise DimensionError("summands must have equal shape")
    zero = Matrix.zeros(a.rows)
    failed = [name for name, v in (("ab = 0", a @ b), ("ba = 0", b @ a)) if v != zero]
    ra, rb = central_drazin(a), central_drazin(b)
    if not ra.exists:
        failed.append(f"a: {ra.obstruction}")
    if not rb.exists:
        failed.append(f"b: {rb.obstruction}")
    if failed:
        return AdditiveResult(None, tuple(failed))
    s = ra.inverse + rb.inverse
    rs = central_drazin(a + b)
    if not rs.exists:
        raise IdentityViolation("a + b is not central Drazin invertible")
    _agree("central Drazin sum law", rs.inverse, s)
    return AdditiveResult(s)


def central_wc_sum(a: Matrix, b: Matrix) -> AdditiveResult:
    if a.shape != b.shape:
        raise DimensionError("summands must have equal shape")
    zero = Matrix.zeros(a.rows)
    failed = [
        name
        for name, v in (("ab = 0", a @ b), ("ba = 0", b @ a), ("a*b = 0", a.T @ b))
        if v != zero
    ]
    ra, rb = central_weak_core(a), central_weak_core(b)
    if not ra.exists:
        failed.append(f"a: {ra.obstruction}")
    if not rb.exists:
        failed.append(f"b: {rb.obstruction}")
    if failed:
        return AdditiveResult(None, tuple(failed))
    s = ra.inverse + rb.inverse
    rs = central_weak_core(a + b)
    if not rs.exists:
        raise IdentityViolation("a + b is not central weak core invertible")
    _agree("central weak core sum law", rs.inverse, s)
    return AdditiveResult(s)


def is_ep(a: Matrix) -> bool:
    g = group_inverse(a)
    return g is not None and g == moore_penrose(a)


def ep_coincidence(a: Matrix) -> bool:
    """For central weak core index 1: a^# = a^⊕ = a† = a^⊟ and a is EP."""
    res = central_weak_core(a)
    if not res.exists or res.index != 1:
        return False
    return (
        group_inverse(a) == core_inverse(a) == moore_penrose(a) == res.inverse
        and is_ep(a)
    )
