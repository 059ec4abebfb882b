"""Brute-force ground truth over Z_n with the identity involution.

Every candidate y in Z_n is tried against the literal equations of each
inverse kind, for every k up to ``k_max``. Nothing here touches the matrix
formulas, so agreement with them is evidence rather than tautology.

Z_n is commutative and its only ring automorphism is the identity, so the
involution is the identity and every centrality condition is vacuous. Z_n is
proper (x*x = 0 forces x = 0) exactly when n is squarefree. Non-proper moduli
are accepted for exploration, but uniqueness is only asserted on proper ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from weakcore.verify import InverseKind

__all__ = [
    "AdditiveCheck",
    "OracleResult",
    "ScanConfig",
    "ZnRing",
    "abelian_cross_check",
    "additive_law_scan",
    "brute_force",
    "build_ring",
    "default_k_max",
    "existence_table",
    "is_squarefree",
    "uniqueness_violations",
    "zn_drazin_index",
]


@dataclass(frozen=True)
class ZnRing:
    modulus: int
    proper: bool

    def involution(self, x):
        return x

    @property
    def elements(self) -> range:
        return range(self.modulus)


def build_ring(n: int) -> ZnRing:
    if n < 2:
        raise ValueError(f"modulus must be at least 2, got {n}")
    xs = np.arange(n, dtype=np.int64)
    proper = not np.any((xs[1:] * xs[1:]) % n == 0)
    return ZnRing(n, bool(proper))


def is_squarefree(n: int) -> bool:
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


def default_k_max(n: int) -> int:
    return 1 + math.ceil(math.log2(n))


_Pred = Callable[[ZnRing, int, np.ndarray, int], np.ndarray]


def _eq(ring: ZnRing, lhs: np.ndarray, rhs) -> np.ndarray:
    return (lhs % ring.modulus) == (np.asarray(rhs) % ring.modulus)


def _pw(ring: ZnRing, a: int, k: int) -> int:
    return pow(a, k, ring.modulus)


def _true(ring, a, y, k):
    return np.ones_like(y, dtype=bool)


# Literal ring equations, vectorized over every candidate y at once.
_PREDICATES: dict[str, _Pred] = {
    "1": lambda r, a, y, k: _eq(r, (a * y % r.modulus) * a, a),
    "2": lambda r, a, y, k: _eq(r, (y * a % r.modulus) * y, y),
    "3": lambda r, a, y, k: _eq(r, r.involution(a * y % r.modulus), a * y),
    "4": lambda r, a, y, k: _eq(r, r.involution(y * a % r.modulus), y * a),
    "5": lambda r, a, y, k: _eq(r, a * y, y * a),
    "6k": lambda r, a, y, k: _eq(r, y * _pw(r, a, k + 1), _pw(r, a, k)),
    "6k'": lambda r, a, y, k: _eq(r, _pw(r, a, k + 1) * y, _pw(r, a, k)),
    "7": lambda r, a, y, k: _eq(r, (a * y % r.modulus) * y, y),
    "6*": lambda r, a, y, k: _eq(
        r, (r.involution(_pw(r, a, k)) * a % r.modulus) * y, r.involution(_pw(r, a, k))
    ),
    "wg": lambda r, a, y, k: _eq(
        r,
        (r.involution(_pw(r, a, k)) * a * a % r.modulus) * y,
        r.involution(_pw(r, a, k)) * a,
    ),
    # commutative ring: every element is central
    "c": _true,
    "c'": _true,
}


@dataclass(frozen=True)
class OracleResult:
    element: int
    kind: InverseKind
    solutions: tuple[tuple[int, int | None], ...]

    @property
    def unique(self) -> bool:
        return len({y for y, _ in self.solutions}) <= 1

    @property
    def exists(self) -> bool:
        return bool(self.solutions)

    @property
    def inverse(self) -> int | None:
        return self.solutions[0][0] if len(self.solutions) == 1 else None

    @property
    def k(self) -> int | None:
        return self.solutions[0][1] if len(self.solutions) == 1 else None


def _k_values(kind: InverseKind, k_max: int) -> list[int | None]:
    if kind.fixed_k is not None:
        return [kind.fixed_k]
    if kind.uses_k:
        return list(range(1, k_max + 1))
    return [None]


def brute_force(
    ring: ZnRing, a: int, kind: InverseKind, k_max: int | None = None
) -> OracleResult:
    """All y in Z_n satisfying ``kind`` for some k <= k_max, with the smallest such k."""
    n = ring.modulus
    a %= n
    k_max = default_k_max(n) if k_max is None else k_max
    ys = np.arange(n, dtype=np.int64)
    found: dict[int, int | None] = {}
    for k in _k_values(kind, k_max):
        kk = 1 if k is None else k
        mask = np.ones(n, dtype=bool)
        for name in kind.equations:
            mask &= _PREDICATES[name](ring, a, ys, kk)
        for y in np.flatnonzero(mask).tolist():
            found.setdefault(y, k)
    return OracleResult(a, kind, tuple(sorted(found.items())))


def zn_drazin_index(ring: ZnRing, a: int, k_max: int | None = None) -> int | None:
    """Smallest k >= 1 with a^k in a^(k+1) Z_n, i.e. (6^k) is solvable."""
    n = ring.modulus
    k_max = default_k_max(n) if k_max is None else k_max
    ys = np.arange(n, dtype=np.int64)
    for k in range(1, k_max + 1):
        if np.any(_PREDICATES["6k"](ring, a % n, ys, k)):
            return k
    return None


def abelian_cross_check(ring: ZnRing, k_max: int | None = None) -> bool:
    """Every core-EP invertible element is central weak core invertible."""
    for a in ring.elements:
        if brute_force(ring, a, InverseKind.CORE_EP, k_max).exists:
            if not brute_force(ring, a, InverseKind.CENTRAL_WEAK_CORE, k_max).exists:
                return False
    return True


@dataclass(frozen=True)
class AdditiveCheck:
    a: int
    b: int
    law: str
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def additive_law_scan(ring: ZnRing, k_max: int | None = None) -> list[AdditiveCheck]:
    """Check (a+b)^⊞ = a^⊞ + b^⊞ and the ⊟ analogue over all pairs with ab = 0.

    With the identity involution a*b = ab, and ba = ab, so ab = 0 covers all
    three hypotheses. Pairs where some inverse is missing are skipped.
    """
    n = ring.modulus
    checks: list[AdditiveCheck] = []
    for kind, law in (
        (InverseKind.WEAK_CORE, "weak-core"),
        (InverseKind.CENTRAL_WEAK_CORE, "central-weak-core"),
    ):
        table = {x: brute_force(ring, x, kind, k_max).inverse for x in ring.elements}
        for a in ring.elements:
            for b in ring.elements:
                if (a * b) % n or (ring.involution(a) * b) % n:
                    continue
                xa, xb, xs = table[a], table[b], table[(a + b) % n]
                if xa is None or xb is None or xs is None:
                    continue
                checks.append(AdditiveCheck(a, b, law, xs, (xa + xb) % n))
    return checks


def uniqueness_violations(
    ring: ZnRing, kinds: Iterable[InverseKind], k_max: int | None = None
) -> list[OracleResult]:
    bad = []
    for kind in kinds:
        if not kind.unique:
            continue
        for a in ring.elements:
            res = brute_force(ring, a, kind, k_max)
            if not res.unique:
                bad.append(res)
    return bad


def existence_table(
    ring: ZnRing, kinds: Iterable[InverseKind], k_max: int | None = None
) -> list[dict]:
    """Rows (element, kind, inverse, k, unique) ordered by kind then element."""
    rows = []
    for kind in kinds:
        for a in ring.elements:
            res = brute_force(ring, a, kind, k_max)
            rows.append(
                {
                    "element": a,
                    "kind": kind.slug,
                    "inverse": [y for y, _ in res.solutions],
                    "k": [k for _, k in res.solutions],
                    "unique": res.unique,
                }
            )
    return rows


@dataclass
class ScanConfig:
    """Parameters for a full oracle sweep over squarefree moduli."""

    max_modulus: int = 210
    kinds: tuple[InverseKind, ...] = (
        InverseKind.WEAK_CORE,
        InverseKind.CENTRAL_WEAK_CORE,
    )
    additive_moduli: tuple[int, ...] = (6, 30, 42)
    k_max: int | None = None
    moduli: list[int] = field(init=False)

    def __post_init__(self):
        self.moduli = [n for n in range(2, self.max_modulus + 1) if is_squarefree(n)]
