"""Axiom systems for generalized inverses and an exact checker.

Each inverse kind is a list of named equations in ``a`` (the element) and
``z`` (the candidate). The checker walks that list; nothing here searches for
``k``, callers supply it.

Equation names::

    1    aza = a            5    az = za
    2    zaz = z            6k   z a^(k+1) = a^k
    3    (az)* = az         6k'  a^(k+1) z = a^k
    4    (za)* = za         7    a z^2 = z
    6*   (a^k)* a z = (a^k)*
    wg   (a^k)* a^2 z = (a^k)* a
    c    az is central      c'   za is central
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from weakcore.matrix import (
    DimensionError,
    Matrix,
    column_space_contains,
    column_space_equal,
    power,
)


class InverseConsistencyError(RuntimeError):
    """A computed inverse failed its own defining equations."""


class IdentityViolation(RuntimeError):
    """Two routes that must agree by a theorem produced different values."""


def is_central(x: Matrix) -> bool:
    """X commutes with every matrix unit E_ij, hence with all of M_n."""
    if not x.is_square:
        raise DimensionError("centrality is defined for square matrices")
    n = x.rows
    rng = range(n)
    for i in rng:
        for j in rng:
            # (X E_ij)[r][c] = X[r][i] [c == j],  (E_ij X)[r][c] = [r == i] X[j][c]
            for r in rng:
                for c in rng:
                    left = x[r, i] if c == j else 0
                    right = x[j, c] if r == i else 0
                    if left != right:
                        return False
    return True


class _Ctx:
    """Lazily computed products shared by the equations of one check."""

    def __init__(self, a: Matrix, z: Matrix, k: int):
        self.a, self.z, self.k = a, z, k
        self._memo: dict[str, Matrix] = {}

    def get(self, key: str, make: Callable[[], Matrix]) -> Matrix:
        if key not in self._memo:
            self._memo[key] = make()
        return self._memo[key]

    @property
    def az(self) -> Matrix:
        return self.get("az", lambda: self.a @ self.z)

    @property
    def za(self) -> Matrix:
        return self.get("za", lambda: self.z @ self.a)

    @property
    def ak(self) -> Matrix:
        return self.get("ak", lambda: power(self.a, self.k))

    @property
    def ak1(self) -> Matrix:
        return self.get("ak1", lambda: self.ak @ self.a)


EQUATIONS: dict[str, tuple[str, Callable[[_Ctx], bool]]] = {
    "1": ("aza = a", lambda c: c.az @ c.a == c.a),
    "2": ("zaz = z", lambda c: c.za @ c.z == c.z),
    "3": ("(az)* = az", lambda c: c.az.T == c.az),
    "4": ("(za)* = za", lambda c: c.za.T == c.za),
    "5": ("az = za", lambda c: c.az == c.za),
    "6k": ("z a^(k+1) = a^k", lambda c: c.z @ c.ak1 == c.ak),
    "6k'": ("a^(k+1) z = a^k", lambda c: c.ak1 @ c.z == c.ak),
    "7": ("a z^2 = z", lambda c: c.az @ c.z == c.z),
    "6*": ("(a^k)* a z = (a^k)*", lambda c: c.ak.T @ c.az == c.ak.T),
    "wg": ("(a^k)* a^2 z = (a^k)* a", lambda c: c.ak.T @ c.a @ c.az == c.ak.T @ c.a),
    "c": ("az is central", lambda c: is_central(c.az)),
    "c'": ("za is central", lambda c: is_central(c.za)),
}


class InverseKind(Enum):
    """The supported axiom systems.

    ``fixed_k`` pins the power for kinds whose definition names it (group
    and core are the k = 1 cases); ``unique`` marks kinds with a uniqueness
    theorem in a proper *-ring.
    """

    MP = ("mp", "Moore-Penrose", ("1", "2", "3", "4"), False, None, True)
    INNER = ("inner", "{1}-inverse", ("1",), False, None, False)
    ONE_THREE = ("one-three", "{1,3}-inverse", ("1", "3"), False, None, False)
    GROUP = ("group", "group", ("2", "5", "6k"), True, 1, True)
    DRAZIN = ("drazin", "Drazin", ("2", "5", "6k"), True, None, True)
    CORE = ("core", "core", ("1", "7", "3"), False, None, True)
    CORE_EP = ("core-ep", "core-EP", ("3", "6k", "7"), True, None, True)
    WEAK_GROUP = ("weak-group", "weak group", ("6k", "7", "wg"), True, None, True)
    WEAK_CORE = ("weak-core", "weak core", ("6k", "7", "6*"), True, None, True)
    CENTRAL_DRAZIN = ("central-drazin", "central Drazin", ("c'", "2", "6k'"), True, None, True)
    CENTRAL_WEAK_CORE = (
        "central-weak-core",
        "central weak core",
        ("c", "6k", "2", "3"),
        True,
        None,
        True,
    )

    def __init__(self, slug, label, equations, uses_k, fixed_k, unique):
        self.slug = slug
        self.label = label
        self.equations = equations
        self.uses_k = uses_k
        self.fixed_k = fixed_k
        self.unique = unique

    @classmethod
    def from_slug(cls, slug: str) -> "InverseKind":
        for kind in cls:
            if kind.slug == slug:
                return kind
        raise ValueError(f"unknown inverse kind {slug!r}")


@dataclass(frozen=True)
class InverseReport:
    kind: InverseKind
    candidate: Matrix
    index_used: int
    verdicts: tuple[tuple[str, bool], ...] = field(default=())

    @property
    def overall(self) -> bool:
        return all(ok for _, ok in self.verdicts)

    def failed(self) -> list[str]:
        return [name for name, ok in self.verdicts if not ok]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.slug,
            "index": self.index_used,
            "axioms": [
                {"name": name, "equation": EQUATIONS[name][0], "holds": ok}
                for name, ok in self.verdicts
            ],
            "overall": self.overall,
        }


def check_axioms(a: Matrix, x: Matrix, kind: InverseKind, k: int = 1) -> InverseReport:
    if not a.is_square and kind.uses_k:
        raise DimensionError(f"{kind.label} inverse needs a square matrix")
    if (x.rows, x.cols) != (a.cols, a.rows):
        raise DimensionError(f"candidate shape {x.shape} does not fit {a.shape}")
    if kind.fixed_k is not None:
        k = kind.fixed_k
    if kind.uses_k and k < 1:
        raise ValueError("k must be a positive integer")
    ctx = _Ctx(a, x, k)
    verdicts = tuple((name, bool(EQUATIONS[name][1](ctx))) for name in kind.equations)
    return InverseReport(kind, x, k if kind.uses_k else 0, verdicts)


def require_axioms(a: Matrix, x: Matrix, kind: InverseKind, k: int = 1) -> InverseReport:
    report = check_axioms(a, x, kind, k)
    if not report.overall:
        raise InverseConsistencyError(
            f"{kind.label} inverse failed equations {report.failed()} at k={k}"
        )
    return report


def characterize_weak_core(a: Matrix, y: Matrix, k: int) -> bool:
    """Range form of the weak core axioms.

    Y = YAY, col(Y) = col(A^k) = col(A^(k+1)) and col(A^k) ⊆ col(Y*).
    """
    if not a.is_square or y.shape != a.shape:
        raise DimensionError("characterization needs square matrices of equal size")
    if k < 1:
        raise ValueError("k must be a positive integer")
    ak = power(a, k)
    return (
        y @ a @ y == y
        and column_space_equal(y, ak)
        and column_space_equal(ak, ak @ a)
        and column_space_contains(y.T, ak)
    )
