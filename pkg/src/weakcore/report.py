"""Compute every inverse of one matrix and run every cross-identity on it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from weakcore import central, classical, corefamily
from weakcore.matrix import Matrix, power
from weakcore.verify import (
    IdentityViolation,
    InverseConsistencyError,
    characterize_weak_core,
    check_axioms,
    InverseKind,
)


@dataclass
class ConsistencyReport:
    matrix: Matrix
    drazin_index: int
    weak_core_index: int
    inverses: dict[str, Matrix | None] = field(default_factory=dict)
    identities: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok in self.identities)

    def failures(self) -> list[str]:
        return [name for name, ok in self.identities if not ok]

    def to_dict(self) -> dict:
        return {
            "matrix": self.matrix.to_strings(),
            "drazin_index": self.drazin_index,
            "weak_core_index": self.weak_core_index,
            "inverses": {
                k: (None if v is None else v.to_strings()) for k, v in self.inverses.items()
            },
            "identities": [{"name": n, "holds": ok} for n, ok in self.identities],
        }


def _holds(check: Callable[[], bool]) -> bool:
    try:
        return bool(check())
    except (IdentityViolation, InverseConsistencyError):
        return False


def _unit_w(rows: int, cols: int, seed: int) -> Matrix:
    return Matrix([[(i * 3 + j * 5 + seed) % 7 - 3 for j in range(cols)] for i in range(rows)])


def consistency_report(a: Matrix) -> ConsistencyReport:
    idx = classical.drazin_index(a)
    k = idx.paper_index
    wc = corefamily.weak_core(a)
    y = wc.inverse
    ak = power(a, k)
    d = classical.drazin(a)
    cwc = central.central_weak_core(a)
    cd = central.central_drazin(a)

    rep = ConsistencyReport(a, idx.drazin_index, wc.index)
    rep.inverses = {
        "mp": classical.moore_penrose(a),
        "drazin": d,
        "group": classical.group_inverse(a),
        "core": corefamily.core_inverse(a),
        "core-ep": corefamily.core_ep(a),
        "weak-group": corefamily.weak_group(a),
        "weak-core": y,
        "central-drazin": cd.inverse,
        "central-weak-core": cwc.inverse,
    }

    def add(name: str, check: Callable[[], bool]) -> None:
        rep.identities.append((name, _holds(check)))

    n = a.rows
    add("weak core axioms", lambda: check_axioms(a, y, InverseKind.WEAK_CORE, wc.index).overall)
    add("ind_wc = max(i(a), 1)", lambda: wc.index == k)
    add("(a^⊞)^⊞ = a^2 a^⊞, ((a^⊞)^⊞)^⊞ = a^⊞", lambda: corefamily.weak_core_double(a) is not None)
    add("(a^⊞)^# = a^2 a^⊞", lambda: classical.group_inverse(y) == a @ a @ y)
    add("(a^⊞)^Ⓦ = a^2 a^⊞", lambda: corefamily.weak_group(y) == a @ a @ y)
    add("a^⊞ = a^(k-1) (a^k)^⊕", lambda: corefamily.wc_via_core(a) is not None)
    for m in (2, 3):
        add(f"(a^{m})^⊞ = (a^⊞)^{m}", lambda m=m: corefamily.wc_power(a, m) is not None)
    add("(a^⊞)^k = (a^k)^⊕", lambda: power(y, k) == corefamily.core_inverse(ak))
    add("a^⊞ = a^D a^k (a^k)^⊕", lambda: d @ ak @ corefamily.core_inverse(ak) == y)
    add("a a^⊞ = a^k (a^k)†", lambda: wc.projector == ak @ classical.moore_penrose(ak))
    add("a^D = (a^⊞)^(k+1) a^k", lambda: power(y, k + 1) @ ak == d)
    add("(a^m)^# = (a^D)^m, m = k, k+1", lambda: all(
        classical.group_inverse(power(a, m)) == power(d, m) for m in (k, k + 1)
    ))
    add("a^⊞ = a^⊕†", lambda: y == corefamily.core_ep(a))
    add("idempotent construction invariant", lambda: all(
        corefamily.idempotent_construction(a, k, w) == y
        for w in (None, _unit_w(n, n, 0), _unit_w(n, n, 1))
    ))
    add("range characterization agrees", lambda: characterize_weak_core(a, y, k)
        == check_axioms(a, y, InverseKind.WEAK_CORE, k).overall)

    nilpotent_or_invertible = idx.drazin_index == 0 or d.is_zero()
    add("a^⊟ exists iff a nilpotent or invertible", lambda: cwc.exists == nilpotent_or_invertible)
    add("a^ⓓ exists iff a^⊟ exists", lambda: cd.exists == cwc.exists)
    if cwc.exists:
        add("a^⊟ = a^⊕† = a^ⓓ = a^D", lambda: cwc.inverse == corefamily.core_ep(a) == cd.inverse == d)
        add("(a^⊟)^⊟ = a^2 a^⊟, (a^n)^⊟ = (a^⊟)^n", lambda: central.central_double(a) is not None)
        add("a^⊟ = a^ⓓ a^k (a^k)^(1,3)", lambda: all(
            central.central_via_13(a, w) == cwc.inverse for w in (None, _unit_w(n, n, 2))
        ))
    return rep
