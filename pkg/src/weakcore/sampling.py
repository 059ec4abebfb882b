"""Random integer test matrices with controlled rank and index."""

from __future__ import annotations

import random
from dataclasses import dataclass

from weakcore.matrix import Matrix, block_diag


@dataclass
class SampleConfig:
    min_size: int = 2
    max_size: int = 5
    entry_bound: int = 9
    seed: int = 20261015
    max_tries: int = 200


def _uniform(rng: random.Random, rows: int, cols: int, bound: int) -> Matrix:
    return Matrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def _unimodular(rng: random.Random, n: int) -> tuple[Matrix, Matrix]:
    """A product of a few integer shears together with its exact inverse."""
    p = Matrix.identity(n)
    p_inv = Matrix.identity(n)
    for _ in range(rng.randint(1, 3)):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        e = Matrix([[int(r == s) + (c if (r, s) == (i, j) else 0) for s in range(n)] for r in range(n)])
        e_inv = Matrix([[int(r == s) - (c if (r, s) == (i, j) else 0) for s in range(n)] for r in range(n)])
        p, p_inv = p @ e, e_inv @ p_inv
    return p, p_inv


def _nilpotent_block(rng: random.Random, n: int) -> Matrix:
    return Matrix(
        [[rng.randint(-2, 2) if s > r else 0 for s in range(n)] for r in range(n)]
    )


def _conjugated(rng: random.Random, core: Matrix) -> Matrix:
    p, p_inv = _unimodular(rng, core.rows)
    return p @ core @ p_inv


FLAVOURS = ("uniform", "low-rank", "nilpotent", "core-nilpotent", "singular-block")


def sample_matrix(rng: random.Random, n: int, flavour: str, bound: int = 9) -> Matrix:
    """One n x n integer matrix of the given flavour, entries not yet bounded."""
    if flavour == "uniform":
        return _uniform(rng, n, n, bound)
    if flavour == "low-rank":
        r = rng.randint(1, n - 1)
        return _uniform(rng, n, r, 2) @ _uniform(rng, r, n, 2)
    if flavour == "nilpotent":
        return _conjugated(rng, _nilpotent_block(rng, n))
    if flavour == "core-nilpotent":
        # invertible part of size s plus a nilpotent part: index > 1 usually
        s = rng.randint(1, n - 1)
        c = _uniform(rng, s, s, 3)
        return _conjugated(rng, block_diag(c, _nilpotent_block(rng, n - s)))
    if flavour == "singular-block":
        s = rng.randint(1, n - 1)
        return _conjugated(rng, block_diag(_uniform(rng, s, s, 3), Matrix.zeros(n - s)))
    raise ValueError(f"unknown flavour {flavour!r}")


def random_matrices(count: int, config: SampleConfig | None = None) -> list[Matrix]:
    """``count`` square matrices cycling through every flavour and size.

    Candidates with any entry outside ``[-entry_bound, entry_bound]`` are
    redrawn, so the bound holds for every returned matrix.
    """
    config = config or SampleConfig()
    rng = random.Random(config.seed)
    sizes = list(range(config.min_size, config.max_size + 1))
    out = []
    for i in range(count):
        flavour = FLAVOURS[i % len(FLAVOURS)]
        n = sizes[(i // len(FLAVOURS)) % len(sizes)]
        for _ in range(config.max_tries):
            m = sample_matrix(rng, n, flavour, config.entry_bound)
            if all(abs(x) <= config.entry_bound for row in m for x in row):
                break
        else:
            raise RuntimeError(f"could not draw a bounded {flavour} matrix of size {n}")
        out.append(m)
    return out


def orthogonal_block_pair(rng: random.Random, n1: int, n2: int, bound: int = 9) -> tuple[Matrix, Matrix]:
    """A = diag(X, 0), B = diag(0, Y): AB = BA = 0 and A*B = 0 by construction."""
    x = sample_matrix(rng, n1, rng.choice(FLAVOURS), bound) if n1 > 1 else _uniform(rng, 1, 1, bound)
    y = sample_matrix(rng, n2, rng.choice(FLAVOURS), bound) if n2 > 1 else _uniform(rng, 1, 1, bound)
    return block_diag(x, Matrix.zeros(n2)), block_diag(Matrix.zeros(n1), y)
