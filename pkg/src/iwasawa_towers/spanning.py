"""Spanning-tree counts by the Matrix-Tree theorem and Bareiss elimination."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .cayley import Multigraph, build_cayley_serre, is_connected, laplacian
from .errors import Disconnected, InternalConsistencyError, LevelTooLarge
from .padic import big_ord
from .seeds import SeedSpec

DEFAULT_VERTEX_CAP = 1024


@dataclass(frozen=True)
class TreeCount:
    kappa: int
    ell_ord: int
    cofactor: int


def bareiss_det(matrix, positive_definite: bool = False) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every division is exact, so all intermediates stay integral.  Rows are
    swapped to find a nonzero pivot unless ``positive_definite`` is set, in
    which case a nonpositive pivot means the input was not positive definite
    and raises InternalConsistencyError.  The input is not modified.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if positive_definite:
            if a[k][k] <= 0:
                raise InternalConsistencyError(f"nonpositive pivot {a[k][k]} at step {k}")
        elif a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        p = a[k][k]
        tail = a[k][k + 1:]
        for i in range(k + 1, n):
            row = a[i]
            f = row[k]
            if f:
                row[k + 1:] = [(x * p - f * y) // prev for x, y in zip(row[k + 1:], tail)]
            elif p != prev:
                row[k + 1:] = [x * p // prev for x in row[k + 1:]]
        prev = p
    det = sign * a[n - 1][n - 1]
    if positive_definite and det <= 0:
        raise InternalConsistencyError(f"nonpositive determinant {det}")
    return det


def reduced_laplacian(g: Multigraph, drop: int = 0) -> list[list[int]]:
    L = laplacian(g)
    return [row[:drop] + row[drop + 1:] for i, row in enumerate(L) if i != drop]


def count_spanning_trees(g: Multigraph, ell: int, drop: int = 0) -> TreeCount:
    """kappa(g) as the (drop, drop) cofactor of the Laplacian, with its l-part split off."""
    if not is_connected(g):
        raise Disconnected(f"graph on {g.vertex_count} vertices is disconnected")
    minor = reduced_laplacian(g, drop)
    kappa = bareiss_det(minor, positive_definite=True)
    e = big_ord(kappa, ell)
    return TreeCount(kappa, e, kappa // ell ** e)


def _level(args):
    spec, n = args
    return n, count_spanning_trees(build_cayley_serre(spec, n), spec.prime)


def ord_profile(spec: SeedSpec, n_max: int, cap: int = DEFAULT_VERTEX_CAP, jobs: int = 1):
    """``[(n, ord_l(kappa_n), kappa_n)]`` for n = 0..n_max."""
    if spec.prime ** n_max > cap:
        raise LevelTooLarge(
            f"level {n_max} has {spec.prime ** n_max} vertices, above the cap of {cap}")
    tasks = [(spec, n) for n in range(n_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_level, tasks))
    else:
        results = [_level(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    return [(n, tc.ell_ord, tc.kappa) for n, tc in results]
