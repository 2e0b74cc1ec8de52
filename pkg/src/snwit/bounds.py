"""Classical spectral-radius bounds for nonnegative square matrices.

Four row-sum based sandwiches of the Perron root: Frobenius, Ledermann,
Ostrowski, and Brauer. The witness coefficient formulas are these bounds
specialized to arrangement matrices, so this module keeps the generic
matrix versions, each usable (and fuzzed) on its own.

Notation throughout: P_r are the row sums, p = min P_r, P = max P_r, and
m = min entry of the matrix.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .states import ValidationError

__all__ = [
    "RowSumStats",
    "BoundPair",
    "row_sum_stats",
    "spectral_radius",
    "frobenius_bounds",
    "ledermann_bounds",
    "ostrowski_bounds",
    "brauer_bounds",
]

EQUAL_ROWS_TOL = 1e-14


@dataclasses.dataclass(frozen=True)
class RowSumStats:
    row_sums: np.ndarray
    p: float
    P: float
    m: float


@dataclasses.dataclass(frozen=True)
class BoundPair:
    lower: float
    upper: float
    method: str


def _as_nonneg_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if a.min() < 0:
        raise ValidationError(f"negative entry {a.min():.6g}; bounds require a nonnegative matrix")
    return a


def row_sum_stats(matrix) -> RowSumStats:
    """Row sums plus the three scalars (p, P, m) all four bounds are built from."""
    a = _as_nonneg_square(matrix)
    rs = a.sum(axis=1)
    return RowSumStats(row_sums=rs, p=float(rs.min()), P=float(rs.max()), m=float(a.min()))


def spectral_radius(matrix) -> float:
    """Perron root of a nonnegative matrix, via a dense eigensolve."""
    a = _as_nonneg_square(matrix)
    return float(np.abs(np.linalg.eigvals(a)).max())


def frobenius_bounds(matrix) -> BoundPair:
    """p <= rho(M) <= P."""
    st = row_sum_stats(matrix)
    return BoundPair(lower=st.p, upper=st.P, method="frobenius")


def ledermann_bounds(matrix) -> BoundPair:
    """Ledermann refinement using delta = max ratio P_r/P_s over rows with P_r < P_s.

    Returns the exact pair (P, P) when all row sums agree, since rho(M) = P
    there and delta is undefined. With m = 0 the correction terms vanish and
    the pair reduces to Frobenius.
    """
    st = row_sum_stats(matrix)
    if st.P - st.p < EQUAL_ROWS_TOL:
        return BoundPair(lower=st.P, upper=st.P, method="ledermann")
    if st.m == 0.0:
        return BoundPair(lower=st.p, upper=st.P, method="ledermann")
    # m > 0 forces every row sum positive, so the ratios below are safe.
    u = np.unique(st.row_sums)
    delta = float((u[:-1] / u[1:]).max())
    sq = np.sqrt(delta)
    return BoundPair(
        lower=st.p + st.m * (1.0 / sq - 1.0),
        upper=st.P - st.m * (1.0 - sq),
        method="ledermann",
    )


def ostrowski_bounds(matrix) -> BoundPair:
    """Ostrowski refinement with sigma = sqrt((p - m)/(P - m)).

    Degenerate cases: equal row sums give the exact (P, P); p = m sends
    sigma to zero, where the upper bound has the limit P - m and the lower
    bound is clamped to p.
    """
    st = row_sum_stats(matrix)
    if st.P - st.p < EQUAL_ROWS_TOL:
        return BoundPair(lower=st.P, upper=st.P, method="ostrowski")
    if st.p == st.m:
        return BoundPair(lower=st.p, upper=st.P - st.m, method="ostrowski")
    sigma = np.sqrt((st.p - st.m) / (st.P - st.m))
    return BoundPair(
        lower=st.p + st.m * (1.0 / sigma - 1.0),
        upper=st.P - st.m * (1.0 - sigma),
        method="ostrowski",
    )


def brauer_bounds(matrix) -> BoundPair:
    """Brauer refinement via the auxiliaries g and h.

    g = (P - 2m + sqrt(P^2 - 4m(P - p))) / (2(p - m))
    h = (-P + 2m + sqrt(P^2 + 4m(P - p))) / (2m)

    upper = P - m(1 - 1/g), lower = p + m(h - 1). The h auxiliary is often
    quoted with -p in place of -P; that variant overshoots the true radius
    on roughly half of random nonnegative matrices, while the form above
    satisfies h >= 1 and keeps the sandwich. Limits: m = 0 gives (p, P),
    p = m sends g to infinity so the upper bound becomes P - m, and equal
    row sums give the exact (P, P).
    """
    st = row_sum_stats(matrix)
    if st.P - st.p < EQUAL_ROWS_TOL:
        return BoundPair(lower=st.P, upper=st.P, method="brauer")
    if st.m == 0.0:
        return BoundPair(lower=st.p, upper=st.P, method="brauer")
    if st.p == st.m:
        upper = st.P - st.m
    else:
        g = (st.P - 2 * st.m + np.sqrt(st.P**2 - 4 * st.m * (st.P - st.p))) / (
            2 * (st.p - st.m)
        )
        upper = st.P - st.m * (1.0 - 1.0 / g)
    h = (-st.P + 2 * st.m + np.sqrt(st.P**2 + 4 * st.m * (st.P - st.p))) / (2 * st.m)
    return BoundPair(lower=st.p + st.m * (h - 1.0), upper=upper, method="brauer")
