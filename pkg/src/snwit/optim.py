"""Numeric maximization of the witness objective F over Schmidt vectors.

F(s) = sum_l mu_l t_l(s), where t is the descending sort of the k^2 pairwise
products s_i s_j. The maximum over unit vectors s with descending nonnegative
entries is the best possible witness coefficient; this module computes it by
multistart coordinate ascent, for any k, without needing an arrangement
enumeration. The eigenvalue route in the witness module drops the ordering
constraint on s, so its value can only be larger; the two agree whenever the
eigenvalue maximizer happens to be feasible, which makes maximize_F both a
general-k fallback and an independent check.

F is piecewise linear in the sorted products and nonsmooth at ties, so the
search uses derivative-free pairwise mass transfers on x = s^2 (points on the
probability simplex), re-sorting after every accepted move. Sorting never
decreases F because F is symmetric under permutations of s.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .osd import OSCSpectrum
from .states import ValidationError

__all__ = ["OptimResult", "eval_F", "maximize_F", "grid_oracle"]

# Step palette for the pairwise transfers, from coarse basin hopping down to
# polish. Fractions of the donor coordinate, so iterates stay on the simplex.
_STEPS = np.array([0.25, 0.1, 0.04, 0.016, 0.006, 0.0025, 1e-3, 4e-4, 1e-4, 1e-5, 1e-6, 1e-7])

_IMPROVE_TOL = 1e-12
_MAX_SWEEPS = 10000


@dataclasses.dataclass(frozen=True)
class OptimResult:
    best_s: np.ndarray
    best_value: float
    restarts: int
    iterations: int


def _mu_vector(mu, k: int) -> np.ndarray:
    m = mu.mu if isinstance(mu, OSCSpectrum) else np.asarray(mu, dtype=float)
    if m.size < k * k:
        m = np.concatenate([m, np.zeros(k * k - m.size)])
    return m[: k * k]


def eval_F(mu, s) -> float:
    """Objective value for one Schmidt vector: descending products dotted into mu."""
    s = np.asarray(s, dtype=float)
    k = s.size
    t = np.sort(np.outer(s, s).ravel())[::-1]
    return float(np.dot(_mu_vector(mu, k), t))


def _value_of_x(muk: np.ndarray, x: np.ndarray) -> float:
    s = np.sqrt(np.clip(x, 0, None))
    t = np.sort(np.outer(s, s).ravel())[::-1]
    return float(t @ muk)


def _ascend(muk: np.ndarray, x: np.ndarray) -> tuple[np.ndarray, float, int]:
    """Coordinate ascent from one start: try every (donor, receiver, step) move,
    take the best, stop when nothing improves by more than the tolerance."""
    k = x.size
    pairs = [(i, j) for i in range(k) for j in range(k) if i != j]
    pi = np.array([p[0] for p in pairs])
    pj = np.array([p[1] for p in pairs])
    best = _value_of_x(muk, x)
    sweeps = 0
    while sweeps < _MAX_SWEEPS:
        sweeps += 1
        delta = x[pi][:, None] * _STEPS[None, :]  # (npairs, nsteps)
        cand = np.repeat(x[None, :], len(pairs) * _STEPS.size, 0)
        cand = cand.reshape(len(pairs), _STEPS.size, k)
        for a in range(len(pairs)):
            cand[a, :, pi[a]] -= delta[a]
            cand[a, :, pj[a]] += delta[a]
        cand = cand.reshape(-1, k)
        s = np.sqrt(np.clip(cand, 0, None))
        prod = (s[:, :, None] * s[:, None, :]).reshape(-1, k * k)
        prod.sort(axis=1)
        vals = prod[:, ::-1] @ muk
        ibest = int(np.argmax(vals))
        if vals[ibest] > best + _IMPROVE_TOL:
            best = float(vals[ibest])
            x = np.sort(cand[ibest])[::-1]
            x = np.clip(x, 0, None)
            x /= x.sum()
        else:
            break
    return x, best, sweeps


def maximize_F(mu, k: int, restarts: int = 32, rng=0) -> OptimResult:
    """Multistart ascent over the ordered squared simplex.

    Starts are the uniform vector, the basis vector e1, and restarts - 2
    sorted Dirichlet draws. Deterministic given (mu, k, restarts, rng), where
    rng may be a seed or a Generator. Ties between restarts resolve to the
    earliest, so concurrent evaluation with independent substreams would give
    the same result.
    """
    if restarts < 1:
        raise ValidationError(f"need restarts >= 1, got {restarts}")
    if k < 1:
        raise ValidationError(f"need k >= 1, got {k}")
    muk = _mu_vector(mu, k)
    gen = np.random.default_rng(rng)
    starts = [np.full(k, 1.0 / k), np.eye(k)[0]]
    for _ in range(max(0, restarts - 2)):
        starts.append(np.sort(gen.dirichlet(np.ones(k)))[::-1])
    best_val, best_x = -np.inf, starts[0]
    total = 0
    for x0 in starts[:restarts]:
        x, val, sweeps = _ascend(muk, np.array(x0, dtype=float))
        total += sweeps
        if val > best_val + 1e-15:
            best_val, best_x = val, x
    return OptimResult(
        best_s=np.sqrt(best_x), best_value=best_val, restarts=restarts, iterations=total
    )


def grid_oracle(mu, k: int, resolution: int = 200) -> float:
    """Exhaustive grid maximum of F over the ordered squared simplex.

    Test-only brute force for k <= 3; the grid enumerates ordered integer
    compositions of the resolution, so refining the resolution can only
    raise the value. Not implemented beyond k = 3 (combinatorial blow-up).
    """
    if k > 3:
        raise ValidationError(f"grid_oracle supports k <= 3, got {k}")
    if resolution > 200:
        raise ValidationError(f"resolution capped at 200, got {resolution}")
    muk = _mu_vector(mu, k)
    best = -np.inf
    r = resolution
    if k == 1:
        return float(muk[0])
    if k == 2:
        for n1 in range((r + 1) // 2, r + 1):
            x = np.array([n1 / r, (r - n1) / r])
            best = max(best, _value_of_x(muk, x))
    else:
        for n1 in range(r + 1):
            for n2 in range(min(n1, r - n1) + 1):
                n3 = r - n1 - n2
                if n3 < 0 or n3 > n2:
                    continue
                x = np.array([n1, n2, n3], dtype=float) / r
                best = max(best, _value_of_x(muk, x))
    return best
