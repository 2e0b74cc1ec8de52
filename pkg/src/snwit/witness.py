"""Schmidt-number witness coefficients.

The certification pipeline: a state sigma with Schmidt number at most k
satisfies Tr(X sigma) <= F*(X, k), where F* is the maximum of
F(s) = sum_l mu_l(X) t_l(s) over descending Schmidt vectors s of length k
(t is the descending sort of the pairwise products s_i s_j). Any upper bound
c >= F* therefore yields a witness c*I - X that is nonnegative on the whole
set, and a negative expectation value certifies Schmidt number >= k + 1.

This module provides the ladder of such coefficients, from tight to cheap:

  lambda  exact maximum via arrangement matrices (k = 2, 3, 4)
  theta   Brauer row-sum bound on the canonical arrangement matrix
  zeta    Ostrowski row-sum bound
  eta     Ledermann-type row-sum bound
  P       first-row sum (Frobenius bound)

together with witness construction and evaluation helpers. All coefficient
formulas depend on the target operator only through its operator Schmidt
coefficients mu and are positively homogeneous of degree one in mu.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from . import optim
from .osd import OSCSpectrum, osc
from .states import BipartiteState, ValidationError

__all__ = [
    "ArrangementMatrix",
    "WitnessCoefficients",
    "SchmidtWitness",
    "canonical_matrix",
    "arrangement_set",
    "lambda_exact",
    "first_row_sum",
    "last_row_sum",
    "theta",
    "zeta",
    "eta",
    "coefficients",
    "build_witness",
    "evaluate_witness",
    "fidelity_bound",
]

CHAIN_SLACK = 1e-9
EQUAL_TOL = 1e-14

# Admissible orderings of the k^2 products s_1 s_1 >= s_1 s_2 >= ... for
# descending s. Each pattern places mu-subscripts into a k x k matrix; the
# first pattern is always the canonical one. For k = 2 the ordering is unique
# up to a tie between positions 2 and 3, which the symmetrization erases.
_PATTERNS_K3 = (
    ((1, 2, 4), (3, 6, 7), (5, 8, 9)),
    ((1, 2, 5), (3, 4, 7), (6, 8, 9)),
)
_PATTERNS_K4 = (
    ((1, 2, 4, 6), (3, 8, 9, 11), (5, 10, 13, 14), (7, 12, 15, 16)),
    ((1, 2, 4, 6), (3, 8, 9, 12), (5, 10, 11, 14), (7, 13, 15, 16)),
    ((1, 2, 4, 10), (3, 6, 7, 12), (5, 8, 9, 14), (11, 13, 15, 16)),
    ((1, 2, 5, 10), (3, 4, 7, 12), (6, 8, 9, 14), (11, 13, 15, 16)),
    ((1, 2, 4, 9), (3, 6, 7, 12), (5, 8, 11, 14), (10, 13, 15, 16)),
    ((1, 2, 5, 9), (3, 4, 7, 12), (6, 8, 11, 14), (10, 13, 15, 16)),
    ((1, 2, 4, 9), (3, 6, 7, 11), (5, 8, 13, 14), (10, 12, 15, 16)),
    ((1, 2, 5, 9), (3, 4, 7, 11), (6, 8, 13, 14), (10, 12, 15, 16)),
    ((1, 2, 4, 7), (3, 6, 9, 12), (5, 10, 11, 14), (8, 13, 15, 16)),
    ((1, 2, 5, 7), (3, 4, 9, 12), (6, 10, 11, 14), (8, 13, 15, 16)),
    ((1, 2, 4, 7), (3, 6, 9, 11), (5, 10, 13, 14), (8, 12, 15, 16)),
    ((1, 2, 5, 7), (3, 4, 9, 11), (6, 10, 13, 14), (8, 12, 15, 16)),
)


@dataclasses.dataclass(frozen=True)
class ArrangementMatrix:
    """One admissible k x k placement of mu-subscripts, with realized values."""

    k: int
    indices: np.ndarray
    values: np.ndarray


@dataclasses.dataclass(frozen=True)
class WitnessCoefficients:
    """The coefficient bundle for certifying Schmidt number >= target_sn.

    ``lambda_exact`` is present for k <= 4, ``lambda_numeric`` when the
    optimizer ran. Construction enforces the ordering
    lambda_numeric <= lambda_exact <= theta <= zeta <= eta <= big_p (slack
    1e-9, missing entries skipped); a violation would falsify the bound
    chain the witnesses rest on, so it raises instead of passing through.
    """

    target_sn: int
    lambda_exact: float | None
    lambda_numeric: float | None
    theta: float
    zeta: float
    eta: float
    big_p: float

    def __post_init__(self) -> None:
        chain = [
            ("lambda_numeric", self.lambda_numeric),
            ("lambda_exact", self.lambda_exact),
            ("theta", self.theta),
            ("zeta", self.zeta),
            ("eta", self.eta),
            ("P", self.big_p),
        ]
        present = [(name, val) for name, val in chain if val is not None]
        for (name_a, a), (name_b, b) in zip(present, present[1:]):
            if a > b + CHAIN_SLACK:
                raise ValidationError(
                    f"coefficient chain violated: {name_a} = {a:.12g} exceeds "
                    f"{name_b} = {b:.12g} (slack {CHAIN_SLACK})"
                )


@dataclasses.dataclass(frozen=True)
class SchmidtWitness:
    """Operator coefficient*I - target, nonnegative on states with SN < target_sn."""

    coefficient: float
    target: BipartiteState
    target_sn: int
    method: str

    def __post_init__(self) -> None:
        if self.coefficient < 0:
            raise ValidationError(f"witness coefficient must be >= 0, got {self.coefficient}")


def _mu_array(mu) -> np.ndarray:
    if isinstance(mu, OSCSpectrum):
        return mu.mu
    return np.asarray(mu, dtype=float)


def _pad(mu, k: int) -> np.ndarray:
    m = _mu_array(mu)
    if m.size < k * k:
        m = np.concatenate([m, np.zeros(k * k - m.size)])
    return m


def _offset(i: int, k: int) -> int:
    return (i - 1) * (2 * k - i + 1)


def _canonical_indices(k: int) -> np.ndarray:
    """Subscript map for the ordering s_i^2 then interleaved off-diagonal products.

    Position (i, i) gets offset(i) + 1 with offset(i) = (i-1)(2k - i + 1);
    for j > i, (i, j) gets offset(i) + 2(j - i) and its mirror (j, i) the
    next subscript. First row therefore reads 1, 2, 4, ..., 2k-2.
    """
    idx = np.zeros((k, k), dtype=int)
    for i in range(1, k + 1):
        idx[i - 1, i - 1] = _offset(i, k) + 1
        for j in range(i + 1, k + 1):
            idx[i - 1, j - 1] = _offset(i, k) + 2 * (j - i)
            idx[j - 1, i - 1] = _offset(i, k) + 2 * (j - i) + 1
    return idx


def canonical_matrix(mu, k: int) -> ArrangementMatrix:
    """Canonical arrangement matrix for a spectrum, zero-padding short input."""
    if k < 1:
        raise ValidationError(f"need k >= 1, got {k}")
    muk = _pad(mu, k)
    idx = _canonical_indices(k)
    return ArrangementMatrix(k=k, indices=idx, values=muk[idx - 1])


def arrangement_set(k: int) -> list[np.ndarray]:
    """All admissible arrangement index patterns for k in {2, 3, 4}.

    One pattern for k = 2, two for k = 3, twelve for k = 4. The canonical
    pattern comes first. Larger k has no enumerated set here; callers fall
    back to the numeric maximizer.
    """
    if k == 2:
        return [np.array([[1, 2], [3, 4]])]
    if k == 3:
        return [np.array(p) for p in _PATTERNS_K3]
    if k == 4:
        return [np.array(p) for p in _PATTERNS_K4]
    raise ValidationError(f"no arrangement enumeration for k = {k}; use optim.maximize_F")


def lambda_exact(mu, k: int) -> float:
    """Best witness coefficient for the k-bounded set, via arrangement matrices.

    k = 2 has the closed form (mu1 + mu4 + sqrt((mu1 - mu4)^2 + (mu2 + mu3)^2)) / 2,
    which is the top eigenvalue of the symmetrized 2 x 2 canonical matrix. For
    k = 3 and 4 the value is the maximum over the admissible patterns of the
    largest eigenvalue of (M + M^T)/2. Since s^T M s depends on M only through
    its symmetric part, and every feasible s realizes one of the patterns,
    this eigenvalue maximum upper-bounds F(s) everywhere and is attained, so
    it equals the exact optimum.
    """
    muk = _pad(mu, k)
    if k == 2:
        return float(
            0.5 * (muk[0] + muk[3] + np.sqrt((muk[0] - muk[3]) ** 2 + (muk[1] + muk[2]) ** 2))
        )
    if k in (3, 4):
        best = -np.inf
        for pat in arrangement_set(k):
            m = muk[pat - 1]
            best = max(best, float(np.linalg.eigvalsh((m + m.T) / 2).max()))
        return best
    raise ValidationError(f"lambda_exact supports k in {{2, 3, 4}}, got {k}; use maximize_F")


def first_row_sum(mu, k: int) -> float:
    """First-row sum of the canonical matrix: P = mu1 + mu2 + mu4 + ... + mu_{2k-2}."""
    muk = _pad(mu, k)
    return float(muk[0] + sum(muk[2 * j - 1] for j in range(1, k)))


def last_row_sum(mu, k: int) -> float:
    """Last-row sum of the canonical matrix: p = mu_{2k-1} + mu_{4k-4} + ... + mu_{k^2}."""
    muk = _pad(mu, k)
    return float(sum(muk[_offset(j, k) + 2 * (k - j)] for j in range(1, k)) + muk[k * k - 1])


def _ppm(mu, k: int) -> tuple[float, float, float]:
    muk = _pad(mu, k)
    return first_row_sum(muk, k), last_row_sum(muk, k), float(muk[k * k - 1])


def theta(mu, k: int) -> float:
    """Brauer-type upper bound on lambda from the canonical row sums.

    theta = P - m + 2m(p - m) / (P - 2m + sqrt(P^2 - 4m(P - p))), with
    m = mu_{k^2}. Degenerate limits: m = 0 or equal row sums give exactly P,
    and p = m gives P - m.
    """
    P, p, m = _ppm(mu, k)
    if P <= 0:
        return 0.0
    if P - p < EQUAL_TOL:
        return P
    if m == 0.0:
        return P
    if p <= m:
        return P - m
    return P - m + m * 2 * (p - m) / (P - 2 * m + np.sqrt(P * P - 4 * m * (P - p)))


def zeta(mu, k: int) -> float:
    """Ostrowski-type upper bound: zeta = P - m(1 - sqrt((p - m)/(P - m)))."""
    P, p, m = _ppm(mu, k)
    if P <= 0:
        return 0.0
    if P - p < EQUAL_TOL or m == 0.0:
        return P
    return P - m * (1.0 - np.sqrt((p - m) / (P - m)))


def eta(mu, k: int) -> float:
    """Ledermann-type upper bound: eta = P - m(1 - sqrt(p/P))."""
    P, p, m = _ppm(mu, k)
    if P <= 0:
        return 0.0
    if P - p < EQUAL_TOL or m == 0.0:
        return P
    return P - m * (1.0 - np.sqrt(p / P))


def coefficients(
    target: BipartiteState,
    k: int,
    with_numeric: bool = False,
    rng=0,
    restarts: int = 32,
) -> WitnessCoefficients:
    """Full coefficient bundle of a Hermitian target for the k-bounded set.

    Computes the operator Schmidt spectrum once, then lambda_exact for
    k <= 4, the numeric maximizer when requested (always for k >= 5, where
    no exact method exists), and the three row-sum bounds plus P. The
    returned bundle certifies Schmidt number >= k + 1 when used as a witness.
    """
    if k < 2:
        raise ValidationError(f"need k >= 2, got {k}")
    spectrum = osc(target)
    lam = lambda_exact(spectrum, k) if k <= 4 else None
    lam_hat = None
    if with_numeric or k > 4:
        lam_hat = optim.maximize_F(spectrum, k, restarts=restarts, rng=rng).best_value
    return WitnessCoefficients(
        target_sn=k + 1,
        lambda_exact=lam,
        lambda_numeric=lam_hat,
        theta=theta(spectrum, k),
        zeta=zeta(spectrum, k),
        eta=eta(spectrum, k),
        big_p=first_row_sum(spectrum, k),
    )


def build_witness(
    target: BipartiteState,
    k: int,
    method: str,
    fixed_value: float | None = None,
    rng=0,
    restarts: int = 32,
) -> SchmidtWitness:
    """Construct the witness coefficient*I - target for the chosen method.

    ``method`` is one of lambda, theta, zeta, eta, bigP, mu1, fixed. The
    formula methods need k >= 2 and lambda additionally k <= 4; mu1 gives the
    entanglement witness mu1*I - X (meaningful with k = 1); fixed takes the
    coefficient from ``fixed_value`` (for example a fidelity bound k/n).
    """
    if method == "fixed":
        if fixed_value is None:
            raise ValidationError("method 'fixed' requires fixed_value")
        return SchmidtWitness(
            coefficient=float(fixed_value), target=target, target_sn=k + 1, method=method
        )
    spectrum = osc(target)
    if method == "mu1":
        coeff = float(spectrum.mu[0]) if spectrum.mu.size else 0.0
    elif method == "lambda":
        if k > 4:
            raise ValidationError(
                f"method 'lambda' supports k <= 4; got k = {k} (use the numeric maximizer)"
            )
        coeff = lambda_exact(spectrum, k)
    elif method == "numeric":
        coeff = optim.maximize_F(spectrum, k, restarts=restarts, rng=rng).best_value
    elif method in ("theta", "zeta", "eta", "bigP"):
        if k < 2:
            raise ValidationError(f"method '{method}' needs k >= 2, got {k}")
        fn = {"theta": theta, "zeta": zeta, "eta": eta, "bigP": first_row_sum}[method]
        coeff = fn(spectrum, k)
    else:
        raise ValidationError(f"unknown witness method '{method}'")
    return SchmidtWitness(coefficient=coeff, target=target, target_sn=k + 1, method=method)


def evaluate_witness(witness: SchmidtWitness, state: BipartiteState) -> float:
    """Expectation value coefficient - Tr(target rho); negative certifies SN >= target_sn."""
    if (witness.target.dim_a, witness.target.dim_b) != (state.dim_a, state.dim_b):
        raise ValidationError(
            f"dimension mismatch: witness on {witness.target.dim_a}x{witness.target.dim_b}, "
            f"state on {state.dim_a}x{state.dim_b}"
        )
    tr = np.trace(witness.target.matrix @ state.matrix)
    if abs(tr.imag) > 1e-10:
        raise ValidationError(f"expectation has imaginary residue {tr.imag:.3e}")
    return float(witness.coefficient - tr.real)


def fidelity_bound(k: int, n: int) -> float:
    """Maximal overlap with the n-dimensional maximally entangled state over the
    Schmidt-number-k set: <phi+|sigma|phi+> <= k/n."""
    if not 1 <= k <= n:
        raise ValidationError(f"need 1 <= k <= n, got k={k}, n={n}")
    return k / n
