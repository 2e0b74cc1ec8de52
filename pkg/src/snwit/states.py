"""Bipartite quantum states: validated carriers, named states, random ensembles.

Everything downstream (realignment spectra, witness coefficients, the CLI)
consumes the two carrier types defined here. ``BipartiteState`` holds a full
density matrix on a ``dim_a * dim_b`` Hilbert space and checks the physics on
construction; ``PureBipartite`` holds a normalized amplitude vector. Witness
target operators reuse ``BipartiteState`` with ``hermitian_only=True``, which
keeps the Hermiticity check but drops the trace and positivity requirements.
"""
from __future__ import annotations

import dataclasses

import numpy as np

__all__ = [
    "ValidationError",
    "BipartiteState",
    "PureBipartite",
    "max_entangled",
    "rho0",
    "rho_family",
    "random_mixed",
    "random_sn_bounded",
    "haar_unitary",
    "partial_transpose",
    "purity",
    "schmidt_coefficients",
]

HERMITICITY_RTOL = 1e-10
TRACE_ATOL = 1e-10
PSD_RTOL = 1e-10
NORM_ATOL = 1e-12


class ValidationError(ValueError):
    """An input failed one of the documented invariant checks."""


@dataclasses.dataclass(frozen=True)
class BipartiteState:
    """Density matrix on a ``dim_a x dim_b`` bipartite system.

    Parameters
    ----------
    dim_a, dim_b : int
        Local dimensions, each at least 2.
    matrix : ndarray
        Square complex matrix of size ``dim_a * dim_b``. Validated on
        construction: finite entries, Hermitian to relative 1e-10, and
        (unless ``hermitian_only``) unit trace to 1e-10 and smallest
        eigenvalue >= -1e-10 * trace.
    hermitian_only : bool
        Relax the trace and positivity checks. Used for witness target
        operators, which are arbitrary Hermitian observables.
    """

    dim_a: int
    dim_b: int
    matrix: np.ndarray
    hermitian_only: bool = False

    def __post_init__(self) -> None:
        if self.dim_a < 2 or self.dim_b < 2:
            raise ValidationError(f"local dimensions must be >= 2, got {self.dim_a}x{self.dim_b}")
        m = np.asarray(self.matrix, dtype=complex)
        n = self.dim_a * self.dim_b
        if m.shape != (n, n):
            raise ValidationError(f"matrix shape {m.shape} does not match dimensions ({n}, {n})")
        if not np.all(np.isfinite(m.view(float))):
            raise ValidationError("matrix contains non-finite entries")
        scale = np.abs(m).max()
        if scale > 0 and np.abs(m - m.conj().T).max() > HERMITICITY_RTOL * scale:
            raise ValidationError("not Hermitian: max|M - M^dag| exceeds 1e-10 * max|M|")
        if not self.hermitian_only:
            tr = np.trace(m)
            if abs(tr - 1.0) > TRACE_ATOL:
                raise ValidationError(f"trace deviates from one: Tr = {tr:.6g}")
            lo = np.linalg.eigvalsh(m)[0]
            if lo < -PSD_RTOL * tr.real:
                raise ValidationError(f"not positive semidefinite: min eigenvalue {lo:.3e}")
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b


@dataclasses.dataclass(frozen=True)
class PureBipartite:
    """Pure state |psi> on a bipartite system, stored as its amplitude vector."""

    dim_a: int
    dim_b: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        v = np.asarray(self.amplitudes, dtype=complex).ravel()
        if v.shape != (self.dim_a * self.dim_b,):
            raise ValidationError(
                f"amplitude length {v.size} does not match {self.dim_a}*{self.dim_b}"
            )
        nrm = np.linalg.norm(v)
        if abs(nrm - 1.0) > NORM_ATOL:
            raise ValidationError(f"state vector not normalized: ||psi|| = {nrm:.12g}")
        object.__setattr__(self, "amplitudes", v)

    def projector(self) -> BipartiteState:
        """Return |psi><psi| as a validated density matrix."""
        v = self.amplitudes
        return BipartiteState(self.dim_a, self.dim_b, np.outer(v, v.conj()))


def max_entangled(n: int) -> PureBipartite:
    """Maximally entangled state (1/sqrt(n)) sum_i |ii> on an n x n system."""
    if n < 2:
        raise ValidationError(f"need n >= 2, got {n}")
    psi = np.zeros(n * n, dtype=complex)
    psi[:: n + 1] = 1.0 / np.sqrt(n)
    return PureBipartite(n, n, psi)


def rho0() -> BipartiteState:
    """The mixed two-ququad reference state used throughout the worked examples.

    Defined on a 4 x 4 system as half the projector onto
    (|00> + |11> + |22>)/sqrt(3) plus a quarter of the unnormalized projector
    onto |23> + |32>.
    """
    d = 4
    phi = np.zeros(d * d, dtype=complex)
    phi[[0, d + 1, 2 * d + 2]] = 1.0 / np.sqrt(3)
    chi = np.zeros(d * d, dtype=complex)
    chi[2 * d + 3] = 1.0
    chi[3 * d + 2] = 1.0
    rho = 0.5 * np.outer(phi, phi.conj()) + 0.25 * np.outer(chi, chi.conj())
    return BipartiteState(d, d, rho)


def rho_family(k: int) -> BipartiteState:
    """One-parameter family of k x k mixed states with known realignment spectrum.

    rho_k = 1/2 |phi+><phi+| + 1/4 (|k-2,k-1> + |k-1,k-2>)(<k-2,k-1| + <k-1,k-2|)

    with |phi+> the maximally entangled state. The spectrum has the closed
    form {1/(2k) + 1/4 (twice), 1/(2k) (k^2 - 4 times), |1/(2k) - 1/4| (twice)}.
    """
    if k < 2:
        raise ValidationError(f"need k >= 2, got {k}")
    phi = max_entangled(k).amplitudes
    chi = np.zeros(k * k, dtype=complex)
    chi[(k - 2) * k + (k - 1)] = 1.0
    chi[(k - 1) * k + (k - 2)] = 1.0
    rho = 0.5 * np.outer(phi, phi.conj()) + 0.25 * np.outer(chi, chi.conj())
    return BipartiteState(k, k, rho)


def random_mixed(
    d: int,
    n_pure: int,
    rng: np.random.Generator,
    dirichlet_weights: bool = False,
) -> BipartiteState:
    """Convex combination of ``n_pure`` Haar-random pure states on d x d.

    Each pure state is a normalized vector of independent complex standard
    normals. Weights are uniform 1/n_pure by default; ``dirichlet_weights``
    switches to a flat Dirichlet draw. Deterministic given the generator
    state, so callers seed ``rng`` explicitly.
    """
    if d < 2 or n_pure < 1:
        raise ValidationError(f"need d >= 2 and n_pure >= 1, got d={d}, n_pure={n_pure}")
    psis = rng.standard_normal((n_pure, d * d)) + 1j * rng.standard_normal((n_pure, d * d))
    psis /= np.linalg.norm(psis, axis=1)[:, None]
    if dirichlet_weights:
        w = rng.dirichlet(np.ones(n_pure))
        rho = (psis.T * w) @ psis.conj()
    else:
        rho = psis.T @ psis.conj() / n_pure
    return BipartiteState(d, d, rho)


def haar_unitary(d: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed d x d unitary via QR of a complex Gaussian matrix.

    The R-diagonal phases are divided out so the distribution is Haar rather
    than the raw QR output, which is biased.
    """
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph


def random_sn_bounded(
    d: int, k: int, n_pure: int, rng: np.random.Generator
) -> BipartiteState:
    """Random mixed state with Schmidt number at most k on a d x d system.

    Mixes ``n_pure`` pure states, each built as sum_i s_i U|i> (x) V|i> with a
    random sorted Schmidt vector (squares uniform on the simplex) and
    independent Haar unitaries U, V. Every constituent has Schmidt rank <= k,
    so the mixture lies in the Schmidt-number-k set by construction.
    """
    if not 1 <= k <= d:
        raise ValidationError(f"need 1 <= k <= d, got k={k}, d={d}")
    if n_pure < 1:
        raise ValidationError(f"need n_pure >= 1, got {n_pure}")
    rho = np.zeros((d * d, d * d), dtype=complex)
    for _ in range(n_pure):
        x = np.sort(rng.dirichlet(np.ones(k)))[::-1]
        s = np.sqrt(x)
        u = haar_unitary(d, rng)
        v = haar_unitary(d, rng)
        amp = u[:, :k] @ np.diag(s) @ v[:, :k].T
        psi = amp.ravel()
        rho += np.outer(psi, psi.conj())
    return BipartiteState(d, d, rho / n_pure)


def partial_transpose(state: BipartiteState) -> np.ndarray:
    """Partial transpose on the second factor; returns the raw matrix.

    The output is Hermitian and trace-one but generally not PSD, which is
    exactly the point: a negative eigenvalue certifies entanglement.
    """
    da, db = state.dim_a, state.dim_b
    return (
        state.matrix.reshape(da, db, da, db).transpose(0, 3, 2, 1).reshape(da * db, da * db)
    )


def purity(state: BipartiteState) -> float:
    """Tr(rho^2), computed as the squared Frobenius norm of the matrix."""
    return float(np.vdot(state.matrix, state.matrix).real)


def schmidt_coefficients(psi: PureBipartite) -> np.ndarray:
    """Schmidt coefficients of a pure state, descending.

    Singular values of the dim_a x dim_b amplitude matrix, zero-padded to
    min(dim_a, dim_b). They are nonnegative, sorted, and their squares sum
    to one for a normalized input.
    """
    amp = psi.amplitudes.reshape(psi.dim_a, psi.dim_b)
    s = np.linalg.svd(amp, compute_uv=False)
    full = np.zeros(min(psi.dim_a, psi.dim_b))
    full[: s.size] = s
    return full
