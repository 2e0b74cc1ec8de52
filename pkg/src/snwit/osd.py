"""Operator Schmidt decomposition: realignment, correlation matrices, spectra.

A bipartite density matrix can be expanded as rho = sum_i mu_i A_i (x) B_i
with Hilbert-Schmidt orthonormal operator factors. The coefficients mu_i are
the singular values of the realigned matrix, and they drive every witness
formula in this package. This module computes them, together with the more
general correlation matrix Tr((C_k^dag (x) D_l^dag) rho) for explicit local
operator bases.
"""
from __future__ import annotations

import dataclasses

import numpy as np

from .states import BipartiteState, ValidationError

__all__ = [
    "OSCSpectrum",
    "OperatorBasis",
    "realign",
    "osc",
    "matrix_unit_basis",
    "gellmann_basis",
    "correlation_matrix",
    "ccnr_value",
]

ZERO_RTOL = 1e-12


@dataclasses.dataclass(frozen=True)
class OSCSpectrum:
    """Operator Schmidt coefficients of one state, descending.

    ``mu`` holds the singular values of the realignment; ``source_purity`` is
    Tr(rho^2) of the state they came from, which equals sum(mu^2) up to SVD
    roundoff. ``numerical_zeros`` flags entries below 1e-12 * mu[0]; they are
    reported verbatim but should be treated as exact zeros (SVD noise floor).
    """

    mu: np.ndarray
    source_purity: float

    def __post_init__(self) -> None:
        m = np.asarray(self.mu, dtype=float)
        object.__setattr__(self, "mu", m)

    @property
    def numerical_zeros(self) -> np.ndarray:
        if self.mu.size == 0 or self.mu[0] == 0.0:
            return np.ones(self.mu.shape, dtype=bool)
        return self.mu < ZERO_RTOL * self.mu[0]


@dataclasses.dataclass(frozen=True)
class OperatorBasis:
    """Hilbert-Schmidt orthonormal basis of d x d operators (d^2 elements)."""

    dim: int
    elements: tuple

    def gram(self) -> np.ndarray:
        e = np.stack(self.elements)
        return np.einsum("iab,jab->ij", e.conj(), e)


def realign(state: BipartiteState) -> np.ndarray:
    """Realignment R of a state, size dim_a^2 x dim_b^2.

    Index convention (1-based): R[(i-1)*dim_a + j, (k-1)*dim_b + l] = <ik|rho|jl>.
    This is the correlation matrix in the matrix-unit bases, and the reindexing
    is norm-preserving, so ||R||_F^2 = Tr(rho^2). Its singular values are the
    operator Schmidt coefficients.
    """
    da, db = state.dim_a, state.dim_b
    return (
        state.matrix.reshape(da, db, da, db).transpose(0, 2, 1, 3).reshape(da * da, db * db)
    )


def osc(state: BipartiteState) -> OSCSpectrum:
    """Operator Schmidt coefficient spectrum: singular values of realign(state)."""
    mu = np.linalg.svd(realign(state), compute_uv=False)
    pur = float(np.vdot(state.matrix, state.matrix).real)
    return OSCSpectrum(mu=mu, source_purity=pur)


def matrix_unit_basis(d: int) -> OperatorBasis:
    """The d^2 matrix units |i><j| in row-major (i, j) order."""
    if d < 1:
        raise ValidationError(f"need d >= 1, got {d}")
    elems = []
    for i in range(d):
        for j in range(d):
            e = np.zeros((d, d), dtype=complex)
            e[i, j] = 1.0
            elems.append(e)
    return OperatorBasis(dim=d, elements=tuple(elems))


def gellmann_basis(d: int) -> OperatorBasis:
    """Hermitian HS-orthonormal basis: I/sqrt(d) plus generalized Gell-Mann matrices.

    Ordering: normalized identity first, then for each pair i < j the symmetric
    and antisymmetric combinations, then the d - 1 diagonal generators.
    """
    if d < 2:
        raise ValidationError(f"need d >= 2, got {d}")
    elems = [np.eye(d, dtype=complex) / np.sqrt(d)]
    for i in range(d):
        for j in range(i + 1, d):
            sym = np.zeros((d, d), dtype=complex)
            sym[i, j] = sym[j, i] = 1.0 / np.sqrt(2)
            elems.append(sym)
            asym = np.zeros((d, d), dtype=complex)
            asym[i, j] = -1j / np.sqrt(2)
            asym[j, i] = 1j / np.sqrt(2)
            elems.append(asym)
    for l in range(1, d):
        diag = np.zeros(d, dtype=complex)
        diag[:l] = 1.0
        diag[l] = -l
        elems.append(np.diag(diag) / np.sqrt(l * (l + 1)))
    return OperatorBasis(dim=d, elements=tuple(elems))


def correlation_matrix(
    state: BipartiteState, basis_a: OperatorBasis, basis_b: OperatorBasis
) -> np.ndarray:
    """Correlation matrix with entries Tr((C_k^dag (x) D_l^dag) rho).

    For the matrix-unit bases this reproduces realign(state) entry for entry.
    Any other HS-orthonormal basis pair changes the matrix only by left and
    right unitaries, so the singular values are basis-independent.
    """
    if basis_a.dim != state.dim_a or basis_b.dim != state.dim_b:
        raise ValidationError(
            f"basis dimensions ({basis_a.dim}, {basis_b.dim}) do not match "
            f"state dimensions ({state.dim_a}, {state.dim_b})"
        )
    da, db = state.dim_a, state.dim_b
    ca = np.stack(basis_a.elements)
    cb = np.stack(basis_b.elements)
    rho4 = state.matrix.reshape(da, db, da, db)
    # Tr((C^dag (x) D^dag) rho) = sum_{c,d,a,b} conj(C[c,a]) conj(D[d,b]) <cd|rho|ab>
    return np.einsum("kca,ldb,cdab->kl", ca.conj(), cb.conj(), rho4, optimize=True)


def ccnr_value(state: BipartiteState) -> float:
    """Trace norm of the realignment, sum(mu). A value above 1 certifies entanglement."""
    return float(osc(state).mu.sum())
