"""Dense Hermitian linear algebra for small quantum systems.

Everything here works on plain complex numpy arrays at dimension d <= 8:
Hermitian eigensystems, density matrices, Gibbs states, energy bookkeeping,
and the passivity predicate used by the measurement-engine theorems.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (InvalidField, LengthMismatch, NotHermitian, OttoSimError,
                     DimensionMismatch)
from .tolerances import TOL


def as_complex_matrix(entries) -> np.ndarray:
    """Validate and return a finite square complex matrix."""
    m = np.asarray(entries, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise OttoSimError("matrix entries must be finite")
    return m


def hermitian_defect(m: np.ndarray) -> float:
    """Max-norm distance from m to its conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


@dataclass(frozen=True)
class HermitianOperator:
    """A Hermitian matrix with its cached eigensystem.

    eigenvalues are ascending; eigenvectors[:, n] is the unit eigenvector
    for eigenvalues[n]. Degenerate blocks carry an arbitrary orthonormal
    basis. Build instances with hermitian_eigensystem().
    """

    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def hermitian_eigensystem(entries) -> HermitianOperator:
    """Diagonalize a Hermitian matrix.

    Parameters
    ----------
    entries : array_like
        Square complex matrix, Hermitian within tolerance.

    Returns
    -------
    HermitianOperator
        With ascending eigenvalues and orthonormal eigenvectors satisfying
        the reconstruction identity sum_n E_n |v_n><v_n| = matrix.

    Raises
    ------
    NotHermitian
        If the matrix is not symmetric under conjugate transposition.
    """
    m = as_complex_matrix(entries)
    defect = hermitian_defect(m)
    if defect > TOL.hermitian:
        raise NotHermitian(f"Hermiticity defect {defect:.3e} exceeds {TOL.hermitian}")
    m = 0.5 * (m + m.conj().T)
    vals, vecs = np.linalg.eigh(m)
    gram = vecs.conj().T @ vecs
    if np.max(np.abs(gram - np.eye(m.shape[0]))) > TOL.orthonormal:
        raise OttoSimError("eigenvector orthonormality check failed")
    rebuilt = (vecs * vals) @ vecs.conj().T
    if np.max(np.abs(rebuilt - m)) > TOL.reconstruction:
        raise OttoSimError("spectral reconstruction check failed")
    return HermitianOperator(matrix=m, eigenvalues=vals, eigenvectors=vecs)


@dataclass(frozen=True)
class DensityMatrix:
    """Positive unit-trace Hermitian matrix; validated at construction."""

    matrix: np.ndarray

    def __post_init__(self):
        m = as_complex_matrix(self.matrix)
        defect = hermitian_defect(m)
        if defect > TOL.hermitian:
            raise NotHermitian(f"density matrix defect {defect:.3e}")
        tr = complex(np.trace(m))
        if abs(tr - 1.0) > TOL.trace:
            raise OttoSimError(f"trace {tr} is not 1 within {TOL.trace}")
        smallest = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T)).min())
        if smallest < -TOL.positivity:
            raise OttoSimError(f"negative eigenvalue {smallest:.3e}")
        object.__setattr__(self, "matrix", 0.5 * (m + m.conj().T))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class BathSpec:
    """Thermal bath at inverse temperature beta (k_B = 1)."""

    beta: float

    def __post_init__(self):
        if not (np.isfinite(self.beta) and self.beta > 0):
            raise InvalidField(f"beta must be finite and positive, got {self.beta}")


def boltzmann_populations(energies, beta: float) -> np.ndarray:
    """Gibbs weights e^(-beta E_n)/Z with the ground energy subtracted first."""
    e = np.asarray(energies, dtype=float)
    w = np.exp(-beta * (e - e.min()))
    return w / w.sum()


def gibbs_state(h: HermitianOperator, bath: BathSpec) -> DensityMatrix:
    """Thermal state e^(-beta H)/Z, diagonal in the eigenbasis of h."""
    pops = boltzmann_populations(h.eigenvalues, bath.beta)
    rho = (h.eigenvectors * pops) @ h.eigenvectors.conj().T
    return DensityMatrix(rho)


def energy_expectation(rho: DensityMatrix, h: HermitianOperator) -> float:
    """Tr[rho H] as a real number.

    Raises DimensionMismatch on shape disagreement; the imaginary residue
    must stay below tolerance (it is discarded after the check).
    """
    if rho.dim != h.dim:
        raise DimensionMismatch(f"state dim {rho.dim} vs operator dim {h.dim}")
    val = complex(np.trace(rho.matrix @ h.matrix))
    if abs(val.imag) > TOL.imag_residue:
        raise OttoSimError(f"imaginary residue {val.imag:.3e} in energy expectation")
    return float(val.real)


def populations_in_basis(rho: DensityMatrix, h: HermitianOperator) -> np.ndarray:
    """Diagonal of rho in the eigenbasis of h: p_n = <v_n|rho|v_n>."""
    if rho.dim != h.dim:
        raise DimensionMismatch(f"state dim {rho.dim} vs operator dim {h.dim}")
    v = h.eigenvectors
    pops = np.real(np.einsum("in,ij,jn->n", v.conj(), rho.matrix, v))
    if pops.min() < -TOL.population or pops.max() > 1 + TOL.population:
        raise OttoSimError(f"population out of range: {pops}")
    if abs(pops.sum() - 1.0) > TOL.population:
        raise OttoSimError(f"populations sum to {pops.sum()}, not 1")
    return pops


def is_passive(pops, energies) -> bool:
    """True iff populations never increase with energy.

    Ties in energy impose no ordering constraint; comparisons carry a small
    slack so Gibbs states built through floating-point arithmetic pass.
    """
    p = np.asarray(pops, dtype=float)
    e = np.asarray(energies, dtype=float)
    if p.shape != e.shape or p.ndim != 1:
        raise LengthMismatch(f"pops shape {p.shape} vs energies shape {e.shape}")
    if p.min() < -TOL.population or abs(p.sum() - 1.0) > TOL.population:
        raise OttoSimError("pops is not a probability vector")
    for i in range(len(p)):
        for j in range(len(p)):
            if e[i] < e[j] and p[i] < p[j] - TOL.passivity:
                return False
    return True
