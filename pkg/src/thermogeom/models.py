"""Concrete example systems: truncated oscillator, spin ensemble, Rabi model."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDim, InvalidLevels, InvalidSpins
from .spectral import HermitianMatrix, Spectrum


def harmonic_spectrum(omega: float, n_levels: int) -> Spectrum:
    """Truncated harmonic oscillator: levels n * omega, n = 0..n_levels-1.

    No zero-point offset; the ground level sits at 0.
    """
    if n_levels < 1:
        raise InvalidLevels(f"need at least one level, got {n_levels}")
    if omega <= 0.0:
        raise InvalidLevels(f"omega must be positive, got {omega}")
    return Spectrum(
        omega * np.arange(n_levels, dtype=float), (1,) * n_levels
    )


def spin_ensemble_spectrum(omega: float, n_spins: int) -> Spectrum:
    """Collective z-magnetization spectrum of n_spins spin-1/2 particles.

    Level k (k up-spins) has energy omega * (k - n_spins / 2) and exact
    binomial multiplicity C(n_spins, k); the total dimension is
    2**n_spins while only n_spins + 1 levels are stored.
    """
    if n_spins < 1:
        raise InvalidSpins(f"need at least one spin, got {n_spins}")
    if omega <= 0.0:
        raise InvalidSpins(f"omega must be positive, got {omega}")
    energies = omega * (np.arange(n_spins + 1, dtype=float) - n_spins / 2.0)
    mults = tuple(math.comb(n_spins, k) for k in range(n_spins + 1))
    return Spectrum(energies, mults)


@dataclass(frozen=True)
class RabiParams:
    """Parameters of the symmetry-broken Rabi model.

    ``epsilon`` is the small transverse field that breaks the parity
    symmetry; ``n_boson`` is the Fock-space truncation (hard cutoff of the
    lowering operator), giving total dimension 2 * n_boson.
    """

    omega: float
    coupling: float
    epsilon: float
    n_boson: int

    def __post_init__(self) -> None:
        if self.omega <= 0.0:
            raise InvalidDim(f"omega must be positive, got {self.omega}")
        if self.coupling < 0.0:
            raise InvalidDim(f"coupling must be >= 0, got {self.coupling}")
        if self.n_boson < 2:
            raise InvalidDim(f"n_boson must be >= 2, got {self.n_boson}")

    @property
    def dim(self) -> int:
        return 2 * self.n_boson


def rabi_hamiltonian(params: RabiParams) -> HermitianMatrix:
    """Rabi Hamiltonian (omega/2) sz + eps sx + omega a^dag a + g sx (a + a^dag).

    Assembled as Kronecker products in spin (x) boson order, so basis index
    s * n_boson + n means spin state s and Fock state n.  Hermitian by
    construction.
    """
    nb = params.n_boson
    sz = np.diag([1.0, -1.0])
    sx = np.array([[0.0, 1.0], [1.0, 0.0]])
    lowering = np.diag(np.sqrt(np.arange(1, nb, dtype=float)), 1)
    number = lowering.T @ lowering
    position = lowering + lowering.T
    matrix = (
        (params.omega / 2.0) * np.kron(sz, np.eye(nb))
        + params.epsilon * np.kron(sx, np.eye(nb))
        + params.omega * np.kron(np.eye(2), number)
        + params.coupling * np.kron(sx, position)
    )
    return HermitianMatrix(matrix)


def rabi_parity_operator(n_boson: int) -> np.ndarray:
    """Parity sz (x) (-1)^n; commutes with the Rabi model at epsilon = 0."""
    signs = (-1.0) ** np.arange(n_boson)
    return np.kron(np.diag([1.0, -1.0]), np.diag(signs))
