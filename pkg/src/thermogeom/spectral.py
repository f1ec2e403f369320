"""Hermitian containers, degenerate spectra, and density operators.

Spectra are kept compressed: a level of multiplicity ``m`` stands for ``m``
identical eigenvalues.  This is what keeps 2**25-dimensional thermal sums
affordable (a 25-spin ensemble has 26 distinct levels), so nothing in this
module expands a spectrum unless the caller explicitly asks for it.

All types are immutable after construction and safe to share across
threads; backing numpy arrays are marked read-only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import DimMismatch, InvalidDim, NonHermitian, NotPSD, TraceError

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-10
PSD_TOL = -1e-12

# Hard caps on materializing compressed operators; beyond these the caller
# is almost certainly holding a spectrum that was compressed on purpose.
_EXPAND_LIMIT = 1 << 20
_DENSE_LIMIT = 1 << 11


def _read_only(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class HermitianMatrix:
    """Dense Hermitian matrix; construction rejects non-Hermitian input.

    Parameters
    ----------
    entries : array-like
        Square complex matrix with ``entries[i][j] == conj(entries[j][i])``
        within ``HERMITICITY_TOL`` (elementwise, absolute).
    """

    entries: np.ndarray

    def __post_init__(self) -> None:
        m = np.array(self.entries, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise NonHermitian(f"expected a square matrix, got shape {m.shape}")
        if m.shape[0] < 1:
            raise InvalidDim("matrix dimension must be at least 1")
        defect = float(np.max(np.abs(m - m.conj().T)))
        if defect > HERMITICITY_TOL:
            raise NonHermitian(
                f"matrix is not Hermitian: max |A - A^dagger| = {defect:.3e}"
            )
        object.__setattr__(self, "entries", _read_only(m))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class Spectrum:
    """Energy levels with integer multiplicities.

    Energies are strictly increasing; multiplicities are exact Python
    integers so that degeneracy counts like binomial coefficients never
    lose precision.  ``total_dim`` is the dimension of the underlying
    Hilbert space, i.e. the sum of all multiplicities.
    """

    energies: np.ndarray
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        e = np.array(self.energies, dtype=float)
        m = tuple(int(v) for v in self.multiplicities)
        if e.ndim != 1 or e.size < 1:
            raise InvalidDim("spectrum needs at least one level")
        if len(m) != e.size:
            raise DimMismatch(
                f"{e.size} energies but {len(m)} multiplicities"
            )
        if any(v < 1 for v in m):
            raise InvalidDim("multiplicities must be >= 1")
        if e.size > 1 and not np.all(np.diff(e) > 0):
            raise InvalidDim("energies must be strictly increasing")
        object.__setattr__(self, "energies", _read_only(e))
        object.__setattr__(self, "multiplicities", m)

    @property
    def level_count(self) -> int:
        return self.energies.size

    @property
    def total_dim(self) -> int:
        """Hilbert-space dimension (exact integer sum of multiplicities)."""
        return sum(self.multiplicities)

    @property
    def multiplicity_array(self) -> np.ndarray:
        """Multiplicities as floats, for use in weighted numpy sums."""
        return np.array(self.multiplicities, dtype=float)

    @classmethod
    def from_levels(cls, levels: Iterable[tuple[float, int]]) -> "Spectrum":
        pairs = list(levels)
        return cls(
            energies=np.array([p[0] for p in pairs], dtype=float),
            multiplicities=tuple(int(p[1]) for p in pairs),
        )

    @classmethod
    def from_eigenvalues(cls, values, tol: float = 0.0) -> "Spectrum":
        """Group a raw eigenvalue array into levels with multiplicities.

        Values within ``tol`` of the running group representative are
        merged into one level (the level energy is the group mean).  The
        default ``tol = 0`` merges exact duplicates only, which is what
        eigensolver output of a degenerate Hamiltonian needs to satisfy
        the strictly-increasing invariant.
        """
        v = np.sort(np.asarray(values, dtype=float).ravel())
        if v.size < 1:
            raise InvalidDim("need at least one eigenvalue")
        energies: list[float] = []
        counts: list[int] = []
        group_start = 0
        for i in range(1, v.size + 1):
            if i == v.size or v[i] - v[group_start] > tol:
                energies.append(float(np.mean(v[group_start:i])))
                counts.append(i - group_start)
                group_start = i
        return cls(np.array(energies), tuple(counts))

    def expanded_energies(self) -> np.ndarray:
        """Eigenvalue array with every level repeated by its multiplicity."""
        n = self.total_dim
        if n > _EXPAND_LIMIT:
            raise InvalidDim(f"refusing to expand a spectrum of dimension {n}")
        return np.repeat(self.energies, self.multiplicities)

    def to_json(self) -> str:
        return json.dumps(
            {"levels": [[float(e), int(m)] for e, m in
                        zip(self.energies, self.multiplicities)]}
        )

    @classmethod
    def from_json(cls, text: str) -> "Spectrum":
        payload = json.loads(text)
        return cls.from_levels((e, m) for e, m in payload["levels"])


class DensityOperator:
    """Common interface of dense and compressed diagonal density operators."""

    @property
    def dim(self) -> int:
        raise NotImplementedError

    def trace(self) -> float:
        raise NotImplementedError

    def eigen_probabilities(self) -> np.ndarray:
        """Expanded eigenvalues in ascending level order (may be large)."""
        raise NotImplementedError


@dataclass(frozen=True)
class DenseDensity(DensityOperator):
    """Density operator stored as an explicit Hermitian matrix."""

    matrix: HermitianMatrix

    def __post_init__(self) -> None:
        if not isinstance(self.matrix, HermitianMatrix):
            object.__setattr__(self, "matrix", HermitianMatrix(self.matrix))

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def trace(self) -> float:
        return float(np.trace(self.matrix.entries).real)

    def eigen_probabilities(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix.entries)


@dataclass(frozen=True)
class DiagonalDensity(DensityOperator):
    """Density operator diagonal in the ordered eigenbasis of a spectrum.

    ``probs[k]`` is the *total* probability carried by level ``k``; a
    level of multiplicity ``m`` expands to ``m`` eigenvalues of
    ``probs[k] / m`` each.  Mixing two diagonal operators assumes they are
    diagonal in the same ordered basis.
    """

    spectrum: Spectrum
    probs: np.ndarray

    def __post_init__(self) -> None:
        p = np.array(self.probs, dtype=float)
        if p.ndim != 1 or p.size != self.spectrum.level_count:
            raise DimMismatch(
                f"{p.size} level probabilities for "
                f"{self.spectrum.level_count} levels"
            )
        object.__setattr__(self, "probs", _read_only(p))

    @property
    def dim(self) -> int:
        return self.spectrum.total_dim

    def trace(self) -> float:
        return float(np.sum(self.probs))

    def level_eigen_probs(self) -> np.ndarray:
        """Per-eigenvalue probability of each level (probs / multiplicity)."""
        return self.probs / self.spectrum.multiplicity_array

    def eigen_probabilities(self) -> np.ndarray:
        n = self.dim
        if n > _EXPAND_LIMIT:
            raise InvalidDim(f"refusing to expand a state of dimension {n}")
        return np.repeat(self.level_eigen_probs(), self.spectrum.multiplicities)

    def to_dense(self) -> DenseDensity:
        n = self.dim
        if n > _DENSE_LIMIT:
            raise InvalidDim(f"refusing to densify a state of dimension {n}")
        return DenseDensity(HermitianMatrix(np.diag(
            self.eigen_probabilities().astype(complex))))


def eigen_segments(
    a: DiagonalDensity, b: DiagonalDensity
) -> Iterator[tuple[int, float, float]]:
    """Walk the common refinement of two compressed diagonal operators.

    Yields ``(count, p_a, p_b)``: ``count`` basis states over which ``a``
    has per-state eigenvalue ``p_a`` and ``b`` has ``p_b``.  Runs in
    O(levels_a + levels_b) regardless of the expanded dimension, which is
    how 2**25-dimensional overlaps stay cheap.  Both operators are taken
    diagonal in the same ordered basis.
    """
    if a.dim != b.dim:
        raise DimMismatch(f"dimension mismatch: {a.dim} vs {b.dim}")
    pa = a.level_eigen_probs()
    pb = b.level_eigen_probs()
    ma = a.spectrum.multiplicities
    mb = b.spectrum.multiplicities
    i = j = 0
    rem_i, rem_j = ma[0], mb[0]
    while True:
        count = min(rem_i, rem_j)
        yield count, float(pa[i]), float(pb[j])
        rem_i -= count
        rem_j -= count
        if rem_i == 0:
            i += 1
            if i == len(ma):
                return
            rem_i = ma[i]
        if rem_j == 0:
            j += 1
            if j == len(mb):
                return
            rem_j = mb[j]


def eigendecompose(h: HermitianMatrix | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecompose a Hermitian matrix.

    Parameters
    ----------
    h : HermitianMatrix or array-like
        Raw arrays are validated through :class:`HermitianMatrix` first.

    Returns
    -------
    eigenvalues : ndarray
        Real eigenvalues in ascending order.
    eigenvectors : ndarray
        Orthonormal eigenvectors as columns, aligned with the eigenvalues.
    """
    if not isinstance(h, HermitianMatrix):
        h = HermitianMatrix(h)
    return np.linalg.eigh(h.entries)


def maximally_mixed(n: int) -> DiagonalDensity:
    """Uniform state I/n, the geometric centre of the state space.

    Stored compressed as a single level of multiplicity ``n``, so it works
    at any dimension, including 2**25.
    """
    if n < 1:
        raise InvalidDim(f"dimension must be >= 1, got {n}")
    return DiagonalDensity(
        Spectrum(np.array([0.0]), (int(n),)), np.array([1.0])
    )


def validate_density(rho: DensityOperator) -> None:
    """Check the density-operator invariants, raising on the first failure.

    Raises
    ------
    NonHermitian
        Dense input whose matrix is not Hermitian (raised at construction).
    TraceError
        Trace differs from 1 by more than ``TRACE_TOL``.
    NotPSD
        Any eigenvalue below ``PSD_TOL``.
    """
    tr = rho.trace()
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceError(f"trace is {tr!r}, expected 1 within {TRACE_TOL}")
    if isinstance(rho, DiagonalDensity):
        smallest = float(np.min(rho.level_eigen_probs()))
    else:
        smallest = float(np.min(rho.eigen_probabilities()))
    if smallest < PSD_TOL:
        raise NotPSD(f"smallest eigenvalue {smallest:.3e} below {PSD_TOL}")
