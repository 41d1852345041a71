"""Spectral time evolution of two-mode Fock product states.

Starting from |N-L>_A |L>_B, the state stays on the ladder of Fock states
whose mode-B occupation has the parity of L:

    |psi(t)> = sum_n a_n(t) |N - 2n - d>_A |2n + d>_B,   d = L mod 2,

with a_n(t) = sum_k exp(-i g lambda_k t) C^(k)_start C^(k)_n.  The common
phase exp(-i omega N t) is dropped throughout.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError
from .hamiltonian import HamiltonianParams
from .spectrum import SpectralDecomposition


@dataclass(frozen=True)
class ProductStateSpec:
    """Initial product state |N-L>_A |L>_B."""

    total_photons: int
    photons_in_B: int

    def __post_init__(self):
        if self.total_photons < 1:
            raise ParameterError("total_photons must be positive")
        if not 0 <= self.photons_in_B <= self.total_photons:
            raise ParameterError(
                f"photons_in_B={self.photons_in_B} outside 0..{self.total_photons}")

    @property
    def parity(self) -> int:
        return self.photons_in_B % 2

    @property
    def rung(self) -> int:
        """Position of the initial state on its parity ladder."""
        return self.photons_in_B // 2

    @property
    def n_rungs(self) -> int:
        return (self.total_photons - self.parity) // 2 + 1


@dataclass(frozen=True)
class EvolvedState:
    """Amplitudes a_n on |N-2n-parity>_A |2n+parity>_B at ``time``."""

    time: float
    total_photons: int
    parity: int
    start: int
    amplitudes: np.ndarray

    def fock_labels(self) -> list[tuple[int, int]]:
        n, d = self.total_photons, self.parity
        return [(n - 2 * k - d, 2 * k + d) for k in range(len(self.amplitudes))]

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def _check(spec: ProductStateSpec, decomp: SpectralDecomposition, params: HamiltonianParams):
    if spec.total_photons != params.total_photons:
        raise ParameterError(
            f"state has N={spec.total_photons} but Hamiltonian has N={params.total_photons}")
    if decomp.params.total_photons != params.total_photons:
        raise ParameterError("decomposition built for a different sector")


def evolve_amplitudes(spec: ProductStateSpec, decomp: SpectralDecomposition,
                      params: HamiltonianParams, times) -> np.ndarray:
    """Amplitude rows a_n(t), one per entry of ``times`` (shape T x rungs)."""
    _check(spec, decomp, params)
    lambdas, vecs = decomp.block_eigen(spec.parity)
    times = np.atleast_1d(np.asarray(times, dtype=float))
    phases = np.exp(-1j * params.g * np.outer(times, lambdas))
    return (phases * vecs[spec.rung]) @ vecs.T


def evolve(spec: ProductStateSpec, decomp: SpectralDecomposition,
           params: HamiltonianParams, t: float) -> EvolvedState:
    amps = evolve_amplitudes(spec, decomp, params, [t])[0]
    return EvolvedState(float(t), spec.total_photons, spec.parity, spec.rung, amps)


def amplitude_phase_convention(state: EvolvedState) -> EvolvedState:
    """Rotate the global phase so a reference amplitude is real and >= 0.

    The reference is the initial rung, or the first non-vanishing rung when
    the initial one is (numerically) empty.
    """
    a = state.amplitudes
    tol = 1e-12 * np.max(np.abs(a))
    ref = state.start
    if abs(a[ref]) <= tol:
        ref = int(np.flatnonzero(np.abs(a) > tol)[0])
    phase = a[ref] / abs(a[ref])
    return EvolvedState(state.time, state.total_photons, state.parity, state.start,
                        a * np.conj(phase))
