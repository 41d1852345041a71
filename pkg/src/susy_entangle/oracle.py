"""Slow, independent reference path used by the tests and ``run --oracle``.

Everything here is built from raw truncated boson matrices on the product
basis |n1> (x) |n2>, n_i <= cutoff (flat index n1*(cutoff+1) + n2), and
diagonalized with LAPACK's dense Hermitian solver.  Nothing from the
parity-block / tridiagonal path is used.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .dynamics import ProductStateSpec
from .errors import ParameterError
from .hamiltonian import HamiltonianParams


def annihilation(cutoff: int) -> np.ndarray:
    """Truncated a with <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1, cutoff + 1, dtype=float)), 1)


def mode_operators(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    a = annihilation(cutoff)
    eye = np.eye(cutoff + 1)
    return np.kron(a, eye), np.kron(eye, a)


def oracle_hamiltonian(params: HamiltonianParams, cutoff: int) -> np.ndarray:
    """omega (a1^dag a1 + a2^dag a2) + g ((a1^dag)^2 a2^2 + a1^2 (a2^dag)^2)."""
    a1, a2 = mode_operators(cutoff)
    a1d, a2d = a1.T, a2.T
    number = a1d @ a1 + a2d @ a2
    exchange = a1d @ a1d @ a2 @ a2
    return params.omega * number + params.g * (exchange + exchange.T)


@lru_cache(maxsize=64)
def _eigh(omega: float, g: float, total_photons: int, cutoff: int):
    h = oracle_hamiltonian(HamiltonianParams(omega, g, total_photons), cutoff)
    w, v = np.linalg.eigh(h)
    w.setflags(write=False)
    v.setflags(write=False)
    return w, v


def product_state(n1: int, n2: int, cutoff: int) -> np.ndarray:
    psi = np.zeros((cutoff + 1) ** 2, dtype=complex)
    psi[n1 * (cutoff + 1) + n2] = 1.0
    return psi


def oracle_evolve_many(spec: ProductStateSpec, params: HamiltonianParams, times,
                       cutoff: int | None = None) -> np.ndarray:
    """Rows exp(-iHt)|N-L, L> over the product basis, one row per time.

    Includes the dynamical phase exp(-i omega N t).
    """
    n = spec.total_photons
    cutoff = n if cutoff is None else cutoff
    if cutoff < n:
        raise ParameterError(f"cutoff {cutoff} below photon number {n}")
    w, v = _eigh(float(params.omega), float(params.g), params.total_photons, cutoff)
    psi0 = product_state(n - spec.photons_in_B, spec.photons_in_B, cutoff)
    overlap = v.T @ psi0
    times = np.atleast_1d(np.asarray(times, dtype=float))
    return (np.exp(-1j * np.outer(times, w)) * overlap) @ v.T


def oracle_evolve(spec: ProductStateSpec, params: HamiltonianParams, t: float,
                  cutoff: int | None = None) -> np.ndarray:
    return oracle_evolve_many(spec, params, [t], cutoff)[0]


def reduced_density_matrix(state: np.ndarray, cutoff: int) -> np.ndarray:
    """rho_A = Tr_B |psi><psi|."""
    m = np.asarray(state).reshape(cutoff + 1, cutoff + 1)
    return m @ m.conj().T


def oracle_entropy(state: np.ndarray, cutoff: int) -> float:
    mu = np.linalg.eigvalsh(reduced_density_matrix(state, cutoff))
    mu = mu[mu > 1e-15]
    return float(-np.sum(mu * np.log(mu)))


def ladder_amplitudes(state: np.ndarray, spec: ProductStateSpec, cutoff: int) -> np.ndarray:
    """Pick out the coefficients of |N-2n-d>_A |2n+d>_B from a product-basis vector."""
    n, d = spec.total_photons, spec.parity
    idx = [(n - 2 * k - d) * (cutoff + 1) + 2 * k + d for k in range(spec.n_rungs)]
    return np.asarray(state)[..., idx]
