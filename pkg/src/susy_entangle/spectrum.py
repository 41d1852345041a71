"""Exact spectrum of the two-photon exchange Hamiltonian on one sector.

H - omega*N is g times a matrix that splits into two zero-diagonal
tridiagonal blocks (the even and odd n2 ladders).  For odd N the odd block
is the even block with its couplings reversed, so the two blocks are
isospectral and every energy E_k = omega*N + g*lambda_k is doubly degenerate.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, ParameterError
from .hamiltonian import HamiltonianParams, ParityBlock, split_parity_blocks
from .tridiagonal import char_poly_eval as _char_poly
from .tridiagonal import tridiagonal_ql

PAIRING_RTOL = 1e-8


@dataclass(frozen=True)
class SpectralDecomposition:
    """Paired eigen-data of both parity blocks.

    ``lambdas`` are the even-block eigenvalues (ascending) and
    ``odd_lambdas`` their odd-block partners; they agree to round-off.
    Column k of ``even_vectors`` / ``odd_vectors`` holds the coefficients
    C^(k) over the rungs n2 = 0, 2, 4, ... / n2 = 1, 3, 5, ...
    """

    params: HamiltonianParams
    lambdas: np.ndarray
    odd_lambdas: np.ndarray
    energies: np.ndarray
    even_vectors: np.ndarray
    odd_vectors: np.ndarray

    def block_eigen(self, parity: int) -> tuple[np.ndarray, np.ndarray]:
        if parity == 0:
            return self.lambdas, self.even_vectors
        return self.odd_lambdas, self.odd_vectors

    def multiplicities(self) -> list[tuple[float, int]]:
        return [(float(e), 2) for e in self.energies]


@lru_cache(maxsize=512)
def _diagonalize_cached(block: ParityBlock):
    w, v = tridiagonal_ql([0.0] * block.dimension, block.offdiag)
    w.setflags(write=False)
    v.setflags(write=False)
    return w, v


def diagonalize_block(block: ParityBlock) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and orthonormal eigenvectors (columns) of a block.

    Results are cached per block and returned read-only; blocks do not
    depend on g or omega, so a parameter sweep diagonalizes each N once.
    """
    return _diagonalize_cached(block)


def char_poly_eval(block: ParityBlock, lam: float) -> float:
    """det(lam*I - T) for the block's zero-diagonal tridiagonal T."""
    return _char_poly(block.offdiag, lam)


def assemble_spectrum(params: HamiltonianParams) -> SpectralDecomposition:
    n = params.total_photons
    if n % 2 == 0:
        raise ParameterError(f"paired spectrum needs odd N, got {n}")
    even, odd = split_parity_blocks(params)
    w_even, v_even = diagonalize_block(even)
    w_odd, v_odd = diagonalize_block(odd)

    spread = max(float(w_even[-1] - w_even[0]), 1.0)
    tol = PAIRING_RTOL * spread
    mismatch = np.max(np.abs(w_even - w_odd))
    if mismatch > tol:
        raise ConsistencyError(f"parity blocks not isospectral (mismatch {mismatch:.3e})")
    if len(w_even) > 1 and np.min(np.diff(w_even)) <= tol:
        raise ConsistencyError("accidental degeneracy inside a parity block")

    energies = params.omega * n + params.g * w_even
    return SpectralDecomposition(params, w_even, w_odd, energies, v_even, v_odd)


def _recursion_coefficient(two_j: int, two_m: int, shift: int) -> float:
    # sqrt factor multiplying C_{m+shift} in the eigenvalue recursion; shift is +-2
    j2, m2 = two_j, two_m
    if shift < 0:
        prod = (j2 + m2) * (j2 + m2 - 2) * (j2 - m2 + 2) * (j2 - m2 + 4)
    else:
        prod = (j2 - m2) * (j2 - m2 - 2) * (j2 + m2 + 2) * (j2 + m2 + 4)
    return math.sqrt(max(prod, 0)) / 4.0


def verify_recursion(decomp: SpectralDecomposition, params: HamiltonianParams) -> float:
    """Largest absolute residual of

        E_k C_m = 2 j omega C_m + g C_{m-2} s_-(m) + g C_{m+2} s_+(m)

    over every eigenvector of both families and every m, with C outside
    the sector (or on the other ladder) taken as zero.
    """
    n = params.total_photons
    two_j = n
    worst = 0.0
    for parity in (0, 1):
        lambdas, vecs = decomp.block_eigen(parity)
        for k in range(vecs.shape[1]):
            coeff = np.zeros(n + 1)
            coeff[parity::2] = vecs[:, k]
            energy = params.omega * n + params.g * lambdas[k]

            def c_at(two_m):
                if abs(two_m) > two_j:
                    return 0.0
                return coeff[(two_j - two_m) // 2]

            for n2 in range(n + 1):
                two_m = two_j - 2 * n2
                rhs = (params.omega * two_j * c_at(two_m)
                       + params.g * c_at(two_m - 4) * _recursion_coefficient(two_j, two_m, -2)
                       + params.g * c_at(two_m + 4) * _recursion_coefficient(two_j, two_m, +2))
                worst = max(worst, abs(energy * c_at(two_m) - rhs))
    return worst
