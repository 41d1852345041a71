"""Hamiltonian matrices: the two-photon exchange model on one photon-number
sector, its parity blocks, and the general multi-photon family on a
truncated two-mode Fock space (used for conservation checks only).

Units: hbar = 1, so omega and g are angular frequencies.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp

from .basis import (
    FockPair,
    SectorBasis,
    ladder_minus_element,
    ladder_plus_element,
    r0_eigenvalue,
)
from .errors import ParameterError


@dataclass(frozen=True)
class HamiltonianParams:
    """H = omega (n1 + n2) + g (J+ + J-) restricted to n1 + n2 = total_photons."""

    omega: float
    g: float
    total_photons: int

    def __post_init__(self):
        if isinstance(self.g, complex) or not np.isrealobj(self.g):
            raise ParameterError("g must be real")
        if int(self.total_photons) != self.total_photons or self.total_photons < 1:
            raise ParameterError(f"total_photons must be a positive integer, got {self.total_photons!r}")
        if not (math.isfinite(self.omega) and math.isfinite(self.g)):
            raise ParameterError("omega and g must be finite")

    @property
    def two_j(self) -> int:
        return self.total_photons


@dataclass(frozen=True)
class GeneralKKParams:
    """omega1 n1 + omega2 n2 + g (a1^dag)^s a2^r + conj(g) a1^s (a2^dag)^r.

    The Fock space is truncated to n1 + n2 <= cutoff.
    """

    omega1: float
    omega2: float
    g: complex
    r: int
    s: int
    cutoff: int

    def __post_init__(self):
        if self.r <= 0 or self.r > self.s:
            raise ParameterError(f"need 0 < r <= s, got r={self.r}, s={self.s}")
        if self.cutoff < max(self.r, self.s):
            raise ParameterError(f"cutoff {self.cutoff} smaller than max(r, s)")


@dataclass(frozen=True)
class ParityBlock:
    """Zero-diagonal real symmetric tridiagonal block of J+ + J-.

    ``parity`` is 0 for the ladder n2 = 0, 2, 4, ... and 1 for n2 = 1, 3, ...
    """

    parity: int
    offdiag: tuple[float, ...]

    @property
    def dimension(self) -> int:
        return len(self.offdiag) + 1

    def dense(self) -> np.ndarray:
        return np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)


class ParityBlocks(NamedTuple):
    even: ParityBlock
    odd: ParityBlock

    @property
    def balanced(self) -> bool:
        """True for odd N, where both ladders have (N+1)/2 rungs."""
        return self.even.dimension == self.odd.dimension


def coupling_A(k: int, two_j: int) -> float:
    """sqrt(k (k+1) (2j-k) (2j-k+1)), the k-th nearest-rung coupling.

    ``two_j`` is the total photon number N = 2j.
    """
    if not 1 <= k <= two_j - 1:
        raise ParameterError(f"k={k} outside 1..{two_j - 1}")
    return math.sqrt(k * (k + 1) * (two_j - k) * (two_j - k + 1))


def build_sector_matrix(params: HamiltonianParams) -> np.ndarray:
    """Dense (N+1)x(N+1) matrix in the order m = j, j-1, ..., -j."""
    basis = SectorBasis.build(params.total_photons)
    n = basis.dimension
    h = np.zeros((n, n))
    h[np.diag_indices(n)] = params.omega * params.total_photons
    for p in range(n - 2):
        # position p+2 has m two units lower than position p
        h[p + 2, p] = params.g * ladder_minus_element(basis.states[p])
        h[p, p + 2] = params.g * ladder_plus_element(basis.states[p + 2])
    return h


def split_parity_blocks(params: HamiltonianParams) -> ParityBlocks:
    """Split J+ + J- on the sector into its two decoupled ladders.

    The blocks carry neither the omega*N shift nor the factor g.  For even N
    the two blocks differ in size and ``balanced`` is False.
    """
    basis = SectorBasis.build(params.total_photons)
    blocks = []
    for parity, rungs in ((0, basis.even), (1, basis.odd)):
        offdiag = tuple(ladder_minus_element(basis.states[p]) for p in rungs[:-1])
        blocks.append(ParityBlock(parity, offdiag))
    return ParityBlocks(*blocks)


@dataclass(frozen=True)
class TruncatedOperator:
    """Sparse operator on the states ``states`` (n1 + n2 <= cutoff)."""

    matrix: sp.csr_matrix
    states: tuple[FockPair, ...]

    def index(self, pair: FockPair) -> int:
        return self.states.index(pair)

    def sector_rows(self, total: int) -> list[int]:
        rows = [i for i, p in enumerate(self.states) if p.total == total]
        return sorted(rows, key=lambda i: self.states[i].n2)


def truncated_states(cutoff: int) -> tuple[FockPair, ...]:
    return tuple(FockPair(tot - n2, n2) for tot in range(cutoff + 1) for n2 in range(tot + 1))


def build_general_kk(params: GeneralKKParams) -> TruncatedOperator:
    """Sparse Hermitian matrix of the general (r, s) Hamiltonian.

    Transitions whose target lies beyond the cutoff are dropped, so the
    truncated matrix stays exactly Hermitian.
    """
    r, s = params.r, params.s
    states = truncated_states(params.cutoff)
    where = {p: i for i, p in enumerate(states)}
    rows, cols, vals = [], [], []
    for i, p in enumerate(states):
        rows.append(i)
        cols.append(i)
        vals.append(params.omega1 * p.n1 + params.omega2 * p.n2)
        if p.n2 < r:
            continue
        target = FockPair(p.n1 + s, p.n2 - r)
        k = where.get(target)
        if k is None:
            continue
        amp = math.sqrt(math.perm(p.n1 + s, s) * math.perm(p.n2, r))
        rows += [k, i]
        cols += [i, k]
        vals += [params.g * amp, np.conj(params.g) * amp]
    n = len(states)
    mat = sp.csr_matrix((np.asarray(vals, dtype=complex), (rows, cols)), shape=(n, n))
    return TruncatedOperator(mat, states)


def r0_diagonal(op: TruncatedOperator, r: int, s: int) -> np.ndarray:
    return np.array([float(r0_eigenvalue(p, r, s)) for p in op.states])


def interior_rows(op: TruncatedOperator, params: GeneralKKParams) -> np.ndarray:
    """Mask of states whose every transition stays inside the truncation."""
    reach = params.s - params.r
    return np.array([p.total + reach <= params.cutoff for p in op.states])
