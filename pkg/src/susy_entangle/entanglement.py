"""Schmidt probabilities and von Neumann entropy of evolved states.

The evolved state is already in Schmidt form: distinct rungs of the
ladder carry distinct photon numbers in each mode, so the Schmidt
probabilities are simply |a_n|^2.  Entropies are in nats.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dynamics import EvolvedState, ProductStateSpec, evolve_amplitudes
from .errors import ParameterError
from .hamiltonian import HamiltonianParams
from .spectrum import assemble_spectrum
from .trajectory import TrajectoryRecord

# probabilities below this are exact zeros for entropy purposes
ZERO_PROBABILITY = 1e-15


def entropy_of_probabilities(p) -> np.ndarray:
    """Row-wise -sum p ln p with 0 ln 0 = 0; works on 1-D or 2-D input."""
    # round-off can push a probability a few ulps past 1
    p = np.clip(np.asarray(p, dtype=float), 0.0, 1.0)
    safe = np.where(p > ZERO_PROBABILITY, p, 1.0)
    terms = np.where(p > ZERO_PROBABILITY, -p * np.log(safe), 0.0)
    return terms.sum(axis=-1)


@dataclass(frozen=True)
class SchmidtProfile:
    probabilities: np.ndarray

    @property
    def entropy(self) -> float:
        return von_neumann_entropy(self)

    @property
    def rank(self) -> int:
        return int(np.count_nonzero(self.probabilities > ZERO_PROBABILITY))


def schmidt_profile(state: EvolvedState) -> SchmidtProfile:
    return SchmidtProfile(np.abs(state.amplitudes) ** 2)


def von_neumann_entropy(profile: SchmidtProfile) -> float:
    return float(entropy_of_probabilities(profile.probabilities))


def max_entangled_state(total_photons: int, parity: int | None = None) -> np.ndarray:
    """Uniform amplitudes over the full ladder (parity None) or one parity ladder.

    Entry n of the full-ladder result multiplies |N-n>_A |n>_B; with a parity
    d it multiplies |N-2n-d>_A |2n+d>_B.
    """
    if total_photons < 1:
        raise ParameterError("total_photons must be positive")
    if parity is None:
        rungs = total_photons + 1
    else:
        if total_photons % 2 == 0:
            raise ParameterError("parity-restricted maximum needs odd N")
        if parity not in (0, 1):
            raise ParameterError(f"parity must be 0, 1 or None, got {parity!r}")
        rungs = (total_photons + 1) // 2
    return np.full(rungs, 1.0 / math.sqrt(rungs))


def max_entropy(total_photons: int, parity_restricted: bool) -> float:
    """ln(N+1), or ln((N+1)/2) when the state is confined to one parity ladder."""
    n = total_photons + 1
    return math.log(n / 2) if parity_restricted else math.log(n)


def entropy_trajectory(spec: ProductStateSpec, params: HamiltonianParams, grid) -> TrajectoryRecord:
    times = np.asarray(grid, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ParameterError("time grid must be a non-empty 1-D sequence")
    if times.size > 1 and np.any(np.diff(times) <= 0):
        raise ParameterError("time grid must be strictly increasing")
    decomp = assemble_spectrum(params)
    amps = evolve_amplitudes(spec, decomp, params, times)
    probs = np.abs(amps) ** 2
    return TrajectoryRecord(
        total_photons=spec.total_photons,
        photons_in_B=spec.photons_in_B,
        g=float(params.g),
        omega=float(params.omega),
        t=times,
        gt=params.g * times,
        entropy=entropy_of_probabilities(probs),
        probabilities=probs,
    )
