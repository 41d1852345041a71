"""Scenario runner: entropy curves on a time grid, peak statistics, and the
preset datasets behind the two published figures."""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dynamics import ProductStateSpec
from .entanglement import entropy_trajectory
from .errors import ConsistencyError, ParameterError
from .hamiltonian import HamiltonianParams
from .oracle import oracle_entropy, oracle_evolve_many
from .spectrum import assemble_spectrum
from .trajectory import TrajectoryRecord, emit_csv

DEFAULT_STEPS = 2001
DEFAULT_GT_MAX = 2.0
LONG_GT_MAX = 22.015
DEFAULT_EPSILON = 0.05
ORACLE_TOLERANCE = 1e-8

FIGURE1_STATES = ((5, 0), (5, 1), (5, 2))
FIGURE2_STATES = ((9, 0), (9, 1), (9, 3), (9, 4))


@dataclass(frozen=True)
class ScenarioConfig:
    total_photons: int
    photons_in_B: int
    omega: float = 0.0
    g: float = 1.0
    t_max: float = DEFAULT_GT_MAX
    steps: int = DEFAULT_STEPS
    survival_epsilon: float = DEFAULT_EPSILON
    output: str | None = None
    oracle: bool = False

    def __post_init__(self):
        if self.total_photons < 1:
            raise ParameterError("N must be at least 1")
        if not 0 <= self.photons_in_B <= self.total_photons:
            raise ParameterError(f"L={self.photons_in_B} outside 0..{self.total_photons}")
        if self.steps < 2:
            raise ParameterError("steps must be at least 2")
        if not self.t_max > 0:
            raise ParameterError("t_max must be positive")
        if not self.survival_epsilon > 0:
            raise ParameterError("survival epsilon must be positive")

    @classmethod
    def from_gt_max(cls, total_photons: int, photons_in_B: int, gt_max: float = DEFAULT_GT_MAX,
                    g: float = 1.0, **kw) -> "ScenarioConfig":
        """Config whose grid spans g*t in [0, gt_max]; for g = 0 the grid is t in [0, gt_max]."""
        t_max = gt_max / abs(g) if g != 0 else gt_max
        return cls(total_photons, photons_in_B, g=g, t_max=t_max, **kw)

    def params(self) -> HamiltonianParams:
        return HamiltonianParams(self.omega, self.g, self.total_photons)

    def spec(self) -> ProductStateSpec:
        return ProductStateSpec(self.total_photons, self.photons_in_B)

    def grid(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.steps)


@dataclass(frozen=True)
class PeakSummary:
    peak_value: float
    peak_time: float
    peak_gt: float
    survival_time: float
    survival_gt: float
    epsilon: float


def oracle_deviation(record: TrajectoryRecord) -> float:
    """Largest |E_fast - E_oracle| over the record's grid."""
    spec = ProductStateSpec(record.total_photons, record.photons_in_B)
    params = HamiltonianParams(record.omega, record.g, record.total_photons)
    cutoff = record.total_photons
    states = oracle_evolve_many(spec, params, record.t, cutoff)
    reference = np.array([oracle_entropy(psi, cutoff) for psi in states])
    return float(np.max(np.abs(reference - record.entropy)))


def run_scenario(config: ScenarioConfig) -> TrajectoryRecord:
    """Compute the entropy curve; check it against the oracle and write the
    CSV when the config asks for it."""
    record = entropy_trajectory(config.spec(), config.params(), config.grid())
    if config.oracle:
        dev = oracle_deviation(record)
        if dev > ORACLE_TOLERANCE:
            raise ConsistencyError(f"entropy deviates from oracle by {dev:.3e}")
    if config.output is not None:
        emit_csv(record, config.output)
    return record


def report_peaks(record: TrajectoryRecord, epsilon: float = DEFAULT_EPSILON) -> PeakSummary:
    """Peak entropy and how long the curve stays near it.

    The survival time is the length of the contiguous stretch of grid
    around the first occurrence of the maximum on which E >= max - epsilon.
    A flat curve therefore survives for the whole window.
    """
    e = record.entropy
    if len(e) == 0:
        raise ParameterError("empty record")
    i = int(np.argmax(e))
    floor = e[i] - epsilon
    lo = hi = i
    while lo > 0 and e[lo - 1] >= floor:
        lo -= 1
    while hi < len(e) - 1 and e[hi + 1] >= floor:
        hi += 1
    return PeakSummary(
        peak_value=float(e[i]),
        peak_time=float(record.t[i]),
        peak_gt=float(record.gt[i]),
        survival_time=float(record.t[hi] - record.t[lo]),
        survival_gt=float(abs(record.gt[hi] - record.gt[lo])),
        epsilon=epsilon,
    )


def figure_configs() -> dict[str, ScenarioConfig]:
    """Preset grids: the short and long windows of Figure 1 and Figure 2."""
    out = {}
    for n, l in FIGURE1_STATES:
        tag = f"N{n}_L{l}"
        out[f"fig1_short_{tag}"] = ScenarioConfig(n, l)
        # keeps the 1e-3 spacing of the short window
        steps = int(round(LONG_GT_MAX / 1e-3)) + 1
        out[f"fig1_long_{tag}"] = ScenarioConfig(n, l, t_max=LONG_GT_MAX, steps=steps)
    for n, l in FIGURE2_STATES:
        out[f"fig2_N{n}_L{l}"] = ScenarioConfig(n, l)
    return out


def paper_figures(out_dir) -> dict[str, tuple[Path, PeakSummary]]:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    results = {}
    for name, cfg in figure_configs().items():
        record = run_scenario(cfg)
        path = emit_csv(record, out_dir / f"{name}.csv")
        results[name] = (path, report_peaks(record, cfg.survival_epsilon))
    return results


def spectrum_table(params: HamiltonianParams) -> list[tuple[float, float, int]]:
    """(lambda_k, E_k, multiplicity) rows, ascending in lambda."""
    decomp = assemble_spectrum(params)
    return [(float(lam), float(e), 2) for lam, e in zip(decomp.lambdas, decomp.energies)]
