"""Entropy trajectories and their CSV form.

File layout::

    # susy-entangle v0.1.0 N=5 L=0 g=1.0 omega=0.0
    t,gt,entropy,p0,p1,p2
    0.0,0.0,0.0,1.0,0.0,0.0
    ...

Floats are written with ``repr`` (shortest round-trip form), so reading a
file back reproduces every value bit for bit.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .errors import SusyEntangleError

_META = re.compile(
    r"^# susy-entangle v(?P<version>\S+) N=(?P<N>\d+) L=(?P<L>\d+) g=(?P<g>\S+) omega=(?P<omega>\S+)$")


class TrajectoryIOError(SusyEntangleError, OSError):
    """Reading or writing a trajectory file failed."""


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    total_photons: int
    photons_in_B: int
    g: float
    omega: float
    t: np.ndarray
    gt: np.ndarray
    entropy: np.ndarray
    probabilities: np.ndarray
    version: str = field(default=__version__)

    def __len__(self):
        return len(self.t)

    def same_as(self, other: "TrajectoryRecord") -> bool:
        """Bit-exact equality of metadata and every float column."""
        meta = ("total_photons", "photons_in_B", "g", "omega", "version")
        if any(getattr(self, k) != getattr(other, k) for k in meta):
            return False
        cols = ("t", "gt", "entropy", "probabilities")
        return all(np.array_equal(getattr(self, k), getattr(other, k)) for k in cols)

    def header(self) -> str:
        return (f"# susy-entangle v{self.version} N={self.total_photons} "
                f"L={self.photons_in_B} g={self.g!r} omega={self.omega!r}")

    def columns(self) -> list[str]:
        return ["t", "gt", "entropy"] + [f"p{k}" for k in range(self.probabilities.shape[1])]


def format_csv(record: TrajectoryRecord) -> str:
    lines = [record.header(), ",".join(record.columns())]
    for i in range(len(record)):
        row = [record.t[i], record.gt[i], record.entropy[i], *record.probabilities[i]]
        lines.append(",".join(repr(float(x)) for x in row))
    return "\n".join(lines) + "\n"


def emit_csv(record: TrajectoryRecord, path) -> Path:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_csv(record))
    except OSError as exc:
        raise TrajectoryIOError(f"cannot write trajectory to {path}: {exc}") from exc
    return path


def parse_csv(text: str) -> TrajectoryRecord:
    lines = text.splitlines()
    if len(lines) < 2:
        raise ValueError("trajectory file needs a metadata line and a column header")
    meta = _META.match(lines[0])
    if meta is None:
        raise ValueError(f"bad metadata line: {lines[0]!r}")
    ncols = len(lines[1].split(","))
    data = np.array([[float(x) for x in ln.split(",")] for ln in lines[2:]]).reshape(-1, ncols)
    return TrajectoryRecord(
        total_photons=int(meta["N"]),
        photons_in_B=int(meta["L"]),
        g=float(meta["g"]),
        omega=float(meta["omega"]),
        t=data[:, 0].copy(),
        gt=data[:, 1].copy(),
        entropy=data[:, 2].copy(),
        probabilities=data[:, 3:].copy(),
        version=meta["version"],
    )


def read_csv(path) -> TrajectoryRecord:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TrajectoryIOError(f"cannot read trajectory from {path}: {exc}") from exc
    return parse_csv(text)
