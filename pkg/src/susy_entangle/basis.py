"""Fixed-photon-number sector of two bosonic modes in the |j, m> labelling.

A two-mode Fock state |n1>_A |n2>_B with N = n1 + n2 photons is labelled by
j = N/2 and m = (n1 - n2)/2.  Half-integers are carried as doubled integers
(``two_j``, ``two_m``) so that parity and range checks stay exact.

The two-photon exchange generators act as

    J+ = (a1^dag)^2 a2^2,   J- = a1^2 (a2^dag)^2,

shifting m by +2 and -2 respectively.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational, Real

from .errors import ParameterError


def _double(x: Real) -> int:
    """Return 2*x as an int, rejecting values that are not half-integers."""
    if isinstance(x, Rational):
        d = Fraction(x) * 2
    else:
        d = Fraction(float(x)) * 2
    if d.denominator != 1:
        raise ParameterError(f"{x!r} is not a half-integer")
    return int(d)


@dataclass(frozen=True, order=True)
class FockPair:
    """Occupation numbers (n1 in mode A, n2 in mode B)."""

    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0:
            raise ParameterError(f"negative occupation in {self}")

    @property
    def total(self) -> int:
        return self.n1 + self.n2


@dataclass(frozen=True)
class JMIndex:
    """Basis label |j, m>, stored as doubled integers."""

    two_j: int
    two_m: int

    def __post_init__(self):
        if self.two_j < 0:
            raise ParameterError("j must be non-negative")
        if abs(self.two_m) > self.two_j or (self.two_j - self.two_m) % 2:
            raise ParameterError(
                f"m={Fraction(self.two_m, 2)} invalid for j={Fraction(self.two_j, 2)}")

    @classmethod
    def of(cls, j: Real, m: Real) -> "JMIndex":
        """Build from half-integer values, e.g. ``JMIndex.of(Fraction(3, 2), -0.5)``."""
        return cls(_double(j), _double(m))

    @property
    def j(self) -> Fraction:
        return Fraction(self.two_j, 2)

    @property
    def m(self) -> Fraction:
        return Fraction(self.two_m, 2)


def jm_from_fock(pair: FockPair) -> JMIndex:
    return JMIndex(pair.n1 + pair.n2, pair.n1 - pair.n2)


def fock_from_jm(idx: JMIndex) -> FockPair:
    return FockPair((idx.two_j + idx.two_m) // 2, (idx.two_j - idx.two_m) // 2)


def ladder_plus_squared(idx: JMIndex) -> int:
    """Exact integer |<j, m+2| J+ |j, m>|^2; zero when m+2 leaves the ladder."""
    if idx.two_m + 4 > idx.two_j:
        return 0
    p = fock_from_jm(idx)
    return (p.n1 + 1) * (p.n1 + 2) * p.n2 * (p.n2 - 1)


def ladder_minus_squared(idx: JMIndex) -> int:
    """Exact integer |<j, m-2| J- |j, m>|^2; zero when m-2 leaves the ladder."""
    if idx.two_m - 4 < -idx.two_j:
        return 0
    p = fock_from_jm(idx)
    return p.n1 * (p.n1 - 1) * (p.n2 + 1) * (p.n2 + 2)


def ladder_plus_element(idx: JMIndex) -> float:
    """Coefficient of |j, m+2> in J+ |j, m>."""
    return math.sqrt(ladder_plus_squared(idx))


def ladder_minus_element(idx: JMIndex) -> float:
    """Coefficient of |j, m-2> in J- |j, m>."""
    return math.sqrt(ladder_minus_squared(idx))


def higgs_commutator_defect(pair: FockPair) -> float:
    """Diagonal element <n1, n2| [J+, J-] |n1, n2>.

    Because J- = (J+)^dag this equals |J- psi|^2 - |J+ psi|^2, which is
    evaluated from the exact squared ladder elements.  For j = (n1+n2)/2 and
    m = (n1-n2)/2 it obeys D = 2m(4j^2 + 4j - 2) - 8m^3.
    """
    idx = jm_from_fock(pair)
    return float(ladder_minus_squared(idx) - ladder_plus_squared(idx))


def higgs_defect_closed_form(pair: FockPair) -> Fraction:
    j = Fraction(pair.n1 + pair.n2, 2)
    m = Fraction(pair.n1 - pair.n2, 2)
    return 2 * m * (4 * j * j + 4 * j - 2) - 8 * m ** 3


def r0_eigenvalue(pair: FockPair, r: int, s: int) -> Fraction:
    """Eigenvalue (r*n1 + s*n2)/(r + s) of R0 on |n1, n2>."""
    if not (isinstance(r, int) and isinstance(s, int)) or r <= 0 or r > s:
        raise ParameterError(f"need integers 0 < r <= s, got r={r!r}, s={s!r}")
    return Fraction(r * pair.n1 + s * pair.n2, r + s)


@dataclass(frozen=True)
class SectorBasis:
    """States with N photons ordered m = j, j-1, ..., -j (i.e. n2 = 0..N).

    ``even`` and ``odd`` hold the positions of the two parity ladders,
    classified by the parity of j - m = n2.
    """

    total_photons: int
    states: tuple[JMIndex, ...] = field(repr=False)
    even: tuple[int, ...] = field(repr=False)
    odd: tuple[int, ...] = field(repr=False)

    @classmethod
    def build(cls, total_photons: int) -> "SectorBasis":
        if total_photons < 0:
            raise ParameterError("total photon number must be non-negative")
        n = total_photons
        states = tuple(JMIndex(n, n - 2 * n2) for n2 in range(n + 1))
        return cls(n, states, tuple(range(0, n + 1, 2)), tuple(range(1, n + 1, 2)))

    @property
    def dimension(self) -> int:
        return len(self.states)

    def fock(self, position: int) -> FockPair:
        return fock_from_jm(self.states[position])

    def position(self, pair: FockPair) -> int:
        if pair.total != self.total_photons:
            raise ParameterError(f"{pair} is not in the N={self.total_photons} sector")
        return pair.n2
