"""Semigroup time evolution of Gamow amplitudes, in both time regimes.

A resonance pole Z = E_R - i Gamma/2 carries four scalar evolution laws,
each defined on one temporal half-line only (the regime index r tells the
laboratory regime r = 0 from its time-reversed partner r = 1):

    growing,  r=0:  exp(-i E_R t + Gamma t / 2),   t <= 0
    decaying, r=0:  exp(-i E_R t - Gamma t / 2),   t >= 0
    decaying, r=1:  exp(+i E_R t - Gamma t / 2),   t >= 0
    growing,  r=1:  exp(+i E_R t + Gamma t / 2),   t <= 0

The half-domain restriction is the physical content, so times outside a
law's half-line raise HalfDomainError rather than being clamped.  t = 0
belongs to both half-lines (both inequalities are non-strict).

The r=1 laws are the r=0 laws read backwards: decaying_r1(t) = growing_r0(-t)
and growing_r1(t) = decaying_r0(-t), identities that hold exactly here
because both sides build the same floating-point exponent.  Amplitudes are
scalar factors on a fixed (non-normalizable) Gamow ket; survival is the
squared modulus, 1 at t = 0, and never exceeds 1 on the allowed half-line.

Everything is a pure function of immutable values.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .scattering import ResonancePole

__all__ = [
    "HalfDomainError",
    "Kind",
    "SpaceLabel",
    "Law",
    "GamowState",
    "EvolutionSample",
    "evolve_growing_r0",
    "evolve_decaying_r0",
    "evolve_decaying_r1",
    "evolve_growing_r1",
    "evolve",
    "time_reverse",
    "semigroup_compose_check",
    "evolution_series",
]


class HalfDomainError(ValueError):
    """A time outside the half-line on which a semigroup law is defined."""


class Kind(Enum):
    GROWING = "growing"
    DECAYING = "decaying"


class SpaceLabel(Enum):
    """Which dual space the state lives in: growing states sit in Phi_-^x."""

    PHI_MINUS_DUAL = "Phi_minus_dual"
    PHI_PLUS_DUAL = "Phi_plus_dual"


class Law(Enum):
    """The four evolution laws, keyed by the CLI codes g0/d0/d1/g1."""

    GROWING_R0 = ("g0", Kind.GROWING, 0)
    DECAYING_R0 = ("d0", Kind.DECAYING, 0)
    DECAYING_R1 = ("d1", Kind.DECAYING, 1)
    GROWING_R1 = ("g1", Kind.GROWING, 1)

    def __init__(self, code: str, kind: Kind, regime: int):
        self.code = code
        self.kind = kind
        self.regime = regime

    @property
    def time_domain(self) -> str:
        return "t >= 0" if self.kind is Kind.DECAYING else "t <= 0"

    def admits(self, t: float) -> bool:
        return t >= 0 if self.kind is Kind.DECAYING else t <= 0

    @classmethod
    def from_code(cls, code: str) -> "Law":
        for law in cls:
            if law.code == code:
                return law
        raise ValueError(f"unknown law code {code!r}; expected one of g0, d0, d1, g1")

    @classmethod
    def for_state(cls, kind: Kind, regime: int) -> "Law":
        for law in cls:
            if law.kind is kind and law.regime == regime:
                return law
        raise ValueError(f"no law for kind={kind}, regime={regime}")


def _check_domain(law: Law, t: float) -> None:
    if not law.admits(t):
        raise HalfDomainError(
            f"law {law.code} ({law.kind.value}, r={law.regime}) is defined on "
            f"{law.time_domain} only; got t = {t}"
        )


def _amplitude(law: Law, pole: ResonancePole, t: float) -> complex:
    phase = -pole.e_r if law.regime == 0 else pole.e_r
    rate = 0.5 * pole.gamma if law.kind is Kind.GROWING else -0.5 * pole.gamma
    return cmath.exp(complex(rate, phase) * t)


def evolve_growing_r0(pole: ResonancePole, t: float) -> complex:
    """exp(-i E_R t + Gamma t/2) for t <= 0: grows toward t = 0."""
    _check_domain(Law.GROWING_R0, t)
    return _amplitude(Law.GROWING_R0, pole, t)


def evolve_decaying_r0(pole: ResonancePole, t: float) -> complex:
    """exp(-i E_R t - Gamma t/2) for t >= 0: the exponential decay law."""
    _check_domain(Law.DECAYING_R0, t)
    return _amplitude(Law.DECAYING_R0, pole, t)


def evolve_decaying_r1(pole: ResonancePole, t: float) -> complex:
    """exp(+i E_R t - Gamma t/2) for t >= 0; grows as its time counts down."""
    _check_domain(Law.DECAYING_R1, t)
    return _amplitude(Law.DECAYING_R1, pole, t)


def evolve_growing_r1(pole: ResonancePole, t: float) -> complex:
    """exp(+i E_R t + Gamma t/2) for t <= 0; decays as -t increases."""
    _check_domain(Law.GROWING_R1, t)
    return _amplitude(Law.GROWING_R1, pole, t)


@dataclass(frozen=True)
class GamowState:
    """A Gamow vector label: pole data, growing/decaying kind, regime index.

    The dual-space label is derived: growing states live in Phi_-^x and
    decaying states in Phi_+^x, in both regimes.
    """

    pole: ResonancePole
    kind: Kind
    regime: int

    def __post_init__(self):
        if self.regime not in (0, 1):
            raise ValueError(f"regime must be 0 or 1, got {self.regime}")

    @property
    def space_label(self) -> SpaceLabel:
        return SpaceLabel.PHI_MINUS_DUAL if self.kind is Kind.GROWING else SpaceLabel.PHI_PLUS_DUAL

    @property
    def law(self) -> Law:
        return Law.for_state(self.kind, self.regime)


@dataclass(frozen=True)
class EvolutionSample:
    t: float
    amplitude: complex
    survival: float


def evolve(state: GamowState, t: float) -> complex:
    """Amplitude of the state's own law at time t (half-domain enforced)."""
    _check_domain(state.law, t)
    return _amplitude(state.law, state.pole, t)


def time_reverse(state: GamowState) -> GamowState:
    """Map a state to its time-reversed partner: r flips and Phi_-+^x swap.

    The output's law is the input's law under t -> -t, so growing states map
    to decaying ones and vice versa; the pole data are untouched.  Applying
    the map twice returns the original label.
    """
    flipped = Kind.DECAYING if state.kind is Kind.GROWING else Kind.GROWING
    return GamowState(pole=state.pole, kind=flipped, regime=1 - state.regime)


def semigroup_compose_check(
    pole: ResonancePole,
    law: Law,
    t1: float,
    t2: float,
    rel_tol: float = 1e-12,
) -> bool:
    """True iff amplitude(t1 + t2) = amplitude(t1) * amplitude(t2) within rel_tol.

    Both times (and hence their sum) must lie in the law's half-domain.
    """
    _check_domain(law, t1)
    _check_domain(law, t2)
    combined = _amplitude(law, pole, t1 + t2)
    product = _amplitude(law, pole, t1) * _amplitude(law, pole, t2)
    return abs(combined - product) <= rel_tol * abs(combined)


def evolution_series(state: GamowState, times) -> list[EvolutionSample]:
    """Sample the state's law on a time grid; every t must be in-domain."""
    ts = np.asarray(times, dtype=float)
    for t in ts:
        if not state.law.admits(float(t)):
            raise HalfDomainError(
                f"t = {t} is outside the domain {state.law.time_domain} of law {state.law.code}"
            )
    out = []
    for t in ts:
        amp = _amplitude(state.law, state.pole, float(t))
        out.append(EvolutionSample(t=float(t), amplitude=amp, survival=abs(amp) ** 2))
    return out
