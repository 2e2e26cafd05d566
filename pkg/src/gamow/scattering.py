"""S-wave scattering on a spherical delta-shell potential V(r) = g delta(r - a).

Units: hbar = 2m = 1, so E = k^2 and lengths are in units of 1/k.  Matching
the reduced radial function u(r) across the shell (u continuous,
u'(a+) - u'(a-) = g u(a), u(0) = 0) gives the closed-form S-matrix

    S(k) = e^{-2ika} * (e^{ika} + (g/k) sin ka) / (e^{-ika} + (g/k) sin ka).

Poles of S are the zeros of the denominator

    D(k) = e^{-ika} + (g/k) sin ka,

equivalently  e^{2ika} = 1 - 2ik/g  (multiply D = 0 by 2ik e^{ika}/g).
Resonances live in the fourth quadrant of the k plane (second energy sheet,
Re k > 0 > Im k); for an attractive shell with |g| a > 1 there is exactly one
bound state on the positive imaginary axis, k = i kappa with
kappa = |g| (1 - e^{-2 kappa a}) / 2.

For real k the numerator is the complex conjugate of D, so |S| = 1 exactly
(unitarity), and S(-k) S(k) = 1.  Zeros of S sit at the conjugates of its
poles.

Models and pole records are immutable values; every function here is pure,
so concurrent read-only use is safe.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np
from scipy.optimize import curve_fit

__all__ = [
    "IM_KA_BOUND",
    "DeltaShellModel",
    "ResonancePole",
    "SearchRegion",
    "PoleOnContourError",
    "ResonanceFitError",
    "s_matrix",
    "phase_shift",
    "phase_shift_curve",
    "find_poles",
    "pole_count",
    "winding_number",
    "bound_states",
    "breit_wigner_fit",
    "fit_breit_wigner_curve",
]

# exp(|Im(ka)|) overflows float64 near 709; stay a little under.
IM_KA_BOUND = 700.0

# Newton iteration controls.
_NEWTON_MAX_STEPS = 50
_NEWTON_STEP_SCALE = 1e-7
_NEWTON_CONVERGED = 1e-12
_DEDUP_SEPARATION = 1e-6
_RESIDUAL_FACTOR = 1e-10


class PoleOnContourError(RuntimeError):
    """A counting contour passes too close to a zero of the denominator."""


class ResonanceFitError(RuntimeError):
    """The requested window does not contain one clean resonance."""


@dataclass(frozen=True)
class DeltaShellModel:
    """Delta-shell parameters: coupling g (1/length, signed) and radius a > 0."""

    g: float
    a: float

    def __post_init__(self):
        if not (self.a > 0):
            raise ValueError(f"shell radius a must be positive, got {self.a}")
        if self.g == 0 or not np.isfinite(self.g) or not np.isfinite(self.a):
            raise ValueError(f"coupling g must be finite and nonzero, got {self.g}")


@dataclass(frozen=True)
class ResonancePole:
    """A second-sheet pole Z = e_r - i*gamma/2 = k_pole^2 with gamma > 0."""

    e_r: float
    gamma: float
    k_pole: complex

    def __post_init__(self):
        if not (self.gamma > 0):
            raise ValueError(f"resonance width gamma must be positive, got {self.gamma}")
        z = complex(self.e_r, -0.5 * self.gamma)
        if abs(self.k_pole**2 - z) > 1e-10 * max(abs(z), 1e-300):
            raise ValueError("k_pole^2 does not match e_r - i*gamma/2")

    @classmethod
    def from_momentum(cls, k: complex) -> "ResonancePole":
        z = k * k
        return cls(e_r=z.real, gamma=-2.0 * z.imag, k_pole=k)

    @classmethod
    def from_energy(cls, e_r: float, gamma: float) -> "ResonancePole":
        # principal sqrt of the lower-half-plane energy: Re k > 0, Im k < 0
        return cls(e_r=e_r, gamma=gamma, k_pole=cmath.sqrt(complex(e_r, -0.5 * gamma)))

    @property
    def z(self) -> complex:
        return complex(self.e_r, -0.5 * self.gamma)


@dataclass(frozen=True)
class SearchRegion:
    """Rectangle in the complex k plane plus a seeding density for Newton."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float
    n_re: int = 48
    n_im: int = 24

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("search region must satisfy re_min < re_max and im_min < im_max")
        if self.n_re < 2 or self.n_im < 2:
            raise ValueError("seed grid needs at least 2 points per axis")

    @property
    def corners(self) -> tuple[complex, complex, complex, complex]:
        """Counterclockwise, starting at the bottom-left corner."""
        return (
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        )

    def contains(self, k: complex) -> bool:
        return self.re_min < k.real < self.re_max and self.im_min < k.imag < self.im_max


def _g_sinc(model: DeltaShellModel, k):
    """(g/k) sin(ka), analytic across k = 0 (limit g*a)."""
    k = np.asarray(k)
    ka = k * model.a
    small = np.abs(ka) < 1e-4
    safe = np.where(small, 1.0, k)
    out = model.g * np.sin(ka) / safe
    series = model.g * model.a * (1.0 - ka * ka / 6.0)
    return np.where(small, series, out)


def denominator(model: DeltaShellModel, k):
    """D(k) = e^{-ika} + (g/k) sin ka; entire once the k = 0 limit is taken."""
    k = np.asarray(k, dtype=complex)
    return np.exp(-1j * k * model.a) + _g_sinc(model, k)


def _term_scale(model: DeltaShellModel, k):
    """Magnitude scale of D's two terms, for relative residual thresholds."""
    k = np.asarray(k, dtype=complex)
    return np.abs(np.exp(-1j * k * model.a)) + np.abs(_g_sinc(model, k))


def s_matrix(model: DeltaShellModel, k):
    """Analytically continued S(k); accepts scalars or arrays of complex k.

    Raises ValueError at k = 0 and OverflowError when |Im(k a)| exceeds
    IM_KA_BOUND (where e^{+-ika} would overflow float64).
    """
    karr = np.asarray(k, dtype=complex)
    if np.any(karr == 0):
        raise ValueError("S(k) is not defined at k = 0")
    if np.any(np.abs(karr.imag) * model.a > IM_KA_BOUND):
        raise OverflowError(f"|Im(k a)| exceeds {IM_KA_BOUND}; e^(ika) would overflow")
    gs = _g_sinc(model, karr)
    num = np.exp(1j * karr * model.a) + gs
    den = np.exp(-1j * karr * model.a) + gs
    out = np.exp(-2j * karr * model.a) * num / den
    return complex(out) if out.ndim == 0 else out


def phase_shift(model: DeltaShellModel, e: float) -> float:
    """Principal-branch phase shift delta(E) in (-pi/2, pi/2], S = e^{2i delta}.

    Defined for E > 0 only.  Use phase_shift_curve for a branch-continuous
    sweep across resonances.
    """
    if not (e > 0):
        raise ValueError(f"phase shift requires E > 0, got {e}")
    return 0.5 * cmath.phase(s_matrix(model, complex(np.sqrt(e))))


def phase_shift_curve(model: DeltaShellModel, energies) -> np.ndarray:
    """delta(E) on a grid of positive energies, unwrapped to be continuous.

    Branch tracking walks the grid choosing the nearest multiple of pi; when
    an adjacent jump would reach pi/2 the interval is bisected (recursively,
    up to 48 levels) so narrow resonances cannot slip a branch unnoticed.
    """
    e = np.asarray(energies, dtype=float)
    if e.ndim != 1 or e.size < 1:
        raise ValueError("energies must be a 1-d array")
    if np.any(e <= 0):
        raise ValueError("phase shift requires E > 0")

    def principal(x: float) -> float:
        return 0.5 * cmath.phase(s_matrix(model, complex(np.sqrt(x))))

    def continue_branch(e0, d0, e1, depth=0):
        raw = principal(e1)
        cand = raw + np.pi * np.round((d0 - raw) / np.pi)
        if abs(cand - d0) < np.pi / 2 - 1e-9 or depth >= 48:
            return cand
        mid = 0.5 * (e0 + e1)
        dmid = continue_branch(e0, d0, mid, depth + 1)
        return continue_branch(mid, dmid, e1, depth + 1)

    out = np.empty_like(e)
    out[0] = principal(e[0])
    for i in range(1, e.size):
        out[i] = continue_branch(e[i - 1], out[i - 1], e[i])
    return out


def _newton_zero(model: DeltaShellModel, k0: complex):
    """Polish one seed against D(k) with a central-difference Newton step.

    Seeds that wander into overflow territory or fail to converge return
    None; the caller drops them.
    """
    k = complex(k0)
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(_NEWTON_MAX_STEPS):
            if k == 0 or abs(k.imag) * model.a > IM_KA_BOUND:
                return None
            h = _NEWTON_STEP_SCALE * (1.0 + abs(k))
            f = complex(denominator(model, k))
            df = (complex(denominator(model, k + h)) - complex(denominator(model, k - h))) / (2 * h)
            if df == 0 or not np.isfinite(df) or not np.isfinite(f):
                return None
            step = f / df
            k = k - step
            if not np.isfinite(k):
                return None
            if abs(step) < _NEWTON_CONVERGED * (1.0 + abs(k)):
                return k
    return None


def find_poles(model: DeltaShellModel, region: SearchRegion) -> list[ResonancePole]:
    """All resonance poles in a fourth-quadrant rectangle of the k plane.

    Seeds a uniform grid over the region, polishes each seed with Newton
    iteration on D(k), keeps converged zeros that fall inside the region
    with |D| below 1e-10 times the local term scale, and deduplicates
    (separation 1e-6).  Non-convergent seeds are dropped silently; an empty
    result is valid.
    """
    if not (region.re_min >= 0 and region.im_max <= 0):
        raise ValueError("pole search region must lie in Re k >= 0, Im k <= 0")
    res = np.linspace(region.re_min, region.re_max, region.n_re)
    ims = np.linspace(region.im_min, region.im_max, region.n_im)
    found: list[complex] = []
    for sr in res:
        for si in ims:
            seed = complex(sr, si)
            if abs(seed) < 1e-9:
                continue
            k = _newton_zero(model, seed)
            if k is None or not region.contains(k):
                continue
            if not (k.real > 0 and k.imag < 0):
                continue
            if abs(denominator(model, k)) > _RESIDUAL_FACTOR * _term_scale(model, k):
                continue
            for i, p in enumerate(found):
                if abs(k - p) <= _DEDUP_SEPARATION:
                    if abs(denominator(model, k)) < abs(denominator(model, p)):
                        found[i] = k
                    break
            else:
                found.append(k)
    found.sort(key=lambda z: z.real)
    return [ResonancePole.from_momentum(k) for k in found]


def winding_number(values: np.ndarray) -> float:
    """Total phase increment of a closed sampled path, in turns.

    The path must be closed (first and last samples equal) and must not pass
    through zero.  Adjacent samples should subtend less than half a turn for
    the count to be meaningful; pole_count refines until that holds.
    """
    v = np.asarray(values, dtype=complex)
    if v[0] != v[-1]:
        raise ValueError("path is not closed")
    inc = np.angle(v[1:] / v[:-1])
    return float(np.sum(inc) / (2 * np.pi))


def _rectangle_path(region: SearchRegion, n_per_side: int) -> np.ndarray:
    c0, c1, c2, c3 = region.corners
    seg = lambda p, q: p + (q - p) * np.linspace(0.0, 1.0, n_per_side, endpoint=False)
    return np.concatenate([seg(c0, c1), seg(c1, c2), seg(c2, c3), seg(c3, c0), [c0]])


def pole_count(
    model: DeltaShellModel,
    region: SearchRegion,
    n_per_side: int = 512,
    loops: int = 1,
) -> int:
    """Number of zeros of D inside a rectangle, by the argument principle.

    Walks the rectangle boundary counterclockwise ``loops`` times and counts
    the winding of D around zero.  Sampling is doubled until no phase step
    reaches pi/2 (up to 2^21 points per side).  Raises PoleOnContourError if
    |D| on the contour falls below 1e-10 of the local term scale.
    """
    if loops < 1:
        raise ValueError("loops must be >= 1")
    if max(abs(region.im_min), abs(region.im_max)) * model.a > IM_KA_BOUND:
        raise OverflowError(f"contour reaches |Im(k a)| > {IM_KA_BOUND}")
    n = n_per_side
    while True:
        path = _rectangle_path(region, n)
        vals = denominator(model, path)
        scale = _term_scale(model, path)
        if np.any(np.abs(vals) < _RESIDUAL_FACTOR * scale):
            raise PoleOnContourError("contour touches a pole of S (zero of D)")
        steps = np.abs(np.angle(vals[1:] / vals[:-1]))
        if np.max(steps) < np.pi / 2:
            break
        if n >= 2**21:
            raise PoleOnContourError("contour winding did not resolve; a zero may sit on the boundary")
        n *= 2
    if loops > 1:
        vals = np.concatenate([vals[:-1]] * loops + [vals[:1]])
    w = winding_number(vals)
    count = int(np.round(w))
    if abs(w - count) > 0.25:
        raise PoleOnContourError(f"winding number {w:.3f} is not close to an integer")
    return count


def bound_states(model: DeltaShellModel) -> list[float]:
    """Binding energies E = -kappa^2 of the attractive shell (empty if none).

    The s-wave delta shell binds at most one state, present exactly when
    g < 0 and |g| a > 1; kappa solves kappa = |g| (1 - e^{-2 kappa a}) / 2,
    found by bisection.
    """
    if model.g >= 0:
        return []
    strength = -model.g
    if strength * model.a <= 1.0:
        return []

    def f(kappa: float) -> float:
        # expm1 keeps precision when kappa*a is tiny (threshold region)
        return -0.5 * strength * np.expm1(-2.0 * kappa * model.a) - kappa

    hi = 0.5 * strength + 1.0 / model.a
    lo = (strength * model.a - 1.0) / (strength * model.a * model.a)
    for _ in range(200):
        if f(lo) > 0:
            break
        lo *= 0.5
    else:
        return []
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    kappa = 0.5 * (lo + hi)
    return [-kappa * kappa]


def fit_breit_wigner_curve(energies, sin2delta):
    """Least-squares Breit-Wigner + linear background fit of sin^2(delta).

    Model: (G/2)^2 / ((E - E_R)^2 + (G/2)^2) + c0 + c1 (E - mean(E)).
    Returns (e_r, gamma, rms_residual).
    """
    e = np.asarray(energies, dtype=float)
    y = np.asarray(sin2delta, dtype=float)
    e_mid = e.mean()

    def model_fn(x, er, gam, c0, c1):
        hw = 0.5 * gam
        return hw * hw / ((x - er) ** 2 + hw * hw) + c0 + c1 * (x - e_mid)

    i_peak = int(np.argmax(y))
    base = 0.5 * (np.median(y[: max(3, y.size // 10)]) + np.median(y[-max(3, y.size // 10):]))
    half = base + 0.5 * (y[i_peak] - base)
    above = y > half
    width_guess = max((np.count_nonzero(above)) * (e[1] - e[0]), 2 * (e[1] - e[0]))
    p0 = [e[i_peak], width_guess, base, 0.0]
    popt, _ = curve_fit(model_fn, e, y, p0=p0, maxfev=20000)
    er, gam = float(popt[0]), float(abs(popt[1]))
    rms = float(np.sqrt(np.mean((model_fn(e, *popt) - y) ** 2)))
    return er, gam, rms


def breit_wigner_fit(
    model: DeltaShellModel,
    window: tuple[float, float],
    n: int = 400,
    residual_threshold: float = 0.05,
) -> tuple[float, float]:
    """Fit the resonance profile of sin^2(delta) over an energy window.

    The window must contain exactly one resonance pole (checked against
    find_poles); the fitted (E_R, Gamma) are returned.  Raises
    ResonanceFitError when the window holds zero or several resonances or
    when the fit residual exceeds ``residual_threshold``.
    """
    e_lo, e_hi = window
    if not (0 < e_lo < e_hi):
        raise ValueError(f"window must satisfy 0 < e_lo < e_hi, got {window}")
    re_lo = 0.98 * np.sqrt(e_lo)
    re_hi = 1.02 * np.sqrt(e_hi)
    region = SearchRegion(re_lo, re_hi, -2.0 / model.a, -1e-12, n_re=32, n_im=16)
    in_window = [p for p in find_poles(model, region) if e_lo <= p.e_r <= e_hi]
    if len(in_window) != 1:
        raise ResonanceFitError(
            f"window {window} contains {len(in_window)} resonances; need exactly 1"
        )
    energies = np.linspace(e_lo, e_hi, n)
    delta = phase_shift_curve(model, energies)
    er, gam, rms = fit_breit_wigner_curve(energies, np.sin(delta) ** 2)
    if rms > residual_threshold:
        raise ResonanceFitError(f"not a clean resonance: fit rms {rms:.3g} > {residual_threshold}")
    return er, gam
