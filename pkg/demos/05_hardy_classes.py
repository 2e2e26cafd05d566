"""Classify energy-space functions by the time support of their transforms.

A function analytic in the upper half of the complex energy plane (pole
below the axis) has a one-sided Fourier transform living on t >= 0; its
conjugate belongs to the lower class and lives on t <= 0.  The classifier
measures "leakage", the transform-energy fraction on the forbidden side.
A real Gaussian splits evenly and belongs to neither class.
"""

import numpy as np

from gamow import hardy_check, windowed_resonance_samples

e_r, gamma = 10.0, 0.1
energies, samples = windowed_resonance_samples(
    e_r, gamma, e_r - 10000 * gamma, e_r + 10000 * gamma, 2**17
)
print(f"resonance function 1/(E - ({e_r} - {gamma/2}i)) under a wide Gaussian window")
for half_plane in ("upper", "lower"):
    report = hardy_check(energies, samples, half_plane)
    print(f"  {half_plane:>5s} class: leakage = {report.leakage:.3e}   member = {report.is_member}")

print("\nconjugating the samples flips the pole across the axis and the verdicts:")
for half_plane in ("upper", "lower"):
    report = hardy_check(energies, np.conj(samples), half_plane)
    print(f"  {half_plane:>5s} class: leakage = {report.leakage:.3e}   member = {report.is_member}")

up = hardy_check(energies, samples, "upper").leakage
up_conj = hardy_check(energies, np.conj(samples), "upper").leakage
print(f"\nthe two leakages exhaust the transform energy: sum = {up + up_conj:.9f}")

print("\na real Gaussian is symmetric in t and belongs to neither class:")
e = np.linspace(-40.0, 40.0, 8192, endpoint=False)
f = np.exp(-(e**2) / 8.0).astype(complex)
for half_plane in ("upper", "lower"):
    report = hardy_check(e, f, half_plane)
    print(f"  {half_plane:>5s} class: leakage = {report.leakage:.4f}   member = {report.is_member}")

print("\nthe decay rate of the one-sided transform recovers Gamma/2:")
n, de = energies.size, energies[1] - energies[0]
dt = 2 * np.pi / (n * de)
t = (np.arange(n) - n / 2 + 0.5) * dt
tw = np.exp(-2j * np.pi * np.arange(n) * (-n / 2 + 0.5) / n)
transform = de * np.exp(-1j * energies[0] * t) * np.fft.fft(samples * tw)
sel = (t > 1 / gamma) & (t < 5 / gamma)
slope = np.polyfit(t[sel], np.log(np.abs(transform[sel])), 1)[0]
print(f"  fitted slope of log|F(t)| = {slope:.6f}   (expected -Gamma/2 = {-gamma/2})")
