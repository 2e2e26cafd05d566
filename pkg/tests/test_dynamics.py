"""Half-domain semigroup laws and the regime-swapping map."""

import numpy as np
import pytest

from gamow.dynamics import (
    EvolutionSample,
    GamowState,
    HalfDomainError,
    Kind,
    Law,
    SpaceLabel,
    evolution_series,
    evolve,
    evolve_decaying_r0,
    evolve_decaying_r1,
    evolve_growing_r0,
    evolve_growing_r1,
    semigroup_compose_check,
    time_reverse,
)
from gamow.scattering import ResonancePole

POLE = ResonancePole.from_energy(10.0, 0.1)
LAW_FUNCS = {
    Law.GROWING_R0: evolve_growing_r0,
    Law.DECAYING_R0: evolve_decaying_r0,
    Law.DECAYING_R1: evolve_decaying_r1,
    Law.GROWING_R1: evolve_growing_r1,
}


def random_pole(rng):
    return ResonancePole.from_energy(rng.uniform(0.1, 10.0), rng.uniform(0.1, 2.0))


def domain_time(law, rng, scale=3.0):
    t = rng.uniform(0.0, scale)
    return t if law.kind is Kind.DECAYING else -t


class TestLawValues:
    @pytest.mark.parametrize("law", list(Law), ids=lambda l: l.code)
    def test_unity_at_origin(self, law):
        assert LAW_FUNCS[law](POLE, 0.0) == 1.0 + 0.0j

    def test_decaying_r0_half_life(self):
        t_half = np.log(2.0) / POLE.gamma
        survival = abs(evolve_decaying_r0(POLE, t_half)) ** 2
        assert abs(survival - 0.5) <= 1e-10 * 0.5

    def test_growing_r1_half_life(self):
        t_half = -np.log(2.0) / POLE.gamma
        survival = abs(evolve_growing_r1(POLE, t_half)) ** 2
        assert abs(survival - 0.5) <= 1e-10 * 0.5

    def test_exponential_decay_law(self):
        for t in np.linspace(0.0, 50.0, 200):
            survival = abs(evolve_decaying_r0(POLE, t)) ** 2
            expected = np.exp(-POLE.gamma * t)
            assert abs(survival - expected) <= 1e-13 * expected

    def test_growing_mirror_of_decaying_modulus(self):
        for t in np.linspace(0.0, 30.0, 100):
            assert abs(evolve_growing_r0(POLE, -t)) == pytest.approx(
                abs(evolve_decaying_r0(POLE, t)), rel=1e-14
            )

    def test_phase_sign_distinguishes_regimes(self):
        t = 0.3
        assert evolve_decaying_r0(POLE, t).imag < 0  # e^{-i e_r t} rotates clockwise
        assert evolve_decaying_r1(POLE, t).imag > 0


class TestHalfDomain:
    def test_decaying_r0_rejects_negative(self):
        with pytest.raises(HalfDomainError):
            evolve_decaying_r0(POLE, -1.0)

    def test_growing_r0_rejects_positive(self):
        with pytest.raises(HalfDomainError):
            evolve_growing_r0(POLE, 0.5)

    def test_decaying_r1_rejects_negative(self):
        with pytest.raises(HalfDomainError):
            evolve_decaying_r1(POLE, -2.0)

    def test_growing_r1_rejects_positive(self):
        with pytest.raises(HalfDomainError):
            evolve_growing_r1(POLE, 1e-9)

    @pytest.mark.parametrize("law", list(Law), ids=lambda l: l.code)
    def test_forbidden_half_line_always_raises(self, law):
        rng = np.random.default_rng(100 + law.regime)
        for _ in range(100):
            t = rng.uniform(1e-12, 50.0)
            bad = -t if law.kind is Kind.DECAYING else t
            with pytest.raises(HalfDomainError):
                LAW_FUNCS[law](POLE, bad)

    def test_zero_belongs_to_both(self):
        for law in Law:
            assert LAW_FUNCS[law](POLE, 0.0) == 1.0 + 0.0j


class TestMirrorIdentities:
    def test_decaying_r1_is_reversed_growing_r0(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            pole = random_pole(rng)
            t = rng.uniform(0.0, 3.0 / pole.gamma)
            lhs = evolve_decaying_r1(pole, t)
            rhs = evolve_growing_r0(pole, -t)
            assert abs(lhs - rhs) <= 1e-14 * abs(lhs)

    def test_growing_r1_is_reversed_decaying_r0(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            pole = random_pole(rng)
            t = -rng.uniform(0.0, 3.0 / pole.gamma)
            lhs = evolve_growing_r1(pole, t)
            rhs = evolve_decaying_r0(pole, -t)
            assert abs(lhs - rhs) <= 1e-14 * abs(lhs)


class TestSemigroup:
    def test_identity_element(self):
        assert semigroup_compose_check(POLE, Law.DECAYING_R0, 0.4, 0.0)

    def test_spec_example(self):
        assert semigroup_compose_check(POLE, Law.DECAYING_R0, 0.3, 0.7)

    def test_domain_enforced(self):
        with pytest.raises(HalfDomainError):
            semigroup_compose_check(POLE, Law.DECAYING_R0, 0.5, -0.2)

    @pytest.mark.parametrize("law", list(Law), ids=lambda l: l.code)
    def test_randomized_functional_equation(self, law):
        rng = np.random.default_rng(ord(law.code[0]) + law.regime)
        for _ in range(250):
            pole = random_pole(rng)
            t1 = domain_time(law, rng, scale=3.0 / pole.gamma)
            t2 = domain_time(law, rng, scale=3.0 / pole.gamma)
            assert semigroup_compose_check(pole, law, t1, t2, rel_tol=1e-12)


class TestStateLabels:
    def test_growing_lives_in_phi_minus_dual(self):
        state = GamowState(POLE, Kind.GROWING, regime=0)
        assert state.space_label is SpaceLabel.PHI_MINUS_DUAL
        assert state.law is Law.GROWING_R0

    def test_decaying_lives_in_phi_plus_dual(self):
        state = GamowState(POLE, Kind.DECAYING, regime=1)
        assert state.space_label is SpaceLabel.PHI_PLUS_DUAL
        assert state.law is Law.DECAYING_R1

    def test_regime_validated(self):
        with pytest.raises(ValueError):
            GamowState(POLE, Kind.GROWING, regime=2)

    def test_time_reverse_growing_r0(self):
        state = GamowState(POLE, Kind.GROWING, regime=0)
        flipped = time_reverse(state)
        assert flipped.regime == 1
        assert flipped.space_label is SpaceLabel.PHI_PLUS_DUAL
        assert flipped.pole == POLE

    def test_time_reverse_decaying_r0(self):
        state = GamowState(POLE, Kind.DECAYING, regime=0)
        flipped = time_reverse(state)
        assert flipped.regime == 1
        assert flipped.space_label is SpaceLabel.PHI_MINUS_DUAL

    @pytest.mark.parametrize("kind", list(Kind))
    @pytest.mark.parametrize("regime", [0, 1])
    def test_involution(self, kind, regime):
        state = GamowState(POLE, kind, regime)
        assert time_reverse(time_reverse(state)) == state

    @pytest.mark.parametrize("kind", list(Kind))
    @pytest.mark.parametrize("regime", [0, 1])
    def test_reversed_law_is_original_under_time_flip(self, kind, regime):
        state = GamowState(POLE, kind, regime)
        flipped = time_reverse(state)
        for t in (0.0, 0.7, 2.5):
            t_in = t if state.law.admits(t) else -t
            assert evolve(flipped, -t_in) == pytest.approx(evolve(state, t_in), rel=1e-14)


class TestEvolutionSeries:
    def test_singleton_grid(self):
        state = GamowState(POLE, Kind.DECAYING, regime=0)
        (sample,) = evolution_series(state, [0.0])
        assert sample == EvolutionSample(t=0.0, amplitude=1.0 + 0.0j, survival=1.0)

    def test_survival_is_squared_modulus(self):
        state = GamowState(POLE, Kind.DECAYING, regime=1)
        for s in evolution_series(state, np.linspace(0.0, 20.0, 50)):
            assert abs(s.survival - abs(s.amplitude) ** 2) <= 1e-14 * max(s.survival, 1e-300)

    def test_decaying_survival_monotone(self):
        state = GamowState(POLE, Kind.DECAYING, regime=0)
        survivals = [s.survival for s in evolution_series(state, np.linspace(0.0, 80.0, 200))]
        assert all(x >= y for x, y in zip(survivals, survivals[1:]))

    def test_growing_r1_survival_monotone_in_t(self):
        state = GamowState(POLE, Kind.GROWING, regime=1)
        times = np.linspace(-5.0 / POLE.gamma, 0.0, 200)
        survivals = [s.survival for s in evolution_series(state, times)]
        assert all(x <= y for x, y in zip(survivals, survivals[1:]))

    def test_out_of_domain_names_offender(self):
        state = GamowState(POLE, Kind.DECAYING, regime=0)
        with pytest.raises(HalfDomainError, match="-3.5"):
            evolution_series(state, [0.0, 1.0, -3.5, 2.0])
