import math

import pytest

from coinwalk.optical import (
    CavityConfig,
    frequency_of,
    max_steps,
    resolvable,
    roundtrips_per_step,
    validate_commensurate,
    wavenumber_of,
    SPEED_OF_LIGHT,
)

FSR = 2 * math.pi * 1e8
OMEGA0 = 2 * math.pi * 2e14


def config(**overrides):
    base = dict(omega0=OMEGA0, omega_bar=3 * FSR, omega_fsr=FSR, f=3)
    base.update(overrides)
    return CavityConfig(**base)


class TestFrequency:
    def test_carrier(self):
        assert frequency_of(0, config()) == OMEGA0

    def test_linear_comb(self):
        cfg = config(omega_bar=2 * math.pi * 1e6, f=1, omega_fsr=2 * math.pi * 1e6)
        assert frequency_of(3, cfg) == pytest.approx(OMEGA0 + 2 * math.pi * 3e6, rel=1e-15)

    def test_mirror_symmetry_about_carrier(self):
        cfg = config()
        for m in (1, 5, 17):
            up = frequency_of(m, cfg) - OMEGA0
            down = OMEGA0 - frequency_of(-m, cfg)
            assert up == pytest.approx(down, rel=1e-15)

    def test_spacing_is_omega_bar(self):
        # uniform to the last representable digit of the carrier
        import numpy as np

        cfg = config()
        ulp = np.spacing(frequency_of(5, cfg))
        for m in range(-5, 5):
            gap = frequency_of(m + 1, cfg) - frequency_of(m, cfg)
            assert abs(gap - cfg.omega_bar) <= 2 * ulp

    def test_wavenumber_is_frequency_over_c(self):
        cfg = config()
        assert wavenumber_of(2, cfg) == pytest.approx(
            frequency_of(2, cfg) / SPEED_OF_LIGHT, rel=1e-15
        )


class TestCommensurate:
    def test_exact_multiple(self):
        assert validate_commensurate(config(omega_bar=3 * FSR, f=3)).ok

    def test_half_fsr_detuning(self):
        result = validate_commensurate(config(omega_bar=3.5 * FSR, f=3))
        assert not result.ok
        assert result.value == pytest.approx(0.5, abs=1e-12)

    def test_sub_tolerance_detuning(self):
        result = validate_commensurate(config(omega_bar=FSR * (1 + 1e-12), f=1))
        assert result.ok

    def test_pure_predicate(self):
        cfg = config(omega_bar=3.5 * FSR, f=3)
        assert validate_commensurate(cfg) == validate_commensurate(cfg)


class TestResolvable:
    def test_monochromatic_pulse(self):
        assert resolvable(config(delta_omega=0.0)).ok

    def test_five_widths_clearance(self):
        assert resolvable(config(omega_bar=5 * FSR, f=5, delta_omega=FSR)).ok

    def test_two_widths_violation(self):
        result = resolvable(config(omega_bar=2 * FSR, f=2, delta_omega=FSR))
        assert not result.ok
        assert result.value == pytest.approx(2.0, rel=1e-12)

    def test_custom_safety_factor(self):
        cfg = config(omega_bar=2 * FSR, f=2, delta_omega=FSR, resolvability_factor=1.5)
        assert resolvable(cfg).ok


class TestMaxSteps:
    def test_bandwidth_limited(self):
        cfg = config()
        assert max_steps(cfg, 100 * cfg.omega_bar, 0.5) == 100

    def test_loss_limited(self):
        cfg = config(loss_per_roundtrip=0.5)
        assert max_steps(cfg, 1e9 * cfg.omega_bar, 1.0 / 1024.0) == 10

    def test_zero_bandwidth(self):
        assert max_steps(config(), 0.0, 0.5) == 0

    def test_monotone_in_bandwidth(self):
        cfg = config(loss_per_roundtrip=0.01)
        budgets = [max_steps(cfg, b * cfg.omega_bar, 1e-3) for b in (10, 50, 200, 1000)]
        assert budgets == sorted(budgets)

    def test_monotone_in_loss(self):
        budgets = [
            max_steps(config(loss_per_roundtrip=loss), 1e6 * 3 * FSR, 1e-3)
            for loss in (0.001, 0.01, 0.1, 0.5)
        ]
        assert budgets == sorted(budgets, reverse=True)

    def test_rejects_bad_floor(self):
        with pytest.raises(ValueError):
            max_steps(config(), 1e10, 1.5)


class TestRoundtrips:
    def test_single_roundtrip_when_commensurate(self):
        assert roundtrips_per_step(config()) == 1

    def test_sub_fsr_shift_needs_several(self):
        cfg = config(omega_bar=FSR / 4, f=1)
        assert roundtrips_per_step(cfg) == 4


class TestValidation:
    def test_rejects_negative_frequency(self):
        with pytest.raises(ValueError):
            config(omega0=-1.0)

    def test_rejects_unit_loss(self):
        with pytest.raises(ValueError):
            config(loss_per_roundtrip=1.0)

    def test_rejects_small_safety_factor(self):
        with pytest.raises(ValueError):
            config(resolvability_factor=1.0)
