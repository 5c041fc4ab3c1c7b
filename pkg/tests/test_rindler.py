import math

import numpy as np
import pytest

from rindlerqi import (
    SINGLE_MODE_LAYOUT,
    TWO_MODE_LAYOUT,
    U_INFINITE,
    BellFamily,
    expand_one_particle,
    expand_two_mode,
    expand_vacuum,
    mode_expansion_terms,
    ratio_from_u,
    u_from_ratio,
)

SQRT_HALF = 1 / math.sqrt(2)
U_GRID = np.linspace(0.0, U_INFINITE, 65)


class TestAccelerationMap:
    def test_infinite_acceleration(self):
        assert u_from_ratio(0.0) == pytest.approx(math.pi / 4, abs=1e-15)

    def test_inertial_limit(self):
        assert u_from_ratio(10.0) == pytest.approx(0.0, abs=1e-10)

    def test_known_point(self):
        # exp(-2 pi x) = 1/3 at x = ln(3)/(2 pi), so cos u = sqrt(3)/2
        assert u_from_ratio(math.log(3) / (2 * math.pi)) == pytest.approx(math.pi / 6, abs=1e-12)

    def test_monotone_decreasing(self):
        ratios = np.linspace(0.0, 3.0, 200)
        values = [u_from_ratio(x) for x in ratios]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_roundtrip(self):
        for u in U_GRID[1:]:
            assert u_from_ratio(ratio_from_u(u)) == pytest.approx(u, abs=1e-10)

    def test_u_zero_maps_to_infinite_ratio(self):
        assert ratio_from_u(0.0) == math.inf

    def test_negative_ratio_rejected(self):
        with pytest.raises(ValueError, match="nonnegative"):
            u_from_ratio(-0.1)


class TestSingleModeExpansions:
    def test_vacuum_inertial(self):
        ket = expand_vacuum(0.0)
        assert ket.amplitude("00") == 1.0
        assert len(ket.amplitudes) == 1

    def test_vacuum_infinite(self):
        ket = expand_vacuum(U_INFINITE)
        assert ket.amplitude("00") == pytest.approx(SQRT_HALF)
        assert ket.amplitude("11") == pytest.approx(SQRT_HALF)

    def test_vacuum_intermediate(self):
        ket = expand_vacuum(math.pi / 6)
        assert ket.amplitude("00") == pytest.approx(math.sqrt(3) / 2)
        assert ket.amplitude("11") == pytest.approx(0.5)
        assert len(ket.amplitudes) == 2

    @pytest.mark.parametrize("u", [0.0, math.pi / 8, U_INFINITE])
    def test_one_particle_independent_of_u(self, u):
        ket = expand_one_particle(u)
        assert ket.amplitudes == {SINGLE_MODE_LAYOUT.index_of("10"): 1.0}
        assert ket.norm() == 1.0

    def test_acceleration_out_of_range(self):
        with pytest.raises(ValueError, match="allowed range"):
            expand_vacuum(1.0)


class TestTwoModeExpansion:
    def test_psi_inertial_recovers_pair(self):
        alpha, beta = 0.6, 0.8
        ket = expand_two_mode(BellFamily.PSI, alpha, beta, 0.0, 0.0)
        assert ket.amplitude("0100") == pytest.approx(alpha)
        assert ket.amplitude("1000") == pytest.approx(beta)
        assert len(ket.amplitudes) == 2

    def test_psi_term_pattern(self):
        alpha, beta = 0.6, 0.8j
        ua, ub = 0.3, 0.5
        ket = expand_two_mode(BellFamily.PSI, alpha, beta, ua, ub)
        assert ket.amplitude("0100") == pytest.approx(alpha * math.cos(ua))
        assert ket.amplitude("1110") == pytest.approx(alpha * math.sin(ua))
        assert ket.amplitude("1000") == pytest.approx(beta * math.cos(ub))
        assert ket.amplitude("1101") == pytest.approx(beta * math.sin(ub))
        assert len(ket.amplitudes) == 4

    def test_phi_term_pattern_at_infinite_accelerations(self):
        ket = expand_two_mode(BellFamily.PHI, SQRT_HALF, SQRT_HALF, U_INFINITE, U_INFINITE)
        for bits in ("0000", "0101", "1010", "1111"):
            assert ket.amplitude(bits) == pytest.approx(SQRT_HALF * 0.5)
        assert ket.amplitude("1100") == pytest.approx(SQRT_HALF)
        assert ket.norm() == pytest.approx(1.0, abs=1e-12)

    def test_psi_alpha_only_matches_composed_single_modes(self):
        # |0>_A |1>_B: tensor the vacuum and one-particle expansions directly
        ua = 0.4
        ket = expand_two_mode(BellFamily.PSI, 1.0, 0.0, ua, 0.7)
        assert ket.amplitude("0100") == pytest.approx(math.cos(ua))
        assert ket.amplitude("1110") == pytest.approx(math.sin(ua))
        assert len(ket.amplitudes) == 2

    @pytest.mark.parametrize("u", U_GRID)
    def test_single_mode_norms_on_grid(self, u):
        assert abs(expand_vacuum(u).norm() - 1.0) < 1e-12
        assert expand_one_particle(u).norm() == 1.0

    @pytest.mark.parametrize("family", list(BellFamily))
    def test_norm_preserved_on_full_grid(self, family):
        for ua in U_GRID:
            for ub in U_GRID:
                ket = expand_two_mode(family, 0.6, 0.8, ua, ub)
                assert abs(ket.norm() - 1.0) < 1e-12

    @pytest.mark.parametrize("family", list(BellFamily))
    @pytest.mark.parametrize("alpha,beta", [(SQRT_HALF, SQRT_HALF), (1.0, 0.0)])
    def test_norm_preserved_other_weights(self, family, alpha, beta):
        for ua in U_GRID[::8]:
            for ub in U_GRID[::8]:
                ket = expand_two_mode(family, alpha, beta, ua, ub)
                assert abs(ket.norm() - 1.0) < 1e-12

    @pytest.mark.parametrize("family", list(BellFamily))
    def test_matches_tensor_composition(self, family):
        # brute-force cross-check: expand each Minkowski mode separately and
        # tensor the terms together, reordering to [A_I, B_I, A_II, B_II]
        alpha, beta = 0.48, math.sqrt(1 - 0.48**2) * 1j
        ua, ub = 0.31, 0.65
        pairs = {"psi": [(0, 1, alpha), (1, 0, beta)], "phi": [(0, 0, alpha), (1, 1, beta)]}
        dense = np.zeros(16, dtype=complex)
        for a_occ, b_occ, coeff in pairs[family.value]:
            for ai, aii, wa in mode_expansion_terms(a_occ, ua):
                for bi, bii, wb in mode_expansion_terms(b_occ, ub):
                    dense[TWO_MODE_LAYOUT.index_of((ai, bi, aii, bii))] += coeff * wa * wb
        ket = expand_two_mode(family, alpha, beta, ua, ub)
        assert np.abs(ket.to_array() - dense).max() < 1e-15

    def test_unnormalized_pair_rejected(self):
        with pytest.raises(ValueError, match="not normalized"):
            expand_two_mode(BellFamily.PSI, 0.9, 0.8, 0.1, 0.1)
