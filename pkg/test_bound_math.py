#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import numpy as np
import pytest

from features.bound_math import bound_J, bound_J_substituted, bound_report, f_univariate, f_values, g_asymptotic, \
    g_values, gamma_optimize, gss, p_value, zeta_monotonicity_check
from utils.errors import DomainError, InvalidHypotheses, NonpositiveDenominator


def test_p_value():
    assert p_value(10, 2, 0, 0.5) == pytest.approx(0.75)
    assert p_value(10, 5, 0, 1) == 0
    with pytest.raises(NonpositiveDenominator):
        p_value(10, 2, 10 ** 6, 0.5)


def test_bound_j():
    assert bound_J(50, 22, 0, 0, 10.5) == 0
    with pytest.raises(InvalidHypotheses) as e:
        bound_J(50, 22, 484, 616, 10)
    assert e.value.flag == "lambda_sq_gt_2n"


def test_bound_j_higman_sims_instance():
    # complement of the Higman-Sims graph: n = 50, k = 22, a = 22 * 22, b = 1100 - 484
    assert p_value(50, 22, 616, 10.5) == pytest.approx(6 / 19.894, rel=1e-3)
    assert bound_J(50, 22, 484, 616, 10.5) == pytest.approx(228.6, abs=0.5)


def test_g_and_f_endpoints():
    assert g_asymptotic(0, 0) == 0
    assert g_asymptotic(0.25, 0.01) == pytest.approx(0, abs=1e-15)
    assert f_univariate(0) == 0
    assert f_univariate(0.25) == pytest.approx(0, abs=1e-15)
    assert f_univariate(0.193984) == pytest.approx(0.013118, abs=1e-5)


def test_domains():
    with pytest.raises(DomainError):
        f_univariate(0.3)
    with pytest.raises(DomainError):
        g_asymptotic(0.1, 0.02)
    with pytest.raises(DomainError):
        g_asymptotic(-0.1, 0)


def test_g_on_the_boundary_is_f():
    z = np.linspace(0, 0.25, 10_001)
    assert np.max(np.abs(g_values(z, z * z) - f_values(z))) <= 1e-12


def test_f_is_nonnegative_with_endpoint_zeros():
    z = np.linspace(0, 0.25, 10_001)
    values = f_values(z)
    assert np.all(values[1:-1] > 0)
    assert values[0] == 0


def test_gss_finds_parabola_minimum():
    low, high = gss(lambda x: (x - 1.3) ** 2, 0, 3, 1e-8)
    assert high - low <= 1e-8
    assert (low + high) / 2 == pytest.approx(1.3, abs=1e-7)


def test_gamma():
    result = gamma_optimize(1e-7)
    assert result.z_star == pytest.approx(0.193984, abs=1e-4)
    assert result.gamma == pytest.approx(0.986882, abs=1e-5)
    assert gamma_optimize(1e-7) == result
    assert 1 - result.gamma > max(f_univariate(0), f_univariate(0.25))


def test_gamma_loose_tolerance():
    result = gamma_optimize(1e-2)
    assert result.gamma == pytest.approx(0.986882, abs=1e-2)


def test_zeta_monotonicity():
    assert zeta_monotonicity_check(1000)
    assert not zeta_monotonicity_check(50, g=lambda z, zeta: -g_values(z, zeta))
    with pytest.raises(DomainError):
        zeta_monotonicity_check(1)


def test_substituted_bound_converges():
    z, zeta = 0.19, 0.02
    target = g_asymptotic(z, zeta)
    gaps = [abs(bound_J_substituted(n, z, zeta, n ** (2 / 3)) - target) for n in (10 ** 3, 10 ** 4, 10 ** 5)]
    assert gaps[0] > gaps[1] > gaps[2]


def test_bound_report():
    report = bound_report(50, 22, 484, 616, 10.5)
    assert report.rhs_J == pytest.approx(228.6, abs=0.5)
    assert report.q == pytest.approx(1 - 100 / 110.25)
    assert report.z == pytest.approx(0.22)
    assert report.zeta == pytest.approx(484 / 10_000)
    assert report.failed_flag is None

    report = bound_report(50, 22, 484, 616, 10)
    assert report.rhs_J is None
    assert report.failed_flag == "lambda_sq_gt_2n"

    report = bound_report(1, 1, 0, 0, 0)
    assert report.q == float("-inf")
    assert report.failed_flag == "lambda_sq_gt_2n"
