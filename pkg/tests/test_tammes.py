"""
Test contact angle laws and the Tammes approximation
"""
import math

import numpy as np
import pytest
from scipy.integrate import trapezoid

from services.generators import gen_bpp
from services.rng import RandomStream
from services.sphere import shell_radius
from services.tammes import (
    contact_angle_cdf,
    contact_angle_pdf,
    expected_contact_angle,
    expected_nn_angle,
    nearest_neighbor_angles,
    nearest_neighbor_cdf,
    tammes_approx_dopt,
    tammes_comparison
)
from utils.errors import ConfigurationError, InsufficientPointsError, InvalidCountError


class TestContactAngle:
    """Test the contact angle law"""

    def test_endpoints(self):
        """Test CDF is 0 at 0 and 1 at pi"""
        assert contact_angle_cdf(0.0, 7) == 0.0
        assert contact_angle_cdf(math.pi, 7) == 1.0

    def test_single_point(self):
        """Test n = 1 at the equator"""
        assert contact_angle_cdf(math.pi / 2, 1) == pytest.approx(0.5)

    def test_ten_points(self):
        """Test n = 10 at the equator"""
        assert contact_angle_cdf(math.pi / 2, 10) == pytest.approx(1 - 2 ** -10)
        assert contact_angle_cdf(math.pi / 2, 10) == pytest.approx(0.9990234, abs=1e-7)

    def test_monotone_and_bounded(self):
        """Test CDF is nondecreasing in [0, 1]"""
        theta = np.linspace(0, math.pi, 500)
        values = contact_angle_cdf(theta, 25)
        assert np.all(np.diff(values) >= 0)
        assert np.all((values >= 0) & (values <= 1))

    def test_pdf_integrates_to_one(self):
        """Test density against the CDF"""
        theta = np.linspace(0, math.pi, 20_001)
        area = trapezoid(contact_angle_pdf(theta, 6), theta)
        assert area == pytest.approx(1.0, abs=1e-6)

    def test_invalid_inputs(self):
        """Test n = 0 and angles outside [0, pi]"""
        with pytest.raises(InvalidCountError):
            contact_angle_cdf(1.0, 0)
        with pytest.raises(ConfigurationError):
            contact_angle_cdf(4.0, 3)


class TestNearestNeighbor:
    """Test the nearest-neighbor angle law"""

    def test_reduces_to_contact(self):
        """Test n = 2 equals the one-point contact law"""
        theta = np.linspace(0, math.pi, 50)
        assert np.allclose(nearest_neighbor_cdf(theta, 2), contact_angle_cdf(theta, 1))

    def test_values(self):
        """Test pi and a direct evaluation"""
        assert nearest_neighbor_cdf(math.pi, 9) == 1.0
        assert nearest_neighbor_cdf(math.pi / 3, 5) == pytest.approx(0.68359375)

    def test_needs_two_points(self):
        """Test n < 2"""
        with pytest.raises(InvalidCountError):
            nearest_neighbor_cdf(1.0, 1)

    def test_monte_carlo_mean(self):
        """Test sampled mean nearest-neighbor angle over 10^4 draws of 100 points"""
        base = RandomStream(77)
        samples = np.array([
            nearest_neighbor_angles(gen_bpp(100, 1.0, base.substream(i)))[0]
            for i in range(10_000)
        ])
        stderr = samples.std(ddof=1) / math.sqrt(samples.size)
        assert abs(samples.mean() - expected_nn_angle(100)) <= 3 * stderr

    def test_angles_need_two_points(self):
        """Test empirical angles of a single point"""
        with pytest.raises(InsufficientPointsError):
            nearest_neighbor_angles(gen_bpp(1, 1.0, RandomStream(0)))


class TestWallis:
    """Test expected angles"""

    def test_small_values(self):
        """Test n = 2 and n = 3"""
        assert expected_nn_angle(2) == pytest.approx(math.pi / 2)
        assert expected_nn_angle(3) == pytest.approx(3 * math.pi / 8)

    @pytest.mark.parametrize('n', range(2, 31))
    def test_binomial_identity(self, n):
        """Test pi * C(2m, m) / 4^m"""
        m = n - 1
        exact = math.pi * (math.comb(2 * m, m) / 4 ** m)
        assert expected_nn_angle(n) == pytest.approx(exact, rel=1e-10)

    def test_log_space_matches_naive_product(self):
        """Test log-space evaluation against the direct product"""
        for n in range(2, 51):
            naive = math.pi * math.prod((2 * i - 1) / (2 * i) for i in range(1, n))
            assert expected_nn_angle(n) == pytest.approx(naive, rel=1e-12)

    @pytest.mark.parametrize('n', [10_000, 1_000_000])
    def test_asymptotic(self, n):
        """Test the Wallis asymptotic for large n"""
        asymptotic = math.pi / math.sqrt(math.pi * (n - 1))
        assert expected_nn_angle(n) == pytest.approx(asymptotic, rel=1e-4)

    def test_strictly_decreasing(self):
        """Test expected angle shrinks with n"""
        values = [expected_nn_angle(n) for n in range(2, 200)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_contact_shifts_by_one(self):
        """Test E[contact angle](n) == E[nn angle](n + 1)"""
        assert expected_contact_angle(9) == pytest.approx(expected_nn_angle(10))


class TestTammesApproximation:
    """Test the approximate Tammes distance"""

    def test_two_points(self):
        """Test antipodal optimum"""
        assert tammes_approx_dopt(2, 1.0) == pytest.approx(2.0)

    def test_three_points(self):
        """Test the three-point value against the triangle optimum"""
        value = tammes_approx_dopt(3, 1.0)
        assert value == pytest.approx(1.84776, abs=1e-5)
        assert value / math.sqrt(3) == pytest.approx(1.067, abs=1e-3)

    def test_four_points(self):
        """Test the four-point value against the tetrahedron optimum"""
        assert tammes_approx_dopt(4, 1.0) == pytest.approx(2 * math.sin(5 * math.pi / 16))
        assert tammes_approx_dopt(4, 1.0) == pytest.approx(1.66294, abs=1e-5)
        assert tammes_approx_dopt(4, 1.0) > math.sqrt(8 / 3)

    def test_needs_two_points(self):
        """Test n < 2"""
        with pytest.raises(InvalidCountError):
            tammes_approx_dopt(1, 1.0)

    @pytest.mark.parametrize('n', [50, 100, 500, 1000])
    @pytest.mark.parametrize('altitude_km', [0.0, 550.0])
    def test_fits_fibonacci_measurement(self, n, altitude_km):
        """Test approximation within 20% of the measured lattice minimum"""
        row = tammes_comparison(n, shell_radius(altitude_km))
        assert row.relative_error <= 0.2
        assert row.n == n
        assert row.altitude_km == altitude_km
