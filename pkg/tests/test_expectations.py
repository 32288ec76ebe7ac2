import unittest
import numpy as np
from circsq.errors import DomainError, RangeError
from circsq.measures.expectations import (expect_exp_J, log_expect_exp_J, expect_exp_J_closed, log_expect_exp_J_closed,
	expect_U_power, expect_U_power_closed, ratio_to_reference_U, expect_trig, moments_J, cumulants_J,
	cumulant_series_coefficient, cumulant_uncertainty_terms, cumulant_uncertainty_approx, schwarz_terms,
	MomentRequest, evaluate_request)
from circsq.measures.uncertainty import delta2_J, random_envelope_states
from circsq.states.state_space import (PhasePoint, coherent_state, squeezed_state, circular_squeezed_state,
	momentum_eigenstate)

class TestExponentialMoments(unittest.TestCase):

	def test_coherent(self):
		"""<exp(-2J)> = exp(1 - 2l) on coherent states."""
		for l in (-1., 0., 0.37, 2.):
			for phi in (0., 1.1, np.pi):
				state = coherent_state(PhasePoint(l, phi), 30)
				self.assertAlmostEqual(log_expect_exp_J(state, 1.), 1 - 2 * l, places=10)

	def test_zero(self):
		"""<exp(0)> = 1 for any state, direct and closed."""
		state = circular_squeezed_state(0.3, 1, 2.)
		self.assertAlmostEqual(expect_exp_J(state, 0.), 1., places=15)
		self.assertAlmostEqual(expect_exp_J_closed(0.4, 1.3, 0.), 1., places=14)

	def test_squeezed_identity(self):
		"""<exp(-2sJ)> = exp(s - 2l); l = 1, s = 2 gives 1."""
		state = squeezed_state(PhasePoint(1., 0.), 2., 12)
		self.assertAlmostEqual(expect_exp_J(state, 2.), 1., places=12)
		self.assertAlmostEqual(expect_exp_J_closed(1., 2., 2.), 1., places=12)

	def test_closed_vs_direct(self):
		"""Closed form and direct sums agree on a 5x5x5 grid of l, s and lambda."""
		for l in np.linspace(-1, 1, 5):
			for s in np.linspace(0.6, 2.5, 5):
				state = squeezed_state(PhasePoint(l, 0.7), s, 40)
				for lam in np.linspace(-s, s, 5):
					direct = expect_exp_J(state, lam)
					closed = expect_exp_J_closed(l, s, lam)
					self.assertLess(abs(direct - closed), 1e-9 * max(1., closed))

	def test_closed_reference_point(self):
		"""(l, s, lambda) = (0.3, 1.7, 0.9) against the state."""
		state = squeezed_state(PhasePoint(0.3, 2.2), 1.7, 30)
		self.assertAlmostEqual(expect_exp_J(state, 0.9), expect_exp_J_closed(0.3, 1.7, 0.9), places=10)

	def test_coherent_closed(self):
		"""At s = 1 the closed form reduces to exp(lam^2 - 2 l lam) times a theta ratio equal to 1 at lam = 1."""
		self.assertAlmostEqual(log_expect_exp_J_closed(0.37, 1., 1.), 1 - 2 * 0.37, places=12)

	def test_overflow(self):
		"""Moments beyond double precision raise RangeError; their log stays finite."""
		state = momentum_eigenstate(-400, 400)
		self.assertAlmostEqual(log_expect_exp_J(state, 1.), 800., places=9)
		with self.assertRaises(RangeError):
			expect_exp_J(state, 1.)

	def test_product_inequality(self):
		"""<e^X><e^-X> >= 1 for random states."""
		for state in random_envelope_states(3, 50):
			for lam in (0.3, 1., 1.7):
				self.assertGreaterEqual(log_expect_exp_J(state, lam) + log_expect_exp_J(state, -lam), -1e-12)

class TestUPowers(unittest.TestCase):

	def test_squeezed_U2(self):
		"""<U^2> = exp(-s) exp(2i phi) on squeezed states."""
		for s in (0.5, 1., 1.5, 2.5):
			for phi in (0., 1.1, np.pi):
				state = squeezed_state(PhasePoint(0.37, phi), s)
				self.assertLess(abs(expect_U_power(state, 2) - np.exp(-s + 2j * phi)), 1e-12)

	def test_phi_pi(self):
		"""At phi = pi the phase of <U^2> is 1 and the modulus exp(-s)."""
		u2 = expect_U_power(squeezed_state(PhasePoint(0., np.pi), 1.5), 2)
		self.assertAlmostEqual(u2.real, np.exp(-1.5), places=12)
		self.assertAlmostEqual(u2.imag, 0., places=12)

	def test_momentum_eigenstate(self):
		"""<U^n> = 0 for n != 0 on |j0>, 1 for n = 0; powers beyond the window vanish."""
		state = momentum_eigenstate(1, 4)
		for n in (-3, -1, 1, 2, 20):
			self.assertEqual(expect_U_power(state, n), 0)
		self.assertEqual(expect_U_power(state, 0), 1)

	def test_closed(self):
		"""Closed form of <U^n> for odd and even n."""
		for l in (-1., 0., 0.5, 2.):
			for s in (0.5, 1., 2.5):
				state = squeezed_state(PhasePoint(l, 1.1), s)
				for n in (-2, -1, 1, 2, 3):
					self.assertLess(abs(expect_U_power(state, n) - expect_U_power_closed(l, 1.1, s, n)), 1e-12)

	def test_coherent_U1(self):
		"""<U> at (l, phi) = (0.5, 1): modulus close to exp(-1/4), phase phi."""
		u = expect_U_power(coherent_state(PhasePoint(0.5, 1.)), 1)
		self.assertAlmostEqual(abs(u), np.exp(-0.25), delta=2e-3 * np.exp(-0.25))
		self.assertAlmostEqual(np.angle(u), 1., places=12)

	def test_ratio_to_reference(self):
		"""<U>_xi/<U>_1 is close to exp(i phi), with modulus exactly 1 at integer l."""
		ratio = ratio_to_reference_U(PhasePoint(0.25, 2.))
		self.assertLess(abs(abs(ratio) - 1), 2e-3)
		self.assertAlmostEqual(np.angle(ratio), 2., places=12)
		self.assertAlmostEqual(abs(ratio_to_reference_U(PhasePoint(1., 0.))), 1., places=12)

	def test_unitarity_bound(self):
		"""|<U^n>| <= 1 on random states."""
		for state in random_envelope_states(5, 50):
			for n in (1, 2, 3):
				self.assertLessEqual(abs(expect_U_power(state, n)), 1 + 1e-12)

class TestTrig(unittest.TestCase):

	def test_momentum_eigenstate(self):
		"""|j0>: <cos> = <sin> = 0, both variances 1/2, dJ = 0."""
		trig = expect_trig(momentum_eigenstate(2, 5))
		self.assertEqual((trig.cos, trig.sin), (0., 0.))
		self.assertAlmostEqual(trig.var_cos, 0.5)
		self.assertAlmostEqual(trig.var_sin, 0.5)
		self.assertAlmostEqual(trig.dJ, 0.)

	def test_circular(self):
		"""Circular squeezed state at alpha = 0: <sin> = 0 and dJ dsin = |<cos>|/2."""
		trig = expect_trig(circular_squeezed_state(0., 0, 1.))
		self.assertAlmostEqual(trig.sin, 0., places=14)
		self.assertAlmostEqual(trig.dJ * np.sqrt(trig.var_sin), 0.5 * abs(trig.cos), places=8)

	def test_schwarz(self):
		"""Schwarz inequality with A = J - <J>, B = U - <U> on random states."""
		for state in random_envelope_states(11, 100):
			left, right = schwarz_terms(state)
			self.assertGreaterEqual(left - right, -1e-10)

class TestMomentsCumulants(unittest.TestCase):

	def test_momentum_eigenstate(self):
		"""|j0>: moments j0^k, cumulants (j0, 0, ...)."""
		state = momentum_eigenstate(3, 5)
		np.testing.assert_allclose(moments_J(state, 6), [3.**k for k in range(1, 7)])
		np.testing.assert_allclose(cumulants_J(state, 6), [3., 0, 0, 0, 0, 0], atol=1e-12)
		self.assertEqual(cumulant_uncertainty_approx(state, 3), 0.)

	def test_coherent_odd_moments(self):
		"""Coherent state at l = 0: odd moments vanish and the variance is sum j^2 e^{-j^2}/sum e^{-j^2}."""
		state = coherent_state(PhasePoint(0., 0.))
		moments = moments_J(state, 8)
		np.testing.assert_allclose(moments[::2], 0., atol=1e-14)
		j = np.arange(-10, 11)
		variance = np.sum(j**2 * np.exp(-j**2.)) / np.sum(np.exp(-j**2.))
		self.assertAlmostEqual(cumulants_J(state, 2)[1], variance, places=13)
		self.assertAlmostEqual(variance, 0.49898, places=5)

	def test_cumulants_against_raw_moments(self):
		"""Orders 2 to 4 agree with the textbook formulas in raw moments."""
		state = squeezed_state(PhasePoint(0.6, 0.), 0.8)
		m1, m2, m3, m4 = moments_J(state, 4)
		k = cumulants_J(state, 4)
		self.assertAlmostEqual(k[0], m1, places=12)
		self.assertAlmostEqual(k[1], m2 - m1**2, places=11)
		self.assertAlmostEqual(k[2], m3 - 3 * m2 * m1 + 2 * m1**3, places=10)
		self.assertAlmostEqual(k[3], m4 - 4 * m3 * m1 - 3 * m2**2 + 12 * m2 * m1**2 - 6 * m1**4, places=9)

	def test_gaussian_cumulants(self):
		"""Cumulants are shift invariant: a nearly continuous Gaussian has negligible orders > 2."""
		state = squeezed_state(PhasePoint(1.3, 0.), 0.05)
		k = cumulants_J(state, 6)
		self.assertAlmostEqual(k[0], 1.3 / 0.05, places=8)
		self.assertAlmostEqual(k[1], 1 / (2 * 0.05), places=8)
		np.testing.assert_allclose(k[2:], 0., atol=1e-6)

	def test_series_coefficients(self):
		"""Coefficients 1, 1/3, 2/45, 1/315 of the cumulant series."""
		for n, c in ((2, 1.), (4, 1 / 3), (6, 2 / 45), (8, 1 / 315)):
			self.assertAlmostEqual(cumulant_series_coefficient(n), c, places=15)

	def test_approximation_coherent(self):
		"""The first term is the variance; the three-term residual is small and below the next term."""
		state = coherent_state(PhasePoint(0., 0.))
		exact = delta2_J(state)
		self.assertAlmostEqual(cumulant_uncertainty_approx(state, 1), cumulants_J(state, 2)[1], places=15)
		terms = cumulant_uncertainty_terms(state, 4)
		residual3 = abs(exact - np.sum(terms[:3]))
		self.assertLess(residual3, 0.02)
		self.assertLess(residual3, abs(cumulants_J(state, 8)[7]) / 315)
		self.assertAlmostEqual(terms[3], cumulants_J(state, 8)[7] / 315, places=14)

	def test_order_range(self):
		"""Orders outside 1..8 (terms outside 1..4) are refused."""
		state = coherent_state(PhasePoint(0., 0.))
		with self.assertRaises(DomainError):
			moments_J(state, 9)
		with self.assertRaises(DomainError):
			cumulants_J(state, 0)
		with self.assertRaises(DomainError):
			cumulant_uncertainty_approx(state, 5)

class TestMomentRequest(unittest.TestCase):

	def test_evaluate(self):
		"""All requested quantities are evaluated on one state."""
		state = coherent_state(PhasePoint(0.37, 1.1))
		values = evaluate_request(state, MomentRequest(lam=1., n=2, order=4))
		self.assertAlmostEqual(np.log(values['exp_J']), 1 - 2 * 0.37, places=10)
		self.assertLess(abs(values['U_power'] - np.exp(-1 + 2.2j)), 1e-12)
		self.assertEqual(len(values['moments']), 4)
		self.assertEqual(len(values['cumulants']), 4)

	def test_bad_order(self):
		with self.assertRaises(DomainError):
			MomentRequest(order=10)

if __name__ == '__main__':
	unittest.main()
