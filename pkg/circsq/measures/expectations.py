r"""Expectation values on circle states.

Every quantity is available as a direct sum over the state's coefficients; for
the squeezed family (coherent states at s = 1) the theta function closed forms
are implemented as well, and the two are cross-checked by the test-suite and by
``circsq identities``. Expectations are normalized,
:math:`\langle A\rangle = \langle\psi|A|\psi\rangle/\langle\psi|\psi\rangle`.
"""
import collections
import logging
import numpy as np
from scipy.special import logsumexp, comb, factorial
from circsq.errors import DomainError, RangeError
from circsq.special.functions import log_theta3, MAX_EXP
from circsq.states.state_space import PhasePoint, coherent_state, _check_squeezing

logger = logging.getLogger('expectations')

MAX_MOMENT_ORDER = 8

TrigStats = collections.namedtuple('TrigStats', ['cos', 'sin', 'var_cos', 'var_sin', 'dJ'])

def _scaled(state):
	"""Coefficients divided by their largest modulus, and their squared norm."""
	c = state.coeffs / np.abs(state.coeffs).max()
	return c, np.sum(np.abs(c)**2)

def _log_weights(state):
	with np.errstate(divide='ignore'):
		return 2 * np.log(np.abs(state.coeffs))

def log_expect_exp_J(state, lam):
	r"""Natural log of :math:`\langle e^{-2\lambda\hat J}\rangle`, by log-sum-exp over the basis."""
	lw = _log_weights(state)
	return float(logsumexp(-2 * lam * state.j + lw) - logsumexp(lw))

def expect_exp_J(state, lam):
	r""":math:`\langle e^{-2\lambda\hat J}\rangle = \sum_j e^{-2\lambda j}|c_j|^2 / \sum_j|c_j|^2`.

	Raises
	------
	RangeError
		the moment overflows double precision (extreme :math:`\lambda N`).
	"""
	log_value = log_expect_exp_J(state, lam)
	if log_value > MAX_EXP:
		raise RangeError(f"<exp(-2*{lam}*J)> overflows (log = {log_value:.4g})")
	return float(np.exp(log_value))

def log_expect_exp_J_closed(l, s, lam):
	r"""Natural log of :func:`expect_exp_J_closed`."""
	_check_squeezing(s)
	t = np.pi**2 / s
	return (lam**2 - 2 * l * lam) / s + log_theta3((l - lam) / s, t) - log_theta3(l / s, t)

def expect_exp_J_closed(l, s, lam):
	r"""Closed form of :math:`\langle e^{-2\lambda\hat J}\rangle` in the squeezed state :math:`|l,\varphi\rangle_s`:

	.. math::

		e^{\frac{\lambda^2}{s}-\frac{2l\lambda}{s}}\,
		\frac{\theta_3(\frac{l-\lambda}{s}|\frac{{\rm i}\pi}{s})}{\theta_3(\frac{l}{s}|\frac{{\rm i}\pi}{s})}

	The theta functions are evaluated as logs. At :math:`\lambda=\pm s` the theta
	ratio is exactly 1, giving :math:`e^{s\mp2l}`.
	"""
	log_value = log_expect_exp_J_closed(l, s, lam)
	if log_value > MAX_EXP:
		raise RangeError(f"closed-form <exp(-2*{lam}*J)> overflows for l={l}, s={s}")
	return float(np.exp(log_value))

def expect_U_power(state, n):
	r""":math:`\langle U^n\rangle = \sum_j \bar c_{j+n}c_j / \sum_j |c_j|^2` for any integer n."""
	n = int(n)
	c, nrm = _scaled(state)
	if abs(n) >= len(c):
		return 0j
	if n == 0:
		return 1 + 0j
	if n > 0:
		return complex(np.vdot(c[n:], c[:-n]) / nrm)
	return complex(np.vdot(c[:n], c[-n:]) / nrm)

def expect_U_power_closed(l, phi, s, n):
	r"""Closed form of :math:`\langle U^n\rangle` in the squeezed state :math:`|l,\varphi\rangle_s`:

	.. math::

		e^{{\rm i}n\varphi - sn^2/4}\,
		\frac{\theta_3(\frac{l}{s}-\frac{n}{2}|\frac{{\rm i}\pi}{s})}{\theta_3(\frac{l}{s}|\frac{{\rm i}\pi}{s})}

	For even n the theta ratio is 1 (n = 2 gives :math:`e^{-s}e^{2{\rm i}\varphi}`).
	"""
	_check_squeezing(s)
	t = np.pi**2 / s
	log_mod = -s * n**2 / 4 + log_theta3(l / s - n / 2, t) - log_theta3(l / s, t)
	return complex(np.exp(log_mod + 1j * n * phi))

def ratio_to_reference_U(p, n_trunc=None):
	r""":math:`\langle U\rangle_\xi/\langle U\rangle_1` on coherent states, close to :math:`e^{{\rm i}\varphi}`.

	The reference is the coherent state at :math:`\xi=1` (l = 0, phi = 0).
	"""
	reference = expect_U_power(coherent_state(PhasePoint(0., 0.), n_trunc), 1)
	return expect_U_power(coherent_state(p, n_trunc), 1) / reference

def _check_order(order, top):
	if int(order) != order or not 1 <= order <= top:
		raise DomainError(f"order must be an integer in [1, {top}], got {order}")
	return int(order)

def moments_J(state, order):
	r"""Raw moments :math:`\langle\hat J^k\rangle`, k = 1..order (order <= 8)."""
	order = _check_order(order, MAX_MOMENT_ORDER)
	c, nrm = _scaled(state)
	p = np.abs(c)**2 / nrm
	j = state.j
	return np.array([np.sum(p * j**k) for k in range(1, order + 1)])

def _central_moments(state, order):
	c, nrm = _scaled(state)
	p = np.abs(c)**2 / nrm
	mean = np.sum(p * state.j)
	d = state.j - mean
	return mean, np.array([0.] + [np.sum(p * d**k) for k in range(1, order + 1)])

def cumulants_J(state, order):
	r"""Cumulants :math:`\langle\!\langle\hat J^n\rangle\!\rangle`, n = 1..order (order <= 8).

	Orders >= 2 are shift invariant, so they are obtained from central moments
	:math:`\mu_n` by the recursion

	.. math::

		\kappa_n = \mu_n - \sum_{k=1}^{n-1}\binom{n-1}{k-1}\kappa_k\,\mu_{n-k}

	with the first cumulant taken as zero inside the recursion and replaced by
	the mean afterwards. The order 2..4 results agree with the textbook formulas
	in terms of raw moments.
	"""
	order = _check_order(order, MAX_MOMENT_ORDER)
	mean, mu = _central_moments(state, order)
	kappa = np.zeros(order + 1)
	for n in range(2, order + 1):
		kappa[n] = mu[n] - sum(comb(n - 1, k - 1, exact=True) * kappa[k] * mu[n - k] for k in range(2, n))
	kappa[1] = mean
	logger.debug(f"cumulants up to {order}: {kappa[1:]}")
	return kappa[1:]

def cumulant_series_coefficient(n):
	r"""Coefficient :math:`2^{n-1}/n!` of :math:`\kappa_n` (n even) in the expansion of
	:math:`\frac14\ln(\langle e^{-2\hat J}\rangle\langle e^{2\hat J}\rangle)`: 1, 1/3, 2/45, 1/315, ..."""
	return 2.**(n - 1) / factorial(n, exact=True)

def cumulant_uncertainty_terms(state, terms=3):
	"""The first `terms` (<= 4) nonzero terms of the cumulant series of the angular momentum uncertainty."""
	terms = _check_order(terms, MAX_MOMENT_ORDER // 2)
	kappa = cumulants_J(state, 2 * terms)
	return np.array([cumulant_series_coefficient(n) * kappa[n - 1] for n in range(2, 2 * terms + 1, 2)])

def cumulant_uncertainty_approx(state, terms=3):
	r"""Partial sum :math:`\langle\!\langle\hat J^2\rangle\!\rangle + \frac13\langle\!\langle\hat J^4\rangle\!\rangle
	+ \frac{2}{45}\langle\!\langle\hat J^6\rangle\!\rangle + \dots` with `terms` terms.

	terms = 1 is the variance; terms = 4 adds the eighth order cumulant.
	"""
	return float(np.sum(cumulant_uncertainty_terms(state, terms)))

def expect_trig(state):
	r"""Mean and variance of :math:`\cos\hat\varphi=(U+U^\dagger)/2`, :math:`\sin\hat\varphi=(U-U^\dagger)/2{\rm i}`, and :math:`\Delta\hat J`.

	Returns
	-------
	TrigStats
		named tuple (cos, sin, var_cos, var_sin, dJ).
	"""
	u1 = expect_U_power(state, 1)
	u2 = expect_U_power(state, 2)
	var_cos = (1 + u2.real) / 2 - u1.real**2
	var_sin = (1 - u2.real) / 2 - u1.imag**2
	mean, mu = _central_moments(state, 2)
	return TrigStats(u1.real, u1.imag, max(var_cos, 0.), max(var_sin, 0.), np.sqrt(max(mu[2], 0.)))

def schwarz_terms(state):
	r"""Both sides of :math:`\langle A^\dagger A+AA^\dagger\rangle\langle B^\dagger B+BB^\dagger\rangle \ge |\langle A^\dagger B-BA^\dagger\rangle|^2`
	for :math:`A=\hat J-\langle\hat J\rangle`, :math:`B=U-\langle U\rangle`.

	The operators act on the vector padded by one slot on each side, so the shifts
	lose nothing.

	Returns
	-------
	(float, float)
		left side, right side.
	"""
	c, nrm = _scaled(state)
	c = np.pad(c, 1)
	j = np.arange(-(len(c) // 2), len(c) // 2 + 1, dtype=float)
	mean_j = np.sum(j * np.abs(c)**2) / nrm
	u1 = expect_U_power(state, 1)
	up = np.zeros_like(c)
	down = np.zeros_like(c)
	up[1:] = c[:-1]
	down[:-1] = c[1:]
	a_psi = (j - mean_j) * c
	b_psi = up - u1 * c
	bdag_psi = down - np.conj(u1) * c
	left = 2 * np.vdot(a_psi, a_psi).real / nrm * (np.vdot(b_psi, b_psi).real + np.vdot(bdag_psi, bdag_psi).real) / nrm
	right = abs(np.vdot(a_psi, b_psi) - np.vdot(bdag_psi, a_psi)) ** 2 / nrm**2
	return float(left), float(right)

class MomentRequest:
	r"""Which expectations to evaluate on a state: :math:`\langle e^{-2\lambda\hat J}\rangle`,
	:math:`\langle U^n\rangle`, and moments/cumulants of :math:`\hat J` up to `order`."""
	def __init__(self, lam=1., n=2, order=4):
		self.lam = float(lam)
		self.n = int(n)
		self.order = _check_order(order, MAX_MOMENT_ORDER)

def evaluate_request(state, request):
	"""Evaluate a :class:`MomentRequest`; returns a dict keyed by quantity name."""
	return {
		'exp_J': expect_exp_J(state, request.lam),
		'U_power': expect_U_power(state, request.n),
		'moments': moments_J(state, request.order),
		'cumulants': cumulants_J(state, request.order),
	}
