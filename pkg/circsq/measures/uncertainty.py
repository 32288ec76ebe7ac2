r"""Uncertainty measures and uncertainty relations for a particle on a circle.

Four measures are implemented:

- :func:`delta2_J`, :math:`\frac14\ln(\langle e^{-2\hat J}\rangle\langle e^{2\hat J}\rangle)`,
- :func:`delta2_phi`, :math:`\frac14\ln(1/|\langle U^2\rangle|^2)`,
- :func:`delta2_J_generalized`, the angular momentum measure at reference squeezing
  :math:`s_0` (the angle measure does not depend on :math:`s_0`),
- :func:`delta_phi_legacy`, :math:`\sqrt{(1-|\langle U\rangle|^2)/|\langle U\rangle|^2}`,

together with the e(2) products :math:`\Delta\hat J\Delta\cos\hat\varphi`,
:math:`\Delta\hat J\Delta\sin\hat\varphi`, :math:`\Delta\sin\hat\varphi\Delta\cos\hat\varphi`.
Coherent states give 1/2 for both logarithmic measures; squeezed states
:math:`|\xi\rangle_s` measured at :math:`s_0=s` give :math:`s/2`.
"""
import logging
import numpy as np
from circsq.errors import ConsistencyError
from circsq.measures.expectations import log_expect_exp_J, expect_U_power, expect_trig
from circsq.states.state_space import CircleState, _check_squeezing
from circsq.types import UncertaintyReport

logger = logging.getLogger('uncertainty')

NEGATIVE_ZERO = 1e-12
ENVELOPE_TRUNC = 40
ENVELOPE_SIGMA = (0.5, 3.)

def _clamp(value, name):
	"""Report values in [-1e-12, 0) as 0; anything more negative is a bug."""
	if value < -NEGATIVE_ZERO:
		raise ConsistencyError(f"{name} = {value:.3e} is negative")
	return max(float(value), 0.)

def delta2_J_generalized(state, s0):
	r""":math:`\widetilde\Delta^2_{s_0}(\hat J) = \frac14\ln(\langle e^{-2s_0\hat J}\rangle\langle e^{2s_0\hat J}\rangle)`."""
	_check_squeezing(s0, 's0')
	value = 0.25 * (log_expect_exp_J(state, s0) + log_expect_exp_J(state, -s0))
	return _clamp(value, f"delta2_J(s0={s0})")

def delta2_J(state):
	r"""Angular momentum uncertainty :math:`\frac14\ln(\langle e^{-2\hat J}\rangle\langle e^{2\hat J}\rangle)`.

	Zero on the eigenstates of :math:`\hat J`, 1/2 on every coherent state.
	"""
	return delta2_J_generalized(state, 1.)

def delta2_phi(state):
	r"""Angle uncertainty :math:`\frac14\ln(1/|\langle U^2\rangle|^2) = -\frac12\ln|\langle U^2\rangle|`.

	Infinite when :math:`\langle U^2\rangle=0`, e.g. on the eigenstates of :math:`\hat J`.
	"""
	u2 = abs(expect_U_power(state, 2))
	if u2 == 0:
		return np.inf
	return _clamp(-0.5 * np.log(u2), "delta2_phi")

def delta_phi_legacy(state):
	r"""Dispersion :math:`\sqrt{(1-|\langle U\rangle|^2)/|\langle U\rangle|^2}`, ``inf`` when :math:`\langle U\rangle=0`."""
	u = abs(expect_U_power(state, 1))**2
	if u == 0:
		return np.inf
	return float(np.sqrt(_clamp(1 - u, "1-|<U>|^2") / u))

def legacy_product(state):
	r""":math:`\Delta\hat J\,\Delta(\hat\varphi)` with the legacy angle dispersion."""
	return expect_trig(state).dJ * delta_phi_legacy(state)

def e2_products(state):
	r"""The three e(2) uncertainty relations as (left, right) pairs, :math:`\hbar=1`:

	.. math::

		\Delta\hat J\Delta\cos\hat\varphi &\ge \tfrac12|\langle\sin\hat\varphi\rangle| \\
		\Delta\hat J\Delta\sin\hat\varphi &\ge \tfrac12|\langle\cos\hat\varphi\rangle| \\
		\Delta\sin\hat\varphi\Delta\cos\hat\varphi &\ge 0
	"""
	trig = expect_trig(state)
	d_cos, d_sin = np.sqrt(trig.var_cos), np.sqrt(trig.var_sin)
	return ((trig.dJ * d_cos, 0.5 * abs(trig.sin)),
			(trig.dJ * d_sin, 0.5 * abs(trig.cos)),
			(d_sin * d_cos, 0.))

def full_report(state, s0=1.):
	"""Every measure of `state` in one :class:`circsq.types.UncertaintyReport`."""
	d2J_gen = delta2_J_generalized(state, s0)
	d2phi = delta2_phi(state)
	pairs = e2_products(state)
	report = UncertaintyReport(
		d2J=delta2_J(state) if s0 != 1 else d2J_gen,
		d2phi=d2phi,
		d2J_gen=d2J_gen,
		d_phi_legacy=delta_phi_legacy(state),
		sum=d2J_gen + d2phi,
		e2_products=tuple(left for left, _ in pairs),
		e2_bounds=tuple(right for _, right in pairs[:2]),
	)
	logger.debug(f"report at s0={s0}: sum={report.sum}")
	return report

def random_envelope_state(rng, n_trunc=ENVELOPE_TRUNC):
	r"""Random state :math:`c_j = g_j e^{-j^2/2\sigma^2}` with standard complex Gaussian :math:`g_j`
	and :math:`\sigma` uniform in [0.5, 3].

	The Gaussian envelope keeps :math:`\langle e^{\pm2\hat J}\rangle` free of truncation effects.
	"""
	sigma = rng.uniform(*ENVELOPE_SIGMA)
	size = 2 * n_trunc + 1
	g = (rng.standard_normal(size) + 1j * rng.standard_normal(size)) / np.sqrt(2)
	j = np.arange(-n_trunc, n_trunc + 1)
	return CircleState(g * np.exp(-j**2 / (2 * sigma**2)))

def random_envelope_states(seed, trials, n_trunc=ENVELOPE_TRUNC):
	"""Yield `trials` random envelope states, trial k drawn from its own child seed.

	Trial k is the same state whatever order (or process) the trials run in.
	"""
	for child in np.random.SeedSequence(seed).spawn(trials):
		yield random_envelope_state(np.random.default_rng(child), n_trunc)
