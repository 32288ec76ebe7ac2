"""Numerical verification of the exact identities, the classical limits and the uncertainty inequalities.

Each check returns a list of :class:`circsq.types.CheckRow`, one per identity or
inequality, holding the worst residual (or smallest slack) over the grid.
"""
import itertools
import logging
import os
import numpy as np
from circsq.measures.expectations import (log_expect_exp_J, log_expect_exp_J_closed, expect_U_power,
	expect_U_power_closed, moments_J, ratio_to_reference_U, schwarz_terms)
from circsq.measures.uncertainty import (delta2_J, delta2_phi, delta2_J_generalized, legacy_product,
	e2_products, random_envelope_states)
from circsq.states.serialization import dump_state
from circsq.states.state_space import (PhasePoint, squeezed_state, coherent_state, circular_squeezed_state,
	auto_trunc, z_operator, circular_eigen_operator, resqueeze, inner_product, norm2, norm2_closed,
	overlap_closed)
from circsq.types import CheckRow

logger = logging.getLogger('experiments')

GRID_L = (-1., 0., 0.37, 1., 2.)
GRID_PHI = (0., 1.1, np.pi)
GRID_S = (0.5, 1., 1.5, 2.5)
CIRCULAR_L = (0, 1, 3)
CIRCULAR_S = (0.5, 1., 2.)
CIRCULAR_ALPHA = (0., 0.7)
RESQUEEZE_TOL = 1e-12
CLASSICAL_TOL = 2e-3
EXACT_TOL = 1e-12
CLASSICAL_POINTS = 201
SUM_TOL = 1e-9
INEQUALITY_TOL = 1e-10

class _Worst:
	"""Running maximum of residuals, keyed by identity name, in insertion order."""
	def __init__(self):
		self.worst = {}

	def add(self, name, residual):
		self.worst[name] = max(self.worst.get(name, 0.), float(residual))

	def rows(self, tol, tols=None):
		tols = tols or {}
		return [CheckRow(name, worst, tols.get(name, tol)) for name, worst in self.worst.items()]

def _grid_states():
	"""(point, s, state) over the verification grid, windows wide enough for the shifted moments."""
	for l, phi, s in itertools.product(GRID_L, GRID_PHI, GRID_S):
		p = PhasePoint(l, phi)
		yield p, s, squeezed_state(p, s, auto_trunc(abs(l) + s, s))

def verify_identities(config):
	"""Check the exact identities of coherent and squeezed states on the (l, phi, s) grid.

	Multiplicative identities are compared after taking logs. Closed-form theta
	evaluations of norms, overlaps and moments are compared with direct sums.

	Parameters
	----------
	config : circsq.types.RunConfig
		`tol` is the tolerance of every identity except the resqueeze one (1e-12).

	Returns
	-------
	list of circsq.types.CheckRow
	"""
	worst = _Worst()
	states = list(_grid_states())
	for p, s, state in states:
		l, phi = p.l, p.phi
		lp, lm = log_expect_exp_J(state, s), log_expect_exp_J(state, -s)
		u2 = expect_U_power(state, 2)
		if s == 1:
			worst.add('exp_moments_coherent', max(abs(lp - (1 - 2 * l)), abs(lm - (1 + 2 * l))))
			worst.add('U2_coherent', abs(u2 - np.exp(-1 + 2j * phi)))
			worst.add('measures_coherent', max(abs(delta2_J(state) - 0.5), abs(delta2_phi(state) - 0.5)))
		worst.add('exp_moments_squeezed', max(abs(lp - (s - 2 * l)), abs(lm - (s + 2 * l))))
		worst.add('U2_squeezed', abs(u2 - np.exp(-s + 2j * phi)))
		worst.add('moment_product', abs(lp + lm + 2 * np.log(abs(u2))))
		worst.add('measures_squeezed', max(abs(delta2_J_generalized(state, s) - s / 2), abs(delta2_phi(state) - s / 2)))
		worst.add('norm_closed', abs(np.log(norm2(state)) - norm2_closed(l, s, log=True)))
		for lam in (-s, -0.5 * s, 0.3, s):
			worst.add('exp_moment_closed', abs(log_expect_exp_J(state, lam) - log_expect_exp_J_closed(l, s, lam)))
		for n in (1, 2, 3):
			worst.add('U_power_closed', abs(expect_U_power(state, n) - expect_U_power_closed(l, phi, s, n)))
		z = z_operator(state, s)
		worst.add('Z_eigenvector', np.max(np.abs(z.coeffs - p.xi * state.coeffs)) / np.max(np.abs(state.coeffs)))
	for (p, s, a), (q, s2, b) in itertools.combinations(states, 2):
		if s != s2:
			continue
		scale = np.sqrt(norm2(a) * norm2(b))
		worst.add('overlap_closed', abs(inner_product(a, b) - overlap_closed(p, q, s)) / scale)
	for l, phi, s in itertools.product(GRID_L, GRID_PHI, GRID_S):
		p = PhasePoint(l, phi)
		n_trunc = auto_trunc(l, min(s, 1.))
		target = squeezed_state(p, s, n_trunc)
		moved = resqueeze(squeezed_state(p, 1., n_trunc), s - 1.)
		worst.add('resqueeze', np.max(np.abs(moved.coeffs - target.coeffs)) / np.max(np.abs(target.coeffs)))
	for alpha, l, s in itertools.product(CIRCULAR_ALPHA, CIRCULAR_L, CIRCULAR_S):
		state = circular_squeezed_state(alpha, l, s)
		image = circular_eigen_operator(state, s, alpha)
		worst.add('circular_eigenvector', np.max(np.abs(image.coeffs - l * state.coeffs)))
	rows = worst.rows(config.tol, {'resqueeze': RESQUEEZE_TOL})
	logger.info(f"identities: {sum(row.passed for row in rows)}/{len(rows)} pass")
	return rows

def verify_classical_limits(config):
	r"""Compare :math:`\langle\hat J\rangle` with l and :math:`|\langle U\rangle_\xi/\langle U\rangle_1|` with 1 on coherent states.

	The grid is 201 points in l over [0, 2] at phase `config.phi`. Both deviations
	stay below 2e-3; at integer and half-integer l the mean is exact.

	Returns
	-------
	list of circsq.types.CheckRow
		`mean_J_relative` is reported with an infinite tolerance (not asserted).
	"""
	worst = _Worst()
	for l in np.linspace(0., 2., CLASSICAL_POINTS):
		p = PhasePoint(l, config.phi)
		mean = moments_J(coherent_state(p, config.n_trunc), 1)[0]
		ratio = ratio_to_reference_U(p, config.n_trunc)
		worst.add('mean_J', abs(mean - l))
		if l > 0:
			worst.add('mean_J_relative', abs(mean - l) / l)
		worst.add('U_ratio_modulus', abs(abs(ratio) - 1))
		worst.add('U_ratio_phase', abs(np.angle(ratio * np.exp(-1j * p.phi))))
	for l in np.arange(0., 2.01, 0.5):
		mean = moments_J(coherent_state(PhasePoint(l, config.phi), config.n_trunc), 1)[0]
		worst.add('mean_J_exact', abs(mean - l))
	rows = worst.rows(CLASSICAL_TOL, {'mean_J_relative': np.inf, 'mean_J_exact': EXACT_TOL})
	logger.info(f"classical limits: {sum(row.passed for row in rows)}/{len(rows)} pass")
	return rows

def _inequalities(state):
	"""Slack (left side minus right side) of every inequality on one state."""
	slack = {}
	d2phi = delta2_phi(state)
	if np.isfinite(d2phi):
		slack['sum_relation'] = delta2_J(state) + d2phi - 1.
	slack['exp_moment_product'] = log_expect_exp_J(state, 1.) + log_expect_exp_J(state, -1.)
	for n in (1, 2):
		slack[f"U{n}_modulus"] = 1. - abs(expect_U_power(state, n))
	for name, (left, right) in zip(('J_cos', 'J_sin', 'sin_cos'), e2_products(state)):
		slack[f"e2_{name}"] = left - right
	left, right = schwarz_terms(state)
	slack['schwarz'] = left - right
	return slack

def _dump_counterexample(outdir, name, trial, state):
	os.makedirs(outdir, exist_ok=True)
	fname = os.path.join(outdir, f"counterexample_{name}_{trial}.csv")
	dump_state(state, fname)
	return fname

def sweep_inequalities(config):
	"""Check the uncertainty inequalities on seeded random states and on coherent states.

	Random states are drawn from the Gaussian-envelope sampler, trial k from the
	k-th child of `config.seed`. The sum relation is required to hold to 1e-9 and
	the theorems (e(2) products, Schwarz, exponential moment product, unitarity) to
	1e-10. Coherent states over 201 values of l in [0, 2] check the legacy window
	1/2 < dJ dphi < 1 and the sum relation with zero slack.

	The sweep halts at the first violation; the offending state is written to
	``counterexample_<name>_<trial>.csv`` in `config.out` (default: the working directory).

	Returns
	-------
	rows : list of circsq.types.CheckRow
		`kind` = 'slack', smallest slack per inequality.
	counterexamples : list of (str, int or str, str)
		inequality name, trial label (random trial index or ``coherent<k>``) and the file the state was written to.
	"""
	tols = {'sum_relation': SUM_TOL, 'sum_coherent': SUM_TOL, 'legacy_window': 0.}
	slack = {}
	counterexamples = []
	outdir = config.out or '.'

	def record(name, value, trial, state):
		slack[name] = min(slack.get(name, np.inf), value)
		if value < -tols.get(name, INEQUALITY_TOL):
			fname = _dump_counterexample(outdir, name, trial, state)
			logger.warning(f"counterexample to {name} at trial {trial}: slack {value:.3e}, state written to {fname}")
			counterexamples.append((name, trial, fname))

	for trial, state in enumerate(random_envelope_states(config.seed, config.trials)):
		for name, value in _inequalities(state).items():
			record(name, value, trial, state)
		if counterexamples:
			break
		if trial % 1000 == 0:
			logger.debug(f"sweep: trial {trial}, smallest sum slack so far {slack.get('sum_relation', np.inf):.3e}")
	if not counterexamples:
		for k, l in enumerate(np.linspace(0., 2., CLASSICAL_POINTS)):
			state = coherent_state(PhasePoint(l, config.phi))
			product = legacy_product(state)
			record('legacy_window', min(product - 0.5, 1. - product), f"coherent{k}", state)
			record('sum_coherent', delta2_J(state) + delta2_phi(state) - 1., f"coherent{k}", state)
			if counterexamples:
				break
	rows = [CheckRow(name, value, tols.get(name, INEQUALITY_TOL), kind='slack') for name, value in slack.items()]
	logger.info(f"sweep: {config.trials} random states, {len(counterexamples)} counterexamples")
	return rows, counterexamples
