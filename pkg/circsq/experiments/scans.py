r"""Squeeze scans: the summed uncertainty of the squeezed family measured at a fixed reference squeezing.

For squeezed states :math:`|\xi\rangle_s` measured at :math:`s_0` the ordinate is

.. math::

	f(s) = \widetilde\Delta^2_{s_0}(\hat J) + \Delta^2(\hat\varphi)
		= \frac{s_0^2}{2s} + \frac{s}{2} + \frac14\ln\frac{\theta_3(\frac{l-s_0}{s})\theta_3(\frac{l+s_0}{s})}{\theta_3(\frac ls)^2},

with the theta functions at nome :math:`e^{-\pi^2/s}`. The theta correction
vanishes at :math:`s=s_0`, which is where f takes its minimum value :math:`s_0`.
"""
import logging
import os
import numpy as np
from scipy.optimize import minimize_scalar
from circsq.measures.expectations import log_expect_exp_J_closed
from circsq.measures.uncertainty import delta2_J_generalized, delta2_phi
from circsq.states.state_space import PhasePoint, squeezed_state, auto_trunc
from circsq.types import ScanRow, MinimumRecord

logger = logging.getLogger('experiments')

FIG1_S0 = (0.5, 1., 1.5)
FIG2_S0 = np.round(np.arange(0.2, 2. + 1e-9, 0.05), 10)
GOLDEN_XTOL = 1e-9

def ordinate_direct(l, phi, s, s0, n_trunc=None):
	r"""Scan row at squeezing `s`, measured on the coefficient vector by direct sums.

	The window defaults to one wide enough for the moments :math:`\langle e^{\pm2s_0\hat J}\rangle`,
	whose weights peak at :math:`(l\pm s_0)/s` rather than at :math:`l/s`.
	"""
	if n_trunc is None:
		n_trunc = auto_trunc(abs(l) + s0, s)
	state = squeezed_state(PhasePoint(l, phi), s, n_trunc)
	d2J = delta2_J_generalized(state, s0)
	d2phi = delta2_phi(state)
	return ScanRow(s=s, d2J_gen=d2J, d2phi=d2phi, sum=d2J + d2phi)

def ordinate_closed(l, s, s0):
	"""The same ordinate from the theta closed forms, as a continuous function of `s`."""
	d2J = 0.25 * (log_expect_exp_J_closed(l, s, s0) + log_expect_exp_J_closed(l, s, -s0))
	return d2J + s / 2

def theta_correction(l, s, s0):
	r"""f(s) minus its Gaussian part :math:`s_0^2/2s + s/2`."""
	return ordinate_closed(l, s, s0) - s0**2 / (2 * s) - s / 2

def _refine(l, s0, grid, values):
	i = int(np.argmin(values))
	if i == 0 or i == len(grid) - 1:
		logger.warning(f"scan minimum at grid boundary s={grid[i]} (s0={s0}); not refined")
		return grid[i], ordinate_closed(l, grid[i], s0)
	try:
		res = minimize_scalar(lambda s: ordinate_closed(l, s, s0), bracket=(grid[i - 1], grid[i], grid[i + 1]),
							method='golden', tol=GOLDEN_XTOL)
	except ValueError as e:
		logger.warning(f"golden refinement failed around s={grid[i]} (s0={s0}): {e}")
		return grid[i], ordinate_closed(l, grid[i], s0)
	logger.debug(f"golden refinement s0={s0}: s_min={res.x} after {res.nfev} evaluations")
	return float(res.x), float(res.fun)

def scan_squeeze(config):
	"""Scan the squeezed family over `config.steps` values of s in [s_min, s_max].

	Parameters
	----------
	config : circsq.types.RunConfig
		uses l, phi, s0, s_min, s_max, steps and n_trunc.

	Returns
	-------
	rows : list of circsq.types.ScanRow
		direct-sum ordinates, ascending in s.
	minimum : circsq.types.MinimumRecord
		the argmin of the grid refined by golden-section search on the closed form.
		Its extra field `closed_residual` is the largest disagreement between the
		direct and closed-form ordinates over the grid.
	"""
	grid = np.linspace(config.s_min, config.s_max, config.steps)
	rows = [ordinate_direct(config.l, config.phi, s, config.s0, config.n_trunc) for s in grid]
	sums = np.array([row.sum for row in rows])
	closed = np.array([ordinate_closed(config.l, s, config.s0) for s in grid])
	residual = float(np.max(np.abs(sums - closed)))
	s_min, f_min = _refine(config.l, config.s0, grid, sums)
	logger.info(f"scan s0={config.s0}: s_min={s_min:.9f} f_min={f_min:.12f} closed/direct residual={residual:.2e}")
	return rows, MinimumRecord(s0=config.s0, s_min=s_min, f_min=f_min, closed_residual=residual)

def _write_table(fname, header, table, columns):
	np.savetxt(fname, np.atleast_2d(table), fmt='%.17g', delimiter=',',
			header=header + '\n' + ','.join(columns), comments='# ')

def write_scan(fname, config, rows):
	_write_table(fname, f"circsq scan {config.echo()}", [row.values_row() for row in rows], ScanRow.columns)

def emit_figure_data(config, outdir='.'):
	"""Write the plot data of both squeeze figures to `outdir`.

	``fig1_s0=<v>.csv`` holds one scan per reference squeezing in (0.5, 1, 1.5),
	``fig2.csv`` the refined minimum for s0 from 0.2 to 2 in steps of 0.05.

	Returns
	-------
	list of str
		paths written.
	"""
	os.makedirs(outdir, exist_ok=True)
	written = []
	for s0 in FIG1_S0:
		run = config.replace(s0=float(s0))
		rows, _ = scan_squeeze(run)
		fname = os.path.join(outdir, f"fig1_s0={s0:g}.csv")
		write_scan(fname, run, rows)
		written.append(fname)
	minima = []
	for s0 in FIG2_S0:
		_, minimum = scan_squeeze(config.replace(s0=float(s0)))
		minima.append(minimum.values_row())
	fname = os.path.join(outdir, 'fig2.csv')
	_write_table(fname, f"circsq minima {config.echo()}", minima, MinimumRecord.columns)
	written.append(fname)
	logger.info(f"wrote {len(written)} files to {outdir}")
	return written
