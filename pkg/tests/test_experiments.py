import contextlib
import io
import os
import tempfile
import unittest
import numpy as np
from circsq.errors import UsageError
from circsq.experiments.checks import verify_identities, verify_classical_limits, sweep_inequalities
from circsq.experiments.cli import main, build_state, EXIT_OK, EXIT_FAILED, EXIT_USAGE
from circsq.experiments.scans import (scan_squeeze, ordinate_direct, ordinate_closed, theta_correction,
	emit_figure_data, FIG1_S0, FIG2_S0)
from circsq.states.serialization import load_state
from circsq.types import RunConfig, CheckRow, UncertaintyReport

def make_config(**changes):
	fields = dict(command='scan', kind='squeezed', l=1., phi=0., s=1., s0=1., s_min=0.1, s_max=4., steps=400,
				n_trunc=None, tol=1e-9, seed=0, trials=200, out=None)
	fields.update(changes)
	return RunConfig(**fields)

def run_quiet(argv):
	"""main(argv) with stdout and stderr captured; returns (status, stdout)."""
	out, err = io.StringIO(), io.StringIO()
	with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
		status = main(argv)
	return status, out.getvalue()

class TestRecords(unittest.TestCase):

	def test_attribute_access(self):
		"""Record fields read as attributes; missing ones raise AttributeError."""
		report = UncertaintyReport(d2J=0.5, d2phi=0.5)
		self.assertEqual(report.d2J, 0.5)
		self.assertIsNone(report.sum)
		with self.assertRaises(AttributeError):
			report.nothing

	def test_check_row(self):
		"""Residual rows pass below tol, slack rows above -tol."""
		self.assertTrue(CheckRow('a', 1e-10, 1e-9).passed)
		self.assertFalse(CheckRow('a', 1e-8, 1e-9).passed)
		self.assertTrue(CheckRow('b', -1e-10, 1e-9, kind='slack').passed)
		self.assertFalse(CheckRow('b', -1e-8, 1e-9, kind='slack').passed)
		self.assertIn('FAIL', str(CheckRow('a', 1., 0.1)))

	def test_config_validation(self):
		"""Every invalid setting is a UsageError."""
		for bad in (dict(s_min=0.), dict(s_max=0.05), dict(steps=1), dict(tol=0.), dict(trials=0),
					dict(s=-1.), dict(s0=0.), dict(n_trunc=0)):
			with self.assertRaises(UsageError):
				make_config(**bad)

	def test_config_replace(self):
		"""replace returns a new validated config."""
		config = make_config()
		other = config.replace(s0=1.5)
		self.assertEqual(other.s0, 1.5)
		self.assertEqual(config.s0, 1.)
		with self.assertRaises(UsageError):
			config.replace(steps=0)

class TestScans(unittest.TestCase):

	def test_minimum_at_reference(self):
		"""The summed uncertainty of the squeezed family is smallest at s = s0, with value s0."""
		for s0 in FIG1_S0:
			rows, minimum = scan_squeeze(make_config(s0=s0))
			self.assertEqual(len(rows), 400)
			self.assertAlmostEqual(minimum.s_min, s0, delta=1e-4)
			self.assertAlmostEqual(minimum.f_min, s0, delta=1e-6)
			self.assertLessEqual(minimum.closed_residual, 1e-9)
			self.assertGreaterEqual(min(row.sum for row in rows), s0 - 1e-9)

	def test_direct_matches_closed(self):
		"""Direct-sum ordinate against the theta closed form at a few points."""
		for l in (0., 0.37, 1.):
			for s in (0.3, 1.2, 3.):
				row = ordinate_direct(l, 0.5, s, 1.5)
				self.assertAlmostEqual(row.sum, ordinate_closed(l, s, 1.5), places=9)
				self.assertAlmostEqual(row.d2phi, s / 2, places=10)

	def test_theta_correction(self):
		"""f = s0^2/2s + s/2 + correction, and the correction vanishes at s = s0."""
		for l in (0., 0.37, 1.):
			for s0 in (0.5, 1., 1.5):
				self.assertAlmostEqual(theta_correction(l, s0, s0), 0., places=12)
				s = 2.3
				self.assertAlmostEqual(ordinate_closed(l, s, s0), s0**2 / (2 * s) + s / 2 + theta_correction(l, s, s0),
									places=14)

	def test_gaussian_part_dominates(self):
		"""For small s the theta correction is negligible."""
		self.assertLess(abs(theta_correction(0.3, 0.2, 1.)), 1e-12)

	def test_figure_data(self):
		"""Both figures are written: one scan per s0 and the table of minima."""
		with tempfile.TemporaryDirectory() as outdir:
			written = emit_figure_data(make_config(steps=40), outdir)
			self.assertEqual(len(written), len(FIG1_S0) + 1)
			for fname in written:
				self.assertTrue(os.path.exists(fname))
			scan = np.loadtxt(os.path.join(outdir, 'fig1_s0=1.5.csv'), delimiter=',')
			self.assertEqual(scan.shape, (40, 4))
			minima = np.loadtxt(os.path.join(outdir, 'fig2.csv'), delimiter=',')
			self.assertEqual(minima.shape, (len(FIG2_S0), 3))
			np.testing.assert_allclose(minima[:, 1], FIG2_S0, atol=1e-4)
			np.testing.assert_allclose(minima[:, 2], FIG2_S0, atol=1e-6)

class TestChecks(unittest.TestCase):

	def test_identities(self):
		"""Every identity holds on the verification grid."""
		rows = verify_identities(make_config(command='identities'))
		names = [row.name for row in rows]
		for name in ('exp_moments_coherent', 'U2_squeezed', 'measures_squeezed', 'overlap_closed', 'resqueeze',
					'circular_eigenvector'):
			self.assertIn(name, names)
		for row in rows:
			self.assertTrue(row.passed, str(row))

	def test_classical_limits(self):
		"""<J> and the <U> ratio follow their classical values on coherent states."""
		rows = verify_classical_limits(make_config(command='classical', phi=0.8))
		for row in rows:
			self.assertTrue(row.passed, str(row))
		exact = [row for row in rows if row.name == 'mean_J_exact'][0]
		self.assertLessEqual(exact.worst, 1e-12)

	def test_sweep(self):
		"""No counterexample among a few hundred random states."""
		with tempfile.TemporaryDirectory() as outdir:
			rows, counterexamples = sweep_inequalities(make_config(command='sweep', out=outdir))
			self.assertEqual(counterexamples, [])
			self.assertEqual(os.listdir(outdir), [])
		names = {row.name for row in rows}
		self.assertTrue({'sum_relation', 'schwarz', 'e2_J_sin', 'legacy_window', 'sum_coherent'} <= names)
		for row in rows:
			self.assertEqual(row.kind, 'slack')
			self.assertTrue(row.passed, str(row))

	def test_sweep_deterministic(self):
		"""Same seed, same smallest slacks."""
		first, _ = sweep_inequalities(make_config(command='sweep', trials=50, seed=7))
		again, _ = sweep_inequalities(make_config(command='sweep', trials=50, seed=7))
		self.assertEqual([row.worst for row in first], [row.worst for row in again])

class TestCli(unittest.TestCase):

	def setUp(self):
		self.dir = tempfile.TemporaryDirectory()

	def tearDown(self):
		self.dir.cleanup()

	def test_bad_command(self):
		"""Unknown commands and flags exit with the usage status."""
		with contextlib.redirect_stderr(io.StringIO()):
			with self.assertRaises(SystemExit) as cm:
				main(['nonsense'])
		self.assertEqual(cm.exception.code, EXIT_USAGE)
		with contextlib.redirect_stderr(io.StringIO()):
			with self.assertRaises(SystemExit) as cm:
				main(['scan', '--bogus'])
		self.assertEqual(cm.exception.code, EXIT_USAGE)

	def test_bad_range(self):
		"""s_max <= s_min and a bad log level are usage errors."""
		self.assertEqual(run_quiet(['scan', '--s-min', '2', '--s-max', '1'])[0], EXIT_USAGE)
		self.assertEqual(run_quiet(['scan', '--steps', '1'])[0], EXIT_USAGE)
		self.assertEqual(run_quiet(['identities', '--loglevel', 'LOUD'])[0], EXIT_USAGE)

	def test_identities(self):
		status, out = run_quiet(['identities'])
		self.assertEqual(status, EXIT_OK)
		self.assertNotIn('FAIL', out)

	def test_scan_to_file(self):
		"""A scan written twice with the same settings is byte identical."""
		paths = [os.path.join(self.dir.name, name) for name in ('a.csv', 'b.csv')]
		for path in paths:
			status, _ = run_quiet(['scan', '--s0', '0.5', '--steps', '60', '--out', path])
			self.assertEqual(status, EXIT_OK)
		with open(paths[0], 'rb') as a, open(paths[1], 'rb') as b:
			self.assertEqual(a.read(), b.read())
		table = np.loadtxt(paths[0], delimiter=',')
		self.assertEqual(table.shape, (60, 4))

	def test_scan_tolerance(self):
		"""A tolerance below the direct/closed agreement fails the scan."""
		status, _ = run_quiet(['scan', '--steps', '20', '--tol', '1e-30', '--out', os.path.join(self.dir.name, 'c.csv')])
		self.assertEqual(status, EXIT_FAILED)

	def test_state(self):
		"""The state command writes a loadable file and reports on it."""
		path = os.path.join(self.dir.name, 'state.csv')
		status, out = run_quiet(['state', '--kind', 'coherent', '--l', '0.5', '--phi', '1', '--out', path])
		self.assertEqual(status, EXIT_OK)
		self.assertIn('d2phi', out)
		state = load_state(path)
		config = make_config(command='state', kind='coherent', l=0.5, phi=1.)
		np.testing.assert_allclose(state.coeffs, build_state(config).coeffs, rtol=1e-15)

	def test_state_kinds(self):
		"""Every kind of state can be built; a non-integer momentum is an error."""
		for kind in ('squeezed', 'coherent', 'circular', 'momentum'):
			state = build_state(make_config(command='state', kind=kind, l=1., s=0.7))
			self.assertGreater(state.n_trunc, 0)
		self.assertEqual(run_quiet(['state', '--kind', 'momentum', '--l', '0.5'])[0], EXIT_FAILED)

	def test_sweep(self):
		status, out = run_quiet(['sweep', '--trials', '100', '--out', self.dir.name])
		self.assertEqual(status, EXIT_OK)
		self.assertNotIn('counterexample', out)

if __name__ == '__main__':
	unittest.main()
