"""Command line interface: ``circsq <command> [flags]``.

Commands
--------
scan        squeeze scan at one reference squeezing, CSV to --out
identities  exact identities of coherent and squeezed states
classical   classical limits of the coherent states
sweep       uncertainty inequalities on seeded random states
figures     plot data of both squeeze figures, written to the --out directory
state       dump a constructed state as CSV and print its uncertainty report

Exit status is 0 when every check passes, 1 on a failed tolerance or a numerical
error, 2 when a sweep finds a counterexample and 64 on a usage error.
"""
import argparse
import logging
import sys
import numpy as np
from circsq.errors import CircsqError, UsageError
from circsq.experiments.checks import verify_identities, verify_classical_limits, sweep_inequalities
from circsq.experiments.scans import scan_squeeze, write_scan, emit_figure_data
from circsq.measures.expectations import MomentRequest, evaluate_request
from circsq.measures.uncertainty import full_report
from circsq.states.serialization import dump_state
from circsq.states.state_space import (PhasePoint, squeezed_state, circular_squeezed_state,
	momentum_eigenstate)
from circsq.types import RunConfig
from circsq.utils import add_logging_arguments, setup_logging

logger = logging.getLogger('experiments')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_COUNTEREXAMPLE = 2
EXIT_USAGE = 64

COMMANDS = ('scan', 'identities', 'classical', 'sweep', 'figures', 'state')
KINDS = ('squeezed', 'coherent', 'circular', 'momentum')

class _Parser(argparse.ArgumentParser):
	"""ArgumentParser exiting with the usage status instead of 2."""
	def error(self, message):
		self.print_usage(sys.stderr)
		self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")

def build_parser():
	parser = _Parser(prog='circsq', description='Coherent and squeezed states on the circle.')
	parser.add_argument('command', choices=COMMANDS)
	parser.add_argument('--kind', choices=KINDS, default='squeezed',
						help='state built by the state command (circular uses --phi as the peak angle)')
	parser.add_argument('--l', type=float, default=1., help='phase space coordinate l (momentum)')
	parser.add_argument('--phi', type=float, default=0., help='phase space angle')
	parser.add_argument('--s', type=float, default=1., help='squeezing of the constructed state')
	parser.add_argument('--s0', type=float, default=1., help='reference squeezing of the measures')
	parser.add_argument('--s-min', type=float, default=0.1)
	parser.add_argument('--s-max', type=float, default=4.)
	parser.add_argument('--steps', type=int, default=400)
	parser.add_argument('--n-trunc', type=int, default=None, help='window half-width N (default: sized automatically)')
	parser.add_argument('--tol', type=float, default=1e-9, help='tolerance of the identities')
	parser.add_argument('--seed', type=int, default=0)
	parser.add_argument('--trials', type=int, default=10000)
	parser.add_argument('--out', type=str, default=None, help='output file (scan, state) or directory (figures, sweep)')
	add_logging_arguments(parser)
	return parser

def config_from_args(args):
	return RunConfig(command=args.command, kind=args.kind, l=args.l, phi=args.phi, s=args.s, s0=args.s0,
					s_min=args.s_min, s_max=args.s_max, steps=args.steps, n_trunc=args.n_trunc,
					tol=args.tol, seed=args.seed, trials=args.trials, out=args.out)

def _print_rows(rows):
	for row in rows:
		print(row)
	return EXIT_OK if all(row.passed for row in rows) else EXIT_FAILED

def run_scan(config):
	rows, minimum = scan_squeeze(config)
	if config.out is not None:
		write_scan(config.out, config, rows)
	else:
		write_scan(sys.stdout, config, rows)
	print(f"# s0={config.s0} s_min={minimum.s_min:.9f} f_min={minimum.f_min:.12f} "
		f"direct/closed max residual={minimum.closed_residual:.2e}", file=sys.stderr if config.out is None else sys.stdout)
	return EXIT_OK if minimum.closed_residual <= config.tol else EXIT_FAILED

def run_sweep(config):
	rows, counterexamples = sweep_inequalities(config)
	status = _print_rows(rows)
	for name, trial, fname in counterexamples:
		print(f"counterexample to {name} at trial {trial}: {fname}")
	if counterexamples:
		return EXIT_COUNTEREXAMPLE
	return status

def run_figures(config):
	for fname in emit_figure_data(config, config.out or '.'):
		print(fname)
	return EXIT_OK

def build_state(config):
	"""The state described by `config.kind`, `l`, `phi`, `s` and `n_trunc`."""
	if config.kind == 'squeezed':
		return squeezed_state(PhasePoint(config.l, config.phi), config.s, config.n_trunc)
	if config.kind == 'coherent':
		return squeezed_state(PhasePoint(config.l, config.phi), 1., config.n_trunc)
	if config.kind == 'circular':
		return circular_squeezed_state(config.phi, config.l, config.s, config.n_trunc)
	j0 = config.l
	return momentum_eigenstate(j0, config.n_trunc or int(abs(j0)) + 8)

def run_state(config):
	state = build_state(config)
	if config.out is None:
		dump_state(state, sys.stdout)
		return EXIT_OK
	dump_state(state, config.out)
	report = full_report(state, config.s0)
	values = evaluate_request(state, MomentRequest(lam=config.s0, n=2, order=4))
	print(f"{config.kind} state l={config.l} phi={config.phi} s={config.s}, N={state.n_trunc}, written to {config.out}")
	print(report)
	with np.printoptions(precision=12):
		for name, value in values.items():
			print(f"{name:>10s}: {value}")
	return EXIT_OK

RUNNERS = {
	'scan': run_scan,
	'identities': lambda config: _print_rows(verify_identities(config)),
	'classical': lambda config: _print_rows(verify_classical_limits(config)),
	'sweep': run_sweep,
	'figures': run_figures,
	'state': run_state,
}

def main(argv=None):
	"""Run one command; returns the exit status."""
	args = build_parser().parse_args(argv)
	try:
		setup_logging(args.loglevel, args.logger)
		config = config_from_args(args)
		logger.info(f"running {config.echo()}")
		return RUNNERS[config.command](config)
	except UsageError as e:
		print(f"circsq: usage error: {e}", file=sys.stderr)
		return EXIT_USAGE
	except (CircsqError, ArithmeticError) as e:
		logger.error(f"{type(e).__name__}: {e}")
		return EXIT_FAILED
	except OSError as e:
		logger.error(f"I/O error: {e}")
		return EXIT_FAILED

if __name__ == '__main__':
	sys.exit(main())
