"""Module for helper functions."""
import logging
import numpy as np
from circsq.errors import UsageError

LOGGER_NAMES = ['theta', 'statespace', 'expectations', 'uncertainty', 'experiments'] # add to this list as loggers are added to the code

def modrange(x, low, high):
	"""mod x such that it is between [low, high).

		>>> modrange(2.5, 1, 2)
		1.5
		>>> modrange(3., 1, 2)
		1.0
	"""
	spread = high - low
	diff = x - low
	mod = diff % spread
	return low + mod

def mod2pi(x):
	r"""mod x such that it is between :math:`[0, 2\pi)`.

		>>> mod2pi(2*np.pi)
		0.0
		>>> mod2pi(-np.pi/2)
		4.71238898038469
	"""
	return modrange(x, 0., 2*np.pi)

def fmt_float(x):
	"""Format a real number with 17 significant digits (``inf`` written literally)."""
	return format(float(x), '.17g')

def add_logging_arguments(parser):
	"""Add the `--loglevel` and `--logger` flags to an argparse parser."""
	parser.add_argument('--loglevel', type=str, help='logging level', default='WARNING')
	parser.add_argument('--logger', type=str, nargs='*', default=None,
						help='which logger(s) to use ({}) default=all'.format(', '.join(LOGGER_NAMES)))

def setup_logging(loglevel='WARNING', loggers=None):
	"""Set the logging level and optionally restrict output to a few loggers.

	Command line calls pass `--loglevel=<LEVEL>` and `--logger=<LOGGER> ...`, e.g.
	:code:`circsq sweep --loglevel=INFO --logger experiments` outputs info logs from
	the sweep driver only (as opposed to only warnings from everywhere by default).

	Notes
	-----
	See	https://docs.python.org/3/howto/logging.html#logging-to-a-file (a bit lower down) for more
	details about logging.
	"""
	numeric_level = getattr(logging, loglevel.upper(), None)
	if not isinstance(numeric_level, int):
		raise UsageError('Invalid log level: %s' % loglevel)
	logging.basicConfig(level=numeric_level)

	if loggers is not None:
		for logger_name in LOGGER_NAMES:
			logging.getLogger(logger_name).disabled = logger_name not in loggers
