"""Dump and load states as CSV: one row ``j,re,im`` per coefficient.

The first line is a comment recording the format version, N and the basis::

	# circsq-state v1 N=8 basis=integer
	# j,re,im
	-8,1.2664165549094176e-14,-0
	...
"""
import re
import numpy as np
from circsq.errors import DomainError
from circsq.states.state_space import CircleState, Basis

FORMAT_VERSION = 1
_HEADER = re.compile(r"circsq-state v(\d+) N=(\d+) basis=(\w+)")

def dump_state(state, fname):
	"""Write `state` to `fname` (path or open text file)."""
	rows = np.column_stack([state.j, state.coeffs.real, state.coeffs.imag])
	header = f"circsq-state v{FORMAT_VERSION} N={state.n_trunc} basis={state.basis.value}\nj,re,im"
	np.savetxt(fname, rows, fmt=['%d', '%.17g', '%.17g'], delimiter=',', header=header, comments='# ')

def load_state(fname):
	"""Read a state written by :func:`dump_state`."""
	with open(fname) as f:
		first = f.readline()
		match = _HEADER.search(first)
		if match is None:
			raise DomainError(f"{fname}: not a circsq state file")
		version, n_trunc, basis = int(match.group(1)), int(match.group(2)), match.group(3)
		if version != FORMAT_VERSION:
			raise DomainError(f"{fname}: unsupported state format v{version}")
		rows = np.loadtxt(f, delimiter=',', comments='#', ndmin=2)
	j = rows[:, 0].astype(int)
	if len(j) != 2 * n_trunc + 1 or not np.array_equal(j, np.arange(-n_trunc, n_trunc + 1)):
		raise DomainError(f"{fname}: rows do not cover j = -{n_trunc}..{n_trunc}")
	return CircleState(rows[:, 1] + 1j * rows[:, 2], Basis(basis))
