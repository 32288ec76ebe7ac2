"""Module containing types (classes) used in circsq.

Results are plain records: dictionaries whose keys can also be read as attributes.
Each record knows the column order it is serialized with."""
from circsq.errors import UsageError
from circsq.utils import fmt_float

class Record(dict):
	"""Dictionary with attribute access. Subclasses list their fields in `columns`."""
	columns = ()

	def __init__(self, **fields):
		super().__init__()
		for name in self.columns:
			self[name] = fields.pop(name, None)
		self.update(fields)

	# From https://github.com/scipy/scipy/blob/v1.5.3/scipy/optimize/optimize.py#L82-L138
	def __getattr__(self, name):
		try:
			return self[name]
		except KeyError:
			raise AttributeError(name)

	__setattr__ = dict.__setitem__
	__delattr__ = dict.__delitem__

	def __repr__(self):
		if self.keys():
			m = max(map(len, list(self.keys()))) + 1
			return '\n'.join([k.rjust(m) + ': ' + repr(v)
							for k, v in self.items()])
		else:
			return self.__class__.__name__ + "()"

	def __dir__(self):
		return list(self.keys())

	def values_row(self):
		"""Values of `columns`, in order, as floats."""
		return [float(self[name]) for name in self.columns]

	def to_csv_row(self):
		return ','.join(fmt_float(v) for v in self.values_row())

class UncertaintyReport(Record):
	r"""All uncertainty measures of one state.

	`d2J`, `d2phi` are the logarithmic measures of the angular momentum and of the angle,
	`d2J_gen` the angular momentum measure at reference squeezing `s0`, `d_phi_legacy`
	the dispersion built from :math:`|\langle U\rangle|` (``inf`` when it vanishes) and
	`sum` = `d2J_gen` + `d2phi`. `e2_products` holds the three left sides of the e(2)
	uncertainty relations and `e2_bounds` the two nontrivial right sides.
	"""
	columns = ('d2J', 'd2phi', 'd2J_gen', 'd_phi_legacy', 'sum', 'e2_products', 'e2_bounds')

	@staticmethod
	def csv_header():
		return 'd2J,d2phi,d2J_gen,d_phi_legacy,sum,JcosL,JsinL,sincosL,JcosR,JsinR,sincosR'

	def to_csv_row(self):
		# six e(2) numbers: three left sides then three right sides (the last one is 0)
		head = [float(self[name]) for name in self.columns[:5]]
		six = [float(v) for v in self.e2_products] + [float(v) for v in self.e2_bounds] + [0.]
		return ','.join(fmt_float(v) for v in head + six)

class ScanRow(Record):
	"""One point of a squeeze scan: family squeezing `s` and the measures summed at it."""
	columns = ('s', 'd2J_gen', 'd2phi', 'sum')

class MinimumRecord(Record):
	"""Refined minimum of a squeeze scan at reference squeezing `s0`."""
	columns = ('s0', 's_min', 'f_min')

class CheckRow(Record):
	"""Outcome of one checked identity or inequality.

	For identities (`kind` = 'residual') `worst` is the largest residual and the
	check passes when it is at most `tol`. For inequalities (`kind` = 'slack') `worst`
	is the smallest slack, left side minus right side, and the check passes when it
	is at least -`tol`.
	"""
	columns = ('name', 'worst', 'tol', 'kind', 'passed')

	def __init__(self, name, worst, tol, kind='residual'):
		if kind == 'residual':
			passed = bool(worst <= tol)
		else:
			passed = bool(worst >= -tol)
		super().__init__(name=name, worst=float(worst), tol=float(tol), kind=kind, passed=passed)

	def __str__(self):
		status = 'ok' if self.passed else 'FAIL'
		label = 'max residual' if self.kind == 'residual' else 'min slack'
		return '{:<26s} {:>12s} {:>12.3e}  tol {:>8.1e}  {}'.format(self.name, label, self.worst, self.tol, status)

class RunConfig(Record):
	"""Settings of one command line run, validated at construction.

	Raises
	------
	UsageError
		s_min <= 0, s_max <= s_min, steps < 2, tol <= 0, trials < 1, s <= 0, s0 <= 0
		or n_trunc < 1.
	"""
	columns = ('command', 'kind', 'l', 'phi', 's', 's0', 's_min', 's_max', 'steps', 'n_trunc',
				'tol', 'seed', 'trials', 'out')

	def __init__(self, **fields):
		super().__init__(**fields)
		checks = [
			(self.s_min > 0, f"--s-min must be positive, got {self.s_min}"),
			(self.s_max > self.s_min, f"--s-max must exceed --s-min, got {self.s_max} <= {self.s_min}"),
			(self.steps >= 2, f"--steps must be at least 2, got {self.steps}"),
			(self.tol > 0, f"--tol must be positive, got {self.tol}"),
			(self.trials >= 1, f"--trials must be at least 1, got {self.trials}"),
			(self.s > 0, f"--s must be positive, got {self.s}"),
			(self.s0 > 0, f"--s0 must be positive, got {self.s0}"),
			(self.n_trunc is None or self.n_trunc >= 1, f"--n-trunc must be at least 1, got {self.n_trunc}"),
		]
		for ok, message in checks:
			if not ok:
				raise UsageError(message)

	def echo(self):
		"""One line `key=value` description, for output headers."""
		return ' '.join(f"{name}={self[name]}" for name in self.columns if name not in ('out',))

	def replace(self, **changes):
		fields = dict(self)
		fields.update(changes)
		return RunConfig(**fields)
