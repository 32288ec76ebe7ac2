r"""Jacobi theta-3 and modified Bessel functions of the first kind.

The theta function is parameterized by a real :math:`t>0` instead of the
half-period ratio, :math:`\tau = {\rm i}t/\pi`, so that the nome is
:math:`q = e^{-t}`:

.. math::

	\theta_3(v, t) = \sum_{n=-\infty}^{\infty} e^{-tn^2} e^{2\pi{\rm i}vn}.

Every overlap, norm and exponential moment of the circle states reduces to
this series, either with :math:`t=s` or with :math:`t=\pi^2/s`. The two forms
are exchanged by the Jacobi imaginary transformation

.. math::

	\theta_3(v, t) = \sqrt{\pi/t}\, e^{-\pi^2v^2/t}\,\theta_3(-{\rm i}\pi v/t, \pi^2/t),

which is also what keeps the number of terms small when :math:`t<1`.
"""
import logging
import operator
import numpy as np
from scipy.special import gammaln
from circsq.errors import DomainError, RangeError

EPS = np.finfo(float).eps
MAX_EXP = np.log(np.finfo(float).max)

logger = logging.getLogger('theta')

def _check_t_tol(t, tol):
	if not (np.isfinite(t) and t > 0):
		raise DomainError(f"t must be positive, got {t}")
	if not tol > 0:
		raise DomainError(f"tol must be positive, got {tol}")

def truncation_index(t, tol):
	r"""Half-width M of the window of summation indices.

	Terms beyond M from the dominant one are bounded by :math:`e^{-tM^2} \le` tol.
	"""
	return int(np.ceil(np.sqrt(max(np.log(1. / tol), 0.) / t))) + 2

def _warn_precision(tol, log_scale):
	if tol < 4 * EPS * np.exp(min(log_scale, MAX_EXP)):
		logger.warning(f"tol={tol:.1e} is below double precision at result scale e^{log_scale:.3g}")

def _theta3_direct(v, t, tol):
	"""Sum the theta series around its dominant index."""
	w = 2j * np.pi * v
	center = int(np.round(w.real / (2 * t)))
	M = truncation_index(t, tol)
	if center == 0:
		# pair +n and -n terms, smallest first
		n = np.arange(M, 0, -1)
		_warn_precision(tol, 0.)
		return 1. + 2. * np.sum(np.exp(-t * n**2) * np.cos(np.pi * 2 * v * n))
	n = center + np.arange(-M, M + 1)
	expo = -t * n.astype(float)**2 + w * n
	peak = expo.real.max()
	if peak > MAX_EXP:
		raise RangeError(f"theta3 series overflows: dominant term e^{peak:.4g} (v={v}, t={t})")
	_warn_precision(tol, peak)
	expo = expo[np.argsort(expo.real)]
	return np.sum(np.exp(expo))

def _theta3_transformed(v, t, tol):
	"""Jacobi imaginary transformation to nome e^{-pi^2/t}, for t < 1."""
	log_prefactor = 0.5 * np.log(np.pi / t) - np.pi**2 * v**2 / t
	if log_prefactor.real > MAX_EXP:
		raise RangeError(f"theta3 prefactor overflows for v={v}, t={t}")
	_warn_precision(tol, 0.)
	inner_tol = min(1., max(4 * EPS, tol * np.exp(min(-log_prefactor.real, MAX_EXP))))
	inner = _theta3_direct(-1j * np.pi * v / t, np.pi**2 / t, inner_tol)
	return np.exp(log_prefactor) * inner

def theta3(v, t, tol=1e-12):
	r"""Jacobi theta-3 function :math:`\sum_n q^{n^2} e^{2\pi{\rm i}vn}` with :math:`q=e^{-t}`.

	Parameters
	----------
	v : complex
		argument; real and imaginary parts both allowed.
	t : float
		positive nome exponent, :math:`\tau = {\rm i}t/\pi`.
	tol : float
		absolute error requested. When the series is dominated by a term larger than 1
		(large imaginary part of v) the error is relative to that term.

	Returns
	-------
	complex

	Raises
	------
	DomainError
		t <= 0, tol <= 0 or v not finite.
	RangeError
		the series does not fit in double precision.

	Notes
	-----
	For t < 1 the series is evaluated after the Jacobi imaginary transformation,
	so at most a couple of dozen terms are ever summed.

	Examples
	--------
	>>> round(theta3(0, 1).real, 10)
	1.7726372048
	"""
	v = complex(v)
	if not np.isfinite(v):
		raise DomainError(f"v must be finite, got {v}")
	_check_t_tol(t, tol)
	# the series has period 1 in Re v
	v = v - round(v.real)
	if t < 1:
		value = _theta3_transformed(v, t, tol)
	else:
		value = _theta3_direct(v, t, tol)
	return complex(value)

def log_theta3(v, t, tol=1e-12):
	r"""Natural log of :math:`\theta_3(v, t)` for real v.

	For real v the series is positive. When t >= 1 the correction to the
	leading 1 is summed and passed through log1p; otherwise the dual Gaussian sum
	:math:`\sqrt{\pi/t}\sum_k e^{-\pi^2(k-v)^2/t}` is used with its largest term
	(k closest to v) factored out, so the result stays finite even where the theta
	value itself under- or overflows.
	"""
	if np.iscomplexobj(v) or not np.isfinite(v):
		raise DomainError(f"v must be a finite real number, got {v}")
	v = float(v)
	_check_t_tol(t, tol)
	if t >= 1:
		n = np.arange(truncation_index(t, tol), 0, -1)
		_warn_precision(tol, 0.)
		return float(np.log1p(2. * np.sum(np.exp(-t * n**2) * np.cos(2 * np.pi * v * n))))
	tp = np.pi**2 / t
	d = v - np.round(v)
	k = np.arange(-truncation_index(tp, tol), truncation_index(tp, tol) + 1)
	rel = np.sort(np.exp(-tp * ((k - d)**2 - d**2)))
	return float(0.5 * np.log(np.pi / t) - tp * d**2 + np.log(np.sum(rel)))

def log_gaussian_sum(a, s, tol=1e-12):
	r"""Natural log of :math:`\sum_j e^{2aj - sj^2}` over all integers j.

	This is the squared norm of the squeezed state with :math:`l=a`. Completing
	the square and applying Poisson summation gives

	.. math::

		\ln\sum_j e^{2aj-sj^2} = \frac{a^2}{s} + \frac{1}{2}\ln\frac{\pi}{s}
			+ \ln\theta_3(a/s, \pi^2/s),

	which never overflows for representable results.
	"""
	if not (np.isfinite(s) and s > 0):
		raise DomainError(f"s must be positive, got {s}")
	return a**2 / s + 0.5 * np.log(np.pi / s) + log_theta3(a / s, np.pi**2 / s, tol)

def bessel_i(n, x, tol=1e-15):
	r"""Modified Bessel function of the first kind :math:`I_n(x)` from its power series.

	.. math::

		I_n(x) = \sum_{k\ge0} \frac{(x/2)^{2k+n}}{k!\,(k+n)!}

	Parameters
	----------
	n : int
		nonnegative order (use :math:`I_{-n}=I_n` for negative orders).
	x : float
		nonnegative argument. The series has no cancellation, so it is accurate
		for any x whose result fits in double precision; the arguments used in
		circsq stay below about 10.
	tol : float
		absolute error requested.
	"""
	try:
		n = operator.index(n)
	except TypeError:
		raise DomainError(f"order must be an integer, got {n}")
	if n < 0:
		raise DomainError(f"order must be nonnegative, got {n}")
	if not (np.isfinite(x) and x >= 0):
		raise DomainError(f"x must be finite and nonnegative, got {x}")
	if not tol > 0:
		raise DomainError(f"tol must be positive, got {tol}")
	if x == 0:
		return 1. if n == 0 else 0.
	half = x / 2.
	log_lead = n * np.log(half) - gammaln(n + 1)
	if log_lead > MAX_EXP:
		raise RangeError(f"I_{n}({x}) overflows")
	term = np.exp(log_lead)
	total = term
	k = 0
	while True:
		k += 1
		ratio = half * half / (k * (k + n))
		term *= ratio
		total += term
		# once ratio < 1/2 the remaining tail is bounded by the last term
		if ratio < 0.5 and (term < 0.5 * tol or term < EPS * total):
			break
	if not np.isfinite(total):
		raise RangeError(f"I_{n}({x}) overflows")
	return float(total)
