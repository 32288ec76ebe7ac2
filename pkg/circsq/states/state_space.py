r"""States of a quantum particle on a circle in the angular momentum basis.

A state is the vector of its coefficients :math:`c_j = \langle j|\psi\rangle` for
integer :math:`j \in [-N, N]` (:math:`\hbar=1`). The ladder operator
:math:`U=e^{{\rm i}\hat\varphi}` shifts :math:`|j\rangle \to |j+1\rangle` and
:math:`\hat J` is diagonal, so every operator used in circsq acts on these
vectors by shifts and elementwise products.

States are stored unnormalized, as the closed-form formulas are: expectation
values always divide by the squared norm explicitly.
"""
import enum
import logging
import numpy as np
from circsq.errors import DomainError, TruncationError, RangeError
from circsq.special.functions import theta3, log_gaussian_sum, bessel_i, MAX_EXP
from circsq.utils import mod2pi

logger = logging.getLogger('statespace')

BOUNDARY_DECAY = 1e-12
EDGE_LOSS_WARN = 1e-10
AUTO_EPS = 1e-16

class Basis(enum.Enum):
	"""Spectrum of the angular momentum. Only the integer sector is implemented."""
	INTEGER = 'integer'

class CircleState:
	r"""Immutable coefficient vector over :math:`j=-N,\dots,N`.

	Parameters
	----------
	coeffs : array_like of complex, length 2N+1
		coefficient of :math:`|j\rangle` at index j+N.
	basis : Basis
		only :attr:`Basis.INTEGER` is accepted.
	edge_loss : float
		squared norm shifted out of the window by the operation that produced this
		state (0 for freshly constructed states).
	"""
	def __init__(self, coeffs, basis=Basis.INTEGER, edge_loss=0.):
		if basis is not Basis.INTEGER:
			raise DomainError(f"unsupported basis {basis}")
		coeffs = np.array(coeffs, dtype=complex).reshape(-1)
		if len(coeffs) < 3 or len(coeffs) % 2 == 0:
			raise DomainError(f"need an odd number (>= 3) of coefficients, got {len(coeffs)}")
		if not np.all(np.isfinite(coeffs)):
			raise RangeError("state coefficients are not finite")
		if not np.any(coeffs != 0):
			raise DomainError("the zero vector is not a state")
		coeffs.flags.writeable = False
		self._coeffs = coeffs
		self.basis = basis
		self.edge_loss = float(edge_loss)

	@property
	def coeffs(self):
		return self._coeffs

	@property
	def n_trunc(self):
		return (len(self._coeffs) - 1) // 2

	@property
	def j(self):
		"""Angular momentum of every slot, as floats."""
		return np.arange(-self.n_trunc, self.n_trunc + 1, dtype=float)

	def coeff(self, j):
		r"""Coefficient of :math:`|j\rangle` (0 outside the window)."""
		if abs(j) > self.n_trunc:
			return 0j
		return self._coeffs[j + self.n_trunc]

	def boundary_ratio(self):
		"""max(|c_{-N}|, |c_N|) / max_j |c_j|."""
		a = np.abs(self._coeffs)
		return max(a[0], a[-1]) / a.max()

	def padded(self, n_trunc):
		"""Same state in a window of half-width `n_trunc` >= N (zero padding)."""
		if n_trunc < self.n_trunc:
			raise DomainError(f"cannot shrink a window from {self.n_trunc} to {n_trunc}")
		pad = n_trunc - self.n_trunc
		return CircleState(np.pad(self._coeffs, pad), self.basis)

	def __eq__(self, other):
		if not isinstance(other, CircleState):
			return NotImplemented
		return self.n_trunc == other.n_trunc and np.array_equal(self._coeffs, other._coeffs)

	__hash__ = None

	def __repr__(self):
		return f"CircleState(N={self.n_trunc}, norm2={norm2(self):.6g})"

class PhasePoint:
	r"""Point :math:`(l, \varphi)` of the cylinder, :math:`\xi = e^{-l+{\rm i}\varphi}`.

	`phi` is stored reduced to :math:`[0, 2\pi)`.
	"""
	def __init__(self, l, phi=0.):
		if not (np.isfinite(l) and np.isfinite(phi)):
			raise DomainError(f"phase point must be finite, got l={l}, phi={phi}")
		self.l = float(l)
		self.phi = float(mod2pi(phi))

	@property
	def xi(self):
		return np.exp(-self.l + 1j * self.phi)

	@classmethod
	def from_xi(cls, xi):
		if xi == 0 or not np.isfinite(xi):
			raise DomainError(f"xi must be finite and nonzero, got {xi}")
		return cls(-np.log(abs(xi)), np.angle(xi))

	def __repr__(self):
		return f"PhasePoint(l={self.l}, phi={self.phi})"

class SqueezeParams:
	"""State squeezing `s` and the reference squeezing `s0` used by the measures."""
	def __init__(self, s, s0=1.):
		_check_squeezing(s, 's')
		_check_squeezing(s0, 's0')
		self.s = float(s)
		self.s0 = float(s0)

	def __repr__(self):
		return f"SqueezeParams(s={self.s}, s0={self.s0})"

def _check_squeezing(s, name='s'):
	if not (np.isfinite(s) and s > 0):
		raise DomainError(f"{name} must be positive, got {s}")

def _check_decay(state, what):
	ratio = state.boundary_ratio()
	if ratio > BOUNDARY_DECAY:
		raise TruncationError(f"{what}: edge/max coefficient ratio {ratio:.2e} exceeds "
							f"{BOUNDARY_DECAY:.0e} at N={state.n_trunc}; increase n_trunc")
	return state

def auto_trunc(l, s=1.):
	r"""Window half-width for a Gaussian envelope :math:`e^{-s(j-l/s)^2/2}`.

	:math:`N = \lceil |l|/s + \sqrt{2\ln(1/\epsilon)/s}\rceil + 4` with :math:`\epsilon=10^{-16}`.
	"""
	_check_squeezing(s)
	return int(np.ceil(abs(l) / s + np.sqrt(2 * np.log(1 / AUTO_EPS) / s))) + 4

def squeezed_state(p, s, n_trunc=None):
	r"""Squeezed state :math:`|l,\varphi\rangle_s`, eigenvector of :math:`Z(s)=e^{-s(\hat J-1/2)}U`.

	Coefficients :math:`c_j = e^{lj-{\rm i}j\varphi}e^{-sj^2/2}`, unnormalized.

	Parameters
	----------
	p : PhasePoint
	s : float
		squeezing, s > 0; s = 1 is the coherent state.
	n_trunc : int, optional
		window half-width; sized with :func:`auto_trunc` when omitted.

	Raises
	------
	DomainError
		s <= 0.
	TruncationError
		`n_trunc` too small for the envelope to decay at the edges.
	RangeError
		the peak coefficient :math:`e^{l^2/2s}` overflows.
	"""
	_check_squeezing(s)
	if p.l**2 / (2 * s) > MAX_EXP:
		raise RangeError(f"squeezed state overflows for l={p.l}, s={s}")
	if n_trunc is None:
		n_trunc = auto_trunc(p.l, s)
	j = np.arange(-n_trunc, n_trunc + 1, dtype=float)
	coeffs = np.exp(p.l * j - s * j**2 / 2 - 1j * j * p.phi)
	return _check_decay(CircleState(coeffs), f"squeezed_state(l={p.l}, s={s})")

def coherent_state(p, n_trunc=None):
	r"""Coherent state :math:`|l,\varphi\rangle`, coefficients :math:`e^{lj-{\rm i}j\varphi}e^{-j^2/2}`."""
	return squeezed_state(p, 1., n_trunc)

def circular_squeezed_state(alpha, l, s, n_trunc=None):
	r"""Circular squeezed state, the von Mises shaped packet
	:math:`\propto\exp[s\cos(\varphi-\alpha)+{\rm i}l(\varphi-\alpha)]`.

	Its Fourier coefficients are :math:`c_j \propto e^{-{\rm i}(j-l)\alpha}I_{j-l}(s)`; the
	vector is returned normalized. l has to be an integer for the packet to be
	periodic.
	"""
	if not (float(l).is_integer()):
		raise DomainError(f"circular squeezed states need an integer l, got {l}")
	l = int(l)
	_check_squeezing(s)
	i0 = bessel_i(0, s)
	if n_trunc is None:
		m = 1
		while bessel_i(m, s) > AUTO_EPS * i0:
			m += 1
		n_trunc = abs(l) + m + 2
	j = np.arange(-n_trunc, n_trunc + 1)
	bessels = np.array([bessel_i(abs(m), s) for m in j - l])
	coeffs = np.exp(-1j * (j - l) * alpha) * bessels
	coeffs = coeffs / np.linalg.norm(coeffs)
	return _check_decay(CircleState(coeffs), f"circular_squeezed_state(l={l}, s={s})")

def momentum_eigenstate(j0, n_trunc):
	r"""Eigenstate :math:`|j_0\rangle` of :math:`\hat J`."""
	if abs(j0) > n_trunc or int(j0) != j0:
		raise DomainError(f"j0 must be an integer with |j0| <= {n_trunc}, got {j0}")
	coeffs = np.zeros(2 * n_trunc + 1, dtype=complex)
	coeffs[int(j0) + n_trunc] = 1.
	return CircleState(coeffs)

def _shift(state, k):
	"""new c_j = old c_{j-k}; zero fill, never wrap around."""
	c = state.coeffs
	out = np.zeros_like(c)
	if k > 0:
		out[k:] = c[:-k]
		lost = np.sum(np.abs(c[-k:])**2)
	else:
		out[:k] = c[-k:]
		lost = np.sum(np.abs(c[:-k])**2)
	total = np.sum(np.abs(c)**2)
	if lost > EDGE_LOSS_WARN * total:
		logger.warning(f"truncation: shift by {k:+d} pushed {lost / total:.2e} of the norm out of N={state.n_trunc}")
	if not np.any(out != 0):
		raise TruncationError(f"shift by {k:+d} moved the whole state out of the window")
	return CircleState(out, state.basis, edge_loss=lost)

def apply_U(state):
	r""":math:`U|j\rangle = |j+1\rangle`."""
	return _shift(state, 1)

def apply_U_dagger(state):
	r""":math:`U^\dagger|j\rangle = |j-1\rangle`."""
	return _shift(state, -1)

def apply_J(state):
	r""":math:`\hat J|j\rangle = j|j\rangle`.

	Raises DomainError on a state entirely supported on j = 0 (the result is the zero vector)."""
	out = state.j * state.coeffs
	if not np.any(out != 0):
		raise DomainError("J annihilates this state (only j = 0 populated)")
	return CircleState(out, state.basis)

def z_operator(state, s=1.):
	r"""Apply :math:`Z(s) = e^{-s(\hat J-1/2)}U`; squeezed states are its eigenvectors."""
	_check_squeezing(s)
	shifted = apply_U(state)
	return CircleState(np.exp(-s * (shifted.j - 0.5)) * shifted.coeffs, state.basis, shifted.edge_loss)

def circular_eigen_operator(state, s, alpha=0.):
	r"""Apply :math:`\hat J - \frac{s}{2}(e^{-{\rm i}\alpha}U - e^{{\rm i}\alpha}U^\dagger)`.

	For :math:`\alpha=0` this is :math:`\hat J - {\rm i}s\sin\hat\varphi`; circular squeezed
	states peaked at :math:`\alpha` with momentum l are its eigenvectors with eigenvalue l.
	"""
	c = state.coeffs
	up = np.zeros_like(c)
	down = np.zeros_like(c)
	up[1:] = c[:-1]
	down[:-1] = c[1:]
	out = state.j * c - 0.5 * s * (np.exp(-1j * alpha) * up - np.exp(1j * alpha) * down)
	return CircleState(out, state.basis)

def _common(a, b):
	n = max(a.n_trunc, b.n_trunc)
	return a.padded(n), b.padded(n)

def inner_product(a, b):
	r""":math:`\langle a|b\rangle = \sum_j \bar a_j b_j` (windows zero-padded to the larger N)."""
	a, b = _common(a, b)
	return complex(np.vdot(a.coeffs, b.coeffs))

def norm2(a):
	return float(np.sum(np.abs(a.coeffs)**2))

def normalize(a):
	return CircleState(a.coeffs / np.sqrt(norm2(a)), a.basis)

def resqueeze(a, ds):
	r"""Multiply by :math:`e^{-\Delta s\,\hat J^2/2}`, mapping :math:`|\xi\rangle_{s_0}` to :math:`|\xi\rangle_{s_0+\Delta s}`.

	The map is not unitary. A negative `ds` widens the state and may violate the edge
	decay, which raises TruncationError.
	"""
	j = a.j
	if np.max(-ds * j**2 / 2) > MAX_EXP:
		raise RangeError(f"resqueeze by {ds} overflows at N={a.n_trunc}")
	out = CircleState(a.coeffs * np.exp(-ds * j**2 / 2), a.basis)
	if ds < 0:
		_check_decay(out, f"resqueeze(ds={ds})")
	return out

def norm2_closed(l, s=1., log=False):
	r"""Squared norm :math:`\sum_j e^{2lj-sj^2} = \theta_3({\rm i}l/\pi, s)` of :math:`|l,\varphi\rangle_s`.

	With `log=True` the natural log is returned, computed through the dual
	nome so that it does not overflow for large l/s.
	"""
	_check_squeezing(s)
	if log:
		return log_gaussian_sum(l, s)
	return theta3(1j * l / np.pi, s).real

def overlap_closed(p, q, s=1.):
	r"""Overlap :math:`{}_s\langle l,\varphi|h,\psi\rangle_s` in closed form:

	.. math::

		\theta_3\left(\frac{\varphi-\psi}{2\pi} - \frac{l+h}{2}\frac{\rm i}{\pi},\ s\right).
	"""
	_check_squeezing(s)
	return theta3((p.phi - q.phi) / (2 * np.pi) - 0.5j * (p.l + q.l) / np.pi, s)
