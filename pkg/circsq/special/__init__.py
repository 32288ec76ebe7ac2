"""Subpackage for the special functions behind every closed-form formula.

Only the Jacobi theta-3 function (on the imaginary half-period axis) and the
modified Bessel functions :math:`I_n` are needed. See
:py:mod:`circsq.special.functions`."""
from circsq.special.functions import theta3, log_theta3, log_gaussian_sum, bessel_i
