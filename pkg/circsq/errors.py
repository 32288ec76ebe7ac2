"""Exceptions raised by circsq.

All of them derive from :class:`CircsqError` and from the builtin exception
matching their nature, so callers can catch either."""

class CircsqError(Exception):
	"""Base class for every error raised by circsq."""

class DomainError(CircsqError, ValueError):
	"""An argument lies outside the domain of the operation (t <= 0, x < 0, s <= 0, ...)."""

class TruncationError(CircsqError, ValueError):
	"""A state carries non-negligible coefficient mass at the edge of its j-window."""

class RangeError(CircsqError, OverflowError):
	"""An exponential or moment does not fit in double precision."""

class ConsistencyError(CircsqError, ArithmeticError):
	"""A quantity that must be nonnegative came out clearly negative."""

class UsageError(CircsqError, ValueError):
	"""Invalid run configuration given to the command line interface."""
