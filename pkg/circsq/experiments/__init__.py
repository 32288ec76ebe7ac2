"""Subpackage reproducing the squeeze figures and running the numerical checks.

:py:mod:`circsq.experiments.scans` scans the squeezed family,
:py:mod:`circsq.experiments.checks` verifies identities and inequalities and
:py:mod:`circsq.experiments.cli` is the ``circsq`` command."""
