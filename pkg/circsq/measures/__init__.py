"""Subpackage for expectation values and uncertainty measures.

:py:mod:`circsq.measures.expectations` computes expectations both by direct
summation and in closed form; :py:mod:`circsq.measures.uncertainty` builds the
uncertainty measures and relations on top of it."""
