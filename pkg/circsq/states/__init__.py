"""Subpackage for states of a particle on a circle.

Every state in circsq is a :class:`circsq.states.state_space.CircleState`. Coherent,
squeezed, circular squeezed and momentum eigenstates are built by the constructors of
:py:mod:`circsq.states.state_space` and can be saved with
:py:mod:`circsq.states.serialization`."""
