"""Coherent and squeezed states of a quantum particle on a circle."""
from circsq.states.state_space import PhasePoint, CircleState, squeezed_state, coherent_state, circular_squeezed_state
from circsq.measures.uncertainty import delta2_J, delta2_phi, delta2_J_generalized, full_report
from circsq.types import UncertaintyReport
