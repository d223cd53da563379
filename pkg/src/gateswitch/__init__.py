"""Switch counts of circular sequences, multipermutohedron diameters and k-sets."""

from .circseq import (
    GateSet, classify_switch, count_switches, gate_profile, theorem1_bounds,
    two_phase_construction, two_phase_sequence,
)
from .errors import (
    BudgetExceeded, DegenerateConfiguration, GateSwitchError, InvalidInput,
    InvalidSequence, NotAnAscent,
)
from .ksets import (
    LRSpec, PointConfig, complement_LR, composition_from_LR, f_LR, gon_configuration,
    kset_counts, load_points, sandwich_check, sweep_sequence,
)
from .multiperm import (
    Composition, closed_form_diameter, composition_from_gates, diameter,
    diameter_bounds, distance, h_representation, neighbors, vertex_from_permutation,
)
from .perm_core import (
    CircularSequence, Permutation, apply_ascent_swap, identity, reverse,
    switch_counts, validate_sequence,
)

__version__ = "0.1.0"
