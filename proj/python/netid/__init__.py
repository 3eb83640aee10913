"""Resistive network toolkit.

Models finite weighted graphs as resistive electrical networks: discrete
Laplacians and their Moore-Penrose pseudoinverses, effective resistances,
three-point voltages, equilibrium measures, k-step transition kernels, and
numerical certification of the Foster-type identities relating them.
"""

from ._netid import (
    ConductanceProfile,
    DiscreteLaplacian,
    Edge,
    EquilibriumMeasure,
    EquilibriumTable,
    Error,
    IdentityCheck,
    IdentityReport,
    MetrizedGraph,
    PseudoInverse,
    ResistanceMatrix,
    TransitionKernel,
    conductance_profile,
    equilibrium_measure,
    extended_foster_check,
    full_report,
    generate_random_graph,
    laplacian,
    low_order_identity,
    low_order_literal,
    optimalize,
    parse_edge_list,
    pseudo_inverse,
    recurrence_check,
    report_from_json,
    report_to_json,
    resistance_matrix,
    resistance_via_equilibrium,
    simulate_kstep_frequencies,
    solve_centered,
    theorem_main_check,
    transition_matrix,
    voltage,
    voltage_from_resistance,
    voltage_via_equilibrium,
    y_reduction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
