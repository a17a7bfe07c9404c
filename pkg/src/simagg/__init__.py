"""Simplicial complexes as models of social aggregation."""

__version__ = "0.1.0"

from .complex import (
    ComplexLimitError,
    Simplex,
    SimplexError,
    SimplicialComplex,
    as_simplex,
    boundary_complex,
    candidate_simplexes,
    euler_characteristic,
    f_vector,
    full_simplex,
    insert_with_closure,
    k_skeleton,
    maximal_simplexes,
    remove_with_cofaces,
)
from .homology import BettiVector, betti_numbers, boundary_matrix, dimension_census
from .random_model import (
    CombinatorialExplosionError,
    RandomComplexConfig,
    RealizationDistribution,
    empirical_distribution,
    enumerate_distribution,
    generate,
)
from .dynamics import EvolutionSchedule, EvolutionTrace, run, step
from .leadership import HubQuery, ProbabilityTable, generate_hierarchical, hub_profile, is_hub
from .analysis import DiffusionReport, QComponents, diffusion, probe_matrix, q_components
