"""Maximal rigid objects of cluster tubes: enumeration, mutation, quivers and invariants."""

from .errors import ClusterTubeError, InvariantViolation, PreconditionError
from .tube import (
    Indec,
    ext1_dim_tube,
    hom_dim_cluster,
    hom_dim_tube,
    indec,
    is_rigid,
    is_rigid_indec,
    loewy_length,
    shift,
)
from .rigid import (
    MaximalRigid,
    SubwingTriple,
    apex_of,
    enumerate_maximal_rigid,
    make_rigid,
    standard_object,
    subwing_triple,
    wing_members,
)
from .mutation import ExchangeGraph, MutationEdge, exchange_graph, is_simple, mutate, mutation_path
from .quiver import (
    QTilde,
    Quiver,
    QuiverWithPotential,
    delta_c,
    extended_mutate,
    fz_mutate,
    gamma_c,
    potential_of,
    quiver_iso,
    quiver_of,
    standard_quiver,
    validate_membership,
)
from .derived import (
    CartanMatrix,
    apply_mutation_sequence,
    cartan_determinant,
    cartan_matrix,
    count_3_cycles,
    derived_classes,
    derived_equivalent,
    normal_form,
)
from .presentability import approximation_cone, in_F, in_pr, module_count

__version__ = "0.1.0"
