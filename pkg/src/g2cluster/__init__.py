"""Exact cluster-algebra seed mutation for the two G2 seed families, with a
symbolic model of the group used to verify the defining identities."""

from .laurent import (DivisionByZeroError, EvaluationError,
                      InexactDivisionError, LaurentError, LaurentPoly,
                      Rational, VariableMismatchError, parse, variables)
from .mutation import (BipartiteBelt, DegreeVector, ExchangeMatrix,
                       HomogeneityViolation, MutationError, NonBipartiteError,
                       Seed, ValuedQuiver, apply_sequence, belt_seed,
                       cmatrix_at, cmatrix_closed, cmatrix_step, matrix_rank,
                       mutate_matrix, mutate_seed, right_to_left,
                       propagate_degrees, quiver_mutate)
from .g2rep import (GroupPoint, NotHomogeneous, RepresentationError,
                    chevalley_matrices, evaluate_function, generalized_minor,
                    infer_degree, invariant_form, lowering_derivation,
                    named_function, one_param, raising_derivation,
                    random_dense_point, random_group_point, registry_listing,
                    torus_element, weyl_lift, weyl_lift_word)
from .verify import (CheckReport, Engine, bridge_evaluate, exit_status,
                     infer_degree_bridge, reports_to_json)

__version__ = "0.1.0"

__all__ = [
    "BipartiteBelt", "CheckReport", "DegreeVector", "DivisionByZeroError",
    "Engine", "EvaluationError", "ExchangeMatrix", "GroupPoint",
    "HomogeneityViolation", "InexactDivisionError", "LaurentError",
    "LaurentPoly", "MutationError", "NonBipartiteError", "NotHomogeneous",
    "Rational", "RepresentationError", "Seed", "ValuedQuiver",
    "apply_sequence", "belt_seed", "bridge_evaluate", "chevalley_matrices",
    "cmatrix_at", "cmatrix_closed", "cmatrix_step", "evaluate_function",
    "exit_status", "generalized_minor", "infer_degree", "infer_degree_bridge",
    "invariant_form", "lowering_derivation", "matrix_rank", "mutate_matrix",
    "mutate_seed", "named_function", "one_param", "parse",
    "right_to_left",
    "propagate_degrees", "quiver_mutate", "raising_derivation",
    "random_dense_point", "random_group_point", "registry_listing",
    "reports_to_json", "torus_element", "variables", "weyl_lift",
    "weyl_lift_word",
]
