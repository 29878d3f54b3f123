"""Finite monoids, finite acts over them, and the flatness hierarchy.

The package decides, for finite input, Green structure, structural predicates,
free/projective/strongly flat/weakly flat membership, the bounded flatness
search, annihilator and solution-bound profiles, perfectness, axiomatisability
and completeness verdicts, and the census of right unitary right collapsible
submonoids, emitting machine-readable witness reports.
"""

from .budget import Budget
from .errors import ActaError, ValidationError
from .monoid import (FiniteMonoid, GreenStructure, IdealPoset, StructurePredicates,
                     Submonoid, build_monoid, enumerate_cu, green, is_right_collapsible,
                     is_right_unitary, principal_ideal_poset, structure_predicates,
                     submonoid, submonoid_closure)
from .act import (ActCongruence, ActMorphism, FiniteAct, FreeProjReport, act_of_monoid,
                  build_act, classify_free_projective, congruence_closure,
                  connected_components, cyclic_iso, disjoint_union, left_congruences,
                  one_element_act, quotient, right_e_cancellable, subact)
from .flatness import (FlatVerdict, Skeleton, TensorProduct, Tossing, check_e, check_p,
                       emit_formula, flat_verdict, is_strongly_flat,
                       is_strongly_flat_congruence, is_weakly_flat, rho_of_submonoid,
                       strongly_flat_left_congruences, tensor, tensor_equal,
                       verify_tossing)
from .classify import (AnnihilatorReport, axiomatisability_report, big_r_annihilator,
                       cfrs_profile, completeness_report, condition_a_check, e_good,
                       hierarchy_verdicts, left_perfect, monoid_report, omega_report,
                       r_annihilator, star_witness)
from .ingest import (Dfa, TransformationGenSet, act_to_json, dfa_to_json, monoid_to_json,
                     monoid_to_text, parse_act, parse_dfa, parse_monoid,
                     parse_transformations, serialize_report, transformation_monoid,
                     transition_monoid)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
