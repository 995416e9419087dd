"""tetk: exact finite-groupoid cochain calculus.

Groups, actions, and groupoids as dense index tables; mu_m-valued cochains
with exact coboundary and cohomology; transgression of 3-cocycles on action
groupoids to 2-cocycles on inertia groupoids; central extensions, twisted
representations, and the rotation/moonshine checks on graded class-function
series.
"""

from tetk.cochain import (Cochain, coboundary, embed_modulus, face,
                          is_cocycle, is_normalized, normalize_3cocycle,
                          pullback_cochain, standard_cyclic_3cocycle)
from tetk.cohomology import class_order, cohomology_group, is_coboundary
from tetk.cyclotomic import CycSum
from tetk.extension import (CentralExtension, TwistedGroupoid,
                            central_extension, find_central_lifts,
                            group_cochain, order_of_lift, twisted_groupoid)
from tetk.groupoid import (DiscreteLoop, FiniteGroupoid, GroupoidFunctor,
                           action_groupoid, groupoid_center,
                           inertia_decomposition, inertia_groupoid,
                           is_equivalence, reduce_discrete_loop)
from tetk.groups import (FiniteGroup, GroupAction, ValidationError,
                         centralizer, conjugacy_classes, cyclic_group,
                         dihedral_group, fixed_set, group_from_table,
                         klein_four_group, quaternion_group, regular_action,
                         symmetric_group, trivial_action)
from tetk.nerve import BudgetError, nerve
from tetk.reps import (MatrixRep, twisted_regular_rep, verify_twisted_bundle,
                       verify_twisted_rep)
from tetk.tate import (ClassFunction, TateElement, TateSeries,
                       assemble_tetk_element, identity_summand_triviality,
                       moonshine_transform_check, q_graded_projection,
                       rotation_check)
from tetk.transgression import (TransgressionResult, restrict_to_centralizer,
                                source_class_order, transgress2, transgress3,
                                verify_transgression_lemmas)

__version__ = "0.1.0"
