"""Exact computations with gonality sequences of algebraic curves."""
from .castelnuovo import (CastelnuovoData, HalphenParams, SeriesPair, decompose,
                          halphen_bound, pi_bound)
from .duality import (DualPair, Violation, complete_sequence, dual_pair,
                      validate_sequence)
from .errors import ConsistencyError, DomainError
from .families import (FamilyFacts, ci_facts, extremal_facts, halphen_facts,
                       k3_facts, quadric_facts)
from .genera import (classify_range, constructive_witness, oracle_membership,
                     oracle_table)
from .sequences import (FamilyDescriptor, GonalitySequence, NoetherIndex,
                        fixture_sequence, general_bn_value, general_sequence,
                        noether_decompose, pentagonal_sequence,
                        plane_curve_sequence, tail_values)
from .slope import (Lemma36Prediction, SlopeComparison, ViolationReport,
                    find_violations, lemma36_check, prop414_check,
                    slope_satisfied)

__version__ = "0.1.0"
