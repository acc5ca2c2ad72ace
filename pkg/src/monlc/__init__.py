"""Exact multigraded local cohomology of monomial ideal quotients I/J.

Pieces are computed from relative degree complexes; depth, dimension and the
Cohen-Macaulay type properties are decided on a finite box of multidegrees.
"""

from .degree_complex import (DegreePair, EnumerationBox, degree_complex, enumeration_box,
                             link_reduction_check, relative_degree_pair)
from .errors import ParseError, TheoremViolation
from .graphs import Graph, edge_ideal, odd_cycle_census
from .local_cohomology import (CohomologyProfile, MultiplicationMap, depth_and_cm,
                               dim_quotient_pair, gcm_check, lc_piece, multiplication_map,
                               rigidity_scan, ses_consistency, takayama_piece)
from .ring import (MonomialIdeal, RingContext, colon, colon_ideal, contains, dim_quotient,
                   ideal_power, ideal_product, ideal_sum, intersect, minimal_primes, minimize,
                   radical)
from .simplicial import (RelativePair, SimplicialComplex, cohomology_dims, from_squarefree_ideal,
                         is_cone_with_apex, is_matroid, is_pure, link, relative_cohomology_dims,
                         restrict, stanley_reisner_ideal, star)
from .symbolic import (cm_edge_criterion, cm_edge_report, colon_radical_identities,
                       discrepancy_report, gcm_discrepancy_check, gcm_discrepancy_report, locally_matroidal,
                       perfect_stable_check, ratliff_check, symbolic_power,
                       symbolic_quotient_report, unicyclic_stable_dim)
from .textio import parse_complex, parse_graph, parse_ideal, parse_input, parse_pair

__version__ = "0.1.0"
