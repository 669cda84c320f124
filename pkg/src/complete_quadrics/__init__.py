"""
Reverse weak order on mu-involutions (B-orbits of complete quadrics), its
W-sets, and the induced restriction classes as sums of Schubert polynomials.
"""

from .perm import Permutation, compose, inverse, length, excedance, involution_rank
from .muinv import (
    Composition, MuInvolution, ValidationError, compositions, validate,
    parse_mu_involution, identity_mu, top_mu, rank_mu, count_mu_involutions,
)
from .monoid import act_simple, act_word, verify_relations
from .poset import (
    ResourceBoundError, build_poset, w_set, orbit_w_set, d_set, d_set_mu,
    maximal_chains, verify_top_wset, double_edge_count,
)
from .polynomial import Polynomial, divided_difference
from .schubert import (
    schubert, restriction_class, conjecture_product, check_conjecture,
    compare_exponents,
)

__version__ = "0.1.0"
