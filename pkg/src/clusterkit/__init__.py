"""Exact engine for cluster algebras of geometric type.

Seed and quiver mutation, exchange-graph enumeration, finite-type
classification, determinantal-minor verification, and Euler
characteristics of composition-flag varieties by finite-field counting.
"""

from .builders import (MinorLabel, build_dynkin_quiver, build_family,
                       build_gamma_ell, build_rank2, build_unitriangular_seed)
from .errors import (BadBipartition, BadIndex, BadOrientation, ClusterError,
                     FrozenVertex, IdentityFailed, NotDivisible, NotPolynomial,
                     ShapeMismatch, TooLarge, UnsupportedRank, ZeroAtPole)
from .explore import (MutationClassReport, TypeVerdict, WalkResult,
                      classify_finite_type, enumerate_exchange_graph,
                      f_polynomials, random_walk_laurent_check,
                      verify_positivity)
from .flagvar import (GF, FlagCount, GradedModule, count_flags,
                      enumerate_types, euler_characteristic,
                      flag_count_details, module_from_json, module_to_json,
                      validate_preprojective)
from .laurent import Context, LaurentPoly, default_context
from .minors import (MinorCheckReport, minor_context, minor_symbolic,
                     random_unitriangular_eval, verify_exchange_identities)
from .seed import (Quiver, Seed, initial_seed, quiver_from_arrows,
                   seed_from_json, seed_to_json)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
