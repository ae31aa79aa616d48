"""tracta: exact arithmetic for matroids over tracts and their tropical
extensions, with enriched tropical linear spaces."""

from .errors import GuardExceeded, IntegrityError, SchemaError, TractaError
from .gamma import INF, INT, RATIONAL, GammaKind, argmin_set, lex
from .matroids import (CircuitSet, PluckerVector, TractVector, circuits,
                       cocircuits, contract, delete, dual, fundamental_cocircuit,
                       incidence_sign, inner_product, is_covector, is_orthogonal,
                       is_strong_matroid, is_weak_matroid, min_supp, plucker,
                       pushforward, relation_holds, span_contains, underlying_bases,
                       vector)
from .series import HahnSeries
from .tracts import (DYADIC, HAHN, KRASNER, MODULUS, REGULAR, SIGN, THETA,
                     TRIANGLE, TRIVIAL_TO_K, FormalSum, TractDescriptor,
                     TractElement, check_tract_axioms, extension, formal_sum,
                     hom_apply, hypersum_contains)

__all__ = [n for n in dir() if not n.startswith("_")]
__version__ = "0.1.0"
