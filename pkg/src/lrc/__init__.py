"""Optimal locally recoverable erasure codes over GF(2^w).

Parity-check constructions, a systematic encoder with local-first erasure
decoding, and exhaustive checks of distance, optimality and PMDS/SD
recoverability.
"""

from .gf import FieldSpec, field_new, parse_field
from .linalg import GfMatrix, format_matrix, parse_matrix
from .constructions import (CodeParamsReport, LrcParams, ParameterError, Variant, build,
                            build_diag, build_diag_ext, build_gc, build_gc_ext,
                            ers_matrix, mod_reduce, report, rs_matrix, singleton_bound,
                            special_bound)
from .codec import (CodeLayout, ErasurePattern, LrcCode, UnrecoverableError, decode,
                    decode_generic, decode_row_local, encode, make_layout, syndrome)
from .verify import (check_pmds, check_sd, distance_at_least, is_optimal, min_distance,
                     xor_collapse)

__version__ = "0.1.0"
