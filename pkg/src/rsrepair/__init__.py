"""Error-resilient trace repair of full-length Reed-Solomon codes."""

from .bounds import BoundsReport, bounds_report, exact_distance
from .gf_tower import Tower, dual_basis, get_tower, make_tower
from .list_decode import best_gs_params, gs_params, modified_gs_decode
from .rs_core import GrsCode, bw_decode, encode, grs_dual, rs_code
from .trace_repair import (RepairFailure, build_trace_code, decode_trace_word, make_scheme,
                           repair_f0, repair_with_errors, traces_of)

__all__ = [
    "BoundsReport", "GrsCode", "RepairFailure", "Tower", "best_gs_params", "bounds_report",
    "build_trace_code", "bw_decode", "decode_trace_word", "dual_basis", "encode",
    "exact_distance", "get_tower", "grs_dual", "gs_params", "make_scheme", "make_tower",
    "modified_gs_decode", "repair_f0", "repair_with_errors", "rs_code", "traces_of",
]
__version__ = "0.1.0"
