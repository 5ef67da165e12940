"""Covering radii, perfectness and list-decoding bounds for linear codes
in the b-symbol metric, computed exactly by exhaustive enumeration."""

__version__ = "0.1.0"

from .gf import Elem, FieldSpec, field_arith, field_make, field_of_order  # noqa: E402
from .linalg import LinearCode, dual, enumerate_codewords, rref, window_independent  # noqa: E402
from .bsymbol import (  # noqa: E402
    BProfile,
    b_profile,
    ball_volume_b,
    covering_radius_b,
    d_b,
    min_distance_b,
    pi_b,
    weight_profile_b,
    wt_b,
)
from .families import block_hamming, cyclic_code, hamming_code, paper_example, rs_code  # noqa: E402
from .bounds import bound_report, perfect_check, sphere_packing_scan, subcode_lower_bound  # noqa: E402
from .listdecode import list_size_at_radius, singleton_list_bounds  # noqa: E402
