"""Exact combinatorics of cyclic quiver varieties at roots of unity."""

from ._cyclotome import (
    CycIndex,
    Error,
    Pair,
    Quiver,
    VVector,
    WVector,
    all_orientations,
    d_form,
    dominant_count,
    enumerate_l_dominant,
    enumerate_l_dominant_bruteforce,
    hl_form,
    hom_dim,
    iota,
    is_l_dominant,
    kostant_partitions,
    leading_exponent,
    leading_exponent_tilde,
    lift,
    parse_pair,
    parse_v,
    parse_w,
    residual,
    script_N,
    serre_quotient_dims,
    twist_exponent,
    v_f,
    v_sigma_f,
    verify,
    verify_json,
    w_f,
)

__all__ = [name for name in dir() if not name.startswith("_")]
