"""Tropical density and stable type of degenerating elliptic K3 families."""

from ._k3deg import (
    K3DegError,
    analyze,
    canonical,
    chamber_count,
    count_vectors,
    density_csv,
    density_svg,
    gm_weights,
    lambda_abe,
    lambda_seg,
    nonnormal_count,
    normalization_preimage_count,
    oracle,
    root_lattice,
    stable_type_charges,
    strata,
    wps_weights,
)

__all__ = [
    "K3DegError",
    "analyze",
    "canonical",
    "chamber_count",
    "count_vectors",
    "density_csv",
    "density_svg",
    "gm_weights",
    "lambda_abe",
    "lambda_seg",
    "nonnormal_count",
    "normalization_preimage_count",
    "oracle",
    "root_lattice",
    "stable_type_charges",
    "strata",
    "wps_weights",
]
