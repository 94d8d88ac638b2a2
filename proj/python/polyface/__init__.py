"""Polymatroids, Shannon-cone faces and entropic certificates on small ground sets."""

from ._polyface import (
    JointDistribution,
    Matroid,
    RankVector,
    catalog_matroid,
    catalog_names,
    check_face_membership,
    chi_membership,
    classify_face,
    enumerate_facets,
    facet_count,
    is_extreme_ray,
    is_integer_minimal,
    is_modular,
    is_polymatroid,
    is_tight,
    is_two_face,
    matus_certificate,
    minimal_face_dim,
    rank_one_dist,
    region_csv,
    region_membership,
    run_sweeps,
    tight_set,
    uniform_matroid_dist,
)

__all__ = [
    "JointDistribution",
    "Matroid",
    "RankVector",
    "catalog_matroid",
    "catalog_names",
    "check_face_membership",
    "chi_membership",
    "classify_face",
    "enumerate_facets",
    "facet_count",
    "is_extreme_ray",
    "is_integer_minimal",
    "is_modular",
    "is_polymatroid",
    "is_tight",
    "is_two_face",
    "matus_certificate",
    "minimal_face_dim",
    "rank_one_dist",
    "region_csv",
    "region_membership",
    "run_sweeps",
    "tight_set",
    "uniform_matroid_dist",
]
