"""Equi-isoclinic subspace packings: bounds, constructions, certificates."""

from eipack._eipack import (
    EipackError,
    SubspaceSequence,
    block_coherence,
    certify,
    certify_dim_Kn,
    classify_spark_vs_welch,
    construct_ei3,
    corner_dim,
    corner_dims,
    counterexample_eitff,
    counting_bounds,
    dim_L,
    direct_sum,
    eitff_2r,
    eitff_2rplus1_exists,
    hoggar_c_to_r,
    is_equi_isoclinic,
    load_sequence,
    max_ei_count_2r,
    naimark_complement,
    nonexistence_table,
    principal_angles,
    projection_gram,
    radon_hurwitz,
    save_sequence,
    spark_bound,
    spark_floor_from_coherence,
    trivial_eitff,
    welch_bound,
)

__all__ = [
    "EipackError",
    "SubspaceSequence",
    "block_coherence",
    "certify",
    "certify_dim_Kn",
    "classify_spark_vs_welch",
    "construct_ei3",
    "corner_dim",
    "corner_dims",
    "counterexample_eitff",
    "counting_bounds",
    "dim_L",
    "direct_sum",
    "eitff_2r",
    "eitff_2rplus1_exists",
    "hoggar_c_to_r",
    "is_equi_isoclinic",
    "load_sequence",
    "max_ei_count_2r",
    "naimark_complement",
    "nonexistence_table",
    "principal_angles",
    "projection_gram",
    "radon_hurwitz",
    "save_sequence",
    "spark_bound",
    "spark_floor_from_coherence",
    "trivial_eitff",
    "welch_bound",
]
