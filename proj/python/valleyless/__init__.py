"""Exact enumeration of valleyless sequences and permutations by valley count."""

from ._core import (
    TruncatedSeries,
    a_n_recurrence,
    b_n_closed,
    b_n_recursive,
    binomial,
    composition_to_valleyless_perm,
    count_valley_perms,
    count_valleyless_nk,
    count_valleyless_npk,
    count_valleys,
    descent_set,
    eulerian,
    generate_k_valley_permutations,
    generate_valleyless_permutations,
    gf_table1_closed_form,
    gf_valley_perms,
    gf_valleyless_bivariate,
    inversion_count,
    inversion_table,
    is_valleyless,
    permutation_from_inversion_table,
    q_inversion_products,
    theta_decode,
    theta_encode,
    v_xqy,
    valleyless_perm_to_composition,
    valleyless_sequences,
    verify_all,
)

__all__ = [name for name in dir() if not name.startswith("_")]
