"""Skew standard immaculate tableaux, 0-Hecke actions, Hecke posets, and
quasisymmetric functions, backed by an exact C++ core.

Compositions are lists of positive integers with rows indexed bottom to top;
tableaux store only their skew-cell entries.  Generator words are lists in
application order: the first listed generator acts first.
"""

from ._core import (
    KINDS,
    HeckePoset,
    Tableau,
    __version__,
    branching_check,
    build_poset,
    cells,
    char_tableaux,
    check_relations,
    closure_check,
    comp_of,
    complement,
    composition_series_check,
    contains,
    cyclicity_check,
    descent_set,
    fundamental_poly,
    generate_fillings,
    generate_set,
    generate_sit,
    gf_fillings,
    hecke_apply,
    hecke_apply_word,
    hooked_product,
    inv_alpha_beta,
    inversions,
    is_set,
    is_sit,
    leftmost_column_cells,
    phi,
    psi,
    rank_formula,
    s0,
    scol,
    set_cyclicity_check,
    set_of,
    sit_count,
    skew_schur_poly,
    split,
    srow,
    straighten_from_bottom,
    straighten_to_top,
    to_poly,
    transpose,
    two_alphabet_check,
)

__all__ = [
    "KINDS",
    "HeckePoset",
    "Tableau",
    "__version__",
    "branching_check",
    "build_poset",
    "cells",
    "char_tableaux",
    "check_relations",
    "closure_check",
    "comp_of",
    "complement",
    "composition_series_check",
    "contains",
    "cyclicity_check",
    "descent_set",
    "fundamental_poly",
    "generate_fillings",
    "generate_set",
    "generate_sit",
    "gf_fillings",
    "hecke_apply",
    "hecke_apply_word",
    "hooked_product",
    "inv_alpha_beta",
    "inversions",
    "is_set",
    "is_sit",
    "leftmost_column_cells",
    "phi",
    "psi",
    "rank_formula",
    "s0",
    "scol",
    "set_cyclicity_check",
    "set_of",
    "sit_count",
    "skew_schur_poly",
    "split",
    "srow",
    "straighten_from_bottom",
    "straighten_to_top",
    "to_poly",
    "transpose",
    "two_alphabet_check",
]
