"""Twisted conjugacy classes, Reidemeister numbers and the twisted Burnside check."""

from ._core import (
    FiniteGroup,
    GroupMap,
    TwbError,
    burnside_check,
    character_table,
    congruence_check,
    enumerate_endomorphisms,
    eventual_image,
    mobius,
    periodic_class_counts,
    reidemeister_abelian,
    reidemeister_extension,
    reidemeister_number,
    run_corpus,
    torus_map_reidemeister,
    twisted_classes,
)

__all__ = [
    "FiniteGroup",
    "GroupMap",
    "TwbError",
    "burnside_check",
    "character_table",
    "congruence_check",
    "enumerate_endomorphisms",
    "eventual_image",
    "mobius",
    "periodic_class_counts",
    "reidemeister_abelian",
    "reidemeister_extension",
    "reidemeister_number",
    "run_corpus",
    "torus_map_reidemeister",
    "twisted_classes",
]
