"""Nil 3-manifolds, their double coverings and Z2-indices."""

from ._nilbu import (
    Error,
    InvalidCharacter,
    InvalidInvariant,
    Manifold,
    MoveNotApplicable,
    NotAHomomorphism,
    NotNilError,
    NotSurjective,
    OrientationError,
    OverflowError,
    ParseError,
    Z2Char,
    classes,
    classify,
    coverings,
    double_cover,
    epimorphisms,
    h1,
    h1_str,
    involutions,
    parse,
    verify_cover,
    z2_index,
)

__all__ = [
    "Error",
    "InvalidCharacter",
    "InvalidInvariant",
    "Manifold",
    "MoveNotApplicable",
    "NotAHomomorphism",
    "NotNilError",
    "NotSurjective",
    "OrientationError",
    "OverflowError",
    "ParseError",
    "Z2Char",
    "classes",
    "classify",
    "coverings",
    "double_cover",
    "epimorphisms",
    "h1",
    "h1_str",
    "involutions",
    "parse",
    "verify_cover",
    "z2_index",
]
