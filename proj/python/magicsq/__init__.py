"""Even-order primitive magic squares: construction, verification, counting."""

from ._core import (
    Cell,
    CenterRows,
    DoubleEvenTrace,
    EnumerationResult,
    GappedSquare,
    LineKind,
    LineRef,
    MagicClass,
    MagicReport,
    MagicSquareError,
    SingleEvenTrace,
    Square,
    canonical_form,
    classify,
    classify_name,
    complement,
    construct_consecutive,
    construct_double_even,
    construct_single_even,
    count_magic,
    dihedral_images,
    is_associated,
    is_parallel,
    line_sums,
    magic_constant,
    parse_csv,
    parse_json,
    parse_square,
    parse_text,
    to_csv,
    to_json,
    to_text,
)

__all__ = [
    "Cell",
    "CenterRows",
    "DoubleEvenTrace",
    "EnumerationResult",
    "GappedSquare",
    "LineKind",
    "LineRef",
    "MagicClass",
    "MagicReport",
    "MagicSquareError",
    "SingleEvenTrace",
    "Square",
    "canonical_form",
    "classify",
    "classify_name",
    "complement",
    "construct_consecutive",
    "construct_double_even",
    "construct_single_even",
    "count_magic",
    "dihedral_images",
    "is_associated",
    "is_parallel",
    "line_sums",
    "magic_constant",
    "parse_csv",
    "parse_json",
    "parse_square",
    "parse_text",
    "to_csv",
    "to_json",
    "to_text",
]
