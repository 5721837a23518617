"""Topological-order analysis for translation-invariant qudit stabilizer codes."""

from .codelib import (
    CodeFileError,
    builtin,
    builtin_descriptor,
    builtin_names,
    format_code,
    parse_code_file,
)
from .laurent import LaurentPoly, PolyParseError, antipode, poly_format, poly_parse
from .matrixlab import (
    Region,
    RegionTooSmall,
    ge_field,
    hnf,
    mge,
    snf,
    span_check,
)
from .oracle import instantiate_torus, torus_gsd, verify_string_endpoints
from .pipeline import (
    DEFAULT_REGION,
    AnyonClass,
    AnyonTheory,
    StringOperator,
    analyze,
    anyon_equivalent,
    braiding,
    braiding_direct,
    check_to_condition,
    combine_strings,
    rearrange_em_pairs,
    solve_anyon_equation,
    stable_braiding,
    stable_spin,
    sweep_n,
    topological_spin,
)
from .symplectic import (
    PauliVector,
    StabilizerCode,
    Syndrome,
    commutes,
    excitation_map,
    single_paulis,
    symplectic_dot,
    validate_code,
)

__all__ = [
    "LaurentPoly",
    "PolyParseError",
    "antipode",
    "poly_parse",
    "poly_format",
    "PauliVector",
    "Syndrome",
    "StabilizerCode",
    "symplectic_dot",
    "commutes",
    "validate_code",
    "excitation_map",
    "single_paulis",
    "Region",
    "RegionTooSmall",
    "mge",
    "ge_field",
    "span_check",
    "hnf",
    "snf",
    "DEFAULT_REGION",
    "AnyonClass",
    "AnyonTheory",
    "StringOperator",
    "analyze",
    "anyon_equivalent",
    "braiding",
    "braiding_direct",
    "check_to_condition",
    "combine_strings",
    "rearrange_em_pairs",
    "solve_anyon_equation",
    "stable_braiding",
    "stable_spin",
    "sweep_n",
    "topological_spin",
    "instantiate_torus",
    "torus_gsd",
    "verify_string_endpoints",
    "builtin",
    "builtin_names",
    "builtin_descriptor",
    "parse_code_file",
    "format_code",
    "CodeFileError",
]

__version__ = "0.1.0"
