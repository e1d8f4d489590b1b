"""Generalized product-matrix MSR regenerating codes over prime fields."""

from ._gmsr import (
    CodeParams,
    DataError,
    ParamError,
    RepairPacket,
    SecureLayout,
    Share,
    build_message_matrix,
    derive_params,
    embed_via_secure,
    encode,
    extract_symbols,
    feasibility_bound,
    free_positions,
    helper_compute,
    leakage_check,
    reconstruct,
    regenerate,
    repair_vector,
    secure_build,
    secure_layout,
    select_points,
)

__all__ = [
    "CodeParams",
    "DataError",
    "ParamError",
    "RepairPacket",
    "SecureLayout",
    "Share",
    "build_message_matrix",
    "derive_params",
    "embed_via_secure",
    "encode",
    "extract_symbols",
    "feasibility_bound",
    "free_positions",
    "helper_compute",
    "leakage_check",
    "reconstruct",
    "regenerate",
    "repair_vector",
    "secure_build",
    "secure_layout",
    "select_points",
]
