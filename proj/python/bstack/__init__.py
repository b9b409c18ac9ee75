from ._bstack import (
    ArithmeticError,
    EngineError,
    InputError,
    analyze,
    catalog_examples,
    catalog_families,
    count_points,
    export_poset,
    group_info,
    theorem_b,
    theorem_c,
)

__all__ = [
    "ArithmeticError",
    "EngineError",
    "InputError",
    "analyze",
    "catalog_examples",
    "catalog_families",
    "count_points",
    "export_poset",
    "group_info",
    "theorem_b",
    "theorem_c",
]
