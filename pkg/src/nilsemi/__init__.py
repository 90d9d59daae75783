"""Nilpotent semigroups of coclass 0, 1 and 2: tables, canonical forms,
family presentations, exhaustive search and closed-form counts."""

from .canon import CountMode, are_equivalent, canonical_key, dedup, is_self_dual
from .counting import CountQuery, formula_count, table1_reference
from .tables import MulTable, analyze, dual, parse_table, format_table, validate_table

__all__ = [
    "CountMode", "CountQuery", "MulTable", "analyze", "are_equivalent", "canonical_key",
    "dedup", "dual", "format_table", "formula_count", "is_self_dual", "parse_table",
    "table1_reference", "validate_table",
]
__version__ = "0.1.0"
