"""Cyclic locally recoverable codes with complementary duals.

Build codes over small finite fields from defining sets, certify their
dimension, LCD property, locality, and distance bounds, and simulate
single-erasure repair.
"""

from .galois import Field, FieldElement, make_field, field_of_size, nth_root_of_unity
from .polyring import Poly
from .cosets import CyclotomicCoset, DefiningSet, all_cosets, cyclotomic_coset
from .cyclic import CyclicCode, LcdVerdict, from_defining_set, dual_code, is_lcd
from .analysis import CodeReport, LrcProfile, build_report, lrc_singleton_bound

__all__ = [
    "Field",
    "FieldElement",
    "make_field",
    "field_of_size",
    "nth_root_of_unity",
    "Poly",
    "CyclotomicCoset",
    "DefiningSet",
    "all_cosets",
    "cyclotomic_coset",
    "CyclicCode",
    "LcdVerdict",
    "from_defining_set",
    "dual_code",
    "is_lcd",
    "CodeReport",
    "LrcProfile",
    "build_report",
    "lrc_singleton_bound",
]

__version__ = "0.1.0"
