from regsym.regularity.classify import classify, exchange_variables
from regsym.regularity.condition import check_condition
from regsym.regularity.decide import Analysis, analyze, decide, first_correction
from regsym.regularity.real_roots import count_real_roots, has_real_root
from regsym.regularity.separation import check_separation

__all__ = [
    "Analysis",
    "analyze",
    "check_condition",
    "check_separation",
    "classify",
    "count_real_roots",
    "decide",
    "exchange_variables",
    "first_correction",
    "has_real_root",
]
