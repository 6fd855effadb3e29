"""Exact weight spectra of Reed-Muller codes."""

from .apset import APSet, ExpansionLimitError, Segment
from .codes import (
    BooleanFunction,
    ExtField,
    bch_code,
    evaluate,
    extended_bch_code,
    extended_bch_rm_aligned,
    rm_code,
    rm_dimension,
)
from .enumeration import (
    Distribution,
    EnumerationBudgetError,
    macwilliams_transform,
    weight_distribution,
    weight_spectrum,
)
from .gf2 import BitMatrix, BitVector, LinearCode
from .spectra import (
    ConjectureReport,
    SpectrumResult,
    UnsupportedCodeError,
    baseline_table,
    closed_form_m_minus_3,
    closed_form_m_minus_4,
    conjecture_check,
    derive_spectrum,
    kt_admissible,
    kt_witness,
    mceliece_exponent,
    sandwich,
    sumset_step,
    upper_bound,
    witness_search,
)

__all__ = [
    "APSet", "ExpansionLimitError", "Segment",
    "BooleanFunction", "ExtField", "bch_code", "evaluate", "extended_bch_code",
    "extended_bch_rm_aligned", "rm_code", "rm_dimension",
    "Distribution", "EnumerationBudgetError", "macwilliams_transform",
    "weight_distribution", "weight_spectrum",
    "BitMatrix", "BitVector", "LinearCode",
    "ConjectureReport", "SpectrumResult", "UnsupportedCodeError", "baseline_table",
    "closed_form_m_minus_3", "closed_form_m_minus_4", "conjecture_check", "derive_spectrum",
    "kt_admissible", "kt_witness", "mceliece_exponent", "sandwich", "sumset_step",
    "upper_bound", "witness_search",
]
