"""Finite additive bases: sumsets, interval statistics, spectra, extremal functions."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AdditiveBasesError,
    BudgetExceededError,
    DomainError,
    IntegerOverflowError,
    PropertyViolationError,
    SetParseError,
    VerificationError,
)
from .intset import GroundSet, IntSet, Interval, diameter, isolated_elements, maximal_runs, translate  # noqa: E402
from .sumset import SumsetProfile, ell, ell_sharp, h_fold_sumset, profile  # noqa: E402
from .extremal import (  # noqa: E402
    Certificate,
    ExtremalResult,
    count_bases,
    k_dual,
    m_basis,
    m_sharp,
    n_basis,
    n_sharp,
    strictness_scan,
)
from .spectrum import Spectrum, spectrum_int, spectrum_nonneg, spectrum_sharp  # noqa: E402
from .separation import (  # noqa: E402
    SeparationReport,
    check_bh,
    check_level,
    check_subset_sums,
    geometric_set,
)
from .constructions import (  # noqa: E402
    build_interval_2basis,
    normalize_translation,
    shift_to_nonneg,
    verify_construction,
)
