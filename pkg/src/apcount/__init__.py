"""Monochromatic 3-term arithmetic progressions in Z_n and D_2n.

Exact counting, algebraically certified lower bounds, extremal block
colorings, closed-form bound tables, and an exhaustive small-order
oracle that ties everything together.
"""

__version__ = "0.1.0"

from .bounds import BoundsRow, TableRecord, dihedral_bounds, emit_table, lower, theorem_row, upper
from .certify import (
    BoundReport,
    CertificateCase,
    CertificateMismatchError,
    ParityReport,
    SpectralReport,
    VerificationRecord,
    certificate_for,
    lower_bound,
    parity_check,
    spectral_report,
    verify_certificate,
)
from .circulant import (
    ApplicabilityError,
    CirculantForm,
    GENERATORS,
    add,
    circulant_min_eigenvalue,
    evaluate,
    evaluate_signs,
    form_from_json_obj,
    form_to_json_obj,
    make_identity,
    scale,
    shift,
)
from .construct import (
    Coloring,
    ConstructionResult,
    count_monochromatic,
    count_via_pn,
    extremal_coloring,
)
from .group_ap import (
    ApTriple,
    PairProfile,
    build_pn,
    enumerate_aps_dihedral,
    enumerate_aps_zn,
    num_aps_zn,
    pair_profile,
)
from .oracle import (
    CeilingExceededError,
    IncidenceIndex,
    OracleResult,
    ResultsCache,
    exact_minimum,
    incidence_index,
    iter_scan_counts,
)
