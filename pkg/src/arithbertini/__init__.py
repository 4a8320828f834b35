"""Exact arithmetic Bertini: bad-hyperplane hypersurfaces and small smooth sections."""

from .arithseek import (
    NormBudgetNotReached,
    NormFamily,
    ProblemSpec,
    SectionCertificate,
    find_small_smooth_section,
    l1_theta_norm,
    reduce_basis,
    verify_certificate,
)
from .bertini import (
    BadLocusCertificate,
    BadLocusCoversSpace,
    LinearSeries,
    PointInBaseLocus,
    bad_hyperplane_hypersurface,
    degree_bound_profile,
    level_basis,
    restricted_bad_locus,
    singular_locus_system,
    universal_hyperplane_system,
)
from .cnsolve import GridSpec, OffsetVector, PolyOracle, cn_search, combined_grid_search, poschr_offsets
from .elimination import BiSystem, HypersurfaceCertificate, eliminate_projection, sylvester_resultant
from .exactalg import GF, QQ, MultiPoly
from .variety import VarietyPresentation, hilbert_bound, ideal_graded_piece, smoothness_check

__version__ = "0.1.0"
