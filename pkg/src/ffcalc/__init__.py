"""ffcalc: exact slope calculus on the Fargues-Fontaine curve over a
geometric point -- Banach-Colmez dimensions, moduli-stack stratum
dimensions, and the Weyl double-coset combinatorics indexing them."""

__version__ = "0.1.0"

from .bundles import (
    Bundle,
    HNPolygon,
    Slope,
    TorsionSheaf,
    ZERO,
    degree,
    dominates,
    dual,
    hn_polygon,
    rank,
    stable,
    tensor,
    truncate,
    twist,
)
from .banach_colmez import (
    ComplexDims,
    HomExtDims,
    SmoothDim,
    TwoTermComplex,
    complex_h_dims,
    ext1_torsion_bundle_dim,
    h0_dim,
    h1_dim,
    picard_dim,
    section_is_smooth_point,
    torsion_h0_dim,
    torsion_hom_ext_dims,
)
from .moduli import (
    BifiltrationData,
    Composition,
    DegreeVector,
    GradedFlagData,
    MarginalViolation,
    bun_g_dim,
    bun_p_stratum_dim,
    d_nu,
    d_nu_pairing,
    filtered_end_degree,
    laumon_stratum_dim,
    relpos_stratum_dim,
    validate_bifiltration,
)
from .weyl import (
    WeylElement,
    YoungSubgroup,
    bruhat_leq,
    contingency_count,
    coset_rep_from_matrix,
    double_coset_size,
    is_minimal_rep,
    length,
    matrix_from_rep,
    min_double_coset_reps,
    reduced_word,
)
