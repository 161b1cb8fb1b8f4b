"""fuzzymetrics: fuzzy numbers via alpha-cut level families, with certified
sendograph (D), endograph (Gamma), supremum (d_inf) and L_q (d_q) metrics,
independent brute-force oracles, and seeded inequality campaigns.
"""

from .certified import CertifiedValue
from .core import (
    Cut,
    FuzzyNumber,
    add,
    convex_combo,
    cut_at,
    dumps_fuzzy,
    fuzzy_equal,
    fuzzy_from_dict,
    fuzzy_to_dict,
    load_fuzzy,
    loads_fuzzy,
    make_fuzzy_number,
    save_fuzzy,
    scalar_mul,
    support_radius,
    translate,
)
from .errors import (
    DimensionMismatch,
    DomainError,
    FuzzyError,
    MissingBoundaryLevel,
    NestednessViolation,
    NonConvexCut,
    NonFiniteCoordinate,
    ResourceLimit,
    SpecError,
)
from .generators import (
    PRNG_NAME,
    FuzzyPath,
    crisp_interval,
    crisp_point,
    crisp_polygon,
    generate,
    make_sequence,
    mixture_path,
    random_fuzzy,
    sample_path,
    scaling_path,
    threshold_number,
    translation_path,
    trapezoidal,
    triangular,
)
from .geometry import (
    SetSample,
    dist_point_to_cut,
    hausdorff_cuts,
    hausdorff_sample,
    sendograph_boundary,
    sendograph_sample,
)
from .metrics import metric_D, metric_Gamma, metric_dinf, metric_dq
from .oracle import oracle_D, oracle_Gamma, oracle_dq
from .propsuite import (
    CampaignReport,
    check_chain,
    check_convergence,
    check_convex_combo,
    check_endograph,
    check_metric_axioms,
    check_oracle_agreement,
    check_scalar,
    check_sum,
    check_support_bounded,
    run_all,
)

__version__ = "0.1.0"
