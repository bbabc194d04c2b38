"""Exact construction, verification and analysis of projective t-designs in
RP^n, CP^n and HP^n."""
from .bma import (
    BoseMesnerAlgebra,
    E_trace_comparison,
    build,
    matrix_rank,
    verify_closure,
    verify_idempotents,
    verify_mult_table,
)
from .census import classify, rationality_table, sweep
from .designs import (
    averaging_check,
    construct_cp1_5design,
    construct_rp1_polygon,
    is_t_design,
    rp1_rational,
    tightness,
)
from .jacobi import (
    DesignParams,
    R_poly,
    chi,
    design_bound,
    integrate_poly,
    jacobi_poly,
    rank_closed,
    rank_last,
    shifted_P,
    tight_angle_set,
    weight_moment,
)
from .projective import PointSet, angle_set, gram, load_design, save_design

__version__ = "0.1.0"
