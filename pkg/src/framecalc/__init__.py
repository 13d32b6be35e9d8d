"""Finite-frame numerical analysis.

Construct frames in R^n, compute exact duals and the full fractional-power
family of reconstruction systems through spectral calculus on the frame
operator, approximate duals with three perturbative schemes whose analytical
error bounds are verified empirically, and reproduce a smooth tight window
for modulated-translate systems.

See the demos/ directory for narrative walkthroughs and the ``framecalc``
command line for file-based workflows.
"""

from .approx import (
    BinomialBounds,
    ConvergenceReport,
    ConvergenceRow,
    LogRegime,
    RegimeKind,
    Scheme,
    binomial_bounds,
    binomial_half_coefficients,
    binomial_remainder_norm,
    binomial_tight,
    bound_satisfied,
    log_bound,
    log_dual,
    log_exact_inverse,
    log_regime,
    log_remainder_norm,
    neumann_R,
    neumann_bound,
    neumann_dual,
    run_convergence,
    write_csv,
    zn_bound,
)
from .frames import (
    BoundCheckReport,
    Frame,
    FrameDiagnostics,
    NotAFrameError,
    alpha_frame,
    analysis,
    commuting_scale,
    diagnostics,
    dual_frame,
    frame_from_dict,
    frame_operator,
    frame_to_json,
    load_frame,
    optimal_bounds,
    proposition1_check,
    reconstruct,
    synthesis,
)
from .gabor import (
    GaborParams,
    TightnessReport,
    sample_grid,
    smooth_nu,
    tightness_check,
    weyl_heisenberg_apply,
    window_g,
)
from .linalg import (
    EigenConvergenceError,
    EigenDecomposition,
    jacobi_eigh,
    operator_norm,
    spectral_apply,
    symmetrize,
)
from .reference import (
    CheckResult,
    builtin_checks,
    demo_frame_2d,
    demo_frame_3d,
    demo_gabor_params,
    gabor_probe_signals,
)

__version__ = "0.1.0"

__all__ = [
    "BinomialBounds",
    "BoundCheckReport",
    "CheckResult",
    "ConvergenceReport",
    "ConvergenceRow",
    "EigenConvergenceError",
    "EigenDecomposition",
    "Frame",
    "FrameDiagnostics",
    "GaborParams",
    "LogRegime",
    "NotAFrameError",
    "RegimeKind",
    "Scheme",
    "TightnessReport",
    "alpha_frame",
    "analysis",
    "binomial_bounds",
    "binomial_half_coefficients",
    "binomial_remainder_norm",
    "binomial_tight",
    "bound_satisfied",
    "builtin_checks",
    "commuting_scale",
    "demo_frame_2d",
    "demo_frame_3d",
    "demo_gabor_params",
    "diagnostics",
    "dual_frame",
    "frame_from_dict",
    "frame_operator",
    "frame_to_json",
    "gabor_probe_signals",
    "jacobi_eigh",
    "load_frame",
    "log_bound",
    "log_dual",
    "log_exact_inverse",
    "log_regime",
    "log_remainder_norm",
    "neumann_R",
    "neumann_bound",
    "neumann_dual",
    "operator_norm",
    "optimal_bounds",
    "proposition1_check",
    "reconstruct",
    "run_convergence",
    "sample_grid",
    "smooth_nu",
    "spectral_apply",
    "symmetrize",
    "synthesis",
    "tightness_check",
    "weyl_heisenberg_apply",
    "window_g",
    "write_csv",
    "zn_bound",
]
