"""Degree-3n nodal surfaces from shifted A2 folding polynomials.

Exact cyclotomic coefficient arithmetic, the folding/Chebyshev generating
polynomials with their trigonometric oracles, critical-point enumeration in
the fundamental triangle, singular-point certification for the surfaces and
hypersurfaces, and real-variant construction with mesh export.
"""

from .errors import VerificationError
from .numfield import I, OMEGA, OMEGA2, SQRT3, Cyclo12, Rational
from .poly import MultiPoly, poly_from_text, poly_to_text
from .folding import (
    FoldingCache,
    chebyshev_T,
    chebyshev_critical,
    folding_P,
    folding_Q,
    power_sum,
    trig_H,
    trig_H_grad,
    trig_h,
    trig_h_jacobian,
    trig_h_jacobian_det,
)
from .critical import (
    CriticalPoint,
    FamilyCensus,
    brute_force_scan,
    family_count_formula,
    family_enumerate,
    hessian_H,
    image_census,
    value_count_formula,
)
from .surfaces import (
    HypersurfaceSpec,
    RealNode,
    SingularPoint,
    SurfaceSpec,
    build_surface,
    count_singular_U,
    count_singular_V,
    detect_real_nodes,
    enumerate_singular_U,
    enumerate_singular_hyper,
    hypersurface_build,
    hypersurface_count,
    hypersurface_excess,
    infinity_check,
    mu_lower_bound,
    real_variant,
    real_variant_report,
    singular_report,
)

__version__ = "0.1.0"
