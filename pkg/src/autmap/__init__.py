"""Exact reduction of Diophantine equations to automorphism-mapping instances."""

__version__ = "0.1.0"

from .polyring import (
    NEG_INFINITY,
    Polynomial,
    VarRegistry,
    dehomogenize,
    evaluate,
    homogenize,
    parse_auto,
    parse_poly,
    partial_derivative,
    render_poly,
    resultant_univariate,
    total_degree,
)
from .groebner import GroebnerBasis, TermOrder, buchberger, is_unit_ideal, normal_form
from .smoothing import (
    SmoothingResult,
    build_candidate,
    is_smooth_affine_hypersurface,
    jacobian_generators,
    smooth_lift,
)
from .lattice import (
    AffineLatticeMap,
    GElement,
    LatticeSet,
    apply,
    build_S,
    g_to_affine,
    maps_S_to_S,
    stabilizer_bruteforce,
)
from .elliptic import (
    CURVE_37A1,
    INFINITY,
    P_37A1,
    Curve,
    ECPoint,
    add,
    infinite_order_sanity,
    multiples_table,
    neg,
    on_curve,
    scalar_mul,
)
from .reducer import (
    InstanceDescriptor,
    compile_instance,
    four_squares_transform,
    point_in_Z,
    sigma_image,
)
from .oracle import (
    SearchReport,
    check_equivalence,
    check_instance,
    search_automorphisms,
    search_integer_zeros,
    univariate_smoothness_oracle,
)
