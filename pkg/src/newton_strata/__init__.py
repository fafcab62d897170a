"""Newton strata, generalized Kottwitz sets and bundle extensions for GL_n."""

from .extensions import (
    PathWitness,
    ext_contains,
    ext_enumerate,
    ext_semistable_pair,
    hong_conditions,
    tilde_ext_contains,
)
from .interpolation import interpolate_constant, interpolate_general, interpolate_shifted, is_valid_interpolant
from .kottwitz import basic_element, involution_check, is_hn_decomposable, iter_kottwitz, kottwitz_set
from .minute import fully_hn_gl, fully_hn_typeA, weakly_fully_hn_gl, weakly_fully_hn_typeA
from .polygon import (
    Polygon,
    PolygonSyntaxError,
    bundle_vector,
    direct_sum,
    dual,
    format_polygon,
    leq_dominance,
    parse,
    strongly_slopewise_dominates,
)
from .strata import (
    StrataConfig,
    WaStatus,
    extension_union,
    levi_reductions,
    mu_negative_splits,
    stratification_report,
    stratum_status,
)

__version__ = "0.1.0"

__all__ = [
    "Polygon",
    "PolygonSyntaxError",
    "parse",
    "format_polygon",
    "direct_sum",
    "dual",
    "bundle_vector",
    "leq_dominance",
    "strongly_slopewise_dominates",
    "kottwitz_set",
    "iter_kottwitz",
    "basic_element",
    "is_hn_decomposable",
    "involution_check",
    "PathWitness",
    "tilde_ext_contains",
    "hong_conditions",
    "ext_semistable_pair",
    "ext_enumerate",
    "ext_contains",
    "interpolate_general",
    "interpolate_constant",
    "interpolate_shifted",
    "is_valid_interpolant",
    "StrataConfig",
    "WaStatus",
    "levi_reductions",
    "mu_negative_splits",
    "extension_union",
    "stratum_status",
    "stratification_report",
    "fully_hn_gl",
    "weakly_fully_hn_gl",
    "fully_hn_typeA",
    "weakly_fully_hn_typeA",
]
