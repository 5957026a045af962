from converse.analytic.cusps import CuspSpec, check_level_shape, cusp_spec, cusp_specs, lemma6_gamma
from converse.analytic.series import (
    FourierSeries,
    eisenstein_chi3,
    eta_quotient,
    euler_expand,
    local_factors_from,
)
from converse.analytic.schemas import LocalFactorSpec
from converse.analytic.evaluate import evaluate, sample_points, slash_eval, tail_bound
from converse.analytic.checks import (
    check_invariance,
    cusp_constant_term,
    fricke_check,
    hecke_eigen_check,
)
from converse.analytic.forms import load_form

__all__ = [
    "CuspSpec",
    "FourierSeries",
    "LocalFactorSpec",
    "check_invariance",
    "check_level_shape",
    "cusp_constant_term",
    "cusp_spec",
    "cusp_specs",
    "eisenstein_chi3",
    "eta_quotient",
    "euler_expand",
    "evaluate",
    "fricke_check",
    "hecke_eigen_check",
    "lemma6_gamma",
    "load_form",
    "local_factors_from",
    "sample_points",
    "slash_eval",
    "tail_bound",
]
