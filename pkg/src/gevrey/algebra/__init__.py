from gevrey.algebra.exponents import (
    RamifiedExponent,
    exponent_value,
)
from gevrey.algebra.gaussian_rationals import (
    GaussianRational,
    amend_gaussian_rational,
    exact_fourth_root,
    exact_square_root,
    format_rational,
)
from gevrey.algebra.puiseux_series import (
    PuiseuxSeries,
    euler_apply,
    format_series,
    series_add,
    series_diff,
    series_mul,
)
