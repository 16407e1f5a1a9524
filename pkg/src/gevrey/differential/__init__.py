from gevrey.differential.differential_sums import (
    MAXIMUM_DERIVATIVE_ORDER,
    DiffMonomial,
    DifferentialSum,
    format_differential_sum,
)
from gevrey.differential.parsing import (
    RESERVED_NAMES,
    amend_parameters,
    parse_differential_sum,
)
from gevrey.differential.variations import (
    BASES,
    LinearDifferentialOperator,
    apply_first_variation,
    change_variable,
    evaluate_on_series,
    evaluate_operator,
    first_variation,
    partial_highest_nonzero,
)
