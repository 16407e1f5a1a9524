from gevrey.utilities.amendments import (
    amend_integer,
    amend_natural_number,
    amend_rational,
    find_least_common_multiplier,
)
