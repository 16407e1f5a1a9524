from gevrey.solving.extension import (
    MINIMUM_GROWTH_PROFILE_LENGTH,
    ExtendedSolution,
    GrowthPoint,
    SeedExpansion,
    extend,
    growth_profile,
    normalized_growth,
    residual_order,
)
