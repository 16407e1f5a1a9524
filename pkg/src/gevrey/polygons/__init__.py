from gevrey.polygons.newton_polygons import (
    GEVREY_INTERPRETATION,
    Edge,
    NewtonPolygon,
    gevrey_candidates,
    polygon,
)
from gevrey.polygons.operators import (
    OperatorOnSeries,
    SupportPoint,
    build_L0,
    build_weighted_operator,
    from_euler_basis,
    support,
    to_euler_basis,
)
from gevrey.polygons.stirling import (
    DEFAULT_MAXIMUM_ORDER,
    StirlingTables,
    get_stirling_tables,
    stirling1_signed,
    stirling2,
)
