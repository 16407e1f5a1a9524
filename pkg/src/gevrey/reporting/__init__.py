from gevrey.reporting.pipeline import (
    classify,
    solve,
)
from gevrey.reporting.reports import (
    SCHEMA_VERSION,
    ClassificationReport,
    format_coefficient_table,
)
from gevrey.reporting.rendering import (
    ascii_cell,
    render_ascii,
    render_svg,
)
