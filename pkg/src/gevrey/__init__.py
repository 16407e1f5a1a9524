from gevrey.algebra import (
    GaussianRational,
    PuiseuxSeries,
    RamifiedExponent,
)
from gevrey.corpus import (
    CorpusCase,
    corpus,
    run_corpus_check,
)
from gevrey.differential import (
    DifferentialSum,
    LinearDifferentialOperator,
    change_variable,
    first_variation,
    parse_differential_sum,
)
from gevrey.errors import (
    CorpusMismatch,
    DegenerateLeadingCoefficient,
    DifferentialSumSyntaxError,
    GevreyError,
    ResonanceError,
    SeedInconsistent,
    UncertifiedLeading,
)
from gevrey.polygons import (
    NewtonPolygon,
    OperatorOnSeries,
    build_L0,
    gevrey_candidates,
    polygon,
    support,
)
from gevrey.reporting import (
    ClassificationReport,
    classify,
    render_ascii,
    render_svg,
    solve,
)
from gevrey.solving import (
    ExtendedSolution,
    SeedExpansion,
    extend,
    growth_profile,
    residual_order,
)

# NOTE: Do not pollute module root with gevrey.testing submodule!!!
