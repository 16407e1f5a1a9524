import unittest

from gevrey.testing.unit.algebra import (
    TestAmendGaussianRational,
    TestExactRoots,
    TestGaussianRational,
    TestPuiseuxSeries,
    TestRamifiedExponent,
)
from gevrey.testing.unit.corpus import (
    TestCaseSerialization,
    TestCorpus,
    TestCorpusCheck,
    TestParameterSet,
)
from gevrey.testing.unit.differential import (
    TestAmendParameters,
    TestChangeVariable,
    TestDifferentialSum,
    TestEvaluation,
    TestFirstVariation,
    TestParseDifferentialSum,
)
from gevrey.testing.unit.polygons import (
    TestBuildOperator,
    TestOperatorOnSeries,
    TestPolygon,
    TestStirlingNumbers,
    TestSupport,
)
from gevrey.testing.unit.reporting import (
    TestClassificationReport,
    TestClassifyCommand,
    TestCorpusCheckCommand,
    TestOtherCommands,
    TestPipeline,
    TestRenderAscii,
    TestRenderSvg,
    TestSolveCommand,
)
from gevrey.testing.unit.solving import (
    TestExtend,
    TestExtendErrors,
    TestGrowthProfile,
    TestSeedExpansion,
)
from gevrey.testing.unit.utilities import (
    TestAmendInteger,
    TestAmendNaturalNumber,
    TestAmendRational,
    TestLeastCommonMultiplierSearch,
)

if __name__ == "__main__":
    unittest.main()
