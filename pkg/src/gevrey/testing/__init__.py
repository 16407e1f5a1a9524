import unittest

from gevrey.testing.unit import (
    TestAmendGaussianRational,
    TestAmendInteger,
    TestAmendNaturalNumber,
    TestAmendParameters,
    TestAmendRational,
    TestBuildOperator,
    TestCaseSerialization,
    TestChangeVariable,
    TestClassificationReport,
    TestClassifyCommand,
    TestCorpus,
    TestCorpusCheck,
    TestCorpusCheckCommand,
    TestDifferentialSum,
    TestEvaluation,
    TestExactRoots,
    TestExtend,
    TestExtendErrors,
    TestFirstVariation,
    TestGaussianRational,
    TestGrowthProfile,
    TestLeastCommonMultiplierSearch,
    TestOperatorOnSeries,
    TestOtherCommands,
    TestParameterSet,
    TestParseDifferentialSum,
    TestPipeline,
    TestPolygon,
    TestPuiseuxSeries,
    TestRamifiedExponent,
    TestRenderAscii,
    TestRenderSvg,
    TestSeedExpansion,
    TestSolveCommand,
    TestStirlingNumbers,
    TestSupport,
)

if __name__ == "__main__":
    unittest.main()
