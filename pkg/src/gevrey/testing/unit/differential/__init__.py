import unittest

from gevrey.testing.unit.differential.test_differential_sums import (
    TestDifferentialSum,
)
from gevrey.testing.unit.differential.test_parsing import (
    TestAmendParameters,
    TestParseDifferentialSum,
)
from gevrey.testing.unit.differential.test_variations import (
    TestChangeVariable,
    TestEvaluation,
    TestFirstVariation,
)

if __name__ == "__main__":
    unittest.main()
