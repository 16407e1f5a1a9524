import unittest

from gevrey.testing.unit.solving.test_extension import (
    TestExtend,
    TestExtendErrors,
    TestGrowthProfile,
    TestSeedExpansion,
)

if __name__ == "__main__":
    unittest.main()
