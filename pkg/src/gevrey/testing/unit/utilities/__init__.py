import unittest

from gevrey.testing.unit.utilities.test_amendments import (
    TestAmendInteger,
    TestAmendNaturalNumber,
    TestAmendRational,
    TestLeastCommonMultiplierSearch,
)

if __name__ == "__main__":
    unittest.main()
