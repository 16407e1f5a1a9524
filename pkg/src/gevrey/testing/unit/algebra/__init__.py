import unittest

from gevrey.testing.unit.algebra.test_exponents import TestRamifiedExponent
from gevrey.testing.unit.algebra.test_gaussian_rationals import (
    TestAmendGaussianRational,
    TestExactRoots,
    TestGaussianRational,
)
from gevrey.testing.unit.algebra.test_puiseux_series import TestPuiseuxSeries

if __name__ == "__main__":
    unittest.main()
