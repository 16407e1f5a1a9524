import unittest

from gevrey.testing.unit.polygons.test_newton_polygons import TestPolygon
from gevrey.testing.unit.polygons.test_operators import (
    TestBuildOperator,
    TestOperatorOnSeries,
    TestSupport,
)
from gevrey.testing.unit.polygons.test_stirling import TestStirlingNumbers

if __name__ == "__main__":
    unittest.main()
