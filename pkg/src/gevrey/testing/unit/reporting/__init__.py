import unittest

from gevrey.testing.unit.reporting.test_cli import (
    TestClassifyCommand,
    TestCorpusCheckCommand,
    TestOtherCommands,
    TestSolveCommand,
)
from gevrey.testing.unit.reporting.test_reports import (
    TestClassificationReport,
    TestPipeline,
)
from gevrey.testing.unit.reporting.test_rendering import (
    TestRenderAscii,
    TestRenderSvg,
)

if __name__ == "__main__":
    unittest.main()
