import unittest

from gevrey.testing.unit.corpus.test_painleve import (
    TestCaseSerialization,
    TestCorpus,
    TestCorpusCheck,
    TestParameterSet,
)

if __name__ == "__main__":
    unittest.main()
