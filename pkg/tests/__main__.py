#!/usr/bin/env python3

""" Runs the tests. """

from typing import List

import unittest

# Test classes
from tests.basis_test import SturmianTest, QuadratureTest, BandedTest
from tests.hamiltonian_test import AssemblyTest
from tests.green_test import TailTest, ContinuedFractionTest
from tests.potentials_test import ModelsTest, LowRankTest
from tests.solver_test import MullerTest, StatesTest, SpectrumTest
from tests.config_test import ConfigTest
from tests.cli_test import CliTest
from tests.acceptance_test import BarrierTest, LowRankAccuracyTest, ConfinementTest

def runTests (tests: List[unittest.TestCase]) -> unittest.runner.TextTestRunner:
    """
    Runs tests of all passed unittest.TestCase classes

    :param tests: list of unittest.TestCase classes
    """

    loader = unittest.TestLoader()

    suitesList = []
    for test in tests:
        suite = loader.loadTestsFromTestCase(test)
        suitesList.append(suite)

    bigSuite = unittest.TestSuite(suitesList)

    runner = unittest.TextTestRunner()
    results = runner.run(bigSuite)

    return results

if __name__ == '__main__':
    tests = [
        SturmianTest,
        QuadratureTest,
        BandedTest,
        AssemblyTest,
        TailTest,
        ContinuedFractionTest,
        ModelsTest,
        LowRankTest,
        MullerTest,
        StatesTest,
        SpectrumTest,
        ConfigTest,
        CliTest,
        # slow, full reproduction runs
        BarrierTest,
        LowRankAccuracyTest,
        ConfinementTest,
        ]
    runTests(tests)
