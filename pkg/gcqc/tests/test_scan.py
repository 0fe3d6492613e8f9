"""Test the low-weight scanner."""
from unittest import TestCase
import numpy as np
from gcqc.catalog import FIVE_QUBIT, STEANE
from gcqc.excs import BudgetExceeded
from gcqc.misc import Budgets
from gcqc.scan import LowWeightScanner, pauli_values, vector_count
from gcqc.symplectic import (from_pauli, stabilizer_code,
                             symplectic_products, symplectic_weight)

def scanner_for(generators, threads=1):
    """Scanner whose hits commute with every generator."""
    code = stabilizer_code(generators.split())
    n, values = code.n, pauli_values(2)
    singles = np.zeros((n, len(values), 2 * n), dtype=np.int64)
    for pos in range(n):
        for idx, (x, z) in enumerate(values):
            singles[pos, idx, pos] = x
            singles[pos, idx, n + pos] = z
    keys = symplectic_products(singles.reshape(-1, 2 * n), code.generators)
    return code, LowWeightScanner(keys.reshape(n, len(values), -1), 2,
                                  threads=threads)

class TestCounts(TestCase):
    """Test vector counts."""
    def test_counts(self):
        """Weight-w vectors number C(n, w) (p^2 - 1)^w."""
        self.assertEqual(vector_count(5, 1), 15)
        self.assertEqual(vector_count(48, 1) + vector_count(48, 2), 10296)
        self.assertEqual(vector_count(4, 2, p=3), 6 * 64)
        self.assertEqual(pauli_values(2), [(0, 1), (1, 0), (1, 1)])

class TestScanner(TestCase):
    """Test ascending scans."""
    def test_five_qubit(self):
        """No weight-1 or weight-2 vector commutes with the stabilizer."""
        code, scanner = scanner_for(FIVE_QUBIT)
        result = scanner.search(2)
        self.assertIsNone(result.weight)
        self.assertEqual(result.clean, [1, 2])
        self.assertEqual(result.tested, 15 + 90)
    def test_witness(self):
        """The witness search continues one weight up."""
        code, scanner = scanner_for(FIVE_QUBIT)
        result = scanner.search(2, find_witness=True)
        self.assertEqual(result.weight, 3)
        self.assertEqual(symplectic_weight(result.witness), 3)
        self.assertTrue(code.normalizer.contains(result.witness).all())
    def test_first_hit(self):
        """A hit below the target stops the scan."""
        _, scanner = scanner_for('XXXX ZZZZ')
        result = scanner.search(3)
        self.assertEqual(result.weight, 2)
        self.assertEqual(result.clean, [1])
        self.assertEqual(result.witness.tolist(),
                         from_pauli('ZZII').tolist())
    def test_threads_agree(self):
        """The witness does not depend on the thread count."""
        _, one = scanner_for(STEANE, threads=1)
        _, four = scanner_for(STEANE, threads=4)
        first = one.search(2, find_witness=True)
        second = four.search(2, find_witness=True)
        self.assertEqual(first.weight, 3)
        self.assertEqual(first.witness.tolist(), second.witness.tolist())
        self.assertEqual(first.tested, second.tested)
    def test_strict_budget(self):
        """Strict scans refuse work beyond the budget."""
        _, scanner = scanner_for(FIVE_QUBIT)
        with self.assertRaises(BudgetExceeded):
            scanner.search(2, budgets=Budgets(scan=10))
    def test_truncated(self):
        """Non-strict scans stop at the first unfinished weight."""
        _, scanner = scanner_for(FIVE_QUBIT)
        result = scanner.search(2, budgets=Budgets(scan=20), strict=False)
        self.assertIsNone(result.weight)
        self.assertEqual(result.clean, [1])
    def test_refine(self):
        """refine can reject linear hits."""
        code = stabilizer_code(['XXXX', 'ZZZZ'])
        n, values = 4, pauli_values(2)
        singles = np.zeros((n * 3, 8), dtype=np.int64)
        for pos in range(n):
            for idx, (x, z) in enumerate(values):
                singles[pos * 3 + idx, pos] = x
                singles[pos * 3 + idx, n + pos] = z
        checks = symplectic_products(singles, code.generators)
        # extra key digit: the X part on qubit 0
        extra = singles[:, [0]]
        keys = np.concatenate([checks, extra], axis=1).reshape(n, 3, 3)
        scanner = LowWeightScanner(keys, 2, linear_width=2,
                                   refine=lambda digits: digits[:, 0] == 1,
                                   threads=1)
        result = scanner.search(2)
        self.assertEqual(result.weight, 2)
        self.assertEqual(result.witness.tolist(),
                         from_pauli('XXII').tolist())
