"""Test distance verification."""
from unittest import TestCase
import warnings
import numpy as np
from gcqc import catalog
from gcqc import distance as dist
from gcqc.classical import EXACT, LOWER_BOUND
from gcqc.excs import BudgetExceeded, CodeWarning
from gcqc.gc import gc_build, random_tiny_spec
from gcqc.misc import Budgets
from gcqc.scan import vector_count
from gcqc.symplectic import symplectic_weight

def quiet(func, *args, **kwargs):
    """Call without warnings."""
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        return func(*args, **kwargs)

FIVE = catalog.get('five_qubit')
EX1 = quiet(gc_build, catalog.paper_example(1))

class TestWeights(TestCase):
    """Minimum weights of symplectic codes."""
    def test_enumerated(self):
        """The five-qubit normalizer has minimum weight 3."""
        result = dist.min_symplectic_weight(FIVE.normalizer)
        self.assertEqual((result.value, result.status, result.method),
                         (3, EXACT, 'exhaustive'))
        self.assertEqual(result.checked, 64)
    def test_scanned(self):
        """Scanning agrees with enumeration."""
        result = dist.min_symplectic_weight(
            FIVE.normalizer, budgets=Budgets(enumeration=16), threads=1)
        self.assertEqual((result.value, result.status, result.method),
                         (3, EXACT, 'low-weight-scan'))
        self.assertEqual(symplectic_weight(result.witness), 3)
    def test_lower_bound(self):
        """A weight cap gives a lower bound."""
        result = dist.min_symplectic_weight(
            FIVE.normalizer, upto=1, budgets=Budgets(enumeration=16, scan=20),
            threads=1)
        self.assertEqual((result.value, result.status), (2, LOWER_BOUND))
    def test_coset(self):
        """Coset distances of the hexacode chain are 1, 2 and 4."""
        values = [d.value for d in dist.chain_distances(
            catalog.get('hexacode_chain'))]
        self.assertEqual(values, [1, 2, 4])
    def test_coset_scanned(self):
        """The scanned coset distance agrees with enumeration."""
        chain = catalog.get('eight_chain')
        small = Budgets(enumeration=16)
        enumerated = dist.coset_distance(chain.codes[1].normalizer,
                                         chain.codes[2].normalizer)
        scanned = dist.coset_distance(chain.codes[1].normalizer,
                                      chain.codes[2].normalizer,
                                      budgets=small, threads=1)
        self.assertEqual(enumerated.value, 2)
        self.assertEqual(scanned.value, 2)
        self.assertEqual(scanned.method, 'low-weight-scan')

class TestExhaustive(TestCase):
    """Exact distances of small codes."""
    def test_five_qubit(self):
        """[[5,1,3]] has distance 3."""
        cert = dist.verify_exhaustive(FIVE)
        self.assertEqual((cert.d, cert.status), (3, dist.PROVED_EXACT))
        self.assertFalse(cert.pure)
    def test_degenerate(self):
        """A k=0 code reports its pure distance with a warning."""
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            cert = dist.verify_exhaustive(catalog.get('hexacode'))
        self.assertTrue(any(issubclass(w.category, CodeWarning.degenerate)
                            for w in caught))
        self.assertEqual(cert.d, 4)
        self.assertTrue(cert.pure)
    def test_methods_agree(self):
        """Pairwise and ambient enumeration agree."""
        steane = catalog.get('steane')
        pairwise = dist.verify_exhaustive(steane, 'pairwise')
        ambient = dist.verify_exhaustive(steane, 'ambient')
        self.assertEqual(pairwise.d, 3)
        self.assertEqual(ambient.d, 3)
    def test_budget(self):
        """Too large a union exceeds the budget."""
        with self.assertRaises(BudgetExceeded):
            dist.verify_exhaustive(FIVE, 'ambient',
                                   budgets=Budgets(enumeration=100))

class TestLowWeight(TestCase):
    """Low-weight scans of GC codes."""
    def test_example1(self):
        """No member difference of weight <= 3; a weight-4 one exists."""
        cert = dist.verify_lowweight(EX1, 4)
        self.assertEqual((cert.d, cert.status), (4, dist.PROVED_EXACT))
        self.assertEqual(symplectic_weight(np.array(cert.witness)), 4)
        self.assertTrue(EX1.is_difference(np.array(cert.witness)).all())
        self.assertEqual(cert.evidence['weights_checked'], [1, 2, 3])
        self.assertEqual(cert.evidence['vectors_tested'],
                         sum(vector_count(36, w) for w in (1, 2, 3)))
    def test_example1_refuted(self):
        """Distance 5 is refuted by a weight-4 witness."""
        cert = dist.verify_lowweight(EX1, 5, threads=2)
        self.assertEqual((cert.d, cert.status), (4, dist.REFUTED))
    def test_thread_count(self):
        """Certificates are byte-identical for any thread count."""
        for target in (4, 5):
            one = dist.verify_lowweight(EX1, target, threads=1).to_json()
            three = dist.verify_lowweight(EX1, target, threads=3).to_json()
            self.assertEqual(one, three)
            self.assertNotIn('threads', one)
    def test_no_witness(self):
        """Without the witness search the result is a lower bound."""
        cert = dist.verify_lowweight(EX1, 3, find_witness=False)
        self.assertEqual((cert.d, cert.status), (3, dist.PROVED_LOWER))
    def test_example4(self):
        """The sub-alphabet example has distance 3."""
        code = quiet(gc_build, catalog.paper_example(4))
        cert = dist.verify_lowweight(code, 3)
        self.assertEqual(cert.evidence['vectors_tested'], 10296)
        self.assertEqual((cert.d, cert.status), (3, dist.PROVED_EXACT))
    def test_budget(self):
        """Scans beyond the budget are refused."""
        with self.assertRaises(BudgetExceeded):
            dist.verify_lowweight(EX1, 4, budgets=Budgets(scan=1000))

class TestLargeScans(TestCase):
    """Low-weight scans of the 65-block examples."""
    def test_example2(self):
        """[[1365,1353]] has distance 3."""
        code = quiet(gc_build, catalog.paper_example(2))
        cert = dist.verify_lowweight(code, 3, threads=1)
        self.assertEqual((cert.d, cert.status), (3, dist.PROVED_EXACT))
        self.assertEqual(cert.evidence['weights_checked'], [1, 2])
        self.assertEqual(cert.evidence['vectors_tested'],
                         vector_count(1365, 1) + vector_count(1365, 2))
        self.assertTrue(code.is_difference(np.array(cert.witness)).all())
    def test_example5(self):
        """[[455,443]] has distance 3."""
        code = quiet(gc_build, catalog.paper_example(5))
        cert = dist.verify_lowweight(code, 3, threads=1)
        self.assertEqual((cert.d, cert.status), (3, dist.PROVED_EXACT))
        self.assertEqual(cert.evidence['vectors_tested'], 930930)
        self.assertEqual(symplectic_weight(np.array(cert.witness)), 3)
class TestComposite(TestCase):
    """The composite concatenation bound."""
    def test_examples(self):
        """Bounds of the worked examples."""
        for index, bound in [(1, 4), (3, 3), (4, 3)]:
            code = quiet(gc_build, catalog.paper_example(index))
            cert = quiet(dist.certify_theorem1, code)
            self.assertEqual(cert.d, bound)
            self.assertEqual(cert.status, dist.PROVED_LOWER)
            self.assertEqual(cert.method, 'theorem1-composite')
    def test_leaves(self):
        """Example 1 lists its outer and inner leaves."""
        cert = quiet(dist.certify_theorem1, EX1)
        self.assertEqual(cert.evidence['coset_distances'], [1, 2, 4])
        self.assertEqual(cert.evidence['terms'], [4, 4, 4])
        self.assertEqual([leaf['value'] for leaf in cert.evidence['outer']],
                         [4, 2])

class TestTinyAgreement(TestCase):
    """All methods agree on random small codes."""
    def test_agreement(self):
        """Exact distance >= pure distance >= composite bound."""
        rng = np.random.default_rng(99)
        for _ in range(20):
            code = quiet(gc_build, random_tiny_spec(rng, max_block=3,
                                                    max_length=2))
            bound = quiet(dist.certify_theorem1, code)
            exact = quiet(dist.verify_exhaustive, code)
            if bound.d is None:
                continue
            self.assertGreaterEqual(exact.d, bound.d)
            scan = dist.verify_lowweight(code, bound.d, threads=1)
            self.assertNotEqual(scan.status, dist.REFUTED)
            if scan.status == dist.PROVED_EXACT:
                self.assertLessEqual(scan.d, exact.d)
