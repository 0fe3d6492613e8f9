"""Test the catalog of inner codes, chains and examples."""
from unittest import TestCase
import json
from gcqc import catalog
from gcqc.catalog import Catalog, find_nested_subcode, gf4_to_symplectic
from gcqc.excs import CodeError
from gcqc.gc import GCSpec
from gcqc.symplectic import stabilizer_code, to_pauli

CAT = catalog.CATALOG

class TestCodes(TestCase):
    """Cataloged stabilizer codes."""
    def test_parameters(self):
        """Every fixed code has its advertised [[n,k,d]]."""
        expected = {
            'five_qubit': (5, 1, 3),
            'steane': (7, 1, 3),
            'hexacode': (6, 0, 4),
            'six_four_two': (6, 4, 2),
            'eight_three_three': (8, 3, 3),
            'eight_six_two': (8, 6, 2),
            'full(4)': (4, 4, 1),
            'qhamming(2)': (5, 1, 3),
            'qhamming(3)': (21, 15, 3),
        }
        for name, params in expected.items():
            self.assertEqual(CAT.get(name).parameters, params)
    def test_shared(self):
        """Repeated lookups return the same object."""
        self.assertIs(CAT.get('steane'), catalog.get('steane'))
        self.assertIs(catalog.qhamming(3), CAT.get('qhamming( 3 )'))
    def test_nested(self):
        """[[8,6,2]] is nested in [[8,3,3]]."""
        big, small = CAT.get('eight_six_two'), CAT.get('eight_three_three')
        self.assertTrue(big.stabilizer.issubset(small.stabilizer))
    def test_hexacode_rows(self):
        """GF(4) rows give two commuting binary generators each."""
        rows = gf4_to_symplectic(catalog.HEXACODE_GF4)
        self.assertEqual(rows.shape, (6, 12))
        code = stabilizer_code(rows, n=6)
        self.assertEqual(code.k, 0)
        self.assertEqual(to_pauli(rows[0]), 'YIIYXX')
        self.assertEqual(to_pauli(rows[1]), 'XIIXZZ')

class TestChains(TestCase):
    """Cataloged chains."""
    def test_chains(self):
        """Label widths and coset distances."""
        expected = {
            'hexacode_chain': ((6, 4, 0), (1, 2, 4)),
            'five_chain': ((5, 1), (1, 3)),
            'steane_chain': ((7, 1), (1, 3)),
            'eight_chain': ((8, 6, 3), (1, 2, 3)),
            'qhamming_chain(3)': ((21, 15), (1, 3)),
        }
        from gcqc.distance import chain_distances
        for name, (ks, dists) in expected.items():
            chain = CAT.get(name)
            self.assertEqual(chain.k, ks)
            self.assertEqual(tuple(d.value for d in chain_distances(chain)),
                             dists)

class TestNames(TestCase):
    """Name parsing."""
    def test_unknown(self):
        """Unknown or malformed names are CodeError.unknown."""
        for name in ['nope', 'qhamming', 'five_qubit(3)', 'qhamming(x)', 7]:
            with self.assertRaises(CodeError.unknown):
                CAT.get(name)
        self.assertNotIn('nope', CAT)
        self.assertIn('full(9)', CAT)
    def test_range(self):
        """qhamming(m) is cataloged for 2 <= m <= 6."""
        with self.assertRaises(CodeError.precondition):
            CAT.get('qhamming(7)')
    def test_names(self):
        """names lists the registered entries."""
        names = CAT.names()
        self.assertIn('five_qubit', names)
        self.assertIn('qhamming(m)', names)
        self.assertIn('paper_example(i)', names)

class TestSearch(TestCase):
    """Nested subcode search."""
    def test_itself(self):
        """The same k returns the code itself."""
        five = CAT.get('five_qubit')
        self.assertIs(find_nested_subcode(five, 1, 3), five)
        with self.assertRaises(CodeError.search):
            find_nested_subcode(five, 1, 4)
    def test_extension(self):
        """Extending the five-qubit stabilizer by a logical gives [[5,0,3]]."""
        five = CAT.get('five_qubit')
        found = find_nested_subcode(five, 0, 3)
        self.assertEqual(found.parameters, (5, 0, 3))
        self.assertTrue(five.stabilizer.issubset(found.stabilizer))
        with self.assertRaises(CodeError.search):
            find_nested_subcode(five, 0, 4)
    def test_impossible(self):
        """No [[8,7,3]] code is nested with [[8,3,3]]."""
        with self.assertRaises(CodeError.search):
            find_nested_subcode(CAT.get('eight_three_three'), 7, 3)

class TestExamples(TestCase):
    """Bundled example specs."""
    def test_specs(self):
        """Every bundled spec parses as JSON."""
        for name in catalog.EXAMPLES:
            data = json.loads(catalog.spec_json(name))
            self.assertEqual(data['p'], 2)
        with self.assertRaises(CodeError.unknown):
            catalog.spec_json('example9')
    def test_paper_example(self):
        """paper_example returns GCSpecs."""
        spec = catalog.paper_example(1)
        self.assertIsInstance(spec, GCSpec)
        self.assertEqual(spec.N, 6)
        self.assertEqual(len(spec.outers), 2)
        with self.assertRaises(CodeError.unknown):
            catalog.paper_example(6)
    def test_private_catalog(self):
        """A separate catalog builds its own objects."""
        other = Catalog()
        self.assertIsNot(other.get('five_qubit'), CAT.get('five_qubit'))
        self.assertEqual(other.get('five_qubit'), CAT.get('five_qubit'))
