"""Test spec documents."""
from unittest import TestCase
import json
import os
import tempfile
import warnings
from gcqc.catalog import FIVE_QUBIT
from gcqc.excs import CodeError
from gcqc.gc import gc_build
from gcqc.misc import Budgets
from gcqc.specfile import load_spec, read_spec

FIVE = {'p': 2, 'inner': {'chain': 'five_chain'},
        'outer': [{'type': 'mds', 'q': 16, 'n': 3, 'k': 2}]}

def with_changes(**changes):
    """FIVE with some keys replaced (None removes)."""
    data = dict(FIVE)
    for key, val in changes.items():
        if val is None:
            data.pop(key)
        else:
            data[key] = val
    return data

class TestLoad(TestCase):
    """Test parsing."""
    def test_dict(self):
        """A decoded document builds."""
        parsed = load_spec(FIVE)
        code = gc_build(parsed.spec)
        self.assertEqual((code.n, code.dimension.k), (15, 11))
        self.assertEqual(parsed.estimates, [])
    def test_text(self):
        """JSON text parses like the dict."""
        parsed = load_spec(json.dumps(FIVE))
        self.assertEqual(parsed.spec.N, 3)
    def test_generators(self):
        """Chains can list codes by generators."""
        data = with_changes(inner={'chain': [
            'full(5)', {'generators': FIVE_QUBIT.split()}]})
        spec = load_spec(data).spec
        self.assertEqual(spec.inner.k, (5, 1))
    def test_positions(self):
        """Per-block chains with counts."""
        data = with_changes(inner={'positions': [
            {'chain': 'five_chain', 'count': 2}, 'five_chain']})
        self.assertEqual(len(load_spec(data).spec.chains), 3)
    def test_budgets(self):
        """Document budgets override the defaults only where given."""
        parsed = load_spec(with_changes(budgets={'scan': 5}),
                           budgets=Budgets(weight=4))
        self.assertEqual((parsed.budgets.scan, parsed.budgets.weight), (5, 4))
    def test_subalphabet(self):
        """Sampling settings of sub-alphabet levels are kept."""
        data = {'p': 2, 'inner': {'chain': 'five_chain'},
                'outer': [{'type': 'subalphabet', 's': 16,
                           'strategy': 'zero-shift', 'seed': 4,
                           'samples': 100,
                           'parent': {'type': 'mds', 'q': 17, 'n': 4,
                                      'k': 2}}]}
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            parsed = load_spec(data)
        self.assertEqual(parsed.estimates,
                         [{'level': 1, 'seed': 4, 'samples': 100}])

class TestErrors(TestCase):
    """Schema errors name the field."""
    def check(self, data, fragment):
        """load_spec fails with a message containing fragment."""
        errored = False
        try:
            load_spec(data)
        except CodeError.spec as exc:
            errored = fragment in str(exc)
        self.assertTrue(errored)
    def test_malformed(self):
        """Malformed JSON reports the position."""
        self.check('{"p": 2,\n "inner": }', 'line 2')
    def test_keys(self):
        """Unknown and missing keys."""
        self.check(with_changes(colour='red'), 'colour')
        self.check(with_changes(p=None), '"p"')
        self.check(with_changes(p='two'), 'p')
    def test_inner(self):
        """Unknown chains, codes used as chains, mismatched p."""
        self.check(with_changes(inner={'chain': 'nope_chain'}), 'inner.chain')
        self.check(with_changes(inner={'chain': 'five_qubit'}),
                   'not a chain')
        self.check(with_changes(inner={'chain': ['full(5)']}), 'inner.chain')
        self.check(with_changes(p=3), 'p=2')
    def test_outer(self):
        """Bad outer codes."""
        self.check(with_changes(outer=[{'type': 'bogus'}]), 'outer[0].type')
        self.check(with_changes(outer=[{'type': 'mds', 'q': 6, 'n': 3,
                                        'k': 2}]), 'outer[0].q')
        self.check(with_changes(outer=[{'type': 'explicit', 'q': 4,
                                        'generators': [[1, 4, 0]]}]),
                   'outer[0].generators')
        self.check(with_changes(outer=[{'type': 'mds', 'q': 16, 'n': 18,
                                        'k': 2}]), 'outer[0].n')
    def test_budgets(self):
        """Unknown budget keys."""
        self.check(with_changes(budgets={'speed': 1}), 'budgets')
    def test_permutations(self):
        """Permutations must be lists or nulls."""
        self.check(with_changes(label_permutations='swap'),
                   'label_permutations')
    def test_missing_file(self):
        """Unreadable files are spec errors."""
        with self.assertRaises(CodeError.spec):
            read_spec(os.path.join(tempfile.gettempdir(), 'no', 'such.json'))
