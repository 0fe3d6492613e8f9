"""Test exception families, warnings and budgets."""
from unittest import TestCase
import gcqc
from gcqc.misc import Budgets

class TestExcs(TestCase):
    """TestCase class to test exception handling."""
    def test_family(self):
        """Error attributes are cached subclasses of CodeError."""
        self.assertIs(gcqc.CodeError.nesting, gcqc.CodeError.nesting)
        self.assertTrue(issubclass(gcqc.CodeError.nesting, gcqc.CodeError))
        self.assertTrue(issubclass(gcqc.CodeError, ValueError))
        self.assertTrue(issubclass(gcqc.BudgetExceeded, gcqc.CodeError))
        self.assertTrue(issubclass(gcqc.CodeWarning.pigeonhole, UserWarning))
    def test_catch(self):
        """Specific errors can be caught by attribute."""
        five = gcqc.catalog.get('five_qubit')
        errored = False
        try:
            gcqc.build_chain([five, gcqc.catalog.get('full(5)')])
        except gcqc.CodeError.nesting as exc:
            errored = exc.code == 'nesting'
        self.assertTrue(errored)
    def test_budget_exceeded(self):
        """BudgetExceeded keeps what it needed."""
        exc = gcqc.BudgetExceeded('codewords', 100, 10)
        self.assertEqual((exc.what, exc.needed, exc.budget),
                         ('codewords', 100, 10))
        self.assertIn('100', str(exc))
        self.assertEqual(exc.code, 'BudgetExceeded')
    def test_undecidable_word(self):
        """Undecidable carries the offending word as a tuple."""
        exc = gcqc.Undecidable('cannot decide', [1, 0, 2])
        self.assertEqual(exc.word, (1, 0, 2))

class TestBudgets(TestCase):
    """Test the enumeration limits."""
    def test_defaults(self):
        """Unset budgets take the defaults."""
        budgets = Budgets()
        self.assertEqual(budgets.enumeration, 2 ** 24)
        self.assertEqual(budgets.weight, 8)
    def test_parse(self):
        """A bare number sets the enumeration budget, pairs set any."""
        self.assertEqual(Budgets.parse('100').enumeration, 100)
        parsed = Budgets.parse('scan=5, weight=3')
        self.assertEqual((parsed.scan, parsed.weight), (5, 3))
        self.assertEqual(parsed.columns, Budgets.DEFAULTS['columns'])
        self.assertEqual(Budgets.overrides('scan=5'), {'scan': 5})
        with self.assertRaises(KeyError):
            Budgets.parse('colour=3')
    def test_env(self):
        """GCQ_BUDGET is read from the environment."""
        self.assertEqual(Budgets.from_env({'GCQ_BUDGET': '7'}).enumeration, 7)
        self.assertEqual(Budgets.from_env({}), Budgets())
    def test_replace(self):
        """replace returns a modified copy."""
        base = Budgets()
        changed = base.replace(scan=10, weight=None)
        self.assertEqual(changed.scan, 10)
        self.assertEqual(base.scan, Budgets.DEFAULTS['scan'])
        self.assertEqual(changed.weight, base.weight)
