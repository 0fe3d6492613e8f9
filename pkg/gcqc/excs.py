"""
gcqc.excs - Exceptions and warnings raised while building and verifying codes.

Every construction or precondition failure is a ``CodeError``. Specific
failures are attributes of it, created on first access, so they can be
caught individually:

..code-block:: python

    try:
        chain = gcqc.build_chain([big, small])
    except gcqc.CodeError.nesting as exc:
        print('Codes are not nested:', exc)

Enumerations that would exceed their budget raise ``BudgetExceeded``, which
is itself a ``CodeError``:

..code-block:: python

    try:
        d = gcqc.min_distance(code, 'exact')
    except gcqc.BudgetExceeded as exc:
        print('needs', exc.needed, 'words, budget is', exc.budget)

Non-fatal diagnostics are issued with ``warnings.warn`` using attributes of
``CodeWarning`` as the category, e.g. ``CodeWarning.pigeonhole``.
"""
from six import with_metaclass

__all__ = [
    'CodeError',
    'BudgetExceeded',
    'Undecidable',
    'CodeWarning',
]

class _MetaGetattr(type):
    """Metaclass to provide __getattr__ on a class."""
    def __getattr__(cls, name):
        if name.startswith('__'):
            raise AttributeError(name)
        setattr(cls, name, type(name, (cls,), {}))
        return getattr(cls, name)

#pylint: disable=too-few-public-methods
class CodeError(with_metaclass(_MetaGetattr, ValueError)):
    """A code could not be built, or an operation's precondition failed."""
    @property
    def code(self):
        """Return the error code, i.e. the name of the attribute raised."""
        return type(self).__name__

class BudgetExceeded(CodeError):
    """An enumeration needs more words or vectors than its budget allows."""
    def __init__(self, what, needed, budget):
        """Record what was being enumerated and how much it needed."""
        super(BudgetExceeded, self).__init__(
            '{what}: needs {needed} but the budget is {budget}'.format(
                what=what, needed=needed, budget=budget))
        self.what = what
        self.needed = needed
        self.budget = budget

class Undecidable(CodeError):
    """A difference-membership query cannot be decided by the strategy in use.

    ``word`` is the label-difference word that could not be decided.
    """
    def __init__(self, message, word=None):
        """Keep the offending word around for reports."""
        super(Undecidable, self).__init__(message)
        self.word = None if word is None else tuple(int(i) for i in word)

class CodeWarning(with_metaclass(_MetaGetattr, UserWarning)):
    """A result carries a caveat (bound instead of exact value, etc.)."""
    pass
