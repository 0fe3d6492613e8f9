"""This submodule contains the small classes."""
import json
import math
import os

__all__ = [
    'Budgets',
    'Record',
    'log2',
]


class _CachedAttribute(object): # pylint: disable=too-few-public-methods
    '''Computes attribute value and caches it in the instance.
    From the Python Cookbook (Denis Otkidach)
    This decorator allows you to create a property which can be computed once
    and accessed many times. Sort of like memoization.
    '''
    def __init__(self, method, name=None):
        """Initialize the cached attribute."""
        self.method = method
        self.name = name or method.__name__
        self.__doc__ = method.__doc__
    def __get__(self, inst, cls):
        """Get the cached attribute."""
        if inst is None:
            return self
        result = self.method(inst)
        # setattr redefines the instance's attribute so this doesn't get called again
        setattr(inst, self.name, result)
        return result


def log2(value):
    """log2 of a positive (possibly huge) integer or float."""
    if value <= 0:
        raise ValueError('log2 of non-positive value {0!r}'.format(value))
    return math.log2(value)


def _jsonable(value):
    """Convert numpy scalars/arrays and Records into plain JSON values."""
    if isinstance(value, Record):
        return {k: _jsonable(v) for k, v in value.info.items()}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, 'tolist'):
        return value.tolist()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class Record(object):
    """A hunk of result data (parameters, certificates, size claims)
    that is reported rather than computed with.

    Behaves like both an object and a dict, and serializes to JSON with
    sorted keys so equal records give byte-identical reports.
    """
    def __init__(self, **data):
        """Initialize the data by copying kwargs to __dict__"""
        self.__dict__.update(data)

    def __repr__(self):
        """Represent a Record."""
        return '<{cls}: {data!r}>'.format(cls=type(self).__name__,
                                           data=self.__dict__)

    __str__ = __repr__

    def __eq__(self, other):
        """Two records are equal when their data is."""
        return type(self) is type(other) and self.to_json() == other.to_json()

    def __hash__(self):
        """Record.__hash__() <==> hash(Record)"""
        return hash(self.to_json())

    def __getitem__(self, key):
        """Get an attribute like a dict item."""
        return self.__dict__.__getitem__(key)

    def __setitem__(self, key, val):
        """Set an attribute like a dict item."""
        return self.__dict__.__setitem__(key, val)

    def __contains__(self, key):
        """Check for an attribute like a dict key."""
        return key in self.__dict__

    @property
    def info(self):
        """Return a dict of the data in this record."""
        return self.__dict__.copy()

    def to_json(self, indent=None):
        """Serialize deterministically."""
        return json.dumps(_jsonable(self), sort_keys=True, indent=indent)


class Budgets(Record):
    """Enumeration limits.

    ``enumeration`` bounds explicit word lists (codes, cosets, members),
    ``scan`` bounds the vectors a low-weight scan may test,
    ``columns`` bounds the column sets of a column-independence test and
    ``weight`` is the highest weight an open-ended ascending scan tries.
    """
    DEFAULTS = {
        'enumeration': 2 ** 24,
        'scan': 10 ** 9,
        'columns': 10 ** 6,
        'weight': 8,
    }

    def __init__(self, **overrides):
        """Start from the defaults and apply ``overrides``."""
        data = dict(self.DEFAULTS)
        for key, val in overrides.items():
            if key not in data:
                raise KeyError('unknown budget {0!r}'.format(key))
            if val is not None:
                data[key] = int(val)
        super(Budgets, self).__init__(**data)

    def replace(self, **overrides):
        """Return a copy with some budgets changed."""
        data = self.info
        data.update((k, v) for k, v in overrides.items() if v is not None)
        return Budgets(**data)

    @classmethod
    def parse(cls, text):
        """Parse ``GCQ_BUDGET``-style text: ``N`` or ``key=N,key=N``."""
        return cls(**cls.overrides(text))

    @classmethod
    def overrides(cls, text):
        """Only the budgets named in ``GCQ_BUDGET``-style text."""
        text = (text or '').strip()
        if not text:
            return {}
        if '=' not in text:
            return {'enumeration': int(text)}
        data = {}
        for part in text.split(','):
            key, _, val = part.partition('=')
            key = key.strip()
            if key not in cls.DEFAULTS:
                raise KeyError('unknown budget {0!r}'.format(key))
            data[key] = int(val)
        return data

    @classmethod
    def from_env(cls, environ=None):
        """Read the ``GCQ_BUDGET`` environment variable."""
        environ = os.environ if environ is None else environ
        return cls.parse(environ.get('GCQ_BUDGET'))
