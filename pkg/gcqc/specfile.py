"""
gcqc.specfile - GC spec documents in JSON.

A spec document names the inner chain(s) and the outer codes:

..code-block:: json

    {
      "p": 2,
      "inner": {"chain": ["full(6)", "six_four_two", "hexacode"]},
      "outer": [
        {"type": "explicit", "q": 4, "generators": [[1, 0, 0, 1, 2, 2]]},
        {"type": "mds", "q": 16, "n": 6, "k": 5}
      ]
    }

``inner`` is ``{"chain": CHAIN}`` or ``{"positions": [CHAIN | {"chain":
CHAIN, "count": c}, ...]}``, where CHAIN is a catalog chain name or a list of
catalog code names and ``{"generators": [pauli, ...]}`` objects, largest code
first. Outer codes have type ``mds`` (``q``, ``n``, ``k``), ``explicit``
(``q``, ``generators``) or ``subalphabet`` (``parent``, ``s``, ``strategy``
and, for sampling, ``seed`` and ``samples``). Optional keys:
``label_permutations`` (one list or null per level), ``budgets`` (overrides
of ``gcqc.BUDGETS``) and ``name``.

Every schema problem raises ``CodeError.spec`` naming the offending field
(and the line and column for malformed JSON).
"""
import json

from .classical import LinearCode, mds_code, subalphabet_code
from .excs import CodeError
from .field import field_for_order
from .gc import GCSpec
from .misc import Record
from .symplectic import build_chain, stabilizer_code

__all__ = [
    'SpecFile',
    'load_spec',
    'read_spec',
]

_KEYS = {'name', 'p', 'inner', 'outer', 'label_permutations', 'budgets',
         'length'}


class SpecFile(Record):
    """A parsed spec document.

    ``spec`` is the GCSpec, ``budgets`` the effective Budgets,
    ``estimates`` the sampling settings of sub-alphabet levels and ``data``
    the raw document.
    """
    pass


def _fail(path, message):
    """Raise a schema error for ``path``."""
    raise CodeError.spec('{0}: {1}'.format(path, message))


def _int(data, key, path, low=None):
    """A required integer field."""
    if key not in data:
        _fail(path, 'missing "{0}"'.format(key))
    val = data[key]
    if isinstance(val, bool) or not isinstance(val, int):
        _fail('{0}.{1}'.format(path, key), 'expected an integer, got {0!r}'
              .format(val))
    if low is not None and val < low:
        _fail('{0}.{1}'.format(path, key), 'must be at least {0}'.format(low))
    return val


def _field(q, path):
    """GF(q) or a schema error."""
    try:
        return field_for_order(q)
    except CodeError as exc:
        _fail(path + '.q', str(exc))


def _catalog_get(catalog, name, path):
    """Catalog lookup with schema errors for unknown names."""
    try:
        return catalog.get(name)
    except CodeError.unknown as exc:
        _fail(path, str(exc))


def _chain(entry, path, catalog, p):
    """A NestedStabilizerChain from its spec form."""
    if isinstance(entry, str):
        chain = _catalog_get(catalog, entry, path)
        if not hasattr(chain, 'levels'):
            _fail(path, '{0!r} is a code, not a chain'.format(entry))
        return chain
    if not isinstance(entry, list) or len(entry) < 2:
        _fail(path, 'a chain is a catalog chain name or a list of at least '
              'two codes')
    codes = []
    for idx, item in enumerate(entry):
        where = '{0}[{1}]'.format(path, idx)
        if isinstance(item, str):
            code = _catalog_get(catalog, item, where)
            if hasattr(code, 'levels') or not hasattr(code, 'stabilizer'):
                _fail(where, '{0!r} is not a stabilizer code'.format(item))
        elif isinstance(item, dict) and isinstance(item.get('generators'),
                                                   list):
            gens = item['generators']
            if not gens or not all(isinstance(g, str) for g in gens):
                _fail(where + '.generators', 'expected Pauli strings')
            code = stabilizer_code(gens, p=p, name=item.get('name'))
        else:
            _fail(where, 'expected a catalog code name or {"generators": '
                  '[...]}')
        codes.append(code)
    return build_chain(codes)


def _inner(data, catalog, p):
    """One chain, or one chain per block."""
    if not isinstance(data, dict):
        _fail('inner', 'expected an object')
    if 'chain' in data:
        return _chain(data['chain'], 'inner.chain', catalog, p)
    if 'positions' not in data or not isinstance(data['positions'], list):
        _fail('inner', 'expected "chain" or a "positions" list')
    chains = []
    for idx, item in enumerate(data['positions']):
        where = 'inner.positions[{0}]'.format(idx)
        if isinstance(item, dict) and 'chain' in item:
            count = _int(item, 'count', where, low=0) if 'count' in item \
                else 1
            chains.extend([_chain(item['chain'], where + '.chain', catalog,
                                  p)] * count)
        else:
            chains.append(_chain(item, where, catalog, p))
    if not chains:
        _fail('inner.positions', 'no blocks')
    return chains


def _linear(data, path, budgets):
    """An mds or explicit outer code."""
    kind = data.get('type')
    if kind == 'mds':
        q = _int(data, 'q', path, low=2)
        field = _field(q, path)
        N, k = _int(data, 'n', path, low=1), _int(data, 'k', path, low=1)
        if k > N:
            _fail(path + '.k', 'k={0} exceeds n={1}'.format(k, N))
        if N > q + 1:
            _fail(path + '.n', 'MDS length {0} exceeds q+1'.format(N))
        return mds_code(field, N, k, budgets=budgets)
    if kind == 'explicit':
        q = _int(data, 'q', path, low=2)
        field = _field(q, path)
        gens = data.get('generators')
        if not isinstance(gens, list) or not gens \
                or not all(isinstance(row, list) and row for row in gens) \
                or len({len(row) for row in gens}) != 1:
            _fail(path + '.generators', 'expected a non-empty list of equal '
                  'length rows')
        for row in gens:
            for val in row:
                if isinstance(val, bool) or not isinstance(val, int) \
                        or not 0 <= val < q:
                    _fail(path + '.generators', 'entry {0!r} is not an '
                          'element of GF({1})'.format(val, q))
        return LinearCode(field, gens, claimed=data.get('distance'),
                          name=data.get('name'))
    _fail(path + '.type', 'expected "mds" or "explicit", got {0!r}'.format(
        kind))


def _outer(data, path, budgets, estimates, level):
    """One outer code."""
    if not isinstance(data, dict):
        _fail(path, 'expected an object')
    if data.get('type') != 'subalphabet':
        return _linear(data, path, budgets)
    if not isinstance(data.get('parent'), dict):
        _fail(path + '.parent', 'expected an mds or explicit code')
    parent = _linear(data['parent'], path + '.parent', budgets)
    s = _int(data, 's', path, low=1)
    strategy = data.get('strategy', 'best-coset-exhaustive')
    seed = data.get('seed')
    samples = data.get('samples')
    if seed is not None:
        seed = _int(data, 'seed', path, low=0)
    if samples is not None:
        samples = _int(data, 'samples', path, low=1)
        estimates.append({'level': level, 'seed': seed, 'samples': samples})
    try:
        return subalphabet_code(parent, s, strategy, seed=seed,
                                samples=samples,
                                injection=data.get('injection'),
                                budgets=budgets)
    except CodeError.precondition as exc:
        _fail(path, str(exc))


def load_spec(source, catalog=None, budgets=None):
    """Parse a spec document (JSON text or an already decoded dict)."""
    #pylint: disable=too-many-branches
    if catalog is None:
        from .catalog import CATALOG as catalog
    if isinstance(source, (str, bytes)):
        try:
            data = json.loads(source)
        except ValueError as exc:
            raise CodeError.spec('malformed JSON at line {0}, column {1}: {2}'
                                 .format(getattr(exc, 'lineno', '?'),
                                         getattr(exc, 'colno', '?'),
                                         getattr(exc, 'msg', exc)))
    else:
        data = source
    if not isinstance(data, dict):
        _fail('<document>', 'expected a JSON object')
    unknown = sorted(set(data) - _KEYS)
    if unknown:
        _fail(unknown[0], 'unknown key')
    if budgets is None:
        from . import BUDGETS as budgets
    if 'budgets' in data:
        if not isinstance(data['budgets'], dict):
            _fail('budgets', 'expected an object')
        try:
            budgets = budgets.replace(**data['budgets'])
        except (KeyError, TypeError, ValueError) as exc:
            _fail('budgets', str(exc))
    p = _int(data, 'p', '<document>', low=2)
    inner = _inner(data.get('inner'), catalog, p)
    for chain in [inner] if hasattr(inner, 'levels') else inner:
        if chain.p != p:
            _fail('inner', 'chain over p={0}, document says p={1}'.format(
                chain.p, p))
    outers = data.get('outer')
    if not isinstance(outers, list):
        _fail('outer', 'expected a list')
    estimates = []
    outers = [_outer(item, 'outer[{0}]'.format(idx), budgets, estimates,
                     idx + 1)
              for idx, item in enumerate(outers)]
    perms = data.get('label_permutations')
    if perms is not None:
        if not isinstance(perms, list) or not all(
                perm is None or isinstance(perm, list) for perm in perms):
            _fail('label_permutations', 'expected a list of lists or nulls')
    length = data.get('length')
    if length is not None:
        length = _int(data, 'length', '<document>', low=1)
    spec = GCSpec(inner, outers, label_permutations=perms, length=length,
                  name=data.get('name'))
    return SpecFile(spec=spec, budgets=budgets, estimates=estimates,
                    data=data)


def read_spec(path, catalog=None, budgets=None):
    """Parse the spec document stored at ``path``."""
    try:
        with open(path, 'r') as handle:
            text = handle.read()
    except (IOError, OSError) as exc:
        raise CodeError.spec('cannot read {0}: {1}'.format(path, exc))
    return load_spec(text, catalog=catalog, budgets=budgets)
