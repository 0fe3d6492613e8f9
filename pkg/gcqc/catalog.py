"""
gcqc.catalog - named inner codes, nested chains and the worked examples.

Every entry is built on first request and checked before it is handed out:
stabilizer codes against their expected ``[[n, k, d]]`` (``d`` is the minimum
weight of the normalizer), chains against their per-level coset distances.
A failed check is a construction bug and raises ``CodeError.verification``.

.. code-block:: python

    >>> from gcqc import catalog
    >>> catalog.get('five_qubit')
    <StabilizerCode [[5,1,3]] five_qubit>
    >>> catalog.get('qhamming(3)').parameters
    (21, 15, 3)
    >>> spec = catalog.get('paper_example(1)')

Names with an argument use call syntax: ``full(n)``, ``qhamming(m)``,
``qhamming_chain(m)`` and ``paper_example(i)``.
"""
import itertools
import pkgutil
import re
import threading

import numpy as np

from . import linalg
from .classical import EXACT, DistanceResult
from .distance import chain_distances, min_symplectic_weight
from .excs import BudgetExceeded, CodeError
from .field import field_new
from .symplectic import (_extension, build_chain, full_space_code,
                         stabilizer_code, symplectic_products)

__all__ = [
    'CATALOG',
    'Catalog',
    'CatalogEntry',
    'find_nested_subcode',
    'get',
    'gf4_to_symplectic',
    'mixed_example',
    'paper_example',
    'qhamming',
    'spec_json',
]

FIVE_QUBIT = 'XZZXI IXZZX XIXZZ ZXIXZ'
STEANE = 'IIIXXXX IXXIIXX XIXIXIX IIIZZZZ IZZIIZZ ZIZIZIZ'
EIGHT_THREE_THREE = 'XXXXXXXX ZZZZZZZZ XIXIZYZY XIYZXIYZ XZIYIYXZ'
SIX_FOUR_TWO = 'XXXXXX ZZZZZZ'
HEXACODE_GF4 = [[1, 0, 0, 1, 2, 2],
                [0, 1, 0, 2, 1, 2],
                [0, 0, 1, 2, 2, 1]]

EXAMPLES = ('example1', 'example2', 'example3', 'example4', 'example5')

# GF(4) encodings 0, 1, w, w^2 as (x | z) bits: w -> X, w^2 -> Z, 1 -> Y
_GF4_X = np.array([0, 1, 1, 0], dtype=np.int64)
_GF4_Z = np.array([0, 1, 0, 1], dtype=np.int64)

_NAME = re.compile(r'^\s*([a-z_][a-z0-9_]*)\s*(?:\(\s*(\d+)\s*\))?\s*$')


def _default_budgets(budgets):
    """Module default unless given."""
    if budgets is None:
        from . import BUDGETS
        return BUDGETS
    return budgets


def gf4_to_symplectic(matrix):
    """Binary ``(x | z)`` generators of the additive span of GF(4) rows.

    Every row ``c`` contributes ``c`` and ``w.c``, so a GF(4)-linear code of
    dimension m gives 2m binary generators.
    """
    gf4 = field_new(2, 2)
    mat = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
    rows = np.empty((2 * mat.shape[0], mat.shape[1]), dtype=np.int64)
    rows[0::2] = mat
    rows[1::2] = gf4.scale(2, mat)
    return np.concatenate([_GF4_X[rows], _GF4_Z[rows]], axis=1)


def _projective_points(m):
    """Columns of the GF(4) Hamming parity-check matrix: one nonzero vector
    per projective point, leading nonzero entry 1."""
    points = []
    for value in range(1, 4 ** m):
        digits = [(value // 4 ** (m - 1 - i)) % 4 for i in range(m)]
        lead = next(d for d in digits if d)
        if lead == 1:
            points.append(digits)
    return np.array(points, dtype=np.int64).T


def _gaussian_binomial(dim, t, p):
    """Number of t-dimensional subspaces of F_p^dim."""
    num = den = 1
    for i in range(t):
        num *= p ** (dim - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def _subspaces(dim, t, p):
    """Reduced row-echelon coefficient matrices of every t-dimensional
    subspace of F_p^dim, pivot sets in lexicographic order."""
    for pivots in itertools.combinations(range(dim), t):
        free = [(row, col) for row, piv in enumerate(pivots)
                for col in range(piv + 1, dim) if col not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            mat = np.zeros((t, dim), dtype=np.int64)
            mat[np.arange(t), list(pivots)] = 1
            for (row, col), val in zip(free, values):
                mat[row, col] = val
            yield mat


def _normalizer_distance(code, budgets):
    """Minimum nonzero weight of N(S)."""
    if not code.stabilizer.dim:
        witness = np.zeros(2 * code.n, dtype=np.int64)
        witness[0] = 1
        return DistanceResult(1, EXACT, 'empty-stabilizer', witness, 0)
    return min_symplectic_weight(code.normalizer, budgets=budgets)


def find_nested_subcode(outer, target_k, target_d, budgets=None):
    """First stabilizer code nested with ``outer`` that encodes ``target_k``
    qudits and has normalizer distance at least ``target_d``.

    For ``target_k > k`` the candidates are the subgroups of the stabilizer
    of that dimension; for ``target_k < k`` they are the isotropic
    extensions of the stabilizer inside the normalizer. Candidates are
    visited in reduced row-echelon order of their coefficients.
    """
    #pylint: disable=too-many-locals
    budgets = _default_budgets(budgets)
    if not 0 <= target_k <= outer.n:
        raise CodeError.precondition('target k={0} outside 0..{1}'.format(
            target_k, outer.n))
    field = field_new(outer.p)
    if target_k == outer.k:
        found = _normalizer_distance(outer, budgets)
        if found.value is not None and found.value >= target_d:
            return outer
        raise CodeError.search('{0!r} itself misses distance {1}'.format(
            outer, target_d))
    if target_k > outer.k:
        space = outer.generators
        fixed = np.zeros((0, 2 * outer.n), dtype=np.int64)
        t = outer.n - target_k
    else:
        space = _extension(outer.normalizer, outer.stabilizer)
        fixed = outer.generators
        t = outer.k - target_k
    count = _gaussian_binomial(space.shape[0], t, outer.p)
    if count > budgets.enumeration:
        raise BudgetExceeded('nested subcodes of {0!r}'.format(outer), count,
                             budgets.enumeration)
    name = '[[{0},{1}]] in {2}'.format(outer.n, target_k,
                                         outer.name or 'code')
    for coef in _subspaces(space.shape[0], t, outer.p):
        rows = linalg.matmul(coef, space, field) if t \
            else np.zeros((0, 2 * outer.n), dtype=np.int64)
        if target_k < outer.k:
            if symplectic_products(rows, rows, outer.p).any():
                continue
            rows = np.concatenate([fixed, rows])
        code = stabilizer_code(rows, n=outer.n, p=outer.p, name=name,
                               claimed=target_d)
        found = _normalizer_distance(code, budgets)
        if found.proved and found.value is not None \
                and found.value >= target_d:
            code.distance = found
            return code
    raise CodeError.search(
        'none of the {0} candidates is a [[{1},{2},{3}]] code'.format(
            count, outer.n, target_k, target_d))


class CatalogEntry(object):
    """A named constructor with what its result must satisfy.

    ``expected`` is ``(n, k, d)`` for codes and the per-level coset
    distances for chains; ``recipe`` names how the result is checked.
    """
    def __init__(self, name, build, kind, expected=None, recipe=None,
                 summary=None):
        """Store the entry."""
        self.name = name
        self.build = build
        self.kind = kind
        self.expected = expected
        self.recipe = recipe
        self.summary = summary

    def __repr__(self):
        """Represent an entry."""
        return '<CatalogEntry {name} ({kind})>'.format(name=self.name,
                                                       kind=self.kind)

    __str__ = __repr__

    @property
    def parametric(self):
        """Whether the name takes an integer argument."""
        return self.name.endswith(')')

    @property
    def base(self):
        """Name without the argument."""
        return self.name.split('(')[0]


class Catalog(object):
    """Named codes, chains and example specs, built and checked once.

    The first ``get`` of a name builds it; later calls return the same
    object. Built objects are shared and must not be modified.
    """
    def __init__(self, budgets=None):
        """Register every entry."""
        self.budgets = budgets
        self._built = {}
        self._lock = threading.RLock()
        entries = [
            CatalogEntry('five_qubit', self._five_qubit, 'code', (5, 1, 3),
                         'normalizer', 'cyclic XZZXI code'),
            CatalogEntry('steane', self._steane, 'code', (7, 1, 3),
                         'normalizer', 'CSS code of the [7,4,3] Hamming code'),
            CatalogEntry('hexacode', self._hexacode, 'code', (6, 0, 4),
                         'normalizer', 'GF(4) hexacode as a stabilizer'),
            CatalogEntry('six_four_two', self._six_four_two, 'code',
                         (6, 4, 2), 'normalizer', 'stabilized by X^6 and Z^6'),
            CatalogEntry('eight_three_three', self._eight_three_three, 'code',
                         (8, 3, 3), 'normalizer', 'non-CSS [[8,3,3]] code'),
            CatalogEntry('eight_six_two', self._eight_six_two, 'code',
                         (8, 6, 2), 'nested-search',
                         '[[8,6,2]] containing [[8,3,3]]'),
            CatalogEntry('full(n)', self._full, 'code', None, 'trivial',
                         '[[n,n,1]], empty stabilizer'),
            CatalogEntry('qhamming(m)', self._qhamming, 'code', None,
                         'normalizer', '[[(4^m-1)/3, n-2m, 3]] Hamming code'),
            CatalogEntry('hexacode_chain', self._hexacode_chain, 'chain',
                         (1, 2, 4), 'coset-distances',
                         '[[6,6,1]] > [[6,4,2]] > [[6,0,4]]'),
            CatalogEntry('five_chain', self._five_chain, 'chain', (1, 3),
                         'coset-distances', '[[5,5,1]] > [[5,1,3]]'),
            CatalogEntry('steane_chain', self._steane_chain, 'chain', (1, 3),
                         'coset-distances', '[[7,7,1]] > [[7,1,3]]'),
            CatalogEntry('eight_chain', self._eight_chain, 'chain', (1, 2, 3),
                         'coset-distances',
                         '[[8,8,1]] > [[8,6,2]] > [[8,3,3]]'),
            CatalogEntry('qhamming_chain(m)', self._qhamming_chain, 'chain',
                         (1, 3), 'coset-distances',
                         '[[n,n,1]] > qhamming(m)'),
            CatalogEntry('paper_example(i)', self._paper_example, 'spec',
                         None, 'spec-file', 'worked examples 1..5'),
        ]
        self.entries = {entry.base: entry for entry in entries}

    def __repr__(self):
        """Represent by size."""
        return '<Catalog entries={0} built={1}>'.format(len(self.entries),
                                                        len(self._built))

    __str__ = __repr__

    def __contains__(self, name):
        """Whether ``name`` parses to a known entry."""
        try:
            self._parse(name)
        except CodeError:
            return False
        return True

    def _parse(self, name):
        """``(entry, argument)`` of a name."""
        match = _NAME.match(name) if isinstance(name, str) else None
        if match is None:
            raise CodeError.unknown('malformed catalog name {0!r}'.format(name))
        base, arg = match.group(1), match.group(2)
        entry = self.entries.get(base)
        if entry is None:
            raise CodeError.unknown('no catalog entry {0!r}'.format(base))
        if entry.parametric != (arg is not None):
            raise CodeError.unknown('{0!r} is written {1}'.format(name,
                                                                  entry.name))
        return entry, None if arg is None else int(arg)

    def get(self, name):
        """The verified object called ``name``."""
        entry, arg = self._parse(name)
        key = entry.base if arg is None else '{0}({1})'.format(entry.base, arg)
        with self._lock:
            if key not in self._built:
                obj = entry.build() if arg is None else entry.build(arg)
                self._check(entry, obj, arg)
                self._built[key] = obj
            return self._built[key]

    def names(self):
        """Entry names in registration order."""
        return [entry.name for entry in self.entries.values()]

    def _check(self, entry, obj, arg):
        """Run an entry's recipe."""
        budgets = _default_budgets(self.budgets)
        if entry.kind == 'code':
            if obj.distance is None:
                obj.distance = _normalizer_distance(obj, budgets)
            expected = entry.expected
            if entry.base == 'full':
                expected = (arg, arg, 1)
            elif entry.base == 'qhamming':
                n = (4 ** arg - 1) // 3
                expected = (n, n - 2 * arg, 3)
            if obj.parameters != expected or not obj.distance.proved:
                raise CodeError.verification(
                    '{0} built as {1}, expected [[{2},{3},{4}]]'.format(
                        entry.name, obj.parameters, *expected))
        elif entry.kind == 'chain':
            found = tuple(d.value for d in chain_distances(obj,
                                                           budgets=budgets))
            if found != entry.expected:
                raise CodeError.verification(
                    '{0} has coset distances {1}, expected {2}'.format(
                        entry.name, found, entry.expected))

    # codes

    def _five_qubit(self):
        """[[5,1,3]]"""
        return stabilizer_code(FIVE_QUBIT.split(), name='five_qubit',
                               claimed=3)

    def _steane(self):
        """[[7,1,3]]"""
        return stabilizer_code(STEANE.split(), name='steane', claimed=3)

    def _hexacode(self):
        """[[6,0,4]]"""
        return stabilizer_code(gf4_to_symplectic(HEXACODE_GF4), n=6,
                               name='hexacode', claimed=4)

    def _six_four_two(self):
        """[[6,4,2]]"""
        return stabilizer_code(SIX_FOUR_TWO.split(), name='six_four_two',
                               claimed=2)

    def _eight_three_three(self):
        """[[8,3,3]]"""
        return stabilizer_code(EIGHT_THREE_THREE.split(),
                               name='eight_three_three', claimed=3)

    def _eight_six_two(self):
        """[[8,6,2]] found inside the [[8,3,3]] stabilizer."""
        code = find_nested_subcode(self.get('eight_three_three'), 6, 2,
                                   budgets=self.budgets)
        code.name = 'eight_six_two'
        return code

    def _full(self, n):
        """[[n,n,1]]"""
        if n < 1:
            raise CodeError.precondition('full(n) needs n >= 1')
        return full_space_code(n)

    def _qhamming(self, m):
        """Quantum Hamming code from the GF(4) Hamming parity checks."""
        if not 2 <= m <= 6:
            raise CodeError.precondition(
                'qhamming(m) is cataloged for 2 <= m <= 6, got {0}'.format(m))
        checks = _projective_points(m)
        return stabilizer_code(gf4_to_symplectic(checks), n=checks.shape[1],
                               name='qhamming({0})'.format(m), claimed=3)

    # chains

    def _hexacode_chain(self):
        """Example 1 inner chain."""
        return build_chain([self.get('full(6)'), self.get('six_four_two'),
                            self.get('hexacode')])

    def _five_chain(self):
        """Example 3 inner chain."""
        return build_chain([self.get('full(5)'), self.get('five_qubit')])

    def _steane_chain(self):
        """Steane code below the full space."""
        return build_chain([self.get('full(7)'), self.get('steane')])

    def _eight_chain(self):
        """Example 4 inner chain."""
        return build_chain([self.get('full(8)'), self.get('eight_six_two'),
                            self.get('eight_three_three')])

    def _qhamming_chain(self, m):
        """Quantum Hamming code below the full space."""
        code = self.get('qhamming({0})'.format(m))
        return build_chain([self.get('full({0})'.format(code.n)), code])

    # examples

    def _paper_example(self, index):
        """GCSpec of a worked example."""
        from .specfile import load_spec
        if not 1 <= index <= len(EXAMPLES):
            raise CodeError.unknown('examples are numbered 1..{0}'.format(
                len(EXAMPLES)))
        return load_spec(spec_json(EXAMPLES[index - 1]), catalog=self).spec


CATALOG = Catalog()


def get(name):
    """Verified catalog object called ``name`` (shared default catalog)."""
    return CATALOG.get(name)


def qhamming(m):
    """[[(4^m-1)/3, n-2m, 3]] quantum Hamming code."""
    return CATALOG.get('qhamming({0})'.format(m))


def paper_example(index):
    """GCSpec of worked example ``index`` (1..5)."""
    return CATALOG.get('paper_example({0})'.format(index))


def spec_json(name):
    """Text of a bundled example spec file (``example1`` .. ``example5``)."""
    if name not in EXAMPLES:
        raise CodeError.unknown('no bundled spec {0!r}; choose from {1}'.format(
            name, ', '.join(EXAMPLES)))
    return pkgutil.get_data('gcqc', 'specs/{0}.json'.format(name)).decode(
        'utf-8')


def mixed_example(counts, catalog=None):
    """Example 2 with a mix of inner codes over the [65, 63] outer code.

    ``counts`` maps catalog chain or code names with six label digits
    (``steane``, ``qhamming(3)``, or their chains) to block counts summing
    to 65.
    """
    from .classical import mds_code
    from .gc import GCSpec
    catalog = CATALOG if catalog is None else catalog
    chains = []
    for name in sorted(counts):
        count = int(counts[name])
        if count < 0:
            raise CodeError.precondition('negative count for {0}'.format(name))
        obj = catalog.get(name)
        if not hasattr(obj, 'levels'):
            obj = build_chain([catalog.get('full({0})'.format(obj.n)), obj])
        chains.extend([obj] * count)
    if len(chains) != 65:
        raise CodeError.length('block counts sum to {0}, not 65'.format(
            len(chains)))
    outer = mds_code(field_new(2, 6), 65, 63, budgets=catalog.budgets)
    return GCSpec(chains, [outer], name='mixed')
