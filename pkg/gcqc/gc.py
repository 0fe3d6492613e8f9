"""
gcqc.gc - generalized concatenation.

A ``GCSpec`` pairs a nested chain of inner stabilizer codes (one chain used
for every block, or one chain per block) with one classical outer code per
level. The resulting ``GCCode`` is the union of cosets of
``N(S_{r-1})^N`` whose representatives are built blockwise from the columns
of an N x (r-1) array of outer codewords. Nothing is enumerated unless asked
for: membership is decided block by block from the chain labels.

Vectors of the concatenated code use the global ``(x | z)`` layout; block
``j`` owns qubits ``offsets[j] .. offsets[j] + n_j - 1``.

.. code-block:: python

    >>> code = gc_build(catalog.paper_example(1))
    >>> code.n, code.dimension.k, code.additive
    (36, 26, True)
"""
import itertools
import json
import warnings

import numpy as np

from .classical import (LinearCode, SubAlphabetCode, _encode_rows, label_add,
                        mds_code, subalphabet_code)
from .excs import BudgetExceeded, CodeError, CodeWarning, Undecidable
from .field import field_new
from .misc import Record, _CachedAttribute, log2
from .symplectic import (AdditiveSymplecticCode, NestedStabilizerChain,
                         UnionStabilizerCode, from_pauli, random_chain,
                         symplectic_products, to_pauli)

__all__ = [
    'DimensionRecord',
    'GCCode',
    'GCSpec',
    'StabilizerExport',
    'enumerate_cosets',
    'export_stabilizer',
    'gc_build',
    'gc_membership',
    'gc_parameters',
    'is_additive',
    'random_tiny_spec',
]

_CHUNK = 4096


def _default_budgets(budgets):
    """Module default unless given."""
    if budgets is None:
        from . import BUDGETS
        return BUDGETS
    return budgets


class GCSpec(object):
    """Inputs of a generalized concatenation.

    ``inner`` is one NestedStabilizerChain (used for all N blocks) or a list
    of N chains with equal label dimensions. ``outers`` holds one outer code
    per level; ``label_permutations`` optionally maps the outer symbols of a
    level to chain labels (``label = perm[symbol]``).
    """
    def __init__(self, inner, outers, label_permutations=None, length=None,
                 name=None):
        """Store the inputs; ``gc_build`` validates them."""
        self.inner = inner
        self.outers = list(outers)
        self.label_permutations = label_permutations
        self.length = length
        self.name = name

    def __repr__(self):
        """Represent by name and levels."""
        return '<GCSpec {name} levels={lv}>'.format(
            name=self.name or '', lv=len(self.outers))

    __str__ = __repr__

    @property
    def N(self):
        #pylint: disable=invalid-name
        """Outer length."""
        if self.outers:
            return self.outers[0].N
        if isinstance(self.inner, NestedStabilizerChain):
            return 1 if self.length is None else self.length
        return len(self.inner)

    @property
    def chains(self):
        """One chain per block."""
        if isinstance(self.inner, NestedStabilizerChain):
            return [self.inner] * self.N
        return list(self.inner)


class DimensionRecord(Record):
    """Dimension of a GC code as log2, with where every factor came from.

    ``k`` is the number of encoded qudits when the dimension is an exact power
    of p; ``kind`` is ``exact``, ``bound`` or ``estimate``.
    """
    pass


class _LevelDifference(object):
    """Decides which label columns of one level are differences of two
    outer codewords."""
    def __init__(self, level, outer, prime, perm, budgets):
        """Linear unpermuted levels use the syndrome; others their members."""
        self.level = level
        self.outer = outer
        self.prime = prime
        self.perm = perm
        self.factored = outer.is_linear and perm is None
        self.words = None
        self.diffs = None
        if self.factored:
            self.delta = None
            return
        self.delta = outer.distance.value if outer.distance.proved else None
        if isinstance(outer, SubAlphabetCode):
            size = outer.s ** outer.N
        else:
            size = outer.q ** outer.k
        if size > budgets.enumeration:
            return
        if isinstance(outer, SubAlphabetCode):
            words = outer.members(budgets.enumeration)
        else:
            words = np.concatenate(list(outer.codewords(budgets.enumeration)))
        self.words = words if perm is None else perm[words]
        if self.words.shape[0] ** 2 <= budgets.enumeration:
            diffs = label_add(self.words[:, None, :], self.words[None, :, :],
                              prime, sign=-1)
            self.diffs = np.unique(self._encode(diffs.reshape(-1, outer.N)))

    def _encode(self, words):
        """Label words as integers (Python ints once radix^N passes int64)."""
        return _encode_rows(words, self.outer.alphabet_size)

    @property
    def decidable(self):
        """Whether every column can be decided."""
        return self.factored or self.words is not None

    def decide(self, columns):
        """1 (difference), 0 (not) or -1 (undecidable) for each row."""
        columns = np.atleast_2d(columns)
        if self.factored:
            syn = self.outer.syndrome(columns)
            return np.where(syn.any(axis=1), 0, 1).astype(np.int8)
        out = np.full(columns.shape[0], -1, dtype=np.int8)
        zero = ~columns.any(axis=1)
        out[zero] = 1
        support = np.count_nonzero(columns, axis=1)
        if self.delta is not None:
            out[~zero & (support < self.delta)] = 0
        todo = np.flatnonzero(out == -1)
        if not todo.size:
            return out
        if self.diffs is not None:
            out[todo] = np.isin(self._encode(columns[todo]), self.diffs)
        elif self.words is not None:
            keys = set(self._encode(self.words).tolist())
            for row in todo:
                moved = self._encode(label_add(self.words, columns[row][None, :],
                                               self.prime))
                out[row] = any(key in keys for key in moved.tolist())
        return out


class GCCode(object):
    """The concatenated code ``C*_gc`` as an implicit union normalizer code.

    ``dimension`` (a DimensionRecord), ``additive`` and ``reason`` are set by
    ``gc_build``; distances come from ``gcqc.distance``.
    """
    #pylint: disable=too-many-instance-attributes
    def __init__(self, spec, budgets=None):
        """Use ``gc_build``."""
        self.spec = spec
        self.budgets = _default_budgets(budgets)
        self.chains = spec.chains
        self.N = len(self.chains)
        self.p = self.chains[0].p
        self.levels = self.chains[0].levels
        self.b = self.chains[0].b
        self.outers = spec.outers
        self.block_sizes = [chain.n for chain in self.chains]
        self.offsets = [int(x) for x in np.cumsum([0] + self.block_sizes)]
        self.n = self.offsets[-1]
        self.field = field_new(self.p)
        perms = spec.label_permutations or [None] * self.levels
        self.perms = [None if perm is None else np.asarray(perm, np.int64)
                      for perm in perms]
        self.inverse_perms = [None if perm is None else np.argsort(perm)
                              for perm in self.perms]
        self.additive, self.reason = None, None
        self.dimension = None
        self.certificate = None

    def __repr__(self):
        """Represent by length and dimension."""
        if self.dimension is not None and self.dimension.k is not None:
            size = '[[{0},{1}]]'.format(self.n, self.dimension.k)
        elif self.dimension is not None:
            size = '(({0},2^{1:.4f}))'.format(self.n, self.dimension.log2)
        else:
            size = 'n={0}'.format(self.n)
        return '<GCCode {size}{name}>'.format(
            size=size, name='' if self.spec.name is None
            else ' ' + self.spec.name)

    __str__ = __repr__

    # layout helpers

    def block(self, vectors, j):
        """Block ``j`` of global vectors, as block-local (x | z) rows."""
        vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        lo, hi = self.offsets[j], self.offsets[j + 1]
        return np.concatenate([vectors[:, lo:hi],
                               vectors[:, self.n + lo:self.n + hi]], axis=1)

    def embed(self, blocks):
        """Global vectors from one array of block-local rows per block."""
        rows = blocks[0].shape[0]
        out = np.zeros((rows, 2 * self.n), dtype=np.int64)
        for j, part in enumerate(blocks):
            lo, hi = self.offsets[j], self.offsets[j + 1]
            size = hi - lo
            out[:, lo:hi] = part[:, :size]
            out[:, self.n + lo:self.n + hi] = part[:, size:]
        return out

    def label_columns(self, vectors):
        """``(in_top, columns)``: in_top per row (all blocks in N(S_0)) and,
        per level, the (rows, N) label symbols."""
        vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
        if vectors.shape[1] != 2 * self.n:
            raise CodeError.length('vector length {0} != 2n = {1}'.format(
                vectors.shape[1], 2 * self.n))
        in_top = np.ones(vectors.shape[0], dtype=bool)
        columns = [np.zeros((vectors.shape[0], self.N), dtype=np.int64)
                   for _ in range(self.levels)]
        for j, chain in enumerate(self.chains):
            top, digits = chain.labels(self.block(vectors, j))
            in_top &= top
            for level, sym in enumerate(chain.digits_to_symbols(digits)):
                columns[level][:, j] = sym
        return in_top, columns

    def reps(self, symbol_arrays):
        """Representatives of outer words: one (rows, N) array per level."""
        symbol_arrays = [np.atleast_2d(np.asarray(s, dtype=np.int64))
                         for s in symbol_arrays]
        rows = symbol_arrays[0].shape[0] if symbol_arrays else 1
        labels = [sym if perm is None else perm[sym]
                  for sym, perm in zip(symbol_arrays, self.perms)]
        blocks = []
        for j, chain in enumerate(self.chains):
            if not self.levels:
                blocks.append(np.zeros((rows, 2 * chain.n), dtype=np.int64))
                continue
            digits = chain.symbols_to_digits([lab[:, j] for lab in labels])
            blocks.append(chain.reps(digits))
        return self.embed(blocks)

    # membership

    def members(self, vectors):
        """Membership of each row in C*_gc."""
        in_top, columns = self.label_columns(vectors)
        result = in_top.copy()
        for level, outer in enumerate(self.outers):
            if not result.any():
                break
            cols = columns[level]
            inv = self.inverse_perms[level]
            if inv is not None:
                cols = inv[cols]
            result[result] &= outer.contains(cols[result])
        return result

    @_CachedAttribute
    def level_differences(self):
        """Per-level difference deciders."""
        return [_LevelDifference(level, outer, self.p, self.perms[level - 1],
                                 self.budgets)
                for level, outer in enumerate(self.outers, 1)]

    def decide_columns(self, columns):
        """Combine the per-level decisions of label columns.

        Returns a bool array; a row none of whose levels rejects but some
        level cannot decide raises Undecidable.
        """
        rows = columns[0].shape[0] if columns else 0
        verdict = np.ones(rows, dtype=np.int8)
        for diff, cols in zip(self.level_differences, columns):
            got = diff.decide(cols)
            verdict = np.where((verdict == 0) | (got == 0), 0,
                               np.where((verdict == -1) | (got == -1), -1, 1))
        if (verdict == -1).any():
            row = int(np.flatnonzero(verdict == -1)[0])
            word = np.concatenate([cols[row] for cols in columns])
            raise Undecidable('label columns of level differences cannot be '
                              'decided with the member lists in budget', word)
        return verdict == 1

    def is_difference(self, vectors):
        """Whether each row lies in C*_gc - C*_gc (level-wise test)."""
        in_top, columns = self.label_columns(vectors)
        result = in_top.copy()
        if result.any() and self.levels:
            result[result] = self.decide_columns([c[result] for c in columns])
        return result

    # bases

    def base_code(self):
        """``N(S_{r-1})^N`` as an AdditiveSymplecticCode."""
        parts = []
        for j, chain in enumerate(self.chains):
            basis = chain.bottom.basis
            blocks = [np.zeros((basis.shape[0], 2 * c.n), dtype=np.int64)
                      for c in self.chains]
            blocks[j] = basis
            parts.append(self.embed(blocks))
        return AdditiveSymplecticCode(np.concatenate(parts), self.n, self.p)

    def base_stabilizer(self):
        """Generators of ``S_{r-1}`` on every block, embedded."""
        parts = []
        for j, chain in enumerate(self.chains):
            basis = chain.codes[-1].generators
            blocks = [np.zeros((basis.shape[0], 2 * c.n), dtype=np.int64)
                      for c in self.chains]
            blocks[j] = basis
            parts.append(self.embed(blocks))
        return np.concatenate(parts)

    def outer_words(self, level, budget):
        """All words of one outer code as label symbols (before
        permutation)."""
        outer = self.outers[level - 1]
        if isinstance(outer, SubAlphabetCode):
            return outer.members(budget)
        return np.concatenate(list(outer.codewords(budget)))

    def coset_count(self):
        """Exact number of cosets ``prod |A_i|`` when sizes are exact."""
        total = 1
        for outer in self.outers:
            if outer.size.kind != 'exact':
                return None
            total *= int(outer.size.value)
        return total

    def coset_chunks(self, budget=None):
        """Representatives of every coset, in chunks."""
        budget = _default_budgets(None).enumeration if budget is None \
            else budget
        count = self.coset_count()
        if count is None or count > budget:
            raise BudgetExceeded('cosets of {0!r}'.format(self),
                                 count if count is not None else 'unknown',
                                 budget)
        words = [self.outer_words(level, budget)
                 for level in range(1, self.levels + 1)]
        if not words:
            yield self.reps([])
            return
        combos = itertools.product(*[range(w.shape[0]) for w in words])
        while True:
            chunk = list(itertools.islice(combos, _CHUNK))
            if not chunk:
                break
            idx = np.array(chunk, dtype=np.int64).reshape(len(chunk), -1)
            yield self.reps([w[idx[:, i]] for i, w in enumerate(words)])

    def to_union(self, budget=None):
        """Explicit UnionStabilizerCode (small instances)."""
        reps = np.concatenate(list(self.coset_chunks(budget)))
        return UnionStabilizerCode(self.base_code(), reps)

    def describe(self):
        """JSON-ready description of the construction."""
        return {
            'n': self.n,
            'p': self.p,
            'N': self.N,
            'blocks': self.block_sizes,
            'levels': self.levels,
            'label_dims': list(self.b),
            'inner_k': [list(chain.k) for chain in self.chains],
            'outer': [_describe_outer(outer) for outer in self.outers],
            'additive': self.additive,
            'reason': self.reason,
            'dimension': self.dimension,
        }


def _describe_outer(outer):
    """JSON-ready description of an outer code."""
    if isinstance(outer, LinearCode):
        return {'type': 'linear', 'q': outer.q, 'n': outer.N, 'k': outer.k,
                'distance': outer.distance, 'generators': outer.G}
    return {'type': 'subalphabet', 's': outer.s, 'n': outer.N,
            'parent': _describe_outer(outer.parent), 'shift': outer.shift,
            'strategy': outer.strategy, 'size': outer.size}


def _check_spec(spec):
    """Raise CodeError for incompatible inputs."""
    chains = spec.chains
    if not chains:
        raise CodeError.length('a GC code needs at least one block')
    first = chains[0]
    for j, chain in enumerate(chains):
        if not isinstance(chain, NestedStabilizerChain):
            raise CodeError.spec('inner of block {0} is not a chain'.format(j))
        if chain.p != first.p:
            raise CodeError.alphabet('block {0} uses p={1}, block 0 p={2}'
                                     .format(j, chain.p, first.p))
        if chain.b != first.b:
            raise CodeError.labels(
                'block {0} has label dimensions {1}, block 0 has {2}'.format(
                    j, chain.b, first.b))
    if len(spec.outers) != first.levels:
        raise CodeError.length('{0} outer codes for {1} levels'.format(
            len(spec.outers), first.levels))
    for level, outer in enumerate(spec.outers, 1):
        expected = first.p ** first.b[level - 1]
        if outer.alphabet_size != expected:
            raise CodeError.alphabet(
                'level {0}: outer alphabet must have p^b = {1} symbols, '
                'got {2}'.format(level, expected, outer.alphabet_size))
        if outer.is_linear and outer.field.p != first.p:
            raise CodeError.alphabet(
                'level {0}: outer field has characteristic {1}, chain has '
                '{2}'.format(level, outer.field.p, first.p))
        if outer.N != len(chains):
            raise CodeError.length('level {0}: outer length {1} != N = {2}'
                                   .format(level, outer.N, len(chains)))
    perms = spec.label_permutations
    if perms is not None:
        if len(perms) != first.levels:
            raise CodeError.labels('one label permutation (or None) per level')
        for level, perm in enumerate(perms, 1):
            if perm is None:
                continue
            size = first.alphabet_sizes[level - 1]
            if sorted(int(x) for x in perm) != list(range(size)):
                raise CodeError.labels(
                    'level {0}: not a permutation of 0..{1}'.format(
                        level, size - 1))


def is_additive(code):
    """``(additive, reason)``: every outer code and label map is linear."""
    for level, outer in enumerate(code.outers, 1):
        if not outer.is_linear:
            return False, 'A{0} nonlinear'.format(level)
        perm = code.perms[level - 1]
        if perm is not None and not np.array_equal(perm, np.arange(perm.size)):
            return False, 'level {0} label permutation'.format(level)
    return True, 'all outer codes linear and label maps linear'


def _dimension(code):
    """DimensionRecord from outer sizes and the last inner level."""
    logp = log2(code.p)
    inner_k = sum(chain.k[-1] for chain in code.chains)
    log_total = inner_k * logp
    low = high = log_total
    factors, provenance = [], []
    kinds = set()
    exact_k = inner_k
    for level, outer in enumerate(code.outers, 1):
        size = outer.size
        kinds.add(size.kind)
        log_total += size.log2
        low += size.log2_low
        high += size.log2_high
        factors.append(str(size.value) if size.kind == 'exact'
                       else '~2^{0:.4f}'.format(size.log2))
        provenance.append({'level': level, 'kind': size.kind,
                           'source': size.info.get('provenance',
                                                   size.info.get('claim',
                                                                 size.kind))})
        if exact_k is not None and size.kind == 'exact':
            value, power = int(size.value), 0
            while value % code.p == 0 and value > 1:
                value //= code.p
                power += 1
            exact_k = exact_k + power if value == 1 else None
        else:
            exact_k = None
    factors.append('{0}^{1}'.format(code.p, inner_k))
    kind = 'estimate' if 'estimate' in kinds else \
        'bound' if 'bound' in kinds else 'exact'
    return DimensionRecord(log2=log_total, low=low, high=high, kind=kind,
                           k=exact_k, factors=factors, provenance=provenance)


def gc_build(spec, budgets=None):
    """Validate a GCSpec and build the implicit code (no enumeration)."""
    _check_spec(spec)
    code = GCCode(spec, budgets)
    code.additive, code.reason = is_additive(code)
    code.dimension = _dimension(code)
    if code.additive and code.levels:
        warnings.warn(CodeWarning.dimension(
            'dimension is p^(N*k_(r-1)) * prod M_i, counted from the '
            'last inner level'))
    return code


def gc_membership(code, vector):
    """Whether one vector lies in C*_gc."""
    return bool(code.members(vector)[0])


def gc_parameters(code, budgets=None, threads=None):
    """Parameter record: length, dimension, additivity and the composite
    distance bound with its leaves."""
    from .distance import certify_theorem1
    if code.certificate is None:
        code.certificate = certify_theorem1(code, budgets=budgets,
                                            threads=threads)
    cert = code.certificate
    return Record(n=code.n, k=code.dimension.k,
                  log2_dimension=code.dimension.log2,
                  dimension=code.dimension, additive=code.additive,
                  reason=code.reason, bound=cert.d, bound_status=cert.status,
                  leaves=cert.evidence)


def enumerate_cosets(code, budget=None):
    """Yield one representative per coset of ``N(S_{r-1})^N``."""
    for chunk in code.coset_chunks(budget):
        for row in chunk:
            yield row


class StabilizerExport(object):
    """Stabilizer generators of an additive GC code and their renderings."""
    HEADER = 'GCQC v1'

    def __init__(self, generators, n, k, p=2):
        """Keep the generator rows (2n entries mod p each)."""
        self.generators = np.asarray(generators, dtype=np.int64).reshape(
            -1, 2 * n)
        self.n = n
        self.k = k
        self.p = p

    def __repr__(self):
        """Represent by parameters."""
        return '<StabilizerExport [[{n},{k}]] generators={g}>'.format(
            n=self.n, k=self.k, g=self.generators.shape[0])

    __str__ = __repr__

    def __eq__(self, other):
        """Same parameters and generator matrix."""
        return isinstance(other, StabilizerExport) \
            and (self.n, self.k, self.p) == (other.n, other.k, other.p) \
            and np.array_equal(self.generators, other.generators)

    def __hash__(self):
        """StabilizerExport.__hash__() <==> hash(StabilizerExport)"""
        return hash((self.n, self.k, self.generators.tobytes()))

    def pauli_strings(self):
        """One Pauli string per generator (binary codes)."""
        return [to_pauli(row) for row in self.generators]

    def to_text(self):
        """Header, parameter line and one Pauli string per line."""
        lines = [self.HEADER, 'n={0} k={1} p={2}'.format(self.n, self.k,
                                                          self.p)]
        lines.extend(self.pauli_strings())
        return '\n'.join(lines) + '\n'

    def to_matrix(self):
        """Header, parameter line and one row of 2n integers per line."""
        lines = [self.HEADER, 'n={0} k={1} p={2}'.format(self.n, self.k,
                                                          self.p)]
        lines.extend(' '.join(str(int(x)) for x in row)
                     for row in self.generators)
        return '\n'.join(lines) + '\n'

    def to_json(self, indent=None):
        """JSON with the generators as Pauli strings (binary) or rows."""
        data = {'format': self.HEADER, 'n': self.n, 'k': self.k, 'p': self.p}
        if self.p == 2:
            data['generators'] = self.pauli_strings()
        else:
            data['generators'] = self.generators.tolist()
        return json.dumps(data, sort_keys=True, indent=indent)

    @classmethod
    def from_json(cls, text):
        """Inverse of ``to_json``."""
        try:
            data = json.loads(text)
            n, k, p = int(data['n']), int(data['k']), int(data['p'])
            gens = data['generators']
        except (ValueError, KeyError, TypeError) as exc:
            raise CodeError.spec('bad stabilizer export: {0}'.format(exc))
        rows = [from_pauli(g) if isinstance(g, str) else g for g in gens]
        return cls(np.array(rows, dtype=np.int64).reshape(-1, 2 * n), n, k, p)

    def membership(self, vectors):
        """Whether each row commutes with every generator (lies in the
        normalizer)."""
        if not self.generators.shape[0]:
            return np.ones(np.atleast_2d(vectors).shape[0], dtype=bool)
        return ~symplectic_products(vectors, self.generators,
                                    self.p).any(axis=1)


def export_stabilizer(code):
    """Stabilizer of an additive GC code.

    The normalizer is spanned by ``N(S_{r-1})`` on every block plus the
    representatives of ``x^t . g`` for every outer generator row ``g`` and
    every power ``x^t`` of the outer field; the stabilizer is its dual.
    """
    if not code.additive:
        raise CodeError.precondition(
            'cannot export a stabilizer: {0}'.format(code.reason))
    rows = [code.base_code().basis]
    for level, outer in enumerate(code.outers, 1):
        width = code.b[level - 1]
        for g in outer.G:
            for t in range(width):
                word = outer.field.scale(code.p ** t, g)
                arrays = [np.zeros((1, code.N), dtype=np.int64)
                          for _ in range(code.levels)]
                arrays[level - 1] = word[None, :]
                rows.append(code.reps(arrays))
    normalizer = AdditiveSymplecticCode(np.concatenate(rows), code.n, code.p)
    stabilizer = normalizer.dual
    k = normalizer.dim - code.n
    if code.dimension.k is not None and k != code.dimension.k:
        raise CodeError.verification(
            'normalizer has dimension {0}, expected n+k = {1}'.format(
                normalizer.dim, code.n + code.dimension.k))
    return StabilizerExport(stabilizer.basis, code.n, k, code.p)


def _random_outer(rng, size, length, nonlinear):
    """Random small outer code over an alphabet of ``size`` symbols."""
    if size in (2, 4) and rng.random() < nonlinear:
        parent_field = field_new(3 if size == 2 else 5)
        parent = mds_code(parent_field, length, int(rng.integers(1, length + 1)))
        return subalphabet_code(parent, size, 'best-coset-exhaustive')
    field = field_new(2, 1 if size == 2 else 2)
    rows = int(rng.integers(1, length + 1))
    gen = rng.integers(0, size, size=(rows, length))
    gen[0, int(rng.integers(0, length))] = 1
    return LinearCode(field, gen)


def random_tiny_spec(rng, max_block=3, max_length=3, nonlinear=0.35,
                     permute=0.0):
    """A random GC spec with ambient space of at most 2^(2 * 9) vectors.

    Each outer code is a sub-alphabet code with probability ``nonlinear``;
    each level gets a random non-identity label permutation with
    probability ``permute``.
    """
    n = int(rng.integers(1, max_block + 1))
    dims = [int(rng.integers(0, n))]
    for _ in range(int(rng.integers(1, 3))):
        step = int(rng.integers(1, 3))
        if dims[-1] + step > n:
            break
        dims.append(dims[-1] + step)
    if len(dims) == 1:
        dims.append(dims[0] + 1)
    chain = random_chain(n, dims, rng)
    length = int(rng.integers(1, max_length + 1))
    outers = [_random_outer(rng, size, length, nonlinear)
              for size in chain.alphabet_sizes]
    perms = []
    for size in chain.alphabet_sizes:
        perm = None
        if permute and rng.random() < permute:
            perm = np.roll(np.arange(size), 1)
            rng.shuffle(perm[1:])
        perms.append(perm)
    if all(perm is None for perm in perms):
        perms = None
    return GCSpec(chain, outers, label_permutations=perms, name='random')
