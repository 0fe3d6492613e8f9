"""
gcqc.classical - classical outer codes.

``LinearCode`` is a linear [N, k, d] code over GF(q) given by a generator
matrix; ``mds_code`` builds (extended) Reed-Solomon codes; ``SubAlphabetCode``
is the nonlinear code made of the words of one coset of a linear code that
only use ``s < q`` symbols. Nonlinear codes are never stored as word lists
above the enumeration budget: membership is decided from the parent code.

.. code-block:: python

    >>> gf5 = field_new(5)
    >>> parent = mds_code(gf5, 6, 4)
    >>> outer = subalphabet_code(parent, 4, 'best-coset-exhaustive')
    >>> outer.size.value, outer.distance.value
    (164, 3)
"""
import itertools
import math
import warnings

import galois
import numpy as np

from . import linalg
from .excs import BudgetExceeded, CodeError, CodeWarning, Undecidable
from .field import FiniteField, field_new
from .misc import Record, _CachedAttribute, log2

__all__ = [
    'DistanceResult',
    'LinearCode',
    'SizeRecord',
    'SubAlphabetCode',
    'difference_membership',
    'explain_difference',
    'hexacode',
    'label_add',
    'linear_code',
    'mds_code',
    'membership',
    'min_distance',
    'prime_power',
    'subalphabet_code',
]

UNVERIFIED = 'unverified'
EXACT = 'verified-exact'
LOWER_BOUND = 'verified-lower-bound'

STRATEGIES = {
    'best-coset-exhaustive': 'best-coset-exhaustive',
    'best-coset': 'best-coset-exhaustive',
    'zero-shift': 'zero-shift',
    'monte-carlo': 'monte-carlo',
}

_CHUNK = 1 << 16


def _default_budgets(budgets):
    """Module default unless given."""
    if budgets is None:
        from . import BUDGETS
        return BUDGETS
    return budgets


def prime_power(size):
    """(p, b) with size == p**b, or None."""
    size = int(size)
    if size < 2:
        return None
    for p in range(2, size + 1):
        if size % p == 0:
            b = 0
            while size % p == 0:
                size //= p
                b += 1
            return (p, b) if size == 1 else None
    return None


def label_add(a, b, prime, sign=1):
    """Componentwise F_p addition of label symbols (base-p digit vectors)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if prime == 2:
        return a ^ b
    out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
    weight = 1
    top = max(int(a.max(initial=0)), int(b.max(initial=0)))
    while weight <= top:
        out += ((a // weight % prime + sign * (b // weight % prime)) % prime) \
            * weight
        weight *= prime
    return out


def _index_words(start, stop, radix, length):
    """Words whose base-``radix`` value (first symbol least significant)
    runs over start..stop-1."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, length), dtype=np.int64)
    for pos in range(length):
        out[:, pos] = idx % radix
        idx //= radix
    return out


def _encode_rows(words, radix):
    """Each row as one integer (first symbol least significant)."""
    words = np.asarray(words, dtype=np.int64)
    if radix ** words.shape[1] < 2 ** 62:
        weights = radix ** np.arange(words.shape[1], dtype=np.int64)
        return words @ weights
    return np.array([sum(d * radix ** i for i, d in enumerate(row))
                     for row in words.tolist()], dtype=object)


class DistanceResult(Record):
    """Minimum distance with verification status.

    ``value`` is the distance (exact) or a lower bound on it; ``witness`` a
    nonzero codeword of weight ``value`` when one was found.
    """
    def __init__(self, value, status, method, witness=None, checked=0):
        """Store the result."""
        super(DistanceResult, self).__init__(
            value=None if value is None else int(value), status=status,
            method=method,
            witness=None if witness is None else [int(i) for i in witness],
            checked=int(checked))

    @property
    def proved(self):
        """Whether the value is backed by a computation."""
        return self.status in (EXACT, LOWER_BOUND)


class SizeRecord(Record):
    """Size of a code: ``exact`` count, pigeonhole ``bound`` or Monte Carlo
    ``estimate`` (with a 95% interval ``low``..``high``)."""
    def __init__(self, kind, value, low=None, high=None, **extra):
        """Store the size claim."""
        super(SizeRecord, self).__init__(kind=kind, value=value,
                                         low=value if low is None else low,
                                         high=value if high is None else high,
                                         **extra)

    @property
    def log2(self):
        """log2 of the size (estimate: of the point estimate)."""
        return log2(self.value)

    @property
    def log2_low(self):
        """log2 of the lower end (-inf for an empty estimate)."""
        return log2(self.low) if self.low > 0 else -math.inf

    @property
    def log2_high(self):
        """log2 of the upper end."""
        return log2(self.high)


class LinearCode(object):
    """A linear code over GF(q) given by a generator matrix.

    The generator matrix is row-reduced, so duplicate or dependent rows just
    lower the dimension ``k``. The parity-check matrix ``H`` spans the dual.
    """
    #pylint: disable=too-many-instance-attributes,invalid-name
    is_linear = True

    def __init__(self, field, generator, claimed=None, name=None):
        """Row-reduce ``generator`` and compute the parity checks."""
        if not isinstance(field, FiniteField):
            raise CodeError.field('expected a FiniteField, got {0!r}'.format(
                field))
        gen = np.asarray(generator, dtype=np.int64)
        if gen.ndim != 2 or gen.shape[0] == 0 or gen.shape[1] == 0:
            raise CodeError.matrix('empty generator matrix')
        if gen.min() < 0 or gen.max() >= field.q:
            raise CodeError.field(
                'generator entries must be elements of {0!r}'.format(field))
        self.field = field
        self.q = field.q
        self.N = gen.shape[1]
        self.G, _ = linalg.rref(gen, field)
        self.k = self.G.shape[0]
        self.H = linalg.nullspace(self.G, field)
        self.claimed = claimed
        self.name = name

    def __repr__(self):
        """Represent a linear code by its parameters."""
        return '<LinearCode [{n},{k},{d}]_{q}{name}>'.format(
            n=self.N, k=self.k, q=self.q,
            d='?' if self.claimed is None else self.claimed,
            name='' if self.name is None else ' ' + self.name)

    __str__ = __repr__

    def __eq__(self, other):
        """Equal codes have equal canonical generator matrices."""
        return isinstance(other, LinearCode) and self.field == other.field \
            and self.G.shape == other.G.shape and np.array_equal(self.G, other.G)

    def __hash__(self):
        """LinearCode.__hash__() <==> hash(LinearCode)"""
        return hash((self.q, self.G.tobytes()))

    @property
    def alphabet_size(self):
        """Number of symbols."""
        return self.q

    @property
    def label_prime(self):
        """Characteristic used for label differences."""
        return self.field.p

    @_CachedAttribute
    def size(self):
        """Exact size q^k."""
        return SizeRecord('exact', self.q ** self.k)

    @_CachedAttribute
    def distance(self):
        """Verified minimum distance (automatic strategy, default budgets)."""
        return min_distance(self, 'auto')

    def encode(self, messages):
        """Codewords of message rows (length k)."""
        return self.field.matmul(np.atleast_2d(messages), self.G)

    def syndrome(self, words):
        """H . w^T for each row w."""
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if not self.H.shape[0]:
            return np.zeros((words.shape[0], 0), dtype=np.int64)
        return self.field.matmul(words, self.H.T)

    def _check_words(self, words):
        """Reject words of the wrong length or alphabet."""
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if words.shape[1] != self.N:
            raise CodeError.length('word length {0} != code length {1}'.format(
                words.shape[1], self.N))
        if words.size and (words.min() < 0 or words.max() >= self.q):
            raise CodeError.alphabet('symbols outside 0..{0}'.format(self.q - 1))
        return words

    def contains(self, words):
        """Membership of each row."""
        words = self._check_words(words)
        return ~self.syndrome(words).any(axis=1)

    def codewords(self, budget=None):
        """Yield all codewords in chunks (message order)."""
        total = self.q ** self.k
        budget = _default_budgets(None).enumeration if budget is None else budget
        if total > budget:
            raise BudgetExceeded('codewords of {0!r}'.format(self), total, budget)
        for start in range(0, total, _CHUNK):
            msgs = _index_words(start, min(total, start + _CHUNK), self.q, self.k)
            yield self.encode(msgs)


def linear_code(field, generator, claimed=None, name=None):
    """Build a LinearCode from a generator matrix."""
    return LinearCode(field, generator, claimed=claimed, name=name)


def _rs_generator(field, n, k):
    """Generator of the narrow-sense RS [n, k] code and its evaluation points.

    For the primitive length q-1, column j is f(x_j) for a polynomial f of
    degree < k, and every codeword c has sum c_j x_j^i = 0 for i = 1..n-k;
    the point order is the one that satisfies those checks.
    """
    GF = field.GF  #pylint: disable=invalid-name
    descending = GF.primitive_element ** np.arange(n - 1, -1, -1)
    if k == n:
        return GF(np.eye(k, dtype=np.int64)), descending
    gen = galois.ReedSolomon(n, k, field=GF).G
    powers = np.arange(1, n - k + 1)
    for points in (descending, descending[::-1]):
        if not np.any((gen @ (points[:, None] ** powers[None, :]))
                      .view(np.ndarray)):
            return gen, points
    raise CodeError.verification(
        'RS [{0},{1}] over {2!r} is not narrow-sense'.format(n, k, field))


def mds_code(field, N, k, verify=True, budgets=None):
    #pylint: disable=invalid-name
    """Reed-Solomon [N, k, N-k+1] code from ``galois.ReedSolomon``.

    Lengths up to q-1 are (shortened) RS codes. Length q appends the
    evaluation at 0 (minus the sum of the coordinates) to the primitive code,
    and length q+1 also the point at infinity (the leading coefficient, minus
    sum of c_j x_j^(q-k)). With ``verify`` the distance is checked and stored.
    """
    if not 1 <= k <= N:
        raise CodeError.length('need 1 <= k <= N, got k={0}, N={1}'.format(k, N))
    q = field.q
    if N > q + 1:
        raise CodeError.length(
            'MDS length {0} exceeds q+1 = {1}'.format(N, q + 1))
    GF = field.GF  #pylint: disable=invalid-name
    if k >= N - 1:
        gen = GF(np.eye(k, N, dtype=np.int64))
        if k == N - 1:
            gen[:, -1] = -GF.Ones(k)
    elif N < q:
        gen, _ = _rs_generator(field, N, k)
    else:
        gen, points = _rs_generator(field, q - 1, k)
        zero = -np.sum(gen, axis=1)
        columns = [gen, zero[:, None]]
        if N == q + 1:
            infinity = -(gen @ (points ** (q - k)))
            columns.append(infinity[:, None])
        gen = np.concatenate(columns, axis=1)
    gen = np.asarray(gen.view(np.ndarray), dtype=np.int64)
    code = LinearCode(field, gen, claimed=N - k + 1,
                      name='RS' if N < q else 'extended RS')
    if verify:
        result = min_distance(code, 'auto', budgets=budgets)
        if result.status == EXACT and result.value != N - k + 1:
            raise CodeError.verification(
                '{0!r} has distance {1}, not N-k+1'.format(code, result.value))
        code.distance = result
    return code


def hexacode():
    """The [6,3,4] hexacode over GF(4), containing the all-ones word."""
    gf4 = field_new(2, 2)
    # w = 2, w^2 = 3 in GF(4) encodings
    gen = [[1, 0, 0, 1, 2, 2],
           [0, 1, 0, 2, 1, 2],
           [0, 0, 1, 2, 2, 1]]
    code = LinearCode(gf4, gen, claimed=4, name='hexacode')
    result = min_distance(code, 'exact')
    if result.value != 4:
        raise CodeError.verification('hexacode has distance {0}'.format(
            result.value))
    code.distance = result
    return code


def _exact_distance(code, budgets):
    """Minimum weight over all nonzero codewords."""
    total = code.q ** code.k
    if total > budgets.enumeration:
        raise BudgetExceeded('exact distance of {0!r}'.format(code), total,
                             budgets.enumeration)
    best, witness = None, None
    for words in code.codewords(budgets.enumeration):
        weights = np.count_nonzero(words, axis=1)
        weights[weights == 0] = code.N + 1
        pos = int(np.argmin(weights))
        if weights[pos] <= code.N and (best is None or weights[pos] < best):
            best, witness = int(weights[pos]), words[pos]
    return DistanceResult(best, EXACT, 'exact-enumeration', witness, total)


def _column_scan(code, upto, budgets, find_witness_at=None):
    """Check every set of <= upto columns of H for independence.

    Returns ``(weight, witness, checked)``: the first (smallest) dependent
    set yields a codeword of exactly that weight; ``weight`` is None when
    all sets up to ``upto`` are independent. ``find_witness_at`` continues
    with sets of that size until the first dependency.
    """
    field, H = code.field, code.H
    sizes = list(range(1, upto + 1))
    if find_witness_at is not None:
        sizes.append(find_witness_at)
    cost = sum(math.comb(code.N, t) for t in range(1, upto + 1))
    if cost > budgets.columns:
        raise BudgetExceeded('column sets of {0!r}'.format(code), cost,
                             budgets.columns)
    checked = 0
    for size in sizes:
        for cols in itertools.combinations(range(code.N), size):
            checked += 1
            sub = H[:, list(cols)]
            if linalg.rank(sub, field) == size:
                continue
            coef = linalg.nullspace(sub, field)[0]
            if np.count_nonzero(coef) != size:
                continue  # a smaller dependency, seen already
            word = np.zeros(code.N, dtype=np.int64)
            word[list(cols)] = coef
            return size, word, checked
    return None, None, checked


def min_distance(code, mode='auto', w=None, witness=False, budgets=None):
    """Minimum distance of a LinearCode.

    ``mode='exact'`` enumerates all q^k codewords. ``mode='lower-bound'``
    certifies d >= w + 1 by checking every set of <= w columns of H, or
    finds a dependent set (then the result is exact); with ``witness`` it
    continues at size w + 1 to find a weight-(w+1) word and report d exactly.
    ``mode='auto'`` uses the ascending column test when its cost fits the
    column budget and exact enumeration otherwise.
    """
    budgets = _default_budgets(budgets)
    if mode == 'exact':
        return _exact_distance(code, budgets)
    if mode == 'lower-bound':
        if w is None or not 0 <= w <= code.N:
            raise CodeError.precondition('lower-bound needs 0 <= w <= N')
        found, word, checked = _column_scan(
            code, w, budgets, find_witness_at=(w + 1) if witness else None)
        if found is not None:
            return DistanceResult(found, EXACT, 'column-independence', word,
                                  checked)
        return DistanceResult(w + 1, LOWER_BOUND, 'column-independence',
                              None, checked)
    if mode != 'auto':
        raise CodeError.precondition('unknown distance mode {0!r}'.format(mode))
    if code.k == 0:
        return DistanceResult(None, EXACT, 'zero-code')
    redundancy = code.N - code.k
    cost = sum(math.comb(code.N, t) for t in range(1, redundancy + 2))
    if cost <= budgets.columns:
        found, word, checked = _column_scan(code, redundancy + 1, budgets)
        return DistanceResult(found, EXACT, 'column-independence', word,
                              checked)
    if code.q ** code.k <= budgets.enumeration:
        return _exact_distance(code, budgets)
    upto = 0
    while upto < code.N and sum(math.comb(code.N, t)
                                for t in range(1, upto + 2)) <= budgets.columns:
        upto += 1
    found, word, checked = _column_scan(code, upto, budgets)
    if found is not None:
        return DistanceResult(found, EXACT, 'column-independence', word, checked)
    warnings.warn(CodeWarning.unverified(
        '{0!r}: distance only bounded below by {1}'.format(code, upto + 1)))
    return DistanceResult(upto + 1, LOWER_BOUND, 'column-independence', None,
                          checked)


class SubAlphabetCode(object):
    """Words of one coset ``shift + parent`` using only ``s`` symbols.

    Labels 0..s-1 are mapped into the parent field by ``injection``
    (identity on encodings by default). Any two members differ by a parent
    codeword, so the parent's distance carries over.
    """
    #pylint: disable=too-many-instance-attributes,too-many-arguments
    is_linear = False

    def __init__(self, parent, s, shift, size, strategy, injection=None,
                 members=None):
        """Store the construction; use ``subalphabet_code`` to build one."""
        self.parent = parent
        self.field = parent.field
        self.N = parent.N
        self.s = int(s)
        self.q = parent.q
        self.shift = np.asarray(shift, dtype=np.int64)
        self.size = size
        self.strategy = strategy
        self.injection = np.arange(self.s, dtype=np.int64) if injection is None \
            else np.asarray(injection, dtype=np.int64)
        self._members = members
        self._shift_syndrome = parent.syndrome(self.shift)[0]
        self._injected = np.zeros(self.q, dtype=bool)
        self._injected[self.injection] = True

    def __repr__(self):
        """Represent by parameters."""
        return '<SubAlphabetCode ({n},{size},{d})_{s} from {parent!r}>'.format(
            n=self.N, size=self.size.value, d=self.distance.value, s=self.s,
            parent=self.parent)

    __str__ = __repr__

    @property
    def alphabet_size(self):
        """Number of symbols."""
        return self.s

    @property
    def label_prime(self):
        """Characteristic of the label space (s must be a prime power)."""
        pp = prime_power(self.s)
        return None if pp is None else pp[0]

    @property
    def distance(self):
        """Inherited from the parent."""
        return self.parent.distance

    @property
    def enumerable(self):
        """Whether the member list is available."""
        return self._members is not None

    def members(self, budget=None):
        """Member label words, enumerated on demand within budget."""
        if self._members is None:
            budget = _default_budgets(None).enumeration if budget is None \
                else budget
            total = self.s ** self.N
            if total > budget:
                raise BudgetExceeded('members of {0!r}'.format(self), total,
                                     budget)
            found = []
            for start in range(0, total, _CHUNK):
                words = _index_words(start, min(total, start + _CHUNK),
                                     self.s, self.N)
                found.append(words[self._in_coset(self.injection[words])])
            self._members = np.concatenate(found)
        return self._members

    def _in_coset(self, symbols):
        """Whether injected words lie in shift + parent."""
        syn = self.parent.syndrome(symbols)
        return (syn == self._shift_syndrome).all(axis=1)

    def contains(self, words):
        """Membership of each row of label words."""
        words = np.atleast_2d(np.asarray(words, dtype=np.int64))
        if words.shape[1] != self.N:
            raise CodeError.length('word length {0} != code length {1}'.format(
                words.shape[1], self.N))
        ok = ((words >= 0) & (words < self.s)).all(axis=1)
        result = np.zeros(words.shape[0], dtype=bool)
        if ok.any():
            result[ok] = self._in_coset(self.injection[words[ok]])
        return result

    def estimate_size(self, seed, samples):
        """Monte Carlo size of this coset's sub-alphabet part.

        Samples uniform words of ``shift + parent`` and counts those that only
        use injected symbols; the 95% interval is Wilson's.
        """
        rng = np.random.default_rng(seed)
        parent = self.parent
        hits = 0
        done = 0
        while done < samples:
            count = min(_CHUNK * 2, samples - done)
            msgs = rng.integers(0, parent.q, size=(count, parent.k))
            words = parent.field.add(parent.encode(msgs), self.shift[None, :])
            hits += int(self._injected[words].all(axis=1).sum())
            done += count
        rate = hits / float(samples)
        z = 1.959963984540054
        denom = 1 + z * z / samples
        centre = (rate + z * z / (2 * samples)) / denom
        half = z * math.sqrt(rate * (1 - rate) / samples
                             + z * z / (4 * samples * samples)) / denom
        full = float(parent.q ** parent.k)
        return SizeRecord('estimate', full * rate,
                          low=full * max(centre - half, 0.0),
                          high=full * (centre + half),
                          seed=seed, samples=int(samples), hits=hits,
                          claim='instantiated-coset')


def subalphabet_code(parent, s, strategy='best-coset-exhaustive', seed=None,
                     samples=None, injection=None, budgets=None):
    """Restrict a coset of ``parent`` to ``s`` symbols.

    ``best-coset-exhaustive`` counts sub-alphabet words in every coset and
    keeps a largest one (ties: smallest syndrome), recording the exact size.
    ``zero-shift`` keeps the code itself and records the pigeonhole bound,
    which is a claim about the best coset. ``monte-carlo`` keeps the code
    itself and records a seeded size estimate.
    """
    #pylint: disable=too-many-arguments,too-many-locals
    budgets = _default_budgets(budgets)
    if strategy not in STRATEGIES:
        raise CodeError.precondition('unknown strategy {0!r}'.format(strategy))
    strategy = STRATEGIES[strategy]
    if not 1 <= s < parent.q:
        raise CodeError.alphabet('need 1 <= s < q = {0}, got {1}'.format(
            parent.q, s))
    inj = np.arange(s, dtype=np.int64) if injection is None \
        else np.asarray(injection, dtype=np.int64)
    if inj.shape != (s,) or len(set(inj.tolist())) != s \
            or inj.min() < 0 or inj.max() >= parent.q:
        raise CodeError.alphabet('injection must map {0} labels to distinct '
                                 'field elements'.format(s))
    pigeonhole = -((-(parent.q ** parent.k) * s ** parent.N)
                   // parent.q ** parent.N)
    zero = np.zeros(parent.N, dtype=np.int64)
    if strategy == 'zero-shift':
        warnings.warn(CodeWarning.pigeonhole(
            'size {0} is a pigeonhole claim about the best coset, not the '
            'zero coset'.format(pigeonhole)))
        size = SizeRecord('bound', pigeonhole, claim='best-coset',
                          provenance='pigeonhole')
        return SubAlphabetCode(parent, s, zero, size, strategy, inj)
    if strategy == 'monte-carlo':
        if seed is None or not samples:
            raise CodeError.precondition('monte-carlo needs seed and samples')
        code = SubAlphabetCode(parent, s, zero, None, strategy, inj)
        code.size = code.estimate_size(seed, samples)
        code.bound = pigeonhole
        return code
    total = s ** parent.N
    if total > budgets.enumeration:
        raise BudgetExceeded('sub-alphabet words of {0!r}'.format(parent),
                             total, budgets.enumeration)
    radix = parent.q
    cosets = radix ** (parent.N - parent.k)
    counts = {}
    for start in range(0, total, _CHUNK):
        words = _index_words(start, min(total, start + _CHUNK), s, parent.N)
        keys = _encode_rows(parent.syndrome(inj[words]), radix)
        uniq, cnt = np.unique(keys, return_counts=True)
        for key, num in zip(uniq.tolist(), cnt.tolist()):
            counts[key] = counts.get(key, 0) + num
    best = max(sorted(counts), key=lambda key: counts[key])
    members = []
    for start in range(0, total, _CHUNK):
        words = _index_words(start, min(total, start + _CHUNK), s, parent.N)
        keys = _encode_rows(parent.syndrome(inj[words]), radix)
        members.append(words[keys == best])
    members = np.concatenate(members)
    if len(members) < pigeonhole:
        raise CodeError.verification(
            'best coset holds {0} < pigeonhole bound {1}'.format(
                len(members), pigeonhole))
    size = SizeRecord('exact', len(members), cosets=cosets,
                      provenance='best-coset-exhaustive')
    return SubAlphabetCode(parent, s, inj[members[0]], size, strategy, inj,
                           members=members)


def membership(code, word):
    """Whether ``word`` is a member of a LinearCode or SubAlphabetCode."""
    return bool(code.contains(np.asarray(word)[None, :])[0])


def explain_difference(code, word, budgets=None):
    """Decide whether ``word`` is a difference of two members.

    Returns ``(result, reason)``; reason is one of ``zero``, ``linear``,
    ``distance-shortcut`` or ``enumeration``.
    """
    budgets = _default_budgets(budgets)
    word = np.asarray(word, dtype=np.int64)
    if word.shape != (code.N,):
        raise CodeError.length('word length {0} != code length {1}'.format(
            word.shape, code.N))
    if not word.any():
        return True, 'zero'
    if code.is_linear:
        return membership(code, word), 'linear'
    support = int(np.count_nonzero(word))
    delta = code.distance.value if code.distance.proved else None
    if delta is not None and support < delta:
        return False, 'distance-shortcut'
    prime = code.label_prime
    if prime is None:
        raise Undecidable('alphabet size {0} is not a prime power'.format(
            code.s), word)
    if not code.enumerable and code.s ** code.N > budgets.enumeration:
        raise Undecidable('nonlinear code is not enumerable and the support '
                          '{0} is not below its distance'.format(support), word)
    members = code.members(budgets.enumeration)
    keys = set(_encode_rows(members, code.s).tolist())
    moved = _encode_rows(label_add(members, word[None, :], prime), code.s)
    return any(key in keys for key in moved.tolist()), 'enumeration'


def difference_membership(code, word, budgets=None):
    """Whether ``word`` lies in code - code (label-space differences)."""
    return explain_difference(code, word, budgets)[0]
