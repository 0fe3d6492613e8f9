"""
gcqc.symplectic - Pauli-type codes in symplectic form.

A vector of ``F_p^{2n}`` is stored as ``(x | z)``: the first ``n`` entries are
the X parts, the last ``n`` the Z parts. Its symplectic weight is the number
of positions where ``(x_i, z_i) != (0, 0)``. Codes are kept as canonical
(row-reduced) bases so equal codes have equal matrices.

.. code-block:: python

    >>> five = stabilizer_code(['XZZXI', 'IXZZX', 'XIXZZ', 'ZXIXZ'])
    >>> five.n, five.k
    (5, 1)
    >>> chain = build_chain([full_space_code(5), five])
    >>> chain.b
    (4,)
"""
import numpy as np

from . import linalg
from .excs import BudgetExceeded, CodeError
from .field import field_new
from .misc import _CachedAttribute, log2

__all__ = [
    'AdditiveSymplecticCode',
    'NestedStabilizerChain',
    'StabilizerCode',
    'SymplecticVector',
    'UnionStabilizerCode',
    'build_chain',
    'coset_label',
    'coset_rep',
    'dual_rows',
    'from_pauli',
    'full_space_code',
    'pauli_io',
    'random_chain',
    'stabilizer_code',
    'symplectic_dual',
    'symplectic_product',
    'symplectic_products',
    'symplectic_weight',
    'to_pauli',
]

PAULI_CHARS = {'I': (0, 0), 'X': (1, 0), 'Z': (0, 1), 'Y': (1, 1)}
PAULI_NAMES = {val: key for key, val in PAULI_CHARS.items()}

_POPCOUNT = np.array([bin(i).count('1') for i in range(256)], dtype=np.int64)


def _as_rows(vectors):
    """At least 2-d int64 rows."""
    if isinstance(vectors, SymplecticVector):
        vectors = vectors.data
    return np.atleast_2d(np.asarray(vectors, dtype=np.int64))


def dual_rows(vectors, p):
    """Rows ``(z | -x)``: ``u . dual_rows(v)`` is the symplectic product."""
    vectors = _as_rows(vectors)
    n = vectors.shape[1] // 2
    return np.concatenate([vectors[:, n:], (-vectors[:, :n]) % p], axis=1)


def symplectic_products(left, right, p=2):
    """Matrix of products ``<left_i, right_j>`` modulo p."""
    left = _as_rows(left)
    right = _as_rows(right)
    if left.shape[1] != right.shape[1]:
        raise CodeError.length('vector lengths {0} and {1} differ'.format(
            left.shape[1], right.shape[1]))
    if not left.shape[0] or not right.shape[0]:
        return np.zeros((left.shape[0], right.shape[0]), dtype=np.int64)
    return linalg.matmul(left, dual_rows(right, p).T, p)


def symplectic_weight(vectors):
    """Symplectic weight of a vector, or of each row."""
    rows = _as_rows(vectors)
    n = rows.shape[1] // 2
    weights = np.count_nonzero(rows[:, :n] | rows[:, n:], axis=1)
    if isinstance(vectors, SymplecticVector) or np.ndim(vectors) == 1:
        return int(weights[0])
    return weights


def to_pauli(vector):
    """Pauli string of a binary vector (phases are not represented)."""
    row = _as_rows(vector)[0]
    n = row.size // 2
    if row.size % 2 or (row.size and row.max() > 1) or row.min(initial=0) < 0:
        raise CodeError.alphabet('Pauli strings need binary (x|z) vectors')
    return ''.join(PAULI_NAMES[(int(row[i]), int(row[n + i]))]
                   for i in range(n))


def from_pauli(text):
    """Binary ``(x | z)`` vector of a Pauli string over I, X, Y, Z."""
    text = text.strip().upper()
    out = np.zeros(2 * len(text), dtype=np.int64)
    for i, char in enumerate(text):
        if char not in PAULI_CHARS:
            raise CodeError.alphabet(
                'bad Pauli character {0!r} at position {1}'.format(char, i))
        out[i], out[len(text) + i] = PAULI_CHARS[char]
    return out


def pauli_io(direction, data):
    """``pauli_io('to', vector)`` -> string, ``pauli_io('from', text)`` ->
    SymplecticVector."""
    if direction == 'to':
        return to_pauli(data)
    if direction == 'from':
        return SymplecticVector(from_pauli(data))
    raise CodeError.precondition('direction must be "to" or "from"')


class SymplecticVector(object):
    """One vector ``(x | z)`` of ``F_p^{2n}``.

    Binary vectors also keep a bit-packed copy so products reduce to
    AND, XOR and a popcount.
    """
    def __init__(self, data, p=2):
        """Wrap ``data`` (length 2n, entries mod p) or a Pauli string."""
        if isinstance(data, str):
            if p != 2:
                raise CodeError.alphabet('Pauli strings are binary')
            data = from_pauli(data)
        data = np.asarray(data, dtype=np.int64).ravel()
        if data.size % 2:
            raise CodeError.length('symplectic vectors have even length')
        self.data = data % p
        self.p = p
        self.n = data.size // 2

    def __repr__(self):
        """Pauli string for binary vectors, digits otherwise."""
        if self.p == 2:
            return '<SymplecticVector {0}>'.format(to_pauli(self.data))
        return '<SymplecticVector {0}|{1} mod {2}>'.format(
            ''.join(map(str, self.x)), ''.join(map(str, self.z)), self.p)

    __str__ = __repr__

    def __eq__(self, other):
        """Equal entries and prime."""
        return isinstance(other, SymplecticVector) and self.p == other.p \
            and np.array_equal(self.data, other.data)

    def __hash__(self):
        """SymplecticVector.__hash__() <==> hash(SymplecticVector)"""
        return hash((self.p, self.data.tobytes()))

    def __add__(self, other):
        """Componentwise sum."""
        return SymplecticVector(self.data + _as_rows(other)[0], self.p)

    def __sub__(self, other):
        """Componentwise difference."""
        return SymplecticVector(self.data - _as_rows(other)[0], self.p)

    def __neg__(self):
        """Additive inverse."""
        return SymplecticVector(-self.data, self.p)

    def __len__(self):
        """Ambient length 2n."""
        return self.data.size

    @property
    def x(self):
        """X part."""
        return self.data[:self.n]

    @property
    def z(self):
        """Z part."""
        return self.data[self.n:]

    @property
    def weight(self):
        """Symplectic weight."""
        return symplectic_weight(self.data)

    @_CachedAttribute
    def packed(self):
        """Bit-packed ``(x, z)`` (binary vectors only)."""
        return np.packbits(self.x.astype(np.uint8)), \
            np.packbits(self.z.astype(np.uint8))

    def to_pauli(self):
        """Pauli string."""
        return to_pauli(self.data)


def symplectic_product(u, v, p=None):
    """``sum_i x_i z'_i - z_i x'_i`` modulo p."""
    if isinstance(u, SymplecticVector) and isinstance(v, SymplecticVector):
        if len(u) != len(v):
            raise CodeError.length('vector lengths {0} and {1} differ'.format(
                len(u), len(v)))
        if u.p == 2 and v.p == 2:
            (ux, uz), (vx, vz) = u.packed, v.packed
            return int(_POPCOUNT[(ux & vz) ^ (uz & vx)].sum() & 1)
        p = u.p
    return int(symplectic_products(u, v, 2 if p is None else p)[0, 0])


class AdditiveSymplecticCode(object):
    """An F_p-linear subspace of ``F_p^{2n}`` with a canonical basis."""
    def __init__(self, basis, n, p=2):
        """Row-reduce ``basis`` (rows of length 2n)."""
        basis = np.asarray(basis, dtype=np.int64).reshape(-1, 2 * n)
        self.n = n
        self.p = p
        self.field = field_new(p)
        self.basis, self.pivots = linalg.rref(basis % p, self.field)

    def __repr__(self):
        """Represent by length and dimension."""
        return '<AdditiveSymplecticCode n={n} dim={dim} p={p}>'.format(
            n=self.n, dim=self.dim, p=self.p)

    __str__ = __repr__

    def __eq__(self, other):
        """Equal codes have equal canonical bases."""
        return isinstance(other, AdditiveSymplecticCode) \
            and (self.n, self.p) == (other.n, other.p) \
            and self.basis.shape == other.basis.shape \
            and np.array_equal(self.basis, other.basis)

    def __hash__(self):
        """AdditiveSymplecticCode.__hash__() <==> hash(AdditiveSymplecticCode)"""
        return hash((self.n, self.p, self.basis.tobytes()))

    @property
    def dim(self):
        """Dimension over F_p."""
        return self.basis.shape[0]

    @_CachedAttribute
    def dual(self):
        """The symplectic dual."""
        return symplectic_dual(self)

    def contains(self, vectors):
        """Membership of each row."""
        mask, _ = linalg.in_rowspan(_as_rows(vectors) % self.p, self.basis,
                                    self.pivots, self.field)
        return mask

    def issubset(self, other):
        """Whether every basis row lies in ``other``."""
        return bool(other.contains(self.basis).all()) if self.dim else True

    def residual(self, vectors):
        """Canonical coset representative of each row modulo this code."""
        rows = _as_rows(vectors) % self.p
        if not self.dim:
            return rows
        coef = rows[:, self.pivots]
        return self.field.sub(rows, self.field.matmul(coef, self.basis))

    def span_with(self, vectors):
        """The code spanned by this code and ``vectors``."""
        return AdditiveSymplecticCode(
            np.concatenate([self.basis, _as_rows(vectors).reshape(
                -1, 2 * self.n)]), self.n, self.p)

    def syndromes(self, vectors):
        """Products of each row with every basis vector."""
        return symplectic_products(vectors, self.basis, self.p)

    def is_self_orthogonal(self):
        """Whether the code lies in its dual."""
        return not self.syndromes(self.basis).any()

    def codewords(self, budget=None):
        """Yield all codewords in chunks."""
        if budget is None:
            from . import BUDGETS
            budget = BUDGETS.enumeration
        total = self.p ** self.dim
        if total > budget:
            raise BudgetExceeded('codewords of {0!r}'.format(self), total,
                                 budget)
        chunk = 1 << 16
        for start in range(0, total, chunk):
            idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
            coef = np.empty((idx.size, self.dim), dtype=np.int64)
            for col in range(self.dim):
                coef[:, col] = idx % self.p
                idx //= self.p
            yield self.field.matmul(coef, self.basis) if self.dim \
                else np.zeros((idx.size, 2 * self.n), dtype=np.int64)


def symplectic_dual(code):
    """``{v : <v, c> = 0 for all c in code}``."""
    if not code.dim:
        return AdditiveSymplecticCode(np.eye(2 * code.n, dtype=np.int64),
                                      code.n, code.p)
    basis = linalg.nullspace(dual_rows(code.basis, code.p), code.field)
    return AdditiveSymplecticCode(basis, code.n, code.p)


class StabilizerCode(object):
    """A stabilizer code: self-orthogonal ``S`` and its normalizer ``N(S)``.

    ``distance`` is filled in by verification (see ``gcqc.distance``);
    ``claimed`` is what the construction promises.
    """
    def __init__(self, stabilizer, name=None, claimed=None):
        """Check self-orthogonality of ``stabilizer``."""
        self.stabilizer = stabilizer
        self.n = stabilizer.n
        self.p = stabilizer.p
        self.k = self.n - stabilizer.dim
        self.name = name
        self.claimed = claimed
        self.distance = None
        if not stabilizer.is_self_orthogonal():
            raise CodeError.orthogonality(
                'stabilizer of {0} is not self-orthogonal'.format(
                    name or 'code'))

    def __repr__(self):
        """Represent as [[n,k,d]]."""
        dist = self.distance.value if self.distance is not None \
            else self.claimed
        return '<StabilizerCode [[{n},{k},{d}]]{name}>'.format(
            n=self.n, k=self.k, d='?' if dist is None else dist,
            name='' if self.name is None else ' ' + self.name)

    __str__ = __repr__

    def __eq__(self, other):
        """Same stabilizer."""
        return isinstance(other, StabilizerCode) \
            and self.stabilizer == other.stabilizer

    def __hash__(self):
        """StabilizerCode.__hash__() <==> hash(StabilizerCode)"""
        return hash(self.stabilizer)

    @_CachedAttribute
    def normalizer(self):
        """N(S), the symplectic dual of the stabilizer."""
        return self.stabilizer.dual

    @property
    def generators(self):
        """Canonical stabilizer basis."""
        return self.stabilizer.basis

    def pauli_generators(self):
        """Stabilizer basis as Pauli strings (binary codes)."""
        return [to_pauli(row) for row in self.generators]

    @property
    def parameters(self):
        """``(n, k, d)`` with d None when unverified."""
        return (self.n, self.k,
                None if self.distance is None else self.distance.value)


def stabilizer_code(generators, n=None, p=2, name=None, claimed=None):
    """Stabilizer code from generators (Pauli strings or vectors).

    Dependent generators are allowed; the pair that fails to commute is
    reported when the set is not self-orthogonal.
    """
    rows = []
    for gen in generators:
        if isinstance(gen, str):
            rows.append(from_pauli(gen))
        else:
            rows.append(_as_rows(gen)[0])
    if n is None:
        if not rows:
            raise CodeError.length('n is required for an empty generator set')
        n = rows[0].size // 2
    for idx, row in enumerate(rows):
        if row.size != 2 * n:
            raise CodeError.length('generator {0} has length {1}, not {2}'
                                   .format(idx, row.size // 2, n))
    mat = np.array(rows, dtype=np.int64).reshape(-1, 2 * n) % p
    gram = symplectic_products(mat, mat, p)
    bad = np.argwhere(np.triu(gram, 1))
    if bad.size:
        i, j = (int(x) for x in bad[0])
        raise CodeError.orthogonality(
            'generators {0} and {1} do not commute'.format(i, j))
    return StabilizerCode(AdditiveSymplecticCode(mat, n, p), name=name,
                          claimed=claimed)


def full_space_code(n, p=2):
    """[[n, n, 1]]: empty stabilizer."""
    code = stabilizer_code([], n=n, p=p, name='full({0})'.format(n),
                           claimed=1)
    return code


def _extension(big, small):
    """Rows of ``big``'s basis completing ``small``'s basis greedily."""
    field = big.field
    current = small.basis
    reduced, pivots = linalg.rref(current, field)
    chosen = []
    for row in big.basis:
        inside, _ = linalg.in_rowspan(row, reduced, pivots, field)
        if inside[0]:
            continue
        chosen.append(row)
        current = np.concatenate([current, row[None, :]])
        reduced, pivots = linalg.rref(current, field)
    return np.array(chosen, dtype=np.int64).reshape(-1, 2 * big.n)


class NestedStabilizerChain(object):
    """Codes ``B^(0) > B^(1) > ... > B^(r-1)`` with growing stabilizers.

    Level ``i`` (1..r-1) has ``b[i-1] = k_{i-1} - k_i`` label digits over
    F_p: the extension basis ``E_i`` completes N(S_i) to N(S_{i-1}), and a
    vector of N(S_0) splits uniquely as ``sum_i lambda_i . E_i`` plus an
    element of N(S_{r-1}). Label extraction is linear: ``labels = v . L^T``
    with ``L`` built from stabilizer functionals.
    """
    #pylint: disable=too-many-instance-attributes
    def __init__(self, codes):
        """Use ``build_chain``."""
        self.codes = list(codes)
        first = self.codes[0]
        self.n = first.n
        self.p = first.p
        self.field = field_new(self.p)
        self.k = tuple(code.k for code in self.codes)
        self.levels = len(self.codes) - 1
        self.b = tuple(self.k[i - 1] - self.k[i]
                       for i in range(1, len(self.codes)))
        self.alphabet_sizes = tuple(self.p ** b for b in self.b)
        self.offsets = tuple(int(x) for x in np.cumsum((0,) + self.b))
        extensions = [_extension(self.codes[i - 1].normalizer,
                                 self.codes[i].normalizer)
                      for i in range(1, len(self.codes))]
        self.E = np.concatenate(extensions) if extensions \
            else np.zeros((0, 2 * self.n), dtype=np.int64)
        top, bottom = self.codes[0].stabilizer, self.codes[-1].stabilizer
        self.top_functionals = dual_rows(top.basis, self.p) if top.dim \
            else np.zeros((0, 2 * self.n), dtype=np.int64)
        extra = _extension(bottom, top)
        if extra.shape[0] != self.E.shape[0]:
            raise CodeError.nesting('label dimensions do not match the '
                                    'stabilizer extension')
        if extra.shape[0]:
            functionals = dual_rows(extra, self.p)
            pairing = linalg.matmul(functionals, self.E.T, self.field)
            self.label_functionals = linalg.matmul(
                linalg.inverse(pairing, self.field), functionals, self.field)
        else:
            self.label_functionals = np.zeros((0, 2 * self.n), dtype=np.int64)
        self.distances = None

    def __repr__(self):
        """Represent by the k of every level."""
        return '<NestedStabilizerChain n={n} k={k} b={b}>'.format(
            n=self.n, k=self.k, b=self.b)

    __str__ = __repr__

    def __eq__(self, other):
        """Same codes in the same order."""
        return isinstance(other, NestedStabilizerChain) \
            and self.codes == other.codes

    def __hash__(self):
        """NestedStabilizerChain.__hash__() <==> hash(NestedStabilizerChain)"""
        return hash(tuple(self.codes))

    @property
    def top(self):
        """N(S_0)."""
        return self.codes[0].normalizer

    @property
    def bottom(self):
        """N(S_{r-1})."""
        return self.codes[-1].normalizer

    @property
    def label_dim(self):
        """Total number of label digits."""
        return self.E.shape[0]

    def level_basis(self, level):
        """Extension basis ``E_level`` (1-based level)."""
        return self.E[self.offsets[level - 1]:self.offsets[level]]

    def labels(self, vectors):
        """``(in_top, digits)`` for each row; digits are meaningful only
        where in_top holds."""
        rows = _as_rows(vectors) % self.p
        if self.top_functionals.shape[0]:
            in_top = ~linalg.matmul(rows, self.top_functionals.T,
                                    self.field).any(axis=1)
        else:
            in_top = np.ones(rows.shape[0], dtype=bool)
        if not self.label_dim:
            return in_top, np.zeros((rows.shape[0], 0), dtype=np.int64)
        return in_top, linalg.matmul(rows, self.label_functionals.T, self.field)

    def digits_to_symbols(self, digits):
        """Per-level symbols ``sum_d digit_d p^d`` from label digits."""
        digits = np.atleast_2d(digits)
        out = []
        for level in range(1, self.levels + 1):
            part = digits[:, self.offsets[level - 1]:self.offsets[level]]
            weights = self.p ** np.arange(part.shape[1], dtype=np.int64)
            out.append(part @ weights)
        return out

    def symbols_to_digits(self, symbols):
        """Inverse of ``digits_to_symbols``; ``symbols`` is one array per
        level."""
        parts = []
        for level, sym in enumerate(symbols, 1):
            sym = np.atleast_1d(np.asarray(sym, dtype=np.int64))
            if sym.size and (sym.min() < 0
                             or sym.max() >= self.alphabet_sizes[level - 1]):
                raise CodeError.labels('level {0} symbol out of range'.format(
                    level))
            width = self.b[level - 1]
            parts.append((sym[:, None] // self.p ** np.arange(width)) % self.p)
        if len(parts) != self.levels:
            raise CodeError.labels('expected {0} levels, got {1}'.format(
                self.levels, len(parts)))
        if not parts:
            return np.zeros((1, 0), dtype=np.int64)
        return np.concatenate(parts, axis=1)

    def reps(self, digits):
        """Coset representatives ``digits . E`` of label digit rows."""
        digits = np.atleast_2d(np.asarray(digits, dtype=np.int64))
        if digits.shape[1] != self.label_dim:
            raise CodeError.labels('expected {0} label digits, got {1}'.format(
                self.label_dim, digits.shape[1]))
        if not self.label_dim:
            return np.zeros((digits.shape[0], 2 * self.n), dtype=np.int64)
        return linalg.matmul(digits % self.p, self.E, self.field)


def build_chain(codes):
    """Check nesting and precompute the label machinery."""
    codes = list(codes)
    if not codes:
        raise CodeError.nesting('a chain needs at least one code')
    first = codes[0]
    for level, code in enumerate(codes[1:], 1):
        if (code.n, code.p) != (first.n, first.p):
            raise CodeError.nesting(
                'level {0} has n={1}, p={2}; expected n={3}, p={4}'.format(
                    level, code.n, code.p, first.n, first.p))
        prev = codes[level - 1].stabilizer
        inside = code.stabilizer.contains(prev.basis) if prev.dim \
            else np.ones(0, dtype=bool)
        if not inside.all():
            witness = prev.basis[int(np.flatnonzero(~inside)[0])]
            raise CodeError.nesting(
                'stabilizer of level {0} misses generator {1} of level {2}'
                .format(level, to_pauli(witness) if first.p == 2
                        else witness.tolist(), level - 1))
        if code.k == codes[level - 1].k:
            raise CodeError.nesting(
                'levels {0} and {1} are the same code'.format(level - 1, level))
    return NestedStabilizerChain(codes)


def coset_label(chain, vector):
    """``(labels, in_top)``: per-level symbols of one vector."""
    in_top, digits = chain.labels(vector)
    if not in_top[0]:
        return None, False
    return tuple(int(sym[0]) for sym in chain.digits_to_symbols(digits)), True


def coset_rep(chain, labels):
    """Representative of per-level label symbols."""
    labels = list(labels)
    if len(labels) != chain.levels:
        raise CodeError.labels('expected {0} levels, got {1}'.format(
            chain.levels, len(labels)))
    return SymplecticVector(chain.reps(chain.symbols_to_digits(
        [[sym] for sym in labels]))[0], chain.p)


class UnionStabilizerCode(object):
    """Union of cosets ``base + t`` of a normalizer code ``base = C0*``.

    Representatives are reduced to canonical coset representatives; the
    same coset given twice is an error.
    """
    def __init__(self, base, representatives):
        """``base`` is an AdditiveSymplecticCode containing its dual."""
        if not base.dual.issubset(base):
            raise CodeError.orthogonality('base code does not contain its dual')
        self.base = base
        self.n = base.n
        self.p = base.p
        reps = base.residual(np.asarray(representatives,
                                        dtype=np.int64).reshape(-1, 2 * base.n))
        keys = {row.tobytes() for row in reps}
        if len(keys) != reps.shape[0]:
            raise CodeError.labels('two representatives lie in the same coset')
        self.reps = reps
        self._keys = keys

    def __repr__(self):
        """Represent as ((n, K))."""
        return '<UnionStabilizerCode (({n}, 2^{dim:.4f})) cosets={c}>'.format(
            n=self.n, dim=self.log2_dimension, c=self.reps.shape[0])

    __str__ = __repr__

    @property
    def k0(self):
        """Dimension of the base stabilizer code, ``dim C0* - n``."""
        return self.base.dim - self.n

    @property
    def log2_dimension(self):
        """log2 of ``#cosets * p^k0``."""
        return log2(self.reps.shape[0]) + self.k0 * log2(self.p)

    @_CachedAttribute
    def closure(self):
        """Additive closure: span of the base and all representatives."""
        return self.base.span_with(self.reps)

    @_CachedAttribute
    def degenerate_part(self):
        """The symplectic dual of the closure."""
        return self.closure.dual

    def contains(self, vectors):
        """Membership of each row."""
        res = self.base.residual(vectors)
        return np.array([row.tobytes() in self._keys for row in res],
                        dtype=bool)


def random_chain(n, dims, rng, p=2):
    """Random nested chain with stabilizer dimensions ``dims`` (increasing,
    at most n)."""
    field = field_new(p)
    rows = np.zeros((0, 2 * n), dtype=np.int64)
    codes = []
    for target in dims:
        if target > n:
            raise CodeError.precondition('stabilizer dimension exceeds n')
        while rows.shape[0] < target:
            if rows.shape[0]:
                room = linalg.nullspace(dual_rows(rows, p), field)
            else:
                room = np.eye(2 * n, dtype=np.int64)
            coef = rng.integers(0, p, size=room.shape[0])
            cand = linalg.matmul(coef[None, :], room, field)
            if linalg.rank(np.concatenate([rows, cand]), field) > rows.shape[0]:
                rows = np.concatenate([rows, cand])
        codes.append(stabilizer_code(rows, n=n, p=p))
    return build_chain(codes)
