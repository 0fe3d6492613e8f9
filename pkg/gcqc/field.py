"""
gcqc.field - exact arithmetic in small finite fields GF(p^m).

Elements are the integers ``0 .. p^m - 1``; the base-p digits of an element
are its polynomial coefficients, constant term first. Every field uses one
fixed modulus from ``MODULI`` so element encodings are the same on every run.
The arithmetic itself is done by ``galois`` field arrays; ``FiniteField``
keeps the rest of the package on plain int64 numpy arrays.

.. code-block:: python

    >>> gf4 = field_new(2, 2)
    >>> gf4.mul(2, 3)
    1
    >>> gf4.to_prime_vector(3)
    (1, 1)
"""
import galois
import numpy as np

from .excs import CodeError

__all__ = [
    'FiniteField',
    'MODULI',
    'arith',
    'field_for_order',
    'field_new',
]

MAX_CHARACTERISTIC = 2 ** 16
MAX_ORDER = 2 ** 20

# Moduli as integers in base p, leading coefficient included.
# Prime fields use x and are not listed.
MODULI = {
    (2, 2): 0b111,                   # x^2+x+1
    (2, 3): 0b1011,                  # x^3+x+1
    (2, 4): 0b10011,                 # x^4+x+1
    (2, 5): 0b100101,                # x^5+x^2+1
    (2, 6): 0b1000011,               # x^6+x+1
    (2, 7): 0b10000011,              # x^7+x+1
    (2, 8): 0x11d,                   # x^8+x^4+x^3+x^2+1
    (2, 9): 0x211,                   # x^9+x^4+1
    (2, 10): 0x409,                  # x^10+x^3+1
    (2, 11): 0x805,                  # x^11+x^2+1
    (2, 12): 0x1053,                 # x^12+x^6+x^4+x+1
    (2, 13): 0x201b,                 # x^13+x^4+x^3+x+1
    (2, 14): 0x4443,                 # x^14+x^10+x^6+x+1
    (2, 15): 0x8003,                 # x^15+x+1
    (2, 16): 0x1100b,                # x^16+x^12+x^3+x+1
    (2, 17): 0x20009,                # x^17+x^3+1
    (2, 18): 0x40081,                # x^18+x^7+1
    (2, 19): 0x80027,                # x^19+x^5+x^2+x+1
    (2, 20): 0x100009,               # x^20+x^3+1
    (3, 2): 1 * 9 + 2 * 3 + 2,       # x^2+2x+2
    (3, 3): 27 + 2 * 3 + 1,          # x^3+2x+1
    (3, 4): 81 + 2 * 27 + 2,         # x^4+2x^3+2
    (5, 2): 25 + 4 * 5 + 2,          # x^2+4x+2
    (5, 3): 125 + 3 * 5 + 3,         # x^3+3x+3
    (7, 2): 49 + 6 * 7 + 3,          # x^2+6x+3
    (7, 3): 343 + 6 * 49 + 4,        # x^3+6x^2+4
}

_FIELDS = {}


def _plain(array):
    """A galois array as int64 numpy."""
    return np.asarray(array.view(np.ndarray), dtype=np.int64)


class FiniteField(object):
    """The field GF(p^m) with the modulus from ``MODULI``.

    ``GF`` is the backing ``galois`` field class. Scalar operations take and
    return Python ints; the array operations (``add``, ``sub``, ``neg``,
    ``mul``, ``inv``, ``scale``, ``matmul``) work elementwise on numpy arrays
    of element encodings.
    """

    def __init__(self, p, m=1):
        """Validate (p, m) and build the galois field with the table modulus."""
        if p > MAX_CHARACTERISTIC or not galois.is_prime(p):
            raise CodeError.field(
                'characteristic {0} is not a prime <= 2^16'.format(p))
        if m < 1 or p ** m > MAX_ORDER:
            raise CodeError.field(
                'GF({0}^{1}) exceeds the supported size 2^20'.format(p, m))
        if m == 1:
            modulus = p  # x
        elif (p, m) in MODULI:
            modulus = MODULI[(p, m)]
        else:
            raise CodeError.field(
                'no table modulus for GF({0}^{1})'.format(p, m))
        self.p = p
        self.m = m
        self.q = p ** m
        self.modulus = modulus
        try:
            if m == 1:
                self.GF = galois.GF(p)
            else:
                self.GF = galois.GF(self.q, irreducible_poly=modulus)
        except ValueError as exc:
            raise CodeError.field(
                'table modulus for GF({0}^{1}): {2}'.format(p, m, exc))
        self.generator = int(self.GF.primitive_element)

    def __repr__(self):
        """Represent a field."""
        if self.m == 1:
            return '<GF({p})>'.format(p=self.p)
        return '<GF({p}^{m}) mod {mod}>'.format(
            p=self.p, m=self.m, mod=self.modulus_string())

    __str__ = __repr__

    def __eq__(self, other):
        """Fields are equal when their parameters are."""
        return isinstance(other, FiniteField) \
            and (self.p, self.m) == (other.p, other.m)

    def __hash__(self):
        """FiniteField.__hash__() <==> hash(FiniteField)"""
        return hash((self.p, self.m))

    def __reduce__(self):
        """Pickle through the memoised constructor."""
        return (field_new, (self.p, self.m))

    def modulus_string(self):
        """The modulus as a human-readable polynomial."""
        return str(self.GF.irreducible_poly).replace(' ', '')

    def wrap(self, a):
        """Element encodings as a galois array (prime fields reduce mod p)."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            a = a % self.p
        return self.GF(a)

    def _check(self, *elems):
        """Reject scalars outside 0..q-1."""
        for elem in elems:
            if not 0 <= int(elem) < self.q:
                raise CodeError.field(
                    '{0} is not an element of {1!r}'.format(elem, self))

    # scalar API

    def add_scalar(self, a, b):
        """a + b."""
        self._check(a, b)
        return int(self.add(a, b))

    def sub_scalar(self, a, b):
        """a - b."""
        self._check(a, b)
        return int(self.sub(a, b))

    def mul_scalar(self, a, b):
        """a * b."""
        self._check(a, b)
        return int(self.mul(a, b))

    def inv_scalar(self, a):
        """Multiplicative inverse; 0 has none."""
        self._check(a)
        if int(a) == 0:
            raise ZeroDivisionError('0 has no inverse in {0!r}'.format(self))
        return int(self.inv(a))

    def pow_scalar(self, a, exponent):
        """a ** exponent; negative exponents invert first."""
        self._check(a)
        exponent = int(exponent)
        if exponent < 0:
            a = self.inv_scalar(a)
            exponent = -exponent
        return int(self.GF(int(a)) ** exponent)

    def to_prime_vector(self, a):
        """The base-p digit vector of ``a`` (length m)."""
        self._check(a)
        return tuple(int(d) for d in self.to_digits(int(a)))

    def from_prime_vector(self, vec):
        """Inverse of ``to_prime_vector``."""
        vec = [int(v) for v in vec]
        if len(vec) != self.m or any(not 0 <= v < self.p for v in vec):
            raise CodeError.field(
                '{0!r} is not a GF({1}) vector of length {2}'.format(
                    vec, self.p, self.m))
        return int(self.from_digits(vec))

    def elements(self):
        """All elements as an int64 array."""
        return np.arange(self.q, dtype=np.int64)

    # array API

    def add(self, a, b):
        """Elementwise a + b."""
        return _plain(self.wrap(a) + self.wrap(b))

    def neg(self, a):
        """Elementwise -a."""
        return _plain(-self.wrap(a))

    def sub(self, a, b):
        """Elementwise a - b."""
        return _plain(self.wrap(a) - self.wrap(b))

    def mul(self, a, b):
        """Elementwise a * b."""
        return _plain(self.wrap(a) * self.wrap(b))

    def inv(self, a):
        """Elementwise inverse; zero entries raise ZeroDivisionError."""
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise ZeroDivisionError('0 has no inverse in {0!r}'.format(self))
        return _plain(np.reciprocal(self.wrap(a)))

    def scale(self, scalar, vec):
        """scalar * vec for a field scalar."""
        return self.mul(np.int64(scalar), vec)

    def matmul(self, a, b):
        """Matrix product over the field."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if not a.shape[1] or not a.shape[0] or not b.shape[1]:
            return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        return _plain(self.wrap(a) @ self.wrap(b))

    def to_digits(self, a):
        """Base-p digits of an element array; new last axis of length m."""
        return _plain(self.wrap(a).vector())[..., ::-1].copy()

    def from_digits(self, digits):
        """Inverse of ``to_digits`` along the last axis."""
        digits = np.asarray(digits, dtype=np.int64) % self.p
        return _plain(self.GF.Vector(digits[..., ::-1]))


def field_new(p, m=1):
    """Return GF(p^m), constructing it on first use."""
    key = (int(p), int(m))
    if key not in _FIELDS:
        _FIELDS[key] = FiniteField(*key)
    return _FIELDS[key]


def field_for_order(q):
    """Return GF(q) for a prime power q."""
    q = int(q)
    if q < 2 or not galois.is_prime_power(q):
        raise CodeError.field('{0} is not a prime power'.format(q))
    primes, exponents = galois.factors(q)
    return field_new(primes[0], exponents[0])


def arith(field, op, a, b=None):
    """Scalar arithmetic by name: add, sub, mul, inv or pow."""
    ops = {
        'add': field.add_scalar,
        'sub': field.sub_scalar,
        'mul': field.mul_scalar,
        'pow': field.pow_scalar,
    }
    if op == 'inv':
        return field.inv_scalar(a)
    if op not in ops:
        raise CodeError.field('unknown field operation {0!r}'.format(op))
    return ops[op](a, b)
