"""
gcqc.scan - batched enumeration of low-weight Pauli vectors.

Every question asked of a weight-w vector here is linear in the vector: a
set of F_p "key" digits (syndromes, label digits, outer-code syndromes) that
is the sum of one contribution per nonzero position. The scanner therefore
precomputes the contribution of every (position, Pauli value) pair and, for
each prefix of w-1 positions, adds the contributions of all Pauli values on
the prefix and of every later position at once.

Binary keys are bit-packed into uint64 words and combined with XOR; keys
over larger primes are digit arrays combined modulo p.

A vector is a hit when its leading ``linear_width`` digits are all zero and
``refine`` (if given) accepts the remaining digits. ``refine`` may raise
``Undecidable``. Vectors are ordered by position tuple, then Pauli values
in (x, z) integer order; the reported witness is the first hit in that order
regardless of the thread count.
"""
import itertools
import math
import threading
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .excs import BudgetExceeded, CodeError
from .misc import Record

__all__ = [
    'LowWeightScanner',
    'ScanResult',
    'pauli_values',
    'vector_count',
]


def pauli_values(p):
    """Nonzero single-position values ``(x, z)`` in integer order."""
    return [(t // p, t % p) for t in range(1, p * p)]


def vector_count(n, weight, p=2):
    """Number of vectors of symplectic weight ``weight`` on n positions."""
    return math.comb(n, weight) * (p * p - 1) ** weight


def _pack(digits):
    """Bit-pack binary digits along the last axis into uint64 words."""
    digits = np.asarray(digits, dtype=np.uint8)
    width = digits.shape[-1]
    words = max(1, -(-width // 64))
    padded = np.zeros(digits.shape[:-1] + (words * 64,), dtype=np.uint8)
    padded[..., :width] = digits
    return np.packbits(padded, axis=-1).view(np.uint64)


def _unpack(words, width):
    """Inverse of ``_pack``."""
    raw = np.ascontiguousarray(words).view(np.uint8)
    return np.unpackbits(raw, axis=-1)[..., :width].astype(np.int64)


class ScanResult(Record):
    """Outcome of an ascending scan.

    ``weight`` is the smallest weight with a hit (None when none was found);
    ``clean`` lists the weights scanned completely without a hit and
    ``tested`` the number of vectors of those weights.
    """
    pass


class LowWeightScanner(object):
    """Ascending search for low-weight hits.

    ``contributions`` has shape ``(n, p*p - 1, K)``: the key digits of the
    weight-one vector with the given Pauli value at the given position.
    """
    #pylint: disable=too-many-instance-attributes
    def __init__(self, contributions, p, linear_width=None, refine=None,
                 threads=None):
        """Precompute packed contributions."""
        contributions = np.asarray(contributions, dtype=np.int64) % p
        if contributions.ndim != 3 or contributions.shape[1] != p * p - 1:
            raise CodeError.precondition(
                'contributions must have shape (n, p*p-1, K)')
        self.n, _, self.width = contributions.shape
        self.p = p
        self.linear_width = self.width if linear_width is None \
            else int(linear_width)
        self.refine = refine
        if threads is None:
            from . import THREADS
            threads = THREADS
        self.threads = max(1, int(threads))
        lin = contributions[:, :, :self.linear_width]
        rest = contributions[:, :, self.linear_width:]
        if p == 2:
            self._lin = _pack(lin)
            self._rest = _pack(rest)
        else:
            self._lin = lin
            self._rest = rest
        self._lock = threading.Lock()

    def __repr__(self):
        """Represent by size."""
        return '<LowWeightScanner n={n} p={p} key={k}>'.format(
            n=self.n, p=self.p, k=self.width)

    __str__ = __repr__

    def _combine(self, left, right):
        """Key of a sum from keys of the summands (broadcasting)."""
        if self.p == 2:
            return left ^ right
        return (left + right) % self.p

    def _prefix(self, positions):
        """Keys of all Pauli values on ``positions`` (first most
        significant)."""
        lin, rest = self._lin[positions[0]], self._rest[positions[0]]
        for pos in positions[1:]:
            lin = self._combine(lin[:, None], self._lin[pos][None, :])
            rest = self._combine(rest[:, None], self._rest[pos][None, :])
            lin = lin.reshape(-1, lin.shape[-1])
            rest = rest.reshape(-1, rest.shape[-1])
        return lin, rest

    def _hits(self, positions, start, stop):
        """First hit with prefix ``positions`` and last position in
        ``start..stop-1``.

        Returns ``(witness, tested)``; witness is ``(positions, paulis)`` or
        None.
        """
        values = self._lin.shape[1]
        if positions:
            plin, prest = self._prefix(positions)
            lin = self._combine(plin[:, None, None],
                                self._lin[None, start:stop])
            rest = self._combine(prest[:, None, None],
                                 self._rest[None, start:stop])
        else:
            lin = self._lin[None, start:stop]
            rest = self._rest[None, start:stop]
        tested = lin.shape[0] * lin.shape[1] * values
        cand = ~lin.any(axis=-1)
        if not cand.any():
            return None, tested
        combo, last, value = np.nonzero(cand)
        if self.refine is not None:
            picked = rest[combo, last, value]
            digits = _unpack(picked, self.width - self.linear_width) \
                if self.p == 2 else picked
            keep = np.asarray(self.refine(digits), dtype=bool)
            combo, last, value = combo[keep], last[keep], value[keep]
            if not combo.size:
                return None, tested
        first = np.lexsort((value, combo, last))[0]
        paulis = []
        rem = int(combo[first])
        for _ in positions:
            paulis.append(rem % values)
            rem //= values
        paulis = paulis[::-1] + [int(value[first])]
        where = tuple(positions) + (start + int(last[first]),)
        return (where, tuple(paulis)), tested

    def _worker(self, weight, firsts, state):
        """Scan the vectors whose first position is in ``firsts``."""
        found = None
        tested = 0
        for first in firsts:
            with self._lock:
                if state['best'] is not None \
                        and first > state['best'][0][0]:
                    break
                if state['limit'] is not None \
                        and state['tested'] > state['limit']:
                    state['truncated'] = True
                    break
            if weight == 1:
                hit, count = self._hits((), first, first + 1)
                tested += count
                found = hit
            else:
                for middle in itertools.combinations(
                        range(first + 1, self.n), weight - 2):
                    prefix = (first,) + middle
                    if prefix[-1] + 1 >= self.n:
                        continue
                    hit, count = self._hits(prefix, prefix[-1] + 1, self.n)
                    tested += count
                    with self._lock:
                        state['tested'] += count
                    if hit is not None:
                        found = hit
                        break
            if found is not None:
                with self._lock:
                    if state['best'] is None or found < state['best']:
                        state['best'] = found
                break
        return found, tested

    def scan(self, weight, limit=None):
        """All vectors of one weight; returns ``(witness, tested, complete)``.

        ``witness`` is ``(positions, pauli_indices)`` of the first hit in the
        fixed order. ``limit`` caps the number of vectors tested; a capped
        scan without a hit is not complete.
        """
        if not 1 <= weight <= self.n:
            return None, 0, True
        state = {'best': None, 'tested': 0, 'limit': limit,
                 'truncated': False}
        parts = [list(range(t, self.n, self.threads))
                 for t in range(self.threads)]
        if self.threads == 1:
            results = [self._worker(weight, parts[0], state)]
        else:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                results = list(pool.map(
                    lambda part: self._worker(weight, part, state), parts))
        hits = [hit for hit, _ in results if hit is not None]
        return (min(hits) if hits else None), sum(t for _, t in results), \
            not state['truncated']

    def vector(self, witness):
        """The (x | z) vector of a witness."""
        where, paulis = witness
        out = np.zeros(2 * self.n, dtype=np.int64)
        values = pauli_values(self.p)
        for pos, idx in zip(where, paulis):
            out[pos], out[self.n + pos] = values[idx]
        return out

    def search(self, upto, start=1, find_witness=False, budgets=None,
               strict=True):
        """Scan weights ``start..upto`` in ascending order.

        Stops at the first weight with a hit. With ``find_witness`` and no
        hit up to ``upto``, weight ``upto + 1`` is searched until its first
        hit, spending at most what is left of the scan budget. ``strict``
        refuses up front when weights ``start..upto`` exceed the budget;
        otherwise the scan stops at the first weight it cannot finish.
        """
        if budgets is None:
            from . import BUDGETS
            budgets = BUDGETS
        upto = min(upto, self.n)
        needed = sum(vector_count(self.n, w, self.p)
                     for w in range(start, upto + 1))
        if strict and needed > budgets.scan:
            raise BudgetExceeded('low-weight scan up to weight {0}'.format(upto),
                                 needed, budgets.scan)
        clean, tested = [], 0
        for weight in range(start, upto + 1):
            limit = None if strict else max(budgets.scan - tested, 0)
            witness, count, complete = self.scan(weight, limit=limit)
            if witness is not None:
                return ScanResult(weight=weight, witness=self.vector(witness),
                                  clean=clean, tested=tested)
            if not complete:
                return ScanResult(weight=None, witness=None, clean=clean,
                                  tested=tested)
            clean.append(weight)
            tested += count
        weight = upto + 1
        if find_witness and weight <= self.n:
            witness, count, complete = self.scan(
                weight, limit=max(budgets.scan - tested, 0))
            if witness is not None:
                return ScanResult(weight=weight, witness=self.vector(witness),
                                  clean=clean, tested=tested)
            if complete:
                clean.append(weight)
                tested += count
        return ScanResult(weight=None, witness=None, clean=clean, tested=tested)
