"""
gcqc.linalg - row reduction over finite fields.

GF(2) matrices are eliminated bit-packed (eight columns per byte, one XOR
per row operation); every other field is reduced by ``galois``
(``row_reduce``, ``null_space``, ``np.linalg.inv`` on field arrays).
"""
import numpy as np

from .excs import CodeError
from .field import FiniteField, field_new

__all__ = [
    'as_field',
    'in_rowspan',
    'inverse',
    'matmul',
    'nullspace',
    'rank',
    'rref',
]


def as_field(field):
    """Accept a FiniteField or a prime."""
    if isinstance(field, FiniteField):
        return field
    return field_new(int(field), 1)


def matmul(a, b, field):
    """Matrix product over ``field`` (FiniteField or prime)."""
    return as_field(field).matmul(a, b)


def _rref_gf2(matrix):
    """Packed Gauss-Jordan elimination over GF(2)."""
    rows, cols = matrix.shape
    packed = np.packbits(np.asarray(matrix, dtype=np.uint8) & 1, axis=1)
    pivots = []
    top = 0
    for col in range(cols):
        if top == rows:
            break
        byte, shift = col >> 3, 7 - (col & 7)
        colbits = (packed[:, byte] >> shift) & 1
        candidates = np.flatnonzero(colbits[top:])
        if not candidates.size:
            continue
        piv = top + candidates[0]
        if piv != top:
            packed[[top, piv]] = packed[[piv, top]]
            colbits[[top, piv]] = colbits[[piv, top]]
        mask = colbits.astype(bool)
        mask[top] = False
        if mask.any():
            packed[mask] ^= packed[top]
        pivots.append(col)
        top += 1
    reduced = np.unpackbits(packed[:top], axis=1, count=cols)
    return reduced.astype(np.int64), pivots


def _rref_galois(matrix, field):
    """galois row reduction, zero rows dropped."""
    red = np.asarray(field.wrap(matrix).row_reduce().view(np.ndarray),
                     dtype=np.int64)
    red = red[red.any(axis=1)]
    pivots = [int(np.flatnonzero(row)[0]) for row in red]
    return red, pivots


def rref(matrix, field):
    """Reduced row echelon form.

    Returns ``(reduced, pivots)`` where ``reduced`` holds only the nonzero
    rows and ``pivots`` their pivot columns.
    """
    field = as_field(field)
    matrix = np.asarray(matrix, dtype=np.int64)
    if matrix.ndim != 2:
        raise CodeError.matrix('expected a 2-d matrix, got shape {0}'.format(
            matrix.shape))
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return np.zeros((0, matrix.shape[1]), dtype=np.int64), []
    if field.q == 2:
        return _rref_gf2(matrix)
    return _rref_galois(matrix, field)


def rank(matrix, field):
    """Rank over ``field``."""
    return len(rref(matrix, field)[1])


def nullspace(matrix, field):
    """Basis (as rows) of {v : matrix . v = 0}."""
    field = as_field(field)
    matrix = np.asarray(matrix, dtype=np.int64)
    cols = matrix.shape[1]
    if field.q > 2 and matrix.shape[0] and cols:
        kernel = field.wrap(matrix).null_space()
        return np.asarray(kernel.view(np.ndarray),
                          dtype=np.int64).reshape(-1, cols)
    reduced, pivots = rref(matrix, field)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    if not free:
        return basis
    basis[np.arange(len(free)), free] = 1
    if pivots:
        basis[:, pivots] = field.neg(reduced[:, free].T)
    return basis


def in_rowspan(vectors, reduced, pivots, field):
    """Which rows of ``vectors`` lie in the span of an RREF basis.

    Returns ``(mask, coefficients)``; coefficients are only meaningful where
    the mask is true.
    """
    field = as_field(field)
    vectors = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    if not pivots:
        return ~vectors.any(axis=1), np.zeros((vectors.shape[0], 0), np.int64)
    coef = vectors[:, pivots]
    residual = field.sub(vectors, field.matmul(coef, reduced))
    return ~residual.any(axis=1), coef


def inverse(matrix, field):
    """Inverse of a square matrix; singular input is a CodeError."""
    field = as_field(field)
    matrix = np.asarray(matrix, dtype=np.int64)
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise CodeError.matrix('cannot invert shape {0}'.format(matrix.shape))
    if size == 0:
        return matrix.copy()
    if rank(matrix, field) < size:
        raise CodeError.matrix('matrix is singular over {0!r}'.format(field))
    inv = np.linalg.inv(field.wrap(matrix))
    return np.asarray(inv.view(np.ndarray), dtype=np.int64)
