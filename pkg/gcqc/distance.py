"""
gcqc.distance - minimum distance verification.

Three methods, all producing a ``DistanceCertificate``:

* ``verify_exhaustive`` enumerates a union stabilizer code and evaluates the
  exact (degeneracy-aware) distance;
* ``verify_lowweight`` scans every vector of small symplectic weight of a GC
  code and proves none is a nonzero difference of two members;
* ``certify_theorem1`` combines outer distances and inner coset distances
  into the concatenation bound ``min(delta_i * d_i, d_r)``.
"""
import warnings

import numpy as np

from .classical import EXACT, LOWER_BOUND, DistanceResult
from .excs import BudgetExceeded, CodeError, CodeWarning, Undecidable
from .misc import Record
from .scan import LowWeightScanner, pauli_values, vector_count
from .symplectic import (AdditiveSymplecticCode, StabilizerCode,
                         UnionStabilizerCode, symplectic_products,
                         symplectic_weight)

__all__ = [
    'DistanceCertificate',
    'chain_distances',
    'certify_theorem1',
    'coset_distance',
    'min_symplectic_weight',
    'verify_exhaustive',
    'verify_lowweight',
]

PROVED_EXACT = 'proved-exact'
PROVED_LOWER = 'proved-lower-bound'
CONDITIONAL = 'conditional'
REFUTED = 'refuted'


def _default_budgets(budgets):
    """Module default unless given."""
    if budgets is None:
        from . import BUDGETS
        return BUDGETS
    return budgets


class DistanceCertificate(Record):
    """A distance claim with the evidence behind it.

    ``d`` is the exact distance (``proved-exact``), a lower bound
    (``proved-lower-bound``, ``conditional``) or the weight of a member
    below the target (``refuted``); ``witness`` is a vector of weight ``d``
    when one was found.
    """
    def __init__(self, d, method, status, evidence=None, witness=None,
                 **extra):
        """Store the certificate."""
        super(DistanceCertificate, self).__init__(
            d=None if d is None else int(d), method=method, status=status,
            evidence=evidence or {},
            witness=None if witness is None else [int(x) for x in witness],
            **extra)

    @property
    def proved(self):
        """Whether the claim is unconditional."""
        return self.status in (PROVED_EXACT, PROVED_LOWER)


def _single_qubit_vectors(n, p):
    """All weight-one vectors, position-major then Pauli value."""
    values = pauli_values(p)
    out = np.zeros((n * len(values), 2 * n), dtype=np.int64)
    for pos in range(n):
        for idx, (x, z) in enumerate(values):
            out[pos * len(values) + idx, pos] = x
            out[pos * len(values) + idx, n + pos] = z
    return out


def _syndrome_scanner(n, p, checks, linear_width=None, refine=None,
                      threads=None):
    """Scanner whose key is the products with ``checks`` rows."""
    singles = _single_qubit_vectors(n, p)
    keys = symplectic_products(singles, checks, p) if checks.shape[0] \
        else np.zeros((singles.shape[0], 0), dtype=np.int64)
    keys = keys.reshape(n, p * p - 1, -1)
    return LowWeightScanner(keys, p, linear_width=linear_width, refine=refine,
                            threads=threads)


def _scan_result(scan, upto, method):
    """DistanceResult from an ascending scan."""
    if scan.weight is not None:
        return DistanceResult(scan.weight, EXACT, method, scan.witness,
                              scan.tested)
    top = max(scan.clean) if scan.clean else 0
    return DistanceResult(top + 1, LOWER_BOUND, method, None, scan.tested)


def min_symplectic_weight(code, upto=None, budgets=None, threads=None):
    """Minimum nonzero symplectic weight of an AdditiveSymplecticCode.

    Codes with at most ``p^dim <= enumeration`` words (and dim <= 24) are
    enumerated; otherwise weights 1..upto of the ambient space are scanned
    with syndrome membership, giving the exact value or ``>= upto + 1``.
    """
    budgets = _default_budgets(budgets)
    if not code.dim:
        return DistanceResult(None, EXACT, 'zero-code')
    if code.dim <= 24 and code.p ** code.dim <= budgets.enumeration:
        best, witness, total = None, None, 0
        for words in code.codewords(budgets.enumeration):
            total += words.shape[0]
            weights = symplectic_weight(words)
            weights[weights == 0] = code.n + 1
            pos = int(np.argmin(weights))
            if weights[pos] <= code.n and (best is None or weights[pos] < best):
                best, witness = int(weights[pos]), words[pos]
        return DistanceResult(best, EXACT, 'exhaustive', witness, total)
    upto = budgets.weight if upto is None else upto
    scanner = _syndrome_scanner(code.n, code.p, code.dual.basis,
                                threads=threads)
    return _scan_result(scanner.search(upto, find_witness=True,
                                       budgets=budgets, strict=False),
                        upto, 'low-weight-scan')


def coset_distance(big, small, upto=None, budgets=None, threads=None):
    """Minimum symplectic weight over ``big`` minus ``small`` (small inside
    big)."""
    budgets = _default_budgets(budgets)
    if big.dim == small.dim:
        return DistanceResult(None, EXACT, 'empty-difference')
    if big.dim <= 24 and big.p ** big.dim <= budgets.enumeration:
        best, witness, total = None, None, 0
        for words in big.codewords(budgets.enumeration):
            total += words.shape[0]
            weights = symplectic_weight(words)
            weights[small.contains(words)] = big.n + 1
            pos = int(np.argmin(weights))
            if weights[pos] <= big.n and (best is None or weights[pos] < best):
                best, witness = int(weights[pos]), words[pos]
        return DistanceResult(best, EXACT, 'exhaustive', witness, total)
    outer_checks = big.dual.basis
    extra = []
    current = AdditiveSymplecticCode(outer_checks, big.n, big.p)
    for row in small.dual.basis:
        if not current.contains(row)[0]:
            extra.append(row)
            current = current.span_with(row)
    checks = np.concatenate([outer_checks,
                             np.array(extra, dtype=np.int64).reshape(
                                 -1, 2 * big.n)])
    scanner = _syndrome_scanner(big.n, big.p, checks,
                                linear_width=outer_checks.shape[0],
                                refine=lambda digits: digits.any(axis=1),
                                threads=threads)
    upto = budgets.weight if upto is None else upto
    return _scan_result(scanner.search(upto, find_witness=True,
                                       budgets=budgets, strict=False),
                        upto, 'low-weight-scan')


def chain_distances(chain, budgets=None, threads=None):
    """Coset distances ``d_1 .. d_r`` of a chain (cached on it).

    ``d_i`` (i < r) is the minimum weight over ``N(S_{i-1})`` minus
    ``N(S_i)``; ``d_r`` is the minimum weight of ``N(S_{r-1})``.
    """
    if chain.distances is None:
        result = []
        for level in range(1, chain.levels + 1):
            result.append(coset_distance(chain.codes[level - 1].normalizer,
                                         chain.codes[level].normalizer,
                                         budgets=budgets, threads=threads))
        result.append(min_symplectic_weight(chain.bottom, budgets=budgets,
                                            threads=threads))
        chain.distances = result
    return chain.distances


def _as_union(code, budgets):
    """UnionStabilizerCode view of a union, stabilizer or GC code."""
    if isinstance(code, UnionStabilizerCode):
        return code
    if isinstance(code, StabilizerCode):
        return UnionStabilizerCode(code.normalizer,
                                   np.zeros((1, 2 * code.n), dtype=np.int64))
    if hasattr(code, 'to_union'):
        return code.to_union(budgets.enumeration)
    raise CodeError.precondition('cannot enumerate {0!r}'.format(code))


def _difference_reps(union):
    """Canonical representatives of ``t - t'`` over all representative
    pairs."""
    reps = union.reps
    diffs = (reps[:, None, :] - reps[None, :, :]).reshape(-1, 2 * union.n)
    res = union.base.residual(diffs % union.p)
    return np.unique(res, axis=0)


def verify_exhaustive(code, method='auto', budgets=None):
    """Exact distance of a small union stabilizer code.

    The difference set ``D`` is the union of ``base + (t - t')``; the
    distance is the minimum weight over ``D`` minus the dual of the additive
    closure. When that set is empty the minimum nonzero weight of ``D`` is
    reported (pure distance) with a ``CodeWarning.degenerate``.
    ``method='ambient'`` scans all of ``F_p^{2n}`` instead of the cosets.
    """
    budgets = _default_budgets(budgets)
    union = _as_union(code, budgets)
    diff_reps = _difference_reps(union)
    degenerate = union.degenerate_part
    n, p = union.n, union.p
    count = diff_reps.shape[0] * p ** union.base.dim
    if method == 'auto':
        method = 'pairwise' if count <= budgets.enumeration else 'ambient'
    best = pure = None
    if method == 'pairwise':
        if count > budgets.enumeration:
            raise BudgetExceeded('difference set of {0!r}'.format(union),
                                 count, budgets.enumeration)
        for base_words in union.base.codewords(budgets.enumeration):
            for rep in diff_reps:
                words = (base_words + rep[None, :]) % p
                best, pure = _update(words, degenerate, best, pure)
    elif method == 'ambient':
        total = p ** (2 * n)
        if total > budgets.enumeration:
            raise BudgetExceeded('ambient space of {0!r}'.format(union), total,
                                 budgets.enumeration)
        keys = {row.tobytes() for row in diff_reps}
        ambient = AdditiveSymplecticCode(np.eye(2 * n, dtype=np.int64), n, p)
        for words in ambient.codewords(budgets.enumeration):
            res = union.base.residual(words)
            inside = np.array([row.tobytes() in keys for row in res],
                              dtype=bool)
            best, pure = _update(words[inside], degenerate, best, pure)
    else:
        raise CodeError.precondition('unknown method {0!r}'.format(method))
    evidence = {'cosets': int(union.reps.shape[0]),
                'differences': int(diff_reps.shape[0]),
                'closure_dim': int(union.closure.dim),
                'degenerate_dim': int(degenerate.dim),
                'enumeration': method}
    if best is not None:
        return DistanceCertificate(best[0], 'exhaustive-exact', PROVED_EXACT,
                                   evidence, best[1], pure=False)
    warnings.warn(CodeWarning.degenerate(
        'every difference lies in the degenerate part; reporting the pure '
        'distance'))
    if pure is None:
        return DistanceCertificate(None, 'exhaustive-exact', PROVED_EXACT,
                                   evidence, None, pure=True)
    return DistanceCertificate(pure[0], 'exhaustive-exact', PROVED_EXACT,
                               evidence, pure[1], pure=True)


def _update(words, degenerate, best, pure):
    """Fold a batch of difference vectors into the running minima."""
    if not words.shape[0]:
        return best, pure
    weights = symplectic_weight(words)
    nonzero = weights > 0
    if nonzero.any():
        idx = np.flatnonzero(nonzero)
        pos = idx[np.argmin(weights[idx])]
        if pure is None or weights[pos] < pure[0]:
            pure = (int(weights[pos]), words[pos])
    outside = nonzero & ~degenerate.contains(words) if degenerate.dim \
        else nonzero
    if outside.any():
        idx = np.flatnonzero(outside)
        pos = idx[np.argmin(weights[idx])]
        if best is None or weights[pos] < best[0]:
            best = (int(weights[pos]), words[pos])
    return best, pure


def _gc_contributions(code):
    """Key digits of every weight-one vector of a GC code.

    Layout: S_0 syndromes of every block, then the outer syndromes of the
    levels tested linearly, then the label digits of the other levels
    (level-major, then block).
    """
    #pylint: disable=too-many-locals
    p = code.p
    diffs = code.level_differences
    linear_levels = [d.level for d in diffs if d.factored]
    other_levels = [d.level for d in diffs if not d.factored]
    top_width = sum(chain.top_functionals.shape[0] for chain in code.chains)
    syn_width = sum((code.outers[i - 1].H.shape[0]) * code.b[i - 1]
                    for i in linear_levels)
    other_width = sum(code.N * code.b[i - 1] for i in other_levels)
    values = p * p - 1
    keys = np.zeros((code.n, values, top_width + syn_width + other_width),
                    dtype=np.int64)
    top_at = 0
    for j, chain in enumerate(code.chains):
        singles = _single_qubit_vectors(chain.n, p)
        rows = slice(code.offsets[j], code.offsets[j + 1])
        width = chain.top_functionals.shape[0]
        if width:
            syn = (singles @ chain.top_functionals.T) % p
            keys[rows, :, top_at:top_at + width] = syn.reshape(
                chain.n, values, width)
        top_at += width
        _, digits = chain.labels(singles)
        symbols = chain.digits_to_symbols(digits)
        at = top_width
        for level in linear_levels:
            outer = code.outers[level - 1]
            sym = symbols[level - 1]
            contrib = outer.field.mul(outer.H[:, j][None, :], sym[:, None])
            flat = outer.field.to_digits(contrib).reshape(sym.size, -1)
            keys[rows, :, at:at + flat.shape[1]] = flat.reshape(
                chain.n, values, -1)
            at += flat.shape[1]
        for level in other_levels:
            width = code.b[level - 1]
            part = digits[:, chain.offsets[level - 1]:chain.offsets[level]]
            start = at + j * width
            keys[rows, :, start:start + width] = part.reshape(
                chain.n, values, width)
            at += code.N * width
    return keys, top_width + syn_width, other_levels


def _gc_refine(code, other_levels):
    """Decide the label columns of the levels not tested linearly."""
    p = code.p
    widths = [code.b[level - 1] for level in other_levels]

    def refine(digits):
        """Accept rows whose every column is a difference."""
        columns = []
        at = 0
        for width in widths:
            part = digits[:, at:at + code.N * width].reshape(-1, code.N, width)
            columns.append(part @ (p ** np.arange(width, dtype=np.int64)))
            at += code.N * width
        verdict = np.ones(digits.shape[0], dtype=np.int8)
        for level, cols in zip(other_levels, columns):
            got = code.level_differences[level - 1].decide(cols)
            verdict = np.where((verdict == 0) | (got == 0), 0,
                               np.where((verdict == -1) | (got == -1), -1, 1))
        if (verdict == -1).any():
            row = int(np.flatnonzero(verdict == -1)[0])
            raise Undecidable('a label column is neither below the outer '
                              'distance nor decidable from member lists',
                              np.concatenate([c[row] for c in columns]))
        return verdict == 1
    return refine


def verify_lowweight(code, d_target, find_witness=True, budgets=None,
                     threads=None):
    """Prove that no nonzero difference of two members of a GC code has
    symplectic weight below ``d_target``.

    A hit below the target refutes it. With ``find_witness`` the scan
    continues at weight ``d_target`` to find a member difference and upgrade
    the result to exact.
    """
    budgets = _default_budgets(budgets)
    for diff in code.level_differences:
        if not diff.decidable and diff.delta is None:
            raise CodeError.precondition(
                'level {0}: nonlinear outer code is neither enumerable nor '
                'of verified distance'.format(diff.level))
    keys, linear_width, other_levels = _gc_contributions(code)
    refine = _gc_refine(code, other_levels) if other_levels else None
    scanner = LowWeightScanner(keys, code.p, linear_width=linear_width,
                               refine=refine, threads=threads)
    scan = scanner.search(d_target - 1, find_witness=find_witness,
                          budgets=budgets)
    expected = sum(vector_count(code.n, w, code.p)
                   for w in scan.clean if w < d_target)
    tested = scan.tested - (vector_count(code.n, d_target, code.p)
                            if d_target in scan.clean else 0)
    if tested != expected:
        raise CodeError.verification('scan tested {0} vectors, expected {1}'
                                     .format(tested, expected))
    evidence = {'weights_checked': [w for w in scan.clean if w < d_target],
                'vectors_tested': expected,
                'n': code.n}
    if scan.weight is not None:
        witness = scan.witness
        if symplectic_weight(witness) != scan.weight \
                or not code.is_difference(witness)[0]:
            raise CodeError.verification('scan witness fails the difference '
                                         'test')
        status = REFUTED if scan.weight < d_target else PROVED_EXACT
        return DistanceCertificate(scan.weight, 'low-weight-scan', status,
                                   evidence, witness)
    return DistanceCertificate(d_target, 'low-weight-scan', PROVED_LOWER,
                               evidence)


def certify_theorem1(code, budgets=None, threads=None):
    """Composite bound ``min(delta_i * d_i, d_r)`` from verified leaves."""
    #pylint: disable=too-many-locals
    budgets = _default_budgets(budgets)
    leaves = {'inner': [], 'outer': [], 'labels': []}
    proved = True
    seen = {}
    for j, chain in enumerate(code.chains):
        if id(chain) not in seen:
            try:
                seen[id(chain)] = chain_distances(chain, budgets=budgets,
                                                  threads=threads)
            except BudgetExceeded as exc:
                warnings.warn(CodeWarning.unverified(str(exc)))
                seen[id(chain)] = None
        dists = seen[id(chain)]
        leaves['inner'].append({
            'block': j, 'k': list(chain.k),
            'distances': None if dists is None else
                         [{'value': d.value, 'status': d.status,
                           'method': d.method} for d in dists]})
    inner = [seen[id(chain)] for chain in code.chains]
    if any(d is None for d in inner):
        proved = False
    levels = []
    for level in range(1, code.levels + 2):
        values = [d[level - 1].value for d in inner if d is not None]
        levels.append(min(v for v in values if v is not None)
                      if any(v is not None for v in values) else None)
    terms = []
    for level, outer in enumerate(code.outers, 1):
        result = outer.distance
        perm = code.perms[level - 1]
        leaves['outer'].append({'level': level, 'value': result.value,
                                'status': result.status,
                                'method': result.method})
        leaves['labels'].append({
            'level': level,
            'map': 'basis-extension' if perm is None else 'permuted',
            'linear': perm is None})
        if not result.proved:
            proved = False
            warnings.warn(CodeWarning.unverified(
                'outer distance of level {0} is unverified'.format(level)))
        if result.value is None or levels[level - 1] is None:
            continue
        terms.append(result.value * levels[level - 1])
    if levels[-1] is not None:
        terms.append(levels[-1])
    bound = min(terms) if terms else None
    evidence = dict(leaves, coset_distances=levels,
                    terms=[int(t) for t in terms])
    return DistanceCertificate(bound, 'theorem1-composite',
                               PROVED_LOWER if proved else CONDITIONAL,
                               evidence)
