"""Test symplectic vectors, stabilizer codes and nested chains."""
from unittest import TestCase
import itertools
import numpy as np
from gcqc import symplectic as sp
from gcqc.catalog import FIVE_QUBIT
from gcqc.excs import CodeError

FIVE = sp.stabilizer_code(FIVE_QUBIT.split(), name='five')
FULL5 = sp.full_space_code(5)
CHAIN = sp.build_chain([FULL5, FIVE])

class TestVectors(TestCase):
    """Test Pauli strings and products."""
    def test_pauli_round_trip(self):
        """Pauli strings survive conversion."""
        vec = sp.pauli_io('from', 'XYZI')
        self.assertEqual(vec.x.tolist(), [1, 1, 0, 0])
        self.assertEqual(vec.z.tolist(), [0, 1, 1, 0])
        self.assertEqual(sp.pauli_io('to', vec.data), 'XYZI')
        self.assertEqual(vec.weight, 3)
    def test_bad_pauli(self):
        """Unknown characters are rejected."""
        with self.assertRaises(CodeError.alphabet):
            sp.from_pauli('XQZ')
        with self.assertRaises(CodeError.precondition):
            sp.pauli_io('sideways', 'X')
    def test_products(self):
        """X and Z anticommute, Y commutes with itself."""
        x, z, y = (sp.SymplecticVector(c) for c in 'XZY')
        self.assertEqual(sp.symplectic_product(x, z), 1)
        self.assertEqual(sp.symplectic_product(y, y), 0)
        self.assertEqual(sp.symplectic_product(x + z, y), 0)
    def test_packed_agrees(self):
        """The packed product matches the matrix product."""
        rng = np.random.default_rng(5)
        for _ in range(20):
            u, v = rng.integers(0, 2, size=(2, 26))
            self.assertEqual(
                sp.symplectic_product(sp.SymplecticVector(u),
                                      sp.SymplecticVector(v)),
                int(sp.symplectic_products(u, v)[0, 0]))
    def test_odd_prime(self):
        """Products over F_3 are antisymmetric."""
        u = sp.SymplecticVector([1, 2, 0, 1], p=3)
        v = sp.SymplecticVector([2, 2, 1, 0], p=3)
        self.assertEqual((sp.symplectic_product(u, v)
                          + sp.symplectic_product(v, u)) % 3, 0)
        self.assertEqual(sp.symplectic_product(u, v), 2)

class TestCodes(TestCase):
    """Test stabilizer codes."""
    def test_five_qubit(self):
        """The five-qubit code encodes one qubit."""
        self.assertEqual((FIVE.n, FIVE.k), (5, 1))
        self.assertEqual(FIVE.normalizer.dim, 6)
        self.assertTrue(FIVE.stabilizer.issubset(FIVE.normalizer))
        self.assertEqual(len(FIVE.pauli_generators()), 4)
    def test_not_commuting(self):
        """Anticommuting generators are named."""
        errored = False
        try:
            sp.stabilizer_code(['XI', 'ZI'])
        except CodeError.orthogonality as exc:
            errored = '0 and 1' in str(exc)
        self.assertTrue(errored)
    def test_dual(self):
        """The dual of the dual is the code."""
        self.assertEqual(FIVE.normalizer.dual, FIVE.stabilizer)
        self.assertEqual(sp.symplectic_dual(FULL5.stabilizer).dim, 10)
    def test_codewords(self):
        """Enumeration yields every codeword once."""
        words = np.concatenate(list(FIVE.stabilizer.codewords()))
        self.assertEqual(len({row.tobytes() for row in words}), 16)
        self.assertTrue(FIVE.stabilizer.contains(words).all())

class TestChains(TestCase):
    """Test nested chains and coset labels."""
    def test_chain_shape(self):
        """Label widths follow the drop in k."""
        self.assertEqual(CHAIN.k, (5, 1))
        self.assertEqual(CHAIN.b, (4,))
        self.assertEqual(CHAIN.alphabet_sizes, (16,))
        self.assertEqual(CHAIN.label_dim, 4)
    def test_labels_of_reps(self):
        """coset_label inverts coset_rep for every symbol."""
        for sym in range(16):
            rep = sp.coset_rep(CHAIN, [sym])
            self.assertEqual(sp.coset_label(CHAIN, rep.data), ((sym,), True))
    def test_labels_ignore_normalizer(self):
        """Adding an element of the bottom normalizer keeps the label."""
        rep = sp.coset_rep(CHAIN, [11]).data
        for row in FIVE.normalizer.basis:
            self.assertEqual(sp.coset_label(CHAIN, (rep + row) % 2)[0], (11,))
    def test_three_levels(self):
        """Labels split per level in a three-level chain."""
        inner = sp.stabilizer_code(['XXXXXX', 'ZZZZZZ'])
        hexa = sp.stabilizer_code(['YIIYXX', 'XIIXZZ', 'IYIXYX', 'IXIZXZ',
                                   'IIYXXY', 'IIXZZX'])
        chain = sp.build_chain([sp.full_space_code(6), inner, hexa])
        self.assertEqual(chain.b, (2, 4))
        for a, b in itertools.product(range(4), range(16)):
            rep = sp.coset_rep(chain, [a, b])
            self.assertEqual(sp.coset_label(chain, rep.data), ((a, b), True))
    def test_outside_top(self):
        """Vectors outside N(S_0) have no label."""
        chain = sp.build_chain([FIVE, sp.stabilizer_code(
            FIVE_QUBIT.split() + ['XXXXX'])])
        self.assertEqual(sp.coset_label(chain, sp.from_pauli('XIIII')),
                         (None, False))
    def test_nesting(self):
        """Non-nested codes are rejected."""
        with self.assertRaises(CodeError.nesting):
            sp.build_chain([FIVE, FULL5])
        with self.assertRaises(CodeError.nesting):
            sp.build_chain([FIVE, FIVE])
    def test_symbol_range(self):
        """Symbols outside the alphabet are rejected."""
        with self.assertRaises(CodeError.labels):
            sp.coset_rep(CHAIN, [16])
        with self.assertRaises(CodeError.labels):
            sp.coset_rep(CHAIN, [1, 2])
    def test_random_chain(self):
        """Random chains are nested with the requested dimensions."""
        chain = sp.random_chain(4, [0, 1, 3], np.random.default_rng(1))
        self.assertEqual(chain.k, (4, 3, 1))

class TestUnion(TestCase):
    """Test union stabilizer codes."""
    def test_union(self):
        """Membership and dimension of a two-coset union."""
        rep = sp.coset_rep(CHAIN, [3]).data
        union = sp.UnionStabilizerCode(FIVE.normalizer,
                                       [np.zeros(10, np.int64), rep])
        self.assertEqual(union.k0, 1)
        self.assertAlmostEqual(union.log2_dimension, 2.0)
        self.assertTrue(union.contains(rep).all())
        self.assertFalse(union.contains(sp.coset_rep(CHAIN, [5]).data).any())
    def test_same_coset(self):
        """Representatives of one coset are rejected."""
        rep = sp.coset_rep(CHAIN, [3]).data
        with self.assertRaises(CodeError.labels):
            sp.UnionStabilizerCode(FIVE.normalizer,
                                   [rep, (rep + FIVE.normalizer.basis[0]) % 2])
