"""
Generalized concatenated quantum codes.

Builds quantum codes by generalized concatenation: a nested chain of inner
stabilizer codes is combined with one classical outer code per level, and
the result is the union of cosets picked out by the outer codewords. Outer
codes may be nonlinear (sub-alphabet codes), in which case the result is a
nonadditive code of larger dimension than any additive code of the same
length and distance.

Requires ``galois``, ``numpy`` and ``six``.

Installation
============

To install the latest development version::

    python setup.py install

Example Usage
=============

.. code-block:: python

    import gcqc

Build a worked example and read off its parameters:

.. code-block:: python

    spec = gcqc.catalog.paper_example(1)
    code = gcqc.gc_build(spec)
    params = gcqc.gc_parameters(code)
    print(params.n, params.k, params.bound)   # 36 26 4

Prove the distance by scanning every low-weight vector:

.. code-block:: python

    cert = gcqc.verify_lowweight(code, 4)
    print(cert.status, cert.d)                # proved-exact 4

Export the stabilizer of an additive code:

.. code-block:: python

    print(gcqc.export_stabilizer(code).to_text())

Combine a nested chain with a nonlinear outer code:

.. code-block:: python

    gf5 = gcqc.field_new(5)
    outer = gcqc.subalphabet_code(gcqc.mds_code(gf5, 6, 4), 4)
    print(outer.size.value)                   # 164

The same operations are available from the command line::

    gcqc build example4
    gcqc verify example1 --method lowweight --distance 4
    gcqc catalog list

Enumeration limits default to ``gcqc.BUDGETS`` and can be set with the
``GCQ_BUDGET`` environment variable (``N`` or ``enumeration=N,scan=M``) or
per call with ``budgets=``.
"""
import os

from .misc import Budgets

BUDGETS = Budgets.from_env() #pylint: disable=wrong-import-position
THREADS = os.cpu_count() or 1

__version__ = '1.0.0'

from .excs import BudgetExceeded, CodeError, CodeWarning, Undecidable
from .field import FiniteField, arith, field_for_order, field_new
from .classical import (LinearCode, SubAlphabetCode, difference_membership,
                        hexacode, linear_code, mds_code, membership,
                        min_distance, subalphabet_code)
from .symplectic import (AdditiveSymplecticCode, NestedStabilizerChain,
                         StabilizerCode, SymplecticVector, UnionStabilizerCode,
                         build_chain, coset_label, coset_rep, pauli_io,
                         stabilizer_code, symplectic_dual, symplectic_product)
from .gc import (GCCode, GCSpec, StabilizerExport, enumerate_cosets,
                 export_stabilizer, gc_build, gc_membership, gc_parameters,
                 is_additive)
from .distance import (DistanceCertificate, certify_theorem1,
                       min_symplectic_weight, verify_exhaustive,
                       verify_lowweight)
from . import catalog

__all__ = [
    'AdditiveSymplecticCode',
    'BUDGETS',
    'BudgetExceeded',
    'CodeError',
    'CodeWarning',
    'DistanceCertificate',
    'FiniteField',
    'GCCode',
    'GCSpec',
    'LinearCode',
    'NestedStabilizerChain',
    'StabilizerCode',
    'StabilizerExport',
    'SubAlphabetCode',
    'SymplecticVector',
    'THREADS',
    'Undecidable',
    'UnionStabilizerCode',
    'arith',
    'build_chain',
    'catalog',
    'certify_theorem1',
    'coset_label',
    'coset_rep',
    'difference_membership',
    'enumerate_cosets',
    'export_stabilizer',
    'field_for_order',
    'field_new',
    'gc_build',
    'gc_membership',
    'gc_parameters',
    'hexacode',
    'is_additive',
    'linear_code',
    'mds_code',
    'membership',
    'min_distance',
    'min_symplectic_weight',
    'pauli_io',
    'stabilizer_code',
    'subalphabet_code',
    'symplectic_dual',
    'symplectic_product',
    'verify_exhaustive',
    'verify_lowweight',
]
