"""Test the gcqc command."""
from unittest import TestCase
import json
import os
import shutil
import tempfile
from six import StringIO
from gcqc.cli import COMMANDS, main
from gcqc.excs import CodeError

def run(*argv):
    """Exit status, standard output and standard error of one command."""
    out, err = StringIO(), StringIO()
    status = main(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()

class TestCLI(TestCase):
    """TestCase class for the command line."""
    def setUp(self):
        """Scratch directory."""
        self.tmp = tempfile.mkdtemp()
    def tearDown(self):
        """Remove the scratch directory."""
        shutil.rmtree(self.tmp)
    def path(self, name):
        """Scratch file path."""
        return os.path.join(self.tmp, name)
    def test_build_example1(self):
        """Example 1 is [[36,26]], additive, with bound 4."""
        status, out, err = run('--threads', '1', 'build', 'example1')
        self.assertEqual(status, 0)
        self.assertIn('n=36 k=26', out)
        self.assertIn('additive=yes', out)
        self.assertIn('bound d>=4 proved-lower-bound', out)
        self.assertIn('warning: dimension', err)
    def test_build_example4(self):
        """Example 4 is nonadditive with log2 dimension 40.3576."""
        status, out, _ = run('--threads', '1', 'build', 'example4')
        self.assertEqual(status, 0)
        self.assertIn('n=48 k=- log2dim=40.3576', out)
        self.assertIn('additive=no', out)
    def test_malformed(self):
        """Malformed JSON is an input error."""
        with open(self.path('bad.json'), 'w') as handle:
            handle.write('{"p": 2,')
        status, _, err = run('build', self.path('bad.json'))
        self.assertEqual(status, 2)
        self.assertIn('malformed JSON', err)
    def test_missing(self):
        """A missing spec file is an input error."""
        self.assertEqual(run('build', self.path('none.json'))[0], 2)
    def test_verify_lowweight(self):
        """Proved at 4, refuted at 5, inconclusive over budget."""
        status, out, _ = run('verify', 'example1', '--method', 'lowweight',
                             '--distance', '4')
        self.assertEqual(status, 0)
        self.assertIn('low-weight-scan: proved-exact d=4', out)
        self.assertIn('witness: ', out)
        self.assertEqual(run('verify', 'example1', '--method', 'lowweight',
                             '--distance', '5')[0], 3)
        self.assertEqual(run('--scan-budget', '1000', 'verify', 'example1',
                             '--method', 'lowweight', '--distance', '4')[0],
                         4)
        self.assertEqual(run('verify', 'example1', '--method',
                             'lowweight')[0], 2)
    def test_thread_count(self):
        """Reports are byte-identical for any thread count."""
        outputs = []
        for threads in ('1', '2'):
            target = self.path('threads{0}.json'.format(threads))
            status, out, _ = run('--threads', threads, '--json', target,
                                 'verify', 'example1', '--method', 'lowweight',
                                 '--distance', '4')
            self.assertEqual(status, 0)
            with open(target) as handle:
                outputs.append((out, handle.read()))
        self.assertEqual(outputs[0], outputs[1])
        self.assertNotIn('threads', outputs[0][1])
    def test_verify_certificate(self):
        """The certificate proves 4 but cannot reach 5."""
        status, out, _ = run('verify', 'example1')
        self.assertEqual(status, 0)
        self.assertIn('theorem1-composite: proved-lower-bound d>=4', out)
        self.assertEqual(run('verify', 'example1', '--distance', '5')[0], 4)
    def test_export(self):
        """Example 1 exports 10 generators."""
        status, out, _ = run('export', 'example1')
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[:2], ['GCQC v1', 'n=36 k=26 p=2'])
        self.assertEqual(len(lines), 12)
        self.assertTrue(all(len(line) == 36 for line in lines[2:]))
        target = self.path('ex1.json')
        self.assertEqual(run('export', 'example1', '--format', 'json',
                             '-o', target)[0], 0)
        with open(target) as handle:
            data = json.load(handle)
        self.assertEqual((data['n'], data['k'], len(data['generators'])),
                         (36, 26, 10))
    def test_export_nonadditive(self):
        """Nonadditive codes export their base stabilizer and outer codes."""
        status, out, _ = run('export', 'example4')
        self.assertEqual(status, 0)
        lines = out.splitlines()
        self.assertEqual(lines[1], 'n=48 log2dim=40.3576 p=2 additive=no')
        self.assertEqual(len([l for l in lines if l.startswith('# level')]),
                         2)
        self.assertEqual(len(lines), 2 + 6 * 5 + 2)
    def test_catalog(self):
        """List, show and spec."""
        status, out, _ = run('catalog', 'list')
        self.assertEqual(status, 0)
        self.assertIn('five_qubit', out)
        status, out, _ = run('catalog', 'show', 'hexacode_chain')
        self.assertIn('coset distances=[1, 2, 4]', out)
        status, out, _ = run('catalog', 'show', 'steane')
        self.assertTrue(out.startswith('[[7,1,3]]'))
        status, out, _ = run('catalog', 'spec', 'example2')
        self.assertEqual(json.loads(out)['outer'][0]['q'], 64)
        self.assertEqual(run('catalog', 'show', 'nope')[0], 2)
        self.assertEqual(run('catalog', 'show')[0], 2)
    def test_estimate_exact(self):
        """Example 4's sub-alphabet code is counted exactly."""
        status, out, _ = run('estimate-size', 'example4')
        self.assertEqual(status, 0)
        self.assertIn('level 1: |A| = 164 (exact)', out)
    def test_estimate_sampled(self):
        """Example 3's zero coset is sampled reproducibly."""
        target = self.path('ex3.json')
        argv = ['--json', target, 'estimate-size', 'example3',
                '--samples', '20000', '--seed', '1']
        self.assertEqual(run(*argv)[0], 0)
        with open(target) as handle:
            first = json.load(handle)
        level = first['levels'][0]
        self.assertEqual(level['kind'], 'estimate')
        self.assertAlmostEqual(level['log2'], 63.825, delta=0.1)
        self.assertAlmostEqual(first['log2_dimension'], 81.825, delta=0.1)
        run(*argv)
        with open(target) as handle:
            second = json.load(handle)
        self.assertEqual(first['levels'], second['levels'])
    def test_json_report(self):
        """The JSON report carries the header fields."""
        target = self.path('report.json')
        run('--json', target, '--budget', 'scan=5000000', 'build', 'example1')
        with open(target) as handle:
            report = json.load(handle)
        self.assertEqual(report['command'], 'build')
        self.assertEqual(report['budgets']['scan'], 5000000)
        self.assertEqual(report['parameters']['k'], 26)
        self.assertEqual(report['exit'], 0)
    def test_bad_flags(self):
        """Bad budgets and thread counts are input errors."""
        self.assertEqual(run('--budget', 'speed=3', 'build', 'example1')[0], 2)
        self.assertEqual(run('--threads', '0', 'build', 'example1')[0], 2)
    def test_internal_error(self):
        """A failed self-check exits 1, not as an input error."""
        def broken(args, out):
            """Stand-in build that fails its consistency check."""
            raise CodeError.verification('decoder is not a left inverse')
        saved = COMMANDS['build']
        COMMANDS['build'] = broken
        try:
            status, _, err = run('build', 'example1')
        finally:
            COMMANDS['build'] = saved
        self.assertEqual(status, 1)
        self.assertIn('internal error: decoder is not a left inverse', err)
        self.assertEqual(run('build', self.path('none.json'))[0], 2)
