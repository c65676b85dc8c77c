from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import io
import json
import os
import resource
import tempfile
import unittest
from contextlib import redirect_stdout, redirect_stderr
import fieldbv as fbv
from fieldbv.frontend.cli import main


class TestCommandLine(unittest.TestCase):

    def setUp(self):
        self.limits = resource.getrlimit(resource.RLIMIT_AS)
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        resource.setrlimit(resource.RLIMIT_AS, self.limits)
        self.tmp.cleanup()
        fbv.set_timeout(300)
        fbv.set_case_splits(True)
        fbv.set_audit(False)

    def path(self, name):
        return os.path.join(self.dir, name)

    def run_main(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def gen(self, name, *argv):
        code, _, _ = self.run_main('gen', 'jolt-or', *argv, '-o',
                                   self.path(name))
        self.assertEqual(code, 0)
        return self.path(name)

    def test_gen_stdout(self):
        code, out, _ = self.run_main('gen', 'jolt-or', '--bits', '1',
                                     '--field', '7')
        self.assertEqual(code, 0)
        self.assertEqual(fbv.parse_problem(out, name='jolt-or-1-7'),
                         fbv.gen_jolt_or(1, 7))

    def test_gen_random(self):
        code, out, _ = self.run_main('gen', 'random', '--seed', '5',
                                     '--depth', '1', '--vars', '3')
        self.assertEqual(code, 0)
        self.assertEqual(fbv.parse_problem(out, name='random-5-1'),
                         fbv.gen_random(5, 1, 3))

    def test_gen_matches_bench_spec(self):
        code, out, _ = self.run_main('gen', 'random', '--seed', '3',
                                     '--field', '13')
        self.assertEqual(code, 0)
        spec = fbv.BenchSpec('random', p=13, seed=3)
        self.assertEqual(out, fbv.pretty_print_problem(fbv.generate(spec))
                         + '\n')
        code, _, err = self.run_main('gen', 'random', '--seed', '3',
                                     '--field', '12')
        self.assertEqual(code, 3)
        self.assertTrue(err.startswith('error:'))

    def test_gen_rejects_small_field(self):
        code, _, err = self.run_main('gen', 'jolt-or', '--bits', '3',
                                     '--field', '7')
        self.assertEqual(code, 3)
        self.assertTrue(err.startswith('error:'))

    def test_verify_valid(self):
        source = self.gen('or.fbv', '--bits', '1', '--field', '7')
        code, out, _ = self.run_main('verify', source)
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines()[0], source + ': valid')

    def test_verify_invalid_lines(self):
        source = self.gen('bad.fbv', '--bits', '1', '--field', '7',
                          '--mutate')
        code, out, _ = self.run_main('verify', source, '--format', 'lines')
        self.assertEqual(code, 1)
        lines = out.splitlines()
        self.assertIn('status=invalid', lines)
        self.assertIn('counterexample.x0=1', lines)
        self.assertIn('counterexample.y0=1', lines)

    def test_trace_and_dimacs(self):
        source = self.gen('or.fbv', '--bits', '1', '--field', '7')
        trace, dimacs = self.path('trace.jsonl'), self.path('or.cnf')
        code, _, _ = self.run_main('verify', source, '--trace', trace,
                                   '--dimacs', dimacs)
        self.assertEqual(code, 0)
        with open(trace) as fp:
            entries = [json.loads(line) for line in fp]
        self.assertTrue(entries)
        self.assertEqual(entries[0]['stage'], 'to_nat')
        with open(dimacs) as fp:
            clauses, num_vars = fbv.read_dimacs(fp)
        self.assertEqual(fbv.CDCLSolver(clauses, num_vars).solve().status,
                         'unsat')

    def test_batch(self):
        good = self.gen('good.fbv', '--bits', '1', '--field', '7')
        bad = self.gen('bad.fbv', '--bits', '1', '--field', '7',
                       '--mutate')
        trace = self.path('run.jsonl')
        code, out, _ = self.run_main('verify', good, bad, '--trace', trace)
        self.assertEqual(code, 1)
        self.assertTrue(os.path.exists(self.path('run.good.jsonl')))
        self.assertTrue(os.path.exists(self.path('run.bad.jsonl')))
        self.assertFalse(os.path.exists(trace))

    def test_input_errors(self):
        broken = self.path('broken.fbv')
        with open(broken, 'w') as fp:
            fp.write('(set-field 7)\n(goal (= x 1)\n')
        code, out, _ = self.run_main('verify', broken)
        self.assertEqual(code, 3)
        self.assertIn('error', out)
        code, _, _ = self.run_main('verify', self.path('missing.fbv'))
        self.assertEqual(code, 3)

    def test_timeout(self):
        source = self.gen('or.fbv', '--bits', '1', '--field', '7')
        code, out, _ = self.run_main('verify', source, '--timeout', '1e-9',
                                     '--format', 'lines')
        self.assertEqual(code, 2)
        self.assertIn('reason=timeout in to_nat', out.splitlines())

    def test_no_case_splits(self):
        source = self.gen('or.fbv', '--bits', '1', '--field', '7')
        code, out, _ = self.run_main('verify', source, '--no-case-splits',
                                     '--format', 'lines')
        self.assertEqual(code, 0)
        self.assertTrue(any(line.startswith('rule.distNatSubOvrflw=')
                            for line in out.splitlines()))

    def test_version(self):
        with self.assertRaises(SystemExit):
            self.run_main('--version')


if __name__ == '__main__':
    unittest.main()
