from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import unittest
import fieldbv as fbv


class TestReport(unittest.TestCase):

    def setUp(self):
        x = fbv.var('x', fbv.FF(7))
        trace = fbv.RuleTrace()
        g = fbv.eq(x, x)
        trace.record('to_nat', 'injNat', g, (), (1,), (0,))
        trace.record('to_nat', 'injNat', g, (), (1,), (0,))
        trace.record('to_nat', 'addBds', x, (), (0, 1), (0, 0))
        self.verdict = fbv.Verdict(
            'invalid', counterexample={'y': 2, 'x': 1}, trace=trace,
            timing={'to_nat': 0.5, 'bitblast': 0.25}, width=3,
            name='demo')

    def test_lines(self):
        text = fbv.emit_report(self.verdict, 'lines')
        self.assertEqual(text.splitlines(), [
            'name=demo',
            'status=invalid',
            'width=3',
            'time.to_nat=0.500000',
            'time.bitblast=0.250000',
            'rule.addBds=1',
            'rule.injNat=2',
            'counterexample.x=1',
            'counterexample.y=2'])

    def test_human(self):
        lines = [line.split() for line in
                 fbv.emit_report(self.verdict).splitlines()]
        self.assertEqual(lines[0], ['demo:', 'invalid'])
        self.assertIn(['width:', '3'], lines)
        self.assertIn(['time:', '0.750', 's'], lines)
        self.assertIn(['to_nat', '0.500', 's'], lines)
        self.assertIn(['injNat', '2'], lines)
        self.assertIn(['x', '=', '1'], lines)
        order = [line[0] for line in lines]
        self.assertLess(order.index('to_nat'), order.index('bitblast'))

    def test_unknown(self):
        t = fbv.leq(fbv.var('n', fbv.NAT), fbv.const(2))
        verdict = fbv.Verdict('unknown', undischarged=[t],
                              reason='inequalities left')
        self.assertEqual(fbv.emit_report(verdict, ' LINES '),
                         'status=unknown\nreason=inequalities left\n'
                         'undischarged=(<= n 2)\n')
        self.assertEqual(fbv.emit_report(verdict).splitlines(),
                         ['unknown (inequalities left)',
                          '  undischarged: (<= n 2)'])
        self.assertEqual(verdict.exit_code, 2)

    def test_format(self):
        with self.assertRaises(ValueError):
            fbv.emit_report(self.verdict, 'json')


if __name__ == '__main__':
    unittest.main()
