from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import os
import tempfile
import unittest
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import fieldbv as fbv


class TestRuntimeBreakdown(unittest.TestCase):

    def setUp(self):
        self.verdicts = [
            fbv.Verdict('valid', name='a',
                        timing={'to_nat': 0.1, 'range_analysis': 0.2,
                                'to_bv': 0.05, 'bitblast': 0.4}),
            fbv.Verdict('unknown', name='b', timing={'to_nat': 0.3})]

    def tearDown(self):
        plt.close('all')

    def test_saved_bars(self):
        with tempfile.TemporaryDirectory() as tmp:
            filename = os.path.join(tmp, 'breakdown.png')
            ax = fbv.plot_runtime_breakdown(self.verdicts,
                                            filename=filename)
            self.assertTrue(os.path.exists(filename))
        # one segment per stage and verdict
        self.assertEqual(len(ax.patches), 8)
        labels = [t.get_text() for t in ax.get_xticklabels()]
        self.assertEqual(labels, ['a', 'b'])
        heights = sorted(p.get_height() for p in ax.patches)
        self.assertAlmostEqual(heights[-1], 0.4)
        self.assertEqual(sum(1 for h in heights if abs(h) < 1e-12), 3)

    def test_labels(self):
        with tempfile.TemporaryDirectory() as tmp:
            ax = fbv.plot_runtime_breakdown(
                self.verdicts, labels=['first', 'second'],
                filename=os.path.join(tmp, 'b.png'))
        self.assertEqual([t.get_text() for t in ax.get_xticklabels()],
                         ['first', 'second'])

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            fbv.plot_runtime_breakdown(self.verdicts, labels=['one'])
        with self.assertRaises(ValueError):
            fbv.plot_runtime_breakdown(self.verdicts, figsize=(1, 2, 3))


if __name__ == '__main__':
    unittest.main()
