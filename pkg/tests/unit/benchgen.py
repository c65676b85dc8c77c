from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import unittest
import fieldbv as fbv


def goal_ops(pb):
    return {s.op for g in pb.goals for s in fbv.subterms(g)}


class TestJoltOr(unittest.TestCase):

    def test_shape(self):
        pb = fbv.gen_jolt_or(3, 11)
        self.assertEqual(pb.name, 'jolt-or-3-11')
        self.assertEqual(pb.field, fbv.FF(11))
        self.assertEqual(len(pb.declarations), 12)
        self.assertEqual(pb.declarations['bv1_0'], fbv.BV(1))
        self.assertEqual(pb.declarations['y2'], fbv.FF(11))
        self.assertEqual(len(pb.hyps), 12)
        self.assertEqual(len(pb.goals), 2)
        self.assertEqual(pb.goals[0].args[0].sort, fbv.BV(3))

    def test_polynomial(self):
        F = fbv.FF(7)
        xs = [fbv.var('a', F)]
        ys = [fbv.var('b', F)]
        for (a, b), expected in {(0, 0): 0, (0, 1): 1, (1, 0): 1,
                                 (1, 1): 1}.items():
            value = fbv.eval_term(fbv.or_polynomial(xs, ys), {'a': a, 'b': b})
            self.assertEqual(value, expected)
        value = fbv.eval_term(fbv.or_polynomial(xs, ys, mutate=True),
                              {'a': 1, 'b': 1})
        self.assertEqual(value, 3)

    def test_mutated_name(self):
        self.assertEqual(fbv.gen_jolt_or(1, 7, mutate=True).name,
                         'jolt-or-1-7-mutated')

    def test_invalid_arguments(self):
        with self.assertRaises(fbv.ConstraintViolation):
            fbv.gen_jolt_or(1, 2)
        with self.assertRaises(fbv.ConstraintViolation):
            fbv.gen_jolt_or(3, 7)
        with self.assertRaises(fbv.NonPrimeField):
            fbv.gen_jolt_or(1, 9)
        with self.assertRaises(ValueError):
            fbv.gen_jolt_or(0, 7)

    def test_printed_problem_parses(self):
        for bits, p in ((1, 3), (2, 5)):
            pb = fbv.gen_jolt_or(bits, p)
            text = fbv.pretty_print_problem(pb)
            self.assertEqual(fbv.parse_problem(text, name=pb.name), pb)


class TestRandom(unittest.TestCase):

    def test_deterministic(self):
        for seed in range(10):
            self.assertEqual(fbv.gen_random(seed), fbv.gen_random(seed))
        problems = [fbv.gen_random(seed) for seed in range(10)]
        self.assertGreater(len({fbv.pretty_print_problem(pb)
                                for pb in problems}), 1)

    def test_depth_zero(self):
        for seed in range(20):
            pb = fbv.gen_random(seed, depth=0)
            self.assertFalse(goal_ops(pb) & {'add', 'mul', 'sub', 'ite'})

    def test_well_sorted(self):
        for seed in range(20):
            pb = fbv.gen_random(seed, depth=3, var_count=3, p=11)
            self.assertEqual(set(pb.declarations), {'x0', 'x1', 'x2'})
            for f in pb.hyps + pb.goals:
                self.assertTrue(fbv.sort_check(f).is_bool)

    def test_printed_problem_parses(self):
        for seed in range(20):
            pb = fbv.gen_random(seed)
            text = fbv.pretty_print_problem(pb)
            self.assertEqual(fbv.parse_problem(text, name=pb.name), pb,
                             msg=text)

    def test_invalid_arguments(self):
        with self.assertRaises(fbv.NonPrimeField):
            fbv.gen_random(0, p=4)
        with self.assertRaises(ValueError):
            fbv.gen_random(0, var_count=0)


class TestGenerate(unittest.TestCase):

    def test_families(self):
        spec = fbv.BenchSpec('jolt-or', bits=2, p=5)
        self.assertEqual(fbv.generate(spec), fbv.gen_jolt_or(2, 5))
        spec = fbv.BenchSpec(' Random ', seed=4, depth=1)
        self.assertEqual(fbv.generate(spec), fbv.gen_random(4, depth=1))

    def test_unknown_family(self):
        with self.assertRaises(ValueError):
            fbv.generate(fbv.BenchSpec('sha256'))


if __name__ == '__main__':
    unittest.main()
