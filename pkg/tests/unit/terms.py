from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import io
import json
import time
import unittest
import fieldbv as fbv


class TestTerms(unittest.TestCase):

    def setUp(self):
        self.F = fbv.FF(7)
        self.x = fbv.var('x', self.F)
        self.y = fbv.var('y', self.F)
        self.z = fbv.var('z', self.F)

    def test_field_constants_reduced(self):
        self.assertEqual(fbv.const(9, self.F).value, 2)
        self.assertEqual(fbv.const(7, self.F), fbv.const(0, self.F))

    def test_negative_constant(self):
        with self.assertRaises(ValueError):
            fbv.const(-1)

    def test_bv_constant_width(self):
        with self.assertRaises(ValueError):
            fbv.const(16, fbv.BV(4))

    def test_non_prime_field(self):
        with self.assertRaises(fbv.NonPrimeField):
            fbv.FF(4)
        with self.assertRaises(ValueError):
            fbv.FF(1)

    def test_sort_check(self):
        t = fbv.to_nat(fbv.mul(self.x, self.x))
        self.assertEqual(fbv.sort_check(t), fbv.NAT)
        self.assertEqual(fbv.sort_check(fbv.leq(t, fbv.const(3))),
                         fbv.BOOL)

    def test_sort_mismatch_path(self):
        n = fbv.var('n', fbv.NAT)
        bad = fbv.eq(n, fbv.add(self.x, n))
        with self.assertRaises(fbv.SortMismatch) as cm:
            fbv.sort_check(bad)
        self.assertEqual(cm.exception.path, (1,))
        self.assertTrue(isinstance(cm.exception, TypeError))

    def test_mod_over_field(self):
        with self.assertRaises(fbv.SortMismatch):
            fbv.sort_check(fbv.mod(self.x, self.y))

    def test_concat_width(self):
        a = fbv.var('a', fbv.BV(1))
        b = fbv.var('b', fbv.BV(2))
        self.assertEqual(fbv.concat(a, b).sort, fbv.BV(3))
        self.assertTrue(fbv.concat(a) is a)

    def test_structural_equality(self):
        t1 = fbv.add(self.x, fbv.mul(self.y, self.z))
        t2 = fbv.add(fbv.var('x', self.F),
                     fbv.mul(fbv.var('y', self.F), fbv.var('z', self.F)))
        self.assertEqual(t1, t2)
        self.assertEqual(hash(t1), hash(t2))
        self.assertNotEqual(t1, fbv.add(self.x, fbv.mul(self.z, self.y)))
        self.assertEqual(len({t1, t2}), 1)

    def test_subterms_post_order(self):
        m = fbv.mul(self.y, self.z)
        t = fbv.add(self.x, m)
        self.assertEqual(list(fbv.subterms(t)),
                         [self.x, self.y, self.z, m, t])

    def test_free_vars(self):
        n = fbv.var('n', fbv.NAT)
        f = fbv.leq(fbv.to_nat(fbv.add(self.y, self.x)), n)
        self.assertEqual(list(fbv.free_vars(f).items()),
                         [('y', self.F), ('x', self.F), ('n', fbv.NAT)])

    def test_substitute(self):
        w = fbv.var('?w1', fbv.NAT)
        f = fbv.leq(fbv.to_nat(self.x), w)
        g = fbv.substitute(f, w, fbv.const(1))
        self.assertEqual(g, fbv.leq(fbv.to_nat(self.x), fbv.const(1)))
        self.assertTrue(fbv.substitute(f, w, w) is f)
        with self.assertRaises(fbv.SortMismatch):
            fbv.substitute(f, w, self.x)

    def test_replace_simultaneous(self):
        t = fbv.add(self.x, self.y)
        swapped = fbv.replace(t, {self.x: self.y, self.y: self.x})
        self.assertEqual(swapped, fbv.add(self.y, self.x))

    def test_subterm_occurs(self):
        f = fbv.eq(fbv.add(self.y, self.x), self.z)
        self.assertTrue(fbv.subterm_occurs(f, fbv.add(self.x, self.y)))
        self.assertFalse(fbv.subterm_occurs(f, fbv.mul(self.x, self.y)))


class TestNormalize(unittest.TestCase):

    def setUp(self):
        self.F = fbv.FF(7)
        self.a = fbv.var('a', self.F)
        self.b = fbv.var('b', self.F)
        self.c = fbv.var('c', self.F)

    def test_commutative_sorting(self):
        self.assertEqual(fbv.normalize(fbv.add(self.b, self.a)),
                         fbv.add(self.a, self.b))
        self.assertEqual(
            fbv.normalize(fbv.mul(self.c, fbv.mul(self.b, self.a))),
            fbv.mul(self.a, self.b, self.c))

    def test_constants_first(self):
        one = fbv.const(1, self.F)
        self.assertEqual(fbv.normalize(fbv.add(self.a, one)),
                         fbv.add(one, self.a))

    def test_geq_becomes_leq(self):
        n = fbv.var('n', fbv.NAT)
        f = fbv.geq(fbv.to_nat(self.a), n)
        self.assertEqual(fbv.normalize(f), fbv.leq(n, fbv.to_nat(self.a)))

    def test_group_sub(self):
        t = fbv.add(fbv.sub(self.a, self.b), self.c)
        self.assertEqual(fbv.normalize(t),
                         fbv.sub(fbv.add(self.a, self.c), self.b))
        self.assertEqual(fbv.normalize(t, group_sub=False),
                         fbv.add(self.c, fbv.sub(self.a, self.b)))

    def test_nat_sub_not_grouped(self):
        n, m = fbv.var('n', fbv.NAT), fbv.var('m', fbv.NAT)
        k = fbv.var('k', fbv.NAT)
        t = fbv.add(fbv.sub(n, m), k)
        self.assertEqual(fbv.normalize(t), fbv.add(k, fbv.sub(n, m)))

    def test_idempotent(self):
        terms = [fbv.add(fbv.sub(self.a, self.b), self.c, self.a),
                 fbv.eq(fbv.mul(self.b, self.a), fbv.add(self.c, self.b)),
                 fbv.geq(fbv.const(3), fbv.to_nat(self.a))]
        for t in terms:
            once = fbv.normalize(t)
            self.assertEqual(fbv.normalize(once), once)

    def test_normalize_checks_sorts(self):
        with self.assertRaises(fbv.SortMismatch):
            fbv.normalize(fbv.add(self.a, fbv.const(1)))


class TestPrinter(unittest.TestCase):

    def setUp(self):
        self.F = fbv.FF(7)
        self.x = fbv.var('x', self.F)

    def test_numerals(self):
        three = fbv.const(3, self.F)
        self.assertEqual(fbv.pretty_print(fbv.eq(self.x, three)), '(= x 3)')
        self.assertEqual(fbv.pretty_print(fbv.const(5, fbv.BV(4))),
                         '(bv 5 4)')

    def test_unanchored_field_constants(self):
        t = fbv.eq(fbv.add(fbv.const(1, self.F), fbv.const(2, self.F)),
                   fbv.const(3, self.F))
        self.assertEqual(fbv.pretty_print(t), '(= (+ (ff 1) (ff 2)) (ff 3))')

    def test_conversions(self):
        t = fbv.to_bv(3, fbv.to_nat(self.x))
        self.assertEqual(fbv.pretty_print(t), '(to-bv 3 (to-nat x))')
        f = fbv.geq(fbv.to_nat(self.x), fbv.const(1))
        self.assertEqual(fbv.pretty_print(f), '(>= (to-nat x) 1)')


class TestProofContext(unittest.TestCase):

    def setUp(self):
        self.F = fbv.FF(7)
        self.x = fbv.var('x', self.F)
        self.bit = fbv.leq(fbv.to_nat(self.x), fbv.const(1))
        self.goal = fbv.eq(fbv.mul(self.x, self.x), self.x)

    def test_deduplication(self):
        ctx = fbv.ProofContext([self.goal, self.goal], [self.bit])
        self.assertEqual(ctx.goals, [self.goal])
        self.assertFalse(ctx.add_hyp(self.bit))
        self.assertEqual(list(ctx.original_vars), ['x'])

    def test_map_formulas(self):
        ctx = fbv.ProofContext([self.goal], [self.bit])
        self.assertFalse(ctx.map_formulas(lambda f: f))
        new = fbv.eq(self.x, self.x)
        self.assertTrue(ctx.replace_formula(self.goal, new))
        self.assertEqual(ctx.goals, [new])
        self.assertEqual(ctx.hyps, [self.bit])

    def test_copy_is_independent(self):
        ctx = fbv.ProofContext([self.goal], [self.bit])
        other = ctx.copy()
        other.add_goal(self.bit)
        self.assertEqual(len(ctx.goals), 1)
        self.assertTrue(other.trace is ctx.trace)

    def test_deadline(self):
        ctx = fbv.ProofContext([self.goal], deadline=time.monotonic() - 1)
        with self.assertRaises(fbv.Timeout) as cm:
            ctx.check_deadline('to_nat')
        self.assertEqual(cm.exception.stage, 'to_nat')
        fbv.ProofContext([self.goal]).check_deadline('to_nat')

    def test_invariants(self):
        ctx = fbv.ProofContext([self.goal], [self.bit])
        ctx.check_invariants()
        ctx.add_goal(fbv.leq(fbv.var('?w1', fbv.NAT), fbv.const(1)))
        with self.assertRaises(AssertionError):
            ctx.check_invariants()
        ctx.placeholder_vars.add('?w1')
        ctx.check_invariants()

    def test_ill_sorted_formula(self):
        ctx = fbv.ProofContext([self.goal], [self.bit])
        ctx.add_hyp(fbv.leq(fbv.to_nat(self.x), fbv.const(1, self.F)))
        with self.assertRaises(fbv.SortMismatch):
            ctx.check_invariants()
        ctx = fbv.ProofContext([self.goal, fbv.to_nat(self.x)])
        with self.assertRaises(fbv.SortMismatch):
            ctx.check_invariants()


class TestRuleTrace(unittest.TestCase):

    def test_violations(self):
        trace = fbv.RuleTrace()
        f = fbv.eq(fbv.const(1), fbv.const(1))
        trace.record('to_nat', 'injNat', f, (), (2, 0), (1, 5))
        trace.record('to_nat', 'distNat', f, (), (1, 5), (1, 5))
        self.assertEqual(len(trace), 2)
        self.assertEqual([e.rule for e in trace.violations()], ['distNat'])
        self.assertEqual(trace.rule_counts()['injNat'], 1)
        self.assertTrue(trace.fired('distNat'))
        self.assertFalse(trace.fired('dropMod'))

    def test_jsonl(self):
        trace = fbv.RuleTrace()
        x = fbv.var('x', fbv.FF(7))
        trace.record('to_nat', 'injNat', fbv.eq(x, x), [fbv.to_nat(x)],
                     (1,), (0,))
        fp = io.StringIO()
        trace.write_jsonl(fp)
        entry = json.loads(fp.getvalue().splitlines()[0])
        self.assertEqual(entry['rule'], 'injNat')
        self.assertEqual(entry['target'], '(= x x)')
        self.assertEqual(entry['substitution'], ['(to-nat x)'])
        self.assertEqual(entry['before'], [1])
        self.assertNotIn('goals', entry)
