from sys import path as sys_path
sys_path.append('../')
sys_path.append('../../')
from test_constants import *
import unittest
import warnings
import fieldbv as fbv
from fieldbv.range_analysis.reasoning import Refuted


def W(i):
    return fbv.var('?w' + str(i), fbv.NAT)


def C(c):
    return fbv.const(c)


class TestRangeAnalysis(unittest.TestCase):

    def setUp(self):
        fbv.set_audit(AUDIT)
        fbv.set_case_splits(True)
        self.F = fbv.FF(7)
        self.x = fbv.var('x', self.F)
        self.y = fbv.var('y', self.F)
        self.X = fbv.to_nat(self.x)
        self.Y = fbv.to_nat(self.y)
        self.bits = [fbv.leq(self.X, C(1)), fbv.leq(self.Y, C(1))]

    def tearDown(self):
        fbv.set_audit(False)
        fbv.set_case_splits(True)

    def test_derivation_replay(self):
        X, Y = self.X, self.Y
        trace = fbv.RuleTrace()
        goal = fbv.leq(fbv.add(X, Y), C(6))
        self.assertTrue(fbv.rng_analyze(goal, self.bits, trace=trace))

        snapshots = [list(e.snapshot) for e in trace]
        G1 = [fbv.leq(fbv.add(X, Y), W(1)), fbv.geq(C(6), W(1))]
        G2 = [fbv.leq(X, W(2)), fbv.leq(Y, W(3)),
              fbv.leq(fbv.add(W(2), W(3)), W(1)), fbv.geq(C(6), W(1))]
        G3 = [fbv.leq(fbv.add(C(1), C(1)), W(1)), fbv.geq(C(6), W(1))]
        G4 = [fbv.leq(fbv.add(C(1), C(1)), C(6))]
        for G in (G1, G2, G3, G4):
            self.assertIn(G, snapshots)
        self.assertEqual(snapshots[-1], [])
        self.assertEqual([e.rule for e in trace][:2],
                         ['introPVar', 'leqAddMul'])
        self.assertEqual(trace.violations(), [])

    def test_unprovable(self):
        goal = fbv.leq(fbv.add(self.X, self.Y), C(1))
        self.assertFalse(fbv.rng_analyze(goal, self.bits))

    def test_not_an_inequality(self):
        self.assertFalse(fbv.rng_analyze(fbv.eq(self.X, C(1)), self.bits))
        self.assertFalse(fbv.rng_analyze(
            fbv.leq(fbv.const(1, fbv.BV(2)), fbv.const(2, fbv.BV(2))), []))

    def test_field_bound(self):
        self.assertTrue(fbv.rng_analyze(fbv.leq(self.X, C(6)), []))
        self.assertFalse(fbv.rng_analyze(fbv.leq(self.X, C(5)), []))

    def test_bv_bound(self):
        b = fbv.bv_to_nat(fbv.var('b', fbv.BV(2)))
        self.assertTrue(fbv.rng_analyze(fbv.leq(b, C(3)), []))
        self.assertFalse(fbv.rng_analyze(fbv.leq(b, C(2)), []))

    def test_truncated_sub(self):
        goal = fbv.leq(fbv.sub(self.X, self.Y), C(1))
        self.assertTrue(fbv.rng_analyze(goal, self.bits[:1]))

    def test_mod(self):
        goal = fbv.leq(fbv.mod(fbv.mul(self.X, self.Y), C(7)), C(6))
        self.assertTrue(fbv.rng_analyze(goal, []))

    def test_ite(self):
        c = fbv.eq(self.X, C(0))
        goal = fbv.leq(fbv.ite(c, self.X, C(3)), C(3))
        trace = fbv.RuleTrace()
        self.assertTrue(fbv.rng_analyze(goal, self.bits[:1], trace=trace))
        self.assertTrue(trace.fired('leqIf'))

    def test_lower_bound(self):
        goal = fbv.geq(fbv.add(self.X, C(2)), C(2))
        trace = fbv.RuleTrace()
        self.assertTrue(fbv.rng_analyze(goal, [], trace=trace))
        self.assertTrue(trace.fired('geNat'))

    def test_field_term_under_to_nat(self):
        goal = fbv.leq(fbv.to_nat(fbv.add(self.x, self.y)), C(6))
        self.assertTrue(fbv.rng_analyze(goal, []))

    def test_case_split(self):
        X, Y = self.X, self.Y
        goal = fbv.leq(fbv.sub(fbv.add(X, Y), fbv.mul(X, Y)), C(1))
        trace = fbv.RuleTrace()
        self.assertTrue(fbv.rng_analyze(goal, self.bits, trace=trace))
        self.assertTrue(trace.fired('ineqCases'))
        self.assertFalse(fbv.rng_analyze(goal, self.bits,
                                         case_splits=False))

    def test_case_split_setting(self):
        X, Y = self.X, self.Y
        goal = fbv.leq(fbv.sub(fbv.add(X, Y), fbv.mul(X, Y)), C(1))
        fbv.set_case_splits(False)
        self.assertFalse(fbv.rng_analyze(goal, self.bits))

    def test_xor(self):
        b = fbv.bv_to_nat(fbv.var('b', fbv.BV(2)))
        X = self.X
        t = fbv.add(fbv.mul(X, b), fbv.mul(fbv.sub(C(1), X), C(2)))
        trace = fbv.RuleTrace()
        self.assertTrue(fbv.rng_analyze(fbv.leq(t, C(3)), self.bits[:1],
                                        trace=trace))
        self.assertTrue(trace.fired('ineqXOR'))

    def test_zero_bound(self):
        X, Y = self.X, self.Y
        t = fbv.add(fbv.mul(X, Y), fbv.mul(fbv.sub(C(1), X), C(3)))
        hyps = [fbv.leq(X, C(0)), fbv.leq(Y, C(6))]
        trace = fbv.RuleTrace()
        self.assertTrue(fbv.rng_analyze(fbv.leq(t, C(3)), hyps, trace=trace))
        self.assertTrue(trace.fired('ineqZero'))
        self.assertEqual(trace.violations(), [])
        self.assertFalse(fbv.rng_analyze(fbv.leq(t, C(2)), hyps))

    def test_memo_and_shared_bounds(self):
        analyzer = fbv.RangeAnalyzer(self.bits)
        s = fbv.add(self.X, self.Y)
        self.assertTrue(analyzer.prove(fbv.leq(s, C(2))))
        n = len(analyzer.trace)
        self.assertTrue(analyzer.prove(fbv.leq(s, C(2))))
        self.assertTrue(analyzer.prove(fbv.leq(s, C(5))))
        self.assertTrue(analyzer.prove(fbv.geq(C(4), s)))
        self.assertEqual(len(analyzer.trace), n)

    def test_context_hypotheses_are_live(self):
        goal = fbv.leq(self.X, C(1))
        ctx = fbv.ProofContext([goal])
        analyzer = fbv.RangeAnalyzer(ctx)
        self.assertFalse(analyzer.prove(goal))
        ctx.add_hyp(self.bits[0])
        self.assertTrue(analyzer.prove(goal))
        self.assertTrue(analyzer.trace is ctx.trace)

    def test_audit(self):
        fbv.set_audit(True)
        analyzer = fbv.RangeAnalyzer(self.bits)
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            self.assertTrue(analyzer.prove(
                fbv.leq(fbv.add(self.X, self.Y), C(6))))
        self.assertEqual(analyzer.audit_failures, [])

    def test_answers_are_sound(self):
        X, Y = self.X, self.Y
        goals = [fbv.leq(fbv.add(X, Y), C(c)) for c in range(4)]
        goals += [fbv.leq(fbv.mul(X, Y), C(c)) for c in range(3)]
        goals += [fbv.leq(fbv.sub(X, Y), C(c)) for c in range(3)]
        goals += [fbv.geq(fbv.add(X, Y), C(c)) for c in range(2)]
        for g in goals:
            if fbv.rng_analyze(g, self.bits):
                self.assertTrue(fbv.entails(self.bits, g), g)


class TestRuleSteps(unittest.TestCase):

    def setUp(self):
        F = fbv.FF(7)
        self.X = fbv.to_nat(fbv.var('x', F))
        self.Y = fbv.to_nat(fbv.var('y', F))
        self.Z = fbv.to_nat(fbv.var('z', F))
        self.bounds = fbv.hypothesis_bounds(
            [fbv.leq(self.X, C(1)), fbv.leq(self.Y, C(1))])

    def goal_set(self, *goals):
        return fbv.RangeGoalSet(list(goals), *self.bounds)

    def test_decompose(self):
        goal = fbv.leq(fbv.add(self.X, self.Y), C(6))
        gs = self.goal_set(goal)
        rule, target, subst = fbv.decompose(gs)
        self.assertEqual((rule, target, subst),
                         ('introPVar', goal, (W(1),)))
        self.assertEqual(gs.goals, [fbv.leq(fbv.add(self.X, self.Y), W(1)),
                                    fbv.geq(C(6), W(1))])
        self.assertEqual(fbv.decompose(gs)[0], 'leqAddMul')
        self.assertEqual(len(gs.goals), 4)
        with self.assertRaises(fbv.NoRuleApplies):
            fbv.decompose(self.goal_set(fbv.leq(C(1), C(2))))

    def test_eliminate(self):
        gs = self.goal_set()
        w = gs.fresh()
        gs.goals = [fbv.leq(self.Z, w), fbv.leq(w, C(9))]
        self.assertEqual(fbv.eliminate(gs)[0], 'leqZMod')
        self.assertEqual(gs.goals, [fbv.leq(C(6), C(9))])
        with self.assertRaises(fbv.NoRuleApplies):
            fbv.eliminate(gs)

    def test_eval_const(self):
        gs = self.goal_set(fbv.leq(fbv.add(C(1), C(1)), C(6)))
        self.assertIsNotNone(fbv.eval_const(gs))
        self.assertEqual(gs.goals, [])
        with self.assertRaises(Refuted):
            fbv.eval_const(self.goal_set(fbv.leq(C(5), C(4))))

    def test_zero_atoms(self):
        X, Y = self.X, self.Y
        bounds = fbv.hypothesis_bounds([fbv.leq(X, C(0))])
        choice = fbv.ite(fbv.eq(X, C(0)), C(2), Y)
        goal = fbv.leq(fbv.add(fbv.mul(X, Y), choice), Y)
        gs = fbv.RangeGoalSet([goal], *bounds)
        self.assertEqual(fbv.zero_atoms(gs), (goal, (X,)))
        self.assertEqual(gs.goals, [fbv.leq(C(2), Y)])
        with self.assertRaises(fbv.NoRuleApplies):
            fbv.zero_atoms(gs)

    def test_case_split(self):
        X, Y = self.X, self.Y
        gs = self.goal_set(fbv.leq(fbv.mul(X, Y), fbv.add(X, Y)))
        self.assertEqual(fbv.case_split(gs)[1], (X, Y))
        self.assertEqual(gs.goals, [fbv.leq(C(0), C(0)), fbv.leq(C(0), C(1)),
                                    fbv.leq(C(1), C(2))])
        three = fbv.leq(fbv.mul(X, Y), fbv.add(X, self.Z))
        with self.assertRaises(fbv.NoRuleApplies):
            fbv.case_split(self.goal_set(three))
        one_sided = fbv.leq(fbv.add(X, Y), C(2))
        with self.assertRaises(fbv.NoRuleApplies):
            fbv.case_split(self.goal_set(one_sided))


class TestHypothesisBounds(unittest.TestCase):

    def test_tightest(self):
        X = fbv.to_nat(fbv.var('x', fbv.FF(7)))
        hyps = [fbv.leq(X, C(3)), fbv.leq(X, C(1)), fbv.geq(X, C(1)),
                fbv.geq(C(5), X), fbv.leq(C(0), X)]
        upper, lower = fbv.hypothesis_bounds(hyps)
        self.assertEqual(upper[X], 1)
        self.assertEqual(lower[X], 1)

    def test_goal_set(self):
        gs = fbv.RangeGoalSet([], {}, {})
        w = gs.fresh()
        self.assertEqual(w, W(1))
        self.assertEqual(gs.fresh(), W(2))
        gs.goals = [fbv.leq(w, C(3)), fbv.leq(C(1), w)]
        gs.instantiate(gs.goals[0], w, 2)
        self.assertEqual(gs.goals, [fbv.leq(C(1), C(2))])
        self.assertNotIn(w.name, gs.placeholders)
