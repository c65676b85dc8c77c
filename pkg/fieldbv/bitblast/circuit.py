r"""
Propositional circuits over bit-vectors.

Nets are positive integers and literals are signed nets, as in
DIMACS. Net 1 is constantly true. Bit-vectors are lists of
literals, least significant bit first.
"""
import logging
import networkx as nx
from ..errors import Unsupported

__all__ = ['Circuit', 'TRUE', 'FALSE']

logger = logging.getLogger(__name__)

TRUE = 1
FALSE = -1


class Circuit:
    r"""
    Gate-level circuit with its Tseitin clauses.

    Gates are hashed structurally and folded when an input
    is constant, so equal subcircuits share their nets.

    Attributes
    ----------
    clauses : list of list of int
        Tseitin encoding of every gate plus asserted literals.
    gates : dict
        Maps output nets to ``(kind, inputs)``, ``kind`` one of
        ``'and'`` and ``'xor'``; ``or`` and ``not`` are expressed
        through negated literals.
    bit_vars : dict
        Maps bit-vector variable names to their nets.
    constraints : list of int
        Asserted literals (unit clauses).
    graph : :class:`networkx.DiGraph`
        Edges lead from gate inputs to gate outputs.
    """

    def __init__(self):
        self.num_nets = 1
        self.clauses = [[TRUE]]
        self.gates = {}
        self.bit_vars = {}
        self.constraints = []
        self.goal = None
        self.graph = nx.DiGraph()
        self.graph.add_node(TRUE)
        self._hash = {}
        self._memo = {}

    def new_net(self):
        self.num_nets += 1
        self.graph.add_node(self.num_nets)
        return self.num_nets

    def _gate(self, kind, a, b):
        key = (kind, min(a, b), max(a, b))
        out = self._hash.get(key)
        if out is not None:
            return out
        out = self.new_net()
        self._hash[key] = out
        self.gates[out] = (kind, (a, b))
        self.graph.add_edge(abs(a), out)
        self.graph.add_edge(abs(b), out)
        if kind == 'and':
            self.clauses += [[-out, a], [-out, b], [out, -a, -b]]
        else:
            self.clauses += [[-out, a, b], [-out, -a, -b],
                             [out, -a, b], [out, a, -b]]
        return out

    def and_(self, a, b):
        if a == FALSE or b == FALSE or a == -b:
            return FALSE
        if a == TRUE or a == b:
            return b
        if b == TRUE:
            return a
        return self._gate('and', a, b)

    def or_(self, a, b):
        return -self.and_(-a, -b)

    def xor(self, a, b):
        if abs(a) == 1:
            return b if a == FALSE else -b
        if abs(b) == 1:
            return a if b == FALSE else -a
        if a == b:
            return FALSE
        if a == -b:
            return TRUE
        sign = 1 if (a > 0) == (b > 0) else -1
        return sign * self._gate('xor', abs(a), abs(b))

    def mux(self, c, a, b):
        r"""``a`` if ``c`` else ``b``."""
        if c == TRUE or a == b:
            return a
        if c == FALSE:
            return b
        return self.or_(self.and_(c, a), self.and_(-c, b))

    def all_(self, lits):
        out = TRUE
        for lit in lits:
            out = self.and_(out, lit)
        return out

    def assert_lit(self, lit):
        self.constraints.append(lit)
        self.clauses.append([lit])

    # bit-vectors

    def bv_var(self, name, width):
        bits = self.bit_vars.get(name)
        if bits is None:
            bits = [self.new_net() for _ in range(width)]
            self.bit_vars[name] = bits
            logger.debug('%s on nets %d..%d', name, bits[0], bits[-1])
        return bits

    @staticmethod
    def bv_const(value, width):
        return [TRUE if value >> i & 1 else FALSE for i in range(width)]

    def bv_add(self, a, b, carry=FALSE):
        r"""Ripple-carry sum, truncated; also returns the carry out."""
        out = []
        for x, y in zip(a, b):
            s = self.xor(x, y)
            out.append(self.xor(s, carry))
            carry = self.or_(self.and_(x, y), self.and_(carry, s))
        return out, carry

    def bv_sub(self, a, b):
        r"""
        Difference modulo :math:`2^w`; the second value is true
        iff there is no borrow (:math:`a \geq b`).
        """
        return self.bv_add(a, [-y for y in b], TRUE)

    def bv_mul(self, a, b):
        w = len(a)
        out = self.bv_const(0, w)
        for i, y in enumerate(b):
            partial = [FALSE] * i + [self.and_(x, y) for x in a[:w - i]]
            out, _ = self.bv_add(out, partial)
        return out

    def bv_urem(self, a, b):
        r"""
        Remainder by restoring shift-subtract division.
        A zero divisor leaves the dividend.
        """
        w = len(a)
        divisor = list(b) + [FALSE]
        rem = self.bv_const(0, w + 1)
        for i in reversed(range(w)):
            rem = [a[i]] + rem[:w]
            diff, no_borrow = self.bv_sub(rem, divisor)
            rem = [self.mux(no_borrow, d, r) for d, r in zip(diff, rem)]
        return rem[:w]

    def bv_ult(self, a, b):
        lt = FALSE
        for x, y in zip(a, b):
            lt = self.or_(self.and_(-x, y), self.and_(-self.xor(x, y), lt))
        return lt

    def bv_ule(self, a, b):
        return -self.bv_ult(b, a)

    def bv_eq(self, a, b):
        return self.all_(-self.xor(x, y) for x, y in zip(a, b))

    def bv_mux(self, c, a, b):
        return [self.mux(c, x, y) for x, y in zip(a, b)]

    @staticmethod
    def bv_resize(a, width):
        return list(a[:width]) + [FALSE] * (width - len(a))

    # terms

    def encode(self, t):
        r"""
        Literal of a Boolean term, nets of a bit-vector term.

        Raises
        ------
        Unsupported
            For nodes outside the bit-vector fragment.
        """
        got = self._memo.get(t)
        if got is None:
            got = self._encode(t)
            self._memo[t] = got
        return got

    def _encode(self, t):
        op = t.op
        if not (t.sort.is_bv or t.sort.is_bool):
            raise Unsupported(str(t.sort) + ' node ' + str(t))
        if t.sort.is_bool:
            return self._encode_formula(t)
        w = t.sort.param
        if op == 'var':
            return self.bv_var(t.name, w)
        if op == 'const':
            return self.bv_const(t.value, w)
        if op == 'resize':
            return self.bv_resize(self.encode(t.args[0]), w)
        if op == 'concat':
            bits = []
            for a in reversed(t.args):
                bits += self.encode(a)
            return bits
        if op == 'ite':
            return self.bv_mux(self.encode(t.args[0]),
                               self.encode(t.args[1]),
                               self.encode(t.args[2]))
        args = [self.encode(a) for a in t.args]
        if op == 'bvor':
            return [self.or_(x, y) for x, y in zip(*args)]
        if op == 'sub':
            return self.bv_sub(*args)[0]
        if op == 'mod':
            return self.bv_urem(*args)
        if op in ('add', 'mul'):
            fold = self.bv_mul if op == 'mul' else \
                (lambda x, y: self.bv_add(x, y)[0])
            out = args[0]
            for a in args[1:]:
                out = fold(out, a)
            return out
        raise Unsupported(op + ' over bit-vectors')

    def _encode_formula(self, t):
        op = t.op
        if op == 'const':
            return TRUE if t.value else FALSE
        if op == 'not':
            return -self.encode(t.args[0])
        if op == 'and':
            return self.all_(self.encode(a) for a in t.args)
        if op == 'ite':
            c, a, b = (self.encode(a) for a in t.args)
            return self.mux(c, a, b)
        if op in ('eq', 'leq', 'geq'):
            if t.args[0].sort.is_bool:
                a, b = (self.encode(a) for a in t.args)
                if op == 'eq':
                    return -self.xor(a, b)
                return self.or_(-a, b) if op == 'leq' else self.or_(a, -b)
            a, b = (self.encode(a) for a in t.args)
            if op == 'eq':
                return self.bv_eq(a, b)
            return self.bv_ule(a, b) if op == 'leq' else self.bv_ule(b, a)
        raise Unsupported('formula ' + op)

    # models

    def is_acyclic(self):
        return nx.is_directed_acyclic_graph(self.graph)

    def simulate(self, inputs):
        r"""
        Value of every net from the values of the free nets.

        Parameters
        ----------
        inputs : dict
            Maps nets without driving gate to bools; missing
            nets default to False.

        Returns
        -------
        dict
            Maps every net to its value.
        """
        values = {TRUE: True}
        for net in nx.topological_sort(self.graph):
            gate = self.gates.get(net)
            if gate is None:
                if net != TRUE:
                    values[net] = bool(inputs.get(net, False))
                continue
            kind, (a, b) = gate
            x = values[abs(a)] == (a > 0)
            y = values[abs(b)] == (b > 0)
            values[net] = (x and y) if kind == 'and' else (x != y)
        return values

    def consistent(self, model):
        r"""Whether a SAT model agrees with gate simulation."""
        inputs = {n: v for n, v in model.items() if n not in self.gates}
        values = self.simulate(inputs)
        return all(values[n] == model.get(n, False) for n in self.gates)

    def bv_value(self, bits, model):
        r"""Unsigned value of a bit-vector under a net assignment."""
        value = 0
        for i, lit in enumerate(bits):
            bit = lit == TRUE or (abs(lit) != TRUE
                                  and model.get(abs(lit), False) == (lit > 0))
            value |= int(bit) << i
        return value

    def __repr__(self):
        return ('Circuit(nets=' + str(self.num_nets) + ', gates='
                + str(len(self.gates)) + ', clauses='
                + str(len(self.clauses)) + ')')
