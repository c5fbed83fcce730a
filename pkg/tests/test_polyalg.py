import cmath
import random
from fractions import Fraction

import pytest

from tvskein.cyclo import CycloElem
from tvskein.matring import RingMatrix, trace_powers
from tvskein.polyalg import (RingPoly, numeric_roots, power_sums,
                             root_periodicity, tensor_product)
from tvskein.rings import QQ, MPoly, MPolyRing, kp_field


def test_power_sums_symbolic():
    r = MPolyRing(2)
    s1, s2 = MPoly.var(2, 0), MPoly.var(2, 1)
    g = RingPoly(r, [s2, -s1, r.one])
    ps = power_sums(g, 3)
    assert ps[1] == s1
    assert ps[2] == s1 * s1 - 2 * s2
    assert ps[3] == s1 * s1 * s1 - 3 * s1 * s2


def test_power_sums_single_root():
    ps = power_sums(RingPoly(QQ, [-1, 1]), 6)
    assert all(ps[d] == 1 for d in range(1, 7))


def test_power_sums_companion_oracle():
    rnd = random.Random(3)
    for _ in range(20):
        coeffs = [Fraction(rnd.randint(-4, 4)) for _ in range(3)] + [Fraction(1)]
        g = RingPoly(QQ, coeffs)
        comp = RingMatrix.zero(QQ, 3, 3)
        for i in range(1, 3):
            comp[i, i - 1] = QQ.one
        for i in range(3):
            comp[i, 2] = -g.coeff(i)
        tp = trace_powers(comp, 12)
        ps = power_sums(g, 12)
        assert all(tp[d] == ps[d] for d in range(1, 13))


def test_tensor_product_examples():
    r = MPolyRing(4)
    a0, a1, b0, b1 = (MPoly.var(4, i) for i in range(4))
    p1 = RingPoly(r, [a0, r.one])
    q2 = RingPoly(r, [b0, b1, r.one])
    assert tensor_product(p1, q2) == RingPoly(r, [a0 * a0 * b0, -(a0 * b1), r.one])
    t = tensor_product(RingPoly(QQ, [-2, 1]), RingPoly(QQ, [-3, 1]))
    assert t == RingPoly(QQ, [-6, 1])
    with pytest.raises(ValueError):
        tensor_product(RingPoly(QQ, [1, 2]), RingPoly(QQ, [-3, 1]))


def test_tensor_product_properties():
    rnd = random.Random(4)

    def rand_monic(deg):
        return RingPoly(QQ, [Fraction(rnd.randint(-3, 3))
                             for _ in range(deg)] + [Fraction(1)])

    for _ in range(200):
        dp, dq = rnd.randint(1, 3), rnd.randint(1, 3)
        p, q = rand_monic(dp), rand_monic(dq)
        t = tensor_product(p, q)
        assert t.degree() == dp * dq
        assert tensor_product(q, p) == t
        # constant term: resultant-style sign bookkeeping
        ct = ((-1) ** (dp * dq)) * ((-1) ** dp * p.coeff(0)) ** dq * \
            ((-1) ** dq * q.coeff(0)) ** dp
        assert t.coeff(0) == ct
        # multiplicativity of power sums
        if not p.coeff(0) == 0 and not q.coeff(0) == 0:
            pp, pq, pt = power_sums(p, 12), power_sums(q, 12), power_sums(t, 12)
            assert all(pt[d] == pp[d] * pq[d] for d in range(1, 13))

    # associativity on a few triples
    for _ in range(10):
        p, q, r = rand_monic(2), rand_monic(2), rand_monic(1)
        assert tensor_product(tensor_product(p, q), r) == \
            tensor_product(p, tensor_product(q, r))


def test_numeric_roots_cyclotomic():
    k5 = kp_field(5)
    ab = CycloElem.a_power(5, 1) + CycloElem.a_power(5, -1)
    g = RingPoly(k5, [k5.one, -ab, k5.one])
    roots = numeric_roots(g)
    expect = sorted([cmath.exp(1j * cmath.pi / 5), cmath.exp(-1j * cmath.pi / 5)],
                    key=lambda z: (round(abs(z), 9), round(cmath.phase(z), 9)))
    assert all(abs(a - b) < 1e-9 for a, b in zip(roots, expect))
    # double root
    g2 = RingPoly(QQ, [1, -2, 1])
    assert all(abs(z - 1) < 1e-7 for z in numeric_roots(g2))


def test_root_periodicity():
    k5 = kp_field(5)
    ab = CycloElem.a_power(5, 1) + CycloElem.a_power(5, -1)
    g = RingPoly(k5, [k5.one, -ab, k5.one])
    assert root_periodicity(g, 40) == 10
    assert root_periodicity(RingPoly(QQ, [-1, 1]), 5) == 1
    # roots of x^2 - x + 1 are primitive sixth roots
    assert root_periodicity(RingPoly(QQ, [1, -1, 1]), 10) == 6
    # no certificate for a non-unit root
    assert root_periodicity(RingPoly(QQ, [-2, 1]), 30) is None
