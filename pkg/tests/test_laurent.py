import random
from fractions import Fraction

import pytest

from tvskein.laurent import (A, DELTA, MU, LaurentFrac, LaurentPoly, bracket_e,
                             mu_eig, poly_gcd, quantum_int)


def test_binomial_square():
    x = A + A.bar()
    assert x * x == LaurentPoly({2: 1, 0: 2, -2: 1})


def test_delta_bar_symmetric():
    assert DELTA.bar() == DELTA


def test_hopf_value_expansion():
    h = -DELTA * (A ** 4 + A ** -4)
    assert h == LaurentPoly({6: 1, 2: 1, -2: 1, -6: 1})


def test_parse_roundtrip():
    samples = [
        "-A^-16 + A^-12 + 2 - 2*A^4 - A^16 + A^20",
        "0",
        "3/5 - 1/5*A + 4/5*A^2",
        "A",
        "-A^-1",
    ]
    for s in samples:
        p = LaurentPoly.parse(s)
        assert LaurentPoly.parse(str(p)) == p
    assert str(LaurentPoly.parse(samples[0])) == samples[0]


def test_ring_axioms_random():
    rnd = random.Random(0)

    def rand_poly():
        return LaurentPoly({rnd.randint(-6, 6): rnd.randint(-4, 4)
                            for _ in range(rnd.randint(0, 5))})

    for _ in range(200):
        x, y, z = rand_poly(), rand_poly(), rand_poly()
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) * z == x * z + y * z
        assert (x * y) * z == x * (y * z)
        assert x.bar().bar() == x
        assert (x * y).bar() == x.bar() * y.bar()


def test_exact_div():
    w = LaurentPoly.parse("-2 + A^-16 - A^-8 - A^-4 - 2*A^4 - 2*A^8 - A^20")
    q = w.exact_div(DELTA)
    assert q * DELTA == w
    with pytest.raises(ValueError):
        (A + 1).exact_div(DELTA)


def test_subs_power():
    p = LaurentPoly({2: 1, -1: 3})
    assert p.subs_power(3) == LaurentPoly({6: 1, -3: 3})


def test_quantum_integers():
    assert quantum_int(1) == LaurentPoly.one()
    assert quantum_int(2) == LaurentPoly({2: 1, -2: 1})
    assert bracket_e(1) == -quantum_int(2)
    assert bracket_e(1) == DELTA
    assert mu_eig(1) == MU
    assert quantum_int(0).is_zero()
    # [n] * (A^2 - A^-2) == A^2n - A^-2n
    for n in range(1, 8):
        lhs = quantum_int(n) * LaurentPoly({2: 1, -2: -1})
        assert lhs == LaurentPoly({2 * n: 1, -2 * n: -1})


def test_poly_gcd_and_frac():
    p = DELTA * (A ** 4 - 1)
    q = DELTA * (A ** 2 + 3)
    g = poly_gcd(p, q)
    assert p.exact_div(g) is not None
    f = LaurentFrac(p, q)
    assert f == LaurentFrac(A ** 4 - 1, A ** 2 + 3)
    assert (f / f) == LaurentFrac(1)
    assert (f - f).is_zero()
    x = LaurentFrac(1, quantum_int(2))
    assert (x * quantum_int(2)).as_laurent() == LaurentPoly.one()
