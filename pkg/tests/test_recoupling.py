import itertools
import random

import pytest

from tvskein.laurent import LaurentFrac, LaurentPoly, bracket_e, quantum_int
from tvskein.recoupling import (ColorError, full_twist, jones_wenzl, tet,
                                tet_web, theta, theta_web, tl_compose, tl_e,
                                tl_trace)


def adm(a, b, c):
    return (a + b + c) % 2 == 0 and a <= b + c and b <= a + c and c <= a + b


def test_projectors_small():
    f1 = jones_wenzl(1)
    assert f1 == {(1, 0): LaurentFrac.one()}
    f2 = jones_wenzl(2)
    # f_2 = identity + (1/[2]) e_1  (the loop value is -[2])
    ident = (2, 3, 0, 1)
    e = (1, 0, 3, 2)
    assert f2[ident] == LaurentFrac.one()
    assert f2[e] == LaurentFrac(1, quantum_int(2))


def test_projector_idempotence_and_annihilation():
    for n in range(2, 6):
        f = jones_wenzl(n)
        ff = tl_compose(f, f, n)
        assert set(ff) == set(f)
        assert all((ff[d] - f[d]).is_zero() for d in f)
        for i in range(n - 1):
            assert not tl_compose(tl_e(n, i), f, n)
            assert not tl_compose(f, tl_e(n, i), n)
        assert tl_trace(f, n) == LaurentFrac(bracket_e(n))


def test_f2_kills_capcup_expansion():
    # expand f_2 = 1 + (1/[2]) e_1 and multiply by the cap-cup by hand
    f2 = jones_wenzl(2)
    e = tl_e(2, 0)
    prod = tl_compose(e, f2, 2)
    assert prod == {}


def test_theta_values():
    assert theta(1, 1, 0) == LaurentFrac(-quantum_int(2))
    assert theta(2, 2, 0) == LaurentFrac(bracket_e(2))
    assert theta(0, 0, 0) == LaurentFrac(1)
    with pytest.raises(ColorError):
        theta(1, 1, 1)
    with pytest.raises(ColorError):
        theta(1, 1, 4)


def test_full_twist_values():
    assert full_twist(0, 1, 1) == LaurentPoly({-6: 1})
    assert full_twist(2, 1, 1) == LaurentPoly({2: 1})
    assert full_twist(1, 1, 0) == LaurentPoly.one()


def test_theta_against_web_oracle():
    triples = [(a, b, c) for a in range(5) for b in range(a, 5)
               for c in range(b, 5) if adm(a, b, c)]
    for tri in triples:
        assert theta(*tri) == theta_web(*tri), tri


def test_tet_against_web_oracle_sample():
    tuples = [cs for cs in itertools.product(range(4), repeat=6)
              if all(adm(*t) for t in ((cs[0], cs[1], cs[2]),
                                       (cs[0], cs[4], cs[5]),
                                       (cs[1], cs[4], cs[3]),
                                       (cs[2], cs[5], cs[3])))]
    rnd = random.Random(11)
    for cs in rnd.sample(tuples, 30):
        assert tet(*cs) == tet_web(*cs), cs


def test_tet_degenerations():
    # a zero on the outer edge collapses the tetrahedron to a theta
    assert tet(0, 1, 1, 2, 1, 1) == theta(1, 2, 1)
    assert tet(0, 2, 2, 2, 2, 2) == theta(2, 2, 2)


def test_color_level_guard():
    from tvskein.recoupling import check_color_at_level
    check_color_at_level(3, 5)          # [1],[2],[3] nonzero at level 5
    with pytest.raises(ColorError):
        check_color_at_level(4, 8)      # [4] vanishes at level 8
    with pytest.raises(ColorError):
        check_color_at_level(5, 5)      # [5] vanishes at level 5
