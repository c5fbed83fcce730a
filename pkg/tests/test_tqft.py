import cmath
import random

import pytest

from tvskein.cyclo import CycloElem, constants, map_j, reduce_to_kp
from tvskein.diagram import SliceWord
from tvskein.laurent import LaurentPoly
from tvskein.polyalg import RingPoly, power_sums
from tvskein.rings import kp_field
from tvskein.skein import catalan
from tvskein.tqft import (ColorData, UnsupportedSpecialization,
                          branched_series, colored_double_invariant,
                          cover_series, double_invariant, general_double,
                          ordinary, ordinary_det_test, seifert_matrix_double,
                          signature_at, tangle_invariant, tau5_sigma_independent,
                          tau5_value, total_signature, witten_check,
                          z5_color2_scalar)

from test_skein import rand_word


def test_ordinary_closed_form_vs_det():
    for p in range(1, 17):
        for n in range(0, 5):
            assert ordinary(p, n) == ordinary_det_test(p, n), (p, n)
    assert ordinary(10, 2) and not ordinary(6, 2)
    # 2r is special with respect to r - 1
    for r in (2, 3, 4):
        assert not ordinary(2 * r, r - 1) or r - 1 == 0


def test_color_data():
    cd = ColorData.at(5)
    assert cd.q == 4 and cd.good_colors() == [0, 2]
    assert cd.S(2) == [2] and cd.S(0) == [0, 2]
    cd8 = ColorData.at(8)
    assert cd8.q == 3 and cd8.good_colors() == [0, 1, 2]
    assert cd8.S(2) == [1]
    assert not cd8.small(2, 2, 2)       # sum = 2q is not small


def test_identity_tangle():
    w = SliceWord(4, ())
    ti = tangle_invariant(w)
    # normalized charpoly of the identity is (x-1)^c(n)
    x = RingPoly(ti.gamma.ring, [LaurentPoly({0: -1}), LaurentPoly.one()])
    assert ti.gamma == x * x
    assert ti.flat_rank == catalan(2)


def test_cyclic_shift_invariance():
    rnd = random.Random(12)
    done = 0
    while done < 30:
        w = rand_word(rnd, rnd.randint(1, 3), rnd.randint(1, 6))
        pts = [t for t in w.shift_points() if t]
        if not pts:
            continue
        t1 = tangle_invariant(w)
        t2 = tangle_invariant(w.cyclic_shift(rnd.choice(pts)))
        assert t1.gamma == t2.gamma
        assert t1.constant_term == t2.constant_term
        done += 1


def test_special_p_raises():
    w = SliceWord(4, ())
    with pytest.raises(UnsupportedSpecialization):
        tangle_invariant(w, 6)      # p = 6 is special with respect to n = 2
    tangle_invariant(w, 10)         # ordinary level works


def test_wrapping_of_straight_strands():
    w = SliceWord(4, ())
    ti = tangle_invariant(w)
    assert ti.wrapping == 4 and ti.wrapping_bound_ok


def test_double_trivial_levels():
    for p in (1, 3, 4):
        inv = double_invariant("RT", 2, p)
        assert inv.flat_rank == 1
        assert inv.gamma.degree() == 1


def test_general_matches_closed_form_level5():
    for j_name in ("U", "RT"):
        for k in (0, 2):
            gen = general_double(j_name, k, 5)
            fast = double_invariant(j_name, k, 5)
            assert gen.gamma == fast.gamma
            assert gen.constant_term == fast.constant_term


def test_twist_periodicity_in_k():
    # Gamma_p(D_k(U)) has period p in k, exhaustively for k = 0..2p
    for p in (5, 7, 8):
        gammas = [double_invariant("U", k, p).gamma for k in range(2 * p + 1)]
        for k in range(p + 1):
            assert gammas[k] == gammas[k + p], (p, k)


def test_colored_periodicity_in_k():
    vals = [colored_double_invariant("U", k, 7, 2).gamma for k in range(0, 15)]
    for k in range(8):
        assert vals[k] == vals[k + 7]


def test_colored_hypothesis_error_reporting():
    # <U_c> = <e_c> never vanishes at these levels, so build a failing case
    # by hand: at p = 3 the basis is {e_0} and nothing vanishes; instead
    # check that odd colors vanish and that bad colors raise
    for c in (1, 3):
        inv = colored_double_invariant("U", 1, 5, c)
        assert inv.flat_rank == 0                # odd colors vanish
    from tvskein.recoupling import ColorError
    with pytest.raises(ColorError):
        colored_double_invariant("U", 1, 5, 4)   # out of color range at p=5


def test_color2_scalar_reading():
    # the derived parenthesization matches the printed color-2 values;
    # the literal one does not (recorded mismatch)
    pack = constants(5)
    target = reduce_to_kp(LaurentPoly.parse("1 - A^3"), 5)
    assert z5_color2_scalar("U", 2) == target
    from tvskein.skein import knot_scalars
    s = knot_scalars("U")
    mu = pack.mu[1]
    one = CycloElem.one(5)
    a, ab = CycloElem.a_power(5, 1), CycloElem.a_power(5, -1)
    bk = reduce_to_kp(s.b_k(2), 5)
    literal = (a + ab) * (pack.beta * (one + mu ** 5) * bk - one)
    assert literal != target


def test_signatures():
    v_rt = seifert_matrix_double(-1)
    assert signature_at(v_rt, 1, 2).sigma == -2
    assert total_signature(v_rt, 1) == 0
    assert total_signature(v_rt, 6) == -8
    # degenerate omega flagged at the sixth roots of unity
    assert signature_at(v_rt, 1, 6).degenerate
    # periodic-monodromy congruence: sigma_(s+1) = sigma_7 = 0 mod 8
    assert total_signature(v_rt, 7) % 8 == 0
    # nonnegative twisting gives identically zero signatures
    for k in (0, 1, 2, 3):
        assert total_signature(seifert_matrix_double(k), 9) == 0


def test_fibered_unit_circle_and_trace_norm():
    # roots of Gamma_5 for the fibered doubles lie on the unit circle
    for k in (1, 4):
        inv = double_invariant("U", k, 5)
        assert all(abs(abs(z) - 1) < 1e-9 for z in inv.numeric_eigen)
    # |cover values| <= rank V_5(torus) = 2 for d <= 60
    for k, name in ((-1, "RT"), (1, "F8")):
        for rec in cover_series("U", k, 5, range(1, 61)):
            assert abs(rec.value.embed()) <= 2 + 1e-9, (name, rec.d)


def test_mirror_symmetry_of_invariants():
    # the figure-eight classes are bar-invariant
    inv = double_invariant("U", 1, 5)
    assert inv.gamma.bar() == inv.gamma
    # bar of the trefoil class is the mirror class
    rt = double_invariant("U", -1, 5)
    from tvskein.tqft import make_invariant
    lt = make_invariant(rt.matrix.bar(), 5)
    assert lt.gamma == rt.gamma.bar()


def test_degree_drop_for_stevedore_family():
    # deg Gamma_2r(D_2(U)) < r - 1 for 3 <= r <= 6
    for r in (3, 4, 5, 6):
        inv = double_invariant("U", 2, 2 * r)
        assert inv.gamma.degree() < r - 1, (r, str(inv.gamma))


def test_one_is_root_for_stevedore():
    for p in (5, 7):
        inv = double_invariant("U", 2, p)
        val = inv.gamma(CycloElem.one(p))
        assert val.is_zero(), p


def test_tensor_consistency_level10():
    inv10 = double_invariant("U", 3, 10)
    inv5 = double_invariant("U", 3, 5)
    ps10 = power_sums(inv10.gamma, 8)
    ps5 = power_sums(inv5.gamma, 8)
    from tvskein.tqft import s_kd
    for d in range(1, 9):
        assert ps10[d] == map_j(ps5[d], 5) * s_kd(3, d)


def test_tau5():
    a, b = tau5_sigma_independent("U", 1, 3)
    assert abs(a - b) < 1e-9
    v = tau5_value("U", 1, 3)
    assert abs(v - a) < 1e-9


def test_branched_unsupported_level():
    with pytest.raises(ValueError):
        branched_series("U", 1, 2, [1])


def test_trace_powers_match_newton_on_invariants():
    # Prop 1.7 route (matrix powers) equals the recursion from Gamma
    from tvskein.matring import trace_powers
    for j_name, k, p in (("U", 3, 5), ("RT", 1, 5), ("U", 1, 8)):
        inv = double_invariant(j_name, k, p)
        deg = max(inv.gamma.degree(), 1)
        tp = trace_powers(inv.matrix, 2 * deg)
        ps = power_sums(inv.gamma, 2 * deg)
        assert all(tp[d] == ps[d] for d in range(1, 2 * deg + 1))
    # the printed d = 17 value through the matrix-power route
    inv = double_invariant("U", 3, 5)
    tp = trace_powers(inv.matrix, 17)
    assert tp[17] == reduce_to_kp(LaurentPoly.parse("188 + 152*A + 136*A^2"), 5)


def test_matrix_periods_exact_powering():
    from tvskein.matring import matrix_period
    inv4 = double_invariant("U", 4, 5)
    assert matrix_period(inv4.matrix, 20) == 15
    inv_rt = double_invariant("U", -1, 5)
    m = matrix_period(inv_rt.matrix, 20)
    assert m is not None and 15 % m == 0


def test_invariant_factors_stable_under_shift():
    rnd = random.Random(21)
    done = 0
    while done < 10:
        w = rand_word(rnd, 2, rnd.randint(1, 5))
        pts = [t for t in w.shift_points() if t]
        if not pts:
            continue
        from tvskein.matring import flat_decompose, similarity_invariants
        from tvskein.laurent import LaurentFrac
        from tvskein.rings import QA
        from tvskein.skein import transfer_Q
        q1 = transfer_Q(w).map(lambda x: LaurentFrac(x), QA)
        q2 = transfer_Q(w.cyclic_shift(rnd.choice(pts))).map(
            lambda x: LaurentFrac(x), QA)
        f1 = similarity_invariants(flat_decompose(q1).flat_matrix)
        f2 = similarity_invariants(flat_decompose(q2).flat_matrix)
        assert f1 == f2
        done += 1
