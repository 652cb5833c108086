import random

import pytest
from fractions import Fraction

from lexmv import groups as gr


ZZ = gr.lex(gr.Z, gr.Z)


def test_add_basic():
    assert gr.g_add(gr.Z, 3, 5) == 8
    assert gr.g_add(ZZ, (1, -2), (0, 5)) == (1, 3)


def test_aff_composition_noncommutative():
    a = gr.Aff(2, 0)
    b = gr.Aff(1, 1)
    assert gr.g_add(gr.AFF, a, b) == gr.Aff(2, 2)
    assert gr.g_add(gr.AFF, b, a) == gr.Aff(2, 1)


def test_neg():
    assert gr.g_neg(gr.Z, 7) == -7
    assert gr.g_neg(gr.AFF, gr.Aff(2, 4)) == gr.Aff(Fraction(1, 2), -2)
    assert gr.g_add(gr.AFF, gr.Aff(2, 4), gr.g_neg(gr.AFF, gr.Aff(2, 4))) == gr.AFF_ID
    zq = gr.lex(gr.Z, gr.Q)
    assert gr.g_neg(zq, (1, Fraction(3, 2))) == (-1, Fraction(-3, 2))


def test_cmp_lex():
    assert gr.g_cmp(ZZ, (0, 100), (1, -100)) == -1
    assert gr.g_cmp(gr.AFF, gr.AFF_ID, gr.AFF_ID) == 0
    nested = gr.lex(gr.Z, ZZ)
    assert gr.g_cmp(nested, (0, (0, -1)), (0, (0, 0))) == -1


def test_lattice():
    assert gr.g_join(gr.Z, 3, -1) == 3
    assert gr.g_meet(ZZ, (1, 5), (1, 2)) == (1, 2)
    assert gr.g_meet(ZZ, (0, 9), (1, -9)) == (0, 9)


def test_join_meet_are_bounds():
    rng = random.Random(5)
    for spec in (gr.Z, gr.Q, gr.AFF, ZZ, gr.lex(gr.Q, gr.AFF)):
        for _ in range(100):
            a = gr.sample_group_elem(spec, rng)
            b = gr.sample_group_elem(spec, rng)
            j = gr.g_join(spec, a, b)
            m = gr.g_meet(spec, a, b)
            assert gr.g_le(spec, a, j) and gr.g_le(spec, b, j)
            assert gr.g_le(spec, m, a) and gr.g_le(spec, m, b)
            c = gr.sample_group_elem(spec, rng)
            if gr.g_le(spec, a, c) and gr.g_le(spec, b, c):
                assert gr.g_le(spec, j, c)
            if gr.g_le(spec, c, a) and gr.g_le(spec, c, b):
                assert gr.g_le(spec, c, m)


def test_group_laws_sampled():
    rng = random.Random(11)
    for spec in (gr.Z, gr.Q, gr.AFF, ZZ, gr.lex(gr.Z, gr.AFF)):
        z = gr.zero(spec)
        for _ in range(200):
            a = gr.sample_group_elem(spec, rng)
            b = gr.sample_group_elem(spec, rng)
            c = gr.sample_group_elem(spec, rng)
            assert gr.g_add(spec, gr.g_add(spec, a, b), c) == gr.g_add(
                spec, a, gr.g_add(spec, b, c)
            )
            assert gr.g_add(spec, a, z) == a and gr.g_add(spec, z, a) == a
            assert gr.g_add(spec, a, gr.g_neg(spec, a)) == z


def test_order_bi_invariance():
    rng = random.Random(13)
    for spec in (gr.AFF, gr.lex(gr.Z, gr.AFF)):
        for _ in range(300):
            a = gr.sample_group_elem(spec, rng)
            b = gr.sample_group_elem(spec, rng)
            x = gr.sample_group_elem(spec, rng)
            y = gr.sample_group_elem(spec, rng)
            if not gr.g_le(spec, a, b):
                a, b = b, a
            lhs = gr.g_add(spec, gr.g_add(spec, x, a), y)
            rhs = gr.g_add(spec, gr.g_add(spec, x, b), y)
            assert gr.g_le(spec, lhs, rhs)


def test_aff_conjugation_preserves_strict_order():
    rng = random.Random(17)
    for _ in range(300):
        f = gr.sample_group_elem(gr.AFF, rng)
        g = gr.sample_group_elem(gr.AFF, rng)
        h = gr.sample_group_elem(gr.AFF, rng)
        if gr.g_cmp(gr.AFF, f, g) == 0:
            continue
        if gr.g_cmp(gr.AFF, f, g) > 0:
            f, g = g, f
        cf = gr.g_add(gr.AFF, gr.g_add(gr.AFF, h, f), gr.g_neg(gr.AFF, h))
        cg = gr.g_add(gr.AFF, gr.g_add(gr.AFF, h, g), gr.g_neg(gr.AFF, h))
        assert gr.g_cmp(gr.AFF, cf, cg) < 0


def test_center():
    assert gr.center_contains(gr.Q, Fraction(7, 3))
    assert not gr.center_contains(gr.AFF, gr.Aff(2, 0))
    assert gr.center_contains(gr.lex(gr.Z, gr.AFF), (5, gr.AFF_ID))


def test_center_soundness_sampled():
    rng = random.Random(19)
    spec = gr.lex(gr.Z, gr.AFF)
    for _ in range(200):
        a = gr.sample_group_elem(spec, rng)
        if gr.center_contains(spec, a):
            for _ in range(20):
                b = gr.sample_group_elem(spec, rng)
                assert gr.g_add(spec, a, b) == gr.g_add(spec, b, a)


def test_shape_checks():
    with pytest.raises(gr.ShapeError):
        gr.check_shape(ZZ, (1, Fraction(1, 2)))
    with pytest.raises(gr.ShapeError):
        gr.check_shape(gr.Z, Fraction(1, 2))
    with pytest.raises(gr.ShapeError):
        gr.Aff(0, 1)


def test_strong_units():
    gr.UnitalGroup(gr.Z, 3)
    gr.UnitalGroup(gr.Q, Fraction(1, 2))
    gr.UnitalGroup(gr.AFF, gr.Aff(2, 0))
    gr.UnitalGroup(ZZ, (1, -4))
    gr.UnitalGroup(gr.lex(gr.O, gr.Z), (0, 5))
    with pytest.raises(ValueError):
        gr.UnitalGroup(gr.Z, 0)
    with pytest.raises(ValueError):
        gr.UnitalGroup(gr.AFF, gr.Aff(1, 2))  # a translation is not strong
    with pytest.raises(ValueError):
        gr.UnitalGroup(ZZ, (0, 5))  # head zero over a nontrivial head group


def test_nmul():
    assert gr.g_nmul(gr.Z, 3, 4) == 12
    assert gr.g_nmul(gr.AFF, gr.Aff(2, 1), 3) == gr.g_add(
        gr.AFF, gr.Aff(2, 1), gr.g_add(gr.AFF, gr.Aff(2, 1), gr.Aff(2, 1))
    )


def test_homs():
    h = gr.scale_hom(gr.Z, 3)
    assert gr.hom_apply(h, 4) == 12
    assert gr.hom_apply(gr.scale_hom(gr.Z, 0), 4) == 0
    p = gr.pairwise_hom(gr.identity_hom(gr.Z), gr.scale_hom(gr.Z, 2))
    assert gr.hom_apply(p, (1, 3)) == (1, 6)
    inj = gr.inject_right_hom(gr.Z, gr.Z)
    assert gr.hom_apply(inj, 7) == (0, 7)
    comp = gr.hom_compose(p, gr.inject_right_hom(gr.Z, gr.Z))
    assert gr.hom_apply(comp, 5) == (0, 10)


def test_hom_rejects_non_homs():
    with pytest.raises(gr.HomError):
        gr.scale_hom(gr.Z, -1)  # order reversal
    with pytest.raises(gr.HomError):
        gr.scale_hom(gr.AFF, 2)
    with pytest.raises(gr.HomError):
        gr.GroupHom(gr.Z, gr.Q, "identity")


def test_hom_equal():
    assert gr.hom_equal(gr.scale_hom(gr.Z, 1), gr.identity_hom(gr.Z))
    assert not gr.hom_equal(gr.scale_hom(gr.Z, 1), gr.scale_hom(gr.Z, 2))


def test_fmt_elem():
    assert gr.fmt_elem(ZZ, (1, -2)) == "(1,-2)"
    assert gr.fmt_elem(gr.AFF, gr.Aff(Fraction(1, 2), 3)) == "aff(1/2,3)"
