import math
import random

import pytest
from fractions import Fraction

from lexmv import groups as gr
from lexmv.algebra import PmvAlgebra, ord_of
from lexmv.sampling import sample_elem
from lexmv.witnesses import (
    ExtractionError,
    LexAlgebra,
    Mapping,
    PerfectWitness,
    WitnessError,
    build_phi,
    canonical_lex_ideal,
    canonical_witness,
    base_maximality,
    check_cyclic,
    check_decomposition,
    classify,
    extract_morphism,
    lift_morphism,
    midpoint_certificate,
    mutation_suite,
    quotient_to_base,
    state_on_lex,
    state_report,
    theorem_suite,
    unique_state,
    verify_hom,
)

ZZ = gr.lex(gr.Z, gr.Z)


def la(base_spec, base_unit, fiber, offset):
    return LexAlgebra(gr.UnitalGroup(base_spec, base_unit), fiber, offset)


L10 = la(gr.Z, 1, gr.Z, 0)
L21 = la(gr.Z, 2, gr.Z, 1)
L20 = la(gr.Z, 2, gr.Z, 0)
L22 = la(gr.Z, 2, gr.Z, 2)

STRONG_CATALOG = [
    L10,
    L20,
    la(gr.Z, 1, ZZ, (0, 0)),
    la(ZZ, (1, 0), gr.Z, 0),
    la(gr.Q, Fraction(1), gr.Z, 0),
    la(gr.Z, 1, gr.AFF, gr.AFF_ID),
    la(gr.Q, Fraction(1), gr.AFF, gr.AFF_ID),
]


def test_lexalgebra_requires_abelian_linear_base():
    with pytest.raises(WitnessError):
        LexAlgebra(gr.UnitalGroup(gr.AFF, gr.Aff(2, 0)), gr.Z, 0)


def test_from_algebra_roundtrip():
    alg = PmvAlgebra(gr.UnitalGroup(ZZ, (2, 1)))
    assert LexAlgebra.from_algebra(alg).algebra == alg
    with pytest.raises(WitnessError):
        LexAlgebra.from_algebra(PmvAlgebra(gr.UnitalGroup(gr.Z, 3)))


def test_canonical_witness_kinds():
    w = canonical_witness(L10, "strong")
    assert w.family(0) == L10.algebra.zero
    assert w.family(1) == L10.algebra.one
    wk = canonical_witness(L21, "weak")
    assert wk.family(2) == L21.algebra.elem((2, 0)) != L21.algebra.one
    with pytest.raises(WitnessError):
        canonical_witness(L21, "strong")


def test_classify():
    w = canonical_witness(L10, "strong")
    assert classify(w, L10.algebra.elem((0, 7))) == 0
    assert classify(w, L10.algebra.elem((1, -7))) == 1
    m1 = la(gr.Z, 1, ZZ, (0, 0))
    wm = canonical_witness(m1, "strong")
    assert classify(wm, m1.algebra.elem((0, (2, -5)))) == 0
    with pytest.raises(WitnessError):
        classify(w, L21.algebra.elem((0, 0)))


def test_decomposition_and_cyclic_on_catalog():
    for lx in STRONG_CATALOG:
        w = canonical_witness(lx, "strong")
        assert check_decomposition(w, 400, seed=4).ok, str(lx)
        assert check_cyclic(w, 400, seed=4).ok, str(lx)


def test_theorem_suite_on_catalog():
    for lx in STRONG_CATALOG:
        rep = theorem_suite(canonical_witness(lx, "strong"), 400, seed=5)
        assert rep.ok, (str(lx), rep.counterexamples)


def test_weak_witness():
    w = canonical_witness(L21, "weak")
    assert check_decomposition(w, 500, seed=6).ok
    assert check_cyclic(w, 500, seed=6).ok
    bad = PerfectWitness(L21, w.indexer, w.family, "strong")
    rep = check_cyclic(bad, 500, seed=6)
    assert not rep.ok
    assert rep.counterexamples[0]["clause"] == "iii-top"


def test_mutation_suite_kill_rate():
    results = mutation_suite(seed=7)
    assert len(results) == 6
    for name, rep in results:
        assert not rep.ok, name
        assert rep.counterexamples, name


def test_build_phi_identity_on_canonical():
    rng = random.Random(8)
    for lx in STRONG_CATALOG:
        phi = build_phi(canonical_witness(lx, "strong"))
        assert phi.target == lx.algebra
        for _ in range(100):
            x = sample_elem(lx.algebra, rng)
            assert phi.fn(x).value == x.value


def test_build_phi_weak_offset():
    phi = build_phi(canonical_witness(L21, "weak"))
    assert phi.target.unit == (2, 1)
    assert verify_hom(phi, 500, seed=9).ok


def theta():
    src, tgt = L20.algebra, L22.algebra
    return Mapping(
        src,
        tgt,
        lambda x: tgt.elem((x.value[0], x.value[1] + x.value[0])),
        preimage=lambda y: src.elem((y.value[0], y.value[1] - y.value[0])),
        description="theta(k,n) = (k, n+k)",
    )


def test_theta_is_isomorphism():
    assert verify_hom(theta(), 1000, seed=10).ok


def test_diagonal_witness_recovers_theta_inverse():
    tgt = L22.algebra
    diag = PerfectWitness(L22, lambda x: x.value[0], lambda t: tgt.elem((t, t)), "strong")
    assert check_decomposition(diag, 400, seed=11).ok
    assert check_cyclic(diag, 400, seed=11).ok
    phi = build_phi(diag)
    assert phi.target == L20.algebra
    assert verify_hom(phi, 500, seed=11).ok
    assert phi.fn(tgt.elem((1, 5))) == L20.algebra.elem((1, 4))
    th = theta()
    rng = random.Random(12)
    for _ in range(300):
        x = sample_elem(L20.algebra, rng)
        assert phi.fn(th.fn(x)) == x


def test_midpoint_certificate():
    rep = midpoint_certificate(L21)
    assert rep.details["solvable"] is False
    rep0 = midpoint_certificate(L20)
    assert rep0.details["solvable"] is True and rep0.details["witness"] == "(1,0)"
    rep2 = midpoint_certificate(L22)
    assert rep2.details["solvable"] is True and rep2.details["witness"] == "(1,1)"
    odd = midpoint_certificate(la(gr.Z, 3, gr.Z, 0))
    assert odd.details["solvable"] is False


def test_canonical_lex_ideal():
    ideal, rep = canonical_lex_ideal(L10, 500, seed=13)
    assert rep.ok
    assert ideal.contains(L10.algebra.elem((0, 5)))
    assert not ideal.contains(L10.algebra.elem((1, -5)))
    na = la(gr.Z, 1, gr.AFF, gr.AFF_ID)
    ideal2, rep2 = canonical_lex_ideal(na, 500, seed=13)
    assert rep2.ok
    assert ideal2.contains(na.algebra.elem((0, gr.Aff(2, 3))))
    with pytest.raises(WitnessError):
        canonical_lex_ideal(L21)


def test_quotient_to_base():
    q = quotient_to_base(L10)
    assert q.fn(L10.algebra.elem((1, -5))).value == 1
    assert verify_hom(q, 500, seed=14, check_injective=False).ok
    m1 = la(gr.Z, 1, ZZ, (0, 0))
    assert quotient_to_base(m1).fn(m1.algebra.elem((0, (3, -2)))).value == 0
    m2 = la(ZZ, (1, 0), gr.Z, 0)
    assert quotient_to_base(m2).fn(m2.algebra.elem(((0, 3), -2))).value == (0, 3)


def test_quotient_kernel_is_canonical_ideal():
    ideal, _ = canonical_lex_ideal(L10, 50)
    q = quotient_to_base(L10)
    rng = random.Random(15)
    for _ in range(300):
        x = sample_elem(L10.algebra, rng)
        assert (q.fn(x).value == 0) == ideal.contains(x)


def test_states():
    s = state_on_lex(L10)
    assert s(L10.algebra.elem((1, -5))) == 1
    assert state_report(s, 500, seed=16).ok
    m1 = la(gr.Z, 1, ZZ, (0, 0))
    assert state_on_lex(m1)(m1.algebra.elem((0, (3, -2)))) == 0
    chainlike = la(gr.Z, 4, gr.O, 0)
    assert state_on_lex(chainlike)(chainlike.algebra.elem((3, 0))) == Fraction(3, 4)
    q4 = PmvAlgebra(gr.UnitalGroup(gr.Z, 4))
    assert unique_state(q4)(q4.elem(3)) == Fraction(3, 4)


def test_state_vanishes_on_ideal():
    ideal, _ = canonical_lex_ideal(L10, 50)
    s = state_on_lex(L10)
    assert state_report(s, 500, seed=17, vanishes_on=ideal).ok


def test_base_maximality():
    assert base_maximality(canonical_witness(L10, "strong"))
    assert base_maximality(canonical_witness(la(gr.Q, Fraction(1), gr.Z, 0), "strong"))
    assert not base_maximality(canonical_witness(la(ZZ, (1, 0), gr.Z, 0), "strong"))


def test_maximality_trichotomy_consistency():
    # a non-Archimedean base leaves infinitesimals outside the zero slice,
    # so the state kernel strictly exceeds M_0; an Archimedean base does not
    m2 = la(ZZ, (1, 0), gr.Z, 0)
    w = canonical_witness(m2, "strong")
    x = m2.algebra.elem(((0, 1), -7))
    assert classify(w, x) != (0, 0)
    assert ord_of(x) is math.inf
    m1 = la(gr.Z, 1, ZZ, (0, 0))
    w1 = canonical_witness(m1, "strong")
    s1 = state_on_lex(m1)
    rng = random.Random(18)
    for _ in range(300):
        y = sample_elem(m1.algebra, rng)
        assert (s1(y) == 0) == (classify(w1, y) == 0)


def test_functor_lift_values():
    base = gr.UnitalGroup(gr.Z, 1)
    m = lift_morphism(gr.scale_hom(gr.Z, 2), base)
    assert m.fn(m.source.elem((1, -3))) == m.target.elem((1, -6))
    ident = lift_morphism(gr.identity_hom(gr.Z), base)
    rng = random.Random(19)
    for _ in range(200):
        x = sample_elem(ident.source, rng)
        assert ident.fn(x) == x


def test_functor_laws_and_extraction():
    base = gr.UnitalGroup(gr.Z, 2)
    homs = [
        gr.identity_hom(gr.Z),
        gr.zero_hom(gr.Z, gr.Z),
        gr.scale_hom(gr.Z, 3),
        gr.scale_hom(gr.Q, Fraction(2, 3)),
        gr.pairwise_hom(gr.scale_hom(gr.Z, 2), gr.identity_hom(gr.Z)),
        gr.inject_right_hom(gr.Z, gr.Z),
    ]
    rng = random.Random(20)
    for h in homs:
        m = lift_morphism(h, base)
        assert verify_hom(m, 300, seed=21, check_injective=False).ok, str(h)
        back = extract_morphism(m, samples=300, seed=22)
        assert gr.hom_equal(h, back, samples=500), str(h)
    h1 = gr.scale_hom(gr.Z, 2)
    h2 = gr.scale_hom(gr.Z, 3)
    lhs = lift_morphism(gr.hom_compose(h2, h1), base)
    m1 = lift_morphism(h1, base)
    m2 = lift_morphism(h2, base)
    for _ in range(300):
        x = sample_elem(lhs.source, rng)
        assert lhs.fn(x) == m2.fn(m1.fn(x))


def test_extract_rejects_non_slicewise_maps():
    with pytest.raises(ExtractionError):
        extract_morphism(theta())
