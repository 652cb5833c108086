"""Slice decompositions, cyclic families, and lexicographic representations.

A LexAlgebra is the interval algebra Gamma(H lex G, (u, b)) split into its
base (H, u), fiber G and offset b.  The offset b = 0 is the strong case;
b = 1 - c_u in general.  Decompositions and ideals of these infinite
algebras are handled symbolically: a decomposition is an indexing
function, an ideal is a membership predicate, and every universally
quantified claim becomes a seeded sampled check returning a structured
report with the failing witness when there is one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import groups as gr
from .algebra import PmvAlgebra, PmvElem
from .groups import GroupHom, GroupSpec, UnitalGroup
from .reports import Report
from .sampling import DEFAULT_BOUND, sample_elem


class WitnessError(ValueError):
    """A witness invariant is violated at construction."""


class UnsupportedBaseError(ValueError):
    """No closed-form state is available for this base spec."""


# ---------------------------------------------------------------------------
# Lexicographic algebras


@dataclass(frozen=True)
class LexAlgebra:
    """Gamma(H lex G, (u, b)) with linear Abelian base (H, u)."""

    base: UnitalGroup
    fiber: GroupSpec
    offset: object

    def __post_init__(self):
        if not self.base.spec.is_linear or not self.base.spec.is_abelian:
            raise WitnessError(f"base {self.base.spec} must be linear and Abelian")
        gr.check_shape(self.fiber, self.offset)

    @property
    def spec(self) -> GroupSpec:
        return gr.lex(self.base.spec, self.fiber)

    @property
    def algebra(self) -> PmvAlgebra:
        return PmvAlgebra(UnitalGroup(self.spec, (self.base.unit, self.offset)))

    @property
    def strong_form(self) -> bool:
        return gr.g_cmp(self.fiber, self.offset, gr.zero(self.fiber)) == 0

    @classmethod
    def from_algebra(cls, alg: PmvAlgebra) -> "LexAlgebra":
        spec = alg.spec
        if spec.kind != "lex":
            raise WitnessError(f"{alg} is not a lexicographic interval algebra")
        return cls(UnitalGroup(spec.left, alg.unit[0]), spec.right, alg.unit[1])

    def __str__(self) -> str:
        return str(self.algebra)


# ---------------------------------------------------------------------------
# Witnesses


@dataclass(frozen=True)
class PerfectWitness:
    """An algebra with a slice indexer (x |-> t) and a cyclic family (t |-> c_t)."""

    lexalg: LexAlgebra
    indexer: Callable[[PmvElem], object]
    family: Callable[[object], PmvElem]
    kind: str  # "strong" | "weak"

    def __post_init__(self):
        if self.kind not in ("strong", "weak"):
            raise WitnessError(f"kind must be strong or weak, got {self.kind!r}")

    @property
    def algebra(self) -> PmvAlgebra:
        return self.lexalg.algebra


def canonical_witness(lexalg: LexAlgebra, kind: str) -> PerfectWitness:
    """Head-coordinate indexer with family c_t = (t, 0).

    The strong kind forces offset 0: otherwise c_u = (u, 0) differs from
    the top element (u, b).
    """
    if kind == "strong" and not lexalg.strong_form:
        raise WitnessError(
            f"strong witness on {lexalg} impossible: c_u = (u,0) != (u,b) = 1"
        )
    if gr.g_cmp(lexalg.fiber, lexalg.offset, gr.zero(lexalg.fiber)) < 0:
        raise WitnessError("canonical family needs offset >= 0 so that (u,0) <= (u,b)")
    alg = lexalg.algebra
    fiber_zero = gr.zero(lexalg.fiber)

    def indexer(x: PmvElem):
        return x.value[0]

    def family(t):
        return alg.elem((t, fiber_zero))

    return PerfectWitness(lexalg, indexer, family, kind)


def classify(w: PerfectWitness, x: PmvElem):
    """The slice index t with x in M_t."""
    if x.algebra != w.algebra:
        raise WitnessError(f"{x} does not belong to {w.algebra}")
    return w.indexer(x)


# ---------------------------------------------------------------------------
# Decomposition and cyclic checks


def check_decomposition(
    w: PerfectWitness, sample_budget: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """Definition clauses (a)-(c) plus the partial-sum and lattice slice laws."""
    rep = Report("check-decomposition", "pass", seed=seed, samples=sample_budget)
    rng = random.Random(seed)
    alg = w.algebra
    hs = w.lexalg.base.spec
    uh = w.lexalg.base.unit
    zero_h = gr.zero(hs)
    for _ in range(sample_budget):
        x = sample_elem(alg, rng, bound)
        y = sample_elem(alg, rng, bound)
        v = w.indexer(x)
        t = w.indexer(y)
        if gr.g_cmp(hs, v, zero_h) < 0 or gr.g_cmp(hs, v, uh) > 0:
            return rep.fail("index-range", [str(x)])
        # (a) strict monotonicity across slices
        c = gr.g_cmp(hs, v, t)
        if c < 0 and not x.lt(y):
            return rep.fail("a-monotone", [str(x), str(y)])
        if c > 0 and not y.lt(x):
            return rep.fail("a-monotone", [str(y), str(x)])
        # (b) negation slice law M_t^- = M_{u-t} = M_t^~
        cot = gr.g_sub(hs, uh, v)
        if w.indexer(x.minus) != cot or w.indexer(x.tilde) != cot:
            return rep.fail("b-negation", [str(x)])
        # (c) oplus slice law with v (+) t = (v+t) /\ u
        cap = gr.g_meet(hs, gr.g_add(hs, v, t), uh)
        if w.indexer(x.oplus(y)) != cap:
            return rep.fail("c-oplus", [str(x), str(y)])
        # partial-sum slice laws
        vt = gr.g_add(hs, v, t)
        s = x.partial_add(y)
        if gr.g_cmp(hs, vt, uh) < 0:
            if s is None or w.indexer(s) != vt:
                return rep.fail("i-partial-sum", [str(x), str(y)])
        elif gr.g_cmp(hs, vt, uh) > 0:
            if s is not None:
                return rep.fail("iii-undefined", [str(x), str(y)])
        elif s is not None and w.indexer(s) != uh:
            return rep.fail("i-partial-sum-top", [str(x), str(y)])
        # lattice slice laws
        if w.indexer(x.join(y)) != gr.g_join(hs, v, t):
            return rep.fail("iv-join", [str(x), str(y)])
        if w.indexer(x.meet(y)) != gr.g_meet(hs, v, t):
            return rep.fail("iv-meet", [str(x), str(y)])
    rep.details["algebra"] = str(alg)
    return rep


def _base_algebra(lexalg: LexAlgebra) -> PmvAlgebra:
    return PmvAlgebra(lexalg.base)


def check_cyclic(
    w: PerfectWitness, sample_budget: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """Cyclic family clauses: slice membership and centrality, additivity
    c_v + c_t = c_{v+t}, the origin law c_0 = 0, and c_u = 1 for strong."""
    rep = Report("check-cyclic", "pass", seed=seed, samples=sample_budget)
    rng = random.Random(seed)
    alg = w.algebra
    hs = w.lexalg.base.spec
    uh = w.lexalg.base.unit
    base_alg = _base_algebra(w.lexalg)
    if w.family(gr.zero(hs)) != alg.zero:
        return rep.fail("origin", ["c_0 != 0"])
    if w.kind == "strong" and w.family(uh) != alg.one:
        return rep.fail("iii-top", [str(w.family(uh))])
    for _ in range(sample_budget):
        v = sample_elem(base_alg, rng, bound).value
        t = sample_elem(base_alg, rng, bound).value
        cv, ct = w.family(v), w.family(t)
        if w.indexer(ct) != t:
            return rep.fail("i-membership", [gr.fmt_elem(hs, t), str(ct)])
        if not gr.center_contains(alg.spec, ct.value):
            return rep.fail("i-centrality", [str(ct)])
        vt = gr.g_add(hs, v, t)
        if gr.g_cmp(hs, vt, uh) <= 0:
            if gr.g_add(alg.spec, cv.value, ct.value) != w.family(vt).value:
                return rep.fail("ii-additivity", [str(cv), str(ct)])
    rep.details["algebra"] = str(alg)
    rep.details["kind"] = w.kind
    return rep


def _sample_zero_slice(alg: PmvAlgebra, rng: random.Random, bound: int) -> PmvElem:
    """A head-zero interval element (0, g) with g >= 0, clamped."""
    spec = alg.spec
    tail = gr.sample_group_elem(spec.right, rng, bound)
    tail = gr.g_join(spec.right, tail, gr.zero(spec.right))
    v = gr.g_meet(spec, (gr.zero(spec.left), tail), alg.unit)
    return alg.elem(gr.g_join(spec, v, gr.zero(spec)))


def theorem_suite(
    w: PerfectWitness, sample_budget: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """The full slice-structure theorem as sampled checks, clauses i-ix:
    partial-sum slice laws (i-iii), lattice slice law (iv), a state
    vanishing on M_0 (v), M_0 a normal ideal with M_0 + M_0 = M_0 inside
    the infinitesimals (vi), the quotient onto the base (vii), uniqueness
    of the indexing (viii), and primality of M_0 (ix)."""
    import math

    from .algebra import ord_of

    rep = Report("theorem-suite", "pass", seed=seed, samples=sample_budget)
    dec = check_decomposition(w, sample_budget, seed, bound)
    if not dec.ok:
        rep.verdict = "fail"
        rep.counterexamples = dec.counterexamples
        return rep
    la = w.lexalg
    alg = w.algebra
    hs = la.base.spec
    uh = la.base.unit
    zero_h = gr.zero(hs)
    in_m0 = lambda e: w.indexer(e) == zero_h
    rng = random.Random(seed)
    base_alg = _base_algebra(la)
    for _ in range(sample_budget):
        x = sample_elem(alg, rng, bound)
        y = sample_elem(alg, rng, bound)
        i = _sample_zero_slice(alg, rng, bound)
        j = _sample_zero_slice(alg, rng, bound)
        # (ii) surjectivity of M_v + M_t onto M_{v+t}: peel c_t off x
        t = sample_elem(base_alg, rng, bound).value
        v = gr.g_sub(hs, w.indexer(x), t)
        # interior slices contain every tail, so x - c_t stays in the
        # interval exactly when 0 < v; v = 0 is the trivial split 0 + x
        if gr.g_cmp(hs, v, zero_h) > 0 and gr.g_cmp(hs, w.indexer(x), uh) < 0:
            ct = w.family(t)
            a = alg.elem(gr.g_sub(alg.spec, x.value, ct.value))
            if w.indexer(a) != v or a.partial_add(ct) != x:
                return rep.fail("ii-slice-sum", [str(x), gr.fmt_elem(hs, t)])
        # (vi) M_0 + M_0 = M_0, normality, infinitesimality
        ij = i.partial_add(j)
        if gr.g_cmp(hs, uh, zero_h) > 0 and (ij is None or not in_m0(ij)):
            return rep.fail("vi-sum-closed", [str(i), str(j)])
        xi = x.oplus(i)
        k = alg.elem(gr.g_sub(alg.spec, xi.value, x.value))
        k2 = alg.elem(gr.g_add(alg.spec, gr.g_neg(alg.spec, x.value), i.oplus(x).value))
        if not (in_m0(k) and k.oplus(x) == xi and in_m0(k2)):
            return rep.fail("vi-normal", [str(x), str(i)])
        if ord_of(i) is not math.inf and i != alg.zero:
            return rep.fail("vi-infinitesimal", [str(i)])
        # (ix) primality of M_0
        if in_m0(x.meet(y)) and not (in_m0(x) or in_m0(y)):
            return rep.fail("ix-prime", [str(x), str(y)])
        # (viii) the indexing is forced: it agrees with the head coordinate
        if w.indexer(x) != x.value[0]:
            return rep.fail("viii-unique", [str(x)])
    # (v) and (vii) need the offset-0 form; the state is s0 o head
    if la.strong_form:
        try:
            s = state_on_lex(la)
            ideal = SymbolicIdeal(alg, in_m0)
            srep = state_report(s, sample_budget, seed, bound, vanishes_on=ideal)
            if not srep.ok:
                rep.verdict = "fail"
                rep.counterexamples += srep.counterexamples
                return rep
            rep.details["v-state"] = "pass"
        except UnsupportedBaseError:
            rep.details["v-state"] = "skipped: no closed-form base state"
        qrep = verify_hom(quotient_to_base(la), sample_budget, seed, bound,
                          check_injective=False)
        if not qrep.ok:
            rep.verdict = "fail"
            rep.counterexamples += qrep.counterexamples
            return rep
        rep.details["vii-quotient"] = "pass"
    else:
        rep.details["v-state"] = "skipped: nonzero offset"
        rep.details["vii-quotient"] = "skipped: nonzero offset"
    rep.details["algebra"] = str(alg)
    return rep


# ---------------------------------------------------------------------------
# Mappings and the representation map


@dataclass(frozen=True)
class Mapping:
    source: PmvAlgebra
    target: PmvAlgebra
    fn: Callable[[PmvElem], PmvElem]
    preimage: Optional[Callable[[PmvElem], PmvElem]] = None
    description: str = ""

    def __call__(self, x: PmvElem) -> PmvElem:
        return self.fn(x)


def build_phi(w: PerfectWitness) -> Mapping:
    """phi(x) = (t, x - c_t) into Gamma(H lex G, (u, b)) with b = 1 - c_u.

    b = 0 exactly in the strong case; on canonical witnesses phi is the
    identity.  Surjectivity witnesses use the preimage recipe x = g + c_t.
    """
    la = w.lexalg
    alg = la.algebra
    spec = alg.spec
    uh = la.base.unit
    c_top = w.family(uh)
    b_pair = gr.g_sub(spec, alg.unit, c_top.value)
    target = LexAlgebra(la.base, la.fiber, b_pair[1]).algebra

    def fn(x: PmvElem) -> PmvElem:
        t = w.indexer(x)
        diff = gr.g_sub(spec, x.value, w.family(t).value)
        return target.elem((t, diff[1]))

    def preimage(y: PmvElem) -> PmvElem:
        t, g = y.value
        ct_tail = w.family(t).value[1]
        return alg.elem((t, gr.g_add(la.fiber, g, ct_tail)))

    return Mapping(alg, target, fn, preimage, description="phi(x) = (t, x - c_t)")


def verify_hom(
    m: Mapping,
    sample_budget: int = 1000,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    check_injective: bool = True,
) -> Report:
    """Preservation of 0, 1, both negations, oplus, odot, join and meet on
    samples; sampled injectivity; surjectivity through the preimage recipe."""
    rep = Report("verify-hom", "pass", seed=seed, samples=sample_budget)
    rng = random.Random(seed)
    if m.fn(m.source.zero) != m.target.zero:
        return rep.fail("zero", ["f(0) != 0"])
    if m.fn(m.source.one) != m.target.one:
        return rep.fail("unit", [str(m.fn(m.source.one))])
    for _ in range(sample_budget):
        x = sample_elem(m.source, rng, bound)
        y = sample_elem(m.source, rng, bound)
        fx, fy = m.fn(x), m.fn(y)
        if m.fn(x.oplus(y)) != fx.oplus(fy):
            return rep.fail("oplus", [str(x), str(y)])
        if m.fn(x.odot(y)) != fx.odot(fy):
            return rep.fail("odot", [str(x), str(y)])
        if m.fn(x.minus) != fx.minus or m.fn(x.tilde) != fx.tilde:
            return rep.fail("negations", [str(x)])
        if m.fn(x.join(y)) != fx.join(fy) or m.fn(x.meet(y)) != fx.meet(fy):
            return rep.fail("lattice", [str(x), str(y)])
        if check_injective and x != y and fx == fy:
            return rep.fail("injectivity", [str(x), str(y)])
        if m.preimage is not None:
            z = sample_elem(m.target, rng, bound)
            if m.fn(m.preimage(z)) != z:
                return rep.fail("surjectivity", [str(z)])
    rep.details["surjectivity"] = "checked" if m.preimage is not None else "not-checked"
    rep.details["injectivity"] = "checked" if check_injective else "not-checked"
    rep.details["map"] = m.description
    return rep


# ---------------------------------------------------------------------------
# Canonical ideal, quotient, states


@dataclass(frozen=True)
class SymbolicIdeal:
    """Membership predicate; canonically the head-zero positive cone."""

    algebra: PmvAlgebra
    contains: Callable[[PmvElem], bool]
    description: str = ""


def canonical_lex_ideal(
    lexalg: LexAlgebra, sample_budget: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> tuple[SymbolicIdeal, Report]:
    """I = {(0, g): g >= 0} with a sampled flavor report: ideal closure,
    normality, primality, strictness and quotient commutativity."""
    if not lexalg.strong_form:
        raise WitnessError("canonical ideal analysis is stated for offset 0")
    alg = lexalg.algebra
    spec = alg.spec
    fs = lexalg.fiber
    zero_h = gr.zero(lexalg.base.spec)
    zero_f = gr.zero(fs)

    def contains(x: PmvElem) -> bool:
        h, g = x.value
        return gr.g_cmp(lexalg.base.spec, h, zero_h) == 0 and gr.g_cmp(fs, g, zero_f) >= 0

    ideal = SymbolicIdeal(alg, contains, description="{(0,g): g >= 0}")
    rep = Report("canonical-lex-ideal", "pass", seed=seed, samples=sample_budget)
    rng = random.Random(seed)
    head = lambda e: e.value[0]
    for _ in range(sample_budget):
        x = sample_elem(alg, rng, bound)
        y = sample_elem(alg, rng, bound)
        if contains(y) and x.le(y) and not contains(x):
            rep.fail("downward-closed", [str(x), str(y)])
            break
        if contains(x) and contains(y) and not contains(x.oplus(y)):
            rep.fail("oplus-closed", [str(x), str(y)])
            break
        if contains(y):
            # normality: x (+) i = j (+) x and i (+) x = x (+) j' with j, j' in I
            xi = x.oplus(y)
            j = alg.elem(gr.g_sub(spec, xi.value, x.value))
            if not contains(j) or j.oplus(x) != xi:
                rep.fail("normality", [str(x), str(y)])
                break
            ix = y.oplus(x)
            j2 = alg.elem(gr.g_add(spec, gr.g_neg(spec, x.value), ix.value))
            if not contains(j2) or x.oplus(j2) != ix:
                rep.fail("normality", [str(y), str(x)])
                break
        if contains(x.meet(y)) and not (contains(x) or contains(y)):
            rep.fail("prime", [str(x), str(y)])
            break
        # strictness: quotient order is the head order
        if gr.g_cmp(lexalg.base.spec, head(x), head(y)) < 0 and not x.lt(y):
            rep.fail("strict", [str(x), str(y)])
            break
        if head(x.oplus(y)) != head(y.oplus(x)):
            rep.fail("commutative-quotient", [str(x), str(y)])
            break
    rep.details["ideal"] = ideal.description
    return ideal, rep


def quotient_to_base(lexalg: LexAlgebra) -> Mapping:
    """The head projection onto Gamma(H, u); its kernel is the canonical ideal."""
    if not lexalg.strong_form:
        raise WitnessError("quotient-to-base is stated for offset 0")
    alg = lexalg.algebra
    base_alg = _base_algebra(lexalg)
    fiber_zero = gr.zero(lexalg.fiber)

    def fn(x: PmvElem) -> PmvElem:
        return base_alg.elem(x.value[0])

    def preimage(t: PmvElem) -> PmvElem:
        return alg.elem((t.value, fiber_zero))

    return Mapping(alg, base_alg, fn, preimage, description="head projection")


@dataclass(frozen=True)
class StateFn:
    algebra: PmvAlgebra
    fn: Callable[[PmvElem], Fraction]

    def __call__(self, x: PmvElem) -> Fraction:
        return self.fn(x)


def _base_state(spec: GroupSpec, unit) -> Callable[[object], Fraction]:
    """The unique state of the linear base Gamma(H, u), per spec variant."""
    if spec.kind == "Z":
        return lambda t: Fraction(t, unit)
    if spec.kind == "Q":
        return lambda t: Fraction(t) / Fraction(unit)
    if spec.kind == "lex" and gr.g_cmp(spec.left, unit[0], gr.zero(spec.left)) > 0:
        inner = _base_state(spec.left, unit[0])
        return lambda t: inner(t[0])
    raise UnsupportedBaseError(f"no closed-form state for base {spec}")


def unique_state(alg: PmvAlgebra) -> StateFn:
    """The unique state of a linear catalog algebra."""
    s0 = _base_state(alg.spec, alg.unit)
    return StateFn(alg, lambda x: s0(x.value))


def state_on_lex(lexalg: LexAlgebra) -> StateFn:
    """s = s0 o head, vanishing on the canonical ideal."""
    if not lexalg.strong_form:
        raise WitnessError("state_on_lex is stated for offset 0")
    s0 = _base_state(lexalg.base.spec, lexalg.base.unit)
    alg = lexalg.algebra
    return StateFn(alg, lambda x: s0(x.value[0]))


def state_report(
    s: StateFn,
    sample_budget: int = 1000,
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    vanishes_on: Optional[SymbolicIdeal] = None,
) -> Report:
    """s(1) = 1 and additivity on sampled defined partial sums; optionally
    vanishing on sampled members of an ideal."""
    rep = Report("state", "pass", seed=seed, samples=sample_budget)
    rng = random.Random(seed)
    alg = s.algebra
    if s(alg.one) != 1:
        return rep.fail("normalization", [str(alg.one)])
    for _ in range(sample_budget):
        a = sample_elem(alg, rng, bound)
        b = sample_elem(alg, rng, bound)
        ab = a.partial_add(b)
        if ab is not None and s(ab) != s(a) + s(b):
            return rep.fail("additivity", [str(a), str(b)])
        if vanishes_on is not None and vanishes_on.contains(a) and s(a) != 0:
            return rep.fail("vanishes-on-ideal", [str(a)])
    return rep


def base_maximality(w: PerfectWitness) -> bool:
    """Whether M_0 is maximal: exactly when the base is (isomorphic to) a
    unital subgroup of the reals.  Z and Q qualify; a lex-pair base does
    not (it is not Archimedean); the trivial base gives the one-element
    quotient, counted as maximal."""
    kind = w.lexalg.base.spec.kind
    if kind in ("Z", "Q", "O"):
        return True
    return False


# ---------------------------------------------------------------------------
# Closed-form midpoint certificate


def midpoint_certificate(lexalg: LexAlgebra) -> Report:
    """Exact solver for c = c^- over the middle slice of Gamma(Z lex Z, (u, b)).

    c = (u/2, k) has c^- = (u/2, b - k), so a fixed point needs 2k = b: it
    exists iff b is even.  An unsolvable certificate shows M_0 admits no
    section through a self-complementary element."""
    rep = Report("midpoint-certificate", "pass")
    if lexalg.base.spec != gr.Z or lexalg.fiber != gr.Z:
        rep.verdict = "error"
        rep.details["reason"] = "certificate is stated for base Z and fiber Z"
        return rep
    u = lexalg.base.unit
    b = lexalg.offset
    if u % 2 != 0:
        rep.details["solvable"] = False
        rep.details["reason"] = "no middle slice: unit head is odd"
        return rep
    if b % 2 == 0:
        rep.details["solvable"] = True
        rep.details["witness"] = gr.fmt_elem(lexalg.spec, (u // 2, b // 2))
    else:
        rep.details["solvable"] = False
        rep.details["reason"] = f"2k = {b} has no integer solution"
    return rep


# ---------------------------------------------------------------------------
# Functor on morphisms


def lift_morphism(h: GroupHom, base: UnitalGroup) -> Mapping:
    """(t, g) |-> (t, h(g)) between the strong lex algebras over the base."""
    source = LexAlgebra(base, h.source, gr.zero(h.source)).algebra
    target = LexAlgebra(base, h.target, gr.zero(h.target)).algebra

    def fn(x: PmvElem) -> PmvElem:
        t, g = x.value
        return target.elem((t, gr.hom_apply(h, g)))

    return Mapping(source, target, fn, description=f"lift({h})")


class ExtractionError(ValueError):
    """A mapping does not arise from a catalog fiber homomorphism."""


def extract_morphism(f: Mapping, samples: int = 200, seed: int = 0) -> GroupHom:
    """Recover the fiber homomorphism from a map fixing the base slice-wise.

    The action on head-zero elements determines h on the positive cone;
    h extends to all of G by h(g) = h(g+) - h(g-).  The extension is then
    matched against the closed hom catalog and validated on samples."""
    src_la = LexAlgebra.from_algebra(f.source)
    tgt_la = LexAlgebra.from_algebra(f.target)
    if src_la.base != tgt_la.base or not (src_la.strong_form and tgt_la.strong_form):
        raise ExtractionError("extraction needs identical bases and offset 0")
    fs, ft = src_la.fiber, tgt_la.fiber
    zero_h = gr.zero(src_la.base.spec)

    def probe_pos(g):
        y = f.fn(f.source.elem((zero_h, g)))
        h0, g2 = y.value
        if gr.g_cmp(tgt_la.base.spec, h0, zero_h) != 0:
            raise ExtractionError(f"map does not fix the base slice-wise at (0,{g})")
        return g2

    def hval(g):
        gp = gr.g_join(fs, g, gr.zero(fs))
        gm = gr.g_neg(fs, gr.g_meet(fs, g, gr.zero(fs)))
        return gr.g_sub(ft, probe_pos(gp), probe_pos(gm))

    hom = _infer_hom(fs, ft, hval, samples, seed)
    if hom is None:
        raise ExtractionError(f"no catalog homomorphism matches {f.description}")
    return hom


def _infer_hom(src: GroupSpec, tgt: GroupSpec, fn, samples: int, seed: int):
    candidates = []

    def try_add(make):
        try:
            candidates.append(make())
        except (gr.HomError, ValueError, TypeError):
            pass

    if src == tgt:
        try_add(lambda: gr.identity_hom(src))
    try_add(lambda: gr.zero_hom(src, tgt))
    if src == tgt and src.kind in ("Z", "Q"):
        k = fn(1 if src.kind == "Z" else Fraction(1))
        try_add(lambda: gr.scale_hom(src, k))
    if tgt.kind == "lex" and tgt.right == src:
        try_add(lambda: gr.inject_right_hom(tgt.left, src))
    if src.kind == "lex" and tgt.kind == "lex":
        h1 = _infer_hom(src.left, tgt.left, lambda a: fn((a, gr.zero(src.right)))[0], samples, seed)
        h2 = _infer_hom(src.right, tgt.right, lambda b: fn((gr.zero(src.left), b))[1], samples, seed)
        if h1 is not None and h2 is not None:
            try_add(lambda: gr.pairwise_hom(h1, h2))
    rng = random.Random(seed)
    probes = [gr.sample_group_elem(src, rng) for _ in range(samples)]
    for cand in candidates:
        if all(fn(p) == gr.hom_apply(cand, p) for p in probes):
            return cand
    return None


# ---------------------------------------------------------------------------
# Built-in mutation suite

_ZZ = lambda u, b: LexAlgebra(UnitalGroup(gr.Z, u), gr.Z, b)


def mutation_suite(seed: int = 0, samples: int = 400) -> list[tuple[str, Report]]:
    """Six deliberately broken witnesses/maps; every report must fail."""
    out = []

    # 1. indexer shifted by one (clamped): breaks the negation slice law
    w = canonical_witness(_ZZ(1, 0), "strong")
    bad1 = PerfectWitness(w.lexalg, lambda x: min(x.value[0] + 1, 1), w.family, "strong")
    out.append(("indexer-shift", check_decomposition(bad1, samples, seed)))

    # 2. constant indexer: breaks monotonicity / the oplus slice law
    bad2 = PerfectWitness(w.lexalg, lambda x: 0, w.family, "strong")
    out.append(("indexer-constant", check_decomposition(bad2, samples, seed)))

    # 3. family with index-dependent noise: breaks additivity (ii)
    la21 = _ZZ(2, 1)
    alg21 = la21.algebra
    noisy = lambda t: alg21.elem((t, min(t, 1)))
    bad3 = PerfectWitness(la21, lambda x: x.value[0], noisy, "weak")
    out.append(("family-noise", check_cyclic(bad3, samples, seed)))

    # 4. family with nonzero origin: breaks c_0 = 0
    shifted = lambda t: alg21.elem((t, 1 if t == 0 else 0))
    bad4 = PerfectWitness(la21, lambda x: x.value[0], shifted, "weak")
    out.append(("family-nonzero-origin", check_cyclic(bad4, samples, seed)))

    # 5. theta without the offset: fails unit preservation
    src = _ZZ(2, 0).algebra
    tgt = _ZZ(2, 2).algebra

    def drop_offset(x):
        k, n = x.value
        v = gr.g_meet(tgt.spec, (k, n), tgt.unit)
        v = gr.g_join(tgt.spec, v, gr.zero(tgt.spec))
        return tgt.elem(v)

    out.append(
        ("theta-drop-offset", verify_hom(Mapping(src, tgt, drop_offset, description="theta without offset"), samples, seed))
    )

    # 6. strong rules applied to the weak canonical family: fails c_u = 1
    weak = canonical_witness(la21, "weak")
    bad6 = PerfectWitness(la21, weak.indexer, weak.family, "strong")
    out.append(("strong-kind-on-weak", check_cyclic(bad6, samples, seed)))

    return out
