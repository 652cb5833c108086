"""Sampled axiom and property suites for interval algebras.

Every universally quantified law is checked on seeded samples; the report
carries the first failing witness.  On the catalog algebras the interval
construction makes all of these pass exactly -- the suite exists so that
the CLI, mutation tests and the acceptance gate can certify it.
"""

from __future__ import annotations

import random
import time

from .algebra import PmvAlgebra, PmvElem, iterate, oplus_via_pea
from .reports import Report
from .sampling import DEFAULT_BOUND, sample_elem


def _witness(*elems: PmvElem):
    return [str(e) for e in elems]


def axiom_report(
    alg: PmvAlgebra, samples: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """A1-A8 on seeded triples, plus the A6/A7 lattice agreement and the
    double-negation identities."""
    t0 = time.perf_counter()
    rep = Report("check-axioms", "pass", seed=seed, samples=samples)
    rng = random.Random(seed)
    one, zero_e = alg.one, alg.zero
    for _ in range(samples):
        x = sample_elem(alg, rng, bound)
        y = sample_elem(alg, rng, bound)
        z = sample_elem(alg, rng, bound)
        if x.oplus(y.oplus(z)) != x.oplus(y).oplus(z):
            return rep.fail("A1", _witness(x, y, z))
        if x.oplus(zero_e) != x or zero_e.oplus(x) != x:
            return rep.fail("A2", _witness(x))
        if x.oplus(one) != one or one.oplus(x) != one:
            return rep.fail("A3", _witness(x))
        if one.tilde != zero_e or one.minus != zero_e:
            return rep.fail("A4", _witness(one))
        if x.minus.oplus(y.minus).tilde != x.tilde.oplus(y.tilde).minus:
            return rep.fail("A5", _witness(x, y))
        a6 = [
            x.oplus(x.tilde.odot(y)),
            y.oplus(y.tilde.odot(x)),
            x.odot(y.minus).oplus(y),
            y.odot(x.minus).oplus(x),
        ]
        if any(e != a6[0] for e in a6[1:]):
            return rep.fail("A6", _witness(x, y))
        if x.odot(x.minus.oplus(y)) != x.oplus(y.tilde).odot(y):
            return rep.fail("A7", _witness(x, y))
        if x.minus.tilde != x or x.tilde.minus != x:
            return rep.fail("A8", _witness(x))
        # A6/A7 define join and meet; they must agree with the group lattice
        if a6[0] != x.join(y):
            return rep.fail("A6-join", _witness(x, y))
        if x.odot(x.minus.oplus(y)) != x.meet(y):
            return rep.fail("A7-meet", _witness(x, y))
    rep.details["algebra"] = str(alg)
    rep.details["symmetric"] = alg.is_symmetric()
    rep.elapsed = time.perf_counter() - t0
    return rep


def pea_equivalence_report(
    alg: PmvAlgebra, samples: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """oplus recovered from the partial-sum structure equals oplus."""
    rep = Report("pea-equivalence", "pass", seed=seed, samples=samples)
    rng = random.Random(seed)
    for _ in range(samples):
        x = sample_elem(alg, rng, bound)
        y = sample_elem(alg, rng, bound)
        if oplus_via_pea(x, y) != x.oplus(y):
            return rep.fail("pea-oplus", _witness(x, y))
    rep.details["algebra"] = str(alg)
    return rep


def partial_sum_report(
    alg: PmvAlgebra, samples: int = 1000, seed: int = 0, bound: int = DEFAULT_BOUND
) -> Report:
    """PE1-PE4 on sampled triples where defined, the partial-sum/group-sum
    agreement, and the truncated-sum closed form n.x = (n*x) /\\ u."""
    from . import groups as gr

    rep = Report("partial-sum", "pass", seed=seed, samples=samples)
    rng = random.Random(seed)
    spec, u = alg.spec, alg.unit
    for _ in range(samples):
        a = sample_elem(alg, rng, bound)
        b = sample_elem(alg, rng, bound)
        c = sample_elem(alg, rng, bound)
        ab = a.partial_add(b)
        bc = b.partial_add(c)
        # PE1: (a+b)+c exists iff a+(b+c) exists, and then they are equal
        lhs = ab.partial_add(c) if ab is not None else None
        rhs = a.partial_add(bc) if bc is not None else None
        both = lhs is not None and rhs is not None
        neither = lhs is None and rhs is None
        if not (both or neither) or (both and lhs != rhs):
            return rep.fail("PE1", _witness(a, b, c))
        # PE2: the two complements are the negations
        if a.partial_add(a.tilde) != alg.one or a.minus.partial_add(a) != alg.one:
            return rep.fail("PE2", _witness(a))
        # PE3: a+b = d+a = b+e with d = (a+b)-a and e = -b+(a+b)
        if ab is not None:
            d = ab.algebra.elem(gr.g_sub(spec, ab.value, a.value))
            e = ab.algebra.elem(gr.g_add(spec, gr.g_neg(spec, b.value), ab.value))
            if (
                gr.g_add(spec, d.value, a.value) != ab.value
                or gr.g_add(spec, b.value, e.value) != ab.value
            ):
                return rep.fail("PE3", _witness(a, b))
        # PE4: a + 1 defined forces a = 0
        if a != alg.zero and (a.partial_add(alg.one) is not None or alg.one.partial_add(a) is not None):
            return rep.fail("PE4", _witness(a))
        # (2.1): where defined, the partial sum is the plain group sum
        if ab is not None and ab.value != gr.g_add(spec, a.value, b.value):
            return rep.fail("partial-sum-is-group-sum", _witness(a, b))
        # closed form for truncated sums
        n = rng.randrange(21)
        if iterate(a, n, "truncated").value != gr.g_meet(
            spec, gr.g_nmul(spec, a.value, n), u
        ):
            return rep.fail("truncated-closed-form", _witness(a) + [str(n)])
    rep.details["algebra"] = str(alg)
    return rep
