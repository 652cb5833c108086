"""Interval pseudo MV-algebras over catalog unital l-groups.

Gamma(G, u) is the interval [0, u] with

    x (+) y = (x + y) /\\ u          x (.) y = (x - u + y) \\/ 0
    x^-     = u - x                 x^~     = -x + u

plus the partial sum x + y, defined exactly when the group sum stays in
the interval, where it agrees with the group sum.  Partiality is
structure, not an error: the partial operations return None for
"undefined" and callers branch on it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import groups as gr
from .groups import GroupSpec, UnitalGroup


class CrossAlgebraError(TypeError):
    """Two elements of different algebras were mixed in one operation."""


class IntervalError(ValueError):
    """A value lies outside the interval [0, u]."""


@dataclass(frozen=True)
class PmvAlgebra:
    group: UnitalGroup

    @property
    def spec(self) -> GroupSpec:
        return self.group.spec

    @property
    def unit(self):
        return self.group.unit

    def elem(self, value) -> "PmvElem":
        return PmvElem(self, value)

    @property
    def zero(self) -> "PmvElem":
        return self.elem(gr.zero(self.spec))

    @property
    def one(self) -> "PmvElem":
        return self.elem(self.unit)

    def is_symmetric(self) -> bool:
        """Both negations coincide iff the unit is central in the group."""
        return gr.center_contains(self.spec, self.unit)

    def __str__(self) -> str:
        return f"gamma({self.spec},{gr.fmt_elem(self.spec, self.unit)})"


@dataclass(frozen=True)
class PmvElem:
    algebra: PmvAlgebra
    value: object

    def __post_init__(self):
        spec = self.algebra.spec
        gr.check_shape(spec, self.value)
        if gr.g_cmp(spec, self.value, gr.zero(spec)) < 0 or gr.g_cmp(
            spec, self.value, self.algebra.unit
        ) > 0:
            raise IntervalError(
                f"{gr.fmt_elem(spec, self.value)} outside [0, u] in {self.algebra}"
            )

    def _same(self, other: "PmvElem") -> None:
        if self.algebra != other.algebra:
            raise CrossAlgebraError(f"mixing {self.algebra} and {other.algebra}")

    # -- order -------------------------------------------------------------

    def cmp(self, other: "PmvElem") -> int:
        self._same(other)
        return gr.g_cmp(self.algebra.spec, self.value, other.value)

    def le(self, other: "PmvElem") -> bool:
        return self.cmp(other) <= 0

    def lt(self, other: "PmvElem") -> bool:
        return self.cmp(other) < 0

    # -- total operations ---------------------------------------------------

    def oplus(self, other: "PmvElem") -> "PmvElem":
        self._same(other)
        spec, u = self.algebra.spec, self.algebra.unit
        s = gr.g_add(spec, self.value, other.value)
        return self.algebra.elem(gr.g_meet(spec, s, u))

    def odot(self, other: "PmvElem") -> "PmvElem":
        self._same(other)
        spec, u = self.algebra.spec, self.algebra.unit
        s = gr.g_add(spec, gr.g_sub(spec, self.value, u), other.value)
        return self.algebra.elem(gr.g_join(spec, s, gr.zero(spec)))

    @property
    def minus(self) -> "PmvElem":
        # u - x
        spec = self.algebra.spec
        return self.algebra.elem(gr.g_sub(spec, self.algebra.unit, self.value))

    @property
    def tilde(self) -> "PmvElem":
        # -x + u
        spec = self.algebra.spec
        return self.algebra.elem(
            gr.g_add(spec, gr.g_neg(spec, self.value), self.algebra.unit)
        )

    def negations(self) -> tuple["PmvElem", "PmvElem"]:
        return (self.minus, self.tilde)

    def join(self, other: "PmvElem") -> "PmvElem":
        self._same(other)
        return self.algebra.elem(gr.g_join(self.algebra.spec, self.value, other.value))

    def meet(self, other: "PmvElem") -> "PmvElem":
        self._same(other)
        return self.algebra.elem(gr.g_meet(self.algebra.spec, self.value, other.value))

    # -- partial structure --------------------------------------------------

    def partial_add(self, other: "PmvElem"):
        """The group sum x + y when it stays in [0, u], else None.

        Definedness is equivalent to y (.) x = 0.  (The mirror-image
        criterion x (.) y = 0 governs y + x instead; the two readings
        agree exactly in symmetric algebras, and only the group-sum one
        satisfies the partial-sum laws PE1-PE4 in general.)
        """
        self._same(other)
        spec, u = self.algebra.spec, self.algebra.unit
        s = gr.g_add(spec, self.value, other.value)
        if gr.g_cmp(spec, s, u) > 0:
            return None
        return self.algebra.elem(s)

    def __str__(self) -> str:
        return gr.fmt_elem(self.algebra.spec, self.value)


def residuals(x: PmvElem, y: PmvElem) -> tuple[PmvElem, PmvElem]:
    """For y <= x: (x - y, -y + x), the left and right differences.

    left + y = x and y + right = x as partial sums.
    """
    x._same(y)
    if not y.le(x):
        raise ValueError(f"residuals need y <= x, got y={y}, x={x}")
    spec = x.algebra.spec
    left = x.algebra.elem(gr.g_sub(spec, x.value, y.value))
    right = x.algebra.elem(gr.g_add(spec, gr.g_neg(spec, y.value), x.value))
    return (left, right)


def oplus_via_pea(x: PmvElem, y: PmvElem) -> PmvElem:
    """(y^- minus_left (x /\\ y^-))^~, the recovery of (+) from the partial
    sum; must agree with x.oplus(y) everywhere."""
    x._same(y)
    bminus = y.minus
    m = x.meet(bminus)
    left, _ = residuals(bminus, m)
    return left.tilde


def iterate(x: PmvElem, n: int, kind: str):
    """Iterated sums and powers.

    kind "truncated":      n.x  with (n+1).x = (n.x) (+) x   (total)
    kind "group-multiple": nx   with (n+1)x  = (nx) + x      (None once a
                           partial sum step is undefined)
    kind "power":          x^n  with x^(n+1) = x^n (.) x     (total)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    alg = x.algebra
    if kind == "truncated":
        acc = alg.zero
        for _ in range(n):
            acc = acc.oplus(x)
        return acc
    if kind == "group-multiple":
        acc = alg.zero
        for _ in range(n):
            acc = acc.partial_add(x)
            if acc is None:
                return None
        return acc
    if kind == "power":
        acc = alg.one
        for _ in range(n):
            acc = acc.odot(x)
        return acc
    raise ValueError(f"unknown iterate kind {kind!r}")


def ord_of(x: PmvElem):
    """The least n with n.x = 1, or math.inf.

    In any Gamma(G, u) the truncated sum satisfies n.x = (n*x) /\\ u, so
    ord(x) = min{n : n*x >= u}; this closed form is computed per spec
    (Z and Q directly, lex pairs head-first with one tail correction, Aff
    by a doubling search on the geometrically growing slope).
    """
    alg = x.algebra
    return _ord(alg.spec, x.value, alg.unit)


def _ord(spec: GroupSpec, v, u):
    zero_v = gr.zero(spec)
    if gr.g_cmp(spec, v, zero_v) == 0:
        return 1 if gr.g_cmp(spec, u, zero_v) == 0 else math.inf
    if spec.kind == "Z":
        return -(-u // v)
    if spec.kind == "Q":
        return math.ceil(Fraction(u) / Fraction(v))
    if spec.kind == "Aff":
        if v.slope == 1:
            return math.inf  # slope stays 1, unit slope is > 1
        hi = 1
        while gr.g_cmp(spec, gr.g_nmul(spec, v, hi), u) < 0:
            hi *= 2
        lo = max(1, hi // 2)
        while lo < hi:
            mid = (lo + hi) // 2
            if gr.g_cmp(spec, gr.g_nmul(spec, v, mid), u) >= 0:
                hi = mid
            else:
                lo = mid + 1
        return lo
    # lex pair: the head coordinate decides (head 0 -> infinity), with at
    # most one extra step when the head lands exactly on the head unit.
    h, g = v
    uh, ug = u
    if gr.g_cmp(spec.left, h, gr.zero(spec.left)) == 0:
        if gr.g_cmp(spec.left, uh, gr.zero(spec.left)) == 0:
            return _ord(spec.right, g, ug)
        return math.inf
    n0 = _ord(spec.left, h, uh)
    if n0 is math.inf:
        return math.inf
    c = gr.g_cmp(spec.left, gr.g_nmul(spec.left, h, n0), uh)
    if c > 0:
        return n0
    if gr.g_cmp(spec.right, gr.g_nmul(spec.right, g, n0), ug) >= 0:
        return n0
    return n0 + 1
