"""Exhaustive oracle on finite MV-algebras given by explicit tables.

Every finite pseudo MV-algebra is commutative, so one negation table
suffices and x (.) y = neg(neg(x) (+) neg(y)).  Algebras are stored as
plain tables, deliberately independent from the interval construction:
the tables are the ground truth the symbolic side is checked against.

Ideals are bitmasks over element indices; all enumerations are exhaustive
and returned in sorted-mask order so reports are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Optional

from .reports import Report


class TableError(ValueError):
    """A table is malformed or violates the axioms."""


class CapExceeded(RuntimeError):
    """An exhaustive suite was asked to run past its size cap."""


@dataclass(frozen=True)
class FiniteMv:
    size: int
    oplus: tuple  # size x size index table
    neg: tuple  # size index table
    zero: int
    one: int
    labels: tuple = field(default=(), compare=False)
    unchecked: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        if not self.unchecked:
            rep = check_axioms(self)
            if not rep.ok:
                raise TableError(f"tables violate the axioms: {rep.counterexamples}")

    # -- derived operations, all index-level --------------------------------

    def odot(self, x: int, y: int) -> int:
        return self.neg[self.oplus[self.neg[x]][self.neg[y]]]

    def le(self, x: int, y: int) -> bool:
        return self.oplus[self.neg[x]][y] == self.one

    def join(self, x: int, y: int) -> int:
        return self.oplus[x][self.odot(self.neg[x], y)]

    def meet(self, x: int, y: int) -> int:
        return self.neg[self.join(self.neg[x], self.neg[y])]

    def partial_add(self, x: int, y: int) -> Optional[int]:
        if self.odot(x, y) != self.zero:
            return None
        return self.oplus[x][y]

    def nmul(self, x: int, n: int) -> int:
        acc = self.zero
        for _ in range(n):
            acc = self.oplus[acc][x]
        return acc

    def ord_of(self, x: int) -> Optional[int]:
        """min{n : n.x = 1}, or None for infinite order."""
        acc = self.zero
        for n in range(1, self.size + 1):
            acc = self.oplus[acc][x]
            if acc == self.one:
                return n
        return None

    def label(self, x: int) -> str:
        return self.labels[x]

    def mask_labels(self, mask: int) -> list:
        return [self.labels[i] for i in range(self.size) if mask >> i & 1]

    def __str__(self) -> str:
        return f"finite[{self.size}]"


def check_axioms(a: FiniteMv) -> Report:
    """A1-A8 over all index pairs/triples, plus table closure."""
    rep = Report("check-axioms", "pass", samples=a.size)
    n = a.size
    if len(a.oplus) != n or any(len(r) != n for r in a.oplus) or len(a.neg) != n:
        return rep.fail("shape", [f"tables are not {n}x{n} and {n}"])
    flat = [v for r in a.oplus for v in r] + list(a.neg) + [a.zero, a.one]
    if any(not (0 <= v < n) for v in flat):
        return rep.fail("closure", ["index out of range"])
    op, ng, zr, on = a.oplus, a.neg, a.zero, a.one
    w = a.label
    for x in range(n):
        if op[x][zr] != x or op[zr][x] != x:
            return rep.fail("A2", [w(x)])
        if op[x][on] != on or op[on][x] != on:
            return rep.fail("A3", [w(x)])
        if ng[ng[x]] != x:
            return rep.fail("A8", [w(x)])
        for y in range(n):
            jxy = op[x][a.odot(ng[x], y)]
            if jxy != op[y][a.odot(ng[y], x)]:
                return rep.fail("A6", [w(x), w(y)])
            if a.odot(x, op[ng[x]][y]) != a.odot(y, op[ng[y]][x]):
                return rep.fail("A7", [w(x), w(y)])
            for z in range(n):
                if op[x][op[y][z]] != op[op[x][y]][z]:
                    return rep.fail("A1", [w(x), w(y), w(z)])
    if ng[on] != zr:
        return rep.fail("A4", [w(on)])
    return rep


# ---------------------------------------------------------------------------
# Constructions


def make_chain(n: int) -> FiniteMv:
    """Gamma(Z, n) as a table: {0..n} with k (+) j = min(k+j, n)."""
    if n < 1:
        raise TableError("chain needs n >= 1")
    m = n + 1
    op = tuple(tuple(min(i + j, n) for j in range(m)) for i in range(m))
    ng = tuple(n - i for i in range(m))
    return FiniteMv(m, op, ng, 0, n)


def make_product(a: FiniteMv, b: FiniteMv) -> FiniteMv:
    """Componentwise product; element (i, j) has index i * |B| + j."""
    m = a.size * b.size
    idx = lambda i, j: i * b.size + j
    op = tuple(
        tuple(
            idx(a.oplus[i][k], b.oplus[j][l])
            for k in range(a.size)
            for l in range(b.size)
        )
        for i in range(a.size)
        for j in range(b.size)
    )
    ng = tuple(idx(a.neg[i], b.neg[j]) for i in range(a.size) for j in range(b.size))
    labels = tuple(
        f"({a.labels[i]},{b.labels[j]})" for i in range(a.size) for j in range(b.size)
    )
    return FiniteMv(m, op, ng, idx(a.zero, b.zero), idx(a.one, b.one), labels)


def make_subalgebra(a: FiniteMv, subset) -> FiniteMv:
    """The restriction to a subset closed under (+) and neg with 0 and 1."""
    elems = sorted(set(subset))
    pos = {x: i for i, x in enumerate(elems)}
    if a.zero not in pos or a.one not in pos:
        raise TableError("subset must contain 0 and 1")
    for x in elems:
        if a.neg[x] not in pos:
            raise TableError(f"subset not closed under neg at {a.label(x)}")
        for y in elems:
            if a.oplus[x][y] not in pos:
                raise TableError(
                    f"subset not closed under oplus at ({a.label(x)}, {a.label(y)})"
                )
    m = len(elems)
    op = tuple(tuple(pos[a.oplus[x][y]] for y in elems) for x in elems)
    ng = tuple(pos[a.neg[x]] for x in elems)
    labels = tuple(a.labels[x] for x in elems)
    return FiniteMv(m, op, ng, pos[a.zero], pos[a.one], labels)


# ---------------------------------------------------------------------------
# Ideals


@dataclass(frozen=True)
class IdealInfo:
    mask: int
    normal: bool
    maximal: bool
    prime: bool
    commutative: bool
    strict: bool


def _is_ideal(a: FiniteMv, mask: int) -> bool:
    if not mask >> a.zero & 1:
        return False
    for i in range(a.size):
        if not mask >> i & 1:
            continue
        for x in range(a.size):
            if a.le(x, i) and not mask >> x & 1:
                return False
            if mask >> x & 1 and not mask >> a.oplus[i][x] & 1:
                return False
    return True


def _congruent(a: FiniteMv, mask: int, x: int, y: int) -> bool:
    d = a.oplus[a.odot(x, a.neg[y])][a.odot(y, a.neg[x])]
    return bool(mask >> d & 1)


def _quot_le(a: FiniteMv, mask: int, x: int, y: int) -> bool:
    return bool(mask >> a.odot(x, a.neg[y]) & 1)


def ideal_flags(a: FiniteMv, mask: int, all_ideals=None) -> IdealInfo:
    n = a.size
    full = (1 << n) - 1
    members = [i for i in range(n) if mask >> i & 1]
    normal = all(
        {a.oplus[x][i] for i in members} == {a.oplus[i][x] for i in members}
        for x in range(n)
    )
    if all_ideals is None:
        all_ideals = enumerate_ideal_masks(a)
    maximal = mask != full and not any(
        j != full and j != mask and (j & mask) == mask for j in all_ideals
    )
    prime = mask != full and all(
        mask >> x & 1 or mask >> y & 1
        for x in range(n)
        for y in range(n)
        if mask >> a.meet(x, y) & 1
    )
    commutative = all(
        _congruent(a, mask, a.oplus[x][y], a.oplus[y][x])
        for x in range(n)
        for y in range(n)
    )
    strict = all(
        a.le(x, y) and x != y
        for x in range(n)
        for y in range(n)
        if _quot_le(a, mask, x, y) and not _quot_le(a, mask, y, x)
    )
    return IdealInfo(mask, normal, maximal, prime, commutative, strict)


def enumerate_ideal_masks(a: FiniteMv) -> list:
    return sorted(m for m in range(1 << a.size) if _is_ideal(a, m))


def enumerate_ideals(a: FiniteMv, cap: int = 12) -> list:
    """All ideals with flags, sorted by mask."""
    if a.size > cap:
        raise CapExceeded(f"ideal enumeration capped at {cap} elements, got {a.size}")
    masks = enumerate_ideal_masks(a)
    return [ideal_flags(a, m, masks) for m in masks]


def generated_normal_ideal(a: FiniteMv, x: int) -> int:
    """{y : y <= m.x for some m}: the down-set of the stabilized truncated
    multiple, expanded to (+)-closure as a safety fixpoint."""
    acc, top = a.zero, a.zero
    for _ in range(a.size + 1):
        acc = a.oplus[acc][x]
        top = a.join(top, acc)
    mask = 0
    for y in range(a.size):
        if a.le(y, top):
            mask |= 1 << y
    while True:
        grown = mask
        for i in range(a.size):
            if mask >> i & 1:
                for j in range(a.size):
                    if mask >> j & 1:
                        grown |= 1 << a.oplus[i][j]
        for y in range(a.size):
            for i in range(a.size):
                if grown >> i & 1 and a.le(y, i):
                    grown |= 1 << y
        if grown == mask:
            return mask
        mask = grown


def radical_suite(a: FiniteMv) -> tuple:
    """(Rad, Rad_n, Infinit) as masks: the intersection of maximal ideals,
    of normal maximal ideals, and the infinite-order elements."""
    infos = enumerate_ideals(a, cap=a.size)
    full = (1 << a.size) - 1
    rad = full
    rad_n = full
    for info in infos:
        if info.maximal:
            rad &= info.mask
            if info.normal:
                rad_n &= info.mask
    infinit = 0
    for x in range(a.size):
        if is_infinitesimal(a, x):
            infinit |= 1 << x
    return rad, rad_n, infinit


def is_infinitesimal(a: FiniteMv, x: int) -> bool:
    """mx exists as a partial sum for every m; in a finite algebra the
    multiples either hit an undefined step or stabilize."""
    acc = a.zero
    for _ in range(a.size + 1):
        nxt = a.partial_add(acc, x)
        if nxt is None:
            return False
        if nxt == acc:
            return True
        acc = nxt
    return True


# ---------------------------------------------------------------------------
# Quotients, sections, complements


def quotient(a: FiniteMv, mask: int) -> tuple:
    """(A / I, projection list); I must be a normal ideal."""
    if not _is_ideal(a, mask):
        raise TableError("not an ideal")
    members = [i for i in range(a.size) if mask >> i & 1]
    if any(
        {a.oplus[x][i] for i in members} != {a.oplus[i][x] for i in members}
        for x in range(a.size)
    ):
        raise TableError("quotient needs a normal ideal")
    proj = [-1] * a.size
    reps = []
    for x in range(a.size):
        for k, r in enumerate(reps):
            if _congruent(a, mask, x, r):
                proj[x] = k
                break
        else:
            proj[x] = len(reps)
            reps.append(x)
    m = len(reps)
    op = tuple(tuple(proj[a.oplus[reps[i]][reps[j]]] for j in range(m)) for i in range(m))
    ng = tuple(proj[a.neg[reps[i]]] for i in range(m))
    labels = tuple(f"[{a.labels[r]}]" for r in reps)
    q = FiniteMv(m, op, ng, proj[a.zero], proj[a.one], labels)
    return q, tuple(proj)


def is_retractive(a: FiniteMv, mask: int) -> tuple:
    """(bool, section) where section s: A/I -> A is a homomorphism with
    proj(s(q)) = q; found by backtracking with s(0) = 0, s(1) = 1 forced
    and neg-consistency pruning."""
    q, proj = quotient(a, mask)
    fibers = [[x for x in range(a.size) if proj[x] == k] for k in range(q.size)]
    sec = [-1] * q.size
    sec[q.zero] = a.zero
    sec[q.one] = a.one

    def consistent(k: int) -> bool:
        nk = q.neg[k]
        if sec[nk] >= 0 and sec[nk] != a.neg[sec[k]]:
            return False
        for j in range(q.size):
            if sec[j] < 0:
                continue
            for u, v in ((k, j), (j, k)):
                t = q.oplus[u][v]
                if sec[t] >= 0 and a.oplus[sec[u]][sec[v]] != sec[t]:
                    return False
        # pairs of earlier slots whose sum lands on the new slot
        for u in range(q.size):
            if sec[u] < 0:
                continue
            for v in range(q.size):
                if sec[v] >= 0 and q.oplus[u][v] == k and a.oplus[sec[u]][sec[v]] != sec[k]:
                    return False
        return True

    order = [k for k in range(q.size) if sec[k] < 0]

    def search(i: int) -> bool:
        if i == len(order):
            return True
        k = order[i]
        for cand in fibers[k]:
            sec[k] = cand
            if consistent(k) and search(i + 1):
                return True
            sec[k] = -1
        return False

    if not (consistent(q.zero) and consistent(q.one)):
        return False, None
    if search(0):
        return True, tuple(sec)
    return False, None


def _closure(a: FiniteMv, seed_mask: int) -> int:
    mask = seed_mask | 1 << a.zero | 1 << a.one
    while True:
        grown = mask
        for i in range(a.size):
            if mask >> i & 1:
                grown |= 1 << a.neg[i]
                for j in range(a.size):
                    if mask >> j & 1:
                        grown |= 1 << a.oplus[i][j]
        if grown == mask:
            return mask
        mask = grown


def has_complement(a: FiniteMv, mask: int) -> tuple:
    """(bool, subalgebra mask S) with S meeting <I> only in {0, 1} and
    generating A together with <I>."""
    gen = mask
    for i in range(a.size):
        if mask >> i & 1:
            gen |= generated_normal_ideal(a, i)
    trivial = 1 << a.zero | 1 << a.one
    full = (1 << a.size) - 1
    for s in range(1 << a.size):
        if s & (1 << a.zero) == 0 or s & (1 << a.one) == 0:
            continue
        if s & gen & ~trivial:
            continue
        if _closure(a, s) != s:
            continue
        if _closure(a, s | gen) == full:
            return True, s
    return False, None


def is_lexicographic_ideal(a: FiniteMv, mask: int) -> tuple:
    """(bool, clause dict): proper, commutative, strict, retractive, prime."""
    full = (1 << a.size) - 1
    info = ideal_flags(a, mask)
    clauses = {
        "proper": mask != 1 << a.zero and mask != full,
        "commutative": info.commutative,
        "strict": info.strict,
        "prime": info.prime,
    }
    if info.normal:
        clauses["retractive"] = is_retractive(a, mask)[0]
    else:
        clauses["retractive"] = False
    return all(clauses.values()), clauses


# ---------------------------------------------------------------------------
# States


@dataclass(frozen=True)
class FiniteState:
    values: tuple  # Fractions indexed by element

    def __call__(self, x: int) -> Fraction:
        return self.values[x]


def extremal_states(a: FiniteMv) -> list:
    """One extremal state per maximal ideal: the quotient by a maximal
    normal ideal is a finite chain, valued k/n along its order."""
    out = []
    for info in enumerate_ideals(a, cap=a.size):
        if not (info.maximal and info.normal):
            continue
        q, proj = quotient(a, info.mask)
        order = sorted(range(q.size), key=lambda k: sum(q.le(j, k) for j in range(q.size)))
        rank = {k: i for i, k in enumerate(order)}
        n = q.size - 1
        out.append(FiniteState(tuple(Fraction(rank[proj[x]], n) for x in range(a.size))))
    return out


def state_is_additive(a: FiniteMv, s: FiniteState) -> bool:
    if s(a.one) != 1:
        return False
    for x in range(a.size):
        for y in range(a.size):
            t = a.partial_add(x, y)
            if t is not None and s(t) != s(x) + s(y):
                return False
    return True


def is_local(a: FiniteMv) -> bool:
    infos = enumerate_ideals(a, cap=a.size)
    maxes = [i for i in infos if i.maximal]
    return len(maxes) == 1 and maxes[0].normal


# ---------------------------------------------------------------------------
# RDP2


def check_rdp2(a: FiniteMv, cap: int = 12) -> bool:
    """For every a1+a2 = b1+b2 (partial sums) find a decomposition matrix
    c11, c12, c21, c22 with c12 /\\ c21 = 0."""
    if a.size > cap:
        raise CapExceeded(f"rdp2 capped at {cap} elements, got {a.size}")
    n = a.size
    psum = [[a.partial_add(x, y) for y in range(n)] for x in range(n)]
    # sub[x][t]: all y with x + y = t
    sub = [[[] for _ in range(n)] for _ in range(n)]
    for x in range(n):
        for y in range(n):
            t = psum[x][y]
            if t is not None:
                sub[x][t].append(y)
    by_sum = {}
    for x in range(n):
        for y in range(n):
            t = psum[x][y]
            if t is not None:
                by_sum.setdefault(t, []).append((x, y))
    for pairs in by_sum.values():
        for a1, a2 in pairs:
            for b1, b2 in pairs:
                if not _rdp2_cell(a, sub, a1, a2, b1, b2):
                    return False
    return True


def _rdp2_cell(a: FiniteMv, sub, a1, a2, b1, b2) -> bool:
    for c11 in range(a.size):
        for c12 in sub[c11][a1]:
            for c21 in sub[c11][b1]:
                if a.meet(c12, c21) != a.zero:
                    continue
                if set(sub[c21][a2]) & set(sub[c12][b2]):
                    return True
    return False


# ---------------------------------------------------------------------------
# Isomorphism


def brute_isomorphic(a: FiniteMv, b: FiniteMv) -> tuple:
    """(bool, bijection) by backtracking over structure-preserving maps,
    pruned by matching element orders."""
    if a.size != b.size:
        return False, None
    orda = [a.ord_of(x) for x in range(a.size)]
    ordb = [b.ord_of(x) for x in range(b.size)]
    if sorted(orda, key=str) != sorted(ordb, key=str):
        return False, None
    f = [-1] * a.size
    used = [False] * b.size
    f[a.zero], used[b.zero] = b.zero, True
    if a.one != a.zero:
        f[a.one], used[b.one] = b.one, True

    def consistent(x: int) -> bool:
        if f[a.neg[x]] >= 0 and f[a.neg[x]] != b.neg[f[x]]:
            return False
        for y in range(a.size):
            if f[y] < 0:
                continue
            for u, v in ((x, y), (y, x)):
                t = a.oplus[u][v]
                if f[t] >= 0 and b.oplus[f[u]][f[v]] != f[t]:
                    return False
        return True

    order = [x for x in range(a.size) if f[x] < 0]

    def search(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in range(b.size):
            if used[y] or orda[x] != ordb[y]:
                continue
            f[x], used[y] = y, True
            if consistent(x) and search(i + 1):
                return True
            f[x], used[y] = -1, False
        return False

    if not (consistent(a.zero) and consistent(a.one)) or not search(0):
        return False, None
    return True, tuple(f)


# ---------------------------------------------------------------------------
# Plain-text table format


def format_table(a: FiniteMv) -> str:
    """size line, one (+) row per line, the neg row, then "zero one"."""
    lines = [str(a.size)]
    lines += [" ".join(map(str, row)) for row in a.oplus]
    lines.append(" ".join(map(str, a.neg)))
    lines.append(f"{a.zero} {a.one}")
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> FiniteMv:
    toks = text.split()
    if not toks:
        raise TableError("empty table")
    try:
        vals = [int(t) for t in toks]
    except ValueError as exc:
        raise TableError(f"non-integer token in table: {exc}") from None
    m = vals[0]
    need = 1 + m * m + m + 2
    if m < 1 or len(vals) != need:
        raise TableError(f"expected {need} integers for size {m}, got {len(vals)}")
    body = vals[1:]
    op = tuple(tuple(body[i * m : (i + 1) * m]) for i in range(m))
    ng = tuple(body[m * m : m * m + m])
    zero, one = body[m * m + m], body[m * m + m + 1]
    return FiniteMv(m, op, ng, zero, one)
