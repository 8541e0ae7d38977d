"""Left Gröbner bases over G-algebras.

Ideals are treated as submodules of rank one, so a single Buchberger engine
serves ideals, submodules of free modules, syzygies and elimination.  Terms of
module elements are keyed by ``(component, exponent)``.

Right-sided computations (right syzygies, right Ore witnesses) go through the
opposite algebra instead of a separate right-division engine.
"""

from __future__ import annotations

import heapq
from math import gcd, lcm
from dataclasses import dataclass, field

from .errors import AmbientMismatch, NotDivisible, NotEliminable
from .galgebra import Element, _add_into
from sympy.polys.domains import QQ

from .orders import ModuleOrder, MonomialOrder


class Vector:
    """An element of the free left module ``A^rank``."""

    __slots__ = ("algebra", "rank", "terms")

    def __init__(self, algebra, rank, terms):
        self.algebra = algebra
        self.rank = rank
        self.terms = terms

    @classmethod
    def from_components(cls, comps):
        comps = list(comps)
        A = comps[0].algebra
        terms = {}
        for k, f in enumerate(comps):
            if f.algebra is not A:
                raise AmbientMismatch("vector components in different algebras")
            for e, c in f.terms.items():
                terms[(k, e)] = c
        return cls(A, len(comps), terms)

    def component(self, k):
        return Element(self.algebra, {e: c for (j, e), c in self.terms.items() if j == k})

    def components(self):
        return [self.component(k) for k in range(self.rank)]

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms, self.algebra.field.one)
        return Vector(self.algebra, self.rank, acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms, -self.algebra.field.one)
        return Vector(self.algebra, self.rank, acc)

    def __rmul__(self, a):
        """Left multiplication by a ring element or scalar."""
        if not isinstance(a, Element):
            a = self.algebra.const(a)
        return Vector.from_components([a * f for f in self.components()])

    def __eq__(self, other):
        return (
            isinstance(other, Vector)
            and other.algebra is self.algebra
            and other.rank == self.rank
            and not (self - other).terms
        )

    __hash__ = None

    def lead(self, order=None):
        mo = ModuleOrder(order or self.algebra.order)
        t = max(self.terms, key=mo.key)
        return t, self.terms[t]

    def __str__(self):
        return "(" + ", ".join(str(f) for f in self.components()) + ")"

    __repr__ = __str__


@dataclass
class GroebnerBasis:
    """A (reduced, monic) left Gröbner basis.

    ``rank`` is ``None`` for left ideals, whose generators are Elements;
    otherwise the generators are :class:`Vector` objects.
    """

    algebra: object
    gens: list
    order: MonomialOrder
    rank: int | None = None
    reduced: bool = True
    original: list = field(default_factory=list)
    pot: bool = True

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __getitem__(self, k):
        return self.gens[k]

    @property
    def module_order(self):
        return ModuleOrder(self.order, self.pot)

    def is_zero(self):
        return not self.gens

    def is_whole_ring(self):
        return self.rank is None and any(g.is_constant() for g in self.gens)

    def leads(self):
        key = self.module_order.key
        return [max(_raw(g), key=key) for g in self.gens]

    def smallest(self):
        """The generator with the smallest leading term (ties: fewest terms)."""
        if not self.gens:
            return None
        key = self.module_order.key
        return min(
            self.gens,
            key=lambda g: (key(max(_raw(g), key=key)), len(g.terms)),
        )

    def nf(self, f):
        return left_nf(f, self)

    def contains(self, f):
        return not left_nf(f, self)

    def __str__(self):
        return "{" + ", ".join(str(g) for g in self.gens) + "}"


# ---------------------------------------------------------------------------
# raw engine
# ---------------------------------------------------------------------------


def _raw(f):
    """Module-term dict of an Element or Vector."""
    if isinstance(f, Vector):
        return f.terms
    return {(0, e): c for e, c in f.terms.items()}


def _cook(A, terms, rank):
    if rank is None:
        return Element(A, {e: c for (_, e), c in terms.items()})
    return Vector(A, rank, terms)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _left_mono(A, delta, terms):
    out = {}
    if not any(delta):
        return dict(terms)
    for (comp, e), c in terms.items():
        for e2, c2 in A._mono_mono(delta, e).items():
            t = (comp, e2)
            v = out.get(t)
            v = c * c2 if v is None else v + c * c2
            if v:
                out[t] = v
            else:
                out.pop(t, None)
    return out


class _Basis:
    """Working list of monic generators with cached leading terms."""

    def __init__(self, A, mo):
        self.A = A
        self.mo = mo
        self.polys = []
        self.leads = []
        self.integral = {}

    def add(self, terms):
        lt = max(terms, key=self.mo.key)
        lc = terms[lt]
        one = self.A.field.one
        if lc != one:
            inv = one / lc
            terms = {t: c * inv for t, c in terms.items()}
        self.polys.append(terms)
        self.leads.append(lt)
        return len(self.polys) - 1


def _reduce(A, f, basis, key, active=None, quotients=None, full=True):
    """Left normal form of ``f`` (module-term dict) modulo ``basis``.

    Reduces the largest reducible term first, using the divisor with the
    smallest index.  When ``quotients`` is a dict, records
    ``{index: {delta: factor}}`` so that f = sum factor*x^delta*g + result.
    """
    p = dict(f)
    r = {}
    idx_list = range(len(basis.polys)) if active is None else active
    while p:
        t = max(p, key=key)
        c = p[t]
        comp, exp = t
        for i in idx_list:
            lcomp, lexp = basis.leads[i]
            if lcomp == comp and _divides(lexp, exp):
                delta = tuple(a - b for a, b in zip(exp, lexp))
                m = _left_mono(A, delta, basis.polys[i])
                factor = c / m[t]
                _add_into(p, m, -factor)
                if quotients is not None:
                    q = quotients.setdefault(i, {})
                    v = q.get(delta, A.field.zero) + factor
                    if v:
                        q[delta] = v
                    else:
                        q.pop(delta, None)
                break
        else:
            if not full:
                r.update(p)
                return r
            r[t] = c
            del p[t]
    return r


def _integral(terms):
    """Scale a rational term dict to a primitive integral one."""
    den = 1
    for c in terms.values():
        den = lcm(den, int(c.denominator))
    num = 0
    for c in terms.values():
        num = gcd(num, int(c.numerator * den / c.denominator))
    scale = QQ(den, num)
    return {t: c * scale for t, c in terms.items()}


def _reduce_ff(A, f, basis, key, active=None):
    """Fraction-free variant of :func:`_reduce` over QQ.

    The result equals the true normal form only up to a nonzero scalar, which
    is all Buchberger needs; it avoids the denominator growth of monic
    reduction.
    """
    cache = basis.integral
    p = _integral(f)
    r = {}
    steps = 0
    while p:
        t = max(p, key=key)
        comp, exp = t
        for i in range(len(basis.polys)) if active is None else active:
            lcomp, lexp = basis.leads[i]
            if lcomp == comp and _divides(lexp, exp):
                g = cache.get(i)
                if g is None:
                    g = cache[i] = _integral(basis.polys[i])
                delta = tuple(a - b for a, b in zip(exp, lexp))
                m = _left_mono(A, delta, g)
                if any(c.denominator != 1 for c in m.values()):
                    m = _integral(m)
                a, c = m[t], p[t]
                k = QQ(gcd(int(a.numerator), int(c.numerator)))
                a, c = a / k, c / k
                if a != 1:
                    for u in p:
                        p[u] *= a
                    for u in r:
                        r[u] *= a
                _add_into(p, m, -c)
                steps += 1
                if steps % 8 == 0 and (p or r):
                    both = _integral({**{(0, u): v for u, v in p.items()},
                                      **{(1, u): v for u, v in r.items()}})
                    p = {u: v for (w, u), v in both.items() if w == 0}
                    r = {u: v for (w, u), v in both.items() if w == 1}
                break
        else:
            r[t] = p.pop(t)
    return r


def _nf_for_basis(A, f, basis, key, active=None):
    if A.field.params:
        return _reduce(A, f, basis, key, active=active)
    return _reduce_ff(A, f, basis, key, active=active)


def _spoly(A, basis, i, j):
    (ci, ei), (_, ej) = basis.leads[i], basis.leads[j]
    gamma = tuple(max(a, b) for a, b in zip(ei, ej))
    a = _left_mono(A, tuple(g - e for g, e in zip(gamma, ei)), basis.polys[i])
    b = _left_mono(A, tuple(g - e for g, e in zip(gamma, ej)), basis.polys[j])
    t = (ci, gamma)
    out = {k: v / a[t] for k, v in a.items()}
    _add_into(out, b, -A.field.one / b[t])
    return out


def _buchberger(A, gens, mo):
    """Reduced left GB of module-term dicts under module order ``mo``."""
    key = mo.key
    basis = _Basis(A, mo)
    heap = []
    pending = set()

    def push(i, j):
        if basis.leads[i][0] != basis.leads[j][0]:
            return
        ei, ej = basis.leads[i][1], basis.leads[j][1]
        gamma = tuple(max(a, b) for a, b in zip(ei, ej))
        heapq.heappush(heap, (sum(gamma), key((basis.leads[i][0], gamma)), i, j))
        pending.add((i, j))

    for f in gens:
        if not f:
            continue
        h = _nf_for_basis(A, f, basis, key)
        if h:
            k = basis.add(h)
            for i in range(k):
                push(i, k)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        if _chain_skip(basis, pending, i, j):
            continue
        s = _spoly(A, basis, i, j)
        if not s:
            continue
        h = _nf_for_basis(A, s, basis, key)
        if h:
            k = basis.add(h)
            for t in range(k):
                push(t, k)

    return _interreduce(A, basis, key)


def _chain_skip(basis, pending, i, j):
    """Buchberger's chain criterion (valid for left ideals in G-algebras)."""
    comp, ei = basis.leads[i]
    ej = basis.leads[j][1]
    gamma = tuple(max(a, b) for a, b in zip(ei, ej))
    for k, (ck, ek) in enumerate(basis.leads):
        if k in (i, j) or ck != comp or not _divides(ek, gamma):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _interreduce(A, basis, key):
    n = len(basis.polys)
    keep = []
    for i in range(n):
        ci, ei = basis.leads[i]
        if not any(
            j != i
            and basis.leads[j][0] == ci
            and _divides(basis.leads[j][1], ei)
            and (basis.leads[j][1] != ei or j < i)
            for j in range(n)
        ):
            keep.append(i)
    out = []
    for i in keep:
        others = [j for j in keep if j != i]
        r = _nf_for_basis(A, basis.polys[i], basis, key, active=others)
        lt = max(r, key=key)
        inv = A.field.one / r[lt]
        out.append(({t: c * inv for t, c in r.items()}, lt))
    out.sort(key=lambda p: key(p[1]))
    return [p for p, _ in out]


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def _ambient(gens):
    gens = [g for g in gens]
    if not gens:
        raise ValueError("need at least one generator to determine the ambient algebra")
    A = gens[0].algebra
    rank = gens[0].rank if isinstance(gens[0], Vector) else None
    for g in gens:
        if g.algebra is not A:
            raise AmbientMismatch("generators live in different algebras")
        if (g.rank if isinstance(g, Vector) else None) != rank:
            raise AmbientMismatch("generators of different ranks")
    return A, rank


def left_gb(gens, order=None, pot=True, algebra=None):
    """Reduced left Gröbner basis of the left ideal/submodule spanned by ``gens``."""
    gens = list(gens)
    if not gens:
        if algebra is None:
            raise ValueError("empty generator list needs an explicit algebra")
        return GroebnerBasis(algebra, [], order or algebra.order)
    A, rank = _ambient(gens)
    order = order or A.order
    mo = ModuleOrder(order, pot)
    raw = _buchberger(A, [_raw(g) for g in gens], mo)
    return GroebnerBasis(
        A, [_cook(A, t, rank) for t in raw], order, rank, True, gens, pot
    )


def _basis_of(G):
    mo = G.module_order
    b = _Basis(G.algebra, mo)
    for g in G.gens:
        b.add(_raw(g))
    return b


def left_nf(f, G):
    """Left normal form of an Element or Vector with respect to ``G``."""
    if f.algebra is not G.algebra:
        raise AmbientMismatch("normal form: element and basis in different algebras")
    rank = f.rank if isinstance(f, Vector) else None
    if rank != G.rank and G.gens:
        raise AmbientMismatch("normal form: rank mismatch")
    if not G.gens:
        return f
    b = _basis_of(G)
    r = _reduce(G.algebra, _raw(f), b, G.module_order.key)
    return _cook(G.algebra, r, rank)


def left_nf_lift(f, G):
    """``(remainder, [a_1, ..., a_k])`` with ``f = sum a_i*g_i + remainder``."""
    A = G.algebra
    rank = f.rank if isinstance(f, Vector) else None
    b = _basis_of(G)
    quotients = {}
    r = _reduce(A, _raw(f), b, G.module_order.key, quotients=quotients)
    # the working basis holds g_i/lc(g_i)
    coeffs = [
        Element(A, dict(quotients.get(i, {}))) / _lead_coeff(g, G.module_order)
        for i, g in enumerate(G.gens)
    ]
    return _cook(A, r, rank), coeffs


def _lead_coeff(g, mo):
    t = _raw(g)
    return t[max(t, key=mo.key)]


def is_groebner(G):
    """Recheck Buchberger's criterion: every S-polynomial reduces to zero."""
    if not G.gens:
        return True
    A = G.algebra
    b = _basis_of(G)
    key = G.module_order.key
    for j in range(len(b.polys)):
        for i in range(j):
            if b.leads[i][0] != b.leads[j][0]:
                continue
            if _reduce(A, _spoly(A, b, i, j), b, key):
                return False
    return True


def elimination_order(A, eliminate):
    """Block order eliminating ``eliminate``; raises NotEliminable if inadmissible.

    The order must still satisfy the G-algebra ordering condition
    ``lm(d_ij) < x_i*x_j`` for every relation, otherwise it is useless.
    """
    elim = sorted(set(eliminate))
    order = A.order.elimination(elim, A.n)
    key = order.key
    for (i, j), d in A._d.items():
        if not d:
            continue
        lm = max(d, key=key)
        xixj = [0] * A.n
        xixj[i] += 1
        xixj[j] += 1
        if not key(lm) < key(tuple(xixj)):
            raise NotEliminable(
                f"no admissible elimination order for {[A.variables[k] for k in elim]}: "
                f"relation {A.variables[j]}*{A.variables[i]} has a tail that dominates"
            )
    return order


def eliminate(gens, elim_vars, algebra=None):
    """GB of ``I`` intersected with the subalgebra of the kept variables."""
    gens = list(gens)
    A = gens[0].algebra if gens else algebra
    if A is None:
        raise ValueError("empty generator list needs an explicit algebra")
    elim = sorted({A.index(v) if isinstance(v, str) else v for v in elim_vars})
    order = elimination_order(A, elim)
    G = left_gb(gens, order=order, algebra=A)
    kept = [g for g in G.gens if not (g.support() & set(elim))]
    return GroebnerBasis(A, kept, order, None, True, gens)


def left_syzygies(fs):
    """GB of ``{(a_1..a_k) : sum a_i*f_i = 0}`` as Vectors of rank k."""
    fs = list(fs)
    A, rank = _ambient(fs)
    if rank is not None:
        raise AmbientMismatch("syzygies are computed for ring elements")
    k = len(fs)
    gens = []
    for i, f in enumerate(fs):
        t = {(0, e): c for e, c in f.terms.items()}
        t[(i + 1, A.zero_exp)] = A.field.one
        gens.append(t)
    raw = _buchberger(A, gens, ModuleOrder(A.order, True))
    syz = []
    for t in raw:
        if any(comp == 0 for comp, _ in t):
            continue
        syz.append(Vector(A, k, {(comp - 1, e): c for (comp, e), c in t.items()}))
    return GroebnerBasis(A, syz, A.order, k, True, fs)


def right_syzygies(fs):
    """Generators of ``{(a_1..a_k) : sum f_i*a_i = 0}``, via the opposite algebra."""
    fs = list(fs)
    A, _ = _ambient(fs)
    op = A.opposite()
    S = left_syzygies([A.to_opposite(f) for f in fs])
    gens = [
        Vector.from_components([op.to_opposite(c) for c in v.components()])
        for v in S.gens
    ]
    return GroebnerBasis(A, gens, A.order, len(fs), False, fs)


def kernel_phi(s, r):
    """Left ideal ``{a : a*r in R*s}`` as a reduced GB."""
    if not s:
        raise ValueError("kernel of phi needs a nonzero s")
    if s.algebra is not r.algebra:
        raise AmbientMismatch("kernel_phi: s and r in different algebras")
    A = s.algebra
    syz = left_syzygies([r, s])
    proj = [v.component(0) for v in syz.gens]
    return left_gb([p for p in proj if p], algebra=A)


def right_divide_exact(f, s):
    """The unique ``q`` with ``f = q*s``; raises NotDivisible otherwise."""
    if not s:
        raise ZeroDivisionError("division by zero")
    if f.algebra is not s.algebra:
        raise AmbientMismatch("right_divide_exact: operands in different algebras")
    A = s.algebra
    mo = ModuleOrder(A.order)
    b = _Basis(A, mo)
    b.add(_raw(s))
    quotients = {}
    r = _reduce(A, _raw(f), b, mo.key, quotients=quotients)
    if r:
        raise NotDivisible(f"{f} is not a left multiple of {s}")
    q = Element(A, dict(quotients.get(0, {})))
    # basis holds s/lc(s)
    return q / s.lc()


def lift_witness(b, r):
    """``w`` with ``b = w*r`` (reduction against the principal basis {r})."""
    return right_divide_exact(b, r)
