"""Ore sets of the three implemented types and their ideal intersections.

Each Ore set knows how to test membership and how to pick a canonical element
of ``J & S`` for a left ideal ``J`` given by a Gröbner basis:

* monoidal  ``S = [g_1, ..., g_t]`` with the g_i in a commuting block,
* geometric ``S = K[x] \\ p`` for a prime ideal p of the coordinate ring of a
  Weyl algebra,
* rational  ``S = B \\ {0}`` for the subalgebra B generated by some variables.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce

from .errors import (
    AmbientMismatch,
    BoundExceeded,
    IntersectionEmpty,
    InvalidOreSet,
    NotEliminable,
)
from .galgebra import Element, comm_exquo, polynomial_ring, squarefree_part
from .groebner import GroebnerBasis, eliminate, left_gb, left_nf

DEFAULT_BOUND = 64


class Emptiness(enum.Enum):
    EMPTY = "empty"
    NONEMPTY = "nonempty"
    UNKNOWN = "unknown"


@dataclass
class IntersectionCertificate:
    """Outcome of an emptiness test for ``I & S``.

    ``method`` names the argument: ``leading-monomials`` (no leading monomial
    of I divides a power of lm(g)), ``contraction`` (``I & K[block]`` is zero),
    ``radical`` (g is not in the radical of the contraction), ``whole-ring``,
    ``geometric`` / ``rational`` (exact elimination), or ``none``.
    """

    status: Emptiness
    method: str
    contraction: GroebnerBasis | None = None
    radical_basis: GroebnerBasis | None = None
    detail: str = ""

    def __str__(self):
        text = f"{self.status.value} ({self.method})"
        if self.contraction is not None:
            text += f"; contraction = {self.contraction}"
        if self.detail:
            text += f"; {self.detail}"
        return text


@dataclass
class GeometricIntersection:
    """``I & K[x]`` as pairs ``(m_i, NF(m_i | p))``; empty iff every NF vanishes."""

    pairs: list
    empty: bool
    representative: Element | None

    def __str__(self):
        if self.empty:
            return "empty: I & K[x] = {" + ", ".join(str(m) for m, _ in self.pairs) + "} lies in p"
        return f"nonempty: representative {self.representative}"


class OreSet:
    kind = "abstract"

    def __init__(self, algebra):
        self.algebra = algebra
        self._opposite = None
        self.warnings = ()

    def _own(self, p):
        if p.algebra is not self.algebra:
            raise AmbientMismatch(f"element not in {self.algebra.name}")

    def contains(self, p):
        raise NotImplementedError

    def select(self, J):
        """Canonical element of ``J & S`` (J a left GB); raises when none is found."""
        raise NotImplementedError

    def emptiness(self, J):
        raise NotImplementedError

    def opposite(self):
        if self._opposite is None:
            self._opposite = self._make_opposite()
            self._opposite._opposite = self
        return self._opposite


# ---------------------------------------------------------------------------
# monoidal
# ---------------------------------------------------------------------------


def _power_lower_bound(lead, lg):
    """Least k with lead | k*lg, or None if no power is divisible."""
    k = 0
    for a, b in zip(lead, lg):
        if a == 0:
            continue
        if b == 0:
            return None
        k = max(k, -(-a // b))
    return k


def monoidal_intersection(G, g, bound=None):
    """Least ``m`` with ``g^m`` in the left ideal with Gröbner basis ``G``.

    The search starts at the smallest power whose leading monomial is
    divisible by a leading monomial of ``G``.  If no such power exists the
    intersection is provably empty.
    """
    if G.is_whole_ring():
        return 0
    lg = g.lm(G.order)
    bounds = [_power_lower_bound(g_.lm(G.order), lg) for g_ in G.gens]
    bounds = [b for b in bounds if b is not None]
    if not bounds:
        raise IntersectionEmpty(
            "no leading monomial of the ideal divides a power of lm(g)",
            IntersectionCertificate(Emptiness.EMPTY, "leading-monomials"),
        )
    m = max(1, min(bounds))
    if bound is not None and m > bound:
        raise BoundExceeded(f"no power g^m with m <= {bound} lies in the ideal")
    gm = g ** m
    while left_nf(gm, G):
        m += 1
        if bound is not None and m > bound:
            raise BoundExceeded(f"no power g^m with m <= {bound} lies in the ideal")
        gm = gm * g
    return m


def _radical_contains(ideal_gens, g, sub):
    """Is g in the radical of the ideal of K[sub] spanned by ideal_gens?"""
    names = list(sub.variables)
    fresh = "t"
    while fresh in names or fresh in sub.field.params:
        fresh += "_"
    T = polynomial_ring(names + [fresh], params=sub.field.params, name="T")
    lift = lambda f: T.element({e + (0,): c for e, c in f.terms.items()})
    t = T.gen(len(names))
    gens = [lift(f) for f in ideal_gens] + [T.one() - t * lift(g)]
    G = left_gb(gens)
    return G.is_whole_ring(), G


class MonoidalOreSet(OreSet):
    """``S = [g_1, ..., g_t]`` for pairwise commuting generators.

    Computations run in the localization at ``[g]`` where ``g`` is the
    square-free part of the product; the two localizations are isomorphic.
    Witnesses are still taken from ``S``: when ``g^m`` is not itself in ``S``
    the product ``h = g_1*...*g_t`` is used instead (``h^m`` lies in every
    left ideal containing ``g^m``).
    """

    kind = "monoidal"

    def __init__(self, algebra, generators, block=None, bound=DEFAULT_BOUND):
        super().__init__(algebra)
        gens = list(generators)
        if not gens:
            raise InvalidOreSet("monoidal Ore set needs at least one generator")
        for g in gens:
            self._own(g)
            if not g:
                raise InvalidOreSet("monoidal generators must be nonzero")
            if g.is_constant():
                raise InvalidOreSet(f"monoidal generator {g} is a unit")
        support = frozenset().union(*(g.support() for g in gens))
        self.block = tuple(sorted(block if block is not None else support))
        if not support <= set(self.block):
            raise InvalidOreSet("monoidal generators leave the declared block")
        if not algebra.block_is_commutative(self.block):
            raise InvalidOreSet(
                "monoidal generators must lie in a commuting block; "
                f"{[algebra.variables[i] for i in self.block]} do not commute"
            )
        self.generators = tuple(g.monic() for g in gens)
        self.bound = bound
        self.product = reduce(lambda a, b: a * b, self.generators).monic()
        self.g = squarefree_part(self.product)
        self._member_cache = {}

    def __str__(self):
        return "monoidal[" + ", ".join(str(g) for g in self.generators) + "]"

    def contains(self, p):
        """``p = c * prod g_i^e_i`` for a nonzero scalar c?

        Backtracking exact division: generators may share factors, so a
        greedy choice of divisor can fail where another order succeeds.
        """
        self._own(p)
        if not p:
            return False
        if not p.support() <= set(self.block):
            return False
        return self._divides_out(p.monic(), 0)

    def _divides_out(self, p, start):
        if p.is_constant():
            return True
        key = (tuple(sorted(p.terms.items(), key=lambda t: t[0])), start)
        try:
            hit = self._member_cache.get(key)
        except TypeError:
            hit = None
        if hit is not None:
            return hit
        ok = False
        for i in range(start, len(self.generators)):
            gi = self.generators[i]
            if gi.degree() > p.degree():
                continue
            q = comm_exquo(p, gi)
            if q is not None and self._divides_out(q.monic(), i):
                ok = True
                break
        try:
            self._member_cache[key] = ok
        except TypeError:
            pass
        return ok

    def emptiness(self, J):
        return monoidal_emptiness_certificate(J, self)

    def select(self, J):
        if J.is_whole_ring():
            return self.algebra.one()
        try:
            m = monoidal_intersection(J, self.g, self.bound)
        except BoundExceeded:
            cert = monoidal_emptiness_certificate(J, self)
            if cert.status is Emptiness.EMPTY:
                raise IntersectionEmpty("ideal misses the monoidal set", cert) from None
            raise
        gm = self.g ** m
        if self.contains(gm):
            return gm
        m = monoidal_intersection(J, self.product, self.bound)
        return self.product ** m

    def _make_opposite(self):
        A = self.algebra
        n = A.n
        return MonoidalOreSet(
            A.opposite(),
            [A.to_opposite(g) for g in self.generators],
            block=[n - 1 - i for i in self.block],
            bound=self.bound,
        )


def monoidal_emptiness_certificate(I, S):
    """Decide ``I & [g]`` when the generator block is eliminable.

    ``g^m`` always lies in ``K[block]``, so ``I & [g]`` is nonempty iff ``g``
    is in the radical of ``I_c = I & K[block]``.  Radical membership is tested
    with a fresh variable t: ``1 in I_c + <1 - t*g>``.
    """
    A = S.algebra
    G = I if isinstance(I, GroebnerBasis) else left_gb(I, algebra=A)
    if G.is_whole_ring():
        return IntersectionCertificate(Emptiness.NONEMPTY, "whole-ring")
    if G.is_zero():
        return IntersectionCertificate(Emptiness.EMPTY, "contraction", G)
    lg = S.g.lm(G.order)
    if all(_power_lower_bound(f.lm(G.order), lg) is None for f in G.gens):
        return IntersectionCertificate(Emptiness.EMPTY, "leading-monomials")
    complement = [i for i in range(A.n) if i not in S.block]
    try:
        Ic = eliminate(G.gens, complement, algebra=A) if complement else G
    except NotEliminable as exc:
        return IntersectionCertificate(Emptiness.UNKNOWN, "none", detail=str(exc))
    if Ic.is_zero():
        return IntersectionCertificate(Emptiness.EMPTY, "contraction", Ic)
    sub = A.subalgebra(S.block)
    inside, rad = _radical_contains(
        [A.restrict(f, sub) for f in Ic.gens], A.restrict(S.g, sub), sub
    )
    status = Emptiness.NONEMPTY if inside else Emptiness.EMPTY
    return IntersectionCertificate(
        status, "radical", Ic, rad,
        detail=f"g {'is' if inside else 'is not'} in the radical of the contraction",
    )


# ---------------------------------------------------------------------------
# geometric
# ---------------------------------------------------------------------------


class GeometricOreSet(OreSet):
    """``S = K[x] \\ p`` for an ideal p of the coordinate block of a Weyl algebra.

    Primality of p is trusted, not verified.  ``checked=False`` skips the
    Weyl-type requirement; such a set may fail to be Ore, which is exactly
    what :func:`~orelocal.localization.OreLocalization.disprove` is for.
    """

    kind = "geometric"

    def __init__(self, algebra, prime_gens, x_block=None, checked=True):
        super().__init__(algebra)
        if checked and not algebra.is_weyl_type():
            raise InvalidOreSet(
                f"geometric localization needs a Weyl-type algebra; {algebra.name} is not "
                "(e.g. K[x] minus <x+1> is not a left Ore set in the shift algebra)"
            )
        if x_block is None:
            x_block = algebra.x_block
        self.x_block = tuple(sorted(x_block))
        if not self.x_block:
            raise InvalidOreSet("geometric localization needs a coordinate block")
        if not algebra.block_is_commutative(self.x_block):
            raise InvalidOreSet("the coordinate block is not commutative")
        gens = [g for g in prime_gens]
        for g in gens:
            self._own(g)
            if not g.support() <= set(self.x_block):
                raise InvalidOreSet(f"generator {g} of p leaves the coordinate block")
        self.sub = algebra.subalgebra(self.x_block)
        self.prime = left_gb([algebra.restrict(g, self.sub) for g in gens], algebra=self.sub)
        if self.prime.is_whole_ring():
            raise InvalidOreSet("p is the whole ring (1 in p)")
        self.prime_gens = tuple(gens)
        self.checked = checked
        self.warnings = ("primality of p is not verified",)

    def __str__(self):
        return "geometric<" + ", ".join(str(g) for g in self.prime_gens) + ">"

    def contains(self, p):
        self._own(p)
        if not p or not p.support() <= set(self.x_block):
            return False
        return bool(left_nf(self.algebra.restrict(p, self.sub), self.prime))

    def reduce_mod_prime(self, f):
        return self.algebra.embed(left_nf(self.algebra.restrict(f, self.sub), self.prime), self.sub)

    def intersect(self, I):
        return geometric_intersection(I, self)

    def emptiness(self, J):
        gi = geometric_intersection(J, self)
        status = Emptiness.EMPTY if gi.empty else Emptiness.NONEMPTY
        return IntersectionCertificate(status, "geometric", detail=str(gi))

    def select(self, J):
        if J.is_whole_ring():
            return self.algebra.one()
        gi = geometric_intersection(J, self)
        if gi.empty:
            raise IntersectionEmpty(
                "I & K[x] lies in p, so I misses S",
                IntersectionCertificate(Emptiness.EMPTY, "geometric", detail=str(gi)),
            )
        return gi.representative

    def _make_opposite(self):
        A = self.algebra
        n = A.n
        return GeometricOreSet(
            A.opposite(),
            [A.to_opposite(g) for g in self.prime_gens],
            x_block=[n - 1 - i for i in self.x_block],
            checked=False,
        )


def geometric_intersection(I, S):
    """``I & K[x]`` and its reduction modulo p."""
    A = S.algebra
    gens = I.gens if isinstance(I, GroebnerBasis) else list(I)
    complement = [i for i in range(A.n) if i not in S.x_block]
    Ic = eliminate(gens, complement, algebra=A) if complement else left_gb(gens, algebra=A)
    pairs = [(m, S.reduce_mod_prime(m)) for m in Ic.gens]
    live = [m for m, red in pairs if red]
    rep = None
    if live:
        key = A.order.key
        rep = min(live, key=lambda m: (key(m.lm()), len(m.terms)))
    return GeometricIntersection(pairs, not live, rep)


# ---------------------------------------------------------------------------
# rational
# ---------------------------------------------------------------------------


class RationalOreSet(OreSet):
    """``S = B \\ {0}`` for the subalgebra B generated by ``indices``."""

    kind = "rational"

    def __init__(self, algebra, indices):
        super().__init__(algebra)
        idx = sorted({algebra.index(i) if isinstance(i, str) else i for i in indices})
        if not idx:
            raise InvalidOreSet("rational localization needs at least one variable")
        if not all(0 <= i < algebra.n for i in idx):
            raise InvalidOreSet("variable index out of range")
        if not algebra.closes_on(idx):
            raise InvalidOreSet(
                f"variables {[algebra.variables[i] for i in idx]} do not generate a subalgebra"
            )
        self.indices = tuple(idx)

    def __str__(self):
        return "rational{" + ", ".join(self.algebra.variables[i] for i in self.indices) + "}"

    def contains(self, p):
        self._own(p)
        return bool(p) and p.support() <= set(self.indices)

    def intersect(self, I):
        return rational_intersection(I, self)

    def emptiness(self, J):
        B = rational_intersection(J, self)
        status = Emptiness.NONEMPTY if B.gens else Emptiness.EMPTY
        return IntersectionCertificate(status, "rational", B)

    def select(self, J):
        if J.is_whole_ring():
            return self.algebra.one()
        B = rational_intersection(J, self)
        if B.is_zero():
            raise IntersectionEmpty(
                "I & B is zero",
                IntersectionCertificate(Emptiness.EMPTY, "rational", B),
            )
        return B.smallest()

    def _make_opposite(self):
        n = self.algebra.n
        return RationalOreSet(self.algebra.opposite(), [n - 1 - i for i in self.indices])


def rational_intersection(I, S):
    """Gröbner basis of ``I & B``; ``I & S`` is this ideal minus zero."""
    A = S.algebra
    gens = I.gens if isinstance(I, GroebnerBasis) else list(I)
    complement = [i for i in range(A.n) if i not in S.indices]
    if not complement:
        if isinstance(I, GroebnerBasis) and I.order == A.order:
            return I
        return left_gb(gens, algebra=A)
    return eliminate(gens, complement, algebra=A)


def make_ore_set(algebra, kind, data, **options):
    """Build an Ore set from ``kind`` and its defining data.

    ``monoidal``: list of generators; ``geometric``: generators of p;
    ``rational``: variable names or indices.
    """
    if kind == "monoidal":
        return MonoidalOreSet(algebra, data, **options)
    if kind == "geometric":
        return GeometricOreSet(algebra, data, **options)
    if kind == "rational":
        return RationalOreSet(algebra, data)
    raise InvalidOreSet(f"unknown Ore set type {kind!r}")
