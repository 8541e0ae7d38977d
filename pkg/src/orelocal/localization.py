"""Left and right Ore conditions and arithmetic in Ore localizations.

A :class:`Fraction` stores a left pair ``(s, r)`` meaning ``s^-1 r``, a right
pair ``(p, t)`` meaning ``p t^-1``, or both; when both are present
``r*t == s*p``.  All arithmetic goes through left pairs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    AmbientMismatch,
    BoundExceeded,
    IntersectionEmpty,
    InvalidFraction,
    InvariantViolation,
    NotInS,
    NotInvertible,
    InvertibilityUnknown,
)
from .groebner import (
    GroebnerBasis,
    kernel_phi,
    left_gb,
    left_syzygies,
    lift_witness,
    right_divide_exact,
    right_syzygies,
)
from .orders import ModuleOrder
from .oresets import (
    Emptiness,
    GeometricOreSet,
    MonoidalOreSet,
    RationalOreSet,
    monoidal_emptiness_certificate,
    monoidal_intersection,
    rational_intersection,
)


@dataclass(frozen=True)
class OreWitness:
    """``s_tilde*r == r_tilde*s`` (left) or ``r*s_tilde == s*r_tilde`` (right).

    ``J`` is the full candidate ideal: every element of ``J & S`` can replace
    ``s_tilde``.  For right witnesses ``J`` lives in the opposite algebra.
    """

    s_tilde: object
    r_tilde: object
    J: GroebnerBasis
    side: str = "left"

    def __str__(self):
        return f"({self.s_tilde}, {self.r_tilde})"


class Verdict(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class OreVerdict:
    status: Verdict
    J: GroebnerBasis
    witness: OreWitness | None = None
    certificate: object = None

    def __str__(self):
        if self.status is Verdict.SATISFIED:
            return f"satisfied: witness {self.witness}"
        if self.status is Verdict.VIOLATED:
            return f"violated: J = {self.J}; {self.certificate}"
        return f"unknown: J = {self.J}"


class Invertibility(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class InvertibilityResult:
    """For ``YES``: ``b == w*r`` and ``b`` lies in S."""

    status: Invertibility
    w: object = None
    b: object = None
    reason: str = ""

    def __bool__(self):
        return self.status is Invertibility.YES

    def __str__(self):
        if self.status is Invertibility.YES:
            return f"yes (w = {self.w}, b = {self.b})"
        return self.status.value + (f" ({self.reason})" if self.reason else "")


class Fraction:
    """An element of ``S^-1 R``; immutable.

    Denominators are stored monic.  Equality of fractions is
    :meth:`OreLocalization.are_equal`, not ``==`` on the stored pairs.
    """

    __slots__ = ("loc", "left", "right")

    def __init__(self, loc, left=None, right=None, check=True):
        if left is None and right is None:
            raise InvalidFraction("a fraction needs a left or a right pair")
        if left is not None:
            left = _normalize(*left)
        if right is not None:
            t, p = _normalize(right[1], right[0])
            right = (p, t)
        if check:
            S = loc.S
            for pair, den in ((left, 0), (right, 1)):
                if pair is None:
                    continue
                for x in pair:
                    if x.algebra is not loc.algebra:
                        raise AmbientMismatch("fraction entries must lie in the ambient algebra")
                if not S.contains(pair[den]):
                    raise InvalidFraction(f"denominator {pair[den]} is not in {S}")
            if left is not None and right is not None:
                s, r = left
                p, t = right
                if r * t != s * p:
                    raise InvalidFraction("left and right pairs disagree: r*t != s*p")
        object.__setattr__(self, "loc", loc)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("fractions are immutable")

    @property
    def s(self):
        return self.loc.left_pair(self)[0]

    @property
    def r(self):
        return self.loc.left_pair(self)[1]

    def __add__(self, other):
        return self.loc.add(self, self.loc.coerce(other))

    def __radd__(self, other):
        return self.loc.add(self.loc.coerce(other), self)

    def __mul__(self, other):
        return self.loc.mul(self, self.loc.coerce(other))

    def __rmul__(self, other):
        return self.loc.mul(self.loc.coerce(other), self)

    def __neg__(self):
        return self.loc.neg(self)

    def __sub__(self, other):
        return self.loc.add(self, self.loc.neg(self.loc.coerce(other)))

    def equals(self, other):
        return self.loc.are_equal(self, self.loc.coerce(other))

    def __str__(self):
        s, r = self.left if self.left else ("_", "_")
        p, t = self.right if self.right else ("_", "_")
        return f"[{s}, {r}, {p}, {t}]"

    def __repr__(self):
        return f"Fraction{self}"


def _normalize(den, num):
    if not den:
        raise InvalidFraction("zero denominator")
    c = den.lc()
    if c == den.algebra.field.one:
        return den, num
    return den / c, num / c


class OreLocalization:
    """The localization ``S^-1 R`` at an Ore set ``S``."""

    def __init__(self, S, verify=True):
        self.S = S
        self.algebra = S.algebra
        self.verify = verify
        self._opposite = None

    def __repr__(self):
        return f"OreLocalization({self.S})"

    def opposite(self):
        if self._opposite is None:
            self._opposite = OreLocalization(self.S.opposite(), self.verify)
            self._opposite._opposite = self
        return self._opposite

    # -- Ore conditions -------------------------------------------------------

    def _own(self, *xs):
        for x in xs:
            if x.algebra is not self.algebra:
                raise AmbientMismatch(f"element {x} not in {self.algebra.name}")

    def left_ore(self, s, r):
        """Witness ``(s_tilde, r_tilde)`` with ``s_tilde*r == r_tilde*s``."""
        self._own(s, r)
        if not self.S.contains(s):
            raise NotInS(f"{s} is not in {self.S}")
        J = kernel_phi(s, r)
        try:
            st = self.S.select(J)
        except IntersectionEmpty as exc:
            raise IntersectionEmpty(
                f"{exc}; ker(phi) = {J}, so S is not left Ore for ({s}, {r})",
                exc.certificate,
            ) from None
        rt = right_divide_exact(st * r, s)
        if self.verify and st * r != rt * s:
            raise InvariantViolation("left Ore witness fails s~*r == r~*s")
        return OreWitness(st, rt, J, "left")

    def right_ore(self, s, r):
        """Witness ``(t, p)`` with ``r*t == s*p``, found in the opposite algebra."""
        self._own(s, r)
        if not self.S.contains(s):
            raise NotInS(f"{s} is not in {self.S}")
        A = self.algebra
        w = self.opposite().left_ore(A.to_opposite(s), A.to_opposite(r))
        t = A.from_opposite(w.s_tilde)
        p = A.from_opposite(w.r_tilde)
        if self.verify and r * t != s * p:
            raise InvariantViolation("right Ore witness fails r*t == s*p")
        return OreWitness(t, p, w.J, "right")

    def disprove(self, s, r):
        """Decide whether ``J & S`` is empty for ``J = ker(phi_{s,r})``."""
        self._own(s, r)
        if not self.S.contains(s):
            raise NotInS(f"{s} is not in {self.S}")
        J = kernel_phi(s, r)
        cert = self.S.emptiness(J)
        if cert.status is Emptiness.EMPTY:
            return OreVerdict(Verdict.VIOLATED, J, certificate=cert)
        try:
            w = self.left_ore(s, r)
        except IntersectionEmpty as exc:
            return OreVerdict(Verdict.VIOLATED, J, certificate=exc.certificate)
        except BoundExceeded:
            return OreVerdict(Verdict.UNKNOWN, J, certificate=cert)
        return OreVerdict(Verdict.SATISFIED, J, witness=w, certificate=cert)

    # -- construction -----------------------------------------------------------

    def fraction(self, s, r):
        """Left fraction ``s^-1 r``."""
        return Fraction(self, left=(s, r))

    def right_fraction(self, p, t):
        """Right fraction ``p t^-1``."""
        return Fraction(self, right=(p, t))

    def from_element(self, r):
        return Fraction(self, left=(self.algebra.one(), r))

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.loc is not self and x.loc.S is not self.S:
                raise AmbientMismatch("fractions over different Ore sets")
            return x
        if hasattr(x, "algebra"):
            return self.from_element(x)
        return self.from_element(self.algebra.const(x))

    def zero(self):
        return self.from_element(self.algebra.zero())

    def one(self):
        return self.from_element(self.algebra.one())

    def left_pair(self, a):
        if a.left is None:
            a = self.convert_right_to_left(a)
        return a.left

    # -- arithmetic ---------------------------------------------------------------

    def add(self, a, b):
        s1, r1 = self.left_pair(a)
        s2, r2 = self.left_pair(b)
        w = self.left_ore(s2, s1)  # w.s_tilde*s1 == w.r_tilde*s2
        return Fraction(self, left=(w.s_tilde * s1, w.s_tilde * r1 + w.r_tilde * r2))

    def neg(self, a):
        s, r = self.left_pair(a)
        return Fraction(self, left=(s, -r), check=False)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        s1, r1 = self.left_pair(a)
        s2, r2 = self.left_pair(b)
        w = self.left_ore(s2, r1)  # w.s_tilde*r1 == w.r_tilde*s2
        return Fraction(self, left=(w.s_tilde * s1, w.r_tilde * r2))

    def are_equal(self, a, b):
        s1, r1 = self.left_pair(a)
        s2, r2 = self.left_pair(b)
        w = self.left_ore(s1, s2)  # w.s_tilde*s2 == w.r_tilde*s1
        return w.s_tilde * r2 == w.r_tilde * r1

    # -- conversion -----------------------------------------------------------------

    def convert_left_to_right(self, a):
        if a.left is None:
            raise InvalidFraction("fraction has no left pair")
        s, r = a.left
        w = self.right_ore(s, r)  # r*t == s*p
        return Fraction(self, left=a.left, right=(w.r_tilde, w.s_tilde))

    def convert_right_to_left(self, a):
        if a.right is None:
            raise InvalidFraction("fraction has no right pair")
        p, t = a.right
        w = self.left_ore(t, p)  # s~*p == r~*t
        return Fraction(self, left=(w.s_tilde, w.r_tilde), right=a.right)

    # -- inversion ------------------------------------------------------------------

    def is_invertible(self, a):
        s, r = self.left_pair(a)
        if not r:
            return InvertibilityResult(Invertibility.NO, reason="zero numerator")
        S = self.S
        if isinstance(S, GeometricOreSet):
            if S.contains(r):
                return InvertibilityResult(Invertibility.YES, self.algebra.one(), r)
            return InvertibilityResult(Invertibility.NO, reason="numerator not in S")
        if isinstance(S, RationalOreSet):
            B = rational_intersection([r], S)
            if B.is_zero():
                return InvertibilityResult(Invertibility.NO, reason="A*r meets B only in 0")
            b = B.smallest()
            return InvertibilityResult(Invertibility.YES, lift_witness(b, r), b)
        if isinstance(S, MonoidalOreSet):
            return self._monoidal_invertible(r)
        return InvertibilityResult(Invertibility.UNKNOWN, reason="unsupported Ore set")

    def _monoidal_invertible(self, r):
        S = self.S
        G = left_gb([r])
        cert = monoidal_emptiness_certificate(G, S)
        if cert.status is Emptiness.EMPTY:
            return InvertibilityResult(Invertibility.NO, reason=f"A*r misses S: {cert}")
        try:
            m = monoidal_intersection(G, S.g, S.bound)
            b = S.g ** m
            if not S.contains(b):
                b = S.product ** monoidal_intersection(G, S.product, S.bound)
        except (BoundExceeded, IntersectionEmpty) as exc:
            if cert.status is Emptiness.UNKNOWN:
                return InvertibilityResult(Invertibility.UNKNOWN, reason=str(exc))
            raise
        return InvertibilityResult(Invertibility.YES, lift_witness(b, r), b)

    def invert(self, a):
        s, r = self.left_pair(a)
        res = self.is_invertible(a)
        if res.status is Invertibility.NO:
            raise NotInvertible(f"{a} is not invertible: {res.reason}")
        if res.status is Invertibility.UNKNOWN:
            raise InvertibilityUnknown(f"invertibility of {a} is undecided: {res.reason}")
        inv = Fraction(self, left=(res.b, res.w * s))
        if self.verify and not self.are_equal(self.mul(inv, a), self.one()):
            raise InvariantViolation("computed inverse does not multiply to 1")
        return inv

    # -- cancellation ---------------------------------------------------------------

    def cancel(self, a):
        """Equivalent representations of ``a`` from syzygies; the first has the
        denominator of least total degree and the input is always included."""
        s, r = self.left_pair(a)
        orig = Fraction(self, left=(s, r))
        out = [orig]
        M = [v for v in right_syzygies([s, r]).gens if v]
        if M and r:
            mkey = ModuleOrder(self.algebra.order).key
            v = min(M, key=lambda v: (mkey(v.lead()[0]), len(v.terms)))
            a_, b_ = v.components()
            for u in left_syzygies([a_, b_]).gens:
                q, p = u.components()
                if not q or not self.S.contains(q):
                    continue
                cand = Fraction(self, left=(q, p))
                if any(c.left[0] == cand.left[0] and c.left[1] == cand.left[1] for c in out):
                    continue
                if self.are_equal(cand, orig):
                    out.append(cand)
        mo = self.algebra.order
        out.sort(key=lambda f: (f.left[0].degree(), mo.key(f.left[0].lm()), len(f.left[0].terms)))
        return out
