"""G-algebras: exact coefficients, PBW elements and the noncommutative product.

A G-algebra on variables ``x_1, ..., x_n`` is given by relations
``x_j*x_i = c_ij*x_i*x_j + d_ij`` for ``i < j``.  Elements are stored in the
PBW basis ``x_1^a_1 * ... * x_n^a_n`` as a dict from exponent tuples to
nonzero coefficients; the product straightens words with the relation table.

    >>> A = weyl_algebra(["x"], ["dx"])
    >>> x, dx = A.gens()
    >>> print(dx * x)
    x*dx+1
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from sympy import QQ, Symbol
from sympy.polys.rings import ring as sympy_ring

from .errors import AmbientMismatch, NotCommutative, PresentationError
from .orders import MonomialOrder

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------


class CoefficientField:
    """QQ, or the rational function field QQ(params) with a fixed parameter order.

    Arithmetic is delegated to sympy's ground domains (gmpy2 rationals and
    sparse rational functions); this class only converts and prints.
    """

    def __init__(self, params=()):
        self.params = tuple(params)
        if self.params:
            self.domain = QQ.frac_field(*[Symbol(p) for p in self.params])
        else:
            self.domain = QQ
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and other.params == self.params

    def __hash__(self):
        return hash(("CoefficientField", self.params))

    def __repr__(self):
        return "QQ(" + ",".join(self.params) + ")" if self.params else "QQ"

    def __call__(self, value):
        """Coerce ints, Fractions and domain elements into the field."""
        if isinstance(value, int):
            return self.domain.convert(value)
        if isinstance(value, Fraction):
            return self.domain.convert_from(
                QQ(value.numerator, value.denominator), QQ
            )
        if isinstance(value, str):
            return self(Fraction(value))
        try:
            return self.domain.convert(value)
        except Exception:
            return self.domain.convert_from(value, QQ)

    def param(self, name):
        if name not in self.params:
            raise KeyError(name)
        return self.domain.convert(Symbol(name))

    def numer_denom(self, c):
        """Numerator and monic denominator as sympy polynomials in the parameters."""
        if not self.params:
            return c, self.one
        num, den = c.numer, c.denom
        lc = den.LC
        return num.quo_ground(lc), den.quo_ground(lc)

    def is_constant(self, c):
        """True for coefficients that lie in QQ."""
        if not self.params:
            return True
        num, den = self.numer_denom(c)
        return num.is_ground and den.is_ground

    def format(self, c):
        """Return ``(negative, text, is_one)`` for use in term printing.

        ``text`` is the absolute value when ``negative`` is meaningful; compound
        rational functions are parenthesized and carry their own sign.
        """
        if not self.params:
            neg = c < 0
            a = -c if neg else c
            return neg, _format_rational(a), a == 1
        num, den = self.numer_denom(c)
        if den == 1 and len(num.terms()) == 1:
            (exp, coef), = num.terms()
            neg = coef < 0
            coef = -coef if neg else coef
            mono = _format_monomial(exp, self.params)
            if not mono:
                return neg, _format_rational(coef), coef == 1
            if coef == 1:
                return neg, mono, False
            return neg, _format_rational(coef) + "*" + mono, False
        text = "(" + _format_poly(num, self.params) + ")"
        if den != 1:
            text += "/(" + _format_poly(den, self.params) + ")"
        return False, text, False

    def to_str(self, c):
        neg, text, _ = self.format(c)
        return "-" + text if neg else text


def _format_rational(a):
    a = QQ.convert(a)
    num, den = int(a.numerator), int(a.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def _format_monomial(exp, names):
    parts = []
    for name, e in zip(names, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _format_poly(poly, names):
    out = []
    for exp, coef in poly.terms():
        neg = coef < 0
        coef = -coef if neg else coef
        mono = _format_monomial(exp, names)
        if not mono:
            body = _format_rational(coef)
        elif coef == 1:
            body = mono
        else:
            body = _format_rational(coef) + "*" + mono
        out.append(("-" if neg else ("+" if out else "")) + body)
    return "".join(out) or "0"


def format_terms(terms, names, field):
    """Print ``(exp, coeff)`` pairs, already sorted, as ``x^2*dx+3``."""
    if not terms:
        return "0"
    out = []
    for exp, c in terms:
        neg, text, is_one = field.format(c)
        mono = _format_monomial(exp, names)
        if not mono:
            body = text
        elif is_one:
            body = mono
        else:
            body = text + "*" + mono
        out.append(("-" if neg else ("+" if out else "")) + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


def _add_into(acc, terms, scale):
    for exp, c in terms.items():
        v = acc.get(exp)
        v = c * scale if v is None else v + c * scale
        if v:
            acc[exp] = v
        else:
            acc.pop(exp, None)


class Element:
    """An element of a G-algebra in PBW normal form.

    ``terms`` maps exponent tuples to nonzero coefficients and must not be
    mutated after construction.
    """

    __slots__ = ("algebra", "terms", "_lead")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms
        self._lead = None

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def lead(self, order=None):
        """Leading ``(exponent, coefficient)`` under ``order`` (default: the algebra's)."""
        if not self.terms:
            raise ValueError("zero element has no leading term")
        if order is None or order is self.algebra.order:
            if self._lead is None:
                key = self.algebra.order.key
                exp = max(self.terms, key=key)
                self._lead = (exp, self.terms[exp])
            return self._lead
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def lm(self, order=None):
        return self.lead(order)[0]

    def lc(self, order=None):
        return self.lead(order)[1]

    def sorted_terms(self, order=None):
        key = (order or self.algebra.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def degree(self):
        """Total degree; -1 for zero."""
        return max((sum(e) for e in self.terms), default=-1)

    def tdeg(self, indices):
        """Total degree in the variables at ``indices``; -1 for zero."""
        return max((sum(e[i] for i in indices) for e in self.terms), default=-1)

    def support(self):
        """Indices of variables occurring in the element."""
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return frozenset(used)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(self.algebra.zero_exp, self.algebra.field.zero)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), self.algebra.field.zero)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                raise AmbientMismatch(
                    f"elements of {self.algebra.name} and {other.algebra.name}"
                )
            return other
        return self.algebra.const(other)

    def __add__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms, self.algebra.field.one)
        return Element(self.algebra, acc)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        acc = dict(self.terms)
        _add_into(acc, other.terms, -self.algebra.field.one)
        return Element(self.algebra, acc)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, Element):
            other = self._check(other)
            return Element(self.algebra, self.algebra._mul(self.terms, other.terms))
        return self.scale(self.algebra.field(other))

    def __rmul__(self, other):
        # scalars are central
        return self.scale(self.algebra.field(other))

    def __truediv__(self, other):
        if isinstance(other, Element):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("can only divide by nonzero scalars")
            other = other.constant_value()
        c = self.algebra.field(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self.scale(self.algebra.field.one / c)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.algebra.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c):
        if not c:
            return Element(self.algebra, {})
        return Element(self.algebra, {e: v * c for e, v in self.terms.items()})

    def monic(self, order=None):
        """Divide by the leading coefficient; zero stays zero."""
        if not self.terms:
            return self
        return self.scale(self.algebra.field.one / self.lc(order))

    def __eq__(self, other):
        if isinstance(other, Element):
            if other.algebra is not self.algebra:
                return False
            return not (self - other).terms
        try:
            return not (self - self.algebra.const(other)).terms
        except Exception:
            return NotImplemented

    __hash__ = None

    # -- printing -----------------------------------------------------------

    def __str__(self):
        A = self.algebra
        return format_terms(self.sorted_terms(), A.variables, A.field)

    def __repr__(self):
        return f"Element({self}, in {self.algebra.name})"


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool = True
    problems: list = field(default_factory=list)

    def fail(self, message):
        self.ok = False
        self.problems.append(message)


class GAlgebra:
    """A G-algebra presentation with its PBW product.

    Parameters
    ----------
    variables : sequence of str
        Variable names, in PBW order.
    relations : dict, optional
        ``{(i, j): (c, d)}`` for ``i < j`` meaning ``x_j*x_i = c*x_i*x_j + d``.
        ``d`` may be ``None``, a term dict ``{exp: coeff}`` or an
        :class:`Element` of a commutative algebra on the same variables.
        Missing pairs commute.
    params : sequence of str
        Names of the transcendental parameters of the coefficient field.
    order : str or MonomialOrder
        Global monomial order, ``degrevlex`` by default.
    weyl_pairs : sequence of (int, int), optional
        Explicit ``(x_i, d_i)`` pairing that flags the algebra as Weyl type.
    validate : bool
        Run :meth:`validate` and raise :class:`PresentationError` on failure.
    """

    def __init__(
        self,
        variables,
        relations=None,
        params=(),
        order="degrevlex",
        weyl_pairs=None,
        validate=True,
        name=None,
        field=None,
    ):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise PresentationError("duplicate variable names")
        self.field = field if field is not None else CoefficientField(params)
        clash = set(self.variables) & set(self.field.params)
        if clash:
            raise PresentationError(f"names used as variable and parameter: {sorted(clash)}")
        self.n = len(self.variables)
        self.name = name or "A"
        self.order = order if isinstance(order, MonomialOrder) else MonomialOrder.named(order)
        if self.order.kind == "block":
            raise PresentationError("the base order of a presentation must be basic")
        self.zero_exp = (0,) * self.n
        self._c = {}
        self._d = {}
        for (i, j), (c, d) in (relations or {}).items():
            if not 0 <= i < j < self.n:
                raise PresentationError(f"relation index pair {(i, j)} must satisfy i < j")
            c = self.field(c)
            d = self._terms_of(d)
            if c == self.field.one and not d:
                continue
            self._c[(i, j)] = c
            self._d[(i, j)] = d
        self.weyl_pairs = tuple(tuple(p) for p in weyl_pairs) if weyl_pairs else None
        self._mv = {}
        self._mm = {}
        self._opposite = None
        self.validated = False
        self.report = None
        if validate:
            report = self.validate()
            if not report.ok:
                raise PresentationError("; ".join(report.problems), report)

    def _terms_of(self, d):
        if d is None:
            return {}
        if isinstance(d, Element):
            if d.algebra.n != self.n:
                raise PresentationError("relation tail lives in a different ring")
            return {e: self.field(c) for e, c in d.terms.items() if c}
        out = {}
        for e, c in dict(d).items():
            e = tuple(e)
            if len(e) != self.n:
                raise PresentationError("exponent vector of wrong length in relation")
            c = self.field(c)
            if c:
                out[e] = c
        return out

    def __repr__(self):
        return f"GAlgebra({self.name}: {','.join(self.variables)} over {self.field!r}, {self.order.name})"

    # -- relation table ------------------------------------------------------

    def relation(self, i, j):
        """``(c_ij, d_ij)`` with ``d_ij`` as an Element (zero if absent)."""
        if i > j:
            i, j = j, i
        c = self._c.get((i, j), self.field.one)
        return c, Element(self, dict(self._d.get((i, j), {})))

    def commute(self, i, j):
        if i > j:
            i, j = j, i
        return (i, j) not in self._c

    def is_commutative(self):
        return not self._c

    def block_is_commutative(self, indices):
        return all(self.commute(i, j) for i, j in combinations(sorted(indices), 2))

    def is_weyl_type(self):
        """True iff the declared pairs give exactly the Weyl relations."""
        if not self.weyl_pairs:
            return False
        xs = [p[0] for p in self.weyl_pairs]
        ds = [p[1] for p in self.weyl_pairs]
        if sorted(xs + ds) != list(range(self.n)):
            return False
        one = {self.zero_exp: self.field.one}
        pair_of = {x: d for x, d in self.weyl_pairs}
        for i, j in combinations(range(self.n), 2):
            c, d = self._c.get((i, j), self.field.one), self._d.get((i, j), {})
            if pair_of.get(i) == j:
                if not (c == self.field.one and d == one):
                    return False
            elif pair_of.get(j) == i:
                # d_i < x_i in PBW order: x_i*d_i = d_i*x_i - 1
                if not (c == self.field.one and d == {self.zero_exp: -self.field.one}):
                    return False
            elif (i, j) in self._c:
                return False
        return True

    @property
    def x_block(self):
        return tuple(sorted(p[0] for p in self.weyl_pairs)) if self.weyl_pairs else ()

    @property
    def d_block(self):
        return tuple(sorted(p[1] for p in self.weyl_pairs)) if self.weyl_pairs else ()

    # -- elements -----------------------------------------------------------

    def element(self, terms):
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(e)
            if len(e) != self.n:
                raise ValueError("exponent vector of wrong length")
            c = self.field(c)
            if c:
                clean[e] = clean.get(e, self.field.zero) + c
                if not clean[e]:
                    del clean[e]
        return Element(self, clean)

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {self.zero_exp: self.field.one})

    def const(self, c):
        if isinstance(c, Element):
            if c.algebra is not self:
                raise AmbientMismatch("element of another algebra")
            return c
        c = self.field(c)
        return Element(self, {self.zero_exp: c} if c else {})

    def monomial(self, exp, c=1):
        return self.element({tuple(exp): c})

    def gen(self, i):
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.n
        e[i] = 1
        return Element(self, {tuple(e): self.field.one})

    def gens(self):
        return tuple(self.gen(i) for i in range(self.n))

    def param(self, name):
        return self.const(self.field.param(name))

    def index(self, name):
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    # -- the product --------------------------------------------------------

    def _mono_var(self, alpha, i):
        """x^alpha * x_i as a term dict."""
        n = self.n
        for k in range(n - 1, i, -1):
            if alpha[k] and (i, k) in self._c:
                break
        else:
            e = list(alpha)
            e[i] += 1
            return {tuple(e): self.field.one}
        key = (alpha, i)
        hit = self._mv.get(key)
        if hit is not None:
            return hit
        k = max(k for k in range(n) if alpha[k])
        rest = list(alpha)
        rest[k] -= 1
        rest = tuple(rest)
        head = self._mono_var(rest, i)
        if (i, k) in self._c:
            c = self._c[(i, k)]
            result = {}
            _add_into(result, self._poly_var(head, k), c)
            _add_into(result, self._mono_poly(rest, self._d[(i, k)]), self.field.one)
        else:
            result = self._poly_var(head, k)
        self._mv[key] = result
        return result

    def _poly_var(self, p, k):
        result = {}
        for exp, c in p.items():
            _add_into(result, self._mono_var(exp, k), c)
        return result

    def _mono_poly(self, alpha, p):
        result = {}
        for exp, c in p.items():
            _add_into(result, self._mono_mono(alpha, exp), c)
        return result

    def _mono_mono(self, alpha, beta):
        """x^alpha * x^beta as a term dict (shared; do not mutate)."""
        if not any(beta):
            return {alpha: self.field.one}
        lo = next(i for i, b in enumerate(beta) if b)
        if all(
            (i, k) not in self._c
            for k in range(lo + 1, self.n)
            if alpha[k]
            for i in range(lo, k)
            if beta[i]
        ):
            return {tuple(a + b for a, b in zip(alpha, beta)): self.field.one}
        key = (alpha, beta)
        hit = self._mm.get(key)
        if hit is not None:
            return hit
        p = {alpha: self.field.one}
        for i, b in enumerate(beta):
            for _ in range(b):
                p = self._poly_var(p, i)
        self._mm[key] = p
        return p

    def _mul(self, a, b):
        result = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                _add_into(result, self._mono_mono(ea, eb), ca * cb)
        return result

    def mono_mul(self, alpha, beta):
        """x^alpha * x^beta as a fresh term dict."""
        return dict(self._mono_mono(tuple(alpha), tuple(beta)))

    def left_mono_times(self, alpha, f):
        """x^alpha * f."""
        return Element(self, self._mono_poly(tuple(alpha), f.terms))

    def multiply(self, a, b):
        if a.algebra is not self or b.algebra is not self:
            raise AmbientMismatch("multiply: operands not in this algebra")
        return a * b

    # -- validation ---------------------------------------------------------

    def validate(self):
        """Check the G-algebra conditions; never raises."""
        report = ValidationReport()
        ordered = True
        for (i, j), c in sorted(self._c.items()):
            vi, vj = self.variables[i], self.variables[j]
            if not c:
                report.fail(f"c({vi},{vj}) is zero")
            d = self._d[(i, j)]
            if d:
                xixj = [0] * self.n
                xixj[i] += 1
                xixj[j] += 1
                key = self.order.key
                lm = max(d, key=key)
                if not key(lm) < key(tuple(xixj)):
                    ordered = False
                    mono = format_terms([(lm, self.field.one)], self.variables, self.field)
                    report.fail(
                        f"ordering condition: lm(d({vi},{vj})) = {mono} is not smaller than {vi}*{vj}"
                    )
        if ordered and report.ok:
            for i, j, k in combinations(range(self.n), 3):
                if not self._triple_ok(i, j, k):
                    report.fail(
                        "associativity fails for "
                        f"({self.variables[k]}*{self.variables[j]})*{self.variables[i]}"
                    )
        self.validated = report.ok
        self.report = report
        if not report.ok:
            self._mv.clear()
            self._mm.clear()
        return report

    def _unit(self, i):
        e = [0] * self.n
        e[i] = 1
        return tuple(e)

    def _rel_poly(self, i, j):
        """x_j * x_i (i < j) in PBW form, straight from the table."""
        e = [0] * self.n
        e[i] += 1
        e[j] += 1
        out = {tuple(e): self._c.get((i, j), self.field.one)}
        _add_into(out, self._d.get((i, j), {}), self.field.one)
        return out

    def _triple_ok(self, i, j, k):
        left = self._poly_var(self._rel_poly(j, k), i)
        right = self._mono_poly(self._unit(k), self._rel_poly(i, j))
        diff = dict(left)
        _add_into(diff, right, -self.field.one)
        return not diff

    # -- derived algebras -----------------------------------------------------

    def opposite(self):
        """The opposite algebra, with variables in reversed order."""
        if self._opposite is None:
            n = self.n
            rels = {}
            for (i, j), c in self._c.items():
                d = {e[::-1]: v for e, v in self._d[(i, j)].items()}
                rels[(n - 1 - j, n - 1 - i)] = (c, d)
            op = GAlgebra(
                self.variables[::-1],
                rels,
                order=self.order.opposite(),
                name=self.name + "^op",
                field=self.field,
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def to_opposite(self, a):
        """Map an element of this algebra to the opposite algebra (and back).

        The PBW monomial ``x_1^a_1...x_n^a_n`` equals the opposite product
        ``x_n^a_n * ... * x_1^a_1``, which is the reversed exponent vector in
        the reversed variable order; the map is therefore term-wise.
        """
        if a.algebra is not self:
            raise AmbientMismatch("to_opposite: element not in this algebra")
        return Element(self.opposite(), {e[::-1]: c for e, c in a.terms.items()})

    def from_opposite(self, a):
        op = self.opposite()
        if a.algebra is not op:
            raise AmbientMismatch("from_opposite: element not in the opposite algebra")
        return op.to_opposite(a)

    def subalgebra(self, indices, name=None):
        """The sub-G-algebra generated by the variables at ``indices``."""
        idx = tuple(sorted(indices))
        pos = {v: k for k, v in enumerate(idx)}
        rels = {}
        for (i, j), c in self._c.items():
            if i in pos and j in pos:
                d = {}
                for e, v in self._d[(i, j)].items():
                    if any(e[t] for t in range(self.n) if t not in pos):
                        raise PresentationError(
                            f"variables {[self.variables[t] for t in idx]} do not generate a subalgebra"
                        )
                    d[tuple(e[t] for t in idx)] = v
                rels[(pos[i], pos[j])] = (c, d)
        sub = GAlgebra(
            [self.variables[t] for t in idx],
            rels,
            order=self.order.restricted(idx),
            name=name or f"{self.name}[{','.join(self.variables[t] for t in idx)}]",
            field=self.field,
        )
        sub.parent = self
        sub.parent_indices = idx
        return sub

    def closes_on(self, indices):
        """Do the relations among ``indices`` stay inside ``indices``?"""
        idx = set(indices)
        for (i, j), d in self._d.items():
            if i in idx and j in idx:
                for e in d:
                    if any(e[t] for t in range(self.n) if t not in idx):
                        return False
        return True

    def restrict(self, a, sub):
        """View ``a`` (supported on ``sub.parent_indices``) as an element of ``sub``."""
        idx = sub.parent_indices
        out = {}
        for e, c in a.terms.items():
            if any(e[t] for t in range(self.n) if t not in idx):
                raise AmbientMismatch("element uses variables outside the subalgebra")
            out[tuple(e[t] for t in idx)] = c
        return Element(sub, out)

    def embed(self, a, sub):
        idx = sub.parent_indices
        out = {}
        for e, c in a.terms.items():
            full = [0] * self.n
            for t, v in zip(idx, e):
                full[t] = v
            out[tuple(full)] = c
        return Element(self, out)


# ---------------------------------------------------------------------------
# commutative helpers
# ---------------------------------------------------------------------------


def _check_commuting(*elements):
    A = elements[0].algebra
    used = set()
    for f in elements:
        if f.algebra is not A:
            raise AmbientMismatch("gcd operands in different algebras")
        used |= f.support()
    if not A.block_is_commutative(used):
        raise NotCommutative(
            "operands involve non-commuting variables "
            + ",".join(A.variables[i] for i in sorted(used))
        )
    return A


def _sympy_ring(A):
    return sympy_ring(",".join(f"v{i}" for i in range(A.n)), A.field.domain)[0]


def _to_sympy(R, f):
    return R.from_dict({e: c for e, c in f.terms.items()}) if f.terms else R.zero


def _from_sympy(A, p):
    return Element(A, {tuple(e): A.field(c) for e, c in p.terms() if c})


def comm_gcd(f, g):
    """Monic gcd of two elements of a commuting variable block."""
    A = _check_commuting(f, g)
    if not f and not g:
        return A.zero()
    R = _sympy_ring(A)
    h = _from_sympy(A, _to_sympy(R, f).gcd(_to_sympy(R, g)))
    return h.monic()


def comm_exquo(f, g):
    """Exact quotient f/g in a commuting block, or None if g does not divide f."""
    A = _check_commuting(f, g)
    if not g:
        raise ZeroDivisionError("division by zero")
    R = _sympy_ring(A)
    q, r = _to_sympy(R, f).div(_to_sympy(R, g))
    if r:
        return None
    return _from_sympy(A, q)


def comm_derivative(f, i):
    A = f.algebra
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * A.field(e[i])
    return Element(A, out)


def squarefree_part(f):
    """Product of the distinct irreducible factors of ``f``, made monic.

    Computed as ``f / gcd(f, df/dx_1, ..., df/dx_k)`` over the variables of
    ``f`` (characteristic zero).
    """
    if not f:
        raise ValueError("square-free part of zero")
    _check_commuting(f)
    g = f
    for i in sorted(f.support()):
        g = comm_gcd(g, comm_derivative(f, i))
    q = comm_exquo(f, g)
    return q.monic()


# ---------------------------------------------------------------------------
# the algebra zoo
# ---------------------------------------------------------------------------


def polynomial_ring(variables, params=(), order="degrevlex", name=None):
    return GAlgebra(variables, {}, params=params, order=order, name=name or "K")


def _paired(xs, ds):
    xs, ds = list(xs), list(ds)
    if len(xs) != len(ds):
        raise ValueError("need as many operators as coordinates")
    return xs + ds, len(xs)


def weyl_algebra(xs, ds, params=(), order="degrevlex", name=None):
    """``d_i*x_i = x_i*d_i + 1`` with variables ordered x_1..x_n, d_1..d_n."""
    variables, n = _paired(xs, ds)
    zero = (0,) * (2 * n)
    rels = {(i, n + i): (1, {zero: 1}) for i in range(n)}
    return GAlgebra(
        variables, rels, params=params, order=order,
        weyl_pairs=[(i, n + i) for i in range(n)], name=name or f"A{n}",
    )


def shift_algebra(xs, ss, params=(), order="degrevlex", name=None):
    """``s_i*x_i = x_i*s_i + s_i``."""
    variables, n = _paired(xs, ss)
    rels = {}
    for i in range(n):
        e = [0] * (2 * n)
        e[n + i] = 1
        rels[(i, n + i)] = (1, {tuple(e): 1})
    return GAlgebra(variables, rels, params=params, order=order, name=name or f"S{n}")


def _q_params(qs, n):
    qs = [qs] if isinstance(qs, str) else list(qs)
    if len(qs) == 1:
        qs = qs * n
    if len(qs) != n:
        raise PresentationError(f"expected 1 or {n} parameters, got {len(qs)}")
    return qs


def q_shift_algebra(xs, ss, qs, order="degrevlex", name=None):
    """``s_i*x_i = q_i*x_i*s_i`` over QQ(q_1, ..., q_n); one q is shared by all pairs."""
    variables, n = _paired(xs, ss)
    qs = _q_params(qs, n)
    K = CoefficientField(tuple(dict.fromkeys(qs)))
    rels = {(i, n + i): (K.param(qs[i]), None) for i in range(n)}
    return GAlgebra(variables, rels, order=order, name=name or f"Sq{n}", field=K)


def q_weyl_algebra(xs, ds, qs, order="degrevlex", name=None):
    """``d_i*x_i = q_i*x_i*d_i + 1`` over QQ(q_1, ..., q_n)."""
    variables, n = _paired(xs, ds)
    qs = _q_params(qs, n)
    K = CoefficientField(tuple(dict.fromkeys(qs)))
    zero = (0,) * (2 * n)
    rels = {(i, n + i): (K.param(qs[i]), {zero: 1}) for i in range(n)}
    return GAlgebra(variables, rels, order=order, name=name or f"Aq{n}", field=K)


def integration_algebra(xs, Is, params=(), order="degrevlex", name=None):
    """``I_i*x_i = x_i*I_i + I_i^2``."""
    variables, n = _paired(xs, Is)
    rels = {}
    for i in range(n):
        e = [0] * (2 * n)
        e[n + i] = 2
        rels[(i, n + i)] = (1, {tuple(e): 1})
    return GAlgebra(variables, rels, params=params, order=order, name=name or f"Int{n}")
