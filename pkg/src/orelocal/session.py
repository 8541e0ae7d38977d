"""Line-oriented session interpreter.

One command per line; ``#`` starts a comment.  Commands::

    algebra A2 = weyl(x, y; dx, dy)            # also shift, qshift, qweyl, integration, poly
    algebra Q vars(x, y, Qx, Qy) params(q) relations(Qx*x = q*x*Qx; Qy*y = q*y*Qy)
    algebra B vars(x, dx) weyl(x:dx) order(lp)
    use A2                                      # algebra or Ore set
    oreset S = monoidal(x+3, x*y+y) [block(x, y)] [bound(32)]
    oreset P = geometric(y-3) [block(x, y)] [unchecked]
    oreset R = rational(y, dy)
    let f = x*dx + 1
    let a = [x+3, dx]                           # left fraction; also [s, r, p, t] with _ for gaps
    let b = add(a, [x*y+y, dy])
    print b
    add(a, b)

Every result is a record ``source = value``; failures are diagnostics that
carry the command index (the 1-based line number) and an error code.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .errors import (
    InvalidOreSet,
    InvariantViolation,
    OreLocalError,
    ParseError,
    UndefinedName,
)
from .galgebra import (
    CoefficientField,
    Element,
    GAlgebra,
    integration_algebra,
    polynomial_ring,
    q_shift_algebra,
    q_weyl_algebra,
    shift_algebra,
    weyl_algebra,
)
from .groebner import (
    GroebnerBasis,
    eliminate,
    kernel_phi,
    left_gb,
    left_nf,
    left_syzygies,
    right_syzygies,
)
from .localization import Fraction, OreLocalization, OreWitness
from .oresets import DEFAULT_BOUND, make_ore_set
from .parser import Name, parse, parse_expression

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_CALL = re.compile(rf"^({_NAME})\s*\((.*)\)$", re.S)

OPS = {
    # name: (min args, max args or None)
    "add": (2, 2), "sub": (2, 2), "mul": (2, 2), "neg": (1, 1), "eq": (2, 2),
    "isinvertible": (1, 1), "invert": (1, 1), "convertLR": (1, 1), "convertRL": (1, 1),
    "cancel": (1, 1), "ore": (2, 2), "rightOre": (2, 2), "kernel": (2, 2),
    "gb": (1, None), "nf": (2, None), "eliminate": (2, None), "syz": (1, None),
    "rsyz": (1, None), "disprove": (2, 2), "isInS": (1, 1), "intersect": (1, None),
}


@dataclass
class Record:
    index: int
    source: str
    value: str = ""
    error: str | None = None

    @property
    def is_error(self):
        return self.error is not None

    def plain(self):
        if self.error:
            return f"error[{self.error}] at command {self.index}: {self.value}"
        return f"{self.source} = {self.value}"

    def json(self):
        if self.error:
            obj = {"index": self.index, "kind": "error", "code": self.error,
                   "source": self.source, "message": self.value}
        else:
            obj = {"index": self.index, "kind": "result", "source": self.source,
                   "value": self.value}
        return json.dumps(obj, ensure_ascii=False)


class _Pending:
    """Placeholder value bound by ``let`` when only checking a script."""

    def __str__(self):
        return "<unevaluated>"


def split_top(text, sep):
    """Split on ``sep`` outside parentheses and brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def _args(text):
    text = text.strip()
    return [] if not text else split_top(text, ",")


def format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, OreWitness):
        if v.side == "left":
            return f"s~ = {v.s_tilde}, r~ = {v.r_tilde}; J = {v.J}"
        return f"t = {v.s_tilde}, p = {v.r_tilde}"
    if isinstance(v, list):
        return "{" + ", ".join(format_value(x) for x in v) + "}"
    return str(v)


class Session:
    def __init__(self, bound=DEFAULT_BOUND, order="degrevlex", check_only=False):
        self.bound = bound
        self.order = order
        self.check_only = check_only
        self.algebras = {}
        self.oresets = {}
        self.values = {}
        self.algebra = None
        self.loc = None
        self.records = []

    # -- driver -----------------------------------------------------------------

    def run_lines(self, lines, start=1):
        out = []
        for k, line in enumerate(lines, start):
            out.extend(self.execute(line, k))
        return out

    def execute(self, line, index):
        text = line.split("#", 1)[0].strip()
        if not text:
            return []
        snapshot = (dict(self.algebras), dict(self.oresets), dict(self.values), self.algebra, self.loc)
        try:
            rec = self._dispatch(text, index)
        except InvariantViolation:
            raise
        except OreLocalError as exc:
            self.algebras, self.oresets, self.values, self.algebra, self.loc = snapshot
            rec = Record(index, text, str(exc), exc.code)
        except (ValueError, KeyError, ZeroDivisionError) as exc:
            self.algebras, self.oresets, self.values, self.algebra, self.loc = snapshot
            rec = Record(index, text, str(exc), "INVALID_ARGUMENT")
        recs = [rec] if rec is not None else []
        self.records.extend(recs)
        return recs

    def _dispatch(self, text, index):
        head, _, rest = text.partition(" ")
        rest = rest.strip()
        if head == "algebra":
            return self._algebra(rest, text, index)
        if head == "use":
            return self._use(rest, index)
        if head == "oreset":
            return self._oreset(rest, text, index)
        if head == "let":
            m = re.match(rf"^({_NAME})\s*=\s*(.+)$", rest, re.S)
            if not m:
                raise ParseError("expected 'let NAME = value'")
            name, body = m.groups()
            self._check_fresh(name)
            self.values[name] = self._value(body)
            return None
        if head == "print":
            if rest not in self.values:
                raise UndefinedName(f"undefined name {rest!r}")
            value = self.values[rest]
            source = rest
        else:
            value = self._value(text)
            source = text
        if isinstance(value, _Pending):
            return None
        return Record(index, source, format_value(value))

    # -- definitions --------------------------------------------------------------

    def _check_fresh(self, name):
        if self.algebra is not None and (
            name in self.algebra.variables or name in self.algebra.field.params
        ):
            raise ParseError(f"{name!r} is a variable or parameter of {self.algebra.name}")

    def _algebra(self, rest, text, index):
        m = re.match(rf"^({_NAME})\s*(=)?\s*(.*)$", rest, re.S)
        if not m:
            raise ParseError("expected 'algebra NAME ...'")
        name, eq, body = m.groups()
        clauses = self._clauses(body)
        order = (clauses.pop("order", None) or self.order).strip()
        if eq:
            A = self._zoo(name, clauses, order)
        else:
            A = self._presentation(name, clauses, order)
        self.algebras[name] = A
        self.algebra = A
        self.loc = None
        return Record(index, f"algebra {name}", self._describe(A))

    def _clauses(self, body):
        """``kind(args) kind(args) flag`` → {kind: [args]}; bare flags map to []."""
        out = {}
        pos = 0
        body = body.strip()
        while pos < len(body):
            m = re.compile(rf"\s*({_NAME})\s*").match(body, pos)
            if not m:
                raise ParseError(f"unexpected {body[pos]!r}", pos)
            key = m.group(1)
            pos = m.end()
            if pos < len(body) and body[pos] == "(":
                depth, end = 0, pos
                while end < len(body):
                    depth += {"(": 1, ")": -1}.get(body[end], 0)
                    if depth == 0:
                        break
                    end += 1
                if depth:
                    raise ParseError("unbalanced '('", pos)
                out[key] = body[pos + 1:end]
                pos = end + 1
            else:
                out[key] = None
        return out

    def _zoo(self, name, clauses, order):
        kinds = {
            "weyl": (weyl_algebra, 2), "shift": (shift_algebra, 2),
            "integration": (integration_algebra, 2), "qshift": (q_shift_algebra, 3),
            "qweyl": (q_weyl_algebra, 3), "poly": (polynomial_ring, 1),
        }
        found = [k for k in clauses if k in kinds]
        if len(found) != 1:
            raise ParseError("expected one of " + ", ".join(kinds))
        kind = found[0]
        make, nparts = kinds[kind]
        parts = [_args(p) for p in split_top(clauses[kind] or "", ";")]
        if len(parts) != nparts:
            raise ParseError(f"{kind}(...) takes {nparts} ';'-separated lists")
        params = _args(clauses.get("params") or "")
        if kind in ("qshift", "qweyl"):
            return make(*parts, order=order, name=name)
        if kind == "poly":
            return make(parts[0], params=params, order=order, name=name)
        return make(*parts, params=params, order=order, name=name)

    def _presentation(self, name, clauses, order):
        if "vars" not in clauses:
            raise ParseError("algebra definition needs vars(...) or '= kind(...)'")
        variables = _args(clauses["vars"])
        params = _args(clauses.get("params") or "")
        field = CoefficientField(params)
        comm = GAlgebra(variables, {}, field=field, name=name + "_comm")
        idx = {v: i for i, v in enumerate(variables)}
        rels = {}
        pairs = None
        if clauses.get("weyl"):
            pairs = []
            for item in _args(clauses["weyl"]):
                xs, _, ds = item.partition(":")
                if xs.strip() not in idx or ds.strip() not in idx:
                    raise ParseError(f"weyl pair {item!r} names unknown variables")
                pairs.append((idx[xs.strip()], idx[ds.strip()]))
        for item in re.split(r"[;,]", clauses.get("relations") or ""):
            if not item.strip():
                continue
            lhs, eq, rhs = item.partition("=")
            if not eq:
                raise ParseError(f"relation {item.strip()!r} needs '='")
            ast = parse(lhs.strip(), set(variables))
            if not (
                getattr(ast, "op", None) == "*"
                and isinstance(ast.left, Name) and isinstance(ast.right, Name)
            ):
                raise ParseError(f"left side of {item.strip()!r} must be x_j*x_i")
            j, i = idx[ast.left.name], idx[ast.right.name]
            if not i < j:
                raise ParseError(
                    f"left side of {item.strip()!r} must put the later variable first"
                )
            rhs_el = parse_expression(rhs.strip(), comm)
            e = [0] * len(variables)
            e[i] += 1
            e[j] += 1
            e = tuple(e)
            c = rhs_el.coefficient(e)
            d = {k: v for k, v in rhs_el.terms.items() if k != e}
            rels[(i, j)] = (c, d)
        for x, dvar in pairs or ():
            i, j = min(x, dvar), max(x, dvar)
            if (i, j) not in rels:
                zero = (0,) * len(variables)
                rels[(i, j)] = (1, {zero: 1 if x < dvar else -1})
        return GAlgebra(variables, rels, order=order, weyl_pairs=pairs, name=name, field=field)

    @staticmethod
    def _describe(A):
        text = f"{','.join(A.variables)} over {A.field!r}, {A.order.name}"
        if A.is_weyl_type():
            text += ", weyl"
        return text

    def _use(self, name, index):
        if name in self.algebras:
            self.algebra = self.algebras[name]
            self.loc = None
        elif name in self.oresets:
            self.loc = self.oresets[name]
            self.algebra = self.loc.algebra
        else:
            raise UndefinedName(f"undefined algebra or Ore set {name!r}")
        return None

    def _oreset(self, rest, text, index):
        m = re.match(rf"^({_NAME})\s*=\s*(.+)$", rest, re.S)
        if not m:
            raise ParseError("expected 'oreset NAME = kind(...)'")
        name, body = m.groups()
        A = self._need_algebra()
        clauses = self._clauses(body)
        kinds = [k for k in ("monoidal", "geometric", "rational") if k in clauses]
        if len(kinds) != 1:
            raise InvalidOreSet("expected monoidal(...), geometric(...) or rational(...)")
        kind = kinds[0]
        data = _args(clauses[kind] or "")
        opts = {}
        if clauses.get("block"):
            block = [A.index(v) for v in _args(clauses["block"])]
            opts["block" if kind == "monoidal" else "x_block"] = block
        if kind == "monoidal":
            opts["bound"] = int(clauses["bound"]) if clauses.get("bound") else self.bound
        if kind == "geometric" and "unchecked" in clauses:
            opts["checked"] = False
        if kind == "rational":
            for v in data:
                if v not in A.variables:
                    raise ParseError(f"{v!r} is not a variable of {A.name}")
            S = make_ore_set(A, kind, data)
        else:
            S = make_ore_set(A, kind, [self._element(e) for e in data], **opts)
        loc = OreLocalization(S)
        self.oresets[name] = loc
        self.loc = loc
        value = str(S)
        if kind == "monoidal":
            value += f", g = {S.g}"
        if S.warnings:
            value += " (warning: " + "; ".join(S.warnings) + ")"
        return Record(index, f"oreset {name}", value)

    # -- values -----------------------------------------------------------------------

    def _need_algebra(self):
        if self.algebra is None:
            raise UndefinedName("no algebra defined")
        return self.algebra

    def _need_loc(self):
        if self.loc is None:
            raise UndefinedName("no active Ore set")
        return self.loc

    def _env(self):
        A = self.algebra
        return {k: v for k, v in self.values.items() if isinstance(v, Element) and v.algebra is A}

    def _element(self, text):
        A = self._need_algebra()
        text = text.strip()
        if text in self.values and not isinstance(self.values[text], Element):
            if isinstance(self.values[text], _Pending):
                return A.zero()
            raise ParseError(f"{text!r} is not a ring element")
        return parse_expression(text, A, self._env())

    def _value(self, text):
        text = text.strip()
        if text.startswith("["):
            return self._fraction_literal(text)
        if re.fullmatch(_NAME, text) and text in self.values:
            return self.values[text]
        m = _CALL.match(text)
        if m and m.group(1) in OPS:
            return self._op(m.group(1), m.group(2))
        return self._element(text)

    def _fraction_literal(self, text):
        if not text.endswith("]"):
            raise ParseError("unbalanced '['", len(text))
        parts = split_top(text[1:-1], ",")
        if len(parts) == 2:
            parts += ["_", "_"]
        if len(parts) != 4:
            raise ParseError("fraction literal is [s, r] or [s, r, p, t]")
        loc = self._need_loc()
        s, r, p, t = [None if x == "_" else self._element(x) for x in parts]
        if (s is None) != (r is None) or (p is None) != (t is None):
            raise ParseError("fraction pairs must be given completely or as '_, _'")
        left = (s, r) if s is not None else None
        right = (p, t) if p is not None else None
        return Fraction(loc, left=left, right=right)

    def _fraction(self, text):
        v = self._value(text)
        if isinstance(v, (Fraction, _Pending)):
            return v
        if isinstance(v, Element):
            return self._need_loc().from_element(v)
        raise ParseError(f"{text!r} is not a fraction")

    def _gens(self, items):
        out = []
        for it in items:
            v = self.values.get(it.strip()) if re.fullmatch(_NAME, it.strip()) else None
            if isinstance(v, GroebnerBasis):
                out.extend(v.gens)
            else:
                out.append(self._element(it))
        return out

    def _op(self, op, argtext):
        lo, hi = OPS[op]
        groups = split_top(argtext, ";")
        args = _args(argtext) if len(groups) == 1 else None
        n = len(args) if args is not None else sum(len(_args(g)) for g in groups)
        if n < lo or (hi is not None and n > hi):
            raise ParseError(f"{op} takes {lo}{'' if hi == lo else '+'} arguments, got {n}")
        frac_ops = {"add", "sub", "mul", "neg", "eq", "isinvertible", "invert",
                    "convertLR", "convertRL", "cancel"}
        if op in frac_ops:
            fs = [self._fraction(a) for a in args]
            if self.check_only or any(isinstance(f, _Pending) for f in fs):
                return _Pending()
            loc = fs[0].loc
            if op == "add":
                return loc.add(*fs)
            if op == "sub":
                return loc.sub(*fs)
            if op == "mul":
                return loc.mul(*fs)
            if op == "neg":
                return loc.neg(*fs)
            if op == "eq":
                return loc.are_equal(*fs)
            if op == "isinvertible":
                return loc.is_invertible(*fs)
            if op == "invert":
                return loc.invert(*fs)
            if op == "convertLR":
                return loc.convert_left_to_right(*fs)
            if op == "convertRL":
                return loc.convert_right_to_left(*fs)
            return loc.cancel(*fs)
        if op in ("nf", "eliminate"):
            if len(groups) != 2:
                raise ParseError(f"{op} takes 'first; generators'")
            head = _args(groups[0])
            gens = self._gens(_args(groups[1]))
            if op == "nf":
                if len(head) != 1:
                    raise ParseError("nf takes one element before ';'")
                f = self._element(head[0])
                return _Pending() if self.check_only else left_nf(f, left_gb(gens, algebra=self.algebra))
            A = self._need_algebra()
            for v in head:
                if v not in A.variables:
                    raise ParseError(f"{v!r} is not a variable of {A.name}")
            return _Pending() if self.check_only else eliminate(gens, head, algebra=A)
        if op in ("ore", "rightOre", "kernel", "disprove", "isInS"):
            els = [self._element(a) for a in args]
            if op == "kernel":
                return _Pending() if self.check_only else kernel_phi(*els)
            loc = self._need_loc()
            if self.check_only:
                return _Pending()
            if op == "ore":
                return loc.left_ore(*els)
            if op == "rightOre":
                return loc.right_ore(*els)
            if op == "disprove":
                return loc.disprove(*els)
            return loc.S.contains(*els)
        gens = self._gens(args)
        if self.check_only:
            return _Pending()
        if op == "gb":
            return left_gb(gens, algebra=self.algebra)
        if op == "syz":
            return left_syzygies(gens)
        if op == "rsyz":
            return right_syzygies(gens)
        # intersect: J & S for the active Ore set
        loc = self._need_loc()
        J = left_gb(gens, algebra=self.algebra)
        cert = loc.S.emptiness(J)
        return cert


def render(records, fmt="plain"):
    return "\n".join(r.json() if fmt == "json" else r.plain() for r in records)
