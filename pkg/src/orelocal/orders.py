"""Monomial and module orders on exponent vectors.

An order is represented by a sort key: ``order.key(a) > order.key(b)`` iff the
monomial with exponent vector ``a`` is larger.  Keys are plain tuples so they
can be compared and cached cheaply.
"""

from __future__ import annotations

from dataclasses import dataclass, field

BASIC_KINDS = ("lex", "deglex", "degrevlex")

# Short aliases accepted by the frontend.
ALIASES = {"lp": "lex", "Dp": "deglex", "dp": "degrevlex"}


def _basic_key(kind, exp):
    if kind == "degrevlex":
        return (sum(exp), tuple(-e for e in reversed(exp)))
    if kind == "deglex":
        return (sum(exp), exp)
    return exp


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``kind`` is one of ``lex``, ``deglex``, ``degrevlex`` or ``block``.  With
    ``reverse=True`` the order compares reversed exponent vectors; this is how
    the order of an opposite algebra is obtained without breaking the ordering
    condition on the relations.  Block orders compare the sub-vectors of
    ``blocks`` one after another, each with its own basic order.
    """

    kind: str = "degrevlex"
    reverse: bool = False
    blocks: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in BASIC_KINDS and self.kind != "block":
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and not self.blocks:
            raise ValueError("block order needs at least one block")

    @classmethod
    def named(cls, name):
        return cls(ALIASES.get(name, name))

    def key(self, exp):
        try:
            return self._cache[exp]
        except KeyError:
            pass
        if self.kind == "block":
            k = tuple(
                _basic_key(kind, _sub(exp, idx, rev)) for idx, kind, rev in self.blocks
            )
        else:
            k = _basic_key(self.kind, exp[::-1] if self.reverse else exp)
        self._cache[exp] = k
        return k

    def restricted(self, indices):
        """The order induced on the sub-vector at ``indices`` (basic kinds only)."""
        if self.kind == "block":
            raise ValueError("cannot restrict a block order")
        return MonomialOrder(self.kind, self.reverse)

    def elimination(self, eliminate, nvars):
        """Block order with the variables in ``eliminate`` dominating the rest."""
        if self.kind == "block":
            raise ValueError("elimination orders are built from a basic order")
        elim = tuple(sorted(eliminate))
        keep = tuple(i for i in range(nvars) if i not in set(elim))
        blocks = tuple((idx, self.kind, self.reverse) for idx in (elim, keep) if idx)
        return MonomialOrder("block", blocks=blocks)

    def opposite(self):
        if self.kind == "block":
            raise ValueError("block orders are not carried to the opposite algebra")
        return MonomialOrder(self.kind, not self.reverse)

    @property
    def name(self):
        if self.kind == "block":
            inner = "|".join(
                f"{kind}{'~' if rev else ''}({','.join(map(str, idx))})"
                for idx, kind, rev in self.blocks
            )
            return f"block[{inner}]"
        return self.kind + ("~" if self.reverse else "")


def _sub(exp, idx, rev):
    sub = tuple(exp[i] for i in idx)
    return sub[::-1] if rev else sub


@dataclass(frozen=True)
class ModuleOrder:
    """Order on terms ``(component, exponent)`` of a free module.

    Lower component indices are larger.  With ``pot`` (position over term) the
    component decides first; otherwise the monomial does.
    """

    order: MonomialOrder
    pot: bool = True

    def key(self, term):
        comp, exp = term
        if self.pot:
            return (-comp, self.order.key(exp))
        return (self.order.key(exp), -comp)
