"""Shared helpers for the test suite: random elements and independent oracles."""

from __future__ import annotations

import random
from math import comb, factorial

import sympy

from orelocal import (
    integration_algebra,
    polynomial_ring,
    q_shift_algebra,
    q_weyl_algebra,
    shift_algebra,
    weyl_algebra,
)


def zoo():
    """One instance of every algebra family, keyed by a short label."""
    return {
        "K[x,y]": polynomial_ring(["x", "y"]),
        "A1": weyl_algebra(["x"], ["dx"]),
        "A2": weyl_algebra(["x", "y"], ["dx", "dy"]),
        "S1": shift_algebra(["x"], ["s"]),
        "Sq2": q_shift_algebra(["x", "y"], ["Qx", "Qy"], ["q", "q"]),
        "Aq1": q_weyl_algebra(["x"], ["d"], ["q"]),
        "Int1": integration_algebra(["x"], ["I"]),
    }


def random_coeff(A, rng):
    K = A.field
    c = K(rng.choice([-3, -2, -1, 1, 1, 2, 3, 5]))
    if K.params and rng.random() < 0.3:
        c = c * K.param(K.params[0]) + K(rng.randint(-2, 2))
        if not c:
            c = K.one
    if rng.random() < 0.15:
        c = c / K(rng.choice([2, 3, 7]))
    return c


def random_exp(n, maxdeg, rng, indices=None):
    indices = list(range(n)) if indices is None else list(indices)
    e = [0] * n
    for _ in range(rng.randint(0, maxdeg)):
        e[rng.choice(indices)] += 1
    return tuple(e)


def random_element(A, rng, maxdeg=3, terms=3, indices=None, nonzero=True):
    while True:
        d = {}
        for _ in range(rng.randint(1, terms)):
            d[random_exp(A.n, maxdeg, rng, indices)] = random_coeff(A, rng)
        f = A.element(d)
        if f or not nonzero:
            return f


def rng(seed):
    return random.Random(seed)


# ---------------------------------------------------------------------------
# Weyl algebra oracle: normal ordering by the Leibniz rule
# ---------------------------------------------------------------------------


def weyl_oracle_product(A, a, b):
    """Product in the Weyl algebra from the closed formula
    d^k x^l = sum_j C(k,j) l!/(l-j)! x^(l-j) d^(k-j), independent of the
    relation-rewriting engine."""
    n = A.n // 2
    out = {}
    for ea, ca in a.terms.items():
        for eb, cb in b.terms.items():
            # x^alpha d^beta * x^gamma d^delta
            alpha, beta = ea[:n], ea[n:]
            gamma, delta = eb[:n], eb[n:]
            per_var = []
            for i in range(n):
                k, l = beta[i], gamma[i]
                opts = []
                for j in range(min(k, l) + 1):
                    coef = comb(k, j) * factorial(l) // factorial(l - j)
                    opts.append((alpha[i] + l - j, k - j + delta[i], coef))
                per_var.append(opts)
            combos = [((), ())]
            coefs = [1]
            for opts in per_var:
                new_combos, new_coefs = [], []
                for (xs, ds), c in zip(combos, coefs):
                    for xe, de, cc in opts:
                        new_combos.append((xs + (xe,), ds + (de,)))
                        new_coefs.append(c * cc)
                combos, coefs = new_combos, new_coefs
            for (xs, ds), c in zip(combos, coefs):
                e = xs + ds
                out[e] = out.get(e, 0) + ca * cb * c
    return A.element({e: c for e, c in out.items() if c})


# ---------------------------------------------------------------------------
# undetermined-coefficient ansatz
# ---------------------------------------------------------------------------


def monomials_upto(n, deg):
    out = []

    def rec(prefix, left, k):
        if k == n:
            out.append(tuple(prefix))
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e, k + 1)

    rec([], deg, 0)
    return out


def ansatz_left_multiple(target, s, deg, product=None):
    """Is there b with total degree <= deg and b*s == target?

    Sets up the linear system in the unknown coefficients of b and solves it
    with sympy; returns b or None.  ``product`` overrides the multiplication.
    """
    A = s.algebra
    mult = product or (lambda a, b: a * b)
    monos = monomials_upto(A.n, deg)
    cols = [mult(A.monomial(m), s) for m in monos]
    rows = sorted({e for col in cols for e in col.terms} | set(target.terms))
    to_sym = lambda c: sympy.Rational(int(c.numerator), int(c.denominator))
    M = sympy.Matrix(
        [[to_sym(col.coefficient(e)) for col in cols] for e in rows]
    )
    rhs = sympy.Matrix([to_sym(target.coefficient(e)) for e in rows])
    try:
        sol, params = M.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    sol = sol.subs({p: 0 for p in params})
    return A.element({m: sympy.Rational(v) for m, v in zip(monos, sol) if v})
