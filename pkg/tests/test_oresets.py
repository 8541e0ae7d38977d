import pytest

from orelocal import (
    BoundExceeded,
    Emptiness,
    GAlgebra,
    GeometricOreSet,
    IntersectionEmpty,
    InvalidOreSet,
    geometric_intersection,
    kernel_phi,
    left_gb,
    make_ore_set,
    monoidal_emptiness_certificate,
    monoidal_intersection,
    rational_intersection,
)

from _support import ansatz_left_multiple, weyl_oracle_product, zoo

ZOO = zoo()
A1, A2, S1, K2 = ZOO["A1"], ZOO["A2"], ZOO["S1"], ZOO["K[x,y]"]


# -- construction -------------------------------------------------------------------


def test_monoidal_caches_squarefree_product():
    x, y, dx, dy = A2.gens()
    S = make_ore_set(A2, "monoidal", [x + 3, x * y + y])
    assert str(S.g) == "x^2*y+4*x*y+3*y"
    T = make_ore_set(A2, "monoidal", [x + 3, (x + 3) ** 2])
    assert str(T.g) == "x+3"


def test_geometric_on_weyl_is_valid():
    x, y, dx, dy = A2.gens()
    S = make_ore_set(A2, "geometric", [y - 3])
    assert S.x_block == (0, 1)
    assert S.warnings


def test_geometric_on_shift_algebra_rejected():
    x, s = S1.gens()
    with pytest.raises(InvalidOreSet):
        make_ore_set(S1, "geometric", [x + 1])


def test_invalid_monoidal_inputs():
    x, d = A1.gens()
    with pytest.raises(InvalidOreSet):
        make_ore_set(A1, "monoidal", [x * d])
    with pytest.raises(InvalidOreSet):
        make_ore_set(A1, "monoidal", [A1.const(2)])
    with pytest.raises(InvalidOreSet):
        make_ore_set(A1, "monoidal", [A1.zero()])
    with pytest.raises(InvalidOreSet):
        make_ore_set(A1, "monoidal", [x], block=[1])


def test_invalid_geometric_inputs():
    x, y, dx, dy = A2.gens()
    with pytest.raises(InvalidOreSet):
        make_ore_set(A2, "geometric", [A2.one()])
    with pytest.raises(InvalidOreSet):
        make_ore_set(A2, "geometric", [x + 1, x])
    with pytest.raises(InvalidOreSet):
        make_ore_set(A2, "geometric", [dx])


def test_rational_block_must_close():
    B = GAlgebra(["x", "y", "z"], {(1, 2): (1, {(1, 0, 0): 1})})
    with pytest.raises(InvalidOreSet):
        make_ore_set(B, "rational", ["y", "z"])
    assert make_ore_set(B, "rational", ["x", "y", "z"]).indices == (0, 1, 2)
    with pytest.raises(InvalidOreSet):
        make_ore_set(B, "rational", [])


# -- membership -----------------------------------------------------------------------


def test_monoidal_membership():
    x, y, dx, dy = A2.gens()
    S = make_ore_set(A2, "monoidal", [x + 3, x * y + y])
    assert S.contains(x**2 * y + 4 * x * y + 3 * y)
    assert S.contains(-5 * (x + 3) ** 3)
    assert S.contains(A2.const(7))
    assert not S.contains(x + 1)
    assert not S.contains(A2.zero())
    assert not S.contains(dx)


def test_monoidal_membership_backtracks():
    x, y = K2.gens()
    S = make_ore_set(K2, "monoidal", [x, x * (y + 1)])
    # greedy division by x first strands the factor y+1
    assert S.contains(x**2 * (y + 1))
    assert S.contains(x**3 * (y + 1) ** 2)
    assert not S.contains(x * (y + 1) ** 2)
    assert not S.contains(y + 1)


def test_geometric_membership():
    x, y, dx, dy = A2.gens()
    S = make_ore_set(A2, "geometric", [y - 3])
    assert not S.contains(y - 3)
    assert S.contains(x)
    assert not S.contains(x * (y - 3))
    assert not S.contains(dx)


def test_rational_membership():
    Q = ZOO["Sq2"]
    x, y, Qx, Qy = Q.gens()
    S = make_ore_set(Q, "rational", ["x", "y"])
    q = Q.param("q")
    assert S.contains(x**4 + (q**2 + 1) * x**2 + q**2)
    assert not S.contains(Qx)
    assert not S.contains(Q.zero())


# -- monoidal intersection -------------------------------------------------------------


def _min_power_by_ansatz(g, s, r, limit):
    """Least m with g^m*r = b*s for some b of degree <= 3, by linear algebra
    over the Leibniz-rule product (independent of the Gröbner engine)."""
    A = s.algebra
    mult = lambda a, b: weyl_oracle_product(A, a, b)
    for m in range(1, limit + 1):
        if ansatz_left_multiple(mult(g**m, r), s, 3, product=mult) is not None:
            return m
    return None


def test_monoidal_intersection_oracles():
    x, d = A1.gens()
    assert monoidal_intersection(kernel_phi(x, d), x) == 2
    assert monoidal_intersection(kernel_phi(x**2, d), x) == 3
    assert _min_power_by_ansatz(x, x, d, 3) == 2
    assert _min_power_by_ansatz(x, x**2, d, 3) == 3


def test_monoidal_intersection_principal():
    x, d = A1.gens()
    g = x**2 + 1
    assert monoidal_intersection(left_gb([g]), g) == 1
    assert monoidal_intersection(left_gb([A1.one()]), g) == 0


def test_monoidal_intersection_bound_and_proof():
    x, d = A1.gens()
    with pytest.raises(BoundExceeded):
        monoidal_intersection(left_gb([x**5]), x, bound=3)
    with pytest.raises(IntersectionEmpty):
        monoidal_intersection(left_gb([d]), x)


def test_monoidal_emptiness_certificates():
    xs, s = S1.gens()
    S = make_ore_set(S1, "monoidal", [xs])
    cert = monoidal_emptiness_certificate(left_gb([xs + 1]), S)
    assert cert.status is Emptiness.EMPTY and cert.method == "radical"
    x, d = A1.gens()
    T = make_ore_set(A1, "monoidal", [x])
    assert monoidal_emptiness_certificate(kernel_phi(x, d), T).status is Emptiness.NONEMPTY
    assert monoidal_emptiness_certificate(left_gb([A1.one()]), T).status is Emptiness.NONEMPTY


def test_monoidal_emptiness_unknown_when_not_eliminable():
    I = ZOO["Int1"]
    x, i = I.gens()
    S = make_ore_set(I, "monoidal", [x])
    cert = monoidal_emptiness_certificate(left_gb([x**2 + i]), S)
    assert cert.status is Emptiness.UNKNOWN


def test_monoidal_emptiness_agrees_with_search():
    x, y, dx, dy = A2.gens()
    S = make_ore_set(A2, "monoidal", [x, y])
    J = kernel_phi(x * y, dx + dy)
    assert monoidal_emptiness_certificate(J, S).status is Emptiness.NONEMPTY
    m = monoidal_intersection(J, S.g)
    assert J.contains(S.g**m) and not J.contains(S.g ** (m - 1))


# -- geometric and rational -------------------------------------------------------------


def test_geometric_intersection_examples():
    xs, s = S1.gens()
    P = GeometricOreSet(S1, [xs + 1], x_block=[0], checked=False)
    res = geometric_intersection(left_gb([xs + 1]), P)
    assert res.empty
    P0 = GeometricOreSet(S1, [xs], x_block=[0], checked=False)
    res = geometric_intersection(left_gb([xs + 1]), P0)
    assert not res.empty
    assert str(res.representative) == "x+1"
    assert [str(m) for _, m in res.pairs] == ["1"]
    x, y, dx, dy = A2.gens()
    P2 = make_ore_set(A2, "geometric", [y - 3])
    assert geometric_intersection(left_gb([y - 3]), P2).empty


def test_rational_intersection_examples():
    x, d = A1.gens()
    B = make_ore_set(A1, "rational", ["x"])
    assert rational_intersection([d], B).is_zero()
    assert [str(g) for g in rational_intersection([x], B).gens] == ["x"]
    assert [str(g) for g in rational_intersection([A1.one()], B).gens] == ["1"]


def test_selection_is_deterministic():
    x, d = A1.gens()
    S = make_ore_set(A1, "monoidal", [x])
    J = kernel_phi(x, d)
    assert str(S.select(J)) == str(S.select(J)) == "x^2"


def test_opposite_sets_mirror():
    x, y, dx, dy = A2.gens()
    for S in (
        make_ore_set(A2, "monoidal", [x + 3]),
        make_ore_set(A2, "geometric", [y - 3]),
        make_ore_set(A2, "rational", ["y", "dy"]),
    ):
        op = S.opposite()
        assert op.opposite() is S
        for p in (x + 3, y - 3, dy, y * dy + 1):
            assert op.contains(A2.to_opposite(p)) == S.contains(p)
