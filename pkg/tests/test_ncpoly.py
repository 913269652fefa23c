from hypothesis import given, settings, strategies as st

from tannakit.exactlin import QQ
from tannakit.ncpoly import (
    NCPoly,
    PresentedAlgebra,
    graded_dim,
    orient,
    poly_to_signed_terms,
    rewrite_reduce,
    span_equal,
)


def poly(terms):
    return NCPoly(QQ, terms)


def test_arithmetic():
    p = poly({(0, 1): 1})
    q = poly({(1, 0): 1})
    assert (p - q) + q == p
    assert (p * q).terms == {(0, 1, 1, 0): QQ.of(1)}
    assert p.scale(0).is_zero()
    assert (p - p).is_zero()


def test_substitute_and_rename():
    p = poly({(0, 1): 1})
    table = {1: poly({(2,): 1, (): 1})}  # x1 -> x2 + 1
    s = p.substitute(table)
    assert s == poly({(0, 2): 1, (0,): 1})
    assert p.rename({0: 5, 1: 7}) == poly({(5, 7): 1})


def test_pretty_and_wire_form():
    p = poly({(0, 1): 1, (1, 0): -1, (): QQ.of("1/2")})
    assert p.pretty(["x", "y"]) == "x*y - y*x + 1/2"
    wire = poly_to_signed_terms(p, ["x", "y"])
    assert {"coef": "1/2", "word": []} in wire
    assert {"coef": "-1", "word": ["y", "x"]} in wire


def test_graded_dim_commutative_plane():
    rels = [poly({(0, 1): 1, (1, 0): -1})]
    a = PresentedAlgebra(QQ, ["x", "y"], [1, 1], rels)
    assert [graded_dim(a, n) for n in range(5)] == [1, 2, 3, 4, 5]


def test_graded_dim_free():
    a = PresentedAlgebra(QQ, ["x", "y"], [1, 1], [])
    assert [graded_dim(a, n) for n in range(4)] == [1, 2, 4, 8]


def test_span_equal_detects_rescaled_generators():
    r1 = [poly({(0, 1): 1, (1, 0): -1})]
    r2 = [poly({(0, 1): -3, (1, 0): 3})]
    assert span_equal(r1, r2, 2, 3)
    r3 = [poly({(0, 1): 1})]
    assert not span_equal(r1, r3, 2, 3)


def test_span_equal_is_ideal_span_not_list_equality():
    r = poly({(0, 1): 1, (1, 0): -1})
    shifted = poly({(0,): 1}) * r  # x * (xy - yx)
    assert span_equal([r], [r, shifted], 2, 3)


def test_orient_picks_deglex_leading_monomial():
    rel = poly({(0, 1): 2, (1, 0): -2})
    [(lead, rest)] = orient([rel])
    assert lead == (1, 0)  # (1,0) > (0,1) lexicographically at equal length
    assert rest == poly({(0, 1): 1})


def test_rewrite_reduce_membership():
    # commutative plane: yx -> xy
    rules = orient([poly({(0, 1): 1, (1, 0): -1})])
    p = poly({(1, 0, 0): 1, (0, 0, 1): -1})  # yxx - xxy
    res = rewrite_reduce(p, rules)
    assert res.is_zero
    q = poly({(1, 0): 1})
    assert not rewrite_reduce(q, rules).is_zero


def test_rewrite_reduce_pass_cap():
    rules = orient([poly({(0, 1): 1, (1, 0): -1})])
    p = poly({(1, 0): 1, (0, 1): -1})
    res = rewrite_reduce(p, rules, max_passes=0)
    assert not res.complete


def test_check_homogeneous():
    import pytest

    good = PresentedAlgebra(
        QQ, ["a", "delta"], [1, 2], [poly({(0, 0): 1, (1,): -1})]
    )
    good.check_homogeneous()
    bad = PresentedAlgebra(QQ, ["a"], [1], [poly({(0, 0): 1, (0,): 1})])
    with pytest.raises(ValueError):
        bad.check_homogeneous()


monomials = st.lists(st.integers(0, 1), min_size=0, max_size=3).map(tuple)
polys = st.dictionaries(monomials, st.integers(-3, 3), max_size=4).map(poly)


@settings(max_examples=50, deadline=None)
@given(polys, polys, polys)
def test_multiplication_associative_distributive(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=50, deadline=None)
@given(polys)
def test_reduction_fixes_normal_forms(p):
    rules = orient([poly({(0, 1): 1, (1, 0): -1})])
    res = rewrite_reduce(p, rules, max_passes=1000)
    assert res.complete
    again = rewrite_reduce(res.poly, rules, max_passes=1000)
    assert again.poly == res.poly and again.passes == 0
