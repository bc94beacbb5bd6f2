import pytest
from hypothesis import given, strategies as st

from conftest import monomials
from reesaci.algebra import (
    Binomial,
    Layout,
    LayoutError,
    TermOrder,
    block_eliminate,
    cheapest_variable,
    compare_tau_prime,
    degree,
    div,
    divides,
    gcd,
    is_coprime,
    lcm,
    leq_componentwise,
    lex,
    mul,
    one,
    orient_binomial,
    tau,
    tau_prime_key,
)

L3 = Layout.rees(3)


def test_lcm_gcd_mul():
    assert lcm((1, 0, 2), (0, 3, 2)) == (1, 3, 2)
    assert gcd((1, 0, 2), (0, 3, 2)) == (0, 0, 2)
    assert mul((1, 0, 2), (0, 3, 2)) == (1, 3, 4)
    assert one(3) == (0, 0, 0)


def test_divides_and_div():
    assert divides((1, 1, 0), (1, 2, 0))
    assert div((1, 2, 0), (1, 1, 0)) == (0, 1, 0)
    assert not divides((2, 0, 0), (1, 2, 0))
    with pytest.raises(ValueError):
        div((1, 2, 0), (2, 0, 0))


def test_length_mismatch():
    with pytest.raises(LayoutError):
        mul((1, 2), (1, 2, 3))


def test_degree_slice():
    u = L3.monomial(W=3, X1=1)
    assert degree(u, [L3.index("W")]) == 3
    assert degree(u) == 4


def test_layout_format():
    assert L3.format(L3.monomial(T1=3, X2=1)) == "T1^3*X2"
    assert L3.format(one(7)) == "1"
    assert L3.names == ("T1", "T2", "T3", "X1", "X2", "X3", "W")


def test_tau_examples():
    order = tau(3)
    assert order.compare(L3.monomial(W=1), L3.monomial(X3=1, T1=100)) == 1
    assert order.compare(L3.monomial(T1=3, X2=1), L3.monomial(T2=3, X1=1)) == 1
    assert order.compare(L3.monomial(T1=1), L3.monomial(T2=1)) == 1
    assert order.compare(L3.monomial(X1=1), L3.monomial(T1=9, T2=9, T3=9)) == 1


def test_tau_prime_examples():
    assert compare_tau_prime((0, 0, 0), (0, 0, 1)) == -1
    assert compare_tau_prime((1, 1, 0), (2, 0, 0)) == -1
    assert compare_tau_prime((1, 0, 0), (1, 1, 0)) == -1
    assert compare_tau_prime((1, 2, 0), (1, 2, 0)) == 0


def test_leq_componentwise():
    assert leq_componentwise((1, 0, 1), (1, 1, 1))
    assert not leq_componentwise((2, 0, 0), (1, 1, 1))
    assert leq_componentwise((2, 1, 0), (2, 1, 0))


def test_orient():
    order = tau(3)
    u, v = L3.monomial(T1=3, X2=1), L3.monomial(T2=3, X1=1)
    assert orient_binomial(order, v, u) == Binomial(u, v)
    assert orient_binomial(order, u, u) is None
    f = orient_binomial(order, L3.monomial(T1=5), L3.monomial(W=1))
    assert f.lead == L3.monomial(W=1)
    assert f.format(L3) == "W - T1^5"


def test_monomial_binomial_format():
    assert Binomial(L3.monomial(W=2)).format(L3) == "W^2"
    assert Binomial(L3.monomial(W=2)).terms() == (L3.monomial(W=2),)


ORDERS = [
    tau(3),
    lex(range(7)),
    TermOrder("grevlex", tuple(range(7))),
    TermOrder("grevlex", tuple(range(7)), weights=(1, 1, 1, 3, 3, 3, 3)),
    cheapest_variable(0, 7),
    block_eliminate((6,), tau(3)),
]


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.kind)
@given(monomials(7), monomials(7), monomials(7))
def test_order_is_monomial_order(order, u, v, w):
    c = order.compare(u, v)
    assert c == -order.compare(v, u)
    assert (c == 0) == (u == v)
    assert order.compare(mul(u, w), mul(v, w)) == c
    if any(w):
        assert order.compare(mul(u, w), u) == 1


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: o.kind)
@given(st.lists(monomials(7), min_size=3, max_size=3))
def test_order_transitive(order, us):
    a, b, c = sorted(us, key=order.key)
    assert order.compare(a, b) <= 0 and order.compare(b, c) <= 0 and order.compare(a, c) <= 0


def test_cheapest_variable_is_last():
    o = cheapest_variable(2, 4)
    assert o.compare((0, 0, 5, 1), (0, 1, 5, 0)) == -1
    # same degree: fewer powers of the cheap variable wins
    assert o.compare((1, 0, 0, 0), (0, 0, 1, 0)) == 1


def test_block_eliminates():
    o = block_eliminate((0,), lex((1, 2)))
    assert o.compare((1, 0, 0), (0, 9, 9)) == 1


@given(monomials(4), monomials(4))
def test_tau_prime_total(c, d):
    k = compare_tau_prime(c, d)
    assert k == -compare_tau_prime(d, c)
    assert (k == 0) == (c == d)
    if sum(c) < sum(d):
        assert k == -1


@given(monomials(4), monomials(4))
def test_gcd_lcm_identity(u, v):
    assert mul(gcd(u, v), lcm(u, v)) == mul(u, v)
    assert divides(gcd(u, v), u) and divides(u, lcm(u, v))
    assert is_coprime(u, v) == (gcd(u, v) == one(4))


def test_tau_prime_key_sorted_small():
    cs = sorted([(2, 0, 0), (0, 0, 1), (1, 1, 0), (0, 2, 0)], key=tau_prime_key)
    assert cs == [(0, 0, 1), (0, 2, 0), (1, 1, 0), (2, 0, 0)]
