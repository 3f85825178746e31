# -*- coding: utf-8 -*-
import pytest
from hypothesis import given, strategies as st
from modules.cyclotomic import (
    CyclotomicRing, PrimeSystem, crt_lift, crt_split, find_prime_system, is_inert, norm_bound_check, otimes,
    primorial_ratio
)
from modules.errors import ArityMismatch, InvalidResidue, RingMismatch

GAUSSIAN = CyclotomicRing(4)
coefficients = st.tuples(st.integers(-50, 50), st.integers(-50, 50))


def test_gaussian_product():
    i = GAUSSIAN.element((0, 1))
    assert (i * i).coeffs == (-1, 0)
    assert otimes(GAUSSIAN.element((1, 2)), GAUSSIAN.element((3, -1))).coeffs == (5, 5)


def test_integer_ring_is_one_dimensional():
    ring = CyclotomicRing(2)
    assert ring.d == 1
    assert ring.multiply((3,), (-4,)) == (-12,)


def test_unsupported_and_mixed_rings():
    with pytest.raises(RingMismatch):
        CyclotomicRing(3)
    with pytest.raises(RingMismatch):
        otimes(GAUSSIAN.element((1, 0)), CyclotomicRing(2).element(1))


@given(left=coefficients, right=coefficients)
def test_norm_bound_and_multiplicative_norm(left, right):
    r, u = GAUSSIAN.element(left), GAUSSIAN.element(right)
    assert norm_bound_check(r, u).holds
    assert (r * u).norm_sq == r.norm_sq * u.norm_sq


@given(left=coefficients, right=coefficients)
def test_exact_division_inverts_the_product(left, right):
    if not any(right):
        return
    product = GAUSSIAN.multiply(left, right)
    assert GAUSSIAN.divide_exact(product, right) == left


def test_prime_systems():
    gaussian = find_prime_system(4, 3, 1, 4)
    assert gaussian.primes == (3, 7, 11, 19)
    assert gaussian.Q == 4389
    odd = find_prime_system(2, 1, 2, 4)
    assert odd.primes == (5, 7, 11)
    assert odd.Q == 385


def test_prime_system_checks():
    with pytest.raises(InvalidResidue):
        find_prime_system(4, 2, 1, 3)
    with pytest.raises(ArityMismatch):
        find_prime_system(4, 3, 3, 2)
    with pytest.raises(InvalidResidue):
        PrimeSystem.explicit(4, [3, 5])


def test_inert_primes_of_the_gaussian_integers():
    for q in find_prime_system(4, 3, 1, 8).primes:
        assert is_inert(q, GAUSSIAN)
        assert all((x * x + 1) % q for x in range(q))
    assert not is_inert(5, GAUSSIAN)


def test_crt_round_trip():
    system = PrimeSystem.explicit(4, [3, 7])
    residues = crt_split((5, 5), system)
    assert residues == [(2, 2), (5, 5)]
    assert crt_lift(residues, system).coeffs == (5, 5)
    with pytest.raises(ArityMismatch):
        crt_lift([(1, 1)], system)


def test_primorial_ratio_is_reported():
    ratio = primorial_ratio(find_prime_system(4, 3, 1, 4))
    assert ratio.log_product == pytest.approx(8.3868, abs=1e-3)
    assert ratio.m_log_m == pytest.approx(5.5452, abs=1e-3)
    assert ratio.ratio == pytest.approx(1.512, abs=1e-2)


@pytest.mark.parametrize("ring", [CyclotomicRing(2), CyclotomicRing(4)], ids=["integers", "gaussian"])
@given(data=st.data())
def test_product_is_a_commutative_ring_with_one(ring, data):
    values = st.tuples(*[st.integers(-30, 30)] * ring.d)
    a, b, c = data.draw(values), data.draw(values), data.draw(values)
    assert ring.multiply(a, b) == ring.multiply(b, a)
    assert ring.multiply(ring.multiply(a, b), c) == ring.multiply(a, ring.multiply(b, c))
    assert ring.multiply(a, ring.add(b, c)) == ring.add(ring.multiply(a, b), ring.multiply(a, c))
    assert ring.multiply(a, ring.one()) == a
    assert ring.multiply(a, ring.zero()) == ring.zero()


@given(left=coefficients, right=coefficients)
def test_gaussian_product_is_complex_multiplication(left, right):
    product = complex(*left) * complex(*right)
    assert GAUSSIAN.multiply(left, right) == (int(product.real), int(product.imag))
