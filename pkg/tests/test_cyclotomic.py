"""cyclotomic: exact construction, classical identities, coefficient facts.

Oracles: the defining product prod_{d|n} Phi_d(x) = x^n - 1 checked with
an independent schoolbook polynomial multiply, integer-point evaluation
of the Mobius product identity, and trial-division totients.
"""

import random

import pytest

from conftest import naive_totient
from pzcheck import IntPolynomial, height
from pzcheck.cyclotomic import cyclotomic


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- IntPolynomial container --------------------------------------------


def test_polynomial_normalization():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial([]).degree == -1
    assert IntPolynomial([0, 0]).degree == -1


def test_polynomial_coefficient_access():
    p = IntPolynomial([3, 0, -1])
    assert p.coefficient(0) == 3
    assert p.coefficient(2) == -1
    assert p.coefficient(5) == 0
    with pytest.raises(ValueError):
        p.coefficient(-1)


def test_polynomial_evaluation_and_equality():
    p = IntPolynomial([1, 0, -1, 1])  # 1 - x^2 + x^3
    assert p(0) == 1
    assert p(2) == 1 - 4 + 8
    assert p(-3) == 1 - 9 - 27
    assert p == IntPolynomial((1, 0, -1, 1, 0))
    assert hash(p) == hash(IntPolynomial([1, 0, -1, 1]))


# -- small closed forms --------------------------------------------------


def test_first_cyclotomics_explicitly():
    assert cyclotomic(1) == IntPolynomial([-1, 1])
    assert cyclotomic(2) == IntPolynomial([1, 1])
    assert cyclotomic(3) == IntPolynomial([1, 1, 1])
    assert cyclotomic(4) == IntPolynomial([1, 0, 1])
    assert cyclotomic(6) == IntPolynomial([1, -1, 1])
    assert cyclotomic(12) == IntPolynomial([1, 0, -1, 0, 1])


def test_prime_index_is_all_ones():
    for p in (2, 3, 5, 7, 11, 13):
        assert cyclotomic(p).coeffs == (1,) * p


def test_phi_12_by_integer_point_identity():
    # (x^12 - 1)(x^2 - 1) = Phi_12(x) (x^6 - 1)(x^4 - 1) for all x;
    # checking at integer points with exact arithmetic
    phi12 = cyclotomic(12)
    for x in (2, 3, 5, -2, 10):
        lhs = (x**12 - 1) * (x**2 - 1)
        rhs = phi12(x) * (x**6 - 1) * (x**4 - 1)
        assert lhs == rhs


# -- defining product, degrees, classical symmetries ---------------------


def test_product_over_divisors_reconstructs_xn_minus_1():
    for n in range(1, 201):
        prod = [1]
        for d in range(1, n + 1):
            if n % d == 0:
                prod = _poly_mul(prod, list(cyclotomic(d).coeffs))
        expected = [-1] + [0] * (n - 1) + [1]
        assert prod == expected, f"divisor product broke at n={n}"


def test_degree_is_the_totient():
    for n in range(1, 1001):
        assert cyclotomic(n).degree == naive_totient(n)


def test_odd_to_even_reflection():
    # Phi_2n(x) = Phi_n(-x) for odd n > 1
    for n in range(3, 100, 2):
        phi_n = cyclotomic(n)
        reflected = [
            (-1) ** k * phi_n.coefficient(k) for k in range(phi_n.degree + 1)
        ]
        assert cyclotomic(2 * n) == IntPolynomial(reflected)


def test_prime_power_compression():
    # Phi_{p^k}(x) = Phi_p(x^{p^{k-1}})
    for p, k in ((2, 4), (3, 3), (5, 2)):
        small = cyclotomic(p)
        step = p ** (k - 1)
        inflated = [0] * (small.degree * step + 1)
        for i in range(small.degree + 1):
            inflated[i * step] = small.coefficient(i)
        assert cyclotomic(p**k) == IntPolynomial(inflated)


# -- coefficient heights --------------------------------------------------


def test_heights_are_one_through_104():
    for n in range(1, 105):
        assert height(n) == 1


def test_height_two_first_appears_at_105():
    phi = cyclotomic(105)
    assert phi.degree == 48
    assert height(105) == 2
    assert phi.coefficient(7) == -2
    assert phi.coefficient(41) == -2
    others = [
        k
        for k in range(49)
        if abs(phi.coefficient(k)) == 2 and k not in (7, 41)
    ]
    assert others == []


def test_height_classification_to_200():
    # height(n) == 1 exactly when the odd part of n has at most two
    # distinct prime factors
    for n in range(1, 201):
        m = n
        while m % 2 == 0:
            m //= 2
        odd_part_omega = 0
        p = 3
        while p * p <= m:
            if m % p == 0:
                odd_part_omega += 1
                while m % p == 0:
                    m //= p
            p += 2
        if m > 1:
            odd_part_omega += 1
        if odd_part_omega <= 2:
            assert height(n) == 1, n
        else:
            assert height(n) >= 2, n


def test_random_larger_indices_satisfy_invariants():
    rng = random.Random(5)
    for _ in range(15):
        n = rng.randint(200, 2000)
        phi = cyclotomic(n)
        assert phi.degree == naive_totient(n)
        assert phi.coefficient(phi.degree) == 1
        # constant term of Phi_n is 1 for every n > 1
        assert phi.coefficient(0) == 1


def test_domain_errors():
    with pytest.raises(ValueError):
        cyclotomic(0)
    with pytest.raises(ValueError):
        cyclotomic(10**4 + 1)
