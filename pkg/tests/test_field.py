import random
from fractions import Fraction
from math import gcd

import pytest

from linarr.field import (
    CycField,
    cyc_field,
    cyc_from_strings,
    cyc_to_strings,
    cyclotomic_polynomial,
    divisors,
    euler_phi,
    exponent_in_mu,
    root_order,
    zeta_pow,
)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


FROZEN_PHI = {
    1: (-1, 1),
    2: (1, 1),
    3: (1, 1, 1),
    4: (1, 0, 1),
    5: (1, 1, 1, 1, 1),
    6: (1, -1, 1),
    12: (1, 0, -1, 0, 1),
}


def test_cyclotomic_polynomials_frozen():
    for n, coeffs in FROZEN_PHI.items():
        assert cyclotomic_polynomial(n) == coeffs


def test_cyclotomic_product_identity():
    # prod over d | n of Phi_d equals t^n - 1
    for n in range(1, 25):
        prod = [1]
        for d in divisors(n):
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
        expected = [0] * (n + 1)
        expected[0], expected[n] = -1, 1
        assert prod == expected


def test_phi_degrees():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 6)] == [1, 1, 2, 2, 4, 2]


def test_zeta4_squares_to_minus_one():
    F = cyc_field(4)
    assert F.zeta * F.zeta == F.scalar(-1)


def test_zeta3_sum_of_conjugates():
    F = cyc_field(3)
    assert F.zeta_pow(1) + F.zeta_pow(2) == F.scalar(-1)


def test_zeta6_inverse_is_fifth_power():
    F = cyc_field(6)
    assert 1 / F.zeta == F.zeta_pow(5)


def test_zeta_pow_frozen_values():
    assert zeta_pow(cyc_field(2), 1) == cyc_field(2).scalar(-1)
    assert zeta_pow(cyc_field(6), 3) == cyc_field(6).scalar(-1)


def test_root_order_examples():
    F6 = cyc_field(6)
    assert root_order(F6.one) == 1
    assert root_order(F6.zeta_pow(2)) == 3
    assert root_order(F6.scalar(2)) is None
    assert root_order(F6.zero) is None


def test_root_order_formula():
    for n in (1, 2, 3, 4, 5, 6, 8, 12):
        F = cyc_field(n)
        for j in range(n):
            assert root_order(F.zeta_pow(j)) == n // gcd(n, j)


def test_zeta_pow_product_inverse():
    for n in (3, 4, 5, 6, 7):
        F = cyc_field(n)
        for j in range(1, n):
            assert F.zeta_pow(j) * F.zeta_pow(n - j) == F.one


def _sample(F, rng):
    return F.element(
        [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(F.degree)]
    )


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12])
def test_field_axioms_sampled(n):
    F = cyc_field(n)
    rng = random.Random(100 + n)
    for _ in range(12):
        a, b, c = _sample(F, rng), _sample(F, rng), _sample(F, rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        assert a + F.zero == a
        assert a * F.one == a
        if a:
            assert a * (1 / a) == F.one
            assert (b / a) * a == b


def test_division_by_zero():
    F = cyc_field(4)
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_mixed_field_operands_rejected():
    with pytest.raises(ValueError):
        cyc_field(3).one + cyc_field(4).one


def test_scalar_coercion():
    F = cyc_field(6)
    assert F.zeta + 0 == F.zeta
    assert 2 * F.zeta == F.zeta + F.zeta
    assert F.scalar(Fraction(1, 2)) * 2 == F.one


def test_pow_negative_exponent():
    F = cyc_field(5)
    z = F.zeta
    assert z ** -1 == z ** 4
    assert z ** -3 == z ** 2


def test_hash_consistency():
    F = cyc_field(4)
    assert hash(F.zeta_pow(2)) == hash(F.scalar(-1))
    assert len({F.zeta_pow(j) for j in range(8)}) == 4


def test_exponent_in_mu_same_order():
    F = cyc_field(6)
    for j in range(6):
        assert exponent_in_mu(F.zeta_pow(j), 6) == j


def test_exponent_in_mu_divisor_subgroup():
    # mu_3 inside Q(zeta_6): zeta_6^2 is the canonical zeta_3
    F = cyc_field(6)
    assert exponent_in_mu(F.zeta_pow(2), 3) == 1
    assert exponent_in_mu(F.zeta_pow(4), 3) == 2
    assert exponent_in_mu(F.one, 3) == 0
    assert exponent_in_mu(F.zeta, 3) is None


def test_exponent_in_mu_rational_field():
    # mu_2 inside Q: -1 has exponent 1
    F = cyc_field(1)
    assert exponent_in_mu(F.scalar(-1), 2) == 1
    assert exponent_in_mu(F.one, 2) == 0
    assert exponent_in_mu(F.scalar(2), 2) is None


def test_serialization_round_trip():
    F = cyc_field(5)
    x = F.element([Fraction(3, 2), Fraction(-1, 7), Fraction(0), Fraction(4)])
    strings = cyc_to_strings(x)
    assert all("/" in s for s in strings)
    assert cyc_from_strings(F, strings) == x


def test_field_instances_cached():
    assert cyc_field(6) is cyc_field(6)
    assert cyc_field(6) == CycField(6)
