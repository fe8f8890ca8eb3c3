import random
from fractions import Fraction

from linarr.field import cyc_field
from linarr.linalg import (
    FpCycContext,
    good_prime,
    kernel_basis,
    kernel_vector,
    lift_fpcyc,
    modp_kernel_vector,
    modp_nullity,
    nullity,
    rank,
    rational_reconstruct,
)


def F(*args):
    return Fraction(*args)


def test_rank_rational():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)], [F(0), F(1), F(1)]]
    assert rank(rows, 3) == 2
    assert nullity(rows, 3) == 1


def test_kernel_vector_annihilates():
    rng = random.Random(7)
    for _ in range(10):
        rows = [
            [F(rng.randint(-5, 5)) for _ in range(6)] for _ in range(4)
        ]
        vec = kernel_vector(rows, 6, F(1), F(0))
        assert vec is not None  # 4 rows, 6 cols: kernel nonzero
        assert any(vec)
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_kernel_basis_dimension():
    rows = [[F(1), F(0), F(1), F(0)], [F(0), F(1), F(0), F(1)]]
    basis = kernel_basis(rows, 4, F(1), F(0))
    assert len(basis) == 2
    for vec in basis:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vec)) == 0


def test_cyclotomic_rank():
    K = cyc_field(4)
    i = K.zeta
    rows = [[K.one, i], [i, K.scalar(-1)]]  # second row = i * first
    assert rank(rows, 2) == 1
    vec = kernel_vector(rows, 2, K.one, K.zero)
    assert vec is not None
    assert rows[0][0] * vec[0] + rows[0][1] * vec[1] == K.zero


def test_good_prime_orders():
    for n in (1, 2, 3, 4, 5, 6):
        p = good_prime(n)
        assert p > 2 ** 29
        if n > 2:
            assert p % n != 1  # Phi_n must not split


def test_modp_matches_exact_nullity():
    rng = random.Random(11)
    K = cyc_field(5)
    ctx = FpCycContext(5, good_prime(5))
    for _ in range(5):
        rows = [
            [
                K.element([rng.randint(-4, 4) for _ in range(4)])
                for _ in range(5)
            ]
            for _ in range(4)
        ]
        exact = nullity(rows, 5)
        modp = modp_nullity([[ctx.reduce(x) for x in row] for row in rows], 5)
        assert exact == modp


def test_rational_reconstruct_round_trip():
    p = good_prime(1)
    for q in (F(0), F(3, 7), F(-22, 5), F(1000), F(-1, 999)):
        residue = q.numerator * pow(q.denominator, -1, p) % p
        assert rational_reconstruct(residue, p) == q


def test_modp_kernel_lift():
    K = cyc_field(3)
    ctx = FpCycContext(3, good_prime(3))
    z = K.zeta
    rows = [[K.one, z, K.zero], [K.zero, K.one, z]]
    mrows = [[ctx.reduce(x) for x in row] for row in rows]
    vec = modp_kernel_vector(mrows, 3, ctx)
    assert vec is not None
    lifted = [lift_fpcyc(x, K) for x in vec]
    assert all(x is not None for x in lifted)
    for row in rows:
        acc = K.zero
        for a, b in zip(row, lifted):
            acc = acc + a * b
        assert acc == K.zero


def test_flat_nullity_matches_exact():
    from linarr.linalg import fp_nullity, flatten_rows, good_prime, nullity

    rng = random.Random(5)
    F = cyc_field(5)
    p = good_prime(5)
    for _ in range(4):
        rows = [
            [
                F.element([Fraction(rng.randint(-3, 3)) for _ in range(4)])
                for _ in range(5)
            ]
            for _ in range(3)
        ]
        rows.append([a + b for a, b in zip(rows[0], rows[1])])
        exact = nullity([list(r) for r in rows], 5)
        flat = flatten_rows(rows, F, p)
        assert fp_nullity(flat, 5 * F.degree, p) == F.degree * exact


def test_flat_kernel_vector_lifts_and_verifies():
    from linarr.linalg import fp_kernel_vector, flatten_rows, good_prime, lift_flat_vector

    F = cyc_field(3)
    p = good_prime(3)
    z = F.zeta
    # row space forces  v0 + z v1 - v2 = 0  style relations
    rows = [
        [F.one, z, -F.one - z],
        [F.zero, F.one, -F.one],
    ]
    flat = flatten_rows(rows, F, p)
    vec, _ = fp_kernel_vector(flat, 3 * F.degree, p)
    assert vec is not None
    lifted = lift_flat_vector(vec, F, p)
    assert lifted is not None
    assert any(lifted)
    for row in rows:
        acc = F.zero
        for a, b in zip(row, lifted):
            acc = acc + a * b
        assert not acc


def test_crt_pair():
    from linarr.linalg import crt_pair

    a = crt_pair(3 % 7, 7, 3 % 11, 11)
    assert a == 3
    b = crt_pair(5, 7, 9, 11)
    assert b % 7 == 5 and b % 11 == 9
