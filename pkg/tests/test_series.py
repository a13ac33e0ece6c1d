import random

import pytest

from pedlab.series import Series


def random_series(rng, order, modulus=None, unit=False):
    coeffs = [rng.randrange(-6, 7) for _ in range(order)]
    if unit and order:
        coeffs[0] = rng.choice([1, -1]) if modulus is None else \
            rng.choice([r for r in range(1, modulus) if _coprime(r, modulus)])
    return Series(coeffs, modulus)


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return a == 1


# -- construction and domains -------------------------------------------------

def test_order_equals_length():
    s = Series([1, 2, 3])
    assert s.order == 3
    assert s.coeffs == (1, 2, 3)


def test_modular_normalization():
    s = Series([-1, 25, 24], modulus=24)
    assert s.coeffs == (23, 1, 0)


def test_bad_modulus_rejected():
    with pytest.raises(ValueError):
        Series([1], modulus=1)


def test_zero_order_series_is_legal():
    z = Series.zero(0)
    assert z.order == 0
    assert (z * Series([1, 2])).order == 0
    assert z.invert().order == 0


def test_domain_mismatch_raises():
    exact = Series([1, 2])
    mod3 = Series([1, 2], modulus=3)
    mod5 = Series([1, 2], modulus=5)
    for a, b in ((exact, mod3), (mod3, mod5)):
        with pytest.raises(ValueError):
            a + b
        with pytest.raises(ValueError):
            a * b
        with pytest.raises(ValueError):
            a - b


# -- add / mul examples -------------------------------------------------------

def test_add_cancellation():
    assert (Series([1, 1]) + Series([1, -1])).coeffs == (2, 0)


def test_add_zero_truncates_to_min_order():
    a = Series([3, 1, 4, 1, 5])
    assert (a + Series.zero(3)).coeffs == (3, 1, 4)


def test_modular_constant_wraparound():
    a = Series([1], modulus=3)
    b = Series([2], modulus=3)
    assert (a + b).coeffs == (0,)


def test_mul_difference_of_squares():
    a = Series([1, 1, 0])
    b = Series([1, -1, 0])
    assert (a * b).coeffs == (1, 0, -1)


def test_mul_by_one_is_identity():
    a = Series([5, -3, 2, 7])
    assert a * Series.one(4) == a


def test_all_ones_squared():
    # hand convolution: coefficient of q^m in (sum q^n)^2 is m + 1
    n = 10
    ones = Series([1] * n)
    sq = ones * ones
    for m in range(5):
        assert sq[m] == m + 1


def test_scalar_multiplication():
    a = Series([1, 2, 3])
    assert (12 * a).coeffs == (12, 24, 36)
    assert (a * -1).coeffs == (-1, -2, -3)
    assert (5 * Series([1, 2], modulus=3)).coeffs == (2, 1)


# -- invert / pow -------------------------------------------------------------

def test_invert_geometric_series():
    assert Series([1, -1, 0, 0, 0]).invert().coeffs == (1, 1, 1, 1, 1)


def test_invert_one():
    assert Series.one(6).invert() == Series.one(6)


def test_invert_requires_unit_constant():
    with pytest.raises(ValueError):
        Series([2, 1, 1]).invert()
    with pytest.raises(ValueError):
        Series([3, 1], modulus=24).invert()


def test_invert_contract_random():
    rng = random.Random(20240)
    for trial in range(100):
        modulus = rng.choice([None, None, 7, 24, 192])
        order = rng.randrange(1, 25)
        a = random_series(rng, order, modulus, unit=True)
        assert a * a.invert() == Series.one(order, modulus), (trial, a)


def test_pow_square():
    assert (Series([1, 1, 0]) ** 2).coeffs == (1, 2, 1)


def test_pow_zero_is_one():
    a = Series([4, 5, 6])
    assert a ** 0 == Series.one(3)


def test_pow_negative_inverts():
    a = Series([1, 3, 3, 1])
    assert a ** -2 == (a * a).invert()


def test_pow_negative_requires_unit():
    with pytest.raises(ValueError):
        Series([2, 1]) ** -1


def test_pow_matches_repeated_multiplication():
    rng = random.Random(7)
    for _ in range(20):
        a = random_series(rng, rng.randrange(1, 12))
        e = rng.randrange(0, 6)
        expected = Series.one(a.order)
        for _ in range(e):
            expected = expected * a
        assert a ** e == expected


# -- scale_exponent / dissect / shift ----------------------------------------

def test_scale_exponent_basic():
    assert Series([1, 1]).scale_exponent(5).coeffs == \
        (1, 0, 0, 0, 0, 1, 0, 0, 0, 0)


def test_scale_exponent_identity():
    a = Series([1, 2, 3])
    assert a.scale_exponent(1) is a


def test_scale_exponent_rejects_zero():
    with pytest.raises(ValueError):
        Series([1]).scale_exponent(0)


def test_dissect_all_ones():
    a = Series([1] * 30)
    d = a.dissect(5, 4)
    assert d.coeffs == (1,) * 6
    assert d.order == 6


def test_dissect_identity():
    a = Series([3, 1, 4])
    assert a.dissect(1, 0) == a


def test_dissect_order_formula():
    a = Series(range(10))
    assert a.dissect(3, 0).order == 4
    assert a.dissect(3, 1).order == 3
    assert a.dissect(3, 2).order == 3
    assert Series([1, 2]).dissect(5, 4).order == 0


def test_dissect_residue_bounds():
    with pytest.raises(ValueError):
        Series([1]).dissect(3, 3)
    with pytest.raises(ValueError):
        Series([1]).dissect(3, -1)


def test_dissect_linearity():
    rng = random.Random(99)
    for _ in range(25):
        order = rng.randrange(0, 30)
        a = random_series(rng, order)
        b = random_series(rng, order)
        m = rng.randrange(1, 7)
        r = rng.randrange(m)
        assert (a + b).dissect(m, r) == a.dissect(m, r) + b.dissect(m, r)


def test_dissection_completeness():
    # sum_r q^r * dissect(a, m, r)(q^m) reassembles a; every piece has
    # order >= a.order, so the running sum stays at a.order
    rng = random.Random(123)
    for _ in range(25):
        order = rng.randrange(1, 40)
        modulus = rng.choice([None, 24])
        a = random_series(rng, order, modulus)
        m = rng.randrange(1, 7)
        total = Series.zero(order, modulus)
        for r in range(m):
            total = total + a.dissect(m, r).scale_exponent(m).shift(r)
        assert total == a


def test_shift_prepends_zeros():
    s = Series([7, 8]).shift(2)
    assert s.coeffs == (0, 0, 7, 8)
    assert s.order == 4


def test_truncate_never_extends():
    a = Series([1, 2, 3])
    assert a.truncate(2).coeffs == (1, 2)
    with pytest.raises(ValueError):
        a.truncate(4)


# -- reduce_mod ---------------------------------------------------------------

def test_reduce_mod_examples():
    assert Series([12, 36]).reduce_mod(24).coeffs == (12, 12)
    assert Series([-1]).reduce_mod(24).coeffs == (23,)


def test_reduce_mod_rejects_bad_input():
    with pytest.raises(ValueError):
        Series([1]).reduce_mod(1)
    with pytest.raises(ValueError):
        Series([1], modulus=5).reduce_mod(5)


def test_reduce_mod_is_ring_homomorphism():
    rng = random.Random(4242)
    for _ in range(30):
        order = rng.randrange(0, 20)
        a = random_series(rng, order)
        b = random_series(rng, order)
        m = rng.choice([2, 24, 192])
        assert (a * b).reduce_mod(m) == a.reduce_mod(m) * b.reduce_mod(m)
        assert (a + b).reduce_mod(m) == a.reduce_mod(m) + b.reduce_mod(m)


# -- ring axioms --------------------------------------------------------------

def test_ring_axioms_random():
    rng = random.Random(31337)
    for _ in range(50):
        modulus = rng.choice([None, 5, 24])
        orders = [rng.randrange(0, 15) for _ in range(3)]
        a = random_series(rng, orders[0], modulus)
        b = random_series(rng, orders[1], modulus)
        c = random_series(rng, orders[2], modulus)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
