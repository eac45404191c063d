import math

import pytest

from src.series import (
    EXACT,
    CoefficientRing,
    InversionError,
    OutOfRangeError,
    RingMismatchError,
    add,
    alternate_sign,
    coeff_at,
    dissect,
    from_coefficients,
    inflate,
    invert,
    make_series,
    mul,
    one,
    power,
    reduce_mod,
    series_equal,
    sub,
    zero,
)
from src.theta import phi_series
from tests.conftest import naive_product, random_series

# every modulus the congruence checks work in
CHECK_MODULI = (7, 8, 11, 16, 32, 64, 72, 128, 144, 256, 288)


def _ring(modulus):
    return EXACT if modulus is None else CoefficientRing.modular(modulus)


class TestConstruction:
    def test_make_series_places_terms(self, zz):
        s = make_series(zz, [(0, 1), (3, -2)], 5)
        assert s.to_list() == [1, 0, 0, -2, 0, 0]
        assert s.trunc == 5

    def test_make_series_reduces_modulo(self):
        s = make_series(CoefficientRing.modular(7), [(1, -1), (2, 15)], 3)
        assert s.to_list() == [0, 6, 1, 0]

    def test_make_series_rejects_exponent_out_of_range(self, zz):
        with pytest.raises(OutOfRangeError):
            make_series(zz, [(6, 1)], 5)
        with pytest.raises(OutOfRangeError):
            make_series(zz, [(-1, 1)], 5)

    def test_make_series_rejects_repeated_exponent(self, zz):
        with pytest.raises(ValueError):
            make_series(zz, [(2, 1), (2, 3)], 5)

    def test_coefficients_are_read_only(self, zz):
        s = one(zz, 4)
        with pytest.raises(ValueError):
            s.coeffs[0] = 5

    def test_ring_validation(self):
        with pytest.raises(ValueError):
            CoefficientRing.modular(1)
        with pytest.raises(ValueError):
            CoefficientRing.modular(2 ** 31)

    def test_coeff_at_bounds(self, zz):
        s = from_coefficients(zz, [1, 2, 3])
        assert coeff_at(s, 2) == 3
        assert s[1] == 2
        with pytest.raises(OutOfRangeError):
            coeff_at(s, 3)


class TestArithmetic:
    def test_add_uses_smaller_trunc(self, zz):
        a = from_coefficients(zz, [1, 2, 3, 4])
        b = from_coefficients(zz, [1, 1])
        assert add(a, b).to_list() == [2, 3]
        assert sub(a, b).to_list() == [0, 1]

    def test_ring_mismatch(self, zz, mod72):
        with pytest.raises(RingMismatchError):
            add(one(zz, 3), one(mod72, 3))
        with pytest.raises(RingMismatchError):
            mul(one(zz, 3), one(mod72, 3))

    def test_operators(self, zz):
        a = from_coefficients(zz, [1, 1])
        assert (a * a).to_list() == [1, 2]
        assert (3 * a).to_list() == [3, 3]
        assert (-a).to_list() == [-1, -1]
        assert (a ** 0).to_list() == [1, 0]

    @pytest.mark.parametrize("method", ["schoolbook", "ntt", "auto"])
    def test_mul_matches_naive_exact(self, zz, rng, method):
        a = random_series(rng, zz, 300, bound=10 ** 12)
        b = random_series(rng, zz, 300, bound=10 ** 12, density=0.3)
        expected = naive_product(a.to_list(), b.to_list(), 301)
        assert mul(a, b, method).to_list() == expected

    @pytest.mark.parametrize("modulus", [7, 88704, 2 ** 31 - 1])
    def test_mul_methods_agree_modular(self, rng, modulus):
        ring = CoefficientRing.modular(modulus)
        a = random_series(rng, ring, 700, bound=modulus)
        b = random_series(rng, ring, 700, bound=modulus)
        assert series_equal(mul(a, b, "schoolbook"), mul(a, b, "ntt"))

    def test_mul_negative_exact_coefficients_via_ntt(self, zz):
        a = from_coefficients(zz, [1, -1] + [0] * 200)
        b = from_coefficients(zz, [1] * 202)
        # (1 - q) / (1 - q) = 1
        assert mul(a, b, "ntt").to_list() == [1] + [0] * 201

    def test_power_of_one_plus_q(self, zz):
        s = from_coefficients(zz, [1, 1, 0, 0, 0, 0])
        assert power(s, 5).to_list() == [1, 5, 10, 10, 5, 1]

    def test_power_rejects_negative_exponent(self, zz):
        with pytest.raises(ValueError):
            power(one(zz, 2), -1)

    @pytest.mark.parametrize("modulus", [None, 288], ids=["exact", "mod288"])
    def test_ring_axioms(self, rng, modulus):
        ring = _ring(modulus)
        for _ in range(25):
            a, b, c = (random_series(rng, ring, 64) for _ in range(3))
            assert series_equal(mul(a, b), mul(b, a))
            assert series_equal(mul(mul(a, b), c), mul(a, mul(b, c)))
            assert series_equal(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))
            assert series_equal(add(add(a, b), c), add(a, add(b, c)))
            assert series_equal(mul(a, one(ring, 64)), a)

    @pytest.mark.parametrize(
        "modulus",
        [7, 11, 288, pytest.param(None, marks=pytest.mark.slow)],
        ids=["mod7", "mod11", "mod288", "exact"],
    )
    def test_ntt_matches_schoolbook(self, rng, modulus):
        ring = _ring(modulus)
        bound = 10 ** 6 if modulus is None else modulus
        for _ in range(100):
            a = random_series(rng, ring, 2048, bound=bound)
            b = random_series(rng, ring, 2048, bound=bound)
            assert mul(a, b, "ntt").to_list() == mul(a, b, "schoolbook").to_list()

    @pytest.mark.parametrize("modulus", [7, 11, 16, 72, 288])
    def test_reduce_mod_commutes_with_arithmetic(self, rng, modulus):
        for _ in range(20):
            a = random_series(rng, EXACT, 120, bound=10 ** 9)
            b = random_series(rng, EXACT, 120, bound=10 ** 9)
            ra, rb = reduce_mod(a, modulus), reduce_mod(b, modulus)
            assert series_equal(reduce_mod(add(a, b), modulus), add(ra, rb))
            assert series_equal(reduce_mod(sub(a, b), modulus), sub(ra, rb))
            assert series_equal(reduce_mod(mul(a, b), modulus), mul(ra, rb))
            assert series_equal(reduce_mod(power(a, 3), modulus), power(ra, 3))
            unit = from_coefficients(EXACT, [1] + a.to_list()[1:])
            assert series_equal(reduce_mod(invert(unit), modulus), invert(reduce_mod(unit, modulus)))


class TestInversion:
    def test_geometric_series(self, zz):
        s = from_coefficients(zz, [1, -1, 0, 0, 0])
        assert invert(s).to_list() == [1, 1, 1, 1, 1]

    @pytest.mark.parametrize("method", ["recurrence", "newton"])
    def test_inverse_times_series_is_one(self, rng, method):
        ring = CoefficientRing.modular(288)
        values = [1] + [rng.randrange(288) for _ in range(600)]
        a = from_coefficients(ring, values)
        assert series_equal(mul(a, invert(a, method)), one(ring, 600))

    def test_methods_agree_exact(self, zz, rng):
        a = random_series(rng, zz, 400, bound=1)
        a = from_coefficients(zz, [1] + a.to_list()[1:])
        assert series_equal(invert(a, "recurrence"), invert(a, "newton"))

    def test_non_unit_constant_modular(self):
        ring = CoefficientRing.modular(72)
        with pytest.raises(InversionError, match="gcd"):
            invert(from_coefficients(ring, [6, 1, 1]))

    def test_non_unit_constant_exact(self, zz):
        with pytest.raises(InversionError):
            invert(from_coefficients(zz, [2, 1]))

    def test_unit_constant_other_than_one(self):
        ring = CoefficientRing.modular(7)
        a = from_coefficients(ring, [3, 1, 4, 1, 5])
        assert series_equal(mul(a, invert(a)), one(ring, 4))

    @pytest.mark.parametrize("modulus", (None,) + CHECK_MODULI, ids=lambda m: "exact" if m is None else f"mod{m}")
    def test_inverse_of_random_units(self, rng, modulus):
        ring = _ring(modulus)
        units = [1, -1] if modulus is None else [u for u in range(1, modulus) if math.gcd(u, modulus) == 1]
        for _ in range(200):
            tail = random_series(rng, ring, 40, bound=20).to_list()[1:]
            a = from_coefficients(ring, [rng.choice(units)] + tail)
            assert series_equal(mul(a, invert(a)), one(ring, 40))


class TestStructural:
    def test_dissect(self, zz):
        a = from_coefficients(zz, list(range(10)))
        b = dissect(a, 3, 1)
        assert b.to_list() == [1, 4, 7]
        assert b.trunc == (9 - 1) // 3

    def test_dissect_errors(self, zz):
        a = from_coefficients(zz, list(range(4)))
        with pytest.raises(OutOfRangeError):
            dissect(a, 0, 0)
        with pytest.raises(OutOfRangeError):
            dissect(a, 3, 3)
        with pytest.raises(OutOfRangeError):
            dissect(from_coefficients(zz, [1, 2]), 5, 4)

    def test_dissect_of_phi_misses_residues_two_and_three(self, zz):
        # squares are 0 or 1 mod 4
        phi = phi_series(zz, 100)
        for r in (2, 3):
            part = dissect(phi, 4, r)
            assert part.trunc == (100 - r) // 4
            assert not any(part.to_list())
        assert dissect(phi, 4, 1)[0] == 2

    @pytest.mark.parametrize("m", [2, 3, 4, 9])
    @pytest.mark.parametrize("modulus", [None, 288], ids=["exact", "mod288"])
    def test_dissections_reassemble(self, rng, m, modulus):
        ring = _ring(modulus)
        a = random_series(rng, ring, 500, bound=10 ** 6)
        total = zero(ring, 500)
        for r in range(m):
            total = add(total, inflate(dissect(a, m, r), m, 500).shift(r))
        assert total.to_list() == a.to_list()

    def test_inflate_and_zero_pad(self, zz):
        a = from_coefficients(zz, [1, 2, 3])
        assert inflate(a, 2, 4).to_list() == [1, 0, 2, 0, 3]
        assert inflate(a, 2, 7).to_list() == [1, 0, 2, 0, 3, 0, 0, 0]
        assert inflate(a, 3, 4).to_list() == [1, 0, 0, 2, 0]

    def test_alternate_sign(self, zz):
        a = from_coefficients(zz, [1, 2, 3, 4])
        assert alternate_sign(a).to_list() == [1, -2, 3, -4]
        m = from_coefficients(CoefficientRing.modular(5), [1, 2, 3, 4])
        assert alternate_sign(m).to_list() == [1, 3, 3, 1]

    def test_shift_and_truncate(self, zz):
        a = from_coefficients(zz, [1, 2, 3])
        assert a.shift(1).to_list() == [0, 1, 2]
        assert a.truncate(1).to_list() == [1, 2]
        with pytest.raises(OutOfRangeError):
            a.truncate(3)

    def test_reduce_mod(self, zz):
        a = from_coefficients(zz, [-1, 10, 144])
        assert reduce_mod(a, 7).to_list() == [6, 3, 4]
        wide = from_coefficients(CoefficientRing.modular(288), [287, 100])
        assert reduce_mod(wide, 72).to_list() == [71, 28]
        with pytest.raises(RingMismatchError):
            reduce_mod(wide, 7)

    def test_series_equal_reports_first_mismatch(self, zz):
        cmp = series_equal(from_coefficients(zz, [1, 2, 3]), from_coefficients(zz, [1, 2, 4, 9]))
        assert not cmp
        assert (cmp.trunc, cmp.first_mismatch, cmp.left, cmp.right) == (2, 2, 3, 4)
        assert series_equal(zero(zz, 3), zero(zz, 5))
