import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cotorsion.arith import sigma
from cotorsion.dirichlet import (
    DirichletSeries,
    check_identity,
    convolve,
    series_ideal_count,
    series_ok_module_count,
    series_ok_pf1,
    series_pf1,
    series_shift,
    series_sigma,
    series_square_support,
    series_z2,
    series_zeta,
    series_zeta_double,
    series_zeta_shift,
)
from cotorsion.errors import BadLength
from cotorsion.okproj import ok_cardinality
from cotorsion.projline import cardinality
from cotorsion.quadring import enumerate_ideals, ring

KI = ring(-1)
K5 = ring(-5)


class TestConvolve:
    def test_divisor_count(self):
        assert convolve(series_zeta(6), series_zeta(6)).a(6) == 4

    def test_divisor_sum(self):
        assert convolve(series_zeta_shift(12), series_zeta(12)).a(12) == 28

    def test_square_stratum_sum(self):
        # divisors d of 12 with 12/d square: d = 12 and d = 3
        f = convolve(series_zeta_double(12), series_pf1(12))
        assert f.a(12) == cardinality(12) + cardinality(3) == 24 + 4

    def test_length_mismatch(self):
        with pytest.raises(BadLength):
            convolve(series_zeta(5), series_zeta(6))

    def test_commutative_associative(self):
        rng = random.Random(70)
        n = 200
        for _ in range(5):
            f = DirichletSeries(tuple(rng.randint(-9, 9) for _ in range(n)))
            g = DirichletSeries(tuple(rng.randint(-9, 9) for _ in range(n)))
            h = DirichletSeries(tuple(rng.randint(-9, 9) for _ in range(n)))
            assert convolve(f, g) == convolve(g, f)
            assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))

    @given(st.data())
    def test_ring_axioms_property(self, data):
        n = data.draw(st.integers(1, 40))
        coeff = st.integers(-100, 100)
        draw_series = lambda: DirichletSeries(
            tuple(data.draw(coeff) for _ in range(n))
        )
        f, g, h = draw_series(), draw_series(), draw_series()
        assert convolve(f, g) == convolve(g, f)
        assert convolve(convolve(f, g), h) == convolve(f, convolve(g, h))
        summed = DirichletSeries(tuple(a + b for a, b in zip(g.coeffs, h.coeffs)))
        lhs = convolve(f, summed)
        rhs = DirichletSeries(
            tuple(
                a + b
                for a, b in zip(convolve(f, g).coeffs, convolve(f, h).coeffs)
            )
        )
        assert lhs == rhs


class TestBasicSeries:
    def test_zeta_double(self):
        assert series_zeta_double(6).coeffs == (1, 0, 0, 1, 0, 0)

    def test_pf1(self):
        assert series_pf1(6).coeffs == (1, 3, 4, 6, 6, 12)

    def test_zeta_shift(self):
        assert series_zeta_shift(5).a(5) == 5

    def test_z2_examples(self):
        s = series_z2(12)
        assert s.a(1) == 1
        assert s.a(4) == 7
        assert s.a(12) == 28

    def test_z2_equals_sigma(self):
        N = 500
        assert series_z2(N) == series_sigma(N)

    def test_z2_counts_lattices(self):
        from cotorsion.latenum import enumerate_index

        s = series_z2(30)
        for n in range(1, 31):
            assert s.a(n) == len(enumerate_index(n)) == sigma(n)


class TestZIdentities:
    def test_cor_identities_midscale(self):
        n = 2000
        z2 = series_z2(n)
        assert check_identity(z2, convolve(series_zeta_shift(n), series_zeta(n))).equal
        assert check_identity(z2, convolve(series_zeta_double(n), series_pf1(n))).equal

    def test_mismatch_reported(self):
        report = check_identity(series_zeta(2), series_zeta_shift(2))
        assert not report.equal
        assert report.first_mismatch == 2
        assert (report.lhs_value, report.rhs_value) == (1, 2)

    def test_length_mismatch(self):
        with pytest.raises(BadLength):
            check_identity(series_zeta(5), series_zeta(6))


class TestDedekindSeries:
    def test_qi_ideal_counts(self):
        assert series_ideal_count(KI, 5).coeffs == (1, 1, 0, 1, 2)

    def test_qi_pf1_at_two(self):
        assert series_ok_pf1(KI, 2).a(2) == 3

    def test_k5_ramified_count(self):
        assert series_ideal_count(K5, 2).a(2) == 1

    def test_counts_match_enumeration(self):
        for K in (KI, K5):
            s = series_ideal_count(K, 50)
            for n in range(1, 51):
                assert s.a(n) == len(enumerate_ideals(K, n))

    def test_pf1_matches_enumeration(self):
        for K in (KI, K5):
            s = series_ok_pf1(K, 30)
            for n in range(1, 31):
                assert s.a(n) == sum(ok_cardinality(I) for I in enumerate_ideals(K, n))

    def test_multiplicativity(self):
        for K in (KI, K5):
            counts = series_ideal_count(K, 300)
            pf1 = series_ok_pf1(K, 300)
            for m in range(2, 300):
                for n in range(2, 300 // m + 1):
                    if math.gcd(m, n) == 1:
                        assert counts.a(m * n) == counts.a(m) * counts.a(n)
                        assert pf1.a(m * n) == pf1.a(m) * pf1.a(n)


class TestDedekindIdentities:
    @pytest.mark.parametrize("d", [-1, -5])
    def test_module_count_identities(self, d):
        K = ring(d)
        n = 120
        mc = series_ok_module_count(K, n)
        counts = series_ideal_count(K, n)
        assert check_identity(mc, convolve(series_shift(counts), counts)).equal
        assert check_identity(
            mc, convolve(series_square_support(counts), series_ok_pf1(K, n))
        ).equal

    def test_module_count_matches_bruteforce(self):
        from cotorsion.okmodules import enumerate_cotorsion_bruteforce

        for K in (KI, K5):
            s = series_ok_module_count(K, 10)
            for n in range(1, 11):
                assert s.a(n) == len(enumerate_cotorsion_bruteforce(K, n))

    @pytest.mark.parametrize("d", [-3, -7, -15])
    def test_identities_other_discriminants(self, d):
        K = ring(d)
        n = 100
        mc = series_ok_module_count(K, n)
        counts = series_ideal_count(K, n)
        assert check_identity(mc, convolve(series_shift(counts), counts)).equal
        assert check_identity(
            mc, convolve(series_square_support(counts), series_ok_pf1(K, n))
        ).equal
