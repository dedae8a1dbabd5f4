import pytest

from quintic.cyclo import CyclotomicInt, LAMBDA, ONE, ZETA, exact_div
from quintic.errors import FactorBudgetExceeded, InvalidInput, NonPrime
from quintic.ideals import (
    PrimeKind,
    crt,
    factor_element,
    gcd,
    reduce_mod_ideal,
    split_prime,
    valuation,
    xgcd,
)
from quintic.primes import factor_int, is_prime

from conftest import INERT_PRIMES, SPLIT1_PRIMES, SPLIT2_PRIMES, random_cyclo


class TestRationalFactoring:
    def test_examples(self):
        assert factor_int(301) == {7: 1, 43: 1}
        assert factor_int(3035) == {5: 1, 607: 1}
        assert factor_int(1) == {}

    def test_large_semiprime(self):
        n = 1_000_003 * 1_000_033
        assert factor_int(n) == {1_000_003: 1, 1_000_033: 1}

    def test_budget_raises(self):
        hard = 1000000000000066600000000000001 * 2305843009213693951
        with pytest.raises(FactorBudgetExceeded):
            factor_int(hard, budget_ms=0)

    def test_primality(self):
        assert is_prime(2) and is_prime(907) and is_prime(2**61 - 1)
        assert not is_prime(1) and not is_prime(23951)


class TestSplitting:
    def test_inert(self):
        (P,) = split_prime(7)
        assert P.kind is PrimeKind.INERT
        assert P.residue_degree == 4 and P.ramification == 1
        assert P.generator == CyclotomicInt(7)

    def test_lambda(self):
        (P,) = split_prime(5)
        assert P.kind is PrimeKind.LAMBDA
        assert P.ramification == 4 and P.generator == LAMBDA

    def test_degree_one(self):
        primes = split_prime(11)
        assert len(primes) == 4
        assert all(P.kind is PrimeKind.SPLIT_DEG1 for P in primes)
        # Phi_5 has roots 3, 4, 5, 9 mod 11
        for P, r in zip(primes, (3, 4, 5, 9)):
            assert pow(r, 5, 11) == 1

    def test_degree_two(self):
        primes = split_prime(19)
        assert len(primes) == 2
        assert all(P.kind is PrimeKind.SPLIT_DEG2 for P in primes)

    @pytest.mark.parametrize("p", sorted(INERT_PRIMES + SPLIT1_PRIMES + SPLIT2_PRIMES + (5,)))
    def test_degree_sum_and_norms(self, p):
        primes = split_prime(p)
        assert sum(P.ramification * P.residue_degree for P in primes) == 4
        norm_product = 1
        for P in primes:
            assert P.generator.norm() == P.absolute_norm()
            norm_product *= P.generator.norm() ** P.ramification
        assert norm_product == p**4

    def test_rejects_composite(self):
        with pytest.raises(NonPrime):
            split_prime(6)


class TestGcd:
    def test_gcd_with_zero(self, rng):
        a = random_cyclo(rng)
        g = gcd(a, CyclotomicInt(0))
        assert exact_div(a, g) is not None and exact_div(g, a) is not None

    def test_degree_one_prime_from_gcd(self):
        g = gcd(CyclotomicInt(11), ZETA - CyclotomicInt(3))
        assert g.norm() == 11

    def test_coprime_rational_primes(self):
        assert gcd(CyclotomicInt(7), CyclotomicInt(43)).is_unit()

    def test_bezout_contract(self, rng):
        for _ in range(150):
            a, b = random_cyclo(rng, 60), random_cyclo(rng, 60)
            if a.is_zero() and b.is_zero():
                continue
            g, x, y = xgcd(a, b)
            assert x * a + y * b == g
            if not a.is_zero():
                assert exact_div(a, g) is not None
            if not b.is_zero():
                assert exact_div(b, g) is not None

    def test_both_zero_rejected(self):
        with pytest.raises(InvalidInput):
            xgcd(CyclotomicInt(0), CyclotomicInt(0))


class TestValuation:
    def test_lambda_of_five(self):
        assert valuation(CyclotomicInt(5), split_prime(5)[0]) == 4

    def test_table_row(self):
        assert valuation(CyclotomicInt(301), split_prime(7)[0]) == 1

    def test_unit_has_no_valuation(self):
        for p in (2, 7, 11, 19):
            for P in split_prime(p):
                assert valuation(ONE + ZETA, P) == 0

    def test_norm_identity(self, rng):
        # sum of v_P(a) * f(P) over all P recovers the norm exactly
        for _ in range(20):
            a = random_cyclo(rng, 15)
            if a.is_zero():
                continue
            fac = factor_element(a)
            n = 1
            for P, e in fac.factors:
                n *= P.absolute_norm() ** e
            assert n == a.norm()


class TestFactorElement:
    def test_lambda_itself(self):
        fac = factor_element(LAMBDA)
        assert fac.unit == ONE
        assert [(P.p, e) for P, e in fac.factors] == [(5, 1)]
        assert fac.e_lambda == 1

    def test_table_product(self):
        fac = factor_element(CyclotomicInt(301))
        assert fac.unit.is_unit()
        assert [(P.p, e) for P, e in fac.factors] == [(7, 1), (43, 1)]

    def test_five_is_lambda_fourth(self):
        fac = factor_element(CyclotomicInt(5))
        assert fac.e_lambda == 4
        assert fac.unit.norm() == 1
        assert fac.value() == CyclotomicInt(5)

    def test_roundtrip_random(self, rng):
        for _ in range(40):
            a = random_cyclo(rng, 25)
            if a.is_zero():
                continue
            fac = factor_element(a)
            assert fac.value() == a
            assert fac.unit.norm() == 1
            assert len({P for P, _ in fac.factors}) == len(fac.factors)
            assert all(e >= 1 for _, e in fac.factors)

    def test_zero_rejected(self):
        with pytest.raises(InvalidInput):
            factor_element(CyclotomicInt(0))


class TestCrt:
    def test_single_congruence(self):
        x, m = crt([(CyclotomicInt(9), CyclotomicInt(43))])
        assert exact_div(x - CyclotomicInt(9), CyclotomicInt(43)) is not None

    def test_spec_pair(self):
        x, m = crt([(CyclotomicInt(7), CyclotomicInt(43)), (ONE, LAMBDA**10)])
        assert exact_div(x - CyclotomicInt(7), CyclotomicInt(43)) is not None
        assert exact_div(x - ONE, LAMBDA**10) is not None
        # size reduction keeps the solution within a small multiple of the modulus
        assert x.norm() < 30 * m.norm()

    def test_zero_residues(self):
        x, _ = crt([(CyclotomicInt(0), CyclotomicInt(7)), (CyclotomicInt(0), CyclotomicInt(3))])
        assert exact_div(x, CyclotomicInt(21)) is not None

    def test_rejects_common_factor(self):
        with pytest.raises(InvalidInput):
            crt([(ONE, CyclotomicInt(7)), (CyclotomicInt(2), CyclotomicInt(14))])

    def test_random_systems(self, rng):
        moduli = [CyclotomicInt(7), CyclotomicInt(11), LAMBDA**3]
        for _ in range(15):
            residues = [random_cyclo(rng, 8) for _ in moduli]
            x, m = crt(list(zip(residues, moduli)))
            for r, mod in zip(residues, moduli):
                assert exact_div(x - r, mod) is not None
            assert x.norm() < 40 * m.norm()

    def test_reduction_preserves_coset(self, rng):
        mod = CyclotomicInt(31) * LAMBDA**2
        for _ in range(10):
            x = random_cyclo(rng, 500)
            red = reduce_mod_ideal(x, mod)
            assert exact_div(x - red, mod) is not None
            assert red.norm() <= x.norm() or red.norm() < 30 * mod.norm()
