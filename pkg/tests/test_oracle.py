import pytest

from quintic.cyclo import CyclotomicInt, ONE, ZETA, zeta_power
from quintic.errors import InvalidInput
from quintic.ideals import split_prime
from quintic.oracle import (
    FieldDlog,
    brute_quintic_table,
    prime_stream,
    relative_norm,
    sample_field_elements,
)
from quintic.residue import power_residue_symbol, residue_field


class TestBruteTable:
    def test_smallest_field(self):
        P = split_prime(2)[0]
        table = brute_quintic_table(P)
        assert len(table.residues) == 3
        ctx = residue_field(P)
        assert ctx.reduce(ZETA) not in table
        assert ctx.one() in table

    def test_rational_residues_over_three(self):
        P = split_prime(3)[0]
        table = brute_quintic_table(P)
        assert len(table.residues) == 16
        ctx = residue_field(P)
        for a in (1, 2):
            assert ctx.reduce(CyclotomicInt(a)) in table

    def test_membership_matches_symbol(self, rng):
        for p in (2, 3, 13):
            P = split_prime(p)[0]
            table = brute_quintic_table(P)
            ctx = residue_field(P)
            for _ in range(60):
                a = CyclotomicInt(*(rng.randrange(0, p) for _ in range(4)))
                z = ctx.reduce(a)
                if ctx.is_zero(z):
                    continue
                assert (power_residue_symbol(a, P) == 0) == (z in table)

    def test_degree_two_field(self):
        P = split_prime(19)[0]
        table = brute_quintic_table(P)
        assert len(table.residues) == (19**2 - 1) // 5

    def test_bound_enforced(self):
        with pytest.raises(InvalidInput):
            brute_quintic_table(split_prime(107)[0])
        with pytest.raises(InvalidInput):
            brute_quintic_table(split_prime(5)[0])


class TestFieldDlog:
    def test_dlog_against_symbols(self):
        P = split_prime(13)[0]
        oracle = FieldDlog(P, expected_queries=64)
        ctx = residue_field(P)
        # the exponent map is a fixed unit multiple of dlog mod 5
        zeta_t = oracle.dlog(ctx.reduce(ZETA))
        assert zeta_t % ((13**4 - 1) // 5) == 0 and zeta_t
        for a, z in sample_field_elements(P, 40):
            e = power_residue_symbol(a, P)
            t = oracle.dlog(z)
            assert (e == 0) == (t % 5 == 0)

    def test_dlog_is_a_homomorphism(self):
        P = split_prime(7)[0]
        oracle = FieldDlog(P, expected_queries=32)
        ctx = residue_field(P)
        pairs = sample_field_elements(P, 10, tag="hom")
        order = 7**4 - 1
        for (a, za), (b, zb) in zip(pairs[:5], pairs[5:]):
            assert oracle.dlog(ctx.mul(za, zb)) == (oracle.dlog(za) + oracle.dlog(zb)) % order


class TestRelativeNorm:
    def test_radical_itself(self):
        assert relative_norm([CyclotomicInt(0), ONE], 301) == CyclotomicInt(301)

    def test_rational_scalar(self):
        assert relative_norm([CyclotomicInt(4)], 301) == CyclotomicInt(4**5)

    def test_one_plus_radical(self):
        # prod over twists of (1 + z^i * root) evaluates x^5 - n at -1, up to sign
        assert relative_norm([ONE, ONE], 301) == CyclotomicInt(302)
        assert relative_norm([ONE, ONE], 30) == CyclotomicInt(31)

    def test_multiplicative(self, rng):
        n = 30
        for _ in range(10):
            g1 = [CyclotomicInt(*(rng.randint(-2, 2) for _ in range(4))) for _ in range(3)]
            g2 = [CyclotomicInt(*(rng.randint(-2, 2) for _ in range(4))) for _ in range(2)]
            if all(c.is_zero() for c in g1) or all(c.is_zero() for c in g2):
                continue

            def mul_radical(a, b):
                out = [CyclotomicInt(0)] * 5
                for i, ai in enumerate(a):
                    for j, bj in enumerate(b):
                        k = i + j
                        if k >= 5:
                            out[k - 5] = out[k - 5] + ai * bj * n
                        else:
                            out[k] = out[k] + ai * bj
                return out

            lhs = relative_norm(mul_radical(g1, g2), n)
            rhs = relative_norm(g1, n) * relative_norm(g2, n)
            assert lhs == rhs

    def test_zeta_twist_invariance(self, rng):
        # gamma and its twist by zeta on the radical share the same norm
        n = 35
        g = [CyclotomicInt(1), CyclotomicInt(2), ONE, CyclotomicInt(0), ONE]
        twisted = [g[j] * zeta_power(j) for j in range(5)]
        assert relative_norm(g, n) == relative_norm(twisted, n)

    def test_rejects_zero(self):
        with pytest.raises(InvalidInput):
            relative_norm([CyclotomicInt(0)], 301)


class TestPrimeStream:
    def test_pm7_matches_reference_column(self):
        assert prime_stream("pm7mod25", 5) == [7, 43, 107, 157, 193]

    def test_pm2(self):
        assert prime_stream("pm2mod5", 4) == [2, 3, 7, 13]

    def test_exclusion_class(self):
        assert prime_stream("not_pm7mod25_and_pm2mod5", 3) == [2, 3, 13]

    def test_congruences_hold(self):
        for p in prime_stream("pm7mod25", 12):
            assert p % 25 in (7, 18)
        for p in prime_stream("not_pm7mod25_and_pm2mod5", 12):
            assert p % 5 in (2, 3) and p % 25 not in (7, 18)

    def test_bad_inputs(self):
        with pytest.raises(InvalidInput):
            prime_stream("pm7mod25", 0)
        with pytest.raises(InvalidInput):
            prime_stream("all", 3)
