import pytest

from cyclotomy import arith, cyclo, intpoly
from cyclotomy.cyclo import (
    ALGORITHMS,
    CyclotomicResult,
    InternalIdentityError,
    NotCoprimeError,
    cyclotomic,
    cyclotomic_of_power,
    cyclotomic_poly,
    radical_reduce,
)

from _oracles import naive_cyclotomic


KNOWN = {
    1: [-1, 1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 0, 1],
    6: [1, -1, 1],
    8: [1, 0, 0, 0, 1],
    12: [1, 0, -1, 0, 1],
}


class TestCyclotomic:
    @pytest.mark.parametrize("algorithm", ALGORITHMS)
    def test_known_values(self, algorithm):
        for n, expected in KNOWN.items():
            assert cyclotomic(n, algorithm).poly == expected

    def test_result_fields(self):
        result = cyclotomic(12, "newton_ramanujan")
        assert result.n == 12
        assert result.algorithm == "newton_ramanujan"
        assert result.poly == [1, 0, -1, 0, 1]

    @pytest.mark.parametrize("algorithm", ALGORITHMS)
    def test_matches_independent_oracle(self, algorithm):
        for n in range(1, 40):
            assert cyclotomic(n, algorithm).poly == naive_cyclotomic(n)

    def test_all_algorithms_agree_small(self):
        for n in range(1, 121):
            polys = {tuple(cyclotomic(n, a).poly) for a in ALGORITHMS}
            assert len(polys) == 1, n

    def test_first_height_two_coefficient(self):
        assert cyclotomic(105, "mobius_product").poly[7] == -2

    def test_unknown_algorithm(self):
        with pytest.raises(ValueError):
            cyclotomic(6, "fft")

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            cyclotomic(0)


class TestInvariants:
    def test_degree_monic_constant_palindrome(self):
        for n in range(1, 301):
            poly = cyclotomic_poly(n)
            assert poly[-1] == 1
            assert len(poly) - 1 == arith.totient(n)
            if n == 1:
                assert poly == [-1, 1]
            else:
                assert poly[0] == 1
                assert poly == poly[::-1]
                assert poly[1] == -arith.mobius(n)

    def test_fundamental_identity(self):
        for n in range(1, 301):
            product = intpoly.poly_prod(
                [cyclotomic_poly(d) for d in arith.divisors(n)]
            )
            assert product == cyclo._x_pow_minus_1(n)

    def test_power_sums_are_ramanujan_sums(self):
        for n in range(1, 61):
            sums = intpoly.power_sums(cyclotomic_poly(n), 2 * n)
            for q in range(2 * n + 1):
                assert sums[q] == arith.ramanujan_sum(n, q)

    def test_cache_returns_fresh_lists(self):
        poly = cyclotomic_poly(12)
        poly[0] = 999
        assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]

    def test_concurrent_use_is_deterministic(self):
        # everything is a pure function; hammer the shared caches from
        # several threads and check against the sequential answers
        from concurrent.futures import ThreadPoolExecutor

        tasks = [(n, a) for n in range(1, 80) for a in ALGORITHMS]
        expected = {(n, a): cyclotomic(n, a).poly for n, a in tasks}
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda t: cyclotomic(*t).poly, tasks * 2))
        for (n, a), got in zip(tasks * 2, results):
            assert got == expected[(n, a)], (n, a)


class TestRadicalReduce:
    def test_examples(self):
        assert radical_reduce(12) == (6, 2)
        assert radical_reduce(7) == (7, 1)
        assert radical_reduce(8) == (2, 4)
        assert radical_reduce(1) == (1, 1)

    def test_reduction_identity(self):
        for n in range(1, 201):
            r, e = radical_reduce(n)
            assert r * e == n
            assert arith.mobius(r) != 0  # the radical is squarefree
            assert cyclotomic_poly(n) == intpoly.substitute_power(
                cyclotomic_poly(r), e
            )


class TestCyclotomicOfPower:
    def test_examples(self):
        assert cyclotomic_of_power(1, 6) == [-1, 0, 0, 0, 0, 0, 1]
        assert cyclotomic_of_power(4, 3) == [1, 0, 0, 0, 0, 0, 1]

    def test_rejects_non_coprime(self):
        with pytest.raises(NotCoprimeError):
            cyclotomic_of_power(4, 2)
        with pytest.raises(NotCoprimeError):
            cyclotomic_of_power(6, 9)

    def test_equals_substitution_when_coprime(self):
        for n in range(1, 41):
            for m in range(1, 200 // n + 1):
                if arith.is_coprime(n, m):
                    assert cyclotomic_of_power(n, m) == intpoly.substitute_power(
                        cyclotomic_poly(n), m
                    )

    def test_n_one_reduces_to_fundamental_identity(self):
        for m in range(1, 30):
            assert cyclotomic_of_power(1, m) == cyclo._x_pow_minus_1(m)


class TestResultValidation:
    def test_rejects_wrong_degree(self):
        with pytest.raises(InternalIdentityError):
            CyclotomicResult(n=4, poly=[1, 1], algorithm="recursive")

    def test_rejects_non_monic(self):
        with pytest.raises(InternalIdentityError):
            CyclotomicResult(n=4, poly=[1, 0, 2], algorithm="recursive")

    def test_rejects_wrong_constant_term(self):
        with pytest.raises(InternalIdentityError):
            CyclotomicResult(n=4, poly=[-1, 0, 1], algorithm="recursive")

    def test_exact_arithmetic_failures_surface_as_identity_errors(self, monkeypatch):
        # a division that should be exact by the identities but is not
        # indicates an implementation bug and must raise the distinct error
        def broken(p, q):
            raise intpoly.NotDivisibleError("injected")

        monkeypatch.setattr(intpoly, "poly_exact_div", broken)
        with pytest.raises(InternalIdentityError):
            cyclotomic(12, "recursive")
